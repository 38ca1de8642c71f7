#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "errors.hpp"

namespace stablehf {

struct Vec3 {
  std::array<double, 3> v{};
  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
  double norm() const { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }
  Vec3 operator+(const Vec3& o) const { return {{v[0] + o[0], v[1] + o[1], v[2] + o[2]}}; }
  Vec3 operator-(const Vec3& o) const { return {{v[0] - o[0], v[1] - o[1], v[2] - o[2]}}; }
  Vec3 operator*(double a) const { return {{v[0] * a, v[1] * a, v[2] * a}}; }
};

struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  double& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
  double operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

  static Mat3 identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
  }

  Mat3 transpose() const {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) r(i, j) = m[j][i];
    return r;
  }

  Vec3 operator*(const Vec3& x) const {
    Vec3 r;
    for (std::size_t i = 0; i < 3; ++i)
      r[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2];
    return r;
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        r(i, j) = m[i][0] * o(0, j) + m[i][1] * o(1, j) + m[i][2] * o(2, j);
    return r;
  }

  Mat3 operator-(const Mat3& o) const {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) r(i, j) = m[i][j] - o(i, j);
    return r;
  }

  double det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  Mat3 inverse() const {
    const double d = det();
    if (d == 0.0 || !std::isfinite(d)) throw domain_error("singular 3x3 matrix");
    Mat3 r;
    r(0, 0) = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
    r(0, 1) = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
    r(0, 2) = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
    r(1, 0) = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
    r(1, 1) = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
    r(1, 2) = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
    r(2, 0) = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
    r(2, 1) = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
    r(2, 2) = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
    return r;
  }

  Vec3 solve(const Vec3& b) const { return inverse() * b; }

  double max_abs() const {
    double r = 0.0;
    for (const auto& row : m)
      for (double x : row) r = std::max(r, std::abs(x));
    return r;
  }
};

}  // namespace stablehf
