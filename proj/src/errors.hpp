#pragma once

#include <stdexcept>
#include <string>

namespace stablehf {

class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quadrature or solver failed to reach its target accuracy; carries the
// error estimate that was achieved.
class numerical_error : public std::runtime_error {
 public:
  numerical_error(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, long line)
      : std::runtime_error(what), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace stablehf
