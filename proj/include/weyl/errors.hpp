#ifndef WEYL_ERRORS_HPP
#define WEYL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weyl {

/// Raised on precondition violations: mode-count mismatch, division by zero,
/// hypergeometric poles, out-of-range indices.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by express_in_N when the element is not a polynomial in N.
class NotRadial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace weyl

#endif  // WEYL_ERRORS_HPP
