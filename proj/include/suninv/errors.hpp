#ifndef SUNINV_ERRORS_HPP
#define SUNINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace suninv {

/// Raised when a requested enumeration or dense construction exceeds the
/// configured size cap.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed text input; carries the offset of the first bad byte.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Raised when two operands live in incompatible spaces (different degree k
/// or different mixed shape).
class degree_mismatch : public std::invalid_argument {
public:
    explicit degree_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace suninv

#endif // SUNINV_ERRORS_HPP
