#ifndef GLSKIT_COUNT_HPP
#define GLSKIT_COUNT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace gls {

// Checked signed 64-bit helpers. Every overflow throws instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("64-bit overflow in addition");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("64-bit overflow in multiplication");
  }
  return r;
}

/// Exact nonnegative clique count. Arithmetic is checked: any operation whose
/// result leaves the signed 64-bit range throws std::overflow_error.
class CliqueCount {
 public:
  constexpr CliqueCount() = default;
  explicit CliqueCount(std::int64_t value) : value_(value) {
    if (value < 0) {
      throw std::invalid_argument("CliqueCount: value must be nonnegative");
    }
  }

  std::int64_t value() const noexcept { return value_; }

  friend CliqueCount operator+(CliqueCount a, CliqueCount b) {
    return CliqueCount(checked_add(a.value_, b.value_));
  }
  friend CliqueCount operator*(CliqueCount a, CliqueCount b) {
    return CliqueCount(checked_mul(a.value_, b.value_));
  }
  // Subtraction is used for complement counts; going negative is a logic bug.
  friend CliqueCount operator-(CliqueCount a, CliqueCount b) {
    if (a.value_ < b.value_) {
      throw std::logic_error("CliqueCount: subtraction went negative");
    }
    return CliqueCount(a.value_ - b.value_);
  }
  CliqueCount& operator+=(CliqueCount o) { return *this = *this + o; }

  friend constexpr bool operator==(CliqueCount, CliqueCount) = default;
  friend constexpr auto operator<=>(CliqueCount, CliqueCount) = default;

  friend std::ostream& operator<<(std::ostream& os, CliqueCount c) {
    return os << c.value_;
  }

 private:
  std::int64_t value_ = 0;
};

}  // namespace gls

#endif  // GLSKIT_COUNT_HPP
