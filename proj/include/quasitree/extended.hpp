#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace quasitree {

// A non-negative integer or infinity. Infinity is its own state, never a large number.
class Extended {
 public:
  constexpr Extended() : value_(0) {}
  constexpr Extended(std::int64_t v) : value_(v) {}  // NOLINT: implicit from finite values

  static constexpr Extended infinity() { return Extended(std::nullopt); }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }

  // Precondition: is_finite().
  constexpr std::int64_t value() const { return *value_; }

  friend constexpr bool operator==(const Extended& a, const Extended& b) = default;

  friend constexpr std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.is_infinite() || b.is_infinite()) {
      if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
      return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const { return is_finite() ? std::to_string(*value_) : "inf"; }

  friend std::ostream& operator<<(std::ostream& os, const Extended& e) { return os << e.to_string(); }

 private:
  constexpr explicit Extended(std::nullopt_t) : value_(std::nullopt) {}

  std::optional<std::int64_t> value_;
};

}  // namespace quasitree
