#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <string>

namespace cirldp {

/// A real number or +infinity. Rate functions and the limiting CGF take
/// values here; sums saturate at +inf and `min` treats +inf as the top.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  constexpr ExtReal(double v) : v_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtReal infinity() {
    return ExtReal(std::numeric_limits<double>::infinity());
  }

  bool is_finite() const { return std::isfinite(v_); }
  bool is_infinite() const { return std::isinf(v_) && v_ > 0; }
  /// Raw value; +inf for the infinite element.
  constexpr double value() const { return v_; }

  friend ExtReal operator+(ExtReal l, ExtReal r) { return ExtReal(l.v_ + r.v_); }
  friend constexpr auto operator<=>(ExtReal l, ExtReal r) { return l.v_ <=> r.v_; }
  friend constexpr bool operator==(ExtReal l, ExtReal r) { return l.v_ == r.v_; }

 private:
  double v_ = 0.0;
};

inline ExtReal min(ExtReal l, ExtReal r) { return l.value() <= r.value() ? l : r; }

/// Shortest round-trip text; "inf" for +infinity.
std::string to_string(ExtReal v);

/// Inverse of to_string; accepts "inf".
ExtReal parse_ext_real(const std::string& text);

}  // namespace cirldp
