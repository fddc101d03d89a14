#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace flapped {

using BigInt = boost::multiprecision::cpp_int;

// Element of Q ∪ {∞} ∪ {⊙}. Rational slopes are kept reduced with s >= 0,
// and s = 0 forces r = 1.
class ExtendedSlope {
 public:
  ExtendedSlope() = default;  // ⊙

  static ExtendedSlope peripheral() { return ExtendedSlope(); }
  static ExtendedSlope from_reduced(BigInt r, BigInt s);  // trusts the caller, checks anyway

  bool is_peripheral() const { return peripheral_; }
  bool is_rational() const { return !peripheral_; }
  const BigInt& r() const;
  const BigInt& s() const;

  // Small-integer views for the geometric engine; throws if out of range.
  std::int64_t r64() const;
  std::int64_t s64() const;

  std::string str() const;
  static ExtendedSlope parse(std::string_view text);

  friend bool operator==(const ExtendedSlope& a, const ExtendedSlope& b) {
    if (a.peripheral_ || b.peripheral_) return a.peripheral_ == b.peripheral_;
    return a.r_ == b.r_ && a.s_ == b.s_;
  }
  // Order used for sets and maps: ⊙ first, then by (complexity, r).
  friend bool operator<(const ExtendedSlope& a, const ExtendedSlope& b);

 private:
  friend ExtendedSlope normalize_slope(const BigInt& r, const BigInt& s);

  bool peripheral_ = true;
  BigInt r_ = 0;
  BigInt s_ = 0;
};

std::ostream& operator<<(std::ostream& out, const ExtendedSlope& x);

ExtendedSlope normalize_slope(const BigInt& r, const BigInt& s);
BigInt complexity(const ExtendedSlope& x);
BigInt intersection_curves(const ExtendedSlope& x, const ExtendedSlope& y);
BigInt intersection_curve_arc(const ExtendedSlope& x, const ExtendedSlope& y);
std::vector<ExtendedSlope> enumerate_slopes(int max_complexity, bool include_peripheral = false);

struct ExtendedSlopeHash {
  std::size_t operator()(const ExtendedSlope& x) const;
};

}  // namespace flapped
