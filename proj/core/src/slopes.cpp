#include "flapped/slopes.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <limits>
#include <numeric>
#include <ostream>

#include "flapped/errors.hpp"

namespace flapped {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

std::int64_t narrow(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() / 4 || v < std::numeric_limits<std::int64_t>::min() / 4)
    throw InputError("slope component too large for the geometric engine: " + v.str());
  return static_cast<std::int64_t>(v);
}

void require_rational(const ExtendedSlope& x, const char* op) {
  if (x.is_peripheral()) throw InputError(std::string(op) + ": peripheral slope not allowed");
}

}  // namespace

ExtendedSlope ExtendedSlope::from_reduced(BigInt r, BigInt s) {
  ExtendedSlope x = normalize_slope(r, s);
  if (x.r_ != r || x.s_ != s) throw InternalError("slope not in normal form");
  return x;
}

const BigInt& ExtendedSlope::r() const {
  if (peripheral_) throw InputError("peripheral slope has no numerator");
  return r_;
}

const BigInt& ExtendedSlope::s() const {
  if (peripheral_) throw InputError("peripheral slope has no denominator");
  return s_;
}

std::int64_t ExtendedSlope::r64() const { return narrow(r()); }
std::int64_t ExtendedSlope::s64() const { return narrow(s()); }

std::string ExtendedSlope::str() const {
  if (peripheral_) return "peripheral";
  return r_.str() + "/" + s_.str();
}

ExtendedSlope ExtendedSlope::parse(std::string_view text) {
  std::string t(text);
  if (t == "o" || t == "peripheral") return peripheral();
  if (t == "inf") return normalize_slope(1, 0);
  auto slash = t.find('/');
  auto parse_int = [&](const std::string& part) {
    std::size_t start = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (part.size() == start) throw InputError("malformed slope: " + t);
    for (std::size_t k = start; k < part.size(); ++k)
      if (part[k] < '0' || part[k] > '9') throw InputError("malformed slope: " + t);
    return BigInt(part);
  };
  if (slash == std::string::npos) return normalize_slope(parse_int(t), 1);
  BigInt r = parse_int(t.substr(0, slash));
  BigInt s = parse_int(t.substr(slash + 1));
  if (r == 0 && s == 0) throw InputError("malformed slope: 0/0");
  return normalize_slope(r, s);
}

bool operator<(const ExtendedSlope& a, const ExtendedSlope& b) {
  if (a.peripheral_ || b.peripheral_) return a.peripheral_ && !b.peripheral_;
  BigInt ca = complexity(a);
  BigInt cb = complexity(b);
  if (ca != cb) return ca < cb;
  if (a.r_ != b.r_) return a.r_ < b.r_;
  return a.s_ < b.s_;
}

ExtendedSlope normalize_slope(const BigInt& r, const BigInt& s) {
  if (r == 0 && s == 0) throw InputError("normalize_slope: (0,0) is not a slope");
  ExtendedSlope x;
  x.peripheral_ = false;
  if (s == 0) {
    x.r_ = 1;
    x.s_ = 0;
    return x;
  }
  BigInt g = boost::integer::gcd(abs_big(r), abs_big(s));
  BigInt rr = r / g;
  BigInt ss = s / g;
  if (ss < 0) {
    rr = -rr;
    ss = -ss;
  }
  x.r_ = rr;
  x.s_ = ss;
  return x;
}

BigInt complexity(const ExtendedSlope& x) {
  if (x.is_peripheral()) return 0;
  return abs_big(x.r()) + x.s();
}

BigInt intersection_curve_arc(const ExtendedSlope& x, const ExtendedSlope& y) {
  require_rational(x, "intersection_curve_arc");
  require_rational(y, "intersection_curve_arc");
  return abs_big(x.r() * y.s() - x.s() * y.r());
}

BigInt intersection_curves(const ExtendedSlope& x, const ExtendedSlope& y) {
  require_rational(x, "intersection_curves");
  require_rational(y, "intersection_curves");
  return 2 * intersection_curve_arc(x, y);
}

std::vector<ExtendedSlope> enumerate_slopes(int max_complexity, bool include_peripheral) {
  if (max_complexity < 1) throw InputError("enumerate_slopes: max_complexity must be >= 1");
  std::vector<ExtendedSlope> out;
  for (int c = 1; c <= max_complexity; ++c) {
    for (int r = -c; r <= c; ++r) {
      int s = c - (r < 0 ? -r : r);
      if (s == 0) {
        if (r == 1) out.push_back(normalize_slope(1, 0));
        continue;
      }
      if (std::gcd(r < 0 ? -r : r, s) == 1) out.push_back(normalize_slope(r, s));
    }
  }
  if (include_peripheral) out.push_back(ExtendedSlope::peripheral());
  return out;
}

std::size_t ExtendedSlopeHash::operator()(const ExtendedSlope& x) const {
  if (x.is_peripheral()) return 0x51ed27;
  std::size_t h = std::hash<std::string>{}(x.r().str());
  return h * 1000003u ^ std::hash<std::string>{}(x.s().str());
}

std::ostream& operator<<(std::ostream& out, const ExtendedSlope& x) { return out << x.str(); }

}  // namespace flapped
