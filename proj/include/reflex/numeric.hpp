#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "reflex/errors.hpp"

namespace reflex {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Point of the lattice N (or of its dual M) in fixed coordinates.
using IntVector = std::vector<Integer>;
/// Point of N_R or M_R; cpp_rational keeps every entry in lowest terms.
using RatVector = std::vector<Rational>;

inline IntVector zero_vector(std::size_t d) { return IntVector(d, Integer(0)); }

inline IntVector unit_vector(std::size_t d, std::size_t i) {
  IntVector e = zero_vector(d);
  e.at(i) = 1;
  return e;
}

inline IntVector make_vector(std::initializer_list<long> coords) {
  IntVector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return v;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RatVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const IntVector& a, const RatVector& b) { return dot(b, a); }

inline Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("add: length mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("sub: length mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVector operator-(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

/// Returns the integer vector when every coordinate has denominator one.
inline std::optional<IntVector> to_integral(const RatVector& v) {
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (denominator(x) != 1) return std::nullopt;
    r.push_back(numerator(x));
  }
  return r;
}

inline Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return boost::multiprecision::abs(g);
}

/// Floor division for any signed integer-like type (rounds toward -inf).
template <class T>
T floor_div(const T& a, const T& b) {
  T q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline std::string to_string(const IntVector& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].str();
  }
  return s;
}

inline std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline std::string to_string(const RatVector& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += to_string(v[i]);
  }
  return s;
}

namespace detail {

/// Thrown by Checked arithmetic when a result leaves the int64 range.
struct Overflow {};

/// int64 with overflow trapping. Hot kernels run on this type first and
/// fall back to Integer on Overflow, so results stay exact.
class Checked {
 public:
  Checked() = default;
  constexpr Checked(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static Checked from(const Integer& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
      throw Overflow{};
    return Checked(static_cast<std::int64_t>(x));
  }

  std::int64_t value() const { return v_; }
  Integer to_integer() const { return Integer(v_); }

  friend Checked operator+(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator/(Checked a, Checked b) {
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) throw Overflow{};
    return a.v_ / b.v_;
  }
  friend Checked operator%(Checked a, Checked b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked operator-() const {
    if (v_ == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return -v_;
  }
  Checked& operator+=(Checked b) { return *this = *this + b; }
  Checked& operator-=(Checked b) { return *this = *this - b; }
  Checked& operator*=(Checked b) { return *this = *this * b; }

  friend auto operator<=>(Checked a, Checked b) = default;
  friend bool operator==(Checked a, Checked b) = default;

 private:
  std::int64_t v_ = 0;
};

inline Checked abs_value(Checked x) { return x < 0 ? -x : x; }
inline Integer abs_value(const Integer& x) { return boost::multiprecision::abs(x); }

template <class T>
T convert(const Integer& x);
template <>
inline Integer convert<Integer>(const Integer& x) {
  return x;
}
template <>
inline Checked convert<Checked>(const Integer& x) {
  return Checked::from(x);
}

inline Integer to_integer(const Integer& x) { return x; }
inline Integer to_integer(Checked x) { return x.to_integer(); }

/// Runs fn<Checked>() and, on overflow, reruns fn<Integer>().
template <class Fn>
auto with_fast_path(Fn&& fn) {
  try {
    return fn.template operator()<Checked>();
  } catch (const Overflow&) {
    return fn.template operator()<Integer>();
  }
}

}  // namespace detail
}  // namespace reflex
