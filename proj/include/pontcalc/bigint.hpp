#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <type_traits>
#include <utility>

namespace pontcalc {

// Arbitrary-precision integer scalar. Thin value wrapper around cpp_int with
// tightly constrained constructors, so the type stays SFINAE-clean inside
// Eigen dense expressions.
class Int {
public:
  using rep = boost::multiprecision::cpp_int;

  Int() = default;
  template <typename T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
  Int(T v) : v_(v) {}
  explicit Int(const std::string& decimal) : v_(decimal) {}
  explicit Int(rep v) : v_(std::move(v)) {}

  const rep& raw() const noexcept { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  std::string str() const { return v_.str(); }

  friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
  friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
  friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
  // Division and remainder truncate toward zero, like built-in integers.
  friend Int operator/(const Int& a, const Int& b) { return Int(a.v_ / b.v_); }
  friend Int operator%(const Int& a, const Int& b) { return Int(a.v_ % b.v_); }
  Int operator-() const { return Int(-v_); }

  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
  Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }
  Int& operator%=(const Int& o) { v_ %= o.v_; return *this; }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Int& x) {
    return os << x.v_;
  }

private:
  rep v_;
};

inline Int abs(const Int& a) { return a < 0 ? -a : a; }
inline int sgn(const Int& a) { return a < 0 ? -1 : (a.is_zero() ? 0 : 1); }
inline Int gcd(const Int& a, const Int& b) {
  return Int(boost::multiprecision::gcd(a.raw(), b.raw()));
}
inline bool divides(const Int& d, const Int& a) {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

// Quotient rounded toward negative infinity.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (!(a % b).is_zero() && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// g = a*x + b*y with g = gcd(a, b) >= 0.
struct ExtGcd {
  Int g, x, y;
};
inline ExtGcd ext_gcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (!b.is_zero()) {
    Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
    t = y0 - q * y1; y0 = y1; y1 = t;
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

// Dense exact-integer matrix and row vector. Rows are the unit of work
// throughout: lattices are integer row spans.
using IntMatrix =
    Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using IntVector = Eigen::Matrix<Int, 1, Eigen::Dynamic>;

}  // namespace pontcalc

namespace Eigen {

template <>
struct NumTraits<pontcalc::Int> {
  using Real = pontcalc::Int;
  using NonInteger = pontcalc::Int;
  using Literal = pontcalc::Int;
  using Nested = pontcalc::Int;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 20
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen
