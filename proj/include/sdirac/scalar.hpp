#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "sdirac/errors.hpp"

namespace sdirac {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// An element of the number field Q(i, sqrt2), stored on the basis
/// {1, i, sqrt2, i*sqrt2} with exact rational coordinates.  This is the
/// smallest field containing every coefficient produced by the spinor
/// realization of the Clifford generators, which uses both i and sqrt2.
///
/// All arithmetic is exact; coordinates stay in lowest terms with positive
/// denominators because the underlying rationals are kept canonical.
class Scalar {
  public:
    Scalar() = default;
    Scalar(int v) : a_(v) {}
    Scalar(long v) : a_(v) {}
    Scalar(const Rational& v) : a_(v) {}

    static Scalar make(Rational a, Rational b, Rational c, Rational d) {
        Scalar s;
        s.a_ = std::move(a);
        s.b_ = std::move(b);
        s.c_ = std::move(c);
        s.d_ = std::move(d);
        return s;
    }
    static Scalar i() { return make(0, 1, 0, 0); }
    static Scalar sqrt2() { return make(0, 0, 1, 0); }
    static Scalar i_sqrt2() { return make(0, 0, 0, 1); }
    static Scalar fraction(long num, long den) { return Scalar(Rational(num, den)); }

    const Rational& unit_part() const { return a_; }
    const Rational& i_part() const { return b_; }
    const Rational& sqrt2_part() const { return c_; }
    const Rational& i_sqrt2_part() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

    Scalar operator-() const { return make(-a_, -b_, -c_, -d_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);

    /// Multiplicative inverse.  Throws DivisionByZero on zero input.
    Scalar inverse() const;
    friend Scalar operator/(const Scalar& lhs, const Scalar& rhs) { return lhs * rhs.inverse(); }

    /// Field automorphism i -> -i.
    Scalar conj_i() const { return make(a_, -b_, c_, -d_); }
    /// Field automorphism sqrt2 -> -sqrt2.
    Scalar conj_sqrt2() const { return make(a_, b_, -c_, -d_); }

    friend bool operator==(const Scalar& x, const Scalar& y) = default;

    /// Deterministic total order (used for map keys and stable pivoting).
    friend bool operator<(const Scalar& x, const Scalar& y);

    /// The four coordinates as "p/q" strings, the wire format used in reports.
    std::array<std::string, 4> tuple4() const;

    /// Compact human-readable rendering, e.g. "1/2 - i + sqrt2".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

  private:
    Rational a_{0}, b_{0}, c_{0}, d_{0};
};

}  // namespace sdirac
