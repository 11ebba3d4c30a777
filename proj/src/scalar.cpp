#include "sdirac/scalar.hpp"

#include <ostream>
#include <sstream>

namespace sdirac {

Scalar& Scalar::operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    // Basis products reduce via i^2 = -1 and (sqrt2)^2 = 2.  Zero coordinates
    // dominate in practice, so skip them instead of doing 16 blind products.
    Scalar r;
    auto accumulate = [&r](const Rational& xv, int xb, const Scalar& yy) {
        if (xv == 0) return;
        const Rational* yc[4] = {&yy.a_, &yy.b_, &yy.c_, &yy.d_};
        // index: 0 = 1, 1 = i, 2 = sqrt2, 3 = i*sqrt2
        static constexpr int target[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static constexpr int sign_i[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, 1, 1}, {1, -1, 1, -1}};
        static constexpr int two[4][4] = {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 2, 2}, {1, 1, 2, 2}};
        Rational* rc[4] = {&r.a_, &r.b_, &r.c_, &r.d_};
        for (int yb = 0; yb < 4; ++yb) {
            if (*yc[yb] == 0) continue;
            Rational term = xv * *yc[yb];
            if (two[xb][yb] == 2) term *= 2;
            if (sign_i[xb][yb] < 0) term = -term;
            *rc[target[xb][yb]] += term;
        }
    };
    accumulate(x.a_, 0, y);
    accumulate(x.b_, 1, y);
    accumulate(x.c_, 2, y);
    accumulate(x.d_, 3, y);
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    // Rationalize in two stages: z * conj_i(z) lies in Q(sqrt2), and the
    // sqrt2-norm of that lies in Q.
    Scalar zi = conj_i();
    Scalar u = *this * zi;            // in Q(sqrt2): b = d = 0
    Scalar us = u.conj_sqrt2();
    Scalar norm = u * us;             // rational
    Rational n = norm.a_;
    Scalar inv = zi * us;
    return make(inv.a_ / n, inv.b_ / n, inv.c_ / n, inv.d_ / n);
}

bool operator<(const Scalar& x, const Scalar& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    if (x.b_ != y.b_) return x.b_ < y.b_;
    if (x.c_ != y.c_) return x.c_ < y.c_;
    return x.d_ < y.d_;
}

std::array<std::string, 4> Scalar::tuple4() const {
    auto render = [](const Rational& q) {
        std::ostringstream os;
        os << numerator(q);
        os << '/' << denominator(q);
        return os.str();
    };
    return {render(a_), render(b_), render(c_), render(d_)};
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto piece = [&](const Rational& q, const char* sym) {
        if (q == 0) return;
        Rational v = q;
        if (!first) {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (denominator(v) == 1) {
            if (*sym == '\0' || abs(numerator(v)) != 1)
                os << numerator(v) << (*sym ? "*" : "");
            else if (numerator(v) == -1)
                os << '-';
            os << sym;
        } else if (*sym == '\0') {
            os << numerator(v) << '/' << denominator(v);
        } else {
            os << '(' << numerator(v) << '/' << denominator(v) << ')' << "*" << sym;
        }
    };
    piece(a_, "");
    piece(b_, "i");
    piece(c_, "sqrt2");
    piece(d_, "i*sqrt2");
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace sdirac
