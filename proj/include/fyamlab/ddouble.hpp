#ifndef FYAMLAB_DDOUBLE_HPP
#define FYAMLAB_DDOUBLE_HPP

#include <cmath>

namespace fyam {

// Compensated double-double scalar (~31 significant digits), in the style of
// the Bailey/Hida QD library but reduced to the handful of operations the
// residual checks need.  The equation's singular profiles c/r make all terms
// cancel exactly; verifying that cancellation to 1e-10 at r=1e-3, where the
// individual terms reach 1e10, is out of reach of plain binary64, so the
// residual is evaluated in this type for those checks.
struct ddouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr ddouble() = default;
    constexpr ddouble(double x) : hi(x) {}
    constexpr ddouble(double h, double l) : hi(h), lo(l) {}
};

namespace detail {

inline ddouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b|
inline ddouble quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline ddouble two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace detail

inline ddouble operator+(ddouble a, ddouble b) {
    ddouble s = detail::two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline ddouble operator-(ddouble a) { return {-a.hi, -a.lo}; }
inline ddouble operator-(ddouble a, ddouble b) { return a + (-b); }

inline ddouble operator*(ddouble a, ddouble b) {
    ddouble p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline ddouble operator/(ddouble a, ddouble b) {
    double q1 = a.hi / b.hi;
    ddouble r = a - ddouble(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - ddouble(q2) * b;
    double q3 = r.hi / b.hi;
    ddouble q = detail::quick_two_sum(q1, q2);
    return q + ddouble(q3);
}

inline ddouble& operator+=(ddouble& a, ddouble b) { a = a + b; return a; }
inline ddouble& operator-=(ddouble& a, ddouble b) { a = a - b; return a; }
inline ddouble& operator*=(ddouble& a, ddouble b) { a = a * b; return a; }

inline bool operator<(ddouble a, ddouble b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(ddouble a, ddouble b) { return b < a; }

inline ddouble abs(ddouble a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }
inline double to_double(ddouble a) { return a.hi + a.lo; }

} // namespace fyam

#endif
