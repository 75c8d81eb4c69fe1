#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "linkinv/rational.hpp"

namespace linkinv {

// Outward-rounded interval arithmetic via ulp padding.  IEEE basic
// operations and sqrt are correctly rounded, so one ulp of padding per
// operation is a rigorous enclosure; libm exp is faithful on glibc, padded
// by four ulps.  This avoids fesetround, which optimizers interact with
// badly.
inline double next_up(double v, int n = 1) {
    for (int i = 0; i < n; ++i) v = std::nextafter(v, std::numeric_limits<double>::infinity());
    return v;
}
inline double next_down(double v, int n = 1) {
    for (int i = 0; i < n; ++i) v = std::nextafter(v, -std::numeric_limits<double>::infinity());
    return v;
}

struct Ival {
    double lo = 0.0, hi = 0.0;

    Ival() = default;
    Ival(double v) : lo(v), hi(v) {}
    Ival(double l, double h) : lo(l), hi(h) {}

    static Ival of_rat(const Rat& r) {
        double v = rat_double(r);
        // conversion is not guaranteed correctly rounded; pad one ulp
        return Ival(next_down(v), next_up(v));
    }

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }

    Ival operator+(const Ival& o) const { return Ival(next_down(lo + o.lo), next_up(hi + o.hi)); }
    Ival operator-(const Ival& o) const { return Ival(next_down(lo - o.hi), next_up(hi - o.lo)); }
    Ival operator-() const { return Ival(-hi, -lo); }

    Ival operator*(const Ival& o) const {
        double a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return Ival(next_down(std::min(std::min(a, b), std::min(c, d))),
                    next_up(std::max(std::max(a, b), std::max(c, d))));
    }
    Ival operator/(const Ival& o) const {
        if (o.lo <= 0.0 && o.hi >= 0.0) throw std::domain_error("Ival: division by interval containing 0");
        double a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
        return Ival(next_down(std::min(std::min(a, b), std::min(c, d))),
                    next_up(std::max(std::max(a, b), std::max(c, d))));
    }
    Ival& operator+=(const Ival& o) { return *this = *this + o; }
};

inline Ival ival_sqrt(const Ival& v) {
    if (v.lo < 0) throw std::domain_error("ival_sqrt: negative");
    return Ival(next_down(std::sqrt(v.lo)), next_up(std::sqrt(v.hi)));
}

inline Ival ival_exp(const Ival& v) {
    return Ival(next_down(std::exp(v.lo), 4), next_up(std::exp(v.hi), 4));
}

inline Ival ival_scale(const Ival& v, double s) { return v * Ival(s); }

}  // namespace linkinv
