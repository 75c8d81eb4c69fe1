#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "linkinv/rational.hpp"

namespace linkinv {

// A scalar that stays an exact rational for as long as the computation
// allows and degrades to double the moment an irrational value enters.
// Every Num carries a usable double approximation.
struct Num {
    bool exact = true;
    Rat q{0};
    double x = 0.0;

    Num() = default;
    Num(const Rat& r) : exact(true), q(r), x(rat_double(r)) {}
    Num(long long v) : Num(Rat(v)) {}
    Num(int v) : Num(Rat(v)) {}
    static Num approx(double v) {
        Num n;
        n.exact = false;
        n.x = v;
        return n;
    }

    double value() const { return x; }

    Num operator+(const Num& o) const {
        if (exact && o.exact) return Num(Rat(q + o.q));
        return approx(x + o.x);
    }
    Num operator-(const Num& o) const {
        if (exact && o.exact) return Num(Rat(q - o.q));
        return approx(x - o.x);
    }
    Num operator*(const Num& o) const {
        if (exact && o.exact) return Num(Rat(q * o.q));
        return approx(x * o.x);
    }
    Num operator/(const Num& o) const {
        if (exact && o.exact) {
            if (o.q == 0) throw std::domain_error("Num: division by zero");
            return Num(Rat(q / o.q));
        }
        return approx(x / o.x);
    }
    Num operator-() const { return exact ? Num(Rat(-q)) : approx(-x); }

    Num& operator+=(const Num& o) { return *this = *this + o; }
    Num& operator-=(const Num& o) { return *this = *this - o; }

    bool same(const Num& o, double tol = 1e-12) const {
        if (exact && o.exact) return q == o.q;
        return std::fabs(x - o.x) <= tol;
    }
    bool less(const Num& o) const {
        if (exact && o.exact) return q < o.q;
        return x < o.x;
    }
};

inline Num num_min(const Num& a, const Num& b) { return a.less(b) ? a : b; }
inline Num num_max(const Num& a, const Num& b) { return a.less(b) ? b : a; }

// 17 significant digits: enough to round-trip any double.
inline std::string double_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string num_str(const Num& n) {
    return n.exact ? rat_str(n.q) : double_str(n.x);
}

}  // namespace linkinv
