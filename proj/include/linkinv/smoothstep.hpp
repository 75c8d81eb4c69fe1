#pragma once

#include <cmath>

#include "linkinv/interval.hpp"

namespace linkinv {

// The standard exponentially flat partition step built from
// sigma(u) = exp(-1/u):
//
//   W(t) = sigma(1-t) / (sigma(t) + sigma(1-t)),   W(0) = 1, W(1) = 0,
//
// with every derivative vanishing at t = 0 and t = 1.  W is strictly
// decreasing on (0,1).  U(t) = 1 - W(t) is the rising version.
inline double step_sigma(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

inline double step_W(double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    double a = step_sigma(1.0 - t), b = step_sigma(t);
    return a / (a + b);
}

// W, W', W'' together.  sigma' (u) = sigma/u^2, so with A = sigma(1-t),
// B = sigma(t):
//   A'  = -A/(1-t)^2                B'  = B/t^2
//   A'' = A/(1-t)^4 - 2A/(1-t)^3    B'' = B/t^4 - 2B/t^3
//   W   = A/(A+B)
//   W'  = (A'B - AB')/(A+B)^2
//   W'' = (A''B - AB'')/(A+B)^2 - 2(A'B - AB')(A'+B')/(A+B)^3
struct StepJet {
    double w, dw, ddw;
};

inline StepJet step_jet(double t) {
    if (t <= 0.0) return {1.0, 0.0, 0.0};
    if (t >= 1.0) return {0.0, 0.0, 0.0};
    const double s = 1.0 - t;
    const double A = step_sigma(s), B = step_sigma(t);
    const double D = A + B;
    if (D == 0.0) return {t < 0.5 ? 1.0 : 0.0, 0.0, 0.0};
    const double Ap = -A / (s * s);
    const double Bp = B / (t * t);
    const double App = A / (s * s * s * s) - 2.0 * A / (s * s * s);
    const double Bpp = B / (t * t * t * t) - 2.0 * B / (t * t * t);
    const double N = Ap * B - A * Bp;
    const double w = A / D;
    const double dw = N / (D * D);
    const double ddw = (App * B - A * Bpp) / (D * D) - 2.0 * N * (Ap + Bp) / (D * D * D);
    return {w, dw, ddw};
}

// Rigorous enclosure of W(t) for t given as an interval inside [0,1].
// W is decreasing, so the endpoint evaluations bracket the range.
inline Ival ival_step_W(const Ival& t) {
    auto point = [](double tv, bool want_hi) -> double {
        if (tv <= 0.0) return 1.0;
        if (tv >= 1.0) return 0.0;
        Ival s(tv, tv);
        Ival a = ival_exp(-(Ival(1.0) / (Ival(1.0) - s)));
        Ival b = ival_exp(-(Ival(1.0) / s));
        Ival w = a / (a + b);
        return want_hi ? std::min(1.0, w.hi) : std::max(0.0, w.lo);
    };
    return Ival(point(t.hi, false), point(t.lo, true));
}

}  // namespace linkinv
