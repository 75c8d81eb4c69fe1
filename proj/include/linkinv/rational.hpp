#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace linkinv {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Renders a rational as "p" or "p/q" with q > 0.
inline std::string rat_str(const Rat& r) {
    const BigInt num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Parses "p", "-p/q", or a plain decimal like "0.25".
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt p(s.substr(0, slash));
            BigInt q(s.substr(slash + 1));
            if (q == 0) throw std::invalid_argument("rat_parse: zero denominator");
            return Rat(p, q);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            BigInt p(digits);
            BigInt q = 1;
            for (size_t i = dot + 1; i < s.size(); ++i) q *= 10;
            return Rat(p, q);
        }
        return Rat(BigInt(s));
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_parse: cannot parse '" + s + "'");
    }
}

inline BigInt rat_floor(const Rat& r) {
    BigInt num = numerator(r), den = denominator(r);
    BigInt q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

// Exact square root of a nonnegative rational, when it is a perfect square.
inline std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rat(0);
    const BigInt num = numerator(r), den = denominator(r);
    BigInt sn = boost::multiprecision::sqrt(num);
    BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rat(sn, sd);
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace linkinv
