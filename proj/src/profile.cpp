#include "linkinv/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "linkinv/quadrature.hpp"
#include "linkinv/smoothstep.hpp"

namespace linkinv {

namespace {

bool piece_is_zero_valued(const Piece& p) {
    switch (p.kind) {
        case PieceKind::Zero:
            return true;
        case PieceKind::Poly:
            return std::all_of(p.coeffs.begin(), p.coeffs.end(), [](const Rat& c) { return c == 0; });
        case PieceKind::Step:
            return p.v0 == 0 && p.v1 == 0;
        default:
            return false;
    }
}

Num poly_eval(const std::vector<Rat>& coeffs, const Rat& z) {
    Rat acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return Num(acc);
}

Num sqrt_num(const Rat& q) {
    if (auto s = rat_sqrt_exact(q)) return Num(*s);
    return Num::approx(std::sqrt(rat_double(q)));
}

Num piece_eval(const Piece& p, const Rat& z) {
    switch (p.kind) {
        case PieceKind::Zero:
            return Num(Rat(0));
        case PieceKind::Poly:
            return poly_eval(p.coeffs, z);
        case PieceKind::ConstSqrt:
            return sqrt_num(p.c);
        case PieceKind::InvSqrt: {
            if (z == -1) throw std::domain_error("profile: singular at z=-1");
            return sqrt_num(Rat(p.c / (1 + z)));
        }
        case PieceKind::Step: {
            if (p.v0 == p.v1 || z == p.z0) return Num(p.v0);
            if (z == p.z1) return Num(p.v1);
            double t = rat_double(Rat((z - p.z0) / (p.z1 - p.z0)));
            double u = 1.0 - step_W(t);
            return Num::approx(rat_double(p.v0) + rat_double(Rat(p.v1 - p.v0)) * u);
        }
        case PieceKind::Cutoff: {
            if (z == p.z1) return Num(Rat(0));
            Num f = sqrt_num(Rat(p.c / (1 + z)));
            if (z == p.z0) return f;
            double t = rat_double(Rat((z - p.z0) / (p.z1 - p.z0)));
            return Num::approx(f.x * step_W(t));
        }
    }
    throw std::logic_error("profile: unknown piece kind");
}

}  // namespace

AxisymmetricProfile::AxisymmetricProfile(Support support, std::vector<Piece> pieces)
    : support_(support), pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("profile: no pieces");
    if (pieces_.front().z0 != -1 || pieces_.back().z1 != 1)
        throw std::invalid_argument("profile: pieces must tile [-1,1]");
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& p = pieces_[i];
        if (!(p.z0 < p.z1)) throw std::invalid_argument("profile: empty piece interval");
        if (i + 1 < pieces_.size() && pieces_[i + 1].z0 != p.z1)
            throw std::invalid_argument("profile: pieces must be contiguous");
        if ((p.kind == PieceKind::InvSqrt || p.kind == PieceKind::Cutoff ||
             p.kind == PieceKind::ConstSqrt) &&
            p.c < 0)
            throw std::invalid_argument("profile: negative sqrt parameter");
        if (p.kind == PieceKind::InvSqrt && p.z0 == -1) singular_ = true;
    }
    // continuity at interior breakpoints
    for (size_t i = 0; i + 1 < pieces_.size(); ++i) {
        Num left = piece_eval(pieces_[i], pieces_[i].z1);
        Num right = piece_eval(pieces_[i + 1], pieces_[i + 1].z0);
        if (!left.same(right, 1e-9))
            throw std::invalid_argument("profile: discontinuous at breakpoint z=" +
                                        rat_str(pieces_[i].z1));
    }
    if (support_ == Support::Disc) {
        // compact support in the open disc: identically 0 on [z_c,1] for
        // some z_c < 0
        Rat zc = 1;
        for (auto it = pieces_.rbegin(); it != pieces_.rend() && piece_is_zero_valued(*it); ++it)
            zc = it->z0;
        if (!(zc < 0))
            throw std::invalid_argument("profile: disc support requires vanishing near z=0");
    }
}

const Piece& AxisymmetricProfile::piece_at(const Rat& z) const {
    if (z < -1 || z > 1) throw std::domain_error("profile: z outside [-1,1]");
    for (const Piece& p : pieces_)
        if (z <= p.z1) return p;
    return pieces_.back();
}

const Piece& AxisymmetricProfile::piece_at(double z) const {
    for (const Piece& p : pieces_)
        if (z <= rat_double(p.z1)) return p;
    return pieces_.back();
}

Num AxisymmetricProfile::eval(const Rat& z) const { return piece_eval(piece_at(z), z); }

double AxisymmetricProfile::eval_d(double z) const {
    const Piece& p = piece_at(z);
    switch (p.kind) {
        case PieceKind::Zero:
            return 0.0;
        case PieceKind::Poly: {
            double acc = 0.0;
            for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
                acc = acc * z + rat_double(*it);
            return acc;
        }
        case PieceKind::ConstSqrt:
            return std::sqrt(rat_double(p.c));
        case PieceKind::InvSqrt:
            return std::sqrt(rat_double(p.c) / (1.0 + z));
        case PieceKind::Step: {
            double t = (z - rat_double(p.z0)) / rat_double(Rat(p.z1 - p.z0));
            double u = 1.0 - step_W(t);
            return rat_double(p.v0) + rat_double(Rat(p.v1 - p.v0)) * u;
        }
        case PieceKind::Cutoff: {
            double f = std::sqrt(rat_double(p.c) / (1.0 + z));
            double t = (z - rat_double(p.z0)) / rat_double(Rat(p.z1 - p.z0));
            return f * step_W(t);
        }
    }
    return 0.0;
}

double AxisymmetricProfile::deriv1(double z) const {
    const Piece& p = piece_at(z);
    switch (p.kind) {
        case PieceKind::Zero:
        case PieceKind::ConstSqrt:
            return 0.0;
        case PieceKind::Poly: {
            double acc = 0.0;
            for (size_t j = p.coeffs.size(); j-- > 1;)
                acc = acc * z + double(j) * rat_double(p.coeffs[j]);
            return acc;
        }
        case PieceKind::InvSqrt: {
            double f = std::sqrt(rat_double(p.c) / (1.0 + z));
            return -0.5 * f / (1.0 + z);
        }
        case PieceKind::Step: {
            double s = 1.0 / rat_double(Rat(p.z1 - p.z0));
            double t = (z - rat_double(p.z0)) * s;
            return -rat_double(Rat(p.v1 - p.v0)) * step_jet(t).dw * s;
        }
        case PieceKind::Cutoff: {
            double f = std::sqrt(rat_double(p.c) / (1.0 + z));
            double fp = -0.5 * f / (1.0 + z);
            double s = 1.0 / rat_double(Rat(p.z1 - p.z0));
            double t = (z - rat_double(p.z0)) * s;
            StepJet j = step_jet(t);
            return fp * j.w + f * j.dw * s;
        }
    }
    return 0.0;
}

double AxisymmetricProfile::deriv2(double z) const {
    const Piece& p = piece_at(z);
    switch (p.kind) {
        case PieceKind::Zero:
        case PieceKind::ConstSqrt:
            return 0.0;
        case PieceKind::Poly: {
            double acc = 0.0;
            for (size_t j = p.coeffs.size(); j-- > 2;)
                acc = acc * z + double(j) * double(j - 1) * rat_double(p.coeffs[j]);
            return acc;
        }
        case PieceKind::InvSqrt: {
            double f = std::sqrt(rat_double(p.c) / (1.0 + z));
            return 0.75 * f / ((1.0 + z) * (1.0 + z));
        }
        case PieceKind::Step: {
            double s = 1.0 / rat_double(Rat(p.z1 - p.z0));
            double t = (z - rat_double(p.z0)) * s;
            return -rat_double(Rat(p.v1 - p.v0)) * step_jet(t).ddw * s * s;
        }
        case PieceKind::Cutoff: {
            double u = 1.0 + z;
            double f = std::sqrt(rat_double(p.c) / u);
            double fp = -0.5 * f / u;
            double fpp = 0.75 * f / (u * u);
            double s = 1.0 / rat_double(Rat(p.z1 - p.z0));
            double t = (z - rat_double(p.z0)) * s;
            StepJet j = step_jet(t);
            return fpp * j.w + 2.0 * fp * j.dw * s + f * j.ddw * s * s;
        }
    }
    return 0.0;
}

Num AxisymmetricProfile::integral(double tol) const {
    Num total(Rat(0));
    for (const Piece& p : pieces_) {
        switch (p.kind) {
            case PieceKind::Zero:
                break;
            case PieceKind::Poly: {
                Rat acc = 0;
                Rat z0p = p.z0, z1p = p.z1;
                for (size_t j = 0; j < p.coeffs.size(); ++j) {
                    // antiderivative term c_j z^(j+1)/(j+1)
                    Rat pw0 = 1, pw1 = 1;
                    for (size_t t = 0; t <= j; ++t) {
                        pw0 *= p.z0;
                        pw1 *= p.z1;
                    }
                    acc += p.coeffs[j] * (pw1 - pw0) / Rat(int(j) + 1);
                }
                total += Num(acc);
                break;
            }
            case PieceKind::ConstSqrt:
                total += sqrt_num(p.c) * Num(Rat(p.z1 - p.z0));
                break;
            case PieceKind::InvSqrt: {
                // int sqrt(c/(1+z)) dz = 2 sqrt(c (1+z))
                Num hi = sqrt_num(Rat(p.c * (1 + p.z1)));
                Num lo = sqrt_num(Rat(p.c * (1 + p.z0)));
                total += Num(Rat(2)) * (hi - lo);
                break;
            }
            case PieceKind::Step:
            case PieceKind::Cutoff: {
                double a = rat_double(p.z0), b = rat_double(p.z1);
                total += Num::approx(
                    adaptive_simpson([this](double z) { return eval_d(z); }, a, b, tol));
                break;
            }
        }
    }
    return total;
}

Num AxisymmetricProfile::range_width() const {
    if (singular_) return Num::approx(std::numeric_limits<double>::infinity());
    Num lo = eval(Rat(-1)), hi = lo;
    auto take = [&](const Num& v) {
        lo = num_min(lo, v);
        hi = num_max(hi, v);
    };
    for (const Piece& p : pieces_) {
        switch (p.kind) {
            case PieceKind::Zero:
                take(Num(Rat(0)));
                break;
            case PieceKind::Poly: {
                take(poly_eval(p.coeffs, p.z0));
                take(poly_eval(p.coeffs, p.z1));
                if (p.coeffs.size() == 3 && p.coeffs[2] != 0) {
                    Rat zv = -p.coeffs[1] / (2 * p.coeffs[2]);
                    if (p.z0 < zv && zv < p.z1) take(poly_eval(p.coeffs, zv));
                } else if (p.coeffs.size() > 3) {
                    // no closed form kept; sample densely
                    double a = rat_double(p.z0), b = rat_double(p.z1);
                    for (int i = 0; i <= 256; ++i)
                        take(Num::approx(eval_d(a + (b - a) * i / 256.0)));
                }
                break;
            }
            default:
                // all remaining kinds are monotone on their interval
                take(eval(p.z0));
                take(eval(p.z1));
                break;
        }
    }
    return hi - lo;
}

bool AxisymmetricProfile::is_polyline() const {
    for (const Piece& p : pieces_) {
        if (p.kind == PieceKind::Zero) continue;
        if (p.kind == PieceKind::Poly && p.coeffs.size() <= 2) continue;
        return false;
    }
    return true;
}

std::string AxisymmetricProfile::describe() const {
    std::ostringstream os;
    os << (support_ == Support::Disc ? "disc" : "sphere") << " profile, " << pieces_.size()
       << " pieces" << (singular_ ? ", singular at pole" : "");
    return os.str();
}

// ---------------------------------------------------------------------------
// fixtures

AxisymmetricProfile profile_zero() {
    return AxisymmetricProfile(Support::Disc, {Piece{-1, 1, PieceKind::Zero, {}, 0, 0, 0}});
}

AxisymmetricProfile profile_ramp() {
    Piece lin{-1, Rat(-1, 2), PieceKind::Poly, {Rat(-1), Rat(-2)}, 0, 0, 0};
    Piece tail{Rat(-1, 2), 1, PieceKind::Zero, {}, 0, 0, 0};
    return AxisymmetricProfile(Support::Disc, {lin, tail});
}

AxisymmetricProfile profile_tent() {
    Piece cap{-1, Rat(-9, 10), PieceKind::Zero, {}, 0, 0, 0};
    Piece up{Rat(-9, 10), Rat(-1, 2), PieceKind::Poly, {Rat(9, 4), Rat(5, 2)}, 0, 0, 0};
    Piece down{Rat(-1, 2), Rat(-1, 10), PieceKind::Poly, {Rat(-1, 4), Rat(-5, 2)}, 0, 0, 0};
    Piece tail{Rat(-1, 10), 1, PieceKind::Zero, {}, 0, 0, 0};
    return AxisymmetricProfile(Support::Disc, {cap, up, down, tail});
}

AxisymmetricProfile profile_height() {
    return AxisymmetricProfile(Support::Sphere,
                               {Piece{-1, 1, PieceKind::Poly, {Rat(0), Rat(1)}, 0, 0, 0}});
}

AxisymmetricProfile profile_twist() {
    Piece sing{-1, Rat(-3, 4), PieceKind::InvSqrt, {}, Rat(2), 0, 0};
    Piece blend{Rat(-3, 4), Rat(-1, 2), PieceKind::Cutoff, {}, Rat(2), 0, 0};
    Piece tail{Rat(-1, 2), 1, PieceKind::Zero, {}, 0, 0, 0};
    return AxisymmetricProfile(Support::Disc, {sing, blend, tail});
}

AxisymmetricProfile profile_sphere_twist() {
    return AxisymmetricProfile(Support::Sphere,
                               {Piece{-1, 1, PieceKind::InvSqrt, {}, Rat(2), 0, 0}});
}

AxisymmetricProfile profile_smooth_ramp() {
    Piece drop{-1, Rat(-1, 2), PieceKind::Step, {}, 0, Rat(1), Rat(0)};
    Piece tail{Rat(-1, 2), 1, PieceKind::Zero, {}, 0, 0, 0};
    return AxisymmetricProfile(Support::Disc, {drop, tail});
}

AxisymmetricProfile profile_smooth_bump(const Rat& za, const Rat& zm, const Rat& zb,
                                        const Rat& height) {
    if (!(Rat(-1) <= za && za < zm && zm < zb && zb < 0))
        throw std::invalid_argument("smooth_bump: need -1 <= za < zm < zb < 0");
    std::vector<Piece> ps;
    if (za > -1) ps.push_back(Piece{-1, za, PieceKind::Zero, {}, 0, 0, 0});
    ps.push_back(Piece{za, zm, PieceKind::Step, {}, 0, Rat(0), height});
    ps.push_back(Piece{zm, zb, PieceKind::Step, {}, 0, height, Rat(0)});
    ps.push_back(Piece{zb, 1, PieceKind::Zero, {}, 0, 0, 0});
    return AxisymmetricProfile(Support::Disc, std::move(ps));
}

AxisymmetricProfile profile_scaled(const AxisymmetricProfile& p, const Rat& s) {
    std::vector<Piece> ps = p.pieces();
    for (Piece& pc : ps) {
        switch (pc.kind) {
            case PieceKind::Zero:
                break;
            case PieceKind::Poly:
                for (Rat& c : pc.coeffs) c *= s;
                break;
            case PieceKind::Step:
                pc.v0 *= s;
                pc.v1 *= s;
                break;
            default:
                if (s < 0) throw std::invalid_argument("profile_scaled: negative scale on sqrt piece");
                pc.c *= s * s;
                break;
        }
    }
    return AxisymmetricProfile(p.support(), std::move(ps));
}

Rat smoothing_cap_end(int n) {
    Rat pow4 = 1;
    for (int i = 0; i < n; ++i) pow4 *= 4;
    return Rat(1) / pow4 - 1;
}

AxisymmetricProfile make_smoothing(const AxisymmetricProfile& base, int n) {
    if (n <= 0) throw std::invalid_argument("make_smoothing: n must be >= 1");
    if (!base.singular_at_pole()) return base;
    const Piece& first = base.pieces().front();
    Rat cap = smoothing_cap_end(n);
    if (cap >= first.z1)
        throw std::invalid_argument("make_smoothing: cap exceeds the singular piece");
    Rat pow4 = 1;
    for (int i = 0; i < n; ++i) pow4 *= 4;
    std::vector<Piece> ps;
    ps.push_back(Piece{-1, cap, PieceKind::ConstSqrt, {}, Rat(first.c * pow4), 0, 0});
    ps.push_back(Piece{cap, first.z1, PieceKind::InvSqrt, {}, first.c, 0, 0});
    for (size_t i = 1; i < base.pieces().size(); ++i) ps.push_back(base.pieces()[i]);
    return AxisymmetricProfile(base.support(), std::move(ps));
}

Num smoothing_plateau(const AxisymmetricProfile& base, int n) {
    return make_smoothing(base, n).eval(Rat(-1));
}

AxisymmetricProfile profile_add(const AxisymmetricProfile& a, const AxisymmetricProfile& b) {
    if (!a.is_polyline() || !b.is_polyline())
        throw std::invalid_argument("profile_add: rational polyline profiles only");
    std::vector<Rat> cuts;
    for (const Piece& p : a.pieces()) cuts.push_back(p.z1);
    for (const Piece& p : b.pieces()) cuts.push_back(p.z1);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto coeffs_at = [](const AxisymmetricProfile& p, const Rat& zmid) -> std::vector<Rat> {
        for (const Piece& pc : p.pieces())
            if (pc.z0 <= zmid && zmid <= pc.z1)
                return pc.kind == PieceKind::Zero ? std::vector<Rat>{} : pc.coeffs;
        return {};
    };
    std::vector<Piece> ps;
    Rat z0 = -1;
    for (const Rat& z1 : cuts) {
        Rat zm = (z0 + z1) / 2;
        std::vector<Rat> ca = coeffs_at(a, zm), cb = coeffs_at(b, zm);
        std::vector<Rat> sum(std::max(ca.size(), cb.size()), Rat(0));
        for (size_t i = 0; i < ca.size(); ++i) sum[i] += ca[i];
        for (size_t i = 0; i < cb.size(); ++i) sum[i] += cb[i];
        bool all_zero = std::all_of(sum.begin(), sum.end(), [](const Rat& c) { return c == 0; });
        if (all_zero)
            ps.push_back(Piece{z0, z1, PieceKind::Zero, {}, 0, 0, 0});
        else
            ps.push_back(Piece{z0, z1, PieceKind::Poly, std::move(sum), 0, 0, 0});
        z0 = z1;
    }
    Support sup = (a.support() == Support::Disc && b.support() == Support::Disc) ? Support::Disc
                                                                                 : Support::Sphere;
    return AxisymmetricProfile(sup, std::move(ps));
}

AxisymmetricProfile profile_shift(const AxisymmetricProfile& p, const Rat& c) {
    if (c == 0) return p;
    std::vector<Piece> ps = p.pieces();
    for (Piece& pc : ps) {
        switch (pc.kind) {
            case PieceKind::Zero:
                pc.kind = PieceKind::Poly;
                pc.coeffs = {c};
                break;
            case PieceKind::Poly:
                if (pc.coeffs.empty()) pc.coeffs.push_back(Rat(0));
                pc.coeffs[0] += c;
                break;
            case PieceKind::Step:
                pc.v0 += c;
                pc.v1 += c;
                break;
            default:
                throw std::invalid_argument("profile_shift: sqrt pieces cannot absorb a shift");
        }
    }
    return AxisymmetricProfile(Support::Sphere, std::move(ps));
}

std::vector<MonotoneRun> monotone_runs(const AxisymmetricProfile& p) {
    if (p.singular_at_pole())
        throw std::domain_error("monotone_runs: profile unbounded at the pole");
    std::vector<MonotoneRun> runs;
    auto push = [&](const Rat& z0, const Rat& z1, const Num& h0, const Num& h1, int dir) {
        if (dir == 0 && !runs.empty() && runs.back().dir == 0 && runs.back().h1.same(h0)) {
            runs.back().z1 = z1;  // merge adjacent plateaus
            return;
        }
        runs.push_back(MonotoneRun{z0, z1, h0, h1, dir});
    };
    for (const Piece& pc : p.pieces()) {
        switch (pc.kind) {
            case PieceKind::Zero:
                push(pc.z0, pc.z1, Num(Rat(0)), Num(Rat(0)), 0);
                break;
            case PieceKind::ConstSqrt:
                push(pc.z0, pc.z1, piece_eval(pc, pc.z0), piece_eval(pc, pc.z0), 0);
                break;
            case PieceKind::InvSqrt:
            case PieceKind::Cutoff:
                push(pc.z0, pc.z1, piece_eval(pc, pc.z0), piece_eval(pc, pc.z1), -1);
                break;
            case PieceKind::Step: {
                int dir = pc.v0 == pc.v1 ? 0 : (pc.v0 < pc.v1 ? +1 : -1);
                push(pc.z0, pc.z1, Num(pc.v0), Num(pc.v1), dir);
                break;
            }
            case PieceKind::Poly: {
                size_t deg = pc.coeffs.size();
                while (deg > 0 && pc.coeffs[deg - 1] == 0) --deg;
                if (deg <= 1) {
                    push(pc.z0, pc.z1, poly_eval(pc.coeffs, pc.z0), poly_eval(pc.coeffs, pc.z0), 0);
                } else if (deg == 2) {
                    int dir = pc.coeffs[1] > 0 ? +1 : -1;
                    push(pc.z0, pc.z1, poly_eval(pc.coeffs, pc.z0), poly_eval(pc.coeffs, pc.z1),
                         dir);
                } else if (deg == 3) {
                    // split at the vertex of the parabola if interior
                    Rat zv = -pc.coeffs[1] / (2 * pc.coeffs[2]);
                    auto dir_at = [&](const Rat& z) {
                        Rat d = pc.coeffs[1] + 2 * pc.coeffs[2] * z;
                        return d > 0 ? +1 : (d < 0 ? -1 : 0);
                    };
                    if (pc.z0 < zv && zv < pc.z1) {
                        push(pc.z0, zv, poly_eval(pc.coeffs, pc.z0), poly_eval(pc.coeffs, zv),
                             dir_at(pc.z0));
                        push(zv, pc.z1, poly_eval(pc.coeffs, zv), poly_eval(pc.coeffs, pc.z1),
                             dir_at(pc.z1));
                    } else {
                        Rat zm = (pc.z0 + pc.z1) / 2;
                        push(pc.z0, pc.z1, poly_eval(pc.coeffs, pc.z0), poly_eval(pc.coeffs, pc.z1),
                             dir_at(zm));
                    }
                } else {
                    throw std::domain_error("monotone_runs: polynomial degree > 2 unsupported");
                }
                break;
            }
        }
    }
    return runs;
}

}  // namespace linkinv
