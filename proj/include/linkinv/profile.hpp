#pragma once

#include <string>
#include <vector>

#include "linkinv/num.hpp"

namespace linkinv {

// Normalized sphere: total area 1, omega = dtheta dz / 4pi, z in [-1,1].
// The area of the sublevel set {z' <= z} is (z+1)/2; the closed disc is
// {-1 <= z <= 0} and has area exactly 1/2.
struct SphereModel {
    static Rat area_of_sublevel(const Rat& z) { return (z + 1) / 2; }
    static Rat sublevel_of_area(const Rat& a) { return 2 * a - 1; }
    static double area_of_sublevel(double z) { return 0.5 * (z + 1.0); }
    static double sublevel_of_area(double a) { return 2.0 * a - 1.0; }
};

enum class Support { Disc, Sphere };

enum class PieceKind {
    Zero,       // h = 0
    Poly,       // h = sum coeffs[j] z^j, rational coefficients
    InvSqrt,    // h = sqrt(c / (1+z)), singular at z = -1
    ConstSqrt,  // h = sqrt(c)
    Step,       // h = v0 + (v1-v0) U((z-z0)/(z1-z0)), exp-flat smooth step
    Cutoff,     // h = sqrt(c/(1+z)) W((z-z0)/(z1-z0)), decreasing blend to 0
};

struct Piece {
    Rat z0, z1;  // closed interval [z0, z1]; z0 = -1 is open for InvSqrt
    PieceKind kind = PieceKind::Zero;
    std::vector<Rat> coeffs;  // Poly only, ascending degree
    Rat c{0};                 // InvSqrt / ConstSqrt / Cutoff parameter
    Rat v0{0}, v1{0};         // Step endpoint values
};

// A z-dependent Hamiltonian h(z) on [-1,1], stored piecewise closed-form.
// Pieces tile [-1,1], adjacent values agree at breakpoints (except at a
// declared singular pole z = -1), and the critical values are computable
// from the piece list.  Immutable after construction.
class AxisymmetricProfile {
public:
    AxisymmetricProfile(Support support, std::vector<Piece> pieces);

    Support support() const { return support_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool singular_at_pole() const { return singular_; }

    // Exact rational where the representation allows, double otherwise.
    // Throws std::domain_error at z = -1 on a singular profile.
    Num eval(const Rat& z) const;
    double eval_d(double z) const;
    double deriv1(double z) const;
    double deriv2(double z) const;

    // integral of h over [-1,1]; exact for rational pieces, adaptive
    // quadrature (target tol) for smooth ones, closed form for InvSqrt.
    Num integral(double tol = 1e-12) const;

    // max h - min h; +inf approximation when singular.
    Num range_width() const;

    bool is_polyline() const;  // only Zero/Poly(deg<=1) pieces

    std::string describe() const;

private:
    Support support_;
    std::vector<Piece> pieces_;
    bool singular_ = false;

    const Piece& piece_at(const Rat& z) const;
    const Piece& piece_at(double z) const;
};

// Named fixtures.
AxisymmetricProfile profile_zero();
AxisymmetricProfile profile_ramp();    // h = -2(z+1/2) on [-1,-1/2], 0 after
AxisymmetricProfile profile_tent();    // 0 outside [-9/10,-1/10], peak 1 at -1/2
AxisymmetricProfile profile_height();  // h = z on the sphere
AxisymmetricProfile profile_twist();   // sqrt(2/(1+z)) capped by the smooth cutoff
AxisymmetricProfile profile_sphere_twist();  // sqrt(2/(1+z)) on all of (-1,1]

// Smooth disc-supported fixtures built from exp-flat steps.
AxisymmetricProfile profile_smooth_ramp();  // 1 at the pole, smooth descent to 0 at -1/2
AxisymmetricProfile profile_smooth_bump(const Rat& za, const Rat& zm, const Rat& zb,
                                        const Rat& height);
AxisymmetricProfile profile_scaled(const AxisymmetricProfile& p, const Rat& s);

// Flattens a profile singular at the pole on the cap
// [-1, -1+2^(-2n)]: constant at the cap-edge value on the cap, identical
// to the base outside.  Nonsingular bases are returned unchanged.
AxisymmetricProfile make_smoothing(const AxisymmetricProfile& base, int n);
Rat smoothing_cap_end(int n);   // -1 + 2^(-2n)
Num smoothing_plateau(const AxisymmetricProfile& base, int n);

// Pointwise sum / constant shift; rational-polyline profiles only.
AxisymmetricProfile profile_add(const AxisymmetricProfile& a, const AxisymmetricProfile& b);
AxisymmetricProfile profile_shift(const AxisymmetricProfile& p, const Rat& c);

// Strictly monotone / constant decomposition used by the Reeb and Ruelle
// machinery.  Breakpoints are exact rationals; per-piece polynomials of
// degree > 2 are rejected.
struct MonotoneRun {
    Rat z0, z1;
    Num h0, h1;
    int dir;  // -1 decreasing, 0 constant, +1 increasing
};
std::vector<MonotoneRun> monotone_runs(const AxisymmetricProfile& p);

}  // namespace linkinv
