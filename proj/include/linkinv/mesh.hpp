#pragma once

#include <array>
#include <vector>

#include "linkinv/profile.hpp"
#include "linkinv/rational.hpp"

namespace linkinv {

// A PL scalar field on a triangulated genus-0 closed surface.  Triangle
// areas are stored, not recomputed from an embedding, so synthetic fields
// with exact rational areas are possible.  validate() enforces: areas sum
// to 1 exactly, every edge is shared by exactly two triangles, and the
// Euler characteristic is 2.
struct TriangulatedField {
    struct Tri {
        std::array<int, 3> v;
        Rat area;
    };
    std::vector<Rat> vertex_h;
    std::vector<Tri> triangles;

    void validate() const;
};

// Axisymmetric sampling of a profile on a band/sector sphere mesh:
// `bands` latitude bands between z = -1 and z = 1, `sectors` meridian
// sectors.  All triangle areas are exact rationals summing to 1.
TriangulatedField band_mesh_from_profile(const AxisymmetricProfile& p, int bands, int sectors);

// Two disjoint PL bumps of heights 1 and 2 on a flat background.
TriangulatedField two_bump_mesh();

// Constant field on a minimal sphere (octahedron).
TriangulatedField constant_mesh(const Rat& value);

}  // namespace linkinv
