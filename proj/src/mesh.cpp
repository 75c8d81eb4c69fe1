#include "linkinv/mesh.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace linkinv {

void TriangulatedField::validate() const {
    if (vertex_h.empty() || triangles.empty())
        throw std::invalid_argument("mesh: empty field");
    Rat total = 0;
    std::map<std::pair<int, int>, int> edge_count;
    for (const Tri& t : triangles) {
        for (int j = 0; j < 3; ++j) {
            int a = t.v[j], b = t.v[(j + 1) % 3];
            if (a < 0 || b < 0 || a >= int(vertex_h.size()) || b >= int(vertex_h.size()))
                throw std::invalid_argument("mesh: vertex index out of range");
            if (a == b) throw std::invalid_argument("mesh: degenerate triangle");
            if (a > b) std::swap(a, b);
            edge_count[{a, b}]++;
        }
        if (!(t.area > 0)) throw std::invalid_argument("mesh: nonpositive triangle area");
        total += t.area;
    }
    if (total != 1) throw std::invalid_argument("mesh: triangle areas must sum to 1 exactly");
    for (const auto& [e, c] : edge_count)
        if (c != 2) throw std::invalid_argument("mesh: edge not shared by exactly two triangles");
    long long V = (long long)vertex_h.size();
    long long E = (long long)edge_count.size();
    long long F = (long long)triangles.size();
    if (V - E + F != 2) throw std::invalid_argument("mesh: Euler characteristic must be 2");
}

TriangulatedField band_mesh_from_profile(const AxisymmetricProfile& p, int bands, int sectors) {
    if (bands < 2 || sectors < 3)
        throw std::invalid_argument("band_mesh: need bands >= 2, sectors >= 3");
    TriangulatedField f;
    const int m = bands, s = sectors;
    // rings 1..m-1 carry s vertices each; two poles
    auto ring_vertex = [&](int j, int i) {
        return 2 + (j - 1) * s + (i % s);  // j in [1, m-1]
    };
    const int south = 0, north = 1;
    f.vertex_h.resize(2 + (m - 1) * s);
    auto z_of = [&](int j) { return Rat(2 * j, m) - 1; };
    auto hval = [&](const Rat& z) {
        Num h = p.eval(z);
        if (!h.exact)
            throw std::invalid_argument("band_mesh: profile must evaluate exactly on the grid");
        return h.q;
    };
    f.vertex_h[south] = hval(Rat(-1));
    f.vertex_h[north] = hval(Rat(1));
    for (int j = 1; j < m; ++j)
        for (int i = 0; i < s; ++i) f.vertex_h[ring_vertex(j, i)] = hval(z_of(j));

    const Rat band_area = Rat(1, m);  // area between consecutive rings
    const Rat fan_area = band_area / s;
    const Rat quad_half = band_area / (2 * s);
    for (int i = 0; i < s; ++i) {
        f.triangles.push_back({{south, ring_vertex(1, i + 1), ring_vertex(1, i)}, fan_area});
        f.triangles.push_back({{north, ring_vertex(m - 1, i), ring_vertex(m - 1, i + 1)}, fan_area});
    }
    for (int j = 1; j + 1 < m; ++j) {
        for (int i = 0; i < s; ++i) {
            int a = ring_vertex(j, i), b = ring_vertex(j, i + 1);
            int c = ring_vertex(j + 1, i), d = ring_vertex(j + 1, i + 1);
            f.triangles.push_back({{a, b, c}, quad_half});
            f.triangles.push_back({{b, d, c}, quad_half});
        }
    }
    f.validate();
    return f;
}

TriangulatedField two_bump_mesh() {
    // two poles + a hexagonal ring; ring vertices 0 and 3 are raised to
    // heights 1 and 2, the rest of the field is flat at 0
    TriangulatedField f;
    f.vertex_h.assign(8, Rat(0));
    const int top = 0, bot = 1;
    auto ring = [](int i) { return 2 + ((i % 6) + 6) % 6; };
    f.vertex_h[ring(0)] = 1;
    f.vertex_h[ring(3)] = 2;
    const Rat a = Rat(1, 12);
    for (int i = 0; i < 6; ++i) {
        f.triangles.push_back({{top, ring(i), ring(i + 1)}, a});
        f.triangles.push_back({{bot, ring(i + 1), ring(i)}, a});
    }
    f.validate();
    return f;
}

TriangulatedField constant_mesh(const Rat& value) {
    TriangulatedField f;
    f.vertex_h.assign(6, value);
    // octahedron: poles 0/1, equatorial ring 2..5
    const Rat a = Rat(1, 8);
    auto ring = [](int i) { return 2 + ((i % 4) + 4) % 4; };
    for (int i = 0; i < 4; ++i) {
        f.triangles.push_back({{0, ring(i), ring(i + 1)}, a});
        f.triangles.push_back({{1, ring(i + 1), ring(i)}, a});
    }
    f.validate();
    return f;
}

}  // namespace linkinv
