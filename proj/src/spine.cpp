#include "torusfib/spine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "torusfib/errors.hpp"

namespace tfib {

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SpineGraph dual_spine(const Subdivision& S, const WeightFunction& w) {
    if (!induces(w, S)) throw NotInduced("weight function does not induce this subdivision");

    // Canonicalized weights in intrinsic coordinates.
    std::map<IVec, Rat> heights;
    for (const auto& [key, val] : w.values) {
        auto y = S.polygon.to_intrinsic(S.polygon.lattice().canonical(key));
        if (!y) throw DomainMismatch("weight key outside the polygon's plane");
        heights[*y] = val;
    }

    SpineGraph G;
    // One vertex per cell at the point where the cell's affine forms
    // w(m) + <m, u> are simultaneously minimal: u = (-a, -b) for the cell's
    // supporting plane z = a x + b y + c.
    for (int ci = 0; ci < static_cast<int>(S.cells.size()); ++ci) {
        const IMat& corners = S.cells[ci].corners;
        if (corners.size() < 3 ||
            ((corners[1][0] - corners[0][0]) * (corners[2][1] - corners[0][1]) ==
             (corners[1][1] - corners[0][1]) * (corners[2][0] - corners[0][0])))
            throw DegenerateCell("cell " + std::to_string(ci) + " has zero area");
        QMat M;
        QVec rhs;
        for (int i = 0; i < 3; ++i) {
            M.push_back({Rat(corners[i][0]), Rat(corners[i][1]), Rat(1)});
            rhs.push_back(heights.at(corners[i]));
        }
        auto abc = solve_right(M, rhs);
        if (!abc) throw DegenerateCell("cell " + std::to_string(ci) + " has no supporting plane");
        SpineVertex vert;
        vert.id = ci;
        vert.cell = ci;
        vert.pos = {-(*abc)[0], -(*abc)[1]};
        G.vertices.push_back(std::move(vert));
    }

    int edge_id = 0, leg_id = 0;
    for (const Wall& wall : S.walls) {
        IVec delta = sub(wall.v, wall.u);
        Int weight = content(delta);
        if (wall.cell1 >= 0) {
            // Bounded edge: direction is the 90-degree rotation of the wall
            // pointing from the first cell's vertex to the second's.
            SpineEdge e;
            e.id = edge_id++;
            e.u = wall.cell0;
            e.v = wall.cell1;
            IVec rot{-delta[1], delta[0]};
            QVec du = {G.vertices[wall.cell1].pos[0] - G.vertices[wall.cell0].pos[0],
                       G.vertices[wall.cell1].pos[1] - G.vertices[wall.cell0].pos[1]};
            Rat along = Rat(rot[0]) * du[0] + Rat(rot[1]) * du[1];
            if (along < 0) rot = neg(rot);
            e.dir = primitive(rot);
            e.weight = weight;
            G.edges.push_back(std::move(e));
        } else {
            // Unbounded leg: direction is the primitive inner normal of the
            // polygon boundary edge the wall lies on.
            SpineLeg l;
            l.id = leg_id++;
            l.v = wall.cell0;
            int be = 0;
            IVec inner;
            for (const Face& f : S.polygon.face_lattice()) {
                if (f.dim != 1) continue;
                if (be == wall.boundary_edge) {
                    inner = neg(f.normal);  // face normals point outward
                    break;
                }
                ++be;
            }
            l.dir = primitive(inner);
            l.weight = weight;
            l.boundary_edge = wall.boundary_edge;
            l.wall_u = wall.u;
            l.wall_v = wall.v;
            G.legs.push_back(std::move(l));
        }
    }
    return G;
}

bool is_balanced(const SpineGraph& G) {
    std::map<int, IVec> sums;
    for (const SpineVertex& v : G.vertices) sums[v.id] = IVec{Int(0), Int(0)};
    for (const SpineEdge& e : G.edges) {
        sums[e.u] = add(sums[e.u], scale(e.weight, e.dir));
        sums[e.v] = sub(sums[e.v], scale(e.weight, e.dir));
    }
    for (const SpineLeg& l : G.legs) sums[l.v] = add(sums[l.v], scale(l.weight, l.dir));
    for (const auto& [id, s] : sums)
        if (!is_zero(s)) return false;
    return true;
}

int betti1(const SpineGraph& G) {
    const int n = static_cast<int>(G.vertices.size());
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[G.vertices[i].id] = i;
    DisjointSet ds(n);
    for (const SpineEdge& e : G.edges) ds.unite(index.at(e.u), index.at(e.v));
    int components = 0;
    for (int i = 0; i < n; ++i)
        if (ds.find(i) == i) ++components;
    return static_cast<int>(G.edges.size()) - n + components;
}

std::map<int, int> legs_per_polygon_edge(const SpineGraph& G) {
    std::map<int, int> counts;
    for (const SpineLeg& l : G.legs) counts[l.boundary_edge]++;
    return counts;
}

EmbeddedGraph embed_in_simplex(const SpineGraph& G, const QMat& target) {
    if (target.size() != 3 || target[0].size() != 2)
        throw std::invalid_argument("embed_in_simplex: target must have three plane vertices");
    std::array<std::array<double, 2>, 3> T;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            T[i][j] = static_cast<double>(numerator(target[i][j])) /
                      static_cast<double>(denominator(target[i][j]));

    auto to_point = [&](const std::array<double, 3>& b) {
        std::array<double, 2> p{0.0, 0.0};
        for (int i = 0; i < 3; ++i) {
            p[0] += b[i] * T[i][0];
            p[1] += b[i] * T[i][1];
        }
        return p;
    };
    auto rat_to_double = [](const Rat& r) {
        return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
    };

    EmbeddedGraph E;
    E.graph = G;
    std::map<int, int> index;
    std::map<int, std::array<double, 3>> offsets;  // chart exponents per vertex id
    for (int i = 0; i < static_cast<int>(G.vertices.size()); ++i) {
        const SpineVertex& v = G.vertices[i];
        index[v.id] = i;
        double u1 = rat_to_double(v.pos[0]), u2 = rat_to_double(v.pos[1]);
        std::array<double, 3> a{0.0, -u1, -u2};
        offsets[v.id] = a;
        double w0 = 1.0, w1 = std::exp(-u1), w2 = std::exp(-u2);
        double s = w0 + w1 + w2;
        E.vertex_pos.push_back(to_point({w0 / s, w1 / s, w2 / s}));
    }

    // A leg's endpoint is the limit of the chart along its ray: the
    // coordinates with maximal growth rate dominate; among them the chart
    // offsets fix the position on the target boundary.
    for (const SpineLeg& l : G.legs) {
        const std::array<double, 3>& a = offsets.at(l.v);
        double d1 = static_cast<double>(l.dir[0]), d2 = static_cast<double>(l.dir[1]);
        std::array<double, 3> rate{0.0, -d1, -d2};
        double rmax = std::max({rate[0], rate[1], rate[2]});
        std::array<double, 3> b{0.0, 0.0, 0.0};
        double s = 0.0;
        int in_max = 0, opposite = 3;
        for (int i = 0; i < 3; ++i)
            if (rate[i] == rmax) {
                b[i] = std::exp(a[i]);
                s += b[i];
                ++in_max;
                opposite -= i;
            }
        for (int i = 0; i < 3; ++i) b[i] /= s;
        E.leg_end.push_back(to_point(b));
        E.leg_target_edge.push_back(in_max == 2 ? opposite : -1);
    }
    return E;
}

}  // namespace tfib
