#include "torusfib/assembly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace tfib {

namespace {

// Index of a canonical ambient point among the polytope's vertex rows.
int vertex_row_index(const IMat& rows, const IVec& canonical_point) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] == canonical_point) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

BaseComplex base_from_polytope(const LatticePolytope& P) {
    if (P.dim() < 2) {
        throw std::invalid_argument("base_from_polytope: need a polytope of dimension >= 2");
    }
    BaseComplex B;
    B.polytope = P;
    B.vertices = P.vertices();

    const auto& faces = P.face_lattice();

    // Base edges: the dim-1 faces, in face-lattice order.
    std::map<std::array<int, 2>, int> edge_index;
    for (const Face& f : faces) {
        if (f.dim != 1) continue;
        std::array<int, 2> e{f.verts[0], f.verts[1]};
        if (e[0] > e[1]) std::swap(e[0], e[1]);
        edge_index[e] = static_cast<int>(B.edges.size());
        B.edges.push_back(e);
    }
    B.faces_of_edge.assign(B.edges.size(), {});

    // Base faces: the 2-faces, each with its own polygon chart.
    std::vector<std::vector<int>> face_vert_sets;  // base vertex ids, sorted
    for (const Face& f : faces) {
        if (f.dim != 2) continue;
        const int fid = static_cast<int>(B.faces.size());
        BaseFaceChart chart;
        IMat pts;
        for (int vi : f.verts) pts.push_back(P.vertices()[vi]);
        chart.polygon = LatticePolytope::from_vertices(P.lattice(), pts);

        // from_vertices re-sorts, so recover the base vertex id per polygon row.
        for (const IVec& row : chart.polygon.vertices()) {
            const int bi = vertex_row_index(P.vertices(), row);
            if (bi < 0) {
                throw std::invalid_argument("base_from_polytope: face vertex not a polytope vertex");
            }
            chart.base_vertices.push_back(bi);
        }

        for (const Face& pf : chart.polygon.face_lattice()) {
            if (pf.dim != 1) continue;
            std::array<int, 2> e{chart.base_vertices[pf.verts[0]],
                                 chart.base_vertices[pf.verts[1]]};
            if (e[0] > e[1]) std::swap(e[0], e[1]);
            const auto it = edge_index.find(e);
            if (it == edge_index.end()) {
                throw std::invalid_argument("base_from_polytope: face edge missing from 1-skeleton");
            }
            chart.edge_to_base.push_back(it->second);
            B.faces_of_edge[it->second].push_back(fid);
        }

        face_vert_sets.push_back(f.verts);
        B.faces.push_back(std::move(chart));
    }

    // Cyclic order of the faces around each edge: two incident 2-faces are
    // adjacent when a common 3-face contains both (the link of the edge is a
    // polygon whose edges are exactly those 3-faces).
    std::vector<std::vector<int>> cells3;
    for (const Face& f : faces) {
        if (f.dim == 3) cells3.push_back(f.verts);
    }
    const auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };

    B.edge_face_cycles.assign(B.edges.size(), {});
    for (std::size_t e = 0; e < B.edges.size(); ++e) {
        const std::vector<int>& inc = B.faces_of_edge[e];
        if (inc.size() <= 2) {
            B.edge_face_cycles[e] = inc;
            continue;
        }
        std::vector<std::vector<int>> nbrs(inc.size());
        for (std::size_t i = 0; i < inc.size(); ++i) {
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                for (const auto& c : cells3) {
                    if (contains(c, face_vert_sets[inc[i]]) &&
                        contains(c, face_vert_sets[inc[j]])) {
                        nbrs[i].push_back(static_cast<int>(j));
                        nbrs[j].push_back(static_cast<int>(i));
                        break;
                    }
                }
            }
        }
        bool cyclic = true;
        for (const auto& n : nbrs) cyclic = cyclic && n.size() == 2;
        if (!cyclic) {
            B.edge_face_cycles[e] = inc;  // no polygonal link; keep id order
            continue;
        }
        // Walk the cycle starting from the lowest face id, toward its
        // lower-id neighbour, for a deterministic orientation.
        std::vector<int> cyc;
        int cur = 0;
        int prev = -1;
        do {
            cyc.push_back(inc[cur]);
            const int a = nbrs[cur][0], b = nbrs[cur][1];
            int nxt;
            if (prev == -1) {
                nxt = inc[a] < inc[b] ? a : b;
            } else {
                nxt = (a == prev) ? b : a;
            }
            prev = cur;
            cur = nxt;
        } while (cur != 0 && cyc.size() <= inc.size());
        if (cyc.size() != inc.size()) {
            B.edge_face_cycles[e] = inc;
        } else {
            B.edge_face_cycles[e] = cyc;
        }
    }
    return B;
}

namespace {

// A leg's crossing of its polygon boundary edge, as an affine parameter along
// the oriented base edge (lower base vertex id -> higher).
struct LegExit {
    Rat param;
    int leg_index = 0;  // index into the face graph's leg list
};

Rat leg_exit_param(const BaseComplex& base, int face_id, const SpineLeg& leg) {
    const BaseFaceChart& chart = base.faces[face_id];
    if (leg.boundary_edge < 0 ||
        leg.boundary_edge >= static_cast<int>(chart.edge_to_base.size())) {
        throw OrientationMismatch("leg boundary edge index out of range in face " +
                                  std::to_string(face_id));
    }

    // Polygon boundary edge endpoints, intrinsic coordinates.
    const auto& pfaces = chart.polygon.face_lattice();
    int seen = -1;
    const Face* pedge = nullptr;
    for (const Face& pf : pfaces) {
        if (pf.dim != 1) continue;
        if (++seen == leg.boundary_edge) {
            pedge = &pf;
            break;
        }
    }
    if (pedge == nullptr) {
        throw OrientationMismatch("polygon boundary edge not found");
    }
    const int ia = pedge->verts[0], ib = pedge->verts[1];
    const IVec& A = chart.polygon.vertices_intrinsic()[ia];
    const IVec& B = chart.polygon.vertices_intrinsic()[ib];

    if (leg.wall_u.size() != 2 || leg.wall_v.size() != 2) {
        throw OrientationMismatch("leg carries no dual boundary wall");
    }
    // The leg crosses the boundary edge at the midpoint of its dual wall:
    // solve (wall_u + wall_v)/2 = A + s*(B - A) in the edge's affine chart.
    Rat s;
    bool have_s = false;
    for (int c = 0; c < 2; ++c) {
        const Rat mid = Rat(leg.wall_u[c] + leg.wall_v[c]) / 2;
        const Rat span = Rat(B[c] - A[c]);
        const Rat off = mid - Rat(A[c]);
        if (span == 0) {
            if (off != 0) {
                throw OrientationMismatch("leg wall does not lie on its boundary edge");
            }
            continue;
        }
        const Rat sc = off / span;
        if (have_s && sc != s) {
            throw OrientationMismatch("leg wall does not lie on its boundary edge");
        }
        s = sc;
        have_s = true;
    }
    if (!have_s || s < 0 || s > 1) {
        throw OrientationMismatch("leg wall does not lie on its boundary edge");
    }

    const int a_base = chart.base_vertices[ia];
    const int b_base = chart.base_vertices[ib];
    const std::array<int, 2>& be = base.edges[chart.edge_to_base[leg.boundary_edge]];
    if (a_base == be[0] && b_base == be[1]) return s;
    if (a_base == be[1] && b_base == be[0]) return Rat(1) - s;
    throw OrientationMismatch("face chart and base edge disagree on endpoints");
}

}  // namespace

AssembledLocus assemble(const BaseComplex& base,
                        const std::map<int, SpineGraph>& face_graphs) {
    for (const auto& [fid, G] : face_graphs) {
        if (fid < 0 || fid >= static_cast<int>(base.faces.size())) {
            throw std::invalid_argument("assemble: face id " + std::to_string(fid) +
                                        " not in base complex");
        }
        (void)G;
    }

    AssembledLocus L;
    L.base = base;
    L.face_graphs = face_graphs;

    // Face-interior spine vertices first.
    std::map<std::pair<int, int>, int> spine_to_locus;  // (face, spine vertex) -> id
    for (const auto& [fid, G] : face_graphs) {
        for (const SpineVertex& sv : G.vertices) {
            LocusVertex lv;
            lv.id = static_cast<int>(L.vertices.size());
            lv.type = FibreType::II;
            lv.face = fid;
            lv.spine_vertex = sv.id;
            lv.pos = sv.pos;
            spine_to_locus[{fid, sv.id}] = lv.id;
            L.vertices.push_back(std::move(lv));
        }
    }

    // Exit parameters of every leg, grouped by base edge then face.
    std::map<int, std::map<int, std::vector<LegExit>>> exits;  // edge -> face -> legs
    for (const auto& [fid, G] : face_graphs) {
        for (std::size_t li = 0; li < G.legs.size(); ++li) {
            const SpineLeg& leg = G.legs[li];
            const int be = base.faces[fid].edge_to_base[leg.boundary_edge];
            exits[be][fid].push_back({leg_exit_param(base, fid, leg), static_cast<int>(li)});
        }
    }

    // Per base edge: sort each face's exits, check the counts agree across
    // every incident face, and mint one junction vertex per matched rank.
    std::map<std::pair<int, int>, int> leg_junction;  // (face, leg index) -> vertex id
    for (auto& [be, by_face] : exits) {
        for (auto& [fid, v] : by_face) {
            std::sort(v.begin(), v.end(),
                      [](const LegExit& a, const LegExit& b) { return a.param < b.param; });
            for (std::size_t i = 1; i < v.size(); ++i) {
                if (v[i].param == v[i - 1].param) {
                    throw OrientationMismatch(
                        "two legs of face " + std::to_string(fid) +
                        " exit base edge " + std::to_string(be) +
                        " at the same affine parameter");
                }
            }
        }
        const std::vector<int>& inc = base.faces_of_edge[be];
        std::size_t count = 0;
        bool first = true;
        for (int fid : inc) {
            const auto it = by_face.find(fid);
            const std::size_t c = (it == by_face.end()) ? 0 : it->second.size();
            if (first) {
                count = c;
                first = false;
            } else if (c != count) {
                throw LegCountMismatch("base edge " + std::to_string(be) + " receives " +
                                       std::to_string(count) + " and " + std::to_string(c) +
                                       " legs from different incident faces");
            }
        }
        if (count == 0) continue;
        if (inc.size() < 2) continue;  // single-face edge: legs stay dangling

        for (std::size_t r = 0; r < count; ++r) {
            LocusVertex jv;
            jv.id = static_cast<int>(L.vertices.size());
            // Only a 3-valent junction is a generic type III point; any other
            // valence is a degenerate configuration and must be retyped (or
            // resolved by a move) before counting.
            jv.type = (inc.size() == 3) ? FibreType::III : FibreType::Generic;
            jv.base_edge = be;
            jv.slot = static_cast<int>(r);
            jv.edge_param = by_face.begin()->second[r].param;
            for (int fid : inc) {
                leg_junction[{fid, by_face[fid][r].leg_index}] = jv.id;
            }
            L.vertices.push_back(std::move(jv));
        }
    }

    // Interior spine edges, then leg edges into their junctions.
    for (const auto& [fid, G] : face_graphs) {
        for (const SpineEdge& se : G.edges) {
            LocusEdge le;
            le.id = static_cast<int>(L.edges.size());
            le.u = spine_to_locus.at({fid, se.u});
            le.v = spine_to_locus.at({fid, se.v});
            le.face = fid;
            le.dir = se.dir;
            le.weight = se.weight;
            L.edges.push_back(std::move(le));
        }
    }
    for (const auto& [fid, G] : face_graphs) {
        for (std::size_t li = 0; li < G.legs.size(); ++li) {
            const SpineLeg& leg = G.legs[li];
            LocusEdge le;
            le.id = static_cast<int>(L.edges.size());
            le.u = spine_to_locus.at({fid, leg.v});
            const auto it = leg_junction.find({fid, static_cast<int>(li)});
            le.v = (it == leg_junction.end()) ? -1 : it->second;
            le.face = fid;
            le.from_leg = true;
            le.dir = leg.dir;
            le.weight = leg.weight;
            L.edges.push_back(std::move(le));
        }
    }
    return L;
}

int locus_valence(const AssembledLocus& L, int vertex_id) {
    int val = 0;
    for (const LocusEdge& e : L.edges) {
        if (e.u == vertex_id) ++val;
        if (e.v == vertex_id) ++val;
    }
    return val;
}

int locus_betti1(const AssembledLocus& L) {
    std::vector<int> parent(L.vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    const auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int bounded = 0;
    for (const LocusEdge& e : L.edges) {
        if (e.v < 0) continue;
        ++bounded;
        parent[find(e.u)] = find(e.v);
    }
    std::set<int> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return bounded - static_cast<int>(L.vertices.size()) + static_cast<int>(roots.size());
}

VertexCounts classify_vertices(const AssembledLocus& L) {
    VertexCounts c;
    c.type_i_edges = static_cast<long long>(L.edges.size());
    for (const LocusVertex& v : L.vertices) {
        switch (v.type) {
            case FibreType::II:
                ++c.n_ii;
                break;
            case FibreType::III:
                ++c.n_iii;
                break;
            case FibreType::III5:
            case FibreType::II5x5:
                break;  // composite labels pass through uncounted
            default:
                throw UntypedVertex("locus vertex " + std::to_string(v.id) +
                                    " has no fibre type");
        }
    }
    return c;
}

FibrationDatum assign_monodromy(const AssembledLocus& L) {
    FibrationDatum F;
    F.locus = L;
    F.vertex_triples.resize(L.vertices.size());
    for (const LocusVertex& v : L.vertices) {
        if (v.type == FibreType::Generic || v.type == FibreType::I) {
            throw UntypedVertex("locus vertex " + std::to_string(v.id) +
                                " has no fibre type");
        }
        const int val = locus_valence(L, v.id);
        if (val != 3) {
            throw NonTrivalentVertex("locus vertex " + std::to_string(v.id) +
                                     " has valence " + std::to_string(val));
        }
        F.vertex_triples[v.id] = standard_triple(v.type);
    }
    F.edge_monodromy.assign(L.edges.size(), single_leg_monodromy());
    return F;
}

long long euler_characteristic(const FibrationDatum& F) {
    const VertexCounts c = classify_vertices(F.locus);
    return c.n_iii - c.n_ii;
}

}  // namespace tfib
