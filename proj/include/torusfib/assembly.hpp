#pragma once

// Gluing per-2-face spine graphs over the 2-skeleton of a polytope boundary
// into one singular-locus graph: junction points on shared base edges are
// matched in affine order, face-interior spine vertices are typed II and
// junctions III, and the standard monodromy data is attached per edge and
// per 3-valent vertex.  The Euler characteristic of the fibred space is the
// stratified count nIII - nII.

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "torusfib/lattice.hpp"
#include "torusfib/monodromy.hpp"
#include "torusfib/spine.hpp"

namespace tfib {

// One 2-face of the base with its own polygon chart and the correspondence
// back to base vertices and edges.
struct BaseFaceChart {
    LatticePolytope polygon;            // 2-dimensional
    std::vector<int> base_vertices;     // base vertex id per polygon vertex index
    std::vector<int> edge_to_base;      // polygon boundary-edge index -> base edge id
};

// Combinatorial 2-skeleton of the base, with per-edge incidence and the
// cyclic order of 2-faces around every edge (adjacent = sharing a 3-face).
struct BaseComplex {
    LatticePolytope polytope;                // the source polytope
    std::vector<IVec> vertices;              // canonical ambient coordinates
    std::vector<std::array<int, 2>> edges;   // sorted base vertex id pairs
    std::vector<BaseFaceChart> faces;
    std::vector<std::vector<int>> faces_of_edge;   // edge id -> incident faces
    std::vector<std::vector<int>> edge_face_cycles;  // same faces, in cyclic order
};

// Reads the 2-skeleton of a polytope of dimension >= 3.
BaseComplex base_from_polytope(const LatticePolytope& P);

struct LocusVertex {
    int id = 0;
    FibreType type = FibreType::Generic;
    int face = -1;          // spine vertices: base face id
    int spine_vertex = -1;  // index in that face's graph
    QVec pos;               // spine vertices: chart position
    int base_edge = -1;     // junctions: base edge id
    int slot = -1;          // junctions: affine rank along the edge
    Rat edge_param;         // junctions: affine position in [0, 1]
};

struct LocusEdge {
    int id = 0;
    int u = 0;              // locus vertex id
    int v = -1;             // locus vertex id; -1 for an unglued leg
    int face = -1;          // carrying base face; -1 for cross-face strands
    bool from_leg = false;  // produced from a spine leg
    IVec dir;               // chart direction u -> v (empty for strands)
    Int weight = 1;
    // Conifold-site markers: the (base edge, slot) a strand or a resolved
    // connecting edge belongs to, the rho3-level plane label of a smoothed
    // strand (the two strands of one site must differ), and the affine
    // parameter of the site on its base edge, carried through moves.
    int site_edge = -1;
    int site_slot = -1;
    int strand_plane = -1;
    Rat site_param;
};

struct AssembledLocus {
    BaseComplex base;
    std::map<int, SpineGraph> face_graphs;  // assembly input, kept for reference
    std::vector<LocusVertex> vertices;      // id == index
    std::vector<LocusEdge> edges;           // id == index
};

// Glues one spine graph per base face.  Junctions on a base edge are matched
// across its incident faces by affine order along the edge; counts must
// agree (LegCountMismatch) and the face charts must identify edge endpoints
// consistently (OrientationMismatch).
AssembledLocus assemble(const BaseComplex& base, const std::map<int, SpineGraph>& face_graphs);

struct VertexCounts {
    long long type_i_edges = 0;  // 1-dimensional strata
    long long n_ii = 0;
    long long n_iii = 0;
};

// Exact counts; composite labels pass through uncounted; Generic vertices
// raise UntypedVertex.
VertexCounts classify_vertices(const AssembledLocus& L);

struct FibrationDatum {
    AssembledLocus locus;
    std::vector<Mat3> edge_monodromy;  // per locus edge, oriented u -> v
    std::vector<std::optional<MonodromyTriple>> vertex_triples;  // per vertex
};

// Attaches the standard triple (in a local basis) at every 3-valent typed
// vertex and the standard unipotent matrix along every edge.
FibrationDatum assign_monodromy(const AssembledLocus& L);

// nIII - nII.
long long euler_characteristic(const FibrationDatum& F);

// Valence of a locus vertex (edges plus unglued leg stubs).
int locus_valence(const AssembledLocus& L, int vertex_id);

// First Betti number of the bounded locus graph: bounded edges minus
// vertices plus connected components (dangling stubs ignored).
int locus_betti1(const AssembledLocus& L);

}  // namespace tfib
