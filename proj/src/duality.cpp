#include "torusfib/duality.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace tfib {

FibreType dual_fibre_type(FibreType t) {
    switch (t) {
        case FibreType::II:
            return FibreType::III;
        case FibreType::III:
            return FibreType::II;
        case FibreType::III5:
            return FibreType::II5x5;
        case FibreType::II5x5:
            return FibreType::III5;
        default:
            return t;
    }
}

MonodromyTriple dualize(const MonodromyTriple& t) {
    return {dualize(t.T3), dualize(t.T2), dualize(t.T1)};
}

namespace {

void validate_datum(const FibrationDatum& F) {
    if (F.edge_monodromy.size() != F.locus.edges.size()) {
        throw InconsistentInput("edge monodromy count does not match edge count");
    }
    if (F.vertex_triples.size() != F.locus.vertices.size()) {
        throw InconsistentInput("vertex triple count does not match vertex count");
    }
    for (const Mat3& m : F.edge_monodromy) {
        if (!is_unimodular(m)) {
            throw InconsistentInput("edge monodromy matrix is not unimodular");
        }
    }
    for (std::size_t v = 0; v < F.vertex_triples.size(); ++v) {
        const auto& t = F.vertex_triples[v];
        if (!t) {
            throw InconsistentInput("vertex " + std::to_string(v) + " carries no triple");
        }
        if (!is_unimodular(t->T1) || !is_unimodular(t->T2) || !is_unimodular(t->T3)) {
            throw InconsistentInput("vertex " + std::to_string(v) +
                                    " triple is not unimodular");
        }
        if (!vertex_consistent(t->T1, t->T2, t->T3)) {
            throw InconsistentInput("vertex " + std::to_string(v) +
                                    " triple does not compose to the identity");
        }
    }
}

}  // namespace

FibrationDatum dualize_fibration(const FibrationDatum& F) {
    validate_datum(F);
    FibrationDatum D = F;
    for (LocusVertex& v : D.locus.vertices) v.type = dual_fibre_type(v.type);
    for (Mat3& m : D.edge_monodromy) m = dualize(m);
    for (auto& t : D.vertex_triples) t = dualize(*t);
    return D;
}

namespace {

constexpr std::size_t kMessageCap = 20;
constexpr int kConjugacyBudget = 50000;

void note(MirrorReport& r, const std::string& msg) {
    if (r.messages.size() < kMessageCap) r.messages.push_back(msg);
}

std::pair<int, int> sorted_pair(int a, int b) {
    return {std::min(a, b), std::max(a, b)};
}

const char* type_word(FibreType t) {
    switch (t) {
        case FibreType::Generic:
            return "generic";
        case FibreType::I:
            return "I";
        case FibreType::II:
            return "II";
        case FibreType::III:
            return "III";
        case FibreType::III5:
            return "III5";
        case FibreType::II5x5:
            return "II5x5";
    }
    return "?";
}

}  // namespace

MirrorReport verify_mirror_pair(const FibrationDatum& F, const FibrationDatum& G,
                                const std::vector<int>& iso) {
    MirrorReport r;
    const std::size_t nf = F.locus.vertices.size();
    const std::size_t ng = G.locus.vertices.size();

    // The correspondence must be a bijection before anything else makes sense.
    if (iso.size() != nf || nf != ng) {
        ++r.structure_violations;
        note(r, "vertex correspondence has the wrong size");
        return r;
    }
    std::vector<char> hit(ng, 0);
    for (std::size_t v = 0; v < nf; ++v) {
        const int w = iso[v];
        if (w < 0 || w >= static_cast<int>(ng) || hit[w]) {
            ++r.structure_violations;
            note(r, "vertex correspondence is not a bijection at vertex " +
                        std::to_string(v));
            return r;
        }
        hit[w] = 1;
    }

    // Edge multisets must match under the correspondence (dangling ends map
    // to dangling ends).
    std::map<std::pair<int, int>, int> g_edges;
    std::map<std::pair<int, int>, std::vector<const Mat3*>> g_edge_mats;
    for (const LocusEdge& e : G.locus.edges) {
        const auto key = sorted_pair(e.u, e.v);
        g_edges[key]++;
        if (e.id < static_cast<int>(G.edge_monodromy.size())) {
            g_edge_mats[key].push_back(&G.edge_monodromy[e.id]);
        }
    }
    if (F.locus.edges.size() != G.locus.edges.size()) {
        ++r.structure_violations;
        note(r, "edge counts differ");
    }
    std::map<std::pair<int, int>, int> needed;
    for (const LocusEdge& e : F.locus.edges) {
        const int mu = iso[e.u];
        const int mv = (e.v < 0) ? -1 : iso[e.v];
        needed[sorted_pair(mu, mv)]++;
    }
    for (const auto& [key, n] : needed) {
        const auto it = g_edges.find(key);
        const int have = (it == g_edges.end()) ? 0 : it->second;
        if (have != n) {
            r.structure_violations += std::abs(have - n);
            note(r, "edge between images of " + std::to_string(key.first) + " and " +
                        std::to_string(key.second) + " multiplicity " +
                        std::to_string(have) + ", expected " + std::to_string(n));
        }
    }

    // Fibre types must be swapped, and where they are, the vertex triples
    // must be conjugate to the dualized partner triple.
    for (std::size_t v = 0; v < nf; ++v) {
        const FibreType ft = F.locus.vertices[v].type;
        const FibreType gt = G.locus.vertices[iso[v]].type;
        if (dual_fibre_type(ft) != gt) {
            ++r.type_violations;
            note(r, "vertex " + std::to_string(v) + " type " + type_word(ft) +
                        " maps to type " + type_word(gt));
            continue;
        }
        const auto& tf = (v < F.vertex_triples.size()) ? F.vertex_triples[v]
                                                       : std::optional<MonodromyTriple>{};
        const auto& tg = (iso[v] < static_cast<int>(G.vertex_triples.size()))
                             ? G.vertex_triples[iso[v]]
                             : std::optional<MonodromyTriple>{};
        if (!tf != !tg) {
            ++r.monodromy_violations;
            note(r, "vertex " + std::to_string(v) + " has a triple on one side only");
            continue;
        }
        if (!tf) continue;
        if (!conjugating_matrix(dualize(*tf), *tg, kConjugacyBudget)) {
            ++r.monodromy_violations;
            note(r, "vertex " + std::to_string(v) +
                        " triple is not conjugate to the dualized partner");
        }
    }

    // Edge monodromy: every edge's dualized matrix must be conjugate to the
    // matrix of some partner edge with the matching endpoints.
    if (F.edge_monodromy.size() == F.locus.edges.size() &&
        G.edge_monodromy.size() == G.locus.edges.size()) {
        for (const LocusEdge& e : F.locus.edges) {
            const int mu = iso[e.u];
            const int mv = (e.v < 0) ? -1 : iso[e.v];
            const auto it = g_edge_mats.find(sorted_pair(mu, mv));
            if (it == g_edge_mats.end()) continue;  // already a structure violation
            const Mat3 want = dualize(F.edge_monodromy[e.id]);
            bool found = false;
            for (const Mat3* m : it->second) {
                if (conjugating_matrix(want, *m, kConjugacyBudget)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                ++r.monodromy_violations;
                note(r, "edge " + std::to_string(e.id) +
                            " monodromy is not conjugate to any partner edge");
            }
        }
    }

    r.ok = r.structure_violations == 0 && r.type_violations == 0 &&
           r.monodromy_violations == 0;
    return r;
}

}  // namespace tfib
