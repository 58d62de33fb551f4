#pragma once

// Elementary surgeries on an assembled singular locus: the flop move, which
// re-routes one interior face edge through its 4-valent degenerate middle
// position, and the conifold move, which carries a 4-fold junction site
// between its smoothed (two disjoint strands on distinct level planes),
// degenerate (one 4-valent vertex), and resolved (two 3-valent vertices and
// a short edge) states.  Plus the Hodge-number bookkeeping of a transition
// with p nodes and alpha relations among the vanishing cycles.

#include <optional>
#include <utility>
#include <vector>

#include "torusfib/assembly.hpp"

namespace tfib {

// Re-pairs the four outer attachments of the edge's two endpoints the other
// way around their cyclic direction order, rebalancing the connecting edge.
// Requires a bounded interior edge of one face chart whose endpoints are
// distinct 3-valent face-interior vertices and whose outer attachments point
// in four pairwise distinct directions with each endpoint's pair adjacent in
// cyclic order (the convex-quadrilateral configuration); throws NotFloppable
// otherwise.  Involutive; preserves all vertex/type counts, the first Betti
// number, and the legs through every base edge.  Positions are carried
// through unchanged: the move is a combinatorial rewrite.
AssembledLocus flop_move(const AssembledLocus& L, int edge_id);

enum class SiteState { Smoothed, Degenerate, Resolved };
enum class ConifoldDirection { Resolve, Degenerate, Smooth };

struct ConifoldSite {
    int base_edge = -1;
    int slot = -1;
    SiteState state = SiteState::Degenerate;
};

// The state of the 4-fold junction site at (base_edge, slot); throws
// WrongState when nothing at that location is a conifold site.
SiteState conifold_site_state(const AssembledLocus& L, int base_edge, int slot);

// Every recognizable conifold site of L, sorted by (base_edge, slot).
std::vector<ConifoldSite> conifold_sites(const AssembledLocus& L);

// Rewrites the site into the named state.  Resolving pairs the four strands
// adjacently in the facet-adjacency cycle around the base edge (two new
// vertices, type III each by default, joined by a short edge); smoothing
// joins opposite faces of that cycle into two strands carrying distinct
// level-plane labels and sharing no vertex.  Per node, resolving from
// smoothed adds 2 vertices and smoothing removes 2, so chi(resolved) -
// chi(smoothed) = +2.  Overriding the resolved vertex types is allowed only
// when their Euler numbers still sum to +2 (EulerBookkeepingViolated
// otherwise); a move whose source state equals its target throws WrongState.
AssembledLocus conifold_move(
    const AssembledLocus& L, int base_edge, int slot, ConifoldDirection direction,
    std::optional<std::pair<FibreType, FibreType>> resolved_types = std::nullopt);

struct TransitionSpec {
    int p = 0;      // number of nodes
    int alpha = 0;  // relations among the vanishing cycles
    std::vector<std::pair<int, int>> sites;  // optional (base_edge, slot) list
};

struct HodgeDelta {
    long long dh11 = 0;
    long long dh21 = 0;
    long long dchi = 0;
};

// (-alpha, p - alpha, -2p): the Hodge-number changes for passing from the
// resolution to the smoothing.  Throws InvalidSpec unless 0 <= alpha <= p
// and any supplied site list has exactly p entries.
HodgeDelta hodge_bookkeeping(const TransitionSpec& spec);

}  // namespace tfib
