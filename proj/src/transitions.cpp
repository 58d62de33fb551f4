#include "torusfib/transitions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

namespace tfib {

namespace {

// ---- exact angular order of plane directions --------------------------------

// 0 for angles in [0, pi) measured from (1, 0), 1 for [pi, 2pi)
int half_plane(const IVec& d) {
    return (d[1] > 0 || (d[1] == 0 && d[0] > 0)) ? 0 : 1;
}

Int cross(const IVec& a, const IVec& b) { return a[0] * b[1] - a[1] * b[0]; }

// strict counterclockwise order starting at direction (1, 0)
bool angle_less(const IVec& a, const IVec& b) {
    const int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

bool same_ray(const IVec& a, const IVec& b) {
    return half_plane(a) == half_plane(b) && cross(a, b) == 0;
}

// One outer connection of a flopped edge's endpoint: the attachment edge,
// the endpoint it currently sits at, which endpoint field holds it, and its
// direction pointing away from that endpoint.
struct Attachment {
    int edge = -1;
    int owner = -1;
    bool at_u_field = true;
    IVec away;
    Int weight = 1;
};

}  // namespace

AssembledLocus flop_move(const AssembledLocus& L, int edge_id) {
    if (edge_id < 0 || edge_id >= static_cast<int>(L.edges.size())) {
        throw NotFloppable("no edge with id " + std::to_string(edge_id));
    }
    const LocusEdge& e = L.edges[edge_id];
    if (e.from_leg || e.face < 0 || e.v < 0) {
        throw NotFloppable("edge " + std::to_string(edge_id) +
                           " is not a bounded interior face edge");
    }
    const int u = e.u, v = e.v;
    if (u == v) throw NotFloppable("edge " + std::to_string(edge_id) + " is a loop");
    for (int x : {u, v}) {
        if (L.vertices[x].face != e.face) {
            throw NotFloppable("endpoint " + std::to_string(x) +
                               " does not lie in the edge's face chart");
        }
        if (locus_valence(L, x) != 3) {
            throw NotFloppable("endpoint " + std::to_string(x) + " is not 3-valent");
        }
    }

    std::vector<Attachment> items;
    for (const LocusEdge& g : L.edges) {
        if (g.id == edge_id) continue;
        for (int x : {u, v}) {
            if (g.u == x) {
                items.push_back({g.id, x, true, g.dir, g.weight});
            } else if (g.v == x) {
                items.push_back({g.id, x, false, g.dir.empty() ? IVec{} : neg(g.dir),
                                 g.weight});
            }
        }
    }
    if (items.size() != 4) throw NotFloppable("expected four outer attachments");
    for (const Attachment& a : items) {
        if (a.away.size() != 2 || is_zero(a.away)) {
            throw NotFloppable("attachment edge " + std::to_string(a.edge) +
                               " has no usable direction");
        }
    }

    std::sort(items.begin(), items.end(), [](const Attachment& a, const Attachment& b) {
        return angle_less(a.away, b.away);
    });
    for (int i = 0; i < 4; ++i) {
        if (same_ray(items[i].away, items[(i + 1) % 4].away)) {
            throw NotFloppable("two outer attachments share a direction");
        }
    }

    // the endpoint's current pair must be adjacent in cyclic order
    // (the convex-quadrilateral configuration)
    std::vector<int> at_u;
    for (int i = 0; i < 4; ++i) {
        if (items[i].owner == u) at_u.push_back(i);
    }
    if (at_u.size() != 2) throw NotFloppable("attachments must split two and two");
    const int lo = at_u[0], hi = at_u[1];
    if (!(hi == lo + 1 || (lo == 0 && hi == 3))) {
        throw NotFloppable("outer attachments are in crossing position");
    }

    // Re-pair the other adjacent way: {i0, i0+1} / {i0+2, i0+3} becomes
    // {i0+1, i0+2} / {i0+3, i0}.  The endpoint holding the cyclically first
    // direction keeps it, which makes the move an exact involution.
    const int i0 = (lo == 0 && hi == 3) ? 3 : lo;
    const std::array<int, 2> pair_a{(i0 + 1) % 4, (i0 + 2) % 4};
    const std::array<int, 2> pair_b{(i0 + 3) % 4, i0};
    const int holder = items[0].owner;
    const bool a_has_first = (pair_a[0] == 0 || pair_a[1] == 0);
    const std::array<int, 2>& holder_pair = a_has_first ? pair_a : pair_b;
    const std::array<int, 2>& other_pair = a_has_first ? pair_b : pair_a;
    const std::array<int, 2>& u_pair = (holder == u) ? holder_pair : other_pair;
    const std::array<int, 2>& v_pair = (holder == u) ? other_pair : holder_pair;

    AssembledLocus R = L;
    for (int idx : u_pair) {
        LocusEdge& g = R.edges[items[idx].edge];
        (items[idx].at_u_field ? g.u : g.v) = u;
    }
    for (int idx : v_pair) {
        LocusEdge& g = R.edges[items[idx].edge];
        (items[idx].at_u_field ? g.u : g.v) = v;
    }

    // rebalance the connecting edge against u's new pair; its endpoints and
    // the carried positions stay as they are (a combinatorial rewrite)
    const auto pair_sum = [&](const std::array<int, 2>& pair) {
        IVec sum{Int(0), Int(0)};
        for (int idx : pair) {
            sum = add(sum, scale(items[idx].weight, items[idx].away));
        }
        return sum;
    };
    const IVec sum_u = pair_sum(u_pair);
    if (is_zero(sum_u) || is_zero(pair_sum(v_pair))) {
        throw NotFloppable("re-paired attachments balance to zero");
    }
    LocusEdge& ce = R.edges[edge_id];
    ce.dir = primitive(neg(sum_u));
    ce.weight = content(sum_u);
    return R;
}

// ---- conifold sites ----------------------------------------------------------

namespace {

struct SiteView {
    SiteState state = SiteState::Degenerate;
    std::vector<int> verts;            // site vertices (1 or 2)
    int connect = -1;                  // resolved state: the short edge
    std::array<int, 2> strands{-1, -1};
};

std::optional<SiteView> inspect_site(const AssembledLocus& L, int be, int slot) {
    SiteView s;
    for (const LocusVertex& v : L.vertices) {
        if (v.base_edge == be && v.slot == slot) s.verts.push_back(v.id);
    }
    std::vector<int> strand_edges;
    for (const LocusEdge& e : L.edges) {
        if (e.site_edge == be && e.site_slot == slot && e.strand_plane >= 0) {
            strand_edges.push_back(e.id);
        }
    }
    if (s.verts.size() == 1 && strand_edges.empty()) {
        if (locus_valence(L, s.verts[0]) != 4) return std::nullopt;
        s.state = SiteState::Degenerate;
        return s;
    }
    if (s.verts.size() == 2 && strand_edges.empty()) {
        for (const LocusEdge& e : L.edges) {
            if ((e.u == s.verts[0] && e.v == s.verts[1]) ||
                (e.u == s.verts[1] && e.v == s.verts[0])) {
                s.connect = e.id;
            }
        }
        if (s.connect < 0) return std::nullopt;
        if (locus_valence(L, s.verts[0]) != 3 || locus_valence(L, s.verts[1]) != 3) {
            return std::nullopt;
        }
        s.state = SiteState::Resolved;
        return s;
    }
    if (s.verts.empty() && strand_edges.size() == 2) {
        s.state = SiteState::Smoothed;
        s.strands = {strand_edges[0], strand_edges[1]};
        return s;
    }
    return std::nullopt;
}

// One of the four outer connections of a conifold site: the spine vertex it
// reaches and the decoration to rebuild the connection with.
struct Port {
    int outer = -1;
    IVec dir;  // chart direction outer -> site; empty when the source state
               // (a cross-face strand) carries no chart direction
    Int weight = 1;
};

}  // namespace

SiteState conifold_site_state(const AssembledLocus& L, int base_edge, int slot) {
    const auto s = inspect_site(L, base_edge, slot);
    if (!s) {
        throw WrongState("no conifold site at base edge " + std::to_string(base_edge) +
                         ", slot " + std::to_string(slot));
    }
    return s->state;
}

std::vector<ConifoldSite> conifold_sites(const AssembledLocus& L) {
    std::set<std::pair<int, int>> keys;
    for (const LocusVertex& v : L.vertices) {
        if (v.base_edge >= 0 && v.slot >= 0) keys.insert({v.base_edge, v.slot});
    }
    for (const LocusEdge& e : L.edges) {
        if (e.site_edge >= 0 && e.strand_plane >= 0) keys.insert({e.site_edge, e.site_slot});
    }
    std::vector<ConifoldSite> out;
    for (const auto& [be, slot] : keys) {
        const auto s = inspect_site(L, be, slot);
        if (s) out.push_back({be, slot, s->state});
    }
    return out;
}

AssembledLocus conifold_move(const AssembledLocus& L, int base_edge, int slot,
                             ConifoldDirection direction,
                             std::optional<std::pair<FibreType, FibreType>> resolved_types) {
    if (resolved_types && direction != ConifoldDirection::Resolve) {
        throw std::invalid_argument("resolved vertex types apply only to a resolve move");
    }
    const auto site = inspect_site(L, base_edge, slot);
    if (!site) {
        throw WrongState("no conifold site at base edge " + std::to_string(base_edge) +
                         ", slot " + std::to_string(slot));
    }
    const SiteState target = direction == ConifoldDirection::Resolve ? SiteState::Resolved
                             : direction == ConifoldDirection::Smooth ? SiteState::Smoothed
                                                                      : SiteState::Degenerate;
    if (site->state == target) {
        throw WrongState("site at base edge " + std::to_string(base_edge) + ", slot " +
                         std::to_string(slot) + " is already in the requested state");
    }

    FibreType type_a = FibreType::III, type_b = FibreType::III;
    if (resolved_types) {
        type_a = resolved_types->first;
        type_b = resolved_types->second;
        int sum = 0;
        try {
            sum = euler_number(type_a) + euler_number(type_b);
        } catch (const CompositeTypeUndefined&) {
            throw EulerBookkeepingViolated("resolved vertex types " + to_string(type_a) +
                                           " + " + to_string(type_b) +
                                           " have no defined Euler numbers");
        }
        if (sum != 2) {
            throw EulerBookkeepingViolated("resolved vertex types " + to_string(type_a) +
                                           " + " + to_string(type_b) +
                                           " change the Euler count");
        }
    }

    if (base_edge < 0 || base_edge >= static_cast<int>(L.base.edge_face_cycles.size())) {
        throw WrongState("base edge " + std::to_string(base_edge) +
                         " is outside the base complex");
    }
    const std::vector<int>& cyc = L.base.edge_face_cycles[base_edge];
    if (cyc.size() != 4) {
        throw WrongState("base edge " + std::to_string(base_edge) +
                         " does not carry exactly four faces");
    }

    // ---- dismantle the source state, collecting one port per incident face
    std::vector<char> vdead(L.vertices.size(), 0);
    std::vector<char> edead(L.edges.size(), 0);
    std::map<int, Port> ports;
    Rat param;

    const auto add_port = [&](int face, const Port& p) {
        if (face < 0) {
            throw WrongState("site connected to a vertex outside any face chart");
        }
        if (ports.count(face)) {
            throw WrongState("two site connections through face " + std::to_string(face));
        }
        ports[face] = p;
    };
    const auto port_from_edge = [&](const LocusEdge& g, int site_vertex) {
        const int outer = (g.u == site_vertex) ? g.v : g.u;
        if (outer < 0) throw WrongState("site connection with a dangling end");
        Port p;
        p.outer = outer;
        p.weight = g.weight;
        if (!g.dir.empty()) {
            p.dir = (g.u == outer) ? g.dir : neg(g.dir);  // normalize outer -> site
        }
        add_port(L.vertices[outer].face, p);
        edead[g.id] = 1;
    };

    switch (site->state) {
        case SiteState::Degenerate: {
            const int x = site->verts[0];
            param = L.vertices[x].edge_param;
            vdead[x] = 1;
            for (const LocusEdge& g : L.edges) {
                if (g.u == x || g.v == x) port_from_edge(g, x);
            }
            break;
        }
        case SiteState::Resolved: {
            param = L.vertices[site->verts[0]].edge_param;
            for (int x : site->verts) vdead[x] = 1;
            edead[site->connect] = 1;
            for (int x : site->verts) {
                for (const LocusEdge& g : L.edges) {
                    if (g.id == site->connect) continue;
                    if (g.u == x || g.v == x) port_from_edge(g, x);
                }
            }
            break;
        }
        case SiteState::Smoothed: {
            for (int sid : site->strands) {
                const LocusEdge& g = L.edges[sid];
                param = g.site_param;
                edead[g.id] = 1;
                for (int end : {g.u, g.v}) {
                    if (end < 0) throw WrongState("strand with a dangling end");
                    Port p;
                    p.outer = end;
                    p.weight = g.weight;
                    add_port(L.vertices[end].face, p);
                }
            }
            break;
        }
    }

    if (ports.size() != 4) {
        throw WrongState("site has " + std::to_string(ports.size()) +
                         " connections, expected four");
    }
    for (int f : cyc) {
        if (!ports.count(f)) {
            throw WrongState("no site connection through face " + std::to_string(f));
        }
    }

    // ---- rebuild in the target state
    AssembledLocus R = L;
    const auto new_vertex = [&](FibreType t) {
        LocusVertex w;
        w.id = static_cast<int>(R.vertices.size());
        w.type = t;
        w.base_edge = base_edge;
        w.slot = slot;
        w.edge_param = param;
        R.vertices.push_back(w);
        vdead.push_back(0);
        return w.id;
    };
    const auto new_leg = [&](const Port& p, int site_vertex) {
        LocusEdge g;
        g.id = static_cast<int>(R.edges.size());
        g.u = p.outer;
        g.v = site_vertex;
        g.face = L.vertices[p.outer].face;
        g.from_leg = true;
        g.dir = p.dir;  // empty when the source state carried no direction
        g.weight = p.weight;
        R.edges.push_back(g);
        edead.push_back(0);
    };

    switch (target) {
        case SiteState::Degenerate: {
            const int x = new_vertex(FibreType::Generic);
            for (int f : cyc) new_leg(ports[f], x);
            break;
        }
        case SiteState::Resolved: {
            // adjacent pairing around the facet cycle
            const int a = new_vertex(type_a);
            const int b = new_vertex(type_b);
            new_leg(ports[cyc[0]], a);
            new_leg(ports[cyc[1]], a);
            new_leg(ports[cyc[2]], b);
            new_leg(ports[cyc[3]], b);
            LocusEdge g;
            g.id = static_cast<int>(R.edges.size());
            g.u = a;
            g.v = b;
            g.site_edge = base_edge;
            g.site_slot = slot;
            g.site_param = param;
            R.edges.push_back(g);
            edead.push_back(0);
            break;
        }
        case SiteState::Smoothed: {
            // opposite pairing around the facet cycle, one level plane each
            std::set<int> outers;
            for (int f : cyc) outers.insert(ports[f].outer);
            if (outers.size() != 4) {
                throw WrongState("smoothing would make the two strands share a vertex");
            }
            for (int plane : {0, 1}) {
                const Port& p = ports[cyc[plane]];
                const Port& q = ports[cyc[plane + 2]];
                if (p.weight != q.weight) {
                    throw WrongState("opposite site connections carry different weights");
                }
                LocusEdge g;
                g.id = static_cast<int>(R.edges.size());
                g.u = p.outer;
                g.v = q.outer;
                g.weight = p.weight;
                g.site_edge = base_edge;
                g.site_slot = slot;
                g.strand_plane = plane;
                g.site_param = param;
                R.edges.push_back(g);
                edead.push_back(0);
            }
            break;
        }
    }

    // ---- renumber so that id == index again
    std::vector<int> vmap(R.vertices.size(), -1);
    std::vector<LocusVertex> nv;
    nv.reserve(R.vertices.size());
    for (const LocusVertex& w : R.vertices) {
        if (vdead[w.id]) continue;
        vmap[w.id] = static_cast<int>(nv.size());
        nv.push_back(w);
        nv.back().id = vmap[w.id];
    }
    std::vector<LocusEdge> ne;
    ne.reserve(R.edges.size());
    for (const LocusEdge& g : R.edges) {
        if (edead[g.id]) continue;
        LocusEdge h = g;
        h.id = static_cast<int>(ne.size());
        h.u = vmap[g.u];
        h.v = (g.v < 0) ? -1 : vmap[g.v];
        ne.push_back(h);
    }
    R.vertices = std::move(nv);
    R.edges = std::move(ne);
    return R;
}

HodgeDelta hodge_bookkeeping(const TransitionSpec& spec) {
    if (spec.p < 0 || spec.alpha < 0 || spec.alpha > spec.p) {
        throw InvalidSpec("need 0 <= alpha <= p, got p = " + std::to_string(spec.p) +
                          ", alpha = " + std::to_string(spec.alpha));
    }
    if (!spec.sites.empty() && spec.sites.size() != static_cast<std::size_t>(spec.p)) {
        throw InvalidSpec("site list has " + std::to_string(spec.sites.size()) +
                          " entries for p = " + std::to_string(spec.p));
    }
    return {-static_cast<long long>(spec.alpha),
            static_cast<long long>(spec.p - spec.alpha),
            -2LL * spec.p};
}

}  // namespace tfib
