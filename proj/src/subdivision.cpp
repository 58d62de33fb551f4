#include "torusfib/subdivision.hpp"

#include <algorithm>
#include <set>

#include "torusfib/errors.hpp"

namespace tfib {

namespace {

Int cross(const IVec& o, const IVec& a, const IVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew monotone chain; returns extreme points in counterclockwise order.
IMat convex_hull_ccw(IMat pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;
    IMat hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (int i = n - 2, lo = k + 1; i >= 0; --i) {  // upper chain
        while (k >= lo && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// The polygon's lattice points in intrinsic coordinates together with their
// weights, validated against the weight domain.
std::pair<IMat, QVec> weighted_points(const LatticePolytope& polygon, const WeightFunction& w) {
    if (polygon.dim() != 2)
        throw std::invalid_argument("regular_subdivision: polygon must be two-dimensional");
    IMat ambient = polygon.integral_points();
    std::map<IVec, Rat> canon;
    for (const auto& [key, val] : w.values) {
        IVec c = polygon.lattice().canonical(key);
        if (!canon.emplace(std::move(c), val).second)
            throw DomainMismatch("duplicate weight entry for one lattice point class");
    }
    if (canon.size() != ambient.size())
        throw DomainMismatch("weight domain has " + std::to_string(canon.size()) +
                             " points, polygon has " + std::to_string(ambient.size()));
    IMat pts;
    QVec heights;
    for (const IVec& p : ambient) {
        auto it = canon.find(p);
        if (it == canon.end())
            throw DomainMismatch("weight domain does not cover every lattice point");
        auto y = polygon.to_intrinsic(p);
        pts.push_back(*y);
        heights.push_back(it->second);
    }
    return {pts, heights};
}

std::set<IMat> cell_corner_sets(const Subdivision& S) {
    std::set<IMat> out;
    for (const Cell& c : S.cells) {
        IMat sorted = c.corners;
        std::sort(sorted.begin(), sorted.end());
        out.insert(std::move(sorted));
    }
    return out;
}

}  // namespace

std::vector<Wall> build_walls(const LatticePolytope& polygon, const std::vector<Cell>& cells) {
    std::map<std::pair<IVec, IVec>, std::vector<int>> incidence;
    for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
        const IMat& h = cells[ci].corners;
        const int m = static_cast<int>(h.size());
        for (int i = 0; i < m; ++i) {
            IVec a = h[i], b = h[(i + 1) % m];
            if (b < a) std::swap(a, b);
            incidence[{a, b}].push_back(ci);
        }
    }

    // The polygon's boundary edges (dim-1 faces) by supporting line.
    struct Support {
        IVec normal;
        Rat offset;
        int id;
    };
    std::vector<Support> supports;
    {
        int id = 0;
        for (const Face& f : polygon.face_lattice())
            if (f.dim == 1) supports.push_back({f.normal, f.offset, id++});
    }

    std::vector<Wall> walls;
    for (const auto& [key, cs] : incidence) {
        Wall wall;
        wall.u = key.first;
        wall.v = key.second;
        if (cs.size() == 2) {
            wall.cell0 = std::min(cs[0], cs[1]);
            wall.cell1 = std::max(cs[0], cs[1]);
        } else if (cs.size() == 1) {
            wall.cell0 = cs[0];
            for (const Support& s : supports)
                if (Rat(dot(s.normal, wall.u)) == s.offset &&
                    Rat(dot(s.normal, wall.v)) == s.offset) {
                    wall.boundary_edge = s.id;
                    break;
                }
            if (wall.boundary_edge < 0)
                throw DegenerateCell("wall bounds a single cell but does not lie on the polygon boundary");
        } else {
            throw DegenerateCell("wall bounds more than two cells");
        }
        walls.push_back(std::move(wall));
    }
    return walls;  // map iteration is already sorted by endpoints
}

Subdivision regular_subdivision(const LatticePolytope& polygon, const WeightFunction& w) {
    auto [pts, heights] = weighted_points(polygon, w);
    const int n = static_cast<int>(pts.size());

    // Lower hull by exhaustive plane search: for every non-collinear triple,
    // check whether its plane supports the lifted point set from below.  The
    // tight set of a supporting plane is a whole domain of linearity, so ties
    // automatically yield the coarser cell.
    std::set<std::vector<int>> tight_sets;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Int area = cross(pts[i], pts[j], pts[k]);
                if (area == 0) continue;
                // Plane z = a x + b y + c through the three lifted points.
                QMat M{{Rat(pts[i][0]), Rat(pts[i][1]), Rat(1)},
                       {Rat(pts[j][0]), Rat(pts[j][1]), Rat(1)},
                       {Rat(pts[k][0]), Rat(pts[k][1]), Rat(1)}};
                auto abc = solve_right(M, {heights[i], heights[j], heights[k]});
                if (!abc) continue;
                const Rat &a = (*abc)[0], &b = (*abc)[1], &c = (*abc)[2];
                std::vector<int> tight;
                bool lower = true;
                for (int l = 0; l < n; ++l) {
                    Rat lift = a * Rat(pts[l][0]) + b * Rat(pts[l][1]) + c;
                    if (heights[l] < lift) {
                        lower = false;
                        break;
                    }
                    if (heights[l] == lift) tight.push_back(l);
                }
                if (lower) tight_sets.insert(std::move(tight));
            }

    Subdivision S;
    S.polygon = polygon;
    for (const std::vector<int>& tight : tight_sets) {
        IMat members;
        for (int idx : tight) members.push_back(pts[idx]);
        Cell cell;
        cell.corners = convex_hull_ccw(std::move(members));
        S.cells.push_back(std::move(cell));
    }
    std::sort(S.cells.begin(), S.cells.end(),
              [](const Cell& a, const Cell& b) { return a.corners < b.corners; });
    S.walls = build_walls(polygon, S.cells);
    return S;
}

bool is_unimodular_triangulation(const Subdivision& S) {
    for (const Cell& c : S.cells) {
        if (c.corners.size() != 3) return false;
        Int area = cross(c.corners[0], c.corners[1], c.corners[2]);
        if (area != 1 && area != -1) return false;
    }
    return true;
}

bool induces(const WeightFunction& w, const Subdivision& S) {
    Subdivision R = regular_subdivision(S.polygon, w);
    return cell_corner_sets(R) == cell_corner_sets(S);
}

int find_wall(const Subdivision& S, const IVec& a, const IVec& b) {
    IVec u = a, v = b;
    if (v < u) std::swap(u, v);
    for (int i = 0; i < static_cast<int>(S.walls.size()); ++i)
        if (S.walls[i].u == u && S.walls[i].v == v) return i;
    return -1;
}

Subdivision diagonal_flip(const Subdivision& S, const Wall& wall) {
    int wi = find_wall(S, wall.u, wall.v);
    if (wi < 0) throw std::invalid_argument("diagonal_flip: wall not in subdivision");
    const Wall& W = S.walls[wi];
    if (W.cell1 < 0) throw WallOnBoundary("cannot flip a wall on the polygon boundary");
    const Cell& A = S.cells[W.cell0];
    const Cell& B = S.cells[W.cell1];
    if (A.corners.size() != 3 || B.corners.size() != 3)
        throw NonConvexQuad("flip requires two triangles around the wall");
    auto off_wall = [&](const Cell& c) -> IVec {
        for (const IVec& p : c.corners)
            if (p != W.u && p != W.v) return p;
        throw NonConvexQuad("degenerate triangle around the wall");
    };
    IVec p = off_wall(A), q = off_wall(B);
    // Strict convexity of the quadrilateral: the wall endpoints must lie
    // strictly on opposite sides of the new diagonal p-q.
    Int su = cross(p, q, W.u), sv = cross(p, q, W.v);
    if (su == 0 || sv == 0 || (su > 0) == (sv > 0))
        throw NonConvexQuad("the two triangles do not form a strictly convex quadrilateral");

    Subdivision R;
    R.polygon = S.polygon;
    for (int i = 0; i < static_cast<int>(S.cells.size()); ++i)
        if (i != W.cell0 && i != W.cell1) R.cells.push_back(S.cells[i]);
    Cell c1, c2;
    c1.corners = convex_hull_ccw({p, q, W.u});
    c2.corners = convex_hull_ccw({p, q, W.v});
    R.cells.push_back(std::move(c1));
    R.cells.push_back(std::move(c2));
    std::sort(R.cells.begin(), R.cells.end(),
              [](const Cell& a, const Cell& b) { return a.corners < b.corners; });
    R.walls = build_walls(R.polygon, R.cells);
    return R;
}

}  // namespace tfib
