#include "torusfib/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace tfib {

// ---------------------------------------------------------------------------
// QuotientLattice
// ---------------------------------------------------------------------------

QuotientLattice::QuotientLattice(int ambient) : ambient_(ambient) {}

QuotientLattice::QuotientLattice(int ambient, const IMat& relations) : ambient_(ambient) {
    if (relations.empty()) return;
    for (const IVec& r : relations)
        if (static_cast<int>(r.size()) != ambient)
            throw std::invalid_argument("QuotientLattice: relation dimension mismatch");
    IMat sat = saturate(relations, ambient);
    if (sat.size() != relations.size())
        throw std::invalid_argument("QuotientLattice: relations not linearly independent");
    relations_ = std::move(sat);
}

namespace {

Int round_rat(const Rat& x) {
    // floor(x + 1/2)
    Rat y = x + Rat(1, 2);
    Int num = numerator(y), den = denominator(y);
    Int q = num / den;
    if (num % den < 0) q -= 1;
    return q;
}

// Enumerates all integer c with (c - center) G (c - center)^T <= bound and
// calls visit(c).  G must be positive definite.  Exact rational arithmetic.
void enum_quadratic(const QMat& G, const QVec& center, const Rat& bound,
                    const std::function<void(const std::vector<Int>&)>& visit) {
    const int r = static_cast<int>(G.size());
    // Cholesky-style outer-product form: Q(t) = sum_i d[i] (t_i + sum_{j>i} u[i][j] t_j)^2
    QMat a = G;
    QVec d(r);
    QMat u(r, QVec(r, Rat(0)));
    for (int i = 0; i < r; ++i) {
        d[i] = a[i][i];
        if (d[i] <= 0) throw std::logic_error("enum_quadratic: not positive definite");
        for (int j = i + 1; j < r; ++j) u[i][j] = a[i][j] / d[i];
        for (int k = i + 1; k < r; ++k)
            for (int l = i + 1; l < r; ++l) a[k][l] -= a[i][k] * a[i][l] / d[i];
    }
    std::vector<Int> c(r);
    // Fix coordinates from the back: at level i all t_j (j > i) are known.
    std::function<void(int, const Rat&)> rec = [&](int i, const Rat& budget) {
        if (i < 0) {
            visit(c);
            return;
        }
        // gamma_i = center_i - sum_{j>i} u[i][j] (c_j - center_j)
        Rat gamma = center[i];
        for (int j = i + 1; j < r; ++j) gamma -= u[i][j] * (Rat(c[j]) - center[j]);
        Int c0 = round_rat(gamma);
        for (int dir = 0; dir < 2; ++dir) {
            Int ci = dir == 0 ? c0 : c0 + 1;
            Int step = dir == 0 ? -1 : 1;
            while (true) {
                Rat t = Rat(ci) - gamma;
                Rat term = d[i] * t * t;
                if (term > budget) break;
                c[i] = ci;
                rec(i - 1, budget - term);
                ci += step;
            }
        }
    };
    rec(r - 1, bound);
}

}  // namespace

IVec QuotientLattice::canonical(const IVec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("QuotientLattice::canonical: dimension mismatch");
    if (relations_.empty()) return v;
    const int r = static_cast<int>(relations_.size());

    // Least-squares center c* with c* G = v R^T, G the Gram matrix of the
    // relation basis.
    QMat G(r, QVec(r));
    QVec rhs(r);
    for (int i = 0; i < r; ++i) {
        rhs[i] = Rat(dot(v, relations_[i]));
        for (int j = 0; j < r; ++j) G[i][j] = Rat(dot(relations_[i], relations_[j]));
    }
    auto center = solve_right(G, rhs);
    if (!center) throw std::logic_error("canonical: Gram matrix singular");

    // Initial candidate: rounded center.  Its L1 value bounds the search.
    auto residue = [&](const std::vector<Int>& c) {
        IVec w = v;
        for (int i = 0; i < r; ++i)
            if (c[i] != 0) w = sub(w, scale(c[i], relations_[i]));
        return w;
    };
    std::vector<Int> c0(r);
    for (int i = 0; i < r; ++i) c0[i] = round_rat((*center)[i]);
    IVec best = residue(c0);
    Int best_l1 = l1_norm(best);

    // Any w with |w|_1 <= best_l1 satisfies |w|_2^2 <= best_l1^2, so the
    // Euclidean ball of that radius contains every improving candidate.
    Rat bound = Rat(best_l1 * best_l1);
    enum_quadratic(G, *center, bound, [&](const std::vector<Int>& c) {
        IVec w = residue(c);
        Int l1 = l1_norm(w);
        if (l1 < best_l1 || (l1 == best_l1 && w > best)) {
            best_l1 = l1;
            best = w;
        }
    });
    return best;
}

bool QuotientLattice::same_class(const IVec& a, const IVec& b) const {
    if (relations_.empty()) return a == b;
    return in_lattice(relations_, sub(a, b));
}

// ---------------------------------------------------------------------------
// LatticePolytope construction
// ---------------------------------------------------------------------------

namespace {

// All size-k index subsets of {0..n-1}, visited in lexicographic order.
template <typename F>
void for_each_combination(int n, int k, F f) {
    if (k > n || k < 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

int affine_rank(const IMat& pts) {
    if (pts.size() <= 1) return 0;
    IMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    return rank(to_rat(diffs));
}

struct HyperplaneData {
    std::vector<int> tight;  // point indices on the hyperplane
};

}  // namespace

LatticePolytope LatticePolytope::from_vertices(const QuotientLattice& lat, const IMat& points) {
    if (points.empty()) throw std::invalid_argument("from_vertices: no points");
    const int n = lat.ambient();
    const int r = static_cast<int>(lat.relations().size());
    const int k = n - r;

    // Canonicalize, dedupe, sort.
    IMat pts;
    {
        std::set<IVec> seen;
        for (const IVec& p : points) {
            if (static_cast<int>(p.size()) != n)
                throw std::invalid_argument("from_vertices: point dimension mismatch");
            IVec c = lat.canonical(p);
            if (seen.insert(c).second) pts.push_back(std::move(c));
        }
        std::sort(pts.begin(), pts.end());
    }

    LatticePolytope P;
    P.lattice_ = lat;

    // Quotient chart: complete the relation basis to a unimodular matrix A;
    // x = last k coordinates of v * A^{-1}, lift x -> x * (last k rows of A).
    IMat relation_basis = lat.relations();
    UnimodularCompletion A = complete_to_unimodular(relation_basis, n);
    P.q_cols_.assign(n, IVec(k));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) P.q_cols_[i][j] = A.inverse[i][r + j];
    P.lift_rows_.assign(k, IVec(n));
    for (int i = 0; i < k; ++i) P.lift_rows_[i] = A.full[r + i];

    auto push = [&](const IVec& v) {
        IVec x(k, Int(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) x[j] += v[i] * P.q_cols_[i][j];
        return x;
    };

    IMat xs;
    for (const IVec& p : pts) xs.push_back(push(p));
    P.chart_origin_ = xs[0];

    // Direction lattice and intrinsic coordinates.
    IMat diffs;
    for (const IVec& x : xs) diffs.push_back(sub(x, P.chart_origin_));
    P.dir_basis_ = saturate(diffs, k);
    const int d = static_cast<int>(P.dir_basis_.size());
    P.dim_ = d;

    IMat ys;
    if (d == 0) {
        ys.assign(xs.size(), IVec{});
    } else {
        UnimodularCompletion A2 = complete_to_unimodular(P.dir_basis_, k);
        P.a2_inv_ = A2.inverse;
        for (const IVec& x : xs) {
            IVec rel = sub(x, P.chart_origin_);
            IVec full(k, Int(0));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) full[j] += rel[i] * A2.inverse[i][j];
            for (int j = d; j < k; ++j) assert(full[j] == 0);
            ys.push_back(IVec(full.begin(), full.begin() + d));
        }
    }

    // Lift directions to the ambient lattice (needed for dual lattices).
    P.dir_lift_.assign(d, IVec(n, Int(0)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < k; ++j)
            if (P.dir_basis_[i][j] != 0)
                P.dir_lift_[i] = add(P.dir_lift_[i], scale(P.dir_basis_[i][j], P.lift_rows_[j]));

    if (d == 0) {
        P.verts_ambient_ = pts;
        P.verts_y_ = ys;
        return P;
    }

    // Facet hyperplanes from d-subsets of all points; a point is extreme iff
    // its tight facet normals span the full intrinsic space.
    const int npts = static_cast<int>(pts.size());
    std::map<std::pair<IVec, Int>, HyperplaneData> facets;
    double estimate = 1.0;
    for (int i = 0; i < d; ++i) estimate *= static_cast<double>(npts - i) / (i + 1);
    if (estimate > 2e5)
        throw std::invalid_argument("from_vertices: too many points for this dimension");

    for_each_combination(npts, d, [&](const std::vector<int>& idx) {
        IMat diff;
        for (int i = 1; i < d; ++i) diff.push_back(sub(ys[idx[i]], ys[idx[0]]));
        IMat ker = integer_kernel(diff, d);
        if (ker.size() != 1) return;  // affinely dependent subset
        IVec nrm = ker[0];
        Int b = dot(nrm, ys[idx[0]]);
        bool any_above = false, any_below = false;
        for (int i = 0; i < npts; ++i) {
            Int s = dot(nrm, ys[i]);
            if (s > b) any_above = true;
            if (s < b) any_below = true;
        }
        if (any_above && any_below) return;
        if (any_above) {  // orient so the polytope satisfies <= b
            nrm = neg(nrm);
            b = -b;
        }
        auto& data = facets[{nrm, b}];
        if (data.tight.empty())
            for (int i = 0; i < npts; ++i)
                if (dot(nrm, ys[i]) == b) data.tight.push_back(i);
    });

    std::vector<bool> extreme(npts, false);
    for (int i = 0; i < npts; ++i) {
        IMat normals;
        for (const auto& [key, data] : facets)
            if (std::binary_search(data.tight.begin(), data.tight.end(), i))
                normals.push_back(key.first);
        if (static_cast<int>(normals.size()) >= d && rank(to_rat(normals)) == d) extreme[i] = true;
    }
    for (int i = 0; i < npts; ++i) {
        if (!extreme[i]) continue;
        P.verts_ambient_.push_back(pts[i]);
        P.verts_y_.push_back(ys[i]);
    }
    if (P.verts_ambient_.empty())
        throw std::logic_error("from_vertices: no extreme points found");
    return P;
}

// ---------------------------------------------------------------------------
// Face lattice
// ---------------------------------------------------------------------------

void LatticePolytope::build_faces() const {
    if (faces_built_) return;
    faces_built_ = true;
    faces_.clear();
    const int d = dim_;
    const int nv = static_cast<int>(verts_y_.size());

    if (d == 0) {
        faces_.push_back(Face{0, {0}, {}, Rat(0)});
        return;
    }

    // Facets: supporting hyperplanes spanned by d-subsets of vertices.
    std::map<std::pair<IVec, Int>, std::vector<int>> facet_map;
    for_each_combination(nv, d, [&](const std::vector<int>& idx) {
        IMat diff;
        for (int i = 1; i < d; ++i) diff.push_back(sub(verts_y_[idx[i]], verts_y_[idx[0]]));
        IMat ker = integer_kernel(diff, d);
        if (ker.size() != 1) return;
        IVec nrm = ker[0];
        Int b = dot(nrm, verts_y_[idx[0]]);
        bool above = false, below = false;
        for (int i = 0; i < nv; ++i) {
            Int s = dot(nrm, verts_y_[i]);
            if (s > b) above = true;
            if (s < b) below = true;
        }
        if (above && below) return;
        if (above) {
            nrm = neg(nrm);
            b = -b;
        }
        auto& tight = facet_map[{nrm, b}];
        if (tight.empty())
            for (int i = 0; i < nv; ++i)
                if (dot(nrm, verts_y_[i]) == b) tight.push_back(i);
    });

    // Close the facet vertex sets under intersection.
    std::set<std::vector<int>> sets;
    std::vector<int> all(nv);
    for (int i = 0; i < nv; ++i) all[i] = i;
    sets.insert(all);
    for (const auto& [key, tight] : facet_map) sets.insert(tight);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(sets.begin(), sets.end());
        for (size_t a = 0; a < cur.size(); ++a)
            for (size_t b = a + 1; b < cur.size(); ++b) {
                std::vector<int> inter;
                std::set_intersection(cur[a].begin(), cur[a].end(), cur[b].begin(), cur[b].end(),
                                      std::back_inserter(inter));
                if (!inter.empty() && sets.insert(inter).second) grew = true;
            }
    }

    std::vector<Face> faces;
    for (const auto& vs : sets) {
        Face f;
        f.verts = vs;
        IMat sel;
        for (int i : vs) sel.push_back(verts_y_[i]);
        f.dim = affine_rank(sel);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.verts < b.verts;
    });
    // Attach supporting hyperplanes to facets.
    for (Face& f : faces) {
        if (f.dim != d - 1) continue;
        for (const auto& [key, tight] : facet_map)
            if (tight == f.verts) {
                f.normal = key.first;
                f.offset = Rat(key.second);
                break;
            }
    }
    faces_ = std::move(faces);
}

const std::vector<Face>& LatticePolytope::face_lattice() const {
    build_faces();
    return faces_;
}

std::vector<int> LatticePolytope::face_counts_per_dim() const {
    build_faces();
    std::vector<int> counts(dim_ + 1, 0);
    for (const Face& f : faces_) counts[f.dim]++;
    return counts;
}

// ---------------------------------------------------------------------------
// Integral points
// ---------------------------------------------------------------------------

IMat LatticePolytope::integral_points() const {
    build_faces();
    const int d = dim_;
    if (d == 0) return verts_ambient_;

    std::vector<const Face*> facets;
    for (const Face& f : faces_)
        if (f.dim == d - 1) facets.push_back(&f);

    IVec lo = verts_y_[0], hi = verts_y_[0];
    for (const IVec& y : verts_y_)
        for (int j = 0; j < d; ++j) {
            lo[j] = std::min(lo[j], y[j]);
            hi[j] = std::max(hi[j], y[j]);
        }

    IMat out;
    IVec y = lo;
    while (true) {
        bool inside = true;
        for (const Face* f : facets)
            if (Rat(dot(f->normal, y)) > f->offset) {
                inside = false;
                break;
            }
        if (inside) out.push_back(from_intrinsic(y));
        int j = 0;
        while (j < d) {
            if (y[j] < hi[j]) {
                ++y[j];
                break;
            }
            y[j] = lo[j];
            ++j;
        }
        if (j == d) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

IMat LatticePolytope::integral_points(const Face& face) const {
    build_faces();
    const int d = dim_;
    if (d == 0) return verts_ambient_;
    // A point is on the face iff it is tight on every facet containing it.
    std::vector<const Face*> tight_facets;
    for (const Face& f : faces_) {
        if (f.dim != d - 1) continue;
        if (std::includes(f.verts.begin(), f.verts.end(), face.verts.begin(), face.verts.end()))
            tight_facets.push_back(&f);
    }
    IMat out;
    for (const IVec& p : integral_points()) {
        auto y = to_intrinsic(p);
        assert(y);
        bool ok = true;
        for (const Face* f : tight_facets)
            if (Rat(dot(f->normal, *y)) != f->offset) {
                ok = false;
                break;
            }
        if (ok) out.push_back(p);
    }
    return out;  // integral_points() is already sorted
}

// ---------------------------------------------------------------------------
// Chart maps
// ---------------------------------------------------------------------------

std::optional<IVec> LatticePolytope::to_intrinsic(const IVec& p) const {
    const int n = lattice_.ambient();
    const int k = n - static_cast<int>(lattice_.relations().size());
    if (static_cast<int>(p.size()) != n) return std::nullopt;
    IVec x(k, Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) x[j] += p[i] * q_cols_[i][j];
    if (dim_ == 0) return x == chart_origin_ ? std::optional<IVec>(IVec{}) : std::nullopt;
    IVec rel = sub(x, chart_origin_);
    IVec full(k, Int(0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) full[j] += rel[i] * a2_inv_[i][j];
    for (int j = dim_; j < k; ++j)
        if (full[j] != 0) return std::nullopt;
    return IVec(full.begin(), full.begin() + dim_);
}

IVec LatticePolytope::from_intrinsic(const IVec& y) const {
    const int n = lattice_.ambient();
    const int k = n - static_cast<int>(lattice_.relations().size());
    IVec x = chart_origin_;
    for (int i = 0; i < dim_; ++i)
        if (y[i] != 0) x = add(x, scale(y[i], dir_basis_[i]));
    IVec v(n, Int(0));
    for (int i = 0; i < k; ++i)
        if (x[i] != 0) v = add(v, scale(x[i], lift_rows_[i]));
    return lattice_.canonical(v);
}

// ---------------------------------------------------------------------------
// Duality
// ---------------------------------------------------------------------------

IVec LatticePolytope::origin_intrinsic() const {
    auto y = to_intrinsic(IVec(lattice_.ambient(), Int(0)));
    if (!y) throw OriginNotInterior("origin does not lie in the affine span of the polytope");
    return *y;
}

bool LatticePolytope::contains_origin_interior() const {
    build_faces();
    std::optional<IVec> y = to_intrinsic(IVec(lattice_.ambient(), Int(0)));
    if (!y) return false;
    if (dim_ == 0) return false;
    for (const Face& f : faces_)
        if (f.dim == dim_ - 1 && Rat(dot(f.normal, *y)) >= f.offset) return false;
    return true;
}

QMat LatticePolytope::dual_vertices_intrinsic(DualSense sense) const {
    build_faces();
    IVec y0 = origin_intrinsic();
    QMat duals;
    for (const Face& f : faces_) {
        if (f.dim != dim_ - 1) continue;
        Rat slack = f.offset - Rat(dot(f.normal, y0));
        if (slack <= 0)
            throw OriginNotInterior("origin is not strictly inside the polytope");
        QVec u(dim_);
        for (int j = 0; j < dim_; ++j) {
            u[j] = Rat(f.normal[j]) / slack;
            if (sense == DualSense::Reflexive) u[j] = -u[j];
        }
        duals.push_back(std::move(u));
    }
    return duals;
}

bool LatticePolytope::is_reflexive() const {
    // Integrality of the dual vertex set is independent of the sense.
    QMat duals = dual_vertices_intrinsic(DualSense::Reflexive);
    for (const QVec& u : duals)
        for (const Rat& c : u)
            if (denominator(c) != 1) return false;
    return true;
}

LatticePolytope LatticePolytope::dual(DualSense sense) const {
    const int n = lattice_.ambient();
    const int k = n - static_cast<int>(lattice_.relations().size());
    QMat duals = dual_vertices_intrinsic(sense);
    IMat dual_y(duals.size());
    for (size_t i = 0; i < duals.size(); ++i) {
        IVec u(dim_);
        for (int j = 0; j < dim_; ++j) {
            if (denominator(duals[i][j]) != 1)
                throw NonIntegralDual("dual vertex " + std::to_string(i) +
                                      " is not a lattice point; polytope is not reflexive");
            u[j] = numerator(duals[i][j]);
        }
        dual_y[i] = std::move(u);
    }

    // Pull intrinsic forms back to the ambient lattice:  y-form y* acts on
    // points as <w, x> with w = A2^{-1}[:, :d] y*, then <phi, v> with
    // phi = q_cols * w.
    IMat dual_ambient;
    for (const IVec& ystar : dual_y) {
        IVec w(k, Int(0));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < dim_; ++j) w[i] += a2_inv_[i][j] * ystar[j];
        IVec phi(n, Int(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) phi[i] += q_cols_[i][j] * w[j];
        dual_ambient.push_back(std::move(phi));
    }

    // The dual lattice: ambient forms modulo those vanishing on the whole
    // span of P (relations and directions alike).
    IMat span_rows = lattice_.relations();
    for (const IVec& row : dir_lift_) span_rows.push_back(row);
    IMat dual_relations = integer_kernel(span_rows, n);
    QuotientLattice dual_lat = dual_relations.empty()
                                   ? QuotientLattice(n)
                                   : QuotientLattice(n, dual_relations);
    return from_vertices(dual_lat, dual_ambient);
}

LatticePolytope LatticePolytope::dilate(const Int& c) const {
    if (c < 1) throw std::invalid_argument("dilate: factor must be >= 1");
    IMat scaled;
    for (const IVec& v : verts_ambient_) scaled.push_back(scale(c, v));
    return from_vertices(lattice_, scaled);
}

LatticePolytope newton_polygon(int d) {
    if (d < 1) throw std::invalid_argument("newton_polygon: degree must be >= 1");
    QuotientLattice z2(2);
    return LatticePolytope::from_vertices(
        z2, {{Int(0), Int(0)}, {Int(d), Int(0)}, {Int(0), Int(d)}});
}

}  // namespace tfib
