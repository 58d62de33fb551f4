#include "torusfib/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "torusfib/errors.hpp"

namespace tfib {

namespace {

// ---- tokenized line cursor ---------------------------------------------

struct Row {
    int number = 0;
    std::vector<std::string> tokens;
};

struct Lines {
    std::vector<Row> rows;
    std::size_t pos = 0;

    bool done() const { return pos >= rows.size(); }
    const Row& peek() const { return rows[pos]; }
    const Row& take() { return rows[pos++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        const int line = done() ? (rows.empty() ? 0 : rows.back().number) : peek().number;
        throw ParseError("line " + std::to_string(line) + ": " + msg);
    }
};

Lines tokenize(std::istream& is) {
    Lines out;
    std::string raw;
    int number = 0;
    while (std::getline(is, raw)) {
        ++number;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        Row row;
        row.number = number;
        std::istringstream ls(raw);
        std::string tok;
        while (ls >> tok) row.tokens.push_back(tok);
        if (!row.tokens.empty()) out.rows.push_back(std::move(row));
    }
    return out;
}

[[noreturn]] void fail_at(const Row& row, const std::string& msg) {
    throw ParseError("line " + std::to_string(row.number) + ": " + msg);
}

Int parse_int(const Row& row, const std::string& tok) {
    try {
        return Int(tok);
    } catch (const std::exception&) {
        fail_at(row, "expected an integer, got '" + tok + "'");
    }
}

int parse_small(const Row& row, const std::string& tok) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail_at(row, "expected a small integer, got '" + tok + "'");
    }
}

Rat parse_rat(const Row& row, const std::string& tok) {
    const std::size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(tok));
        const Int num(tok.substr(0, slash));
        const Int den(tok.substr(slash + 1));
        if (den == 0) fail_at(row, "zero denominator in '" + tok + "'");
        return Rat(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail_at(row, "expected a rational p/q, got '" + tok + "'");
    }
}

void need(const Row& row, std::size_t count, const char* what) {
    if (row.tokens.size() != count) {
        fail_at(row, std::string(what) + ": expected " + std::to_string(count) +
                         " fields, got " + std::to_string(row.tokens.size()));
    }
}

void need_at_least(const Row& row, std::size_t count, const char* what) {
    if (row.tokens.size() < count) {
        fail_at(row, std::string(what) + ": expected at least " + std::to_string(count) +
                         " fields, got " + std::to_string(row.tokens.size()));
    }
}

std::string join_rest(const Row& row, std::size_t from) {
    std::string s;
    for (std::size_t i = from; i < row.tokens.size(); ++i) {
        if (!s.empty()) s += ' ';
        s += row.tokens[i];
    }
    return s;
}

void write_ivec(std::ostream& os, const IVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
}

// two tokens that are either both rationals/integers or both '-'
template <typename Vec, typename Parse>
Vec parse_pair_or_dash(const Row& row, std::size_t at, Parse parse) {
    const std::string& a = row.tokens[at];
    const std::string& b = row.tokens[at + 1];
    if (a == "-" || b == "-") {
        if (a != b) fail_at(row, "mismatched '-' placeholders");
        return Vec{};
    }
    Vec v;
    v.push_back(parse(row, a));
    v.push_back(parse(row, b));
    return v;
}

void write_pair_or_dash(std::ostream& os, const IVec& v) {
    if (v.size() == 2) {
        os << v[0] << ' ' << v[1];
    } else {
        os << "- -";
    }
}

void write_pair_or_dash(std::ostream& os, const QVec& v) {
    if (v.size() == 2) {
        os << v[0] << ' ' << v[1];
    } else {
        os << "- -";
    }
}

// ---- polytope section ----------------------------------------------------

void write_polytope_body(std::ostream& os, const LatticePolytope& P,
                         const std::optional<DualSense>& sense) {
    os << "dim " << P.lattice().ambient() << '\n';
    for (const IVec& r : P.lattice().relations()) {
        os << "mod ";
        write_ivec(os, r);
        os << '\n';
    }
    if (sense) {
        os << "sense " << (*sense == DualSense::Polar ? "polar" : "reflexive") << '\n';
    }
    for (const IVec& v : P.vertices()) {
        write_ivec(os, v);
        os << '\n';
    }
}

// reads the body after any `POLYTOPE` header; in embedded mode stops at and
// consumes the closing END
PolytopeFile read_polytope_body(Lines& in, bool embedded) {
    if (in.done()) in.fail("expected 'dim <n>'");
    const Row& head = in.take();
    if (head.tokens[0] != "dim" || head.tokens.size() != 2) {
        fail_at(head, "expected 'dim <n>'");
    }
    const int dim = parse_small(head, head.tokens[1]);
    if (dim < 1 || dim > 16) fail_at(head, "unreasonable ambient dimension");

    IMat relations;
    IMat points;
    std::optional<DualSense> sense;
    bool closed = false;
    while (!in.done()) {
        const Row& row = in.peek();
        if (row.tokens[0] == "END") {
            if (!embedded) fail_at(row, "unexpected END outside a section");
            in.take();
            closed = true;
            break;
        }
        if (row.tokens[0] == "mod") {
            need(row, static_cast<std::size_t>(dim) + 1, "mod");
            IVec r;
            for (int i = 0; i < dim; ++i) r.push_back(parse_int(row, row.tokens[i + 1]));
            relations.push_back(std::move(r));
            in.take();
            continue;
        }
        if (row.tokens[0] == "sense") {
            need(row, 2, "sense");
            if (row.tokens[1] == "polar") {
                sense = DualSense::Polar;
            } else if (row.tokens[1] == "reflexive") {
                sense = DualSense::Reflexive;
            } else {
                fail_at(row, "sense must be 'polar' or 'reflexive'");
            }
            in.take();
            continue;
        }
        // vertex line: starts with an integer-looking token
        const char c = row.tokens[0][0];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-')) break;
        need(row, static_cast<std::size_t>(dim), "vertex");
        IVec v;
        for (int i = 0; i < dim; ++i) v.push_back(parse_int(row, row.tokens[i]));
        points.push_back(std::move(v));
        in.take();
    }
    if (embedded && !closed) in.fail("POLYTOPE section not closed with END");
    if (points.empty()) in.fail("polytope has no vertex lines");

    PolytopeFile out;
    out.sense = sense;
    out.polytope = LatticePolytope::from_vertices(QuotientLattice(dim, relations), points);
    return out;
}

// ---- graph lines -----------------------------------------------------------

void write_graph_body(std::ostream& os, const SpineGraph& G) {
    for (const SpineVertex& v : G.vertices) {
        os << "VERTEX " << v.id << ' ' << v.cell << ' ';
        write_pair_or_dash(os, v.pos);
        if (!v.label.empty()) os << ' ' << v.label;
        os << '\n';
    }
    for (const SpineEdge& e : G.edges) {
        os << "EDGE " << e.id << ' ' << e.u << ' ' << e.v << ' ';
        write_pair_or_dash(os, e.dir);
        os << ' ' << e.weight;
        if (!e.label.empty()) os << ' ' << e.label;
        os << '\n';
    }
    for (const SpineLeg& l : G.legs) {
        os << "LEG " << l.id << ' ' << l.v << ' ';
        write_pair_or_dash(os, l.dir);
        os << ' ' << l.boundary_edge << ' ' << l.weight << ' ';
        write_pair_or_dash(os, l.wall_u);
        os << ' ';
        write_pair_or_dash(os, l.wall_v);
        os << '\n';
    }
}

// consumes VERTEX/EDGE/LEG rows until a non-graph keyword
SpineGraph read_graph_body(Lines& in) {
    SpineGraph G;
    while (!in.done()) {
        const Row& row = in.peek();
        const std::string& kind = row.tokens[0];
        if (kind == "VERTEX") {
            need_at_least(row, 5, "VERTEX");
            SpineVertex v;
            v.id = parse_small(row, row.tokens[1]);
            v.cell = parse_small(row, row.tokens[2]);
            v.pos = parse_pair_or_dash<QVec>(row, 3, parse_rat);
            v.label = join_rest(row, 5);
            if (v.id != static_cast<int>(G.vertices.size())) {
                fail_at(row, "VERTEX ids must be dense and ordered");
            }
            G.vertices.push_back(std::move(v));
            in.take();
        } else if (kind == "EDGE") {
            need_at_least(row, 7, "EDGE");
            SpineEdge e;
            e.id = parse_small(row, row.tokens[1]);
            e.u = parse_small(row, row.tokens[2]);
            e.v = parse_small(row, row.tokens[3]);
            e.dir = parse_pair_or_dash<IVec>(row, 4, parse_int);
            e.weight = parse_int(row, row.tokens[6]);
            e.label = join_rest(row, 7);
            if (e.id != static_cast<int>(G.edges.size())) {
                fail_at(row, "EDGE ids must be dense and ordered");
            }
            G.edges.push_back(std::move(e));
            in.take();
        } else if (kind == "LEG") {
            need(row, 11, "LEG");
            SpineLeg l;
            l.id = parse_small(row, row.tokens[1]);
            l.v = parse_small(row, row.tokens[2]);
            l.dir = parse_pair_or_dash<IVec>(row, 3, parse_int);
            l.boundary_edge = parse_small(row, row.tokens[5]);
            l.weight = parse_int(row, row.tokens[6]);
            l.wall_u = parse_pair_or_dash<IVec>(row, 7, parse_int);
            l.wall_v = parse_pair_or_dash<IVec>(row, 9, parse_int);
            if (l.id != static_cast<int>(G.legs.size())) {
                fail_at(row, "LEG ids must be dense and ordered");
            }
            G.legs.push_back(std::move(l));
            in.take();
        } else {
            break;
        }
    }
    return G;
}

}  // namespace

// ---- public: polytope ------------------------------------------------------

void write_polytope(std::ostream& os, const LatticePolytope& P,
                    std::optional<DualSense> sense) {
    write_polytope_body(os, P, sense);
}

PolytopeFile read_polytope(std::istream& is) {
    Lines in = tokenize(is);
    PolytopeFile out = read_polytope_body(in, false);
    if (!in.done()) in.fail("trailing content after the polytope");
    return out;
}

// ---- public: weights -------------------------------------------------------

void write_weights(std::ostream& os, const WeightFunction& w) {
    for (const auto& [m, q] : w.values) {
        write_ivec(os, m);
        os << " : " << q << '\n';
    }
}

WeightFunction read_weights(std::istream& is) {
    Lines in = tokenize(is);
    WeightFunction w;
    while (!in.done()) {
        const Row& row = in.take();
        need_at_least(row, 3, "weight");
        if (row.tokens[row.tokens.size() - 2] != ":") {
            fail_at(row, "expected 'm1 ... mk : p/q'");
        }
        IVec m;
        for (std::size_t i = 0; i + 2 < row.tokens.size(); ++i) {
            m.push_back(parse_int(row, row.tokens[i]));
        }
        const Rat q = parse_rat(row, row.tokens.back());
        if (w.values.count(m)) fail_at(row, "duplicate weight key");
        w.values[m] = q;
    }
    return w;
}

// ---- public: subdivisions ----------------------------------------------------

void write_subdivision(std::ostream& os, const Subdivision& S, const WeightFunction& w) {
    os << "POLYTOPE\n";
    write_polytope_body(os, S.polygon, std::nullopt);
    os << "END\n";
    for (const auto& [m, q] : w.values) {
        os << "WEIGHT ";
        write_ivec(os, m);
        os << " : " << q << '\n';
    }
    for (std::size_t i = 0; i < S.cells.size(); ++i) {
        os << "CELL " << i;
        for (const IVec& c : S.cells[i].corners) {
            os << ' ' << c[0] << ' ' << c[1];
        }
        os << '\n';
    }
    for (std::size_t i = 0; i < S.walls.size(); ++i) {
        const Wall& wall = S.walls[i];
        os << "WALL " << i << ' ' << wall.u[0] << ' ' << wall.u[1] << ' ' << wall.v[0]
           << ' ' << wall.v[1] << ' ' << wall.cell0 << ' ' << wall.cell1 << ' '
           << wall.boundary_edge << '\n';
    }
}

SubdivisionFile read_subdivision(std::istream& is) {
    Lines in = tokenize(is);
    if (in.done() || in.peek().tokens[0] != "POLYTOPE") in.fail("expected POLYTOPE section");
    in.take();
    SubdivisionFile out;
    out.subdivision.polygon = read_polytope_body(in, true).polytope;
    while (!in.done()) {
        const Row& row = in.take();
        const std::string& kind = row.tokens[0];
        if (kind == "WEIGHT") {
            need_at_least(row, 4, "WEIGHT");
            if (row.tokens[row.tokens.size() - 2] != ":") {
                fail_at(row, "expected 'WEIGHT m1 ... mk : p/q'");
            }
            IVec m;
            for (std::size_t i = 1; i + 2 < row.tokens.size(); ++i) {
                m.push_back(parse_int(row, row.tokens[i]));
            }
            out.weights.values[m] = parse_rat(row, row.tokens.back());
        } else if (kind == "CELL") {
            need_at_least(row, 2, "CELL");
            if ((row.tokens.size() - 2) % 2 != 0) fail_at(row, "CELL needs coordinate pairs");
            if (parse_small(row, row.tokens[1]) !=
                static_cast<int>(out.subdivision.cells.size())) {
                fail_at(row, "CELL ids must be dense and ordered");
            }
            Cell cell;
            for (std::size_t i = 2; i < row.tokens.size(); i += 2) {
                cell.corners.push_back(
                    {parse_int(row, row.tokens[i]), parse_int(row, row.tokens[i + 1])});
            }
            out.subdivision.cells.push_back(std::move(cell));
        } else if (kind == "WALL") {
            need(row, 9, "WALL");
            if (parse_small(row, row.tokens[1]) !=
                static_cast<int>(out.subdivision.walls.size())) {
                fail_at(row, "WALL ids must be dense and ordered");
            }
            Wall w;
            w.u = {parse_int(row, row.tokens[2]), parse_int(row, row.tokens[3])};
            w.v = {parse_int(row, row.tokens[4]), parse_int(row, row.tokens[5])};
            w.cell0 = parse_small(row, row.tokens[6]);
            w.cell1 = parse_small(row, row.tokens[7]);
            w.boundary_edge = parse_small(row, row.tokens[8]);
            out.subdivision.walls.push_back(std::move(w));
        } else {
            fail_at(row, "unexpected '" + kind + "' in a subdivision file");
        }
    }
    if (out.subdivision.cells.empty()) in.fail("subdivision has no cells");
    return out;
}

// ---- public: graphs -----------------------------------------------------------

void write_graph(std::ostream& os, const SpineGraph& G) { write_graph_body(os, G); }

SpineGraph read_graph(std::istream& is) {
    Lines in = tokenize(is);
    SpineGraph G = read_graph_body(in);
    if (!in.done()) in.fail("unexpected content in a graph file");
    return G;
}

// ---- public: loci ----------------------------------------------------------------

void write_locus(std::ostream& os, const AssembledLocus& L) {
    os << "POLYTOPE\n";
    write_polytope_body(os, L.base.polytope, std::nullopt);
    os << "END\n";
    for (const auto& [face, graph] : L.face_graphs) {
        os << "FACE " << face << '\n';
        write_graph_body(os, graph);
        os << "END\n";
    }
    for (const LocusVertex& v : L.vertices) {
        os << "NODE " << v.id << ' ' << to_string(v.type) << ' ' << v.face << ' '
           << v.spine_vertex << ' ' << v.base_edge << ' ' << v.slot << ' ';
        write_pair_or_dash(os, v.pos);
        os << ' ' << v.edge_param << '\n';
    }
    for (const LocusEdge& e : L.edges) {
        os << "ARC " << e.id << ' ' << e.u << ' ' << e.v << ' ' << e.face << ' '
           << (e.from_leg ? 1 : 0) << ' ';
        write_pair_or_dash(os, e.dir);
        os << ' ' << e.weight << ' ' << e.site_edge << ' ' << e.site_slot << ' '
           << e.strand_plane << ' ' << e.site_param << '\n';
    }
    for (const LocusEdge& e : L.edges) {
        if (!e.from_leg || e.v < 0) continue;
        const int be = L.vertices[e.v].base_edge;
        if (be < 0) continue;
        os << "GLUE " << be << ' ' << e.face << ' ' << e.id << ' ' << e.v << '\n';
    }
}

AssembledLocus read_locus(std::istream& is) {
    Lines in = tokenize(is);
    if (in.done() || in.peek().tokens[0] != "POLYTOPE") in.fail("expected POLYTOPE section");
    in.take();
    AssembledLocus L;
    L.base = base_from_polytope(read_polytope_body(in, true).polytope);

    while (!in.done() && in.peek().tokens[0] == "FACE") {
        const Row& head = in.take();
        need(head, 2, "FACE");
        const int face = parse_small(head, head.tokens[1]);
        if (face < 0 || face >= static_cast<int>(L.base.faces.size())) {
            fail_at(head, "FACE id outside the base complex");
        }
        if (L.face_graphs.count(face)) fail_at(head, "duplicate FACE section");
        L.face_graphs[face] = read_graph_body(in);
        if (in.done() || in.peek().tokens[0] != "END") in.fail("FACE section not closed");
        in.take();
    }

    struct GlueRec {
        int base_edge, face, arc, node;
        bool operator==(const GlueRec& o) const {
            return base_edge == o.base_edge && face == o.face && arc == o.arc &&
                   node == o.node;
        }
    };
    std::vector<GlueRec> glue;
    while (!in.done()) {
        const Row& row = in.take();
        const std::string& kind = row.tokens[0];
        if (kind == "NODE") {
            need(row, 10, "NODE");
            LocusVertex v;
            v.id = parse_small(row, row.tokens[1]);
            const auto type = parse_fibre_type(row.tokens[2]);
            if (!type) fail_at(row, "unknown fibre type '" + row.tokens[2] + "'");
            v.type = *type;
            v.face = parse_small(row, row.tokens[3]);
            v.spine_vertex = parse_small(row, row.tokens[4]);
            v.base_edge = parse_small(row, row.tokens[5]);
            v.slot = parse_small(row, row.tokens[6]);
            v.pos = parse_pair_or_dash<QVec>(row, 7, parse_rat);
            v.edge_param = parse_rat(row, row.tokens[9]);
            if (v.id != static_cast<int>(L.vertices.size())) {
                fail_at(row, "NODE ids must be dense and ordered");
            }
            L.vertices.push_back(std::move(v));
        } else if (kind == "ARC") {
            need(row, 13, "ARC");
            LocusEdge e;
            e.id = parse_small(row, row.tokens[1]);
            e.u = parse_small(row, row.tokens[2]);
            e.v = parse_small(row, row.tokens[3]);
            e.face = parse_small(row, row.tokens[4]);
            const int leg = parse_small(row, row.tokens[5]);
            if (leg != 0 && leg != 1) fail_at(row, "leg flag must be 0 or 1");
            e.from_leg = leg == 1;
            e.dir = parse_pair_or_dash<IVec>(row, 6, parse_int);
            e.weight = parse_int(row, row.tokens[8]);
            e.site_edge = parse_small(row, row.tokens[9]);
            e.site_slot = parse_small(row, row.tokens[10]);
            e.strand_plane = parse_small(row, row.tokens[11]);
            e.site_param = parse_rat(row, row.tokens[12]);
            if (e.id != static_cast<int>(L.edges.size())) {
                fail_at(row, "ARC ids must be dense and ordered");
            }
            const int n = static_cast<int>(L.vertices.size());
            if (e.u < 0 || e.u >= n || e.v < -1 || e.v >= n) {
                fail_at(row, "ARC endpoint out of range");
            }
            L.edges.push_back(std::move(e));
        } else if (kind == "GLUE") {
            need(row, 5, "GLUE");
            glue.push_back({parse_small(row, row.tokens[1]), parse_small(row, row.tokens[2]),
                            parse_small(row, row.tokens[3]), parse_small(row, row.tokens[4])});
        } else {
            fail_at(row, "unexpected '" + kind + "' in a locus file");
        }
    }

    // GLUE records are a derived summary; recompute and insist they match
    std::vector<GlueRec> expected;
    for (const LocusEdge& e : L.edges) {
        if (!e.from_leg || e.v < 0) continue;
        const int be = L.vertices[e.v].base_edge;
        if (be < 0) continue;
        expected.push_back({be, e.face, e.id, e.v});
    }
    if (!(glue == expected)) {
        throw ParseError("GLUE records do not match the leg arcs");
    }
    return L;
}

// ---- public: matrices ----------------------------------------------------------

void write_mat3(std::ostream& os, const Mat3& m) {
    for (const auto& row : m) {
        os << row[0] << ' ' << row[1] << ' ' << row[2] << '\n';
    }
}

Mat3 read_mat3(std::istream& is) {
    Lines in = tokenize(is);
    Mat3 m{};
    for (auto& out_row : m) {
        if (in.done()) in.fail("expected three matrix rows");
        const Row& row = in.take();
        need(row, 3, "matrix row");
        for (int j = 0; j < 3; ++j) {
            try {
                std::size_t used = 0;
                out_row[j] = std::stoll(row.tokens[j], &used);
                if (used != row.tokens[j].size()) throw std::invalid_argument(row.tokens[j]);
            } catch (const std::exception&) {
                fail_at(row, "expected an integer entry, got '" + row.tokens[j] + "'");
            }
        }
    }
    if (!in.done()) in.fail("trailing content after the matrix");
    return m;
}

// ---- public: whole files ----------------------------------------------------------

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write file: " + path);
    f << content;
    if (!f) throw ParseError("failed writing file: " + path);
}

// ---- SVG canvas ----------------------------------------------------------------

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

}  // namespace

void SvgCanvas::bump(double x, double y) {
    if (!any_) {
        xmin_ = xmax_ = x;
        ymin_ = ymax_ = y;
        any_ = true;
        return;
    }
    xmin_ = std::min(xmin_, x);
    xmax_ = std::max(xmax_, x);
    ymin_ = std::min(ymin_, y);
    ymax_ = std::max(ymax_, y);
}

void SvgCanvas::line(double x1, double y1, double x2, double y2, const std::string& stroke,
                     double width) {
    bump(x1, -y1);
    bump(x2, -y2);
    shapes_.push_back({"<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(-y1) + "\" x2=\"" +
                       fmt(x2) + "\" y2=\"" + fmt(-y2) + "\" stroke=\"" + stroke +
                       "\" stroke-width=\"" + fmt(width) + "\" stroke-linecap=\"round\"/>"});
}

void SvgCanvas::circle(double x, double y, double r, const std::string& fill) {
    bump(x - r, -y - r);
    bump(x + r, -y + r);
    shapes_.push_back({"<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(-y) + "\" r=\"" + fmt(r) +
                       "\" fill=\"" + fill + "\"/>"});
}

void SvgCanvas::text(double x, double y, const std::string& s, double size) {
    bump(x, -y);
    shapes_.push_back({"<text x=\"" + fmt(x) + "\" y=\"" + fmt(-y) + "\" font-size=\"" +
                       fmt(size) + "\" font-family=\"sans-serif\">" + s + "</text>"});
}

std::string SvgCanvas::render(double margin) const {
    const double x0 = any_ ? xmin_ - margin : -1;
    const double y0 = any_ ? ymin_ - margin : -1;
    const double w = any_ ? (xmax_ - xmin_) + 2 * margin : 2;
    const double h = any_ ? (ymax_ - ymin_) + 2 * margin : 2;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" viewBox=\"" +
                      fmt(x0) + ' ' + fmt(y0) + ' ' + fmt(w) + ' ' + fmt(h) + "\">\n";
    out += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y0) + "\" width=\"" + fmt(w) +
           "\" height=\"" + fmt(h) + "\" fill=\"white\"/>\n";
    for (const Shape& s : shapes_) {
        out += s.body;
        out += '\n';
    }
    out += "</svg>\n";
    return out;
}

// ---- SVG figure helpers ------------------------------------------------------------

namespace {

double rat_as_double(const Rat& r) {
    return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

}  // namespace

void draw_subdivision(SvgCanvas& svg, const Subdivision& S) {
    for (const Wall& w : S.walls) {
        const bool boundary = w.cell1 < 0;
        svg.line(static_cast<double>(w.u[0]), static_cast<double>(w.u[1]),
                 static_cast<double>(w.v[0]), static_cast<double>(w.v[1]),
                 boundary ? "black" : "#888888", boundary ? 0.05 : 0.03);
    }
}

void draw_spine(SvgCanvas& svg, const SpineGraph& G, double leg_length) {
    std::vector<std::array<double, 2>> pos(G.vertices.size(), {0.0, 0.0});
    for (const SpineVertex& v : G.vertices) {
        if (v.pos.size() == 2) {
            pos[v.id] = {rat_as_double(v.pos[0]), rat_as_double(v.pos[1])};
        }
    }
    for (const SpineEdge& e : G.edges) {
        svg.line(pos[e.u][0], pos[e.u][1], pos[e.v][0], pos[e.v][1], "#c03020", 0.05);
    }
    for (const SpineLeg& l : G.legs) {
        if (l.dir.size() != 2) continue;
        const double dx = static_cast<double>(l.dir[0]);
        const double dy = static_cast<double>(l.dir[1]);
        const double n = std::max(1e-12, std::sqrt(dx * dx + dy * dy));
        svg.line(pos[l.v][0], pos[l.v][1], pos[l.v][0] + leg_length * dx / n,
                 pos[l.v][1] + leg_length * dy / n, "#e08050", 0.04);
    }
    for (const SpineVertex& v : G.vertices) {
        svg.circle(pos[v.id][0], pos[v.id][1], 0.07, "#802010");
    }
}

void draw_cloud(SvgCanvas& svg, const std::vector<std::array<double, 2>>& pts,
                const std::string& fill, double r) {
    for (const auto& p : pts) {
        svg.circle(p[0], p[1], r, fill);
    }
}

}  // namespace tfib
