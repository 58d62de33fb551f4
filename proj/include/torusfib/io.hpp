#pragma once

// Canonical text formats for every object the tool chain passes between
// subcommands: polytopes, weight functions, subdivisions with their
// inducing weights, spine graphs, assembled loci, and monodromy matrices.
// Writers are deterministic; readers accept exactly what the writers emit,
// plus blank lines and '#' comments, so write -> read -> write is
// byte-stable.  Readers throw ParseError with a line number on any
// malformed input.  Also a small SVG canvas for the figure output.

#include <array>
#include <iosfwd>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "torusfib/assembly.hpp"
#include "torusfib/lattice.hpp"
#include "torusfib/monodromy.hpp"
#include "torusfib/spine.hpp"
#include "torusfib/subdivision.hpp"

namespace tfib {

// ---- polytopes ---------------------------------------------------------
// line 1: `dim <n>`; then 0+ `mod <relation>` lines; then one vertex per
// line as space-separated integers; optional `sense <reflexive|polar>`
// records which dual convention a data file intends.

struct PolytopeFile {
    LatticePolytope polytope;
    std::optional<DualSense> sense;
};

void write_polytope(std::ostream& os, const LatticePolytope& P,
                    std::optional<DualSense> sense = std::nullopt);
PolytopeFile read_polytope(std::istream& is);

// ---- weight functions --------------------------------------------------
// one `m1 ... mk : p/q` line per lattice point, keys in map order

void write_weights(std::ostream& os, const WeightFunction& w);
WeightFunction read_weights(std::istream& is);

// ---- subdivisions ------------------------------------------------------
// POLYTOPE section, WEIGHT lines (the inducing heights, so the spine can be
// positioned), `CELL id x1 y1 x2 y2 ...` and
// `WALL id ux uy vx vy cell0 cell1 boundary-edge` lines

struct SubdivisionFile {
    Subdivision subdivision;
    WeightFunction weights;
};

void write_subdivision(std::ostream& os, const Subdivision& S, const WeightFunction& w);
SubdivisionFile read_subdivision(std::istream& is);

// ---- spine graphs ------------------------------------------------------
// `VERTEX id cell x y [label]`, `EDGE id u v dx dy weight [label]`,
// `LEG id v dx dy boundary-edge weight wux wuy wvx wvy`

void write_graph(std::ostream& os, const SpineGraph& G);
SpineGraph read_graph(std::istream& is);

// ---- assembled loci ----------------------------------------------------
// POLYTOPE section (the base), one FACE section per assembled spine graph,
// then the locus graph itself:
//   NODE id type face spine-vertex base-edge slot x y param
//   ARC  id u v face leg dx dy weight site-edge site-slot plane param
//   GLUE base-edge face arc-id node-id     (one per attached leg arc)
// Positions and directions may be `- -` when absent.  GLUE records are
// derived from the arcs on write and re-checked on read.

void write_locus(std::ostream& os, const AssembledLocus& L);
AssembledLocus read_locus(std::istream& is);

// ---- monodromy matrices ------------------------------------------------
// three rows of three integers

void write_mat3(std::ostream& os, const Mat3& m);
Mat3 read_mat3(std::istream& is);

// ---- whole-file helpers --------------------------------------------------

std::string read_text_file(const std::string& path);          // ParseError on failure
void write_text_file(const std::string& path, const std::string& content);

template <typename T, typename WriteFn>
std::string to_text(const T& value, WriteFn write_fn) {
    std::ostringstream os;
    write_fn(os, value);
    return os.str();
}

// ---- SVG figures ---------------------------------------------------------
// Minimal retained-mode canvas in mathematical coordinates (y up); the
// bounding box and the y flip are applied when rendering.

class SvgCanvas {
public:
    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width = 0.03);
    void circle(double x, double y, double r, const std::string& fill);
    void text(double x, double y, const std::string& s, double size = 0.25);
    std::string render(double margin = 0.5) const;

private:
    struct Shape {
        std::string body;
    };
    void bump(double x, double y);
    std::vector<Shape> shapes_;
    double xmin_ = 0, xmax_ = 0, ymin_ = 0, ymax_ = 0;
    bool any_ = false;
};

// figure helpers used by the CLI (positions are exact rationals converted
// to double for display only; legs are drawn with a fixed ray length)
void draw_subdivision(SvgCanvas& svg, const Subdivision& S);
void draw_spine(SvgCanvas& svg, const SpineGraph& G, double leg_length = 1.5);
void draw_cloud(SvgCanvas& svg, const std::vector<std::array<double, 2>>& pts,
                const std::string& fill, double r = 0.02);

}  // namespace tfib
