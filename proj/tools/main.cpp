// tfib — command-line front end for the torus-fibration toolkit.
//
// One subcommand per pipeline stage, reading and writing the canonical text
// formats of the io module.  Exit codes: 0 on success, 1 when a module
// refuses the request (the error's stable name is echoed on stderr), 2 on
// usage errors or unreadable/malformed input files.

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "torusfib/amoeba.hpp"
#include "torusfib/assembly.hpp"
#include "torusfib/catalog.hpp"
#include "torusfib/duality.hpp"
#include "torusfib/errors.hpp"
#include "torusfib/flow.hpp"
#include "torusfib/io.hpp"
#include "torusfib/lattice.hpp"
#include "torusfib/local_models.hpp"
#include "torusfib/monodromy.hpp"
#include "torusfib/spine.hpp"
#include "torusfib/subdivision.hpp"
#include "torusfib/transitions.hpp"

namespace {

using namespace tfib;

// A bad flag value or flag combination, reported with the offending flag.
struct UsageError {
    std::string message;
};

PolytopeFile load_polytope(const std::string& path) {
    std::istringstream is(read_text_file(path));
    return read_polytope(is);
}

WeightFunction load_weights(const std::string& path) {
    std::istringstream is(read_text_file(path));
    return read_weights(is);
}

SubdivisionFile load_subdivision(const std::string& path) {
    std::istringstream is(read_text_file(path));
    return read_subdivision(is);
}

SpineGraph load_graph(const std::string& path) {
    std::istringstream is(read_text_file(path));
    return read_graph(is);
}

AssembledLocus load_locus(const std::string& path) {
    std::istringstream is(read_text_file(path));
    return read_locus(is);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

void emit_svg(const SvgCanvas& svg, const std::string& path) {
    if (!path.empty()) write_text_file(path, svg.render());
}

std::string polytope_text(const LatticePolytope& P) {
    return to_text(P, [](std::ostream& os, const LatticePolytope& p) { write_polytope(os, p); });
}

std::string locus_text(const AssembledLocus& L) {
    return to_text(L, [](std::ostream& os, const AssembledLocus& l) { write_locus(os, l); });
}

FibreType fibre_type_from(const std::string& s, const std::string& flag) {
    if (s == "Generic") return FibreType::Generic;
    if (s == "I") return FibreType::I;
    if (s == "II") return FibreType::II;
    if (s == "III") return FibreType::III;
    if (s == "III5") return FibreType::III5;
    if (s == "II5x5") return FibreType::II5x5;
    throw UsageError{flag + ": unknown fibre type '" + s + "'"};
}

std::string fmt(double v, int precision = 6) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

// --- dual -----------------------------------------------------------------

struct DualArgs {
    std::string polytope, sense, out;
};

void run_dual(const DualArgs& a) {
    const PolytopeFile f = load_polytope(a.polytope);
    DualSense sense = f.sense.value_or(DualSense::Reflexive);
    if (!a.sense.empty()) {
        if (a.sense == "polar") {
            sense = DualSense::Polar;
        } else if (a.sense == "reflexive") {
            sense = DualSense::Reflexive;
        } else {
            throw UsageError{"--sense: expected polar or reflexive, got '" + a.sense + "'"};
        }
    }
    emit(polytope_text(f.polytope.dual(sense)), a.out);
}

// --- points ---------------------------------------------------------------

struct PointsArgs {
    std::string polytope, out;
    int face = -1;
};

void run_points(const PointsArgs& a) {
    const PolytopeFile f = load_polytope(a.polytope);
    IMat pts;
    if (a.face < 0) {
        pts = f.polytope.integral_points();
    } else {
        const auto& faces = f.polytope.face_lattice();
        if (a.face >= static_cast<int>(faces.size())) {
            throw UsageError{"--face: id " + std::to_string(a.face) + " out of range (polytope has " +
                             std::to_string(faces.size()) + " faces)"};
        }
        pts = f.polytope.integral_points(faces[a.face]);
    }
    std::ostringstream os;
    for (const IVec& p : pts) {
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
        os << "\n";
    }
    emit(os.str(), a.out);
}

// --- subdivide ------------------------------------------------------------

struct SubdivideArgs {
    std::string polytope, weights, out, svg;
};

void run_subdivide(const SubdivideArgs& a) {
    const LatticePolytope P = load_polytope(a.polytope).polytope;
    const WeightFunction w = load_weights(a.weights);
    const Subdivision S = regular_subdivision(P, w);
    emit(to_text(S, [&](std::ostream& os, const Subdivision& s) { write_subdivision(os, s, w); }),
         a.out);
    if (!a.svg.empty()) {
        SvgCanvas svg;
        draw_subdivision(svg, S);
        emit_svg(svg, a.svg);
    }
}

// --- spine ----------------------------------------------------------------

struct SpineArgs {
    std::string subdivision, out, svg;
};

void run_spine(const SpineArgs& a) {
    const SubdivisionFile f = load_subdivision(a.subdivision);
    const SpineGraph G = dual_spine(f.subdivision, f.weights);
    emit(to_text(G, [](std::ostream& os, const SpineGraph& g) { write_graph(os, g); }), a.out);
    if (!a.svg.empty()) {
        SvgCanvas svg;
        draw_subdivision(svg, f.subdivision);
        draw_spine(svg, G);
        emit_svg(svg, a.svg);
    }
}

// --- amoeba ---------------------------------------------------------------

struct AmoebaArgs {
    int degree = 3;
    std::vector<double> ts;
    int samples = 2000;
    std::uint64_t seed = 1;
    std::string out, svg;
};

void run_amoeba(const AmoebaArgs& a) {
    if (a.degree < 1) throw UsageError{"--d: degree must be at least 1"};
    if (a.samples < 1) throw UsageError{"--samples: need a positive sample count"};
    for (double t : a.ts) {
        if (!(t > 0.0) || !(t < 1.0)) throw UsageError{"--t: values must lie strictly in (0, 1)"};
    }
    CurveSpec base;
    base.degree = a.degree;
    base.weights = standard_weights(a.degree);
    const SpineGraph G = standard_spine_on(newton_polygon(a.degree));

    const ConvergenceReport report = verify_fattening(base, a.ts, G, a.samples, a.seed);
    std::ostringstream table;
    table << std::setw(10) << "t" << std::setw(10) << "samples" << std::setw(12) << "hausdorff"
          << "\n";
    for (const ConvergenceRow& r : report.rows) {
        table << std::setw(10) << fmt(r.t) << std::setw(10) << a.samples << std::setw(12)
              << fmt(r.distance, 4) << "\n";
    }
    if (report.has_verdict) {
        table << "monotone: " << (report.monotone ? "true" : "false") << "\n";
    }
    std::cout << table.str();

    if (!a.out.empty() || !a.svg.empty()) {
        CurveSpec spec = base;
        spec.t = a.ts.back();  // cloud artifacts use the last (thinnest) t
        const PointCloud cloud = sample_amoeba(spec, a.samples, a.seed);
        if (!a.out.empty()) {
            std::ostringstream csv;
            csv << "x,y\n" << std::setprecision(9);
            for (const auto& p : cloud.points) csv << p[0] << "," << p[1] << "\n";
            write_text_file(a.out, csv.str());
        }
        if (!a.svg.empty()) {
            SvgCanvas svg;
            draw_cloud(svg, cloud.points, "#3050c0");
            draw_spine(svg, G);
            emit_svg(svg, a.svg);
        }
    }
}

// --- flow -----------------------------------------------------------------

struct FlowArgs {
    double psi = 100.0;
    int points = 20;
    double tol = 1e-8;
    double eps = 0.02;
    std::uint64_t seed = 2026;
    std::string out;
};

void run_flow(const FlowArgs& a) {
    if (a.psi == 0.0) throw UsageError{"--psi: must be nonzero (the target level is -1/psi)"};
    if (a.points < 1) throw UsageError{"--points: need a positive trajectory count"};
    if (!(a.tol > 0.0)) throw UsageError{"--tol: need a positive tolerance"};
    const QuinticFamilySpec spec = perturbed_fermat({a.psi, 0.0}, a.eps, a.seed);
    const double target = -1.0 / a.psi;

    const auto residual = [&](const C5& z) {
        return std::abs(evaluate_ppsi(spec, z)) /
               (std::abs(evaluate_pa(spec, z)) + std::abs(a.psi) * std::abs(evaluate_pinf(z)));
    };

    std::ostringstream csv;
    csv << "trajectory,time,im_s,p_psi\n" << std::setprecision(9);
    std::cout << std::setw(10) << "trajectory" << std::setw(8) << "steps" << std::setw(14)
              << "max|Im s|" << std::setw(14) << "end |p_psi|" << "\n";
    double worst_im = 0.0, worst_end = 0.0;
    for (int i = 1; i <= a.points; ++i) {
        const C5 z0 = x_infinity_start(spec, static_cast<std::uint64_t>(i));
        const FlowTrajectory traj = flow_point(spec, z0, target, a.tol);
        for (const FlowSample& s : traj.samples) {
            csv << i << "," << s.time << "," << std::abs(s.s.imag()) << "," << residual(s.z)
                << "\n";
        }
        const double end_res = residual(traj.samples.back().z);
        worst_im = std::max(worst_im, traj.max_im_s);
        worst_end = std::max(worst_end, end_res);
        std::cout << std::setw(10) << i << std::setw(8) << traj.steps_accepted << std::setw(14)
                  << fmt(traj.max_im_s, 3) << std::setw(14) << fmt(end_res, 3) << "\n";
    }
    std::cout << "summary: " << a.points << " trajectories, max |Im s| = " << fmt(worst_im, 3)
              << ", max endpoint |p_psi| = " << fmt(worst_end, 3) << "\n";
    if (!a.out.empty()) write_text_file(a.out, csv.str());
}

// --- assemble ---------------------------------------------------------------

struct AssembleArgs {
    std::string base, out;
    std::vector<std::string> graphs;
    bool standard = false;
};

void run_assemble(const AssembleArgs& a) {
    const LatticePolytope P = load_polytope(a.base).polytope;
    const BaseComplex B = base_from_polytope(P);
    std::map<int, SpineGraph> graphs;
    if (a.standard) {
        if (!a.graphs.empty()) {
            throw UsageError{"graphs: do not pass graph files together with --standard"};
        }
        for (std::size_t f = 0; f < B.faces.size(); ++f) {
            graphs[static_cast<int>(f)] = standard_spine_on(B.faces[f].polygon);
        }
    } else {
        if (a.graphs.size() != B.faces.size()) {
            throw UsageError{"graphs: expected " + std::to_string(B.faces.size()) +
                             " graph files (one per 2-face, in face order), got " +
                             std::to_string(a.graphs.size())};
        }
        for (std::size_t f = 0; f < a.graphs.size(); ++f) {
            graphs[static_cast<int>(f)] = load_graph(a.graphs[f]);
        }
    }
    emit(locus_text(assemble(B, graphs)), a.out);
}

// --- euler ------------------------------------------------------------------

void run_euler(const std::string& locus_path) {
    const VertexCounts c = classify_vertices(load_locus(locus_path));
    std::cout << (c.n_iii - c.n_ii) << "\n";
}

// --- monodromy ----------------------------------------------------------------

struct MonodromyArgs {
    std::string type, out;
};

void run_monodromy(const MonodromyArgs& a) {
    const FibreType t = fibre_type_from(a.type, "--type");
    const MonodromyTriple tr = standard_triple(t);
    std::ostringstream os;
    const char* names[3] = {"# T1", "# T2", "# T3"};
    const Mat3* mats[3] = {&tr.T1, &tr.T2, &tr.T3};
    for (int i = 0; i < 3; ++i) {
        os << names[i] << "\n";
        write_mat3(os, *mats[i]);
    }
    os << "consistent: " << (vertex_consistent(tr.T1, tr.T2, tr.T3) ? "true" : "false") << "\n";
    emit(os.str(), a.out);
}

// --- dualize ----------------------------------------------------------------

struct DualizeArgs {
    std::string locus, out;
};

void run_dualize(const DualizeArgs& a) {
    const FibrationDatum F = assign_monodromy(load_locus(a.locus));
    emit(locus_text(dualize_fibration(F).locus), a.out);
}

// --- verify-mirror ----------------------------------------------------------

struct VerifyArgs {
    std::string locus_a, locus_b;
};

int run_verify_mirror(const VerifyArgs& a) {
    const FibrationDatum F = assign_monodromy(load_locus(a.locus_a));
    const FibrationDatum G = assign_monodromy(load_locus(a.locus_b));
    std::vector<int> iso(F.locus.vertices.size());
    for (std::size_t i = 0; i < iso.size(); ++i) iso[i] = static_cast<int>(i);
    const MirrorReport rep = verify_mirror_pair(F, G, iso);
    for (const std::string& msg : rep.messages) std::cout << msg << "\n";
    std::cout << "structure violations: " << rep.structure_violations << "\n"
              << "type violations: " << rep.type_violations << "\n"
              << "monodromy violations: " << rep.monodromy_violations << "\n"
              << "ok: " << (rep.ok ? "true" : "false") << "\n";
    return rep.ok ? 0 : 1;
}

// --- move -------------------------------------------------------------------

struct MoveArgs {
    std::string locus, dir, types, out, before;
    int site = -1;
    bool flop = false;
    bool conifold = false;
};

void run_move(const MoveArgs& a) {
    if (a.flop == a.conifold) {
        throw UsageError{"--flop/--conifold: choose exactly one move kind"};
    }
    const AssembledLocus L = load_locus(a.locus);
    if (!a.before.empty()) write_text_file(a.before, locus_text(L));

    AssembledLocus result;
    if (a.flop) {
        if (!a.dir.empty()) throw UsageError{"--dir: only valid with --conifold"};
        if (!a.types.empty()) throw UsageError{"--types: only valid with --conifold"};
        result = flop_move(L, a.site);
    } else {
        const std::vector<ConifoldSite> sites = conifold_sites(L);
        if (a.site < 0 || a.site >= static_cast<int>(sites.size())) {
            throw UsageError{"--site: index " + std::to_string(a.site) +
                             " out of range (locus has " + std::to_string(sites.size()) +
                             " conifold sites)"};
        }
        ConifoldDirection dir;
        if (a.dir == "resolve") {
            dir = ConifoldDirection::Resolve;
        } else if (a.dir == "smooth") {
            dir = ConifoldDirection::Smooth;
        } else if (a.dir == "degenerate") {
            dir = ConifoldDirection::Degenerate;
        } else {
            throw UsageError{"--dir: expected resolve, smooth, or degenerate" +
                             (a.dir.empty() ? std::string(" (required with --conifold)")
                                            : ", got '" + a.dir + "'")};
        }
        std::optional<std::pair<FibreType, FibreType>> types;
        if (!a.types.empty()) {
            const std::size_t comma = a.types.find(',');
            if (comma == std::string::npos) {
                throw UsageError{"--types: expected two comma-separated fibre types"};
            }
            types = {fibre_type_from(a.types.substr(0, comma), "--types"),
                     fibre_type_from(a.types.substr(comma + 1), "--types")};
        }
        result = conifold_move(L, sites[a.site].base_edge, sites[a.site].slot, dir, types);
    }
    emit(locus_text(result), a.out);
}

// --- localmodel ---------------------------------------------------------------

struct LocalModelArgs {
    std::string model, out, svg;
    double eps = 0.0;
    double delta = 0.0;
    int samples = 2000;
};

void run_localmodel(const LocalModelArgs& a) {
    const std::optional<LocalModel> m = parse_local_model(a.model);
    if (!m) throw UsageError{"--model: expected T2R_Y, T2R_X, S1R2_Y, or S1R2_X, got '" + a.model + "'"};
    if (a.samples < 1) throw UsageError{"--samples: need a positive sample count"};
    const LocalModelParams params{*m, a.eps, a.delta};
    const SingularLocusImage image = singular_locus_image(params, a.samples);
    const std::vector<Junction> junctions = junction_points(image);

    std::cout << "model: " << to_string(*m) << "  eps: " << fmt(a.eps) << "  delta: " << fmt(a.delta)
              << "\n"
              << "cloud points: " << image.cloud.size() << "\n"
              << "reference pieces: " << image.reference.size() << "\n"
              << "junctions: " << junctions.size() << "\n";
    for (const Junction& j : junctions) {
        std::cout << "  valence " << j.valence << " at (" << fmt(j.pos[0], 4) << ", "
                  << fmt(j.pos[1], 4) << ", " << fmt(j.pos[2], 4) << ")\n";
    }

    if (!a.out.empty()) {
        std::ostringstream csv;
        csv << "x,y,z\n" << std::setprecision(9);
        for (const auto& p : image.cloud) csv << p[0] << "," << p[1] << "," << p[2] << "\n";
        write_text_file(a.out, csv.str());
    }
    if (!a.svg.empty()) {
        SvgCanvas svg;
        std::vector<std::array<double, 2>> flat;
        flat.reserve(image.cloud.size());
        for (const auto& p : image.cloud) flat.push_back({p[0], p[1]});
        draw_cloud(svg, flat, "#3050c0");
        for (const LocusPiece& piece : image.reference) {
            for (std::size_t i = 0; i + 1 < piece.polyline.size(); ++i) {
                svg.line(piece.polyline[i][0], piece.polyline[i][1], piece.polyline[i + 1][0],
                         piece.polyline[i + 1][1], "#202020", 0.02);
            }
        }
        emit_svg(svg, a.svg);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lagrangian torus-fibration toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    DualArgs dual_args;
    auto* dual_cmd = app.add_subcommand("dual", "Dual of a lattice polytope about the origin");
    dual_cmd->add_option("polytope", dual_args.polytope, "polytope file")->required();
    dual_cmd->add_option("--sense", dual_args.sense, "polar|reflexive (overrides the file's sense line)");
    dual_cmd->add_option("-o,--out", dual_args.out, "output polytope file (default stdout)");
    dual_cmd->callback([&] { run_dual(dual_args); });

    PointsArgs points_args;
    auto* points_cmd = app.add_subcommand("points", "Lattice points of a polytope or one face");
    points_cmd->add_option("polytope", points_args.polytope, "polytope file")->required();
    points_cmd->add_option("--face", points_args.face, "face id in the documented face order");
    points_cmd->add_option("-o,--out", points_args.out, "output file (default stdout)");
    points_cmd->callback([&] { run_points(points_args); });

    SubdivideArgs subdivide_args;
    auto* subdivide_cmd =
        app.add_subcommand("subdivide", "Regular subdivision of a polygon induced by weights");
    subdivide_cmd->add_option("polytope", subdivide_args.polytope, "polygon file")->required();
    subdivide_cmd->add_option("weights", subdivide_args.weights, "weight file")->required();
    subdivide_cmd->add_option("-o,--out", subdivide_args.out, "output subdivision file");
    subdivide_cmd->add_option("--svg", subdivide_args.svg, "figure output");
    subdivide_cmd->callback([&] { run_subdivide(subdivide_args); });

    SpineArgs spine_args;
    auto* spine_cmd = app.add_subcommand("spine", "Dual spine graph of a weighted subdivision");
    spine_cmd->add_option("subdivision", spine_args.subdivision, "subdivision file")->required();
    spine_cmd->add_option("-o,--out", spine_args.out, "output graph file");
    spine_cmd->add_option("--svg", spine_args.svg, "figure output");
    spine_cmd->callback([&] { run_spine(spine_args); });

    AmoebaArgs amoeba_args;
    auto* amoeba_cmd = app.add_subcommand("amoeba", "Sample amoebas and report spine convergence");
    amoeba_cmd->add_option("--d", amoeba_args.degree, "curve degree")->required();
    amoeba_cmd->add_option("--t", amoeba_args.ts, "parameter list, e.g. 0.5,0.3,0.1")
        ->required()
        ->delimiter(',');
    amoeba_cmd->add_option("--samples", amoeba_args.samples, "points per amoeba")->required();
    amoeba_cmd->add_option("--seed", amoeba_args.seed, "sampling seed");
    amoeba_cmd->add_option("-o,--out", amoeba_args.out, "x,y CSV of the last-t cloud");
    amoeba_cmd->add_option("--svg", amoeba_args.svg, "figure output (cloud + spine)");
    amoeba_cmd->callback([&] { run_amoeba(amoeba_args); });

    FlowArgs flow_args;
    auto* flow_cmd =
        app.add_subcommand("flow", "Gradient-flow trajectories from the large complex limit");
    flow_cmd->add_option("--psi", flow_args.psi, "family parameter")->required();
    flow_cmd->add_option("--points", flow_args.points, "trajectory count")->required();
    flow_cmd->add_option("--tol", flow_args.tol, "endpoint tolerance on the flow level")->required();
    flow_cmd->add_option("--eps", flow_args.eps, "coefficient perturbation size");
    flow_cmd->add_option("--seed", flow_args.seed, "perturbation seed");
    flow_cmd->add_option("-o,--out", flow_args.out, "per-sample CSV (trajectory,time,im_s,p_psi)");
    flow_cmd->callback([&] { run_flow(flow_args); });

    AssembleArgs assemble_args;
    auto* assemble_cmd =
        app.add_subcommand("assemble", "Glue per-face spine graphs into a singular locus");
    assemble_cmd->add_option("base", assemble_args.base, "base polytope file")->required();
    assemble_cmd->add_option("graphs", assemble_args.graphs, "graph files, one per 2-face in face order");
    assemble_cmd->add_flag("--standard", assemble_args.standard,
                           "use the standard spine on every 2-face");
    assemble_cmd->add_option("-o,--out", assemble_args.out, "output locus file");
    assemble_cmd->callback([&] { run_assemble(assemble_args); });

    std::string euler_locus;
    auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic of a fibred space");
    euler_cmd->add_option("locus", euler_locus, "locus file")->required();
    euler_cmd->callback([&] { run_euler(euler_locus); });

    MonodromyArgs monodromy_args;
    auto* monodromy_cmd = app.add_subcommand("monodromy", "Standard vertex monodromy triple");
    monodromy_cmd->add_option("--type", monodromy_args.type, "fibre type (II or III)")->required();
    monodromy_cmd->add_option("-o,--out", monodromy_args.out, "output file (default stdout)");
    monodromy_cmd->callback([&] { run_monodromy(monodromy_args); });

    DualizeArgs dualize_args;
    auto* dualize_cmd = app.add_subcommand("dualize", "Mirror-dual fibration datum");
    dualize_cmd->add_option("locus", dualize_args.locus, "locus file")->required();
    dualize_cmd->add_option("-o,--out", dualize_args.out, "output locus file");
    dualize_cmd->callback([&] { run_dualize(dualize_args); });

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify-mirror", "Check two loci for fibration-level mirror duality");
    verify_cmd->add_option("locusA", verify_args.locus_a, "first locus file")->required();
    verify_cmd->add_option("locusB", verify_args.locus_b, "second locus file")->required();
    verify_cmd->callback([&] { exit_code = run_verify_mirror(verify_args); });

    MoveArgs move_args;
    auto* move_cmd = app.add_subcommand("move", "Apply a flop or conifold move to a locus");
    move_cmd->add_flag("--flop", move_args.flop, "flop the bounded edge --site");
    move_cmd->add_flag("--conifold", move_args.conifold, "conifold move at site index --site");
    move_cmd->add_option("locus", move_args.locus, "locus file")->required();
    move_cmd->add_option("--site", move_args.site, "edge id (--flop) or site index (--conifold)")
        ->required();
    move_cmd->add_option("--dir", move_args.dir, "resolve|smooth|degenerate (conifold only)");
    move_cmd->add_option("--types", move_args.types, "resolved junction types, e.g. III,III");
    move_cmd->add_option("-o,--out", move_args.out, "moved locus file");
    move_cmd->add_option("--before", move_args.before, "also write the canonical input locus here");
    move_cmd->callback([&] { run_move(move_args); });

    LocalModelArgs localmodel_args;
    auto* localmodel_cmd =
        app.add_subcommand("localmodel", "Singular-locus image of a local conifold fibration");
    localmodel_cmd->add_option("--model", localmodel_args.model, "T2R_Y|T2R_X|S1R2_Y|S1R2_X")
        ->required();
    localmodel_cmd->add_option("--eps", localmodel_args.eps, "smoothing parameter (X models)");
    localmodel_cmd->add_option("--delta", localmodel_args.delta, "resolution size (Y models)");
    localmodel_cmd->add_option("--samples", localmodel_args.samples, "cloud sample count");
    localmodel_cmd->add_option("-o,--out", localmodel_args.out, "x,y,z CSV of the cloud");
    localmodel_cmd->add_option("--svg", localmodel_args.svg, "figure output");
    localmodel_cmd->callback([&] { run_localmodel(localmodel_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the offending flag or the help text
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.message << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";  // what() leads with the stable name
        return 1;
    }
    return exit_code;
}
