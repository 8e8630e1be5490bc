#include "gwalk/errors.hpp"
#include "gwalk/graph.hpp"
#include "gwalk/linewalk.hpp"
#include "gwalk/spectral.hpp"
#include "gwalk/structure.hpp"
#include "gwalk/walkops.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw gwalk::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

gwalk::Graph load_graph(const std::string& spec, const std::string& format) {
    constexpr std::string_view builtin_prefix = "builtin:";
    if (spec.rfind(builtin_prefix, 0) == 0)
        return gwalk::builtin(spec.substr(builtin_prefix.size()));
    const std::string text = read_file(spec);
    std::string fmt = format;
    if (fmt == "auto") {
        if (spec.ends_with(".g6") || spec.ends_with(".graph6"))
            fmt = "graph6";
        else if (spec.ends_with(".lcf"))
            fmt = "lcf";
        else
            fmt = "adjlist";
    }
    if (fmt == "graph6")
        return gwalk::parse_graph6(text);
    if (fmt == "lcf") {
        std::string trimmed = text;
        while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r' ||
                                    trimmed.back() == ' '))
            trimmed.pop_back();
        return gwalk::parse_lcf(trimmed);
    }
    if (fmt == "adjlist")
        return gwalk::parse_adjlist(text);
    throw gwalk::ParseError("unknown input format '" + fmt + "'");
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw gwalk::ParseError("cannot write '" + path + "'");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::string graph_report_text(const gwalk::Graph& g, const gwalk::GraphReport& r) {
    std::ostringstream out;
    out << "vertices: " << g.vertex_count() << '\n'
        << "edges: " << g.edge_count() << '\n'
        << "arcs: " << g.arc_count() << '\n'
        << "degree_min: " << r.degree_min << '\n'
        << "degree_max: " << r.degree_max << '\n';
    if (r.is_regular)
        out << "regular: yes (k=" << *r.regularity_k << ")\n";
    else
        out << "regular: no\n";
    out << "girth: ";
    if (r.girth)
        out << *r.girth;
    else
        out << "infinity";
    out << '\n' << "diameter: ";
    if (r.diameter)
        out << *r.diameter;
    else
        out << "infinity";
    out << '\n';
    return out.str();
}

std::string graph_report_json(const gwalk::Graph& g, const gwalk::GraphReport& r) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["arcs"] = g.arc_count();
    j["degree_min"] = r.degree_min;
    j["degree_max"] = r.degree_max;
    j["is_regular"] = r.is_regular;
    if (r.regularity_k)
        j["regularity_k"] = *r.regularity_k;
    if (r.girth)
        j["girth"] = *r.girth;
    else
        j["girth"] = "infinity";
    if (r.diameter)
        j["diameter"] = *r.diameter;
    else
        j["diameter"] = "infinity";
    return j.dump(2) + "\n";
}

std::string int_poly_json(const gwalk::IntPoly& p) {
    std::ostringstream out;
    out << '[';
    const auto& coeffs = p.coefficients();
    if (coeffs.empty()) {
        out << '0';
    } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i)
                out << ',';
            out << coeffs[i];
        }
    }
    out << ']';
    return out.str();
}

struct GraphInput {
    std::string spec;
    std::string format = "auto";
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--in", in.spec, "graph input: a file path or builtin:NAME")->required();
    cmd->add_option("--in-format", in.format, "input format: auto|adjlist|graph6|lcf")
        ->check(CLI::IsMember({"auto", "adjlist", "graph6", "lcf"}));
}

int run(int argc, char** argv) {
    CLI::App app{"Exact positive supports, phase patterns and spectral lifts of Grover walk powers"};
    app.require_subcommand(1);

    // graph info
    auto* graph_cmd = app.add_subcommand("graph", "graph inspection");
    graph_cmd->require_subcommand(1);
    auto* info = graph_cmd->add_subcommand("info", "degree/girth/diameter report");
    GraphInput info_in;
    std::string info_format = "text";
    add_graph_input(info, info_in);
    info->add_option("--format", info_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // walk phases
    auto* walk_cmd = app.add_subcommand("walk", "line-walk phase patterns");
    walk_cmd->require_subcommand(1);
    auto* phases = walk_cmd->add_subcommand("phases", "exact phase grid for steps 1..N");
    int phases_k = 0, phases_steps = 0;
    std::string phases_format = "ascii", phases_out;
    phases->add_option("--k", phases_k, "regularity parameter (k >= 3)")->required();
    phases->add_option("--steps", phases_steps, "number of steps")->required();
    phases->add_option("--format", phases_format, "ascii|csv|pgm")
        ->check(CLI::IsMember({"ascii", "csv", "pgm"}));
    phases->add_option("--out", phases_out, "output path (default stdout)");

    // structure formula / verify
    auto* structure_cmd = app.add_subcommand("structure", "support decomposition of S(U^n)");
    structure_cmd->require_subcommand(1);
    auto* formula = structure_cmd->add_subcommand("formula", "coefficients from the exact line walk");
    int formula_k = 0, formula_n = 0;
    std::string formula_format = "text";
    formula->add_option("--k", formula_k, "regularity (k >= 3)")->required();
    formula->add_option("--n", formula_n, "power n >= 1")->required();
    formula->add_option("--format", formula_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = structure_cmd->add_subcommand("verify", "brute-force check on a graph");
    GraphInput verify_in;
    int verify_n = 0;
    std::string verify_report;
    add_graph_input(verify_cmd, verify_in);
    verify_cmd->add_option("--n", verify_n, "power n >= 1")->required();
    verify_cmd->add_option("--report", verify_report, "write the JSON report here");

    // spectral curves / lift / appendix
    auto* spectral_cmd = app.add_subcommand("spectral", "eigenvalue lift machinery");
    spectral_cmd->require_subcommand(1);
    auto* curves = spectral_cmd->add_subcommand("curves", "sample the real/imaginary orbit curves");
    int curves_k = 0, curves_n = 0, curves_samples = 0;
    std::string curves_min, curves_max, curves_out;
    curves->add_option("--k", curves_k, "regularity (k >= 3)")->required();
    curves->add_option("--n", curves_n, "power n >= 1")->required();
    curves->add_option("--mu-min", curves_min, "lower end of the mu range (exact decimal)")->required();
    curves->add_option("--mu-max", curves_max, "upper end of the mu range (exact decimal)")->required();
    curves->add_option("--samples", curves_samples, "number of sample points (>= 2)")->required();
    curves->add_option("--out", curves_out, "output path (default stdout)");

    auto* lift = spectral_cmd->add_subcommand("lift", "check adjacency eigenvalue lifting");
    GraphInput lift_in;
    int lift_n = 0;
    double lift_tol = 1e-8;
    add_graph_input(lift, lift_in);
    lift->add_option("--n", lift_n, "power n >= 1")->required();
    lift->add_option("--tol", lift_tol, "relative residual tolerance (default 1e-8)");

    auto* appendix = spectral_cmd->add_subcommand("appendix", "orbit curve polynomials Q_n, P_n");
    int appendix_k = 0, appendix_n = 0;
    appendix->add_option("--k", appendix_k, "regularity (k >= 3)")->required();
    appendix->add_option("--n", appendix_n, "power n >= 1")->required();

    // zeta
    auto* zeta_cmd = app.add_subcommand("zeta", "reciprocal zeta polynomial det(I - u S(U^n))");
    GraphInput zeta_in;
    int zeta_n = 1;
    add_graph_input(zeta_cmd, zeta_in);
    zeta_cmd->add_option("--n", zeta_n, "power n >= 1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (*info) {
        const gwalk::Graph g = load_graph(info_in.spec, info_in.format);
        const gwalk::GraphReport r = gwalk::analyze(g);
        std::cout << (info_format == "json" ? graph_report_json(g, r) : graph_report_text(g, r));
        return 0;
    }

    if (*phases) {
        const gwalk::PhaseGrid grid = gwalk::pattern(phases_k, phases_steps);
        if (phases_format == "ascii")
            write_output(phases_out, grid.to_ascii());
        else if (phases_format == "csv")
            write_output(phases_out, grid.to_csv());
        else
            write_output(phases_out, grid.to_pgm());
        return 0;
    }

    if (*formula) {
        const gwalk::StructureFormula f = gwalk::coefficients(formula_k, formula_n);
        const auto fmt = formula_format == "json" ? gwalk::FormulaFormat::Json
                                                  : gwalk::FormulaFormat::Text;
        std::cout << gwalk::pretty_print(f, fmt) << "\n";
        return 0;
    }

    if (*verify_cmd) {
        const gwalk::Graph g = load_graph(verify_in.spec, verify_in.format);
        const gwalk::VerificationReport report = gwalk::verify(g, verify_n);
        if (!verify_report.empty()) {
            write_output(verify_report, report.to_json() + "\n");
            std::cout << (report.pass ? "pass" : "FAIL") << " (n=" << report.n
                      << ", k=" << report.k << ", mismatches=" << report.mismatches.size()
                      << ")\n";
        } else {
            std::cout << report.to_json() << "\n";
        }
        return report.pass ? 0 : kExitVerificationFailed;
    }

    if (*curves) {
        const gwalk::Rational lo = gwalk::rational_from_string(curves_min);
        const gwalk::Rational hi = gwalk::rational_from_string(curves_max);
        const auto points = gwalk::curve_samples(curves_k, curves_n, lo, hi, curves_samples);
        write_output(curves_out, gwalk::curve_csv(points));
        return 0;
    }

    if (*lift) {
        const gwalk::Graph g = load_graph(lift_in.spec, lift_in.format);
        const gwalk::LiftReport report = gwalk::lift_verify(g, lift_n, lift_tol);
        std::cout << report.to_json() << "\n";
        return report.pass ? 0 : kExitVerificationFailed;
    }

    if (*appendix) {
        const gwalk::CurvePolys polys = gwalk::appendix_polys(appendix_k, appendix_n);
        std::cout << polys.to_json(appendix_k, appendix_n) << "\n";
        return 0;
    }

    if (*zeta_cmd) {
        const gwalk::Graph g = load_graph(zeta_in.spec, zeta_in.format);
        const gwalk::IntPoly z = gwalk::zeta_poly(g, zeta_n);
        std::cout << "{\"n\": " << zeta_n << ", \"arcs\": " << g.arc_count()
                  << ", \"coefficients\": " << int_poly_json(z) << "}\n";
        return 0;
    }

    std::cerr << "error: no subcommand selected\n";
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gwalk::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const gwalk::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
