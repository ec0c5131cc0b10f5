#include "concavlab/errors.hpp"
#include "concavlab/inequalities.hpp"
#include "concavlab/io.hpp"
#include "concavlab/local_analysis.hpp"
#include "concavlab/mu_structures.hpp"
#include "concavlab/reconstruction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace concavlab;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Violated = 1, BadInput = 2, NotConverged = 3, ReproductionFailed = 4 };

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NoConvergence:
    case ErrorKind::FacetVanished:
    case ErrorKind::GridTooCoarse: return NotConverged;
    case ErrorKind::NoViolationFound:
    case ErrorKind::DegenerateDeficit:
    case ErrorKind::Indecomposable: return ReproductionFailed;
    default: return BadInput;
    }
}

struct Output {
    std::string path;
    std::string format; // empty: the subcommand's default
};

// Machine report to the output file (or stdout without --out); the summary
// line goes to stdout only when a file was written.
void emit(const Output& out, const std::string& body, const std::string& summary) {
    if (out.path.empty()) {
        std::cout << body;
        if (!body.empty() && body.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out.path);
    if (!f) throw Error(ErrorKind::Parse, "cannot write '" + out.path + "'");
    f << body;
    if (!body.empty() && body.back() != '\n') f << '\n';
    std::cout << summary << "\n";
}

std::string report_csv(const DeficitReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << "inequality,functional,body_k,body_l,lhs,rhs,deficit,normalized_deficit\n";
    os << r.inequality << ',' << r.functional << ',' << (r.bodies.size() > 0 ? r.bodies[0] : "") << ','
       << (r.bodies.size() > 1 ? r.bodies[1] : "") << ',' << r.lhs << ',' << r.rhs << ',' << r.deficit << ','
       << r.normalized_deficit << "\n";
    return os.str();
}

std::string render(const json& j) { return j.dump(2); }

std::string summary_of(const DeficitReport& r) {
    std::ostringstream os;
    os << r.inequality << "/" << r.functional << ": deficit " << r.deficit << " (normalized "
       << r.normalized_deficit << ")";
    return os.str();
}

json decompose_demo(std::uint64_t seed) {
    const Polytope p = random_polytope(3, seed);
    const DecompositionCheck c = check_decomposition(surface_area_measure(p));
    json j;
    j["case"] = "decompose-demo";
    j["seed"] = seed;
    j["polytope"] = polytope_to_json(p);
    j["atoms"] = c.atoms;
    j["sum_error"] = c.sum_error;
    j["ratio_spread"] = c.ratio_spread;
    j["alexandrov"] = c.alexandrov;
    j["area_error"] = {c.area_error_a, c.area_error_b};
    j["volumes"] = {c.volume_a, c.volume_b};
    Mat simplex = Mat::Zero(3, 4);
    simplex(0, 1) = simplex(1, 2) = simplex(2, 3) = 1.0;
    try {
        decompose(surface_area_measure(convex_hull(simplex)));
        j["simplex"] = "decomposed";
    } catch (const Error& e) {
        j["simplex"] = to_string(e.kind());
    }
    j["ok"] = c.sum_error <= 1e-10 && c.ratio_spread > 1e-6 && c.alexandrov && c.area_error_a <= 1e-8 &&
              c.area_error_b <= 1e-8 && j["simplex"] == "Indecomposable";
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"concavlab: Minkowski/Blaschke reconstruction and concavity checks for convex bodies"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_option("--out", out.path, "Write the machine report to this file");
    app.add_option("--format", out.format, "Report format")->check(CLI::IsMember({"json", "csv"}));

    const std::vector<std::string> inequalities{"bm", "ks", "mu-concavity", "quant-ks"};
    const std::vector<std::string> functionals{"volume", "lambda1", "lambda2", "torsion", "capacity"};
    const std::vector<std::string> search_cases{"rem3", "lambda2-bm"};
    const std::vector<std::string> reproduce_cases{"rem1",     "rem3",             "torsion-limit", "lambda1-limit",
                                                   "triangle", "second-variation", "decompose-demo"};

    std::string measure_path, a_path, b_path, structure, a_desc, b_desc, inequality, functional, body_desc, which;
    double tol = SolverConfig{}.area_tol;
    int samples = 200, dim = 3, grid = 25, lmax = 6;
    std::uint64_t seed = 42;

    app.footer("Cases:\n"
               "  check --inequality    bm ks mu-concavity quant-ks\n"
               "  check --functional    volume lambda1 lambda2 torsion capacity\n"
               "  mu-sum --structure    volume lambda1_box torsion_rect\n"
               "  search --case         rem3 lambda2-bm\n"
               "  reproduce --case      rem1 rem3 torsion-limit lambda1-limit triangle second-variation decompose-demo\n"
               "Exit codes: 0 success, 1 inequality violated in check, 2 input error, 3 no convergence,\n"
               "4 reproduction failed. CONCAVLAB_THREADS caps the worker count.");

    auto* solve = app.add_subcommand("solve-minkowski", "Polytope with the given facet normals and areas");
    solve->add_option("--measure", measure_path, "Measure JSON file")->required();
    solve->add_option("--tol", tol, "Relative facet-area tolerance")->capture_default_str();

    auto* bsum = app.add_subcommand("blaschke-sum", "Blaschke sum of two polytopes");
    bsum->add_option("--a", a_path, "Polytope JSON file")->required();
    bsum->add_option("--b", b_path, "Polytope JSON file")->required();

    auto* musum = app.add_subcommand("mu-sum", "Sum along a mu-structure, with its concavity deficit");
    musum->add_option("--structure", structure, "Structure")
        ->required()
        ->check(CLI::IsMember({"volume", "lambda1_box", "torsion_rect"}));
    musum->add_option("--a", a_desc, "Body descriptor, e.g. box:1,2,2")->required();
    musum->add_option("--b", b_desc, "Body descriptor")->required();

    auto* check = app.add_subcommand("check", "Seeded sweep of an inequality over random pairs");
    check->add_option("--inequality", inequality, "Inequality")->required()->check(CLI::IsMember(inequalities));
    check->add_option("--functional", functional, "Functional")->required()->check(CLI::IsMember(functionals));
    check->add_option("--samples", samples, "Number of pairs")->capture_default_str();
    check->add_option("--seed", seed, "Seed")->capture_default_str();
    check->add_option("--dim", dim, "Dimension of volume samples")->capture_default_str();

    auto* search = app.add_subcommand("search", "Seeded search for counterexamples");
    search->add_option("--case", which, "Case")->required()->check(CLI::IsMember(search_cases));
    search->add_option("--grid", grid, "Grid points per axis")->capture_default_str();
    search->add_option("--seed", seed, "Seed")->capture_default_str();
    search->add_option("--samples", samples, "Random pairs on top of the grid")->capture_default_str();

    auto* reproduce = app.add_subcommand("reproduce", "Closed-form reproductions and limit reports");
    reproduce->add_option("--case", which, "Case")->required()->check(CLI::IsMember(reproduce_cases));
    reproduce->add_option("--lmax", lmax, "Highest degree for second-variation")->capture_default_str();
    reproduce->add_option("--seed", seed, "Polytope seed for decompose-demo")->capture_default_str();

    auto* quotient = app.add_subcommand("quotient", "Isoperimetric-type quotient of a body");
    quotient->add_option("--functional", functional, "Functional")->required()->check(CLI::IsMember(functionals));
    quotient->add_option("--body", body_desc, "Body descriptor: box:1,2,2 rect:0.01 spheroid:10,1 triangle")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : BadInput;
    }

    try {
        if (*solve) {
            const DirectionalMeasure m = measure_from_json(read_json_file(measure_path));
            SolverConfig cfg;
            cfg.area_tol = tol;
            SolverDiagnostics diag;
            const Polytope p = solve_minkowski(m, cfg, &diag);
            json j = polytope_to_json(p);
            std::ostringstream s;
            s << "solved: " << p.num_vertices() << " vertices, " << diag.iters << " iterations, area error "
              << diag.max_rel_area_err;
            emit(out, render(j), s.str());
        } else if (*bsum) {
            const Polytope p = blaschke_sum(polytope_from_json(read_json_file(a_path)),
                                            polytope_from_json(read_json_file(b_path)));
            std::ostringstream s;
            s << "blaschke sum: volume " << p.volume();
            emit(out, render(polytope_to_json(p)), s.str());
        } else if (*musum) {
            const Structure st = parse_structure(structure);
            const Body k = parse_body(a_desc), l = parse_body(b_desc);
            const DeficitReport r = mu_concavity_deficit(st, k, l);
            json j;
            j["structure"] = to_string(st);
            j["a"] = body_to_json(k);
            j["b"] = body_to_json(l);
            j["sum"] = body_to_json(mu_sum(st, k, l));
            j["concavity"] = to_json(r);
            emit(out, out.format == "csv" ? report_csv(r) : render(j), summary_of(r));
        } else if (*check) {
            const SweepResult r = check_sweep(inequality, functional, samples, seed, dim);
            json j = to_json(r);
            j["config"] = {{"inequality", inequality}, {"functional", functional}, {"samples", samples},
                           {"seed", seed}, {"dim", dim}};
            std::ostringstream s;
            s << inequality << "/" << functional << ": " << samples << " samples, min deficit " << r.min_deficit
              << ", " << r.violations << " violations";
            emit(out, out.format == "csv" ? to_csv(r) : render(j), s.str());
            return r.violations > 0 ? Violated : Ok;
        } else if (*search) {
            const DeficitReport r = which == "rem3" ? search_rem3(grid, seed, samples)
                                                    : lambda2_bm_search(grid, seed, samples);
            json j = to_json(r);
            j["config"] = {{"case", which}, {"grid", grid}, {"seed", seed}, {"samples", samples}};
            emit(out, out.format == "csv" ? report_csv(r) : render(j), summary_of(r));
        } else if (*reproduce) {
            bool ok = true;
            std::string body, summary;
            if (which == "rem3") {
                const DeficitReport r = reproduce_rem3();
                body = out.format == "csv" ? report_csv(r) : render(to_json(r));
                summary = summary_of(r);
                ok = r.deficit < 0;
            } else if (which == "rem1") {
                const Rem1Result r = reproduce_rem1();
                if (out.format == "csv") {
                    std::ostringstream os;
                    os.precision(17);
                    os << "k,a,capacity,surface_area,quotient\n";
                    for (const auto& row : r.rows)
                        os << row.k << ',' << row.a << ',' << row.capacity << ',' << row.surface_area << ','
                           << row.quotient << "\n";
                    body = os.str();
                } else {
                    body = render(to_json(r));
                }
                ok = r.strictly_increasing && r.growth > 1e3;
                summary = "rem1: growth " + std::to_string(r.growth);
            } else if (which == "second-variation") {
                const auto rows = coercivity_profile(lmax);
                if (out.format == "json") {
                    json j = json::array();
                    for (const auto& row : rows) j.push_back({{"l", row.l}, {"value", row.value}, {"expected", row.expected}});
                    body = render(j);
                } else {
                    std::ostringstream os;
                    os.precision(12);
                    os << "l,value,expected\n";
                    for (const auto& row : rows) os << row.l << ',' << row.value << ',' << row.expected << "\n";
                    body = os.str();
                }
                for (const auto& row : rows) ok = ok && std::abs(row.value - row.expected) <= 1e-6;
                summary = "second-variation: " + std::to_string(rows.size()) + " rows";
            } else {
                json j = which == "torsion-limit"   ? torsion_limit_report()
                         : which == "lambda1-limit" ? lambda1_limit_report()
                         : which == "triangle"      ? triangle_report()
                                                    : decompose_demo(seed);
                if (which == "torsion-limit") ok = j["slope_ok"].get<bool>() && j["ratio_ok"].get<bool>();
                else if (which == "decompose-demo") ok = j["ok"].get<bool>();
                else ok = j["agrees"].get<bool>();
                body = render(j);
                summary = which + (ok ? ": ok" : ": failed");
            }
            emit(out, body, summary);
            if (!ok) {
                std::cerr << "reproduction failed: " << which << "\n";
                return ReproductionFailed;
            }
        } else if (*quotient) {
            const QuotientReport q = isoperimetric_quotient(functional, parse_body(body_desc));
            json j{{"functional", q.functional}, {"body", q.body},
                   {"exponent", q.exponent},     {"numerator", q.numerator},
                   {"denominator_kind", q.denominator_kind}, {"denominator", q.denominator},
                   {"value", q.value}};
            emit(out, render(j), q.functional + " quotient " + std::to_string(q.value));
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "Parse: " << e.what() << "\n";
        return BadInput;
    }
    return Ok;
}
