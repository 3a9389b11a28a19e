// tgv1d: command-line front end for the 1D TGV denoising toolkit.
//
// Subcommands:
//   denoise  solve one of the three problems, write solution / sigma CSVs
//            and a JSON run manifest
//   certify  evaluate the optimality certificate for a solution
//   regions  classify a (lambda1, lambda2) grid, write CSV + SVG raster
//   oracle   emit a closed-form minimizer as JSON + sampled CSV
//   compare  L2 / Linf error table between two solution CSVs
//   sweep    solve along a weight path, write objective/seminorm/verdict CSV
//
// Exit codes: 0 ok, 2 usage or input error, 3 solver non-convergence (or a
// region map with more than 5% failed cells).

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tgv1d/certify.hpp"
#include "tgv1d/functionals.hpp"
#include "tgv1d/io.hpp"
#include "tgv1d/oracles.hpp"
#include "tgv1d/piecewise.hpp"
#include "tgv1d/signal.hpp"
#include "tgv1d/solver.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace tgv1d;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

DataId parse_data(const std::string& s) {
    if (s == "abs") return DataId::AbsData;
    if (s == "ind") return DataId::IndData;
    if (s == "quad") return DataId::QuadData;
    throw Usage("unknown data id '" + s + "' (expected abs, ind, or quad)");
}

ProblemKind parse_problem(const std::string& s) {
    if (s == "tv") return ProblemKind::TV1;
    if (s == "tv2") return ProblemKind::TV2;
    if (s == "tgv") return ProblemKind::TGV;
    throw Usage("unknown problem '" + s + "' (expected tv, tv2, or tgv)");
}

std::string out_path(const std::string& dir, const std::string& prefix,
                     const std::string& name) {
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / (prefix + name)).string();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << text;
    if (!os) throw std::runtime_error("write failed: " + path);
}

// ------------------------------------------------------- option bundles

struct DataOpts {
    std::string data;
    std::string input;
    std::size_t n = 4096;

    void attach(CLI::App* cmd, bool with_input) {
        auto* d = cmd->add_option("--data", data, "builtin data: abs, ind, quad");
        cmd->add_option("--n", n, "grid size");
        if (with_input) {
            auto* in = cmd->add_option("--input", input,
                                       "CSV file with x,value rows");
            d->excludes(in);
            in->excludes(d);
        } else {
            d->required();
        }
    }

    bool from_file() const { return !input.empty(); }

    GridSignal load() const {
        if (!input.empty()) return read_grid_csv(input);
        if (data.empty())
            throw Usage("exactly one of --data and --input is required");
        const DataId id = parse_data(data);
        if (id == DataId::IndData && n % 4 != 0)
            throw Usage("--n must be divisible by 4 for ind data");
        return sample(id, n);
    }

    DataId id() const {
        if (data.empty()) throw Usage("--data is required here");
        return parse_data(data);
    }
};

struct SolverOpts {
    std::size_t max_iters = 0;
    double tol_gap = 0.0;
    double step_ratio = 0.0;
    std::size_t check_every = 0;
    std::string config_path;
    CLI::Option* o_iters = nullptr;
    CLI::Option* o_tol = nullptr;
    CLI::Option* o_ratio = nullptr;
    CLI::Option* o_check = nullptr;

    void attach(CLI::App* cmd) {
        o_iters = cmd->add_option("--max-iters", max_iters,
                                  "iteration cap for the splitting solver");
        o_tol = cmd->add_option("--tol-gap", tol_gap,
                                "relative duality-gap stopping tolerance");
        o_ratio = cmd->add_option("--step-ratio", step_ratio,
                                  "primal/dual step split");
        o_check = cmd->add_option("--check-every", check_every,
                                  "gap evaluation period");
        cmd->add_option("--config", config_path,
                        "key=value file overriding solver defaults");
    }

    SolverConfig resolve() const {
        SolverConfig cfg;
        if (!config_path.empty()) apply_file(cfg, config_path);
        if (o_iters && o_iters->count()) cfg.max_iters = max_iters;
        if (o_tol && o_tol->count()) cfg.tol_gap = tol_gap;
        if (o_ratio && o_ratio->count()) cfg.step_ratio = step_ratio;
        if (o_check && o_check->count()) cfg.check_every = check_every;
        cfg.validate();
        return cfg;
    }

    static void apply_file(SolverConfig& cfg, const std::string& path) {
        std::ifstream is(path);
        if (!is) throw Usage("cannot open config file: " + path);
        std::string line;
        while (std::getline(is, line)) {
            const std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto l = line.find_first_not_of(" \t\r");
            if (l == std::string::npos) continue;
            const auto r = line.find_last_not_of(" \t\r");
            line = line.substr(l, r - l + 1);
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw Usage("config line without '=': " + line);
            const std::string key = line.substr(0, eq);
            const std::string val = line.substr(eq + 1);
            try {
                if (key == "max_iters")
                    cfg.max_iters = static_cast<std::size_t>(std::stoull(val));
                else if (key == "tol_gap")
                    cfg.tol_gap = std::stod(val);
                else if (key == "step_ratio")
                    cfg.step_ratio = std::stod(val);
                else if (key == "check_every")
                    cfg.check_every =
                        static_cast<std::size_t>(std::stoull(val));
                else
                    throw Usage("unknown config key: " + key);
            } catch (const Usage&) {
                throw;
            } catch (const std::exception&) {
                throw Usage("bad config value for " + key + ": " + val);
            }
        }
    }
};

json solver_json(const SolverConfig& cfg) {
    return json{{"max_iters", cfg.max_iters},
                {"tol_gap", cfg.tol_gap},
                {"step_ratio", cfg.step_ratio},
                {"check_every", cfg.check_every}};
}

std::vector<double> linspace(double from, double to, std::size_t steps) {
    if (steps == 0) throw Usage("step count must be positive");
    std::vector<double> v(steps);
    if (steps == 1) {
        v[0] = from;
        return v;
    }
    for (std::size_t k = 0; k < steps; ++k)
        v[k] = from + (to - from) * static_cast<double>(k) /
                          static_cast<double>(steps - 1);
    return v;
}

json events_json(const std::vector<StructuralEvent>& events) {
    json arr = json::array();
    for (const StructuralEvent& e : events)
        arr.push_back(json{{"kind", event_name(e.kind)},
                           {"location", e.location},
                           {"interval_hi", e.interval_hi},
                           {"sign", e.sign},
                           {"sigma1", e.sigma1},
                           {"sigma2", e.sigma2},
                           {"satisfied", e.satisfied},
                           {"margin", e.margin}});
    return arr;
}

json certificate_json(const Certificate& c) {
    return json{{"problem", problem_name(c.problem)},
                {"sigma1_sup", c.sigma1_sup},
                {"sigma2_sup", c.sigma2_sup},
                {"feasible", c.feasible},
                {"subspace_ok", c.subspace_ok},
                {"identity_residual", c.identity_residual},
                {"identity_tol", c.identity_tol},
                {"slack", c.slack},
                {"structural_events", events_json(c.structural_events)},
                {"pass", c.pass},
                {"reasons", c.reasons}};
}

// ------------------------------------------------------------- denoise

struct DenoiseCmd {
    DataOpts data;
    SolverOpts solver;
    std::string problem;
    double l1 = 0.0, l2 = 0.0;
    CLI::Option *o_l1 = nullptr, *o_l2 = nullptr;
    std::string out = ".";
    std::string prefix;

    void attach(CLI::App* cmd) {
        data.attach(cmd, true);
        cmd->add_option("--problem", problem, "tv, tv2, or tgv")->required();
        o_l1 = cmd->add_option("--l1", l1, "first-order weight");
        o_l2 = cmd->add_option("--l2", l2, "second-order weight");
        cmd->add_option("--out", out, "output directory");
        cmd->add_option("--prefix", prefix, "output file name prefix");
        solver.attach(cmd);
    }

    int run() const {
        const ProblemKind pk = parse_problem(problem);
        if (pk != ProblemKind::TV2 && !o_l1->count())
            throw Usage("--l1 is required for this problem");
        if (pk != ProblemKind::TV1 && !o_l2->count())
            throw Usage("--l2 is required for this problem");
        const GridSignal f = data.load();
        const SolverConfig cfg = solver.resolve();

        SolverResult res;
        switch (pk) {
            case ProblemKind::TV1:
                res = solve_tv_exact(f, l1);
                break;
            case ProblemKind::TV2:
                res = solve_tv2(f, l2, cfg);
                break;
            case ProblemKind::TGV:
                res = solve_tgv(f, LambdaPair(l1, l2), cfg);
                break;
        }

        const std::string sol = out_path(out, prefix, "solution.csv");
        const std::string sig = out_path(out, prefix, "sigma.csv");
        const std::string man = out_path(out, prefix, "manifest.json");
        write_grid_csv(sol, res.u);
        write_sigma_csv(sig, sub(res.u, f));

        json j{{"command", "denoise"}};
        if (data.from_file())
            j["input"] = data.input;
        else
            j["data"] = data.data;
        j["n"] = f.n();
        j["problem"] = problem;
        if (o_l1->count()) j["lambda1"] = l1;
        if (o_l2->count()) j["lambda2"] = l2;
        j["solver"] = solver_json(cfg);
        j["iterations"] = res.iterations;
        j["final_gap"] = res.final_gap;
        j["converged"] = res.converged;
        j["outputs"] = json{{"solution", sol}, {"sigma", sig}};
        write_text(man, j.dump(2) + "\n");

        std::cout << "denoise: problem=" << problem << " n=" << f.n()
                  << " iterations=" << res.iterations
                  << " gap=" << format_double(res.final_gap)
                  << " converged=" << (res.converged ? "true" : "false")
                  << "\n";
        return res.converged ? 0 : 3;
    }
};

// ------------------------------------------------------------- certify

struct CertifyCmd {
    DataOpts data;
    SolverOpts solver;
    std::string problem;
    double l1 = 0.0, l2 = 0.0;
    CLI::Option *o_l1 = nullptr, *o_l2 = nullptr;
    std::string candidate;
    double tol = 1e-6;
    std::string out = ".";
    std::string prefix;

    void attach(CLI::App* cmd) {
        data.attach(cmd, true);
        cmd->add_option("--problem", problem, "tv, tv2, or tgv")->required();
        o_l1 = cmd->add_option("--l1", l1, "first-order weight");
        o_l2 = cmd->add_option("--l2", l2, "second-order weight");
        cmd->add_option("--candidate", candidate,
                        "solution CSV to certify (default: solve first)");
        cmd->add_option("--tol", tol, "identity tolerance");
        cmd->add_option("--out", out, "output directory");
        cmd->add_option("--prefix", prefix, "output file name prefix");
        solver.attach(cmd);
    }

    int run() const {
        const ProblemKind pk = parse_problem(problem);
        if (pk != ProblemKind::TV2 && !o_l1->count())
            throw Usage("--l1 is required for this problem");
        if (pk != ProblemKind::TV1 && !o_l2->count())
            throw Usage("--l2 is required for this problem");
        const GridSignal f = data.load();
        const SolverConfig cfg = solver.resolve();
        const LambdaPair lam(o_l1->count() ? l1 : 1.0,
                             o_l2->count() ? l2 : 1.0);

        GridSignal u;
        if (!candidate.empty()) {
            u = read_grid_csv(candidate);
        } else {
            switch (pk) {
                case ProblemKind::TV1:
                    u = solve_tv_exact(f, l1).u;
                    break;
                case ProblemKind::TV2:
                    u = solve_tv2(f, l2, cfg).u;
                    break;
                case ProblemKind::TGV:
                    u = solve_tgv(f, lam, cfg).u;
                    break;
            }
        }

        Certificate cert = check_optimality(u, f, pk, lam, tol);
        if (pk == ProblemKind::TGV)
            cert.structural_events = extract_grid_events(u, f, lam, tol);

        const std::string path = out_path(out, prefix, "certificate.json");
        write_text(path, certificate_json(cert).dump(2) + "\n");
        std::cout << "certificate: " << (cert.pass ? "PASS" : "FAIL")
                  << (cert.pass ? "" : " (" + cert.reasons + ")") << "\n";
        return 0;
    }
};

// ------------------------------------------------------------- regions

struct RegionsCmd {
    DataOpts data;
    SolverOpts solver;
    double l1_from = 0.01, l1_to = 0.13;
    double l2_from = 0.0025, l2_to = 0.1;
    std::size_t l1_steps = 40, l2_steps = 40;
    std::size_t n_brute = 1024;
    double tol = -1.0;
    int threads = 0;
    bool with_brute = false;
    std::string out = ".";
    std::string prefix;

    void attach(CLI::App* cmd) {
        data.attach(cmd, false);
        data.n = 1024;
        cmd->add_option("--l1-from", l1_from, "first-order weight range start");
        cmd->add_option("--l1-to", l1_to, "first-order weight range end");
        cmd->add_option("--l1-steps", l1_steps, "first-order grid count");
        cmd->add_option("--l2-from", l2_from, "second-order weight range start");
        cmd->add_option("--l2-to", l2_to, "second-order weight range end");
        cmd->add_option("--l2-steps", l2_steps, "second-order grid count");
        cmd->add_option("--n-brute", n_brute, "grid for brute-force cross-check");
        cmd->add_option("--tol", tol, "boundary tolerance (default h/2 + 1e-6)");
        cmd->add_option("--threads", threads,
                        "worker threads (default TGV1D_THREADS or 1)");
        cmd->add_flag("--brute", with_brute,
                      "also classify each cell by direct solves");
        cmd->add_option("--out", out, "output directory");
        cmd->add_option("--prefix", prefix, "output file name prefix");
        solver.attach(cmd);
    }

    int run() const {
        const DataId id = data.id();
        if (id == DataId::IndData &&
            (data.n % 4 != 0 || n_brute % 4 != 0))
            throw Usage("grid sizes must be divisible by 4 for ind data");
        RegionMapConfig cfg;
        cfg.n = data.n;
        cfg.n_brute = n_brute;
        cfg.tol = tol;
        cfg.solver = solver.resolve();
        cfg.threads = threads;
        cfg.with_brute = with_brute;
        const RegionMapResult rm = region_map(
            id, linspace(l1_from, l1_to, l1_steps),
            linspace(l2_from, l2_to, l2_steps), cfg);

        write_region_csv(out_path(out, prefix, "regions.csv"), rm);
        write_region_svg(out_path(out, prefix, "regions.svg"), rm);

        std::size_t failed = 0;
        for (const RegionCell& c : rm.cells)
            if (c.failed) ++failed;
        std::cout << "regions: " << rm.lam1.size() << "x" << rm.lam2.size()
                  << " cells, " << failed << " failed\n";
        return (failed * 20 <= rm.cells.size()) ? 0 : 3;
    }
};

// --------------------------------------------------------------- oracle

struct OracleCmd {
    std::string data;
    std::string problem;
    double l1 = 0.0, l2 = 0.0;
    CLI::Option *o_l1 = nullptr, *o_l2 = nullptr;
    std::size_t n = 4096;
    std::string out = ".";
    std::string prefix;

    void attach(CLI::App* cmd) {
        cmd->add_option("--data", data, "abs or ind")->required();
        cmd->add_option("--problem", problem, "tv, tv2, or tgv")->required();
        o_l1 = cmd->add_option("--l1", l1, "first-order weight");
        o_l2 = cmd->add_option("--l2", l2, "second-order weight");
        cmd->add_option("--n", n, "sampling grid size");
        cmd->add_option("--out", out, "output directory");
        cmd->add_option("--prefix", prefix, "output file name prefix");
    }

    int run() const {
        const DataId id = parse_data(data);
        if (id == DataId::QuadData)
            throw Usage("no closed-form minimizer catalog for quad data");
        const ProblemKind pk = parse_problem(problem);
        if (pk != ProblemKind::TV2 && !o_l1->count())
            throw Usage("--l1 is required for this problem");
        if (pk != ProblemKind::TV1 && !o_l2->count())
            throw Usage("--l2 is required for this problem");

        json j{{"command", "oracle"}, {"data", data}, {"problem", problem}};
        if (o_l1->count()) j["lambda1"] = l1;
        if (o_l2->count()) j["lambda2"] = l2;

        PiecewiseAffineSignal p;
        if (id == DataId::AbsData) {
            switch (pk) {
                case ProblemKind::TV1:
                    p = oracle_tv1_abs(l1);
                    break;
                case ProblemKind::TV2:
                    p = oracle_tv2_abs(l2);
                    break;
                case ProblemKind::TGV: {
                    const LambdaPair lam(l1, l2);
                    p = oracle_tgv_abs(lam);
                    const RegionBounds b = abs_region_bounds(l1);
                    if (l2 > b.lower && l2 < b.upper) {
                        const AbsTgvCoefficients cd = abs_tgv_coefficients(lam);
                        const MuPair mu = mu_from_lambda_abs(lam);
                        j["c"] = cd.c;
                        j["d"] = cd.d;
                        j["mu1"] = mu.mu1;
                        j["mu2"] = mu.mu2;
                    }
                    break;
                }
            }
        } else {
            switch (pk) {
                case ProblemKind::TV1:
                    p = oracle_tv1_ind(l1);
                    break;
                case ProblemKind::TV2:
                    p = oracle_tv2_ind(l2);
                    break;
                case ProblemKind::TGV: {
                    const LambdaPair lam(l1, l2);
                    p = oracle_tgv_ind(lam);
                    const MuPair mu = mu_from_lambda_ind(lam);
                    j["mu1"] = mu.mu1;
                    j["mu2"] = mu.mu2;
                    break;
                }
            }
        }

        json segs = json::array();
        for (std::size_t k = 0; k < p.slopes.size(); ++k)
            segs.push_back(
                json{{"slope", p.slopes[k]}, {"intercept", p.intercepts[k]}});
        j["breakpoints"] = p.breakpoints;
        j["segments"] = segs;
        j["left_values"] = p.left_values;
        j["right_values"] = p.right_values;
        j["tv1"] = tv1_piecewise(p);
        j["tv2"] = tv2_piecewise(p);

        const std::string jp = out_path(out, prefix, "oracle.json");
        const std::string cp = out_path(out, prefix, "oracle.csv");
        write_text(jp, j.dump(2) + "\n");
        write_grid_csv(cp, eval_piecewise(p, n));
        std::cout << "oracle: wrote " << jp << " and " << cp << "\n";
        return 0;
    }
};

// -------------------------------------------------------------- compare

struct CompareCmd {
    std::string file_a, file_b;

    void attach(CLI::App* cmd) {
        cmd->add_option("a", file_a, "first solution CSV")->required();
        cmd->add_option("b", file_b, "second solution CSV")->required();
    }

    int run() const {
        const GridSignal a = read_grid_csv(file_a);
        const GridSignal b = read_grid_csv(file_b);
        if (a.n() != b.n())
            throw Usage("files have different sizes: " +
                        std::to_string(a.n()) + " vs " +
                        std::to_string(b.n()));
        const GridSignal d = sub(a, b);
        std::cout << "metric,value\n";
        std::cout << "l2," << format_double(norm_l2(d)) << "\n";
        std::cout << "linf," << format_double(norm_linf(d)) << "\n";
        return 0;
    }
};

// ---------------------------------------------------------------- sweep

struct SweepCmd {
    std::string data;
    SolverOpts solver;
    double l1 = 0.0, l2 = 0.0;
    double l1_from = 0.0, l1_to = 0.0;
    double l2_from = 0.0, l2_to = 0.0;
    CLI::Option *o_l1 = nullptr, *o_l2 = nullptr;
    CLI::Option *o_l1_from = nullptr, *o_l2_from = nullptr;
    double l1_to_dummy = 0.0;
    std::size_t steps = 30;
    std::size_t n = 1024;
    std::string out = ".";
    std::string prefix;

    void attach(CLI::App* cmd) {
        cmd->add_option("--data", data, "abs, ind, or quad")->required();
        o_l1 = cmd->add_option("--l1", l1, "fixed first-order weight");
        o_l2 = cmd->add_option("--l2", l2, "fixed second-order weight");
        o_l1_from = cmd->add_option("--l1-from", l1_from, "swept weight start");
        cmd->add_option("--l1-to", l1_to, "swept weight end");
        o_l2_from = cmd->add_option("--l2-from", l2_from, "swept weight start");
        cmd->add_option("--l2-to", l2_to, "swept weight end");
        cmd->add_option("--steps", steps, "number of sweep points");
        cmd->add_option("--n", n, "grid size");
        cmd->add_option("--out", out, "output directory");
        cmd->add_option("--prefix", prefix, "output file name prefix");
        solver.attach(cmd);
    }

    int run() const {
        const DataId id = parse_data(data);
        if (id == DataId::IndData && n % 4 != 0)
            throw Usage("--n must be divisible by 4 for ind data");
        const bool sweep2 = o_l2_from->count() > 0;
        const bool sweep1 = o_l1_from->count() > 0;
        if (sweep1 == sweep2)
            throw Usage("sweep exactly one axis: --l1-from/--l1-to with "
                        "--l2, or --l2-from/--l2-to with --l1");
        if (sweep2 && !o_l1->count())
            throw Usage("--l1 is required when sweeping --l2");
        if (sweep1 && !o_l2->count())
            throw Usage("--l2 is required when sweeping --l1");

        const GridSignal f = sample(id, n);
        const SolverConfig cfg = solver.resolve();
        const std::vector<double> path =
            sweep2 ? linspace(l2_from, l2_to, steps)
                   : linspace(l1_from, l1_to, steps);

        std::ostringstream csv;
        csv << "lambda1,lambda2,objective,tv1,tv2,verdict\n";
        for (double t : path) {
            const LambdaPair lam = sweep2 ? LambdaPair(l1, t)
                                          : LambdaPair(t, l2);
            const SolverResult res = solve_tgv(f, lam, cfg);
            const RegionVerdict v = classify_region(id, lam, n, -1.0, cfg);
            csv << format_double(lam.lambda1) << ','
                << format_double(lam.lambda2) << ','
                << format_double(objective_tgv(res.u, f, lam)) << ','
                << format_double(tv_seminorm(res.u, 1)) << ','
                << format_double(tv_seminorm(res.u, 2)) << ','
                << region_name(v.kind) << '\n';
        }
        const std::string path_out = out_path(out, prefix, "sweep.csv");
        write_text(path_out, csv.str());
        std::cout << "sweep: " << path.size() << " points -> " << path_out
                  << "\n";
        return 0;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D total generalized variation denoising toolkit"};
    app.require_subcommand(1);

    DenoiseCmd denoise;
    CertifyCmd certify;
    RegionsCmd regions;
    OracleCmd oracle;
    CompareCmd compare;
    SweepCmd sweep;

    CLI::App* c_denoise =
        app.add_subcommand("denoise", "solve a denoising problem");
    denoise.attach(c_denoise);
    CLI::App* c_certify =
        app.add_subcommand("certify", "certify a solution's optimality");
    certify.attach(c_certify);
    CLI::App* c_regions =
        app.add_subcommand("regions", "classify a weight-plane grid");
    regions.attach(c_regions);
    CLI::App* c_oracle =
        app.add_subcommand("oracle", "emit a closed-form minimizer");
    oracle.attach(c_oracle);
    CLI::App* c_compare =
        app.add_subcommand("compare", "error table between two solutions");
    compare.attach(c_compare);
    CLI::App* c_sweep =
        app.add_subcommand("sweep", "solve along a weight path");
    sweep.attach(c_sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_denoise->parsed()) return denoise.run();
        if (c_certify->parsed()) return certify.run();
        if (c_regions->parsed()) return regions.run();
        if (c_oracle->parsed()) return oracle.run();
        if (c_compare->parsed()) return compare.run();
        if (c_sweep->parsed()) return sweep.run();
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
