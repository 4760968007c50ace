#include "gave/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "gave/bench.hpp"
#include "gave/certificates.hpp"
#include "gave/error.hpp"
#include "gave/matrix_market.hpp"
#include "gave/problems.hpp"
#include "gave/reference_tables.hpp"
#include "gave/solvers.hpp"

namespace gave {

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct ProblemOptions {
    int example = 0;
    std::size_t m = 0;
    double mu = 0.0;
    std::string matrix;
    std::string rhs;
    std::string gave_b;

    void add_to(CLI::App* app)
    {
        app->add_option("--example", example, "Benchmark family (1 or 2)")
            ->check(CLI::IsMember({1, 2}));
        app->add_option("--m", m, "Grid dimension, n = m^2");
        app->add_option("--mu", mu, "Diagonal shift mu");
        app->add_option("--matrix", matrix, "Matrix Market file: LCP matrix M (or GAVE A with --gave-b)");
        app->add_option("--rhs", rhs, "Plain-text vector: q (or GAVE b with --gave-b)");
        app->add_option("--gave-b", gave_b, "Matrix Market file for B; treats --matrix/--rhs as A/b");
    }

    bool imported() const { return !matrix.empty(); }

    TestProblemSpec spec() const
    {
        if (example == 0 || m == 0) {
            throw UsageError("either --example and --m, or --matrix and --rhs, are required");
        }
        TestProblemSpec s{example, m, mu};
        s.validate();
        return s;
    }

    GaveProblem load(ReportContext& ctx) const
    {
        if (imported()) {
            if (rhs.empty()) {
                throw UsageError("--matrix requires --rhs");
            }
            Matrix a = mm::read_matrix(std::filesystem::path(matrix));
            Vector v = mm::read_vector(std::filesystem::path(rhs));
            if (!gave_b.empty()) {
                GaveProblem p{std::move(a), mm::read_matrix(std::filesystem::path(gave_b)), std::move(v)};
                p.validate();
                return p;
            }
            return lcp_to_gave(LcpProblem{std::move(a), std::move(v)});
        }
        const auto s = spec();
        ctx.example = s.example_id;
        ctx.mu = s.mu;
        return lcp_to_gave(gen_example(s).lcp);
    }
};

struct SolveOptions {
    std::string method = "nmn";
    std::optional<double> omega;
    double tol = 1e-7;
    int kmax = 5000;
    std::string residual = "gave";

    void add_to(CLI::App* app, bool with_omega)
    {
        app->add_option("--method", method, "picard, mn or nmn")
            ->check(CLI::IsMember({"picard", "mn", "nmn"}));
        if (with_omega) {
            app->add_option("--omega", omega, "Scalar shift, Omega = omega I");
        }
        app->add_option("--tol", tol, "Relative residual tolerance")->capture_default_str();
        app->add_option("--kmax", kmax, "Iteration cap")->capture_default_str();
        app->add_option("--residual", residual, "Residual form: gave or literal (drops B)")
            ->check(CLI::IsMember({"gave", "literal"}));
    }

    SolverConfig config() const
    {
        SolverConfig cfg;
        cfg.method = method_from_string(method);
        cfg.omega = omega.value_or(0.0);
        cfg.tol = tol;
        cfg.k_max = kmax;
        cfg.residual_mode = residual_mode_from_string(residual);
        return cfg;
    }
};

void write_output(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw UsageError("cannot write " + path);
    }
    f << text;
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            parts.push_back(item);
        }
    }
    return parts;
}

int run_gen(const ProblemOptions& po, const std::string& out_dir, std::ostream& out)
{
    const auto s = po.spec();
    const auto ex = gen_example(s);
    const auto p = lcp_to_gave(ex.lcp);
    const std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
    std::filesystem::create_directories(dir);
    mm::write_matrix(dir / "M.mtx", ex.lcp.m);
    mm::write_vector(dir / "q.txt", ex.lcp.q);
    mm::write_matrix(dir / "A.mtx", p.a);
    mm::write_matrix(dir / "B.mtx", p.b_mat);
    mm::write_vector(dir / "z_star.txt", ex.z_star);
    out << nlohmann::json{{"example", s.example_id},
                          {"m", s.m},
                          {"mu", s.mu},
                          {"n", s.n()},
                          {"directory", dir.string()},
                          {"files", {"M.mtx", "q.txt", "A.mtx", "B.mtx", "z_star.txt"}}}
                .dump(2)
        << '\n';
    return kExitOk;
}

int run_solve(const ProblemOptions& po, const SolveOptions& so, const std::string& out_path,
              std::ostream& out)
{
    ReportContext ctx;
    const auto p = po.load(ctx);
    auto cfg = so.config();
    if (cfg.method != Method::picard && !so.omega) {
        throw UsageError("--omega is required for mn and nmn");
    }
    const auto report = solve(p, cfg);
    write_output(to_json(report, cfg, p.size(), ctx).dump(2) + '\n', out_path, out);
    return report.converged ? kExitOk : kExitSolverFailure;
}

Execution execution_of(bool serial, bool prune)
{
    if (prune) {
        return Execution::pruned;
    }
    return serial ? Execution::serial : Execution::parallel;
}

int run_sweep(const ProblemOptions& po, const SolveOptions& so, const std::string& grid_text,
              Execution exec, const std::string& format, const std::string& out_path, std::ostream& out)
{
    ReportContext ctx;
    const auto p = po.load(ctx);
    const auto cfg = so.config();
    const auto grid = SweepGrid::parse(grid_text);
    const auto result = sweep_omega(p, cfg.method, grid, cfg, exec);
    std::string text;
    if (format == "csv") {
        text = "omega,iterations,converged,final_residual\n";
        for (const auto& r : result.records) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%g,%d,%d,%.2e\n", r.omega, r.iterations,
                          r.converged ? 1 : 0, r.final_residual);
            text += buf;
        }
    } else {
        auto j = to_json(result);
        j["n"] = p.size();
        j["example"] = ctx.example ? nlohmann::json(*ctx.example) : nlohmann::json(nullptr);
        j["mu"] = ctx.mu ? nlohmann::json(*ctx.mu) : nlohmann::json(nullptr);
        text = j.dump(2) + '\n';
    }
    write_output(text, out_path, out);
    return kExitOk;
}

int run_certify(const ProblemOptions& po, double omega, const std::string& out_path, std::ostream& out)
{
    ReportContext ctx;
    const auto p = po.load(ctx);
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& outcome : certify_all(p, omega)) {
        blocks.push_back(to_json(outcome));
    }
    write_output(blocks.dump(2) + '\n', out_path, out);
    return kExitOk;
}

struct BenchOptionsCli {
    int table = 0;
    std::string sizes = "60,70,80,90,100";
    std::string methods = "mn,nmn";
    std::optional<std::string> sweep;
    bool serial = false;
    bool prune = false;
    std::string format = "markdown";
};

int run_bench(const ProblemOptions& po, const SolveOptions& so, const BenchOptionsCli& bo,
              const std::string& out_path, std::ostream& out)
{
    int example = po.example;
    double mu = po.mu;
    if (bo.table != 0) {
        bool found = false;
        for (const auto& r : reference_rows()) {
            if (r.table == bo.table) {
                example = r.example;
                mu = r.mu;
                found = true;
                break;
            }
        }
        if (!found) {
            throw UsageError("--table must be between 1 and 6");
        }
    }
    if (example == 0) {
        throw UsageError("bench needs --table or --example/--mu");
    }

    std::vector<BenchCase> cases;
    for (const auto& method_name : split_list(bo.methods)) {
        const Method method = method_from_string(method_name);
        for (const auto& size_text : split_list(bo.sizes)) {
            const auto m = static_cast<std::size_t>(std::stoul(size_text));
            BenchCase c{{example, m, mu}, method, std::nullopt};
            if (!bo.sweep) {
                if (so.omega) {
                    c.omega = *so.omega;
                } else if (const auto ref = find_reference(example, mu, method, m)) {
                    c.omega = ref->omega_exp;
                } else if (method != Method::picard) {
                    throw UsageError("no reference omega for example " + std::to_string(example) +
                                     ", mu " + std::to_string(mu) + ", m " + std::to_string(m) +
                                     "; pass --omega or --sweep");
                }
            }
            cases.push_back(c);
        }
    }

    BenchOptions opts;
    opts.grid = bo.sweep ? SweepGrid::parse(*bo.sweep) : SweepGrid{};
    opts.execution = execution_of(bo.serial, bo.prune);
    const auto table = run_benchmark(cases, so.config(), opts);
    write_output(emit_table(table, table_format_from_string(bo.format)), out_path, out);
    for (const auto& r : table.rows) {
        if (r.failed || !r.converged) {
            return kExitSolverFailure;
        }
    }
    return kExitOk;
}

} // namespace

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Picard, MN and NMN solvers for generalized absolute value equations"};
    app.name("gave");
    app.require_subcommand(1);

    ProblemOptions gen_po, solve_po, sweep_po, cert_po, bench_po;
    SolveOptions solve_so, sweep_so, bench_so;
    std::string gen_out, solve_out, sweep_out, cert_out, bench_out;

    auto* gen = app.add_subcommand("gen", "Write a benchmark problem as Matrix Market + vector files");
    gen_po.add_to(gen);
    gen->add_option("--out", gen_out, "Output directory");

    auto* solve_cmd = app.add_subcommand("solve", "Run one solve and print its JSON report");
    solve_po.add_to(solve_cmd);
    solve_so.add_to(solve_cmd, true);
    solve_cmd->add_option("--out", solve_out, "Write the report here instead of stdout");

    std::string grid_text = "0.1:0.1:30";
    bool sweep_serial = false;
    bool sweep_prune = false;
    std::string sweep_format = "json";
    auto* sweep = app.add_subcommand("sweep", "Scan omega over a grid and report omega_exp");
    sweep_po.add_to(sweep);
    sweep_so.add_to(sweep, false);
    sweep->add_option("--sweep", grid_text, "Grid MIN:STEP:MAX")->capture_default_str();
    auto* sweep_serial_flag = sweep->add_flag("--serial", sweep_serial, "Run grid points sequentially");
    sweep->add_flag("--prune", sweep_prune, "Cap each point at the best count so far (same omega_exp)")
        ->excludes(sweep_serial_flag);
    sweep->add_option("--format", sweep_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("--out", sweep_out, "Output file");

    double cert_omega = 1.0;
    auto* certify = app.add_subcommand("certify", "Evaluate the four convergence certificates");
    cert_po.add_to(certify);
    certify->add_option("--omega", cert_omega, "Scalar shift, Omega = omega I")->required();
    certify->add_option("--out", cert_out, "Output file");

    BenchOptionsCli bench_bo;
    auto* bench = app.add_subcommand("bench", "Reproduce a benchmark table");
    bench_po.add_to(bench);
    bench_so.add_to(bench, true);
    bench->add_option("--table", bench_bo.table, "Reference table 1-6 (sets example and mu)");
    bench->add_option("--sizes", bench_bo.sizes, "Comma-separated m values")->capture_default_str();
    bench->add_option("--methods", bench_bo.methods, "Comma-separated methods")->capture_default_str();
    bench->add_option("--sweep", bench_bo.sweep, "Sweep grid MIN:STEP:MAX instead of reference omegas");
    auto* bench_serial_flag = bench->add_flag("--serial", bench_bo.serial, "Run sweep grid points sequentially");
    bench->add_flag("--prune", bench_bo.prune, "Pruned sweeps (same omega_exp, cheaper)")
        ->excludes(bench_serial_flag);
    bench->add_option("--format", bench_bo.format, "csv, json or markdown")
        ->check(CLI::IsMember({"csv", "json", "markdown"}));
    bench->add_option("--out", bench_out, "Output file");

    std::vector<std::string> argv_storage{"gave"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            return run_gen(gen_po, gen_out, out);
        }
        if (solve_cmd->parsed()) {
            return run_solve(solve_po, solve_so, solve_out, out);
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_po, sweep_so, grid_text, execution_of(sweep_serial, sweep_prune), sweep_format, sweep_out, out);
        }
        if (certify->parsed()) {
            return run_certify(cert_po, cert_omega, cert_out, out);
        }
        if (bench->parsed()) {
            return run_bench(bench_po, bench_so, bench_bo, bench_out, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "solver failure: " << e.what() << '\n';
        return kExitSolverFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

} // namespace gave
