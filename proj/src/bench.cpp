#include "gave/bench.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "gave/error.hpp"

namespace gave {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(const char* spec, double v)
{
    if (!std::isfinite(v)) {
        return "";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

nlohmann::json number_or_null(double v)
{
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

double number_from(const nlohmann::json& j)
{
    return j.is_null() ? kNaN : j.get<double>();
}

SweepRecord sweep_point(const GaveProblem& p, Method method, double omega, const SolverConfig& base,
                        int cap = 0)
{
    SolverConfig cfg = base;
    cfg.method = method;
    cfg.omega = omega;
    cfg.record_iterates = false;
    if (cap > 0 && cap < cfg.k_max) {
        cfg.k_max = cap;
    }
    SweepRecord rec;
    rec.omega = omega;
    try {
        const auto report = solve(p, cfg);
        rec.converged = report.converged;
        rec.iterations = report.converged ? report.iterations : base.k_max;
        rec.final_residual = report.final_residual;
        rec.pruned = !report.converged && cfg.k_max < base.k_max;
    } catch (const Error& e) {
        rec.converged = false;
        rec.iterations = base.k_max;
        rec.final_residual = kNaN;
        rec.error = e.what();
    }
    return rec;
}

std::string status_of(const BenchRow& r)
{
    if (r.failed) {
        return "failed";
    }
    return r.converged ? "converged" : "not_converged";
}

} // namespace

std::vector<double> SweepGrid::points() const
{
    if (!(step > 0.0) || !std::isfinite(min) || !std::isfinite(max) || max < min) {
        return {};
    }
    const auto count = static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> pts;
    pts.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        pts.push_back(std::round((min + static_cast<double>(k) * step) * 1e12) / 1e12);
    }
    return pts;
}

SweepGrid SweepGrid::parse(std::string_view text)
{
    std::string s(text);
    for (auto& c : s) {
        if (c == ':') {
            c = ' ';
        }
    }
    std::istringstream in(s);
    SweepGrid g;
    std::string rest;
    if (!(in >> g.min >> g.step >> g.max) || (in >> rest)) {
        throw InvalidArgument("sweep grid must look like MIN:STEP:MAX, got '" + std::string(text) + "'");
    }
    return g;
}

SweepResult sweep_omega(const GaveProblem& p, Method method, const SweepGrid& grid,
                        const SolverConfig& base, Execution exec)
{
    const auto pts = grid.points();
    if (pts.empty()) {
        throw EmptyGrid();
    }
    if (method == Method::nmn && !(pts.front() > 0.0)) {
        throw InvalidArgument("NMN sweep needs omega_min > 0");
    }
    if (method == Method::mn && !(pts.front() >= 0.0)) {
        throw InvalidArgument("MN sweep needs omega_min >= 0");
    }

    SweepResult result;
    result.method = method;
    result.grid = grid;
    result.records.resize(pts.size());
    const auto count = static_cast<std::ptrdiff_t>(pts.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t k = 0; k < count; ++k) {
            result.records[static_cast<std::size_t>(k)] =
                sweep_point(p, method, pts[static_cast<std::size_t>(k)], base);
        }
    } else if (exec == Execution::pruned) {
        int best = 0;
        for (std::size_t k = pts.size(); k-- > 0;) {
            auto& rec = result.records[k];
            rec = sweep_point(p, method, pts[k], base, best);
            if (rec.converged && (best == 0 || rec.iterations <= best)) {
                best = std::max(rec.iterations, 1);
            }
        }
    } else {
        for (std::ptrdiff_t k = 0; k < count; ++k) {
            result.records[static_cast<std::size_t>(k)] =
                sweep_point(p, method, pts[static_cast<std::size_t>(k)], base);
        }
    }

    const SweepRecord* best = nullptr;
    for (const auto& rec : result.records) {
        if (rec.converged && (best == nullptr || rec.iterations < best->iterations)) {
            best = &rec;
        }
    }
    if (best == nullptr) {
        throw AllDiverged();
    }
    result.omega_exp = best->omega;
    result.it_at_omega_exp = best->iterations;
    return result;
}

nlohmann::json to_json(const SweepResult& s)
{
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : s.records) {
        nlohmann::json rec{{"omega", r.omega},
                           {"iterations", r.iterations},
                           {"converged", r.converged},
                           {"final_residual", number_or_null(r.final_residual)}};
        if (!r.error.empty()) {
            rec["error"] = r.error;
        }
        if (r.pruned) {
            rec["pruned"] = true;
        }
        records.push_back(std::move(rec));
    }
    return {{"method", std::string(to_string(s.method))},
            {"grid", {{"min", s.grid.min}, {"step", s.grid.step}, {"max", s.grid.max}}},
            {"omega_exp", s.omega_exp},
            {"it_at_omega_exp", s.it_at_omega_exp},
            {"records", records}};
}

BenchTable run_benchmark(std::span<const BenchCase> cases, const SolverConfig& cfg,
                         const BenchOptions& opts)
{
    if (cases.empty()) {
        throw InvalidArgument("benchmark needs at least one case");
    }
    BenchTable table;
    for (const auto& c : cases) {
        BenchRow row;
        row.example = c.spec.example_id;
        row.mu = c.spec.mu;
        row.n = c.spec.n();
        row.method = c.method;
        row.omega_exp = kNaN;
        row.res = kNaN;
        row.res_check = kNaN;
        try {
            const auto ex = gen_example(c.spec);
            const auto problem = lcp_to_gave(ex.lcp);
            double omega = 0.0;
            if (c.omega) {
                omega = *c.omega;
            } else if (c.method != Method::picard) {
                omega = sweep_omega(problem, c.method, opts.grid, cfg, opts.execution).omega_exp;
            }
            row.omega_exp = omega;

            SolverConfig run_cfg = cfg;
            run_cfg.method = c.method;
            run_cfg.omega = omega;
            const auto report = solve(problem, run_cfg);
            row.iterations = report.iterations;
            row.cpu = report.wall_time_total;
            row.res = report.final_residual;
            row.converged = report.converged;
            row.res_check = gave_residual(problem, report.x, cfg.residual_mode);

            const auto sol = gave_solution_to_lcp(report.x);
            const auto lr = lcp_residual(ex.lcp, sol.z);
            row.lcp_feasibility = lr.feasibility;
            row.lcp_gap = lr.gap;
            row.q_norm = norm2(ex.lcp.q);
            double err = 0.0;
            for (std::size_t i = 0; i < sol.z.size(); ++i) {
                err = std::max(err, std::fabs(sol.z[i] - ex.z_star[i]));
            }
            row.z_error_inf = err;
        } catch (const Error& e) {
            row.failed = true;
            row.converged = false;
            row.error = e.what();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

TableFormat table_format_from_string(std::string_view s)
{
    if (s == "csv") {
        return TableFormat::csv;
    }
    if (s == "json") {
        return TableFormat::json;
    }
    if (s == "markdown" || s == "md") {
        return TableFormat::markdown;
    }
    throw InvalidArgument("unknown table format '" + std::string(s) + "'");
}

nlohmann::json to_json(const BenchTable& t)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
        rows.push_back({{"example", r.example},
                        {"mu", r.mu},
                        {"n", r.n},
                        {"method", std::string(to_string(r.method))},
                        {"omega_exp", number_or_null(r.omega_exp)},
                        {"IT", r.iterations},
                        {"CPU", r.cpu},
                        {"RES", number_or_null(r.res)},
                        {"converged", r.converged},
                        {"failed", r.failed},
                        {"error", r.error},
                        {"res_check", number_or_null(r.res_check)},
                        {"lcp_feasibility", r.lcp_feasibility},
                        {"lcp_gap", r.lcp_gap},
                        {"z_error_inf", r.z_error_inf},
                        {"q_norm", r.q_norm}});
    }
    return {{"rows", rows}};
}

BenchTable table_from_json(const nlohmann::json& j)
{
    BenchTable t;
    for (const auto& r : j.at("rows")) {
        BenchRow row;
        row.example = r.at("example").get<int>();
        row.mu = r.at("mu").get<double>();
        row.n = r.at("n").get<std::size_t>();
        row.method = method_from_string(r.at("method").get<std::string>());
        row.omega_exp = number_from(r.at("omega_exp"));
        row.iterations = r.at("IT").get<int>();
        row.cpu = r.at("CPU").get<double>();
        row.res = number_from(r.at("RES"));
        row.converged = r.at("converged").get<bool>();
        row.failed = r.at("failed").get<bool>();
        row.error = r.at("error").get<std::string>();
        row.res_check = number_from(r.at("res_check"));
        row.lcp_feasibility = r.at("lcp_feasibility").get<double>();
        row.lcp_gap = r.at("lcp_gap").get<double>();
        row.z_error_inf = r.at("z_error_inf").get<double>();
        row.q_norm = r.at("q_norm").get<double>();
        t.rows.push_back(std::move(row));
    }
    return t;
}

namespace {

std::string emit_csv(const BenchTable& t)
{
    std::string out = "example,mu,n,method,omega_exp,IT,CPU,RES,status\n";
    for (const auto& r : t.rows) {
        out += std::to_string(r.example) + ',' + fmt("%g", r.mu) + ',' + std::to_string(r.n) + ',' +
               std::string(to_string(r.method)) + ',' + fmt("%g", r.omega_exp) + ',' +
               (r.failed ? std::string() : std::to_string(r.iterations)) + ',' +
               fmt("%.3f", r.cpu) + ',' + fmt("%.2e", r.res) + ',' + status_of(r) + '\n';
    }
    return out;
}

std::string method_label(Method m)
{
    switch (m) {
    case Method::picard:
        return "Picard";
    case Method::mn:
        return "MN";
    case Method::nmn:
        return "NMN";
    }
    return "?";
}

// One block per (example, mu) in first-appearance order, columns by n, a
// four-line group (omega_exp, IT, CPU, RES) per method.
std::string emit_markdown(const BenchTable& t)
{
    struct Group {
        int example;
        double mu;
        std::vector<std::size_t> sizes;
        std::vector<Method> methods;
    };
    std::vector<Group> groups;
    for (const auto& r : t.rows) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
            return g.example == r.example && g.mu == r.mu;
        });
        if (it == groups.end()) {
            groups.push_back({r.example, r.mu, {}, {}});
            it = std::prev(groups.end());
        }
        if (std::find(it->sizes.begin(), it->sizes.end(), r.n) == it->sizes.end()) {
            it->sizes.push_back(r.n);
        }
        if (std::find(it->methods.begin(), it->methods.end(), r.method) == it->methods.end()) {
            it->methods.push_back(r.method);
        }
    }

    std::string out;
    for (const auto& g : groups) {
        if (!out.empty()) {
            out += '\n';
        }
        out += "Example " + std::to_string(g.example) + ", mu = " + fmt("%g", g.mu) + "\n\n";
        out += "| Method | n |";
        for (auto n : g.sizes) {
            out += ' ' + std::to_string(n) + " |";
        }
        out += "\n|---|---|";
        for (std::size_t k = 0; k < g.sizes.size(); ++k) {
            out += "---|";
        }
        out += '\n';
        for (auto m : g.methods) {
            const char* labels[] = {"omega_exp", "IT", "CPU", "RES"};
            for (int line = 0; line < 4; ++line) {
                out += "| " + (line == 0 ? method_label(m) : std::string()) + " | " + labels[line] + " |";
                for (auto n : g.sizes) {
                    const BenchRow* row = nullptr;
                    for (const auto& r : t.rows) {
                        if (r.example == g.example && r.mu == g.mu && r.n == n && r.method == m) {
                            row = &r;
                        }
                    }
                    std::string cell;
                    if (row == nullptr) {
                        cell = "";
                    } else if (row->failed) {
                        cell = line == 0 ? fmt("%g", row->omega_exp) : "failed";
                    } else {
                        switch (line) {
                        case 0:
                            cell = fmt("%g", row->omega_exp);
                            break;
                        case 1:
                            cell = std::to_string(row->iterations) + (row->converged ? "" : "*");
                            break;
                        case 2:
                            cell = fmt("%.2f", row->cpu);
                            break;
                        default:
                            cell = fmt("%.2e", row->res);
                            break;
                        }
                    }
                    out += ' ' + cell + " |";
                }
                out += '\n';
            }
        }
    }
    return out;
}

} // namespace

std::string emit_table(const BenchTable& t, TableFormat format)
{
    switch (format) {
    case TableFormat::csv:
        return emit_csv(t);
    case TableFormat::json:
        return to_json(t).dump(2) + '\n';
    case TableFormat::markdown:
        return emit_markdown(t);
    }
    return {};
}

} // namespace gave
