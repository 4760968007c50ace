#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gave/problems.hpp"
#include "gave/solvers.hpp"

namespace gave {

/// Inclusive arithmetic grid min, min + step, ..., <= max.
struct SweepGrid {
    double min = 0.1;
    double step = 0.1;
    double max = 30.0;

    /// Points are rounded to 12 decimals so 0.1-step grids land on the
    /// decimal values they name.
    std::vector<double> points() const;
    /// "MIN:STEP:MAX"
    static SweepGrid parse(std::string_view text);
};

struct SweepRecord {
    double omega = 0.0;
    int iterations = 0;
    bool converged = false;
    double final_residual = 0.0;
    std::string error;
    /// Stopped early by a pruned sweep; the point cannot beat omega_exp.
    bool pruned = false;
};

struct SweepResult {
    Method method = Method::nmn;
    SweepGrid grid;
    std::vector<SweepRecord> records;
    double omega_exp = 0.0;
    int it_at_omega_exp = 0;
};

/// serial and parallel solve every grid point to convergence or k_max.
/// pruned walks the grid from the largest omega down and caps each solve at
/// the best iteration count found so far; a capped point cannot win the
/// minimum (ties go to the smaller omega, which is the one being solved),
/// so omega_exp and it_at_omega_exp match the full sweep while individual
/// records of losing points are cut short.
enum class Execution { serial, parallel, pruned };

/// One solve per grid point; points that fail or do not converge are
/// recorded with iterations = k_max. omega_exp minimizes the iteration
/// count among converged points, ties going to the smallest omega.
///
/// The parallel path runs grid points as independent OpenMP tasks and
/// merges in grid order, so serial and parallel return identical results.
/// Throws EmptyGrid, AllDiverged, or InvalidArgument for omega_min <= 0
/// with NMN (< 0 with MN).
SweepResult sweep_omega(const GaveProblem& p, Method method, const SweepGrid& grid,
                        const SolverConfig& base, Execution exec = Execution::parallel);

nlohmann::json to_json(const SweepResult& s);

struct BenchCase {
    TestProblemSpec spec;
    Method method = Method::nmn;
    /// Fixed shift; when empty the row sweeps for omega_exp first.
    std::optional<double> omega;
};

struct BenchRow {
    int example = 0;
    double mu = 0.0;
    std::size_t n = 0;
    Method method = Method::nmn;
    double omega_exp = 0.0;
    int iterations = 0;
    double cpu = 0.0;
    double res = 0.0;
    bool converged = false;
    bool failed = false;
    std::string error;
    /// Residual recomputed from the stored iterate, independent of the loop.
    double res_check = 0.0;
    /// Recovered LCP solution quality.
    double lcp_feasibility = 0.0;
    double lcp_gap = 0.0;
    double z_error_inf = 0.0;
    double q_norm = 0.0;
};

struct BenchTable {
    std::vector<BenchRow> rows;
};

struct BenchOptions {
    SweepGrid grid;
    Execution execution = Execution::parallel;
};

/// Rows come back in input order. A row whose solve throws is marked failed
/// and the batch continues.
BenchTable run_benchmark(std::span<const BenchCase> cases, const SolverConfig& cfg,
                         const BenchOptions& opts = {});

enum class TableFormat { csv, json, markdown };

TableFormat table_format_from_string(std::string_view s);

/// Byte-deterministic for a fixed table. CSV columns are
/// example,mu,n,method,omega_exp,IT,CPU,RES,status.
std::string emit_table(const BenchTable& t, TableFormat format);

nlohmann::json to_json(const BenchTable& t);
BenchTable table_from_json(const nlohmann::json& j);

} // namespace gave
