#ifndef SCHUR_SEARCH_HPP
#define SCHUR_SEARCH_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "schur/sat.hpp"
#include "schur/types.hpp"

namespace schur::search {

struct Probe {
    int n = 0;
    sat::Status status = sat::Status::unsat;
    double seconds = 0.0;
    bool from_store = false; ///< satisfied by a re-verified stored witness
};

struct SearchOutcome {
    ProblemSpec spec;
    int value = 0;              ///< S(spec)
    Coloring witness;           ///< valid coloring of [1, value-1]
    std::vector<Probe> probes;  ///< every n solved, in dispatch order
    std::string solver_id;
};

struct SolverConfig {
    /// Empty selects the embedded solver; otherwise an external command
    /// accepting a DIMACS path and printing SAT-competition output.
    std::string external_command;
    std::filesystem::path scratch_dir;
    std::uint64_t max_steps = UINT64_MAX;

    std::string id() const;
};

struct SearchOptions {
    /// First probe; defaults to the best proven lower bound for the spec,
    /// so the probe below it is expected satisfiable.
    std::optional<int> start;
    /// Concurrent probes per round; the outcome is identical to jobs = 1.
    int jobs = 1;
    /// Wall-clock budget for the whole search.
    std::optional<double> budget_seconds;
    /// Directory of witness colorings, reused (after re-verification) and
    /// extended by every satisfiable probe. Empty disables persistence.
    std::filesystem::path witness_store;
    SolverConfig solver;
};

/// Exact value S(spec) as the least n whose CNF encoding is unsatisfiable,
/// located by a geometric ramp from the lower bound followed by binary
/// search; downward closure makes the first-unsat point unique. Any
/// budget-exhausted probe aborts the search with ResourceError; a partial
/// search never reports a value.
SearchOutcome search_exact(const ProblemSpec& spec, const SearchOptions& options = {});

struct ConjectureCheck {
    bool sat_below = false;         ///< probe at v-1 was satisfiable
    bool unsat_at = false;          ///< probe at v was unsatisfiable
    std::optional<Coloring> witness;

    bool confirmed() const { return sat_below && unsat_at; }
};

/// Two-probe audit of a claimed exact value v: expect sat at v-1 (with
/// decoded witness) and unsat at v. Unexpected outcomes are reported, not
/// erased. Requires v >= 2.
ConjectureCheck check_conjectured_value(const ProblemSpec& spec, int v,
                                        const SearchOptions& options = {});

/// One row of the bundled expected-values data.
struct TableRow {
    std::vector<int> ks;
    int value = 0;
    std::string provenance;
    std::string note;
};

/// Bundled rows for "table1", "table2" or "table3".
/// Throws ContractViolation for any other name.
const std::vector<TableRow>& table_rows(const std::string& name);

/// The raw bundled data as a JSON document.
std::string tables_json();

enum class RowStatus { ok, disagree, skipped };

const char* to_string(RowStatus s);

struct TableResult {
    TableRow row;
    std::optional<int> computed;
    RowStatus status = RowStatus::skipped;
    double seconds = 0.0;
};

/// Runs search_exact row by row. A row whose per-row budget runs out is
/// marked skipped, never guessed.
std::vector<TableResult> reproduce_table(const std::string& name,
                                         const SearchOptions& options = {},
                                         std::optional<double> per_row_budget_seconds = {});

/// Witness-store path for (spec, n): "<k0>-<k1>-..._n<NN>.json".
std::filesystem::path witness_path(const std::filesystem::path& store,
                                   const ProblemSpec& spec, int n);

} // namespace schur::search

#endif
