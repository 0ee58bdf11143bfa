#ifndef SCHUR_SAT_HPP
#define SCHUR_SAT_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "schur/types.hpp"

namespace schur::sat {

/// CNF over variables 1..num_vars. Positive literal = variable true. No
/// clause contains a duplicate literal or a literal and its negation.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Throws ContractViolation if the invariants above do not hold.
void validate_formula(const CnfFormula& cnf);

/// Variable for "integer i has color c": (i-1)*r + c. Frozen numbering;
/// DIMACS files depend on it. Requires i >= 1, 1 <= c <= r.
int var_index(int i, int c, int r);

struct EncodeLimits {
    std::int64_t max_vars = 4'000'000;
};

/// CNF satisfiable iff a valid coloring of [1,n] exists for spec.
/// Clause order is frozen: per integer i the at-least-one clause then the
/// C(r,2) pairwise at-most-one clauses, for i = 1..n; then one clause per
/// (color c, tuple) in (c, lexicographic tuple) order, negating the
/// variables of the distinct members of {x_1,...,x_{k_c - 1}, sum}.
CnfFormula encode(const ProblemSpec& spec, int n, const EncodeLimits& limits = {});

/// Exactly: header "p cnf V C", then one clause per line, literals
/// space-separated, each line terminated by " 0".
std::string to_dimacs(const CnfFormula& cnf);
void write_dimacs(const CnfFormula& cnf, std::ostream& out);

/// Inverse of to_dimacs, also accepting comment lines "c ..." and clauses
/// spanning lines. Round-trips byte-identically on to_dimacs output.
/// Throws ParseError (with a line number) on malformed input.
CnfFormula parse_dimacs(const std::string& text);
CnfFormula parse_dimacs(std::istream& in);

enum class Status { sat, unsat };

const char* to_string(Status s);

struct SatOutcome {
    Status status = Status::unsat;
    /// Total assignment indexed by variable-1; present iff status == sat.
    std::optional<std::vector<bool>> model;
};

struct SolveOptions {
    /// Decisions + propagated literals before giving up with ResourceError.
    std::uint64_t max_steps = UINT64_MAX;
    /// Optional wall-clock cutoff, checked periodically.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Complete, deterministic DPLL: unit propagation over watched literals,
/// chronological backtracking, branching on the lowest-index unassigned
/// variable with true tried first. Identical inputs yield identical
/// outcomes including the model. Budget exhaustion throws ResourceError
/// ("unknown"), which is never an UNSAT answer.
SatOutcome solve(const CnfFormula& cnf, const SolveOptions& options = {});

struct ExternalSolverOptions {
    /// Where temporary DIMACS files go; empty means the system temp dir.
    std::filesystem::path scratch_dir;
    /// When set, the subprocess is run under timeout(1).
    std::optional<double> timeout_seconds;
};

/// Runs `command <dimacs-file>` and parses SAT-competition output: an
/// "s SATISFIABLE"/"s UNSATISFIABLE" status line and "v ..." model lines
/// terminated by 0. Model variables the solver omits default to false.
/// Throws SolverProtocolError when no status line is recognized,
/// EnvironmentError when the command cannot be run, ResourceError on
/// timeout or an explicit "s UNKNOWN".
SatOutcome external_solve(const CnfFormula& cnf, const std::string& command,
                          const ExternalSolverOptions& options = {});

/// Coloring with colors[i-1] = the unique c for which v_{i,c} is true.
/// Enforces its own postcondition: throws EncodingSoundnessError when some
/// integer has zero or several true colors, or when the decoded coloring
/// fails verify_valid (an encoder-bug detector).
Coloring decode_model(const std::vector<bool>& model, const ProblemSpec& spec, int n);

} // namespace schur::sat

#endif
