#ifndef SCHUR_CORE_HPP
#define SCHUR_CORE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "schur/types.hpp"

namespace schur {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// True iff the first k_c - 1 entries of xs sum to the last entry, where
/// k_c = spec.ks[c-1]. Summand order is irrelevant; repeats are allowed.
/// Throws ContractViolation on a length mismatch, a color out of range,
/// or a nonpositive entry.
bool is_solution(const ProblemSpec& spec, int color, const std::vector<int>& xs);

/// Streams every nondecreasing (k-1)-tuple of positive integers with sum
/// <= n, in lexicographic order, each exactly once. Together with its sum a
/// tuple is one candidate solution of x_1 + ... + x_{k-1} = x_k.
class TupleEnumerator {
public:
    /// k >= 3, n >= 1 (ContractViolation otherwise).
    TupleEnumerator(int k, int n);

    /// Next tuple, or nullptr when exhausted. The pointed-to vector is owned
    /// by the enumerator and overwritten by the following call.
    const std::vector<int>* next();

    /// Sum of the tuple most recently returned by next().
    int sum() const { return sum_; }

private:
    int n_;
    int len_;
    std::vector<int> xs_;
    int sum_ = 0;
    bool started_ = false;
    bool done_ = false;
};

/// First monochromatic solution in (color index, lexicographic tuple) order,
/// or nullopt when every color class is solution-free. The returned tuple
/// satisfies is_solution and all members carry its color.
std::optional<SolutionTuple> find_mono_solution(const Coloring& coloring,
                                                const ProblemSpec& spec);

/// True iff the coloring admits no monochromatic solution for spec.
bool verify_valid(const Coloring& coloring, const ProblemSpec& spec);

struct BruteForceResult {
    /// Least N <= cap such that no valid coloring of [1,N] exists, i.e.
    /// S(spec); absent when a valid coloring of the full [1,cap] exists.
    std::optional<int> value;

    /// A valid coloring of [1, value-1] (respectively [1, cap]) found by the
    /// search; the lexicographically least one.
    Coloring witness;

    std::uint64_t nodes = 0;
};

/// Exhaustive backtracking oracle. Extends a valid coloring one integer at a
/// time, pruning on the prefix-closure invariant. Throws ResourceError once
/// node_budget assignments have been tried; the message carries the largest
/// N proven colorable so far.
BruteForceResult brute_force_value(const ProblemSpec& spec, int n_cap,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

/// Lexicographically least valid coloring of [1,n], or nullopt when none
/// exists. Same backtracking engine as brute_force_value.
std::optional<Coloring> find_valid_coloring(const ProblemSpec& spec, int n,
                                            std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace schur

#endif
