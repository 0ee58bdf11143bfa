#ifndef SCHUR_TYPES_HPP
#define SCHUR_TYPES_HPP

#include <optional>
#include <string>
#include <vector>

#include "schur/bigint.hpp"
#include "schur/error.hpp"

namespace schur {

/// Identifies a generalized Schur problem (r; k_0,...,k_{r-1}): color class i
/// (1-based color i+1) must avoid monochromatic solutions to
/// x_1 + ... + x_{k_i - 1} = x_{k_i}.
struct ProblemSpec {
    int r = 0;               ///< number of colors, >= 1
    std::vector<int> ks;     ///< r equation lengths, each >= 3

    ProblemSpec() = default;
    ProblemSpec(int r_, std::vector<int> ks_);

    /// Throws ContractViolation unless r >= 1, ks.size() == r, all k_i >= 3.
    void validate() const;

    /// True when ks is sorted nondecreasing. Bound formulas that assume
    /// 3 <= k_0 <= ... <= k_{r-1} require the canonical form.
    bool is_canonical() const;

    /// Copy with ks sorted nondecreasing.
    ProblemSpec canonical() const;

    /// Equation length for a 1-based color index.
    int k_of(int color) const;

    /// "k0,k1,..." comma-joined; Ramsey tables key on the canonical form.
    std::string key() const;

    /// "k0-k1-..." dash-joined; witness-store filenames use this.
    std::string dash_key() const;

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// An assignment of colors 1..r to the integers of [1,n].
/// colors[i-1] is the color of i.
struct Coloring {
    int n = 0;
    std::vector<int> colors;

    Coloring() = default;
    Coloring(int n_, std::vector<int> colors_);

    int color_of(int i) const;       ///< 1 <= i <= n
    Coloring prefix(int m) const;    ///< restriction to [1,m], 1 <= m <= n

    /// Throws MalformedCertificate unless n >= 1, colors.size() == n and
    /// every entry lies in [1, spec.r].
    void validate_against(const ProblemSpec& spec) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Witness of a monochromatic solution: k_c integers of one color whose
/// first k_c - 1 entries (nondecreasing) sum to the last.
struct SolutionTuple {
    int color = 0;
    std::vector<int> xs;

    friend bool operator==(const SolutionTuple&, const SolutionTuple&) = default;
};

enum class BoundKind {
    lower,        ///< S >= value
    strict_lower, ///< S >  value
    upper,        ///< S <= value
    exact,        ///< S =  value
};

const char* to_string(BoundKind kind);
BoundKind bound_kind_from_string(const std::string& s);

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::lower;
    BigInt value;
};

/// Aggregated output of the bound formulas for one problem.
struct BoundReport {
    ProblemSpec spec;
    std::vector<BoundEntry> entries;

    /// Best proven "S >= X" over all entries (a strict-lower v counts as
    /// v + 1, an exact v as v). Throws ContractViolation when no entry
    /// carries lower information.
    BigInt max_lower() const;

    /// Least upper value over upper/exact entries, absent when none apply.
    std::optional<BigInt> min_upper() const;

    /// Value of an exact entry, when one is present.
    std::optional<BigInt> exact_value() const;

    /// Throws Error if some lower bound exceeds some upper bound.
    void validate() const;
};

} // namespace schur

#endif
