#ifndef SCHUR_BOUNDS_HPP
#define SCHUR_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schur/bigint.hpp"
#include "schur/types.hpp"

namespace schur::bounds {

/// prod_{j=0}^{r-1} k_j - sum_{i=1}^{r-1} prod_{j=i}^{r-1} k_j - 1.
/// Semantics: S(r; ks) >= value. Requires ks nondecreasing with every entry
/// >= 3 (the hypothesis of the theorem); ContractViolation otherwise.
BigInt product_lower_bound(const std::vector<int>& ks);

/// k * prev - 1: lower bound for the r-color problem from the (r-1)-color
/// value or bound. Requires prev >= 2, k >= 3.
BigInt step_lower_bound(const BigInt& prev, int k);

/// (prod_{j=m}^{r-1} k_j) * base - sum_{i=m}^{r-1} prod_{j=i+1}^{r-1} k_j,
/// empty products = 1. base must be a value or lower bound for
/// S(m; k_0,...,k_{m-1}); requires 2 <= m <= r-1 and ks sorted.
BigInt iterated_lower_bound(const std::vector<int>& ks, int m, const BigInt& base);

/// Exact two-color value S(2;s,t): 3t-4 for s=3 with t odd, 3t-5 for s=3
/// with t even, st-t-1 for 4 <= s <= t. Requires 3 <= s <= t; callers
/// canonicalize order first.
BigInt robertson_schaal_exact(int s, int t);

/// iterated_lower_bound(ks, 2, S(2; ks[0], ks[1])) with the two-color base
/// taken from robertson_schaal_exact. Requires r >= 3 and ks sorted.
BigInt two_color_corollary_bound(const std::vector<int>& ks);

struct ConjectureValues {
    BigInt conjecture2;        ///< stu - tu - u - 1
    BigInt conjecture1_strict; ///< 2tu - u - 1
};

/// The two conjectured/proven r=3 quantities. stu-tu-u-1 is a proven lower
/// bound for 4 <= s (and conjectured exact); 2tu-u-1 is a proven strict
/// lower bound when s = 3 (except the all-3 diagonal). Requires
/// 3 <= s <= t <= u.
ConjectureValues conjecture_values(int s, int t, int u);

struct ClassicSchurBounds {
    BigInt lower; ///< (3^r + 1) / 2
    BigInt upper; ///< floor(r! * e) = sum_{i=0}^{r} r!/i!
};

/// Classical bracket for the diagonal length-3 problem S_2(r). The upper
/// bound uses the exact identity floor(r! e) = sum_{i=0}^{r} r!/i!, valid
/// for r >= 1; no floating point is involved.
ClassicSchurBounds schur_classic_bounds(int r);

/// The printed diagonal bound (k-1)/k * ((k+1)^r - 1) + 1, evaluated
/// verbatim in exact arithmetic ((k+1)^r - 1 is divisible by k). Here k
/// counts summands, i.e. equation length k+1: znam_diagonal_lb(r, k) equals
/// product_lower_bound on r copies of k+1. Callers wanting a bound for the
/// diagonal problem with equation length L must pass k = L - 1.
/// Requires r >= 1, k >= 2.
BigInt znam_diagonal_lb(int r, int k);

/// ramsey_value - 1, of kind upper: a monochromatic-clique argument turns
/// any r-coloring of [1, R-1] into a monochromatic solution. Ramsey numbers
/// themselves are caller-supplied. Requires ramsey_value >= 2.
BigInt ramsey_upper_bound(const BigInt& ramsey_value);

/// Map from "k0,k1,..." (canonical, comma-joined) to a Ramsey number
/// R_r(k_0,...,k_{r-1}). Values are validated only as integers >= 2.
using RamseyTable = std::map<std::string, long long>;

/// Every applicable bound, consolidated. Includes robertson_schaal_exact as
/// kind exact when r = 2 (and the known one-color value when r = 1).
/// Requires spec canonical.
BoundReport best_bounds(const ProblemSpec& spec, const RamseyTable* ramsey = nullptr);

} // namespace schur::bounds

#endif
