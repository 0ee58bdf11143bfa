#ifndef SCHUR_CONSTRUCTIONS_HPP
#define SCHUR_CONSTRUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "schur/types.hpp"

namespace schur::constructions {

/// Witness coloring of [1, 5u-1] valid for (3; 3,3,u), u >= 5:
///   class 1 = {1, 4, 6, 9, 5u-5, 5u-2}
///   class 2 = {2, 3, 7, 8, 5u-4, 5u-3}
///   class 3 = {5, 5u-1} plus [10, 5u-6]
Coloring case1_coloring(int u);

/// Witness coloring of [1, 7u-1] valid for (3; 3,4,u), u >= 4:
///   class 1 = {1, 6, 8, 7u-7, 7u-5}
///   class 2 = [2,5] plus [7u-4, 7u-1]
///   class 3 = {7, 7u-6} plus [9, 7u-8]
Coloring case2_coloring(int u);

/// Total edge coloring of a complete graph on vertices 0..m-1, stored as a
/// flat triangular array in row-major pair order (0,1),(0,2),...,(1,2),...
struct EdgeColoring {
    int vertex_count = 0;
    std::vector<int> colors;

    /// Color of the unordered pair {a,b}, a != b, both in [0, m-1].
    int color_of(int a, int b) const;

    static std::size_t index_of(int a, int b, int m);
    static std::size_t edge_count(int m) { return std::size_t(m) * (m - 1) / 2; }
};

/// The difference embedding: K_{N+1} on vertices {0..N} where edge {a,b},
/// a < b, takes the color of b - a under the given coloring of [1,N].
EdgeColoring difference_edge_coloring(const Coloring& coloring);

/// Maps a monochromatic clique a_0 < ... < a_{k-1} of the difference edge
/// coloring back to a solution tuple: the consecutive differences (reported
/// nondecreasing) followed by a_{k-1} - a_0, which telescopes to their sum.
/// Throws MalformedCertificate, naming the offending pair, when the clique
/// is not monochromatic under the derived edge coloring.
SolutionTuple clique_to_solution(const std::vector<int>& vertices,
                                 const Coloring& coloring);

/// First k-clique of color c in lexicographic vertex order, or nullopt.
/// Exhaustive with pruning; vertex counts above vertex_cap are refused with
/// ResourceError.
std::optional<std::vector<int>> find_mono_clique(const EdgeColoring& ec, int color,
                                                 int k, int vertex_cap = 64);

} // namespace schur::constructions

#endif
