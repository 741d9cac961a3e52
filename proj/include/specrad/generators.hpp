#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specrad/matrix.hpp"

namespace specrad {

/// Primitive n-cycle with the shortcut edge 1 -> 3: A_{3,1} = 1 and
/// A_{ij} = delta_{i, 1+(j mod n)} otherwise.  n + 1 nonzero entries;
/// A^T A is reducible.  Requires n >= 3.
SignPattern wielandt(int n);

/// Two-fold irreducible yet partly decomposable family: n-cycle plus a full
/// bottom row (except the corner) plus the (1,2) cell; 2n - 1 nonzero
/// entries.  Requires n >= 4.
SignPattern partly_decomposable_two_fold(int n);

/// The 4x4 two-cycle stochastic example:
/// rows (0,1,0,1), (1/2,0,0,0), (1/2,0,0,0), (0,0,1,0).
NonnegMatrix worked_4x4();

/// Cyclic permutation pattern A_{1+(j mod n), j}.
SignPattern n_cycle(int n);

/// Cyclic normal form with all-positive blocks B_1..B_gamma, class sizes
/// given by block_sizes.
SignPattern cyclic_normal(const std::vector<int>& block_sizes);

/// [[1,0],[1,1]]: reducible although A^T A and A A^T are irreducible.
SignPattern remark_2x2();

/// Seeded iid-cell pattern: cell (i,j) included when u < density, cells
/// visited row-major, u drawn from mt19937_64(seed) uniform on [0,1).
SignPattern random_pattern(int n, double density, std::uint64_t seed);

/// Same cell-selection stream as random_pattern (patterns match for equal
/// arguments); each selected cell draws a value uniform on (0,1] from an
/// independent stream.
NonnegMatrix random_matrix(int n, double density, std::uint64_t seed);

struct GeneratorSpec {
    std::string family;
    int n = 0;
    std::uint64_t seed = 0;
    double density = 0.5;
    std::vector<int> blocks;  // cyclic_normal only
};

/// Dispatch by family name; pattern families are realized with unit entries.
NonnegMatrix generate(const GeneratorSpec& spec);

}  // namespace specrad
