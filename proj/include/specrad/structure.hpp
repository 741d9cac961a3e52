#pragma once

#include <optional>
#include <vector>

#include "specrad/matrix.hpp"

namespace specrad {

/// Permutation similarity to block lower-triangular form with irreducible
/// diagonal blocks (the SCC condensation of the digraph).
struct FrobeniusForm {
    std::vector<int> permutation;           // permutation[new_index] = original index
    std::vector<std::vector<int>> blocks;   // ordered partition of {0..n-1}
};

/// Cyclic classes of an irreducible pattern with period gamma; permuting by
/// class order exhibits the cyclic normal form.  Trivial when gamma = 1.
struct CyclicForm {
    int period = 1;
    std::vector<std::vector<int>> classes;
};

struct StructureReport {
    int n = 0;
    int nnz = 0;
    bool irreducible = false;
    int period = 0;  // 0 when reducible
    bool primitive = false;
    bool a2_irreducible = false;
    bool ata_irreducible = false;
    bool aat_irreducible = false;
    bool two_fold = false;
    bool chainable = false;
    bool fully_indecomposable = false;
    bool total_support = false;
    bool scrambling = false;
    std::vector<std::vector<int>> column_components;  // connectivity in the A^T A pattern
    FrobeniusForm frobenius;
    std::optional<CyclicForm> cyclic;
};

/// True iff the digraph with edge j -> i for each nonzero (i,j) is strongly
/// connected.  By convention a 1x1 pattern is irreducible even when zero.
bool is_irreducible(const SignPattern& p);

/// Period (index of imprimitivity): gcd of all directed cycle lengths.
/// Requires an irreducible pattern.
int period(const SignPattern& p);

bool is_primitive(const SignPattern& p);

/// Boolean matrix product: result[i][j] iff some k has p[i][k] and q[k][j].
SignPattern product_pattern(const SignPattern& p, const SignPattern& q);

/// A and A^T A both irreducible.  For n = 1: true iff the entry is nonzero.
bool is_two_fold(const SignPattern& p);

/// Connectivity of the simple bipartite row/column graph.  Patterns with an
/// all-zero row or column are not chainable.
bool is_chainable(const SignPattern& p);

/// Every nonzero cell lies on a positive diagonal; equivalently a doubly
/// stochastic matrix with this sign pattern exists.
bool has_total_support(const SignPattern& p);

/// Chainable with doubly stochastic pattern (Sinkhorn-Knopp).
bool is_fully_indecomposable(const SignPattern& p);

/// Every pair of distinct rows shares a column where both are positive.
bool is_scrambling(const SignPattern& p);

FrobeniusForm frobenius_form(const SignPattern& p);

/// Requires an irreducible pattern.
CyclicForm cyclic_form(const SignPattern& p);

/// Irreducibility decided by reachability between nonzero cells under the
/// board moves: reflect across the diagonal, then move within the row (or,
/// with vertical = true, within the column).
bool board_move_irreducible(const SignPattern& p, bool vertical = false);

/// Partition of column indices into connected components of the A^T A
/// pattern (columns joined when they share a supporting row).
std::vector<std::vector<int>> column_components(const SignPattern& p);

StructureReport classify(const SignPattern& p);

// Bipartite matching utilities shared with the oracle module.

/// Maximum bipartite matching size for rows -> columns of the pattern,
/// optionally excluding one row, one column, or one forbidden cell.
int max_matching(const SignPattern& p, int skip_row = -1, int skip_col = -1);

}  // namespace specrad
