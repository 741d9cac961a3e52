#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "specrad/matrix.hpp"
#include "specrad/spectral.hpp"

namespace specrad {

enum class PatternFilter { all, irreducible, symmetric, no_zero_row_col };

/// Visits all 2^{n^2} sign patterns of dimension n (n <= 4), optionally
/// filtered.
void enumerate_patterns(int n, PatternFilter filter,
                        const std::function<void(const SignPattern&)>& visit);

/// Seeded sample of patterns for dimensions where exhaustion is infeasible.
std::vector<SignPattern> sample_patterns(int n, int count, std::uint64_t seed);

/// Definitional irreducibility oracle: every (i,j) reachable in some
/// boolean power P^m, m <= n.
bool irreducible_by_powers(const SignPattern& p);

/// Frobenius-Konig brute force: no r x s all-zero submatrix with
/// r + s = n, r, s >= 1.  n <= 4.
bool fully_indecomposable_by_konig(const SignPattern& p);

/// True iff the pattern admits a realization with positive spectral radius
/// (the digraph has a cycle).
bool pattern_has_cycle(const SignPattern& p);

struct ProbeResult {
    bool agree = false;
    bool strict = false;  // which branch the combinatorial decision took
    std::string detail;
};

/// Realizes the pattern with random positive entries and cross-validates
/// decide_property1 numerically: strict cases must show phi(1/2) above the
/// strict floor over sampled nonscalar (C, D) pairs; equality cases must
/// admit a constructed witness with phi below the equality ceiling on a
/// t-grid.  Requires a pattern with a cycle.
ProbeResult property1_numeric_probe(const SignPattern& p, int trials, std::uint64_t seed,
                                    const SpectralConfig& cfg = {});

struct SweepViolation {
    std::string check;
    int n = 0;
    std::uint64_t bits = 0;  // row-major pattern mask for replay
};

struct SweepReport {
    int n = 0;
    std::uint64_t patterns = 0;
    std::vector<SweepViolation> violations;
};

/// Runs every structural theorem check over a single pattern, appending any
/// violations.  Checks requiring the Konig oracle are skipped for n > 4.
void check_pattern_theorems(const SignPattern& p, std::vector<SweepViolation>& out);

/// Exhaustive theorem verification over all patterns of dimension n <= 4,
/// parallelized over pattern ranges.  threads = 0 picks the hardware count.
SweepReport theorem_sweep(int n, int threads = 0);

}  // namespace specrad
