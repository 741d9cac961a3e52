#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "specrad/matrix.hpp"

namespace specrad {

struct SpectralConfig {
    double tolerance = 1e-12;    // relative convergence threshold
    long max_iterations = 100000;
    double shift = 1.0;          // diagonal shift enforcing primitivity
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, long iterations, double lower, double upper)
        : std::runtime_error(what), iterations(iterations), lower(lower), upper(upper) {}
    long iterations;
    double lower;
    double upper;
};

/// Spectral radius r(M).  Computed per irreducible Frobenius block by power
/// iteration on (block + shift I), tracking the Collatz-Wielandt ratio
/// bracket; the overall radius is the maximum over blocks.
double spectral_radius(const NonnegMatrix& m, const SpectralConfig& cfg = {});

/// Perron root and positive eigenvector (unit sum) of a matrix with
/// irreducible sign pattern.
PerronPair perron_pair(const NonnegMatrix& m, const SpectralConfig& cfg = {});

struct HolderGaps {
    // Per-row difference  (sum_j A_ij a_j)^{1-t} (sum_j B_ij b_j)^t
    //                     - sum_j (A_ij a_j)^{1-t} (B_ij b_j)^t,
    // each nonnegative by Holder's inequality.
    std::vector<double> row_gaps;
    // r(A)^{1-t} r(B)^t - r(A^{(1-t)} o B^{(t)}), nonnegative by subinvariance.
    double radius_gap = 0.0;
};

HolderGaps holder_gap(const NonnegMatrix& a, const NonnegMatrix& b, double t,
                      const SpectralConfig& cfg = {});

}  // namespace specrad
