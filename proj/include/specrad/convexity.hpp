#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specrad/matrix.hpp"
#include "specrad/spectral.hpp"

namespace specrad {

// Equality detection threshold on the convexity gap phi.  phi compounds
// three spectral radius computations at spectral tolerance 1e-12; one
// decade of slack per computation.
inline constexpr double kEqualityGapCeil = 1e-8;
// Floor asserted for phi(1/2) in strict cases during numeric probing.
inline constexpr double kStrictGapFloor = 1e-7;

enum class EqualityCause {
    none,           // strictly convex, no witness exists
    reducible,      // A reducible: block-shift construction
    ata_reducible,  // A irreducible, A^T A reducible: similarity construction
};

std::string to_string(EqualityCause cause);

/// A pair (C, D) with nonscalar D - C along which the log spectral radius is
/// affine.  For cause ata_reducible the similarity certificate
///   e^{D_i} A_ij = alpha E_i^{-1} e^{C_i} A_ij E_j
/// holds exactly; for cause reducible no such global similarity exists in
/// general and alpha, E, L are nominal (1, ones, zeros).
struct EqualityWitness {
    DiagonalParams C{0};
    DiagonalParams D{0};
    double alpha = 1.0;
    std::vector<double> E;  // E_i = exp(L_i)
    std::vector<double> L;
    EqualityCause cause = EqualityCause::none;
};

struct Property1Decision {
    bool holds = false;
    EqualityCause cause = EqualityCause::none;
};

/// Either a strictness certificate (Property 1 holds, equivalently the
/// pattern is two-fold irreducible) or an equality witness.
struct ConvexityCertificate {
    bool strict = false;
    EqualityCause cause = EqualityCause::none;
    std::optional<EqualityWitness> witness;
};

/// Parametrization of the linearized equality system on an irreducible
/// pattern: columns fall into connectivity classes of the A^T A pattern;
/// the L value is constant on each class, and each row's Delta is forced
/// once alpha and the class values are chosen.
struct EqualitySystem {
    std::vector<std::vector<int>> column_components;
    std::vector<int> component_of_column;

    /// Delta_i = log_alpha + L[j] - L[i] for any column j supporting row i.
    /// column_L must be constant on each component.
    DiagonalParams forced_delta(double log_alpha, const std::vector<double>& column_L,
                                const SignPattern& p) const;
};

/// R(D) = log r(e^D A).  Requires r(A) > 0.
double log_radius_scaled(const NonnegMatrix& a, const DiagonalParams& d,
                         const SpectralConfig& cfg = {});

/// phi(t) = (1-t) R(C) + t R(D) - R((1-t) C + t D), t in (0, 1).
double convexity_gap(const NonnegMatrix& a, const DiagonalParams& c, const DiagonalParams& d,
                     double t, const SpectralConfig& cfg = {});

/// Combinatorial decision: Property 1 holds iff the pattern is two-fold
/// irreducible.  Pattern must not be all-zero.
Property1Decision decide_property1(const SignPattern& p);

EqualitySystem solve_equality_system(const SignPattern& p);

/// Builds an equality witness for a non-two-fold matrix with r(A) > 0.
/// Throws std::invalid_argument on two-fold input (no witness exists).
EqualityWitness construct_witness(const NonnegMatrix& a, const SpectralConfig& cfg = {});

/// Checks e^{D_i} A_ij = alpha E_i^{-1} e^{C_i} A_ij E_j on nonzero cells.
bool verify_similarity(const NonnegMatrix& a, const EqualityWitness& w, double tol = 1e-12);

/// Returns (R(D1) + R(D2)) / 2 - R((D1 + D2) / 2), nonnegative up to
/// numerical tolerance.
double midpoint_convexity_check(const NonnegMatrix& a, const DiagonalParams& d1,
                                const DiagonalParams& d2, const SpectralConfig& cfg = {});

ConvexityCertificate certify(const NonnegMatrix& a, const SpectralConfig& cfg = {});

}  // namespace specrad
