#include "specrad/convexity.hpp"

#include <cmath>
#include <stdexcept>

#include "specrad/structure.hpp"

namespace specrad {

std::string to_string(EqualityCause cause) {
    switch (cause) {
        case EqualityCause::none: return "none";
        case EqualityCause::reducible: return "reducible";
        case EqualityCause::ata_reducible: return "ata_reducible";
    }
    return "none";
}

double log_radius_scaled(const NonnegMatrix& a, const DiagonalParams& d, const SpectralConfig& cfg) {
    double r = spectral_radius(scale_exp(a, d), cfg);
    if (r <= 0.0) throw std::domain_error("zero spectral radius: log r(e^D A) undefined");
    return std::log(r);
}

double convexity_gap(const NonnegMatrix& a, const DiagonalParams& c, const DiagonalParams& d,
                     double t, const SpectralConfig& cfg) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("t must lie in (0,1)");
    double rc = log_radius_scaled(a, c, cfg);
    double rd = log_radius_scaled(a, d, cfg);
    double rm = log_radius_scaled(a, convex_combination(c, d, t), cfg);
    return (1.0 - t) * rc + t * rd - rm;
}

Property1Decision decide_property1(const SignPattern& p) {
    if (p.nnz() == 0) throw std::invalid_argument("all-zero pattern has no positive realization");
    Property1Decision dec;
    if (is_two_fold(p)) {
        dec.holds = true;
        return dec;
    }
    dec.holds = false;
    dec.cause = is_irreducible(p) ? EqualityCause::ata_reducible : EqualityCause::reducible;
    return dec;
}

EqualitySystem solve_equality_system(const SignPattern& p) {
    if (!is_irreducible(p)) throw std::invalid_argument("equality system requires an irreducible pattern");
    EqualitySystem sys;
    sys.column_components = column_components(p);
    sys.component_of_column.assign(p.dim(), -1);
    for (int c = 0; c < static_cast<int>(sys.column_components.size()); ++c)
        for (int j : sys.column_components[c]) sys.component_of_column[j] = c;
    return sys;
}

DiagonalParams EqualitySystem::forced_delta(double log_alpha, const std::vector<double>& column_L,
                                            const SignPattern& p) const {
    int n = p.dim();
    if (static_cast<int>(column_L.size()) != n)
        throw std::invalid_argument("column_L length does not match dimension");
    for (const auto& comp : column_components)
        for (int j : comp)
            if (column_L[j] != column_L[comp[0]])
                throw std::invalid_argument("column_L must be constant on each column component");
    std::vector<double> delta(n, log_alpha);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (p(i, j)) {
                delta[i] = log_alpha + column_L[j] - column_L[i];
                break;
            }
        }
    }
    return DiagonalParams(std::move(delta));
}

EqualityWitness construct_witness(const NonnegMatrix& a, const SpectralConfig& cfg) {
    SignPattern p = a.pattern();
    if (p.nnz() == 0 || spectral_radius(a, cfg) <= 0.0)
        throw std::invalid_argument("construct_witness requires r(A) > 0");
    if (is_two_fold(p))
        throw std::invalid_argument("two-fold irreducible matrix: no equality witness exists");

    int n = a.dim();
    EqualityWitness w;
    w.E.assign(n, 1.0);
    w.L.assign(n, 0.0);

    if (!is_irreducible(p)) {
        // Shift one maximal Frobenius block: C = D + c_h on block h keeps h
        // maximal for every t, so the log radius is affine along the segment.
        FrobeniusForm form = frobenius_form(p);
        int best_block = 0;
        double best_radius = -1.0;
        for (int k = 0; k < static_cast<int>(form.blocks.size()); ++k) {
            const auto& block = form.blocks[k];
            int m = static_cast<int>(block.size());
            std::vector<double> sub(static_cast<std::size_t>(m) * m);
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) sub[static_cast<std::size_t>(x) * m + y] = a(block[x], block[y]);
            double r = spectral_radius(NonnegMatrix(m, std::move(sub)), cfg);
            if (r > best_radius) {
                best_radius = r;
                best_block = k;
            }
        }
        std::vector<double> c(n, 0.0);
        for (int v : form.blocks[best_block]) c[v] = 1.0;
        w.C = DiagonalParams(std::move(c));
        w.D = DiagonalParams(n);
        w.cause = EqualityCause::reducible;
        return w;
    }

    // A irreducible, A^T A reducible: pick the similarity certificate with
    // L = 1 on the first column component, 0 elsewhere, alpha = e, C = 0.
    EqualitySystem sys = solve_equality_system(p);
    std::vector<double> column_L(n, 0.0);
    for (int j : sys.column_components[0]) column_L[j] = 1.0;
    w.alpha = std::exp(1.0);
    w.L = column_L;
    for (int i = 0; i < n; ++i) w.E[i] = std::exp(column_L[i]);
    w.C = DiagonalParams(n);
    w.D = sys.forced_delta(1.0, column_L, p);
    w.cause = EqualityCause::ata_reducible;
    return w;
}

bool verify_similarity(const NonnegMatrix& a, const EqualityWitness& w, double tol) {
    int n = a.dim();
    if (w.C.dim() != n || w.D.dim() != n || static_cast<int>(w.E.size()) != n)
        throw std::invalid_argument("witness dimensions do not match matrix");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (a(i, j) <= 0.0) continue;
            double lhs = std::exp(w.D[i]) * a(i, j);
            double rhs = w.alpha * std::exp(w.C[i]) * a(i, j) * w.E[j] / w.E[i];
            if (std::abs(lhs - rhs) > tol * std::max(std::abs(lhs), std::abs(rhs))) return false;
        }
    }
    return true;
}

double midpoint_convexity_check(const NonnegMatrix& a, const DiagonalParams& d1,
                                const DiagonalParams& d2, const SpectralConfig& cfg) {
    double r1 = log_radius_scaled(a, d1, cfg);
    double r2 = log_radius_scaled(a, d2, cfg);
    double rm = log_radius_scaled(a, convex_combination(d1, d2, 0.5), cfg);
    return 0.5 * (r1 + r2) - rm;
}

ConvexityCertificate certify(const NonnegMatrix& a, const SpectralConfig& cfg) {
    Property1Decision dec = decide_property1(a.pattern());
    ConvexityCertificate cert;
    cert.strict = dec.holds;
    cert.cause = dec.cause;
    if (!dec.holds) cert.witness = construct_witness(a, cfg);
    return cert;
}

}  // namespace specrad
