#include "specrad/spectral.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "specrad/structure.hpp"

namespace specrad {

namespace {

// Power iteration with additive diagonal shift on a dense block.  The
// Collatz-Wielandt ratio bracket min_i (Mv)_i/v_i <= r <= max_i (Mv)_i/v_i
// gives certified two-sided bounds; converged when the bracket narrows
// below the relative tolerance.
struct BlockResult {
    double radius;
    std::vector<double> vector;
};

BlockResult block_radius(const std::vector<double>& m, int k, const SpectralConfig& cfg) {
    if (k == 1) return {m[0], {1.0}};
    double s = cfg.shift;
    std::vector<double> v(k, 1.0 / k), w(k);
    double lo = 0.0, hi = 0.0;
    for (long iter = 0; iter < cfg.max_iterations; ++iter) {
        for (int i = 0; i < k; ++i) {
            double acc = s * v[i];
            const double* row = m.data() + static_cast<std::size_t>(i) * k;
            for (int j = 0; j < k; ++j) acc += row[j] * v[j];
            w[i] = acc;
        }
        lo = std::numeric_limits<double>::infinity();
        hi = 0.0;
        for (int i = 0; i < k; ++i) {
            double ratio = w[i] / v[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        double est = 0.5 * (lo + hi) - s;
        if (hi - lo <= cfg.tolerance * std::max(est, std::numeric_limits<double>::min())) {
            double sum = std::accumulate(w.begin(), w.end(), 0.0);
            for (int i = 0; i < k; ++i) w[i] /= sum;
            return {est, w};
        }
        double sum = std::accumulate(w.begin(), w.end(), 0.0);
        for (int i = 0; i < k; ++i) v[i] = w[i] / sum;
    }
    throw ConvergenceError("power iteration did not converge", cfg.max_iterations, lo - s, hi - s);
}

}  // namespace

double spectral_radius(const NonnegMatrix& m, const SpectralConfig& cfg) {
    // Reducible matrices route through the Frobenius form: the radius is
    // the maximum over irreducible diagonal blocks.
    FrobeniusForm form = frobenius_form(m.pattern());
    double best = 0.0;
    for (const auto& block : form.blocks) {
        int k = static_cast<int>(block.size());
        std::vector<double> sub(static_cast<std::size_t>(k) * k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) sub[static_cast<std::size_t>(a) * k + b] = m(block[a], block[b]);
        best = std::max(best, block_radius(sub, k, cfg).radius);
    }
    return best;
}

PerronPair perron_pair(const NonnegMatrix& m, const SpectralConfig& cfg) {
    if (!is_irreducible(m.pattern()))
        throw std::invalid_argument("perron_pair requires an irreducible sign pattern");
    int n = m.dim();
    BlockResult res = block_radius(m.entries(), n, cfg);
    return {res.radius, std::move(res.vector)};
}

HolderGaps holder_gap(const NonnegMatrix& a, const NonnegMatrix& b, double t,
                      const SpectralConfig& cfg) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0,1]");
    int n = a.dim();
    PerronPair pa = perron_pair(a, cfg);
    PerronPair pb = perron_pair(b, cfg);

    HolderGaps gaps;
    gaps.row_gaps.resize(n);
    for (int i = 0; i < n; ++i) {
        double sum_a = 0.0, sum_b = 0.0, sum_mix = 0.0;
        for (int j = 0; j < n; ++j) {
            double xa = a(i, j) * pa.vector[j];
            double xb = b(i, j) * pb.vector[j];
            sum_a += xa;
            sum_b += xb;
            sum_mix += std::pow(xa, 1.0 - t) * std::pow(xb, t);
        }
        gaps.row_gaps[i] = std::pow(sum_a, 1.0 - t) * std::pow(sum_b, t) - sum_mix;
    }

    std::vector<double> mix(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mix[static_cast<std::size_t>(i) * n + j] = std::pow(a(i, j), 1.0 - t) * std::pow(b(i, j), t);
    double r_mix = spectral_radius(NonnegMatrix(n, std::move(mix)), cfg);
    gaps.radius_gap = std::pow(pa.radius, 1.0 - t) * std::pow(pb.radius, t) - r_mix;
    return gaps;
}

}  // namespace specrad
