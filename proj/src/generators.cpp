#include "specrad/generators.hpp"

#include <random>
#include <stdexcept>

namespace specrad {

SignPattern wielandt(int n) {
    if (n < 3) throw std::invalid_argument("wielandt requires n >= 3");
    std::vector<char> mask(static_cast<std::size_t>(n) * n, 0);
    for (int j = 0; j < n; ++j) mask[static_cast<std::size_t>((j + 1) % n) * n + j] = 1;
    mask[static_cast<std::size_t>(2) * n + 0] = 1;  // shortcut edge 1 -> 3
    return SignPattern(n, std::move(mask));
}

SignPattern partly_decomposable_two_fold(int n) {
    if (n < 4) throw std::invalid_argument("partly_decomposable_two_fold requires n >= 4");
    std::vector<char> mask(static_cast<std::size_t>(n) * n, 0);
    for (int j = 0; j < n; ++j) mask[static_cast<std::size_t>((j + 1) % n) * n + j] = 1;
    for (int j = 0; j < n - 1; ++j) mask[static_cast<std::size_t>(n - 1) * n + j] = 1;
    mask[1] = 1;  // cell (1,2)
    return SignPattern(n, std::move(mask));
}

NonnegMatrix worked_4x4() {
    return NonnegMatrix::from_rows({{0, 1, 0, 1},
                                    {0.5, 0, 0, 0},
                                    {0.5, 0, 0, 0},
                                    {0, 0, 1, 0}});
}

SignPattern n_cycle(int n) {
    std::vector<char> mask(static_cast<std::size_t>(n) * n, 0);
    for (int j = 0; j < n; ++j) mask[static_cast<std::size_t>((j + 1) % n) * n + j] = 1;
    return SignPattern(n, std::move(mask));
}

SignPattern cyclic_normal(const std::vector<int>& block_sizes) {
    int gamma = static_cast<int>(block_sizes.size());
    if (gamma < 1) throw std::invalid_argument("cyclic_normal requires at least one block");
    int n = 0;
    for (int s : block_sizes) {
        if (s < 1) throw std::invalid_argument("block sizes must be positive");
        n += s;
    }
    std::vector<int> start(gamma + 1, 0);
    for (int k = 0; k < gamma; ++k) start[k + 1] = start[k] + block_sizes[k];
    std::vector<char> mask(static_cast<std::size_t>(n) * n, 0);
    // Block B_k maps class k to class k+1 (cyclically): rows of class
    // (k mod gamma)+1 are positive on the columns of class k.
    for (int k = 0; k < gamma; ++k) {
        int next = (k + 1) % gamma;
        for (int i = start[next]; i < start[next + 1]; ++i)
            for (int j = start[k]; j < start[k + 1]; ++j)
                mask[static_cast<std::size_t>(i) * n + j] = 1;
    }
    return SignPattern(n, std::move(mask));
}

SignPattern remark_2x2() { return SignPattern::from_rows({{1, 0}, {1, 1}}); }

namespace {

template <typename CellFn>
void visit_random_cells(int n, double density, std::uint64_t seed, CellFn&& fn) {
    if (!(density > 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in (0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (uniform(rng) < density) fn(i, j, rng);
}

}  // namespace

SignPattern random_pattern(int n, double density, std::uint64_t seed) {
    std::vector<char> mask(static_cast<std::size_t>(n) * n, 0);
    visit_random_cells(n, density, seed, [&](int i, int j, std::mt19937_64&) {
        mask[static_cast<std::size_t>(i) * n + j] = 1;
    });
    return SignPattern(n, std::move(mask));
}

NonnegMatrix random_matrix(int n, double density, std::uint64_t seed) {
    std::vector<double> entries(static_cast<std::size_t>(n) * n, 0.0);
    // Values come from an independent stream so the cell-selection draws
    // stay aligned with random_pattern at the same seed.
    std::mt19937_64 value_rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    visit_random_cells(n, density, seed, [&](int i, int j, std::mt19937_64&) {
        entries[static_cast<std::size_t>(i) * n + j] = 1.0 - uniform(value_rng);  // uniform on (0,1]
    });
    return NonnegMatrix(n, std::move(entries));
}

NonnegMatrix generate(const GeneratorSpec& spec) {
    if (spec.family == "wielandt") return wielandt(spec.n).realize();
    if (spec.family == "partly_decomposable_two_fold")
        return partly_decomposable_two_fold(spec.n).realize();
    if (spec.family == "worked_4x4") return worked_4x4();
    if (spec.family == "n_cycle") return n_cycle(spec.n).realize();
    if (spec.family == "cyclic_normal") {
        if (spec.blocks.empty()) throw std::invalid_argument("cyclic_normal requires block sizes");
        return cyclic_normal(spec.blocks).realize();
    }
    if (spec.family == "remark_2x2") return remark_2x2().realize();
    if (spec.family == "random_pattern") return random_pattern(spec.n, spec.density, spec.seed).realize();
    if (spec.family == "random_matrix") return random_matrix(spec.n, spec.density, spec.seed);
    throw std::invalid_argument("unknown generator family: " + spec.family);
}

}  // namespace specrad
