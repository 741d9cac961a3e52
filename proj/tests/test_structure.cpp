#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "specrad/generators.hpp"
#include "specrad/oracle.hpp"
#include "specrad/structure.hpp"

using namespace specrad;

namespace {

SignPattern all_ones(int n) {
    return SignPattern(n, std::vector<char>(static_cast<std::size_t>(n) * n, 1));
}

SignPattern identity(int n) {
    SignPattern p(n);
    std::vector<char> mask(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) mask[static_cast<std::size_t>(i) * n + i] = 1;
    return SignPattern(n, std::move(mask));
}

// Wielandt bound: irreducible P is primitive iff P^((n-1)^2 + 1) is all-true.
bool primitive_by_wielandt_power(const SignPattern& p) {
    if (!is_irreducible(p)) return false;
    int n = p.dim();
    int e = (n - 1) * (n - 1) + 1;
    SignPattern power = p;
    for (int m = 1; m < e; ++m) power = product_pattern(power, p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!power(i, j)) return false;
    return true;
}

}  // namespace

TEST_CASE("is_irreducible basics") {
    CHECK(is_irreducible(n_cycle(5)));
    CHECK_FALSE(is_irreducible(remark_2x2()));
    CHECK(is_irreducible(partly_decomposable_two_fold(5)));
    CHECK_FALSE(is_irreducible(identity(2)));
    CHECK(is_irreducible(SignPattern(1)));  // n = 1 convention
}

TEST_CASE("period of canonical patterns") {
    CHECK(period(n_cycle(5)) == 5);
    CHECK(period(wielandt(5)) == 1);
    CHECK(period(worked_4x4().pattern()) == 1);  // cycles of length 2 and 3
    CHECK(period(cyclic_normal({2, 3})) == 2);
    CHECK_THROWS_AS(period(remark_2x2()), std::invalid_argument);
}

TEST_CASE("is_primitive basics") {
    CHECK(is_primitive(wielandt(5)));
    CHECK(is_primitive(worked_4x4().pattern()));
    CHECK_FALSE(is_primitive(n_cycle(5)));
    CHECK(is_primitive(all_ones(3)));
    CHECK_FALSE(is_primitive(remark_2x2()));
}

TEST_CASE("primitivity matches the Wielandt power bound on sampled patterns") {
    for (const SignPattern& p : sample_patterns(4, 200, 21))
        CHECK(is_primitive(p) == primitive_by_wielandt_power(p));
}

TEST_CASE("worked 4x4: sixth boolean power is all-true") {
    SignPattern p = worked_4x4().pattern();
    SignPattern power = p;
    for (int m = 1; m < 6; ++m) power = product_pattern(power, p);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(power(i, j));
}

TEST_CASE("product_pattern canonical cases") {
    SignPattern cyc = n_cycle(5);
    CHECK(product_pattern(cyc.transposed(), cyc) == identity(5));

    SignPattern r = remark_2x2();
    CHECK(product_pattern(r.transposed(), r) == all_ones(2));

    // Wielandt A^T A: diagonal plus the coupling of columns 1 and 2
    // (the shortcut row supports both); every other column is isolated.
    SignPattern w = wielandt(5);
    SignPattern ata = product_pattern(w.transposed(), w);
    CHECK_FALSE(is_irreducible(ata));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            bool expected = i == j || (i == 0 && j == 1) || (i == 1 && j == 0);
            CHECK(ata(i, j) == expected);
        }
}

TEST_CASE("is_two_fold examples") {
    CHECK(is_two_fold(partly_decomposable_two_fold(5)));
    CHECK_FALSE(is_two_fold(wielandt(5)));
    CHECK_FALSE(is_two_fold(identity(2)));
    CHECK_FALSE(is_two_fold(remark_2x2()));  // reducible despite A^T A irreducible
    CHECK(is_two_fold(SignPattern::from_bits(1, 1)));
    CHECK_FALSE(is_two_fold(SignPattern(1)));
}

TEST_CASE("partly decomposable family has (A^T A)^2 all positive at n = 5") {
    SignPattern p = partly_decomposable_two_fold(5);
    SignPattern ata = product_pattern(p.transposed(), p);
    SignPattern sq = product_pattern(ata, ata);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(sq(i, j));
}

TEST_CASE("is_chainable examples") {
    CHECK(is_chainable(partly_decomposable_two_fold(5)));
    CHECK_FALSE(is_chainable(SignPattern::from_rows({{1, 0}, {0, 1}})));
    CHECK(is_chainable(all_ones(3)));
    CHECK_FALSE(is_chainable(SignPattern(2)));  // zero row and column
    CHECK_FALSE(is_chainable(SignPattern::from_rows({{1, 1}, {0, 0}})));  // zero row
}

TEST_CASE("has_total_support examples") {
    CHECK(has_total_support(identity(3)));
    CHECK_FALSE(has_total_support(partly_decomposable_two_fold(5)));
    CHECK(has_total_support(all_ones(3)));
    CHECK_FALSE(has_total_support(SignPattern(2)));
    CHECK_FALSE(has_total_support(remark_2x2()));  // cell (2,1) lies on no positive diagonal
}

TEST_CASE("total support equals every-cell-on-a-positive-diagonal by brute force") {
    // Brute-force oracle over all permutations for n = 3.
    auto oracle = [](const SignPattern& p) {
        int n = p.dim();
        if (p.nnz() == 0) return false;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<char>> covered(n, std::vector<char>(n, 0));
        do {
            bool ok = true;
            for (int i = 0; i < n; ++i)
                if (!p(i, perm[i])) {
                    ok = false;
                    break;
                }
            if (ok)
                for (int i = 0; i < n; ++i) covered[i][perm[i]] = 1;
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (p(i, j) && !covered[i][j]) return false;
        return true;
    };
    std::uint64_t total = std::uint64_t{1} << 9;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        SignPattern p = SignPattern::from_bits(3, bits);
        CHECK(has_total_support(p) == oracle(p));
    }
}

TEST_CASE("is_fully_indecomposable examples") {
    CHECK_FALSE(is_fully_indecomposable(partly_decomposable_two_fold(5)));
    CHECK(is_fully_indecomposable(all_ones(3)));
    SignPattern circulant = SignPattern::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(is_fully_indecomposable(circulant));
    CHECK(fully_indecomposable_by_konig(circulant));
    CHECK_FALSE(is_fully_indecomposable(identity(3)));
    CHECK(is_fully_indecomposable(SignPattern::from_bits(1, 1)));
    CHECK_FALSE(is_fully_indecomposable(SignPattern(1)));
}

TEST_CASE("is_scrambling examples") {
    CHECK(is_scrambling(all_ones(3)));
    CHECK_FALSE(is_scrambling(identity(2)));
    CHECK(is_scrambling(remark_2x2()));  // rows share column 1
    CHECK(is_scrambling(SignPattern::from_bits(1, 0)));  // vacuous for n = 1
}

TEST_CASE("frobenius_form block structure") {
    FrobeniusForm one = frobenius_form(partly_decomposable_two_fold(5));
    CHECK(one.blocks.size() == 1);
    CHECK(one.blocks[0].size() == 5);

    FrobeniusForm two = frobenius_form(remark_2x2());
    CHECK(two.blocks.size() == 2);

    FrobeniusForm diag = frobenius_form(SignPattern::from_rows({{1, 0}, {0, 1}}));
    CHECK(diag.blocks.size() == 2);
    CHECK(diag.blocks[0].size() == 1);
}

TEST_CASE("frobenius_form permutation yields block lower triangular order") {
    for (const SignPattern& p : sample_patterns(4, 200, 5)) {
        FrobeniusForm f = frobenius_form(p);
        // position of each original index in the new order
        std::vector<int> pos(4);
        for (int k = 0; k < 4; ++k) pos[f.permutation[k]] = k;
        std::vector<int> block_of(4, -1);
        for (int b = 0; b < static_cast<int>(f.blocks.size()); ++b)
            for (int v : f.blocks[b]) block_of[v] = b;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (p(i, j) && block_of[i] != block_of[j])
                    CHECK(pos[i] > pos[j]);  // edge j -> i goes down the order
        for (const auto& block : f.blocks) {
            int bn = static_cast<int>(block.size());
            std::vector<char> sub(static_cast<std::size_t>(bn) * bn, 0);
            for (int a = 0; a < bn; ++a)
                for (int b = 0; b < bn; ++b) sub[static_cast<std::size_t>(a) * bn + b] = p(block[a], block[b]);
            CHECK(is_irreducible(SignPattern(bn, std::move(sub))));
        }
    }
}

TEST_CASE("cyclic_form canonical cases") {
    CyclicForm c4 = cyclic_form(n_cycle(4));
    CHECK(c4.period == 4);
    CHECK(c4.classes.size() == 4);
    for (const auto& cls : c4.classes) CHECK(cls.size() == 1);

    CyclicForm swap = cyclic_form(SignPattern::from_rows({{0, 1}, {1, 0}}));
    CHECK(swap.period == 2);
    CHECK(swap.classes == std::vector<std::vector<int>>{{0}, {1}});

    CyclicForm w = cyclic_form(wielandt(5));
    CHECK(w.period == 1);
    CHECK(w.classes.size() == 1);

    CHECK_THROWS_AS(cyclic_form(remark_2x2()), std::invalid_argument);
}

TEST_CASE("cyclic_form classes respect the cyclic edge rule") {
    SignPattern p = cyclic_normal({2, 3});
    CyclicForm c = cyclic_form(p);
    REQUIRE(c.period == 2);
    std::vector<int> cls(5, -1);
    for (int k = 0; k < c.period; ++k)
        for (int v : c.classes[k]) cls[v] = k;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (p(i, j)) CHECK(cls[i] == (cls[j] + 1) % c.period);  // edge j -> i advances a class
}

TEST_CASE("board_move_irreducible examples") {
    CHECK(board_move_irreducible(n_cycle(5)));
    CHECK_FALSE(board_move_irreducible(remark_2x2()));
    CHECK(board_move_irreducible(all_ones(3)));
    CHECK(board_move_irreducible(n_cycle(5), true));
}

TEST_CASE("column_components canonical cases") {
    using Comp = std::vector<std::vector<int>>;
    CHECK(column_components(partly_decomposable_two_fold(5)) == Comp{{0, 1, 2, 3, 4}});
    CHECK(column_components(wielandt(5)) == Comp{{0, 1}, {2}, {3}, {4}});
    CHECK(column_components(worked_4x4().pattern()) == Comp{{0}, {1, 3}, {2}});
}

TEST_CASE("classify aggregates consistently on the canonical families") {
    StructureReport pd = classify(partly_decomposable_two_fold(5));
    CHECK(pd.irreducible);
    CHECK(pd.primitive);
    CHECK(pd.two_fold);
    CHECK(pd.chainable);
    CHECK_FALSE(pd.fully_indecomposable);
    CHECK_FALSE(pd.total_support);
    CHECK(pd.nnz == 9);

    StructureReport w = classify(wielandt(5));
    CHECK(w.irreducible);
    CHECK(w.primitive);
    CHECK_FALSE(w.two_fold);
    CHECK_FALSE(w.ata_irreducible);

    StructureReport id = classify(identity(3));
    CHECK_FALSE(id.irreducible);
    CHECK_FALSE(id.two_fold);
    CHECK_FALSE(id.chainable);
    CHECK(id.total_support);
    CHECK(id.period == 0);
    CHECK_FALSE(id.cyclic.has_value());
}

TEST_CASE("classify runs cleanly over every 3x3 pattern") {
    std::uint64_t total = std::uint64_t{1} << 9;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        StructureReport rep = classify(SignPattern::from_bits(3, bits));
        CHECK(rep.two_fold == (rep.irreducible && rep.ata_irreducible));
        if (rep.two_fold) {
            CHECK(rep.nnz >= 5);  // 2n - 1
            CHECK(rep.primitive);
        }
        if (rep.fully_indecomposable) CHECK(rep.two_fold);
    }
}
