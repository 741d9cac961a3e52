#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "specrad/convexity.hpp"
#include "specrad/generators.hpp"
#include "specrad/oracle.hpp"
#include "specrad/structure.hpp"

using namespace specrad;

namespace {

DiagonalParams worked_d() { return DiagonalParams({1.0, 5.0, 2.0, 6.0}); }

bool nonscalar_delta(const EqualityWitness& w) {
    std::vector<double> delta(w.D.dim());
    for (int i = 0; i < w.D.dim(); ++i) delta[i] = w.D[i] - w.C[i];
    return !DiagonalParams(delta).is_scalar(1e-12);
}

}  // namespace

TEST_CASE("log_radius_scaled basics") {
    NonnegMatrix a = worked_4x4();
    CHECK(log_radius_scaled(a, DiagonalParams(4)) == doctest::Approx(std::log(spectral_radius(a))));
    CHECK(log_radius_scaled(a, worked_d()) == doctest::Approx(3.0).epsilon(1e-8));
    for (double t : {0.25, 0.5, 0.75}) {
        std::vector<double> scaled(4);
        for (int i = 0; i < 4; ++i) scaled[i] = t * worked_d()[i];
        CHECK(log_radius_scaled(a, DiagonalParams(scaled)) == doctest::Approx(3.0 * t).epsilon(1e-8));
    }
    CHECK_THROWS_AS(log_radius_scaled(NonnegMatrix(2), DiagonalParams(2)), std::domain_error);
}

TEST_CASE("convexity_gap vanishes along scalar shifts") {
    NonnegMatrix a = random_matrix(4, 0.9, 13);
    DiagonalParams c({0.2, -0.3, 0.5, 0.0});
    std::vector<double> dv = c.values();
    for (double& v : dv) v += 0.8;
    for (double t : {0.1, 0.5, 0.9})
        CHECK(std::abs(convexity_gap(a, c, DiagonalParams(dv), t)) <= 1e-9);
}

TEST_CASE("convexity_gap vanishes on the worked example equality segment") {
    NonnegMatrix a = worked_4x4();
    DiagonalParams c(4);
    CHECK(std::abs(convexity_gap(a, c, worked_d(), 0.5)) <= 1e-8);
}

TEST_CASE("convexity_gap is strictly positive for a two-fold matrix") {
    NonnegMatrix a = partly_decomposable_two_fold(5).realize();
    DiagonalParams c(5);
    DiagonalParams d({1.0, -1.0, 0.5, 0.0, 2.0});
    CHECK(convexity_gap(a, c, d, 0.5) > kStrictGapFloor);
}

TEST_CASE("decide_property1 follows two-fold irreducibility") {
    Property1Decision yes = decide_property1(partly_decomposable_two_fold(5));
    CHECK(yes.holds);

    Property1Decision w = decide_property1(wielandt(5));
    CHECK_FALSE(w.holds);
    CHECK(w.cause == EqualityCause::ata_reducible);

    Property1Decision r = decide_property1(remark_2x2());
    CHECK_FALSE(r.holds);
    CHECK(r.cause == EqualityCause::reducible);

    CHECK_THROWS_AS(decide_property1(SignPattern(2)), std::invalid_argument);
}

TEST_CASE("solve_equality_system on a two-fold pattern forces scalar delta") {
    SignPattern p = partly_decomposable_two_fold(5);
    EqualitySystem sys = solve_equality_system(p);
    REQUIRE(sys.column_components.size() == 1);
    DiagonalParams delta = sys.forced_delta(0.7, std::vector<double>(5, 0.0), p);
    CHECK(delta.is_scalar(1e-15));
    CHECK(delta[0] == doctest::Approx(0.7));
}

TEST_CASE("solve_equality_system isolates the last Wielandt column") {
    EqualitySystem sys = solve_equality_system(wielandt(5));
    CHECK(sys.column_components ==
          std::vector<std::vector<int>>{{0, 1}, {2}, {3}, {4}});
    CHECK(sys.component_of_column[4] == 3);
}

TEST_CASE("solve_equality_system reproduces the worked example delta") {
    SignPattern p = worked_4x4().pattern();
    EqualitySystem sys = solve_equality_system(p);
    REQUIRE(sys.column_components == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});
    // alpha = e^3 with L = (1, -1, 2, -1) forces Delta = (1, 5, 2, 6).
    DiagonalParams delta = sys.forced_delta(3.0, {1.0, -1.0, 2.0, -1.0}, p);
    CHECK(delta == worked_d());
    // L values must be constant on each component.
    CHECK_THROWS_AS(sys.forced_delta(3.0, {1.0, -1.0, 2.0, 0.0}, p), std::invalid_argument);
    CHECK_THROWS_AS(solve_equality_system(remark_2x2()), std::invalid_argument);
}

TEST_CASE("construct_witness on the Wielandt matrix") {
    NonnegMatrix a = wielandt(5).realize();
    EqualityWitness w = construct_witness(a);
    CHECK(w.cause == EqualityCause::ata_reducible);
    CHECK(nonscalar_delta(w));
    CHECK(verify_similarity(a, w));
    for (int k = 1; k <= 9; ++k)
        CHECK(std::abs(convexity_gap(a, w.C, w.D, k / 10.0)) <= kEqualityGapCeil);
}

TEST_CASE("construct_witness on the worked example") {
    NonnegMatrix a = worked_4x4();
    EqualityWitness w = construct_witness(a);
    CHECK(w.cause == EqualityCause::ata_reducible);
    CHECK(nonscalar_delta(w));
    CHECK(verify_similarity(a, w));
    // L is set on the first column component and nonconstant overall.
    CHECK_FALSE(DiagonalParams(w.L).is_scalar(1e-12));
}

TEST_CASE("the published worked witness verifies exactly") {
    NonnegMatrix a = worked_4x4();
    EqualityWitness w;
    w.C = DiagonalParams(4);
    w.D = worked_d();
    w.alpha = std::exp(3.0);
    w.L = {1.0, -1.0, 2.0, -1.0};
    w.E.resize(4);
    for (int i = 0; i < 4; ++i) w.E[i] = std::exp(w.L[i]);
    w.cause = EqualityCause::ata_reducible;
    CHECK(verify_similarity(a, w));

    EqualityWitness broken = w;
    broken.alpha += 1e-3;
    CHECK_FALSE(verify_similarity(a, broken));
}

TEST_CASE("construct_witness block shift on a reducible matrix") {
    NonnegMatrix a = NonnegMatrix::from_rows({{1, 0}, {1, 1}});
    EqualityWitness w = construct_witness(a);
    CHECK(w.cause == EqualityCause::reducible);
    CHECK(nonscalar_delta(w));
    CHECK(std::abs(convexity_gap(a, w.C, w.D, 0.5)) <= 1e-9);
}

TEST_CASE("construct_witness refuses two-fold input") {
    CHECK_THROWS_AS(construct_witness(partly_decomposable_two_fold(5).realize()),
                    std::invalid_argument);
}

TEST_CASE("witness completeness over all 3x3 non-two-fold patterns") {
    std::uint64_t total = std::uint64_t{1} << 9;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        SignPattern p = SignPattern::from_bits(3, bits);
        if (is_two_fold(p) || !pattern_has_cycle(p)) continue;
        NonnegMatrix a = p.realize();
        EqualityWitness w = construct_witness(a);
        CHECK(nonscalar_delta(w));
        for (int k = 1; k <= 9; k += 2)
            CHECK(std::abs(convexity_gap(a, w.C, w.D, k / 10.0)) <= kEqualityGapCeil);
        if (w.cause == EqualityCause::ata_reducible) CHECK(verify_similarity(a, w));
    }
}

TEST_CASE("midpoint_convexity_check basics") {
    NonnegMatrix a = random_matrix(4, 1.0, 17);
    DiagonalParams d1({0.4, -0.1, 0.9, 0.0});
    CHECK(std::abs(midpoint_convexity_check(a, d1, d1)) <= 1e-12);
    std::vector<double> shifted = d1.values();
    for (double& v : shifted) v += 1.3;
    CHECK(std::abs(midpoint_convexity_check(a, d1, DiagonalParams(shifted))) <= 1e-9);

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int round = 0; round < 50; ++round) {
        std::vector<double> x(4), y(4);
        for (int i = 0; i < 4; ++i) {
            x[i] = u(rng);
            y[i] = u(rng);
        }
        CHECK(midpoint_convexity_check(a, DiagonalParams(x), DiagonalParams(y)) >= -1e-9);
    }
}

TEST_CASE("certify routes strict and equality branches") {
    ConvexityCertificate strict = certify(partly_decomposable_two_fold(5).realize());
    CHECK(strict.strict);
    CHECK_FALSE(strict.witness.has_value());

    ConvexityCertificate eq = certify(worked_4x4());
    CHECK_FALSE(eq.strict);
    CHECK(eq.cause == EqualityCause::ata_reducible);
    REQUIRE(eq.witness.has_value());
    CHECK(nonscalar_delta(*eq.witness));

    ConvexityCertificate red = certify(NonnegMatrix::from_rows({{1, 0}, {1, 1}}));
    CHECK_FALSE(red.strict);
    CHECK(red.cause == EqualityCause::reducible);
}

TEST_CASE("equality cause names serialize stably") {
    CHECK(to_string(EqualityCause::none) == "none");
    CHECK(to_string(EqualityCause::reducible) == "reducible");
    CHECK(to_string(EqualityCause::ata_reducible) == "ata_reducible");
}
