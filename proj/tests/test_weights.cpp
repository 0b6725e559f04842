#include <doctest.h>

#include <random>

#include "lfortho/family.hpp"

using namespace lfortho;

TEST_CASE("spec validation rejects malformed parameter sets") {
    FamilySpec s = reference_spec(Family::F12);
    s.a = {real(1), real(2)};
    CHECK_THROWS_AS(s.validate(), validation_error);

    FamilySpec t = reference_spec(Family::F32);
    t.eta = 2;  // needs eta < 1 unless terminating
    CHECK_THROWS_AS(t.validate(), validation_error);
    t.a[0] = -3;  // terminating numerator parameter lifts the restriction
    t.positivity = false;
    CHECK_NOTHROW(t.validate());
}

TEST_CASE("pearson residual vanishes over the weight table") {
    PrecisionContext ctx(256);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ua(0.3, 2.3), ub(0.1, 1.1);
    for (Family f : {Family::F12, Family::F22, Family::F32}) {
        FamilySpec s = reference_spec(f);
        for (auto& ai : s.a) ai = real(ua(rng));
        for (auto& bj : s.b) bj = real(ub(rng));
        s.validate();
        const PearsonPair p = make_pearson(s);
        const auto w = weight_table(s, 201);
        real worst = 0;
        for (std::size_t k = 0; k + 1 <= 200; ++k) {
            const real lhs = p.theta(real(k + 1)) * w[k + 1];
            const real rhs = p.sigma(real(k)) * w[k];
            worst = (std::max)(worst, abs(lhs - rhs) / (std::max)(real(1), abs(rhs)));
        }
        CHECK(worst < ctx.eps_verify);
    }
}

TEST_CASE("recurrence weights agree with fresh pochhammer products") {
    PrecisionContext ctx(256);
    for (Family f : {Family::F12, Family::F22, Family::F32}) {
        const FamilySpec s = reference_spec(f);
        for (std::size_t k : {0u, 1u, 5u, 17u})
            CHECK(rel_diff(weight(s, k, ctx), weight_direct(s, k)) < ctx.eps_verify);
    }
}

TEST_CASE("moments are positive and strictly increasing in order") {
    PrecisionContext ctx(256);
    const MomentTable t = moment_table(reference_spec(Family::F22), 10, ctx);
    for (std::size_t n = 0; n < 10; ++n) CHECK(t.rho[n] > 0);
}

TEST_CASE("terminating 3F2 weight sums despite eta >= 1") {
    PrecisionContext ctx(256);
    FamilySpec s = reference_spec(Family::F32);
    s.a[0] = -4;
    s.eta = 2;
    s.positivity = false;  // terminating weights alternate after the cutoff
    const MomentTable t = moment_table(s, 3, ctx);
    // sigma(4) = 0 kills the tail: only k = 0..4 contribute
    const auto w = weight_table(s, 10);
    for (std::size_t k = 5; k < 10; ++k) CHECK(w[k] == 0);
    real rho0 = 0;
    for (std::size_t k = 0; k <= 4; ++k) rho0 += w[k];
    CHECK(rel_diff(t.rho[0], rho0) < ctx.eps_verify);
}
