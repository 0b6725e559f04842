#include <doctest.h>

#include "lfortho/precision.hpp"

using namespace lfortho;

TEST_CASE("context enforces the tolerance ordering") {
    PrecisionContext ctx(256);
    CHECK(ctx.eps_verify < ctx.eps_pivot);
    CHECK(ctx.eps_pivot < 1);
    CHECK_THROWS_AS(PrecisionContext(64), validation_error);
}

TEST_CASE("certified sum of a geometric series") {
    PrecisionContext ctx(256);
    auto term = [](std::size_t k) { return pow(real(1) / 2, static_cast<unsigned>(k)); };
    const auto s = sum_certified(term, ctx);
    CHECK(abs(s.value - 2) < ctx.eps_verify * 2);
    CHECK(s.n_trunc > 200);  // needs ~bits terms to reach full precision
}

TEST_CASE("certified sum recovers exp(eta)") {
    PrecisionContext ctx(256);
    const real eta = 2;
    auto term = [&](std::size_t k) {
        real t = 1;
        for (std::size_t j = 1; j <= k; ++j) t *= eta / real(j);
        return t;
    };
    const auto s = sum_certified(term, ctx);
    CHECK(abs(s.value - exp(eta)) / exp(eta) < ctx.eps_verify);
}

TEST_CASE("harmonic-like tail is rejected as non-convergent") {
    PrecisionContext ctx(256);
    ctx.max_terms = 2000;
    auto term = [](std::size_t k) { return real(1) / real(k + 1); };
    CHECK_THROWS_AS(sum_certified(term, ctx), non_convergent);
}

TEST_CASE("terminating series certifies through the zero tail") {
    PrecisionContext ctx(256);
    auto term = [](std::size_t k) { return k < 4 ? real(1) : real(0); };
    const auto s = sum_certified(term, ctx);
    CHECK(s.value == 4);
}

TEST_CASE("rel_diff saturates at unit scale") {
    PrecisionContext ctx(256);
    CHECK(rel_diff(real(1) / 4, real(0)) == real(1) / 4);
    CHECK(rel_diff(real(100), real(50)) == real(1) / 2);
}
