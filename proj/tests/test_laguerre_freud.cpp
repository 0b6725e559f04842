#include <doctest.h>

#include "lfortho/laguerre_freud.hpp"
#include "lfortho/suites.hpp"

using namespace lfortho;

namespace {

LFWindow window_at(const Pipeline& pipe, long n) {
    const auto& d = pipe.data;
    return {d.beta[n - 1], d.beta[n], d.beta[n + 1],
            d.gamma[n - 1], d.gamma[n], d.gamma[n + 1], d.p1[n - 1]};
}

}  // namespace

TEST_CASE("1F2 step equations reproduce cholesky coefficients") {
    PrecisionContext ctx(256);
    const FamilySpec spec = reference_spec(Family::F12);
    const Pipeline pipe = run_pipeline(spec, 12, ctx);
    for (long n = 2; n <= 6; ++n) {
        auto [g, b] = lf12_step(spec, n, window_at(pipe, n), ctx);
        CHECK(rel_diff(g, pipe.data.gamma[n + 2]) < real(1e-40));
        CHECK(rel_diff(b, pipe.data.beta[n + 2]) < real(1e-40));
    }
}

TEST_CASE("2F2 step equations reproduce cholesky coefficients") {
    PrecisionContext ctx(256);
    const FamilySpec spec = reference_spec(Family::F22);
    const Pipeline pipe = run_pipeline(spec, 12, ctx);
    for (long n = 2; n <= 6; ++n) {
        auto [g, b] = lf22_step(spec, n, window_at(pipe, n), ctx);
        CHECK(rel_diff(g, pipe.data.gamma[n + 2]) < real(1e-40));
        CHECK(rel_diff(b, pipe.data.beta[n + 2]) < real(1e-40));
    }
}

TEST_CASE("forward runs stay glued to the factorization ground truth") {
    PrecisionContext ctx(256);
    const LFReport run = lf_forward_run(reference_spec(Family::F12), 5, ctx);
    CHECK(run.steps.size() == 5);
    for (const auto& s : run.steps) {
        CHECK(s.dev_beta < real(1e-30));
        CHECK(s.dev_gamma < real(1e-30));
    }
}

TEST_CASE("forward runs are refused for 3F2") {
    PrecisionContext ctx(256);
    CHECK_THROWS_AS(lf_forward_run(reference_spec(Family::F32), 4, ctx), validation_error);
}

TEST_CASE("zero steps yields the seed-only table") {
    PrecisionContext ctx(256);
    const LFReport run = lf_forward_run(reference_spec(Family::F22), 0, ctx);
    CHECK(run.steps.empty());
}

TEST_CASE("errata ledger flags systematic all-n failures only") {
    LFReport r;
    for (long n = 0; n < 5; ++n) {
        r.add("lf", "f12.pi2.printed", n, real(1), real(0));      // always off
        r.add("lf", "f12.pi2.corrected", n, real(0), real(1));    // always fine
        r.add("lf", "f12.psi1", n, n == 2 ? real(1) : real(0), real(1) / 2);  // one bad n
    }
    finalize_errata(r);
    REQUIRE(r.errata.size() == 1);
    CHECK(r.errata[0].identity == "f12.pi2.printed");
    CHECK(!r.errata[0].detail.empty());
}

TEST_CASE("pi compatibilities hold for every family") {
    PrecisionContext ctx(256);
    for (Family f : {Family::F12, Family::F22, Family::F32}) {
        const FamilySpec spec = reference_spec(f);
        const Pipeline pipe = run_pipeline(spec, 12, ctx);
        const Operators ops = make_operators(pipe);
        LFReport report;
        for (long n = 3; n <= 6; ++n) compat_pi_residuals(pipe, ops, n, ctx, report);
        for (const auto& rec : report.records)
            if (rec.identity.find("printed") == std::string::npos) CHECK(rec.pass);
    }
}
