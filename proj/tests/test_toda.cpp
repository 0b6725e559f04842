#include <doctest.h>

#include "lfortho/toda.hpp"

using namespace lfortho;

TEST_CASE("theta_eta differentiates a monomial in eta") {
    PrecisionContext ctx(256);
    auto f = [](const real& e) { return e * e * e; };
    const real eta = 2;
    const auto d = theta_eta(f, eta, ctx);  // vartheta = eta d/deta
    CHECK(abs(d.value - 3 * eta * eta * eta) < 100 * d.error_estimate + ctx.eps_verify);
}

TEST_CASE("toda flows hold along the eta sweep") {
    PrecisionContext ctx(256);
    const FamilySpec spec = reference_spec(Family::F12);
    const EtaSweep sweep = make_eta_sweep(spec, 10, ctx);
    LFReport report;
    for (long n = 1; n <= 4; ++n) toda_residuals(spec, sweep, n, report);
    for (const auto& r : report.records) {
        INFO(r.identity, " n=", r.n);
        CHECK(r.pass);
    }
}

TEST_CASE("sato-wilson lowers the polynomial degree by one") {
    PrecisionContext ctx(256);
    const FamilySpec spec = reference_spec(Family::F22);
    const EtaSweep sweep = make_eta_sweep(spec, 10, ctx);
    LFReport report;
    for (long n = 1; n <= 3; ++n) sato_wilson_residual(spec, sweep, n, real(3), report);
    for (const auto& r : report.records) CHECK(r.pass);
}

TEST_CASE("finite differences converge at fourth order") {
    PrecisionContext ctx(256);
    const real ratio = fd_convergence_order(reference_spec(Family::F12), 10, 3, ctx);
    CHECK(ratio > real(7) / 2);
    CHECK(ratio < real(9) / 2);
}
