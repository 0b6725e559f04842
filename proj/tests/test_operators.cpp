#include <doctest.h>

#include "lfortho/banded.hpp"
#include "lfortho/suites.hpp"

using namespace lfortho;

TEST_CASE("pascal matrices are mutually inverse") {
    PrecisionContext ctx(256);
    const BandedOperator B = pascal_matrix(12, +1);
    const BandedOperator Binv = pascal_matrix(12, -1);
    const BandedOperator P = B * Binv;
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j <= i; ++j) CHECK(P.entry(i, j) == (i == j ? 1 : 0));
}

TEST_CASE("banded multiply tracks exactness through truncation") {
    BandedOperator A(4), B(4);
    A.diags[1].assign(4, real(1));   // shift: loses the last row
    B.diags[0].assign(4, real(1));
    A.valid_rows = A.valid_cols = 4;
    B.valid_rows = B.valid_cols = 4;
    const BandedOperator C = A * B;
    CHECK(C.exact(0, 1));
    CHECK(C.valid_rows == 3);
}

TEST_CASE("jacobi matrix times H is symmetric") {
    PrecisionContext ctx(256);
    const Pipeline pipe = run_pipeline(reference_spec(Family::F22), 10, ctx);
    const Operators ops = make_operators(pipe);
    const BandedOperator JH = ops.J * ops.H;
    real scale = JH.max_abs(), worst = 0;
    for (int i = 0; i + 1 < JH.size; ++i)
        if (JH.exact(i, i + 1) && JH.exact(i + 1, i))
            worst = (std::max)(worst, abs(JH.entry(i, i + 1) - JH.entry(i + 1, i)));
    CHECK(worst / scale < ctx.eps_verify);
}

TEST_CASE("dressed pascal realizes the unit shift on the orthogonal basis") {
    PrecisionContext ctx(256);
    const Pipeline pipe = run_pipeline(reference_spec(Family::F12), 8, ctx);
    const Operators ops = make_operators(pipe);
    for (const real& z : {real(1) / 2, real(3)}) {
        const auto P0 = eval_polynomials(pipe.data, z, pipe.K_int - 2);
        const auto Pp = eval_polynomials(pipe.data, z + 1, pipe.K_int - 2);
        for (int n = 0; n <= 6; ++n) {
            real acc = 0;
            for (int j = 0; j <= n; ++j) acc += ops.Pi.entry(n, j) * P0[j];
            CHECK(rel_diff(acc, Pp[n]) < ctx.eps_verify);
        }
    }
    // eq:pis first diagonals
    for (int n = 0; n <= 6; ++n) {
        CHECK(rel_diff(pi_diag(ops.Pi, 1, n), real(n + 1)) < ctx.eps_verify);
        CHECK(rel_diff(pi_diag(ops.PiInv, -1, n), real(-(n + 1))) < ctx.eps_verify);
    }
}

TEST_CASE("six psi expressions agree within their condition scale") {
    PrecisionContext ctx(256);
    const FamilySpec spec = reference_spec(Family::F32);
    const Pipeline pipe = run_pipeline(spec, 8, ctx);
    const Operators ops = make_operators(pipe);
    LFReport report;
    structure_suite(spec, pipe, ops, ctx, report);
    for (const auto& r : report.records)
        if (r.identity.rfind("psi.sixway.", 0) == 0) CHECK(r.pass);
}
