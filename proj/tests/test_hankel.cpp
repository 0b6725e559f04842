#include <doctest.h>

#include "lfortho/hankel.hpp"

using namespace lfortho;

TEST_CASE("ldlt reconstructs the moment matrix") {
    PrecisionContext ctx(256);
    const Pipeline pipe = run_pipeline(reference_spec(Family::F22), 12, ctx);
    const int K = pipe.K_int;
    real gmax = 0, worst = 0;
    for (int i = 0; i < K; ++i)
        for (int j = 0; j <= i; ++j) {
            gmax = (std::max)(gmax, abs(pipe.table.rho[i + j]));
            real acc = 0;
            for (int k = 0; k <= j; ++k) acc += pipe.Sinv[i][k] * pipe.data.H[k] * pipe.Sinv[j][k];
            worst = (std::max)(worst, abs(acc - pipe.table.rho[i + j]));
        }
    CHECK(worst / gmax < ctx.eps_verify);
}

TEST_CASE("spectral data is positive for a positive measure") {
    PrecisionContext ctx(256);
    const Pipeline pipe = run_pipeline(reference_spec(Family::F12), 10, ctx);
    for (int n = 0; n < pipe.K; ++n) CHECK(pipe.data.H[n] > 0);
    for (int n = 1; n < pipe.K; ++n) CHECK(pipe.data.gamma[n] > 0);
    for (int n = 0; n < pipe.K; ++n) CHECK(pipe.data.beta[n] > 0);
}

TEST_CASE("rank-deficient gram matrix raises singular_minor") {
    PrecisionContext ctx(256);
    // two unit atoms at 1 and 2: rho_n = 1 + 2^n, rank 2
    const int K = 4;
    Matrix G(K, std::vector<real>(K));
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) G[i][j] = 1 + pow(real(2), i + j);
    CHECK_THROWS_AS(cholesky_ldlt(G, ctx), singular_minor);
}

TEST_CASE("hankel determinants match pivot products") {
    PrecisionContext ctx(256);
    const Pipeline pipe = run_pipeline(reference_spec(Family::F32), 8, ctx);
    auto [D, Dt] = hankel_determinants(pipe.table, 6, ctx);
    // Delta_{k+1} = H_0 ... H_k
    real prod = 1;
    for (int k = 0; k < 6; ++k) {
        prod *= pipe.data.H[k];
        CHECK(rel_diff(D[k], prod) < ctx.eps_verify);
    }
    // p1_k = -Delta~_k / Delta_k
    for (int k = 1; k < 6; ++k)
        CHECK(rel_diff(-Dt[k - 1] / D[k - 1], pipe.data.p1[k]) < ctx.eps_verify);
}

TEST_CASE("recursion polynomials are orthogonal under the weight") {
    PrecisionContext ctx(256);
    const FamilySpec spec = reference_spec(Family::F12);
    const Pipeline pipe = run_pipeline(spec, 8, ctx);
    const auto w = weight_table(spec, 400);
    Matrix gram(6, std::vector<real>(6, real(0)));
    for (std::size_t k = 0; k < w.size(); ++k) {
        const auto P = eval_polynomials(pipe.data, real(k), 5);
        for (int m = 0; m <= 5; ++m)
            for (int n = 0; n <= m; ++n) gram[m][n] += P[m] * P[n] * w[k];
    }
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= m; ++n) {
            const real want = m == n ? pipe.data.H[n] : real(0);
            CHECK(abs(gram[m][n] - want) / pipe.data.H[n] < real(1e-50));
        }
}
