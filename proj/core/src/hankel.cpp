#include "lfortho/hankel.hpp"

namespace lfortho {

Matrix build_moment_matrix(const MomentTable& table, int K) {
    if (table.count() < static_cast<std::size_t>(2 * K - 1))
        throw insufficient_moments("build_moment_matrix: need 2K-1 moments");
    Matrix G(K, std::vector<real>(K));
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) G[i][j] = table.rho[i + j];
    return G;
}

LDLTResult cholesky_ldlt(const Matrix& G, const PrecisionContext& ctx) {
    const int K = static_cast<int>(G.size());
    Matrix A = G;
    Matrix L(K, std::vector<real>(K, real(0)));
    std::vector<real> H(K);
    for (int i = 0; i < K; ++i) L[i][i] = 1;
    for (int k = 0; k < K; ++k) {
        H[k] = A[k][k];
        // Hankel minors cancel massively against the Gram diagonal, so gauge
        // singularity against the previous pivot: H_k / H_{k-1} = gamma_k is
        // O(k) for healthy positive measures and collapses only at genuine
        // rank deficiency.
        const real gauge = k == 0 ? (std::max)(real(1), abs(G[0][0])) : abs(H[k - 1]);
        if (abs(H[k]) < ctx.eps_pivot * gauge) throw singular_minor(k);
        for (int i = k + 1; i < K; ++i) L[i][k] = A[i][k] / H[k];
        for (int i = k + 1; i < K; ++i)
            for (int j = k + 1; j <= i; ++j) {
                A[i][j] -= L[i][k] * H[k] * L[j][k];
                A[j][i] = A[i][j];
            }
    }

    // forward-substitute the unitriangular inverse
    Matrix S(K, std::vector<real>(K, real(0)));
    for (int i = 0; i < K; ++i) S[i][i] = 1;
    for (int i = 0; i < K; ++i)
        for (int j = i - 1; j >= 0; --j) {
            real s = L[i][j];
            for (int k = j + 1; k < i; ++k) s += S[i][k] * L[k][j];
            S[i][j] = -s;
        }
    return {std::move(S), std::move(L), std::move(H)};
}

real determinant(Matrix A, const PrecisionContext&) {
    const int n = static_cast<int>(A.size());
    real det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (abs(A[i][k]) > abs(A[piv][k])) piv = i;
        if (A[piv][k] == 0) return real(0);
        if (piv != k) {
            std::swap(A[piv], A[k]);
            det = -det;
        }
        det *= A[k][k];
        for (int i = k + 1; i < n; ++i) {
            const real f = A[i][k] / A[k][k];
            for (int j = k; j < n; ++j) A[i][j] -= f * A[k][j];
        }
    }
    return det;
}

std::pair<std::vector<real>, std::vector<real>> hankel_determinants(const MomentTable& table,
                                                                    int K,
                                                                    const PrecisionContext& ctx) {
    if (table.count() < static_cast<std::size_t>(2 * K))
        throw insufficient_moments("hankel_determinants: need 2K moments");
    std::vector<real> delta(K), delta_t(K);
    for (int k = 1; k <= K; ++k) {
        Matrix A(k, std::vector<real>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) A[i][j] = table.rho[i + j];
        delta[k - 1] = determinant(A, ctx);
        // tilde: last column index k-1 replaced by k
        for (int i = 0; i < k; ++i) A[i][k - 1] = table.rho[i + k];
        delta_t[k - 1] = determinant(std::move(A), ctx);
    }
    return {std::move(delta), std::move(delta_t)};
}

SpectralData extract_spectral(const Matrix& S, const std::vector<real>& H,
                              const PrecisionContext&) {
    const int K = static_cast<int>(S.size());
    SpectralData d;
    d.K = K;
    d.H = H;
    d.p1.assign(K, real(0));
    d.p2.assign(K, real(0));
    for (int n = 1; n < K; ++n) d.p1[n] = S[n][n - 1];
    for (int n = 2; n < K; ++n) d.p2[n] = S[n][n - 2];
    d.beta.resize(K - 1);
    for (int n = 0; n + 1 < K; ++n) d.beta[n] = d.p1[n] - d.p1[n + 1];
    d.gamma.assign(K, real(0));
    for (int n = 1; n < K; ++n) d.gamma[n] = H[n] / H[n - 1];
    for (int k = 1; k <= 3; ++k) {
        auto& band = d.s_bands[k - 1];
        band.assign(K, real(0));
        for (int n = 0; n + k < K; ++n) band[n] = S[n + k][n];
    }
    return d;
}

std::vector<real> eval_polynomials(const SpectralData& data, const real& z, int n_max) {
    if (n_max > data.K - 2)
        throw validation_error("eval_polynomials: n_max exceeds available recursion data");
    std::vector<real> P;
    P.reserve(n_max + 1);
    P.push_back(1);
    if (n_max >= 1) P.push_back(z - data.beta[0]);
    for (int n = 1; n < n_max; ++n)
        P.push_back((z - data.beta[n]) * P[n] - data.gamma[n] * P[n - 1]);
    return P;
}

Pipeline run_pipeline(const FamilySpec& spec, int K, const PrecisionContext& ctx, int buffer) {
    spec.validate();
    Pipeline p;
    p.spec = spec;
    p.K = K;
    p.K_int = K + buffer;
    p.table = moment_table(spec, 2 * p.K_int + 2, ctx);
    Matrix G = build_moment_matrix(p.table, p.K_int);
    auto f = cholesky_ldlt(G, ctx);
    p.S = std::move(f.S);
    p.Sinv = std::move(f.L);
    p.data = extract_spectral(p.S, f.H, ctx);
    return p;
}

}  // namespace lfortho
