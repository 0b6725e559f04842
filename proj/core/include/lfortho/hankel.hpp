#pragma once

#include <array>
#include <utility>
#include <vector>

#include "lfortho/family.hpp"
#include "lfortho/precision.hpp"

namespace lfortho {

using Matrix = std::vector<std::vector<real>>;

// G_{ij} = rho_{i+j}, K x K
Matrix build_moment_matrix(const MomentTable& table, int K);

struct LDLTResult {
    Matrix S;            // lower unitriangular, S = L^{-1}, so G = S^{-1} H S^{-T}
    Matrix L;            // lower unitriangular factor of G = L H L^T (equals S^{-1})
    std::vector<real> H;  // pivots
};

LDLTResult cholesky_ldlt(const Matrix& G, const PrecisionContext& ctx);

// (Delta_1..Delta_K, Delta~_1..Delta~_K) by pivoted elimination; needs 2K moments
std::pair<std::vector<real>, std::vector<real>> hankel_determinants(const MomentTable& table,
                                                                    int K,
                                                                    const PrecisionContext& ctx);

struct SpectralData {
    int K = 0;
    std::vector<real> H;      // H_0..H_{K-1}
    std::vector<real> beta;   // beta_0..beta_{K-2}
    std::vector<real> gamma;  // gamma_0 = 0 convention, gamma_1..gamma_{K-1}
    std::vector<real> p1;     // p1_0 = 0
    std::vector<real> p2;     // p2_0 = p2_1 = 0
    std::array<std::vector<real>, 3> s_bands;  // s_bands[k-1][n] = S_{n+k,n}
};

SpectralData extract_spectral(const Matrix& S, const std::vector<real>& H,
                              const PrecisionContext& ctx);

// monic P_0(z)..P_{n_max}(z) via the three-term recursion
std::vector<real> eval_polynomials(const SpectralData& data, const real& z, int n_max);

struct Pipeline {
    FamilySpec spec;
    int K = 0;      // requested order
    int K_int = 0;  // internal truncation (K + buffer)
    MomentTable table;
    Matrix S;     // K_int x K_int
    Matrix Sinv;  // = L
    SpectralData data;  // at K_int
};

Pipeline run_pipeline(const FamilySpec& spec, int K, const PrecisionContext& ctx, int buffer = 8);

real determinant(Matrix A, const PrecisionContext& ctx);  // partial-pivoted elimination

}  // namespace lfortho
