#include "lfortho/banded.hpp"

#include <algorithm>

namespace lfortho {

BandedOperator BandedOperator::identity(int n) {
    BandedOperator a(n);
    a.diags[0].assign(n, real(1));
    return a;
}

BandedOperator BandedOperator::diagonal(std::vector<real> v) {
    BandedOperator a(static_cast<int>(v.size()));
    a.diags[0] = std::move(v);
    return a;
}

real BandedOperator::entry(int i, int j) const {
    auto it = diags.find(j - i);
    if (it == diags.end()) return real(0);
    return it->second[i];
}

void BandedOperator::set(int i, int j, const real& v) {
    auto& d = diags[j - i];
    if (d.empty()) d.assign(size, real(0));
    d[i] = v;
}

int BandedOperator::upper() const {
    int u = 0;
    for (const auto& [d, _] : diags) u = (std::max)(u, d);
    return u;
}

int BandedOperator::lower() const {
    int l = 0;
    for (const auto& [d, _] : diags) l = (std::max)(l, -d);
    return l;
}

BandedOperator BandedOperator::transpose() const {
    BandedOperator t(size);
    t.valid_rows = valid_cols;
    t.valid_cols = valid_rows;
    for (const auto& [d, v] : diags) {
        auto& tv = t.diags[-d];
        tv.assign(size, real(0));
        // t(i, i-d) = A(i-d, i)
        for (int i = (std::max)(0, d); i < size && i - d < size; ++i) tv[i] = v[i - d];
    }
    return t;
}

BandedOperator BandedOperator::scaled(const real& c) const {
    BandedOperator r = *this;
    for (auto& [d, v] : r.diags)
        for (auto& x : v) x *= c;
    return r;
}

BandedOperator& BandedOperator::shift_diagonal(const real& c) {
    auto& d = diags[0];
    if (d.empty()) d.assign(size, real(0));
    for (auto& x : d) x += c;
    return *this;
}

real BandedOperator::max_abs() const {
    real m = 0;
    for (const auto& [d, v] : diags)
        for (int i = (std::max)(0, -d); i < size && i + d < size; ++i)
            if (exact(i, i + d)) m = (std::max)(m, abs(v[i]));
    return m;
}

BandedOperator operator*(const BandedOperator& A, const BandedOperator& B) {
    const int n = A.size;
    BandedOperator C(n);
    const int uA = A.upper(), lB = B.lower();
    auto clamp = [n](int v) { return (std::max)(0, (std::min)(n, v)); };
    C.valid_rows = clamp((std::min)({A.valid_rows,
                                     B.valid_rows == n ? n : B.valid_rows - uA,
                                     uA > 0 ? n - uA : n}));
    C.valid_cols = clamp((std::min)({B.valid_cols,
                                     A.valid_cols == n ? n : A.valid_cols - lB,
                                     lB > 0 ? n - lB : n}));
    for (const auto& [dA, vA] : A.diags)
        for (const auto& [dB, vB] : B.diags) {
            const int d = dA + dB;
            if (d >= n || d <= -n) continue;
            auto& vC = C.diags[d];
            if (vC.empty()) vC.assign(n, real(0));
            // C(i, i+d) += A(i, i+dA) B(i+dA, i+d)
            const int ilo = (std::max)({0, -d, -dA});
            const int ihi = (std::min)({n, n - d, n - dA});
            for (int i = ilo; i < ihi; ++i) vC[i] += vA[i] * vB[i + dA];
        }
    return C;
}

namespace {

BandedOperator combine(const BandedOperator& A, const BandedOperator& B, int sgn) {
    BandedOperator C(A.size);
    C.valid_rows = (std::min)(A.valid_rows, B.valid_rows);
    C.valid_cols = (std::min)(A.valid_cols, B.valid_cols);
    C.diags = A.diags;
    for (const auto& [d, v] : B.diags) {
        auto& vC = C.diags[d];
        if (vC.empty()) vC.assign(C.size, real(0));
        for (int i = 0; i < C.size; ++i) vC[i] += sgn * v[i];
    }
    return C;
}

}  // namespace

BandedOperator operator+(const BandedOperator& A, const BandedOperator& B) {
    return combine(A, B, +1);
}

BandedOperator operator-(const BandedOperator& A, const BandedOperator& B) {
    return combine(A, B, -1);
}

BandedOperator shift_matrix(int n) {
    BandedOperator a(n);
    a.diags[1].assign(n, real(1));
    return a;
}

BandedOperator jacobi_matrix(const SpectralData& data) {
    const int K = data.K;
    BandedOperator J(K);
    auto& sup = J.diags[1];
    auto& diag = J.diags[0];
    auto& sub = J.diags[-1];
    sup.assign(K, real(1));
    diag.assign(K, real(0));
    sub.assign(K, real(0));
    for (int i = 0; i + 1 < K; ++i) diag[i] = data.beta[i];
    for (int i = 1; i < K; ++i) sub[i] = data.gamma[i];
    J.valid_rows = J.valid_cols = K - 1;  // last diagonal entry unavailable
    return J;
}

BandedOperator pascal_matrix(int n, int sign) {
    BandedOperator B(n);
    // binomials by running the Pascal recurrence per diagonal
    for (int d = 0; d < n; ++d) {
        auto& v = B.diags[-d];
        v.assign(n, real(0));
        for (int i = d; i < n; ++i) {
            real c = 1;
            for (int t = 0; t < d; ++t) c = c * real(i - t) / real(t + 1);
            v[i] = (sign < 0 && (d % 2)) ? -c : c;
        }
    }
    return B;
}

BandedOperator dressed_pascal(const Pipeline& pipe, int sign) {
    const int K = pipe.K_int;
    const BandedOperator B = pascal_matrix(K, sign);
    BandedOperator S(K), Sinv(K);
    for (int d = 0; d < K; ++d) {
        auto& vs = S.diags[-d];
        auto& vi = Sinv.diags[-d];
        vs.assign(K, real(0));
        vi.assign(K, real(0));
        for (int i = d; i < K; ++i) {
            vs[i] = pipe.S[i][i - d];
            vi[i] = pipe.Sinv[i][i - d];
        }
    }
    return S * B * Sinv;  // lower-triangular products stay exact on all rows
}

BandedOperator sigma_of(const FamilySpec& spec, const BandedOperator& X) {
    BandedOperator r = BandedOperator::identity(X.size).scaled(spec.eta);
    for (const auto& ai : spec.a) {
        BandedOperator f = X;
        f.shift_diagonal(ai);
        r = r * f;
    }
    return r;
}

BandedOperator theta_of(const FamilySpec& spec, const BandedOperator& X) {
    BandedOperator f1 = X, f2 = X;
    f1.shift_diagonal(spec.b[0]);
    f2.shift_diagonal(spec.b[1]);
    return X * f1 * f2;
}

Operators make_operators(const Pipeline& pipe) {
    Operators ops;
    ops.J = jacobi_matrix(pipe.data);
    ops.Pi = dressed_pascal(pipe, +1);
    ops.PiInv = dressed_pascal(pipe, -1);
    std::vector<real> h = pipe.data.H, hinv(pipe.data.H.size());
    for (std::size_t i = 0; i < h.size(); ++i) hinv[i] = 1 / h[i];
    ops.H = BandedOperator::diagonal(std::move(h));
    ops.Hinv = BandedOperator::diagonal(std::move(hinv));
    return ops;
}

BandedOperator structure_matrix(const FamilySpec& spec, const Operators& ops, PsiMethod method) {
    const BandedOperator& J = ops.J;
    BandedOperator psi;
    switch (method) {
        case PsiMethod::sigmaJ_H_PiT:
            psi = sigma_of(spec, J) * ops.H * ops.Pi.transpose();
            break;
        case PsiMethod::PiInv_H_thetaJT:
            psi = ops.PiInv * ops.H * theta_of(spec, J.transpose());
            break;
        case PsiMethod::PiInv_thetaJ_H:
            psi = ops.PiInv * theta_of(spec, J) * ops.H;
            break;
        case PsiMethod::H_sigmaJT_PiT:
            psi = ops.H * sigma_of(spec, J.transpose()) * ops.Pi.transpose();
            break;
        case PsiMethod::thetaJplus_PiInv_H: {
            BandedOperator Jp = J;
            Jp.shift_diagonal(real(1));
            psi = theta_of(spec, Jp) * ops.PiInv * ops.H;
            break;
        }
        case PsiMethod::H_PiT_sigmaJTminus: {
            BandedOperator Jm = J.transpose();
            Jm.shift_diagonal(real(-1));
            psi = ops.H * ops.Pi.transpose() * sigma_of(spec, Jm);
            break;
        }
    }
    if (psi.valid_rows <= 0 && psi.valid_cols <= 0)
        throw buffer_exhausted("structure_matrix: truncation buffer consumed");
    return psi;
}

namespace {

BandedOperator abs_of(const BandedOperator& A) {
    BandedOperator r = A;
    for (auto& [d, v] : r.diags)
        for (auto& x : v) x = abs(x);
    return r;
}

}  // namespace

BandedOperator structure_condition(const FamilySpec& spec, const Operators& ops,
                                   PsiMethod method) {
    // spec parameters, J, and H are entrywise nonnegative for valid specs, so
    // only the Pascal factors and the J-1 shift need absolute values
    const BandedOperator J = abs_of(ops.J);
    const BandedOperator Pi = abs_of(ops.Pi);
    const BandedOperator PiInv = abs_of(ops.PiInv);
    switch (method) {
        case PsiMethod::sigmaJ_H_PiT: return sigma_of(spec, J) * ops.H * Pi.transpose();
        case PsiMethod::PiInv_H_thetaJT:
            return PiInv * ops.H * theta_of(spec, J.transpose());
        case PsiMethod::PiInv_thetaJ_H: return PiInv * theta_of(spec, J) * ops.H;
        case PsiMethod::H_sigmaJT_PiT:
            return ops.H * sigma_of(spec, J.transpose()) * Pi.transpose();
        case PsiMethod::thetaJplus_PiInv_H: {
            BandedOperator Jp = J;
            Jp.shift_diagonal(real(1));
            return theta_of(spec, Jp) * PiInv * ops.H;
        }
        case PsiMethod::H_PiT_sigmaJTminus: {
            BandedOperator Jm = J.transpose();
            Jm.shift_diagonal(real(1));  // |J - 1| <= J + 1 entrywise
            return ops.H * Pi.transpose() * sigma_of(spec, Jm);
        }
    }
    throw validation_error("structure_condition: unknown method");
}

real pi_diag(const BandedOperator& PiOrInv, int k, int n) {
    const int j = n, i = n + (k < 0 ? -k : k);
    return PiOrInv.entry(i, j);
}

std::pair<real, real> shift_structure_residual(const FamilySpec& spec, const Pipeline& pipe,
                                               const Operators& ops, const BandedOperator& Psi,
                                               const BandedOperator& PsiCond, const real& z) {
    const PearsonPair pp = make_pearson(spec);
    const int M = spec.M(), Np1 = FamilySpec::N + 1;
    const int n_max = pipe.K_int - 2;
    const auto Pm = eval_polynomials(pipe.data, z - 1, n_max);
    const auto P0 = eval_polynomials(pipe.data, z, n_max);
    const auto Pp = eval_polynomials(pipe.data, z + 1, n_max);

    const int rows = n_max - (std::max)(M, Np1);
    real r_minus = 0, r_plus = 0;
    const real th = pp.theta(z), sg = pp.sigma(z);
    for (int n = 0; n < rows; ++n) {
        // theta(z) P_n(z-1) = sum_j Psi_{n,j} / H_j P_j(z); the worst entry is
        // the rightmost column, so its exactness implies the whole row's
        if (Psi.exact(n, n + Np1)) {
            real rhs = 0, mag = 0;
            for (int j = (std::max)(0, n - M); j <= n + Np1; ++j) {
                rhs += Psi.entry(n, j) / pipe.data.H[j] * P0[j];
                mag += PsiCond.entry(n, j) / pipe.data.H[j] * abs(P0[j]);
            }
            const real lhs = th * Pm[n];
            r_minus = (std::max)(r_minus,
                                 abs(lhs - rhs) / (std::max)({real(1), abs(lhs), mag}));
        }
        // sigma(z) P_n(z+1) = sum_j (Psi^T)_{n,j} / H_j P_j(z)
        if (Psi.exact(n + M, n)) {
            real rhs2 = 0, mag2 = 0;
            for (int j = (std::max)(0, n - Np1); j <= n + M; ++j) {
                rhs2 += Psi.entry(j, n) / pipe.data.H[j] * P0[j];
                mag2 += PsiCond.entry(j, n) / pipe.data.H[j] * abs(P0[j]);
            }
            const real lhs2 = sg * Pp[n];
            r_plus = (std::max)(r_plus,
                                abs(lhs2 - rhs2) / (std::max)({real(1), abs(lhs2), mag2}));
        }
    }
    (void)ops;
    return {r_minus, r_plus};
}

real compatibility_residual(const Operators& ops, const BandedOperator& Psi) {
    const BandedOperator R = Psi * ops.Hinv;
    const BandedOperator D = R * ops.J - ops.J * R - R;
    const real scale = R.max_abs();
    real m = 0;
    const int n = D.size;
    for (const auto& [d, v] : D.diags)
        for (int i = (std::max)(0, -d); i < n && i + d < n; ++i)
            if (D.exact(i, i + d)) m = (std::max)(m, abs(v[i]));
    if (scale == 0) throw buffer_exhausted("compatibility_residual: empty overlap");
    return m / scale;
}

}  // namespace lfortho
