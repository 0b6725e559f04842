#include "lfortho/laguerre_freud.hpp"

#include <cmath>
#include <deque>

#include "lfortho/corrected.hpp"

namespace lfortho {

namespace {

real psi_entry(const BandedOperator& Psi, int k, long n) {
    const int i = static_cast<int>(n);
    return k >= 0 ? Psi.entry(i, i + k) : Psi.entry(i - k, i);
}

void check_den(const real& d, const char* name, const PrecisionContext& ctx) {
    if (abs(d) < ctx.eps_pivot) throw denominator_underflow(name);
}

// Shared view over the Cholesky ground truth.
struct View {
    real b1, b2, eta;
    const std::vector<real>& beta;
    const std::vector<real>& gam;
    const std::vector<real>& H;
    const std::vector<real>& p1;

    View(const FamilySpec& spec, const Pipeline& pipe)
        : b1(spec.b[0]),
          b2(spec.b[1]),
          eta(spec.eta),
          beta(pipe.data.beta),
          gam(pipe.data.gamma),
          H(pipe.data.H),
          p1(pipe.data.p1) {}
};

// psi^{(1)}_n / H_{n+1}; the theta-route expression is family independent.
real m1_generic(const View& v, long n) {
    return real(n) * (n - 1) / 2 + v.gam[n] + v.gam[n + 1] + v.gam[n + 2] +
           (v.beta[n + 1] + v.b1) * (v.beta[n + 1] + v.b2) +
           (v.beta[n] - n) * (v.beta[n] + v.beta[n + 1] + v.b1 + v.b2) - v.beta[n - 1] +
           v.p1[n - 1];
}

// psi^{(2)}_n / H_{n+2}
real m2_generic(const View& v, long n) {
    return v.beta[n] + v.beta[n + 1] + v.beta[n + 2] + v.b1 + v.b2 - n;
}

// Superdiagonal of [Psi H^{-1}, J] = Psi H^{-1} written through the family
// m-functions m0 = psi^{(0)}_n / H_n: the derived identity replacing the
// printed superdiagonal/compatibility displays.
real m_identity_residual(const View& v, long n, const real& m0_n, const real& m0_np1) {
    const real m1 = m1_generic(v, n);
    const real lhs = m0_n + m1 * v.beta[n + 1] + m2_generic(v, n) * v.gam[n + 2];
    const real m2m = v.beta[n - 1] + v.beta[n] + v.beta[n + 1] + v.b1 + v.b2 - (n - 1);
    const real rhs = v.gam[n] * m2m + v.beta[n] * m1 + m0_np1 + m1;
    return rel_diff(lhs, rhs);
}

}  // namespace

// ---------------------------------------------------------------- 1F2

namespace {

// the bracket X(n) appearing in the printed p1 formula
real f12_X(const View& v, const real& a1, long n) {
    return (v.gam[n + 1] *
                (v.gam[n] + v.gam[n + 1] + v.gam[n + 2] +
                 (v.beta[n + 1] + v.b1) * (v.beta[n + 1] + v.b2) +
                 v.beta[n] * (v.beta[n + 1] + v.beta[n] + v.b1 + v.b2) -
                 n * (2 * v.beta[n] + v.beta[n + 1] + v.b1 + v.b2 - real(n)) - v.eta) -
            v.eta * (n + 1) * (v.beta[n] + a1)) /
           (v.eta + v.gam[n + 1]);
}

real f12_pi2_formula(const View& v, long n, bool inner2n, const real& tail) {
    return (v.gam[n + 1] *
                (v.gam[n] + v.gam[n + 1] + v.gam[n + 2] +
                 (v.beta[n + 1] + v.b1) * (v.beta[n + 1] + v.b2) +
                 v.beta[n] * (v.beta[n + 1] + v.beta[n] + v.b1 + v.b2) -
                 n * (2 * v.beta[n] + v.beta[n + 1] + v.b1 + v.b2 -
                      real(inner2n ? 2 * n : n)) -
                 v.eta) -
            v.eta * (n + 1) * tail) /
           (v.eta + v.gam[n + 1]);
}

}  // namespace

void lf12_identities(const FamilySpec& spec, const Pipeline& pipe, const Operators& ops, long n,
                     const PrecisionContext& ctx, LFReport& report) {
    const View v(spec, pipe);
    const real a1 = spec.a[0];
    const real eps = ctx.eps_verify;
    const BandedOperator Psi = structure_matrix(spec, ops, PsiMethod::sigmaJ_H_PiT);
    auto add = [&](const char* id, const real& x, const real& y) {
        report.add("lf", id, n, rel_diff(x, y), eps);
    };

    add("f12.psi0", psi_entry(Psi, 0, n), v.eta * v.H[n] * (n + v.beta[n] + a1));
    const real pi2v = n >= 1 ? pi_diag(ops.Pi, 2, static_cast<int>(n) - 1) : real(0);
    add("f12.psi1", psi_entry(Psi, 1, n),
        v.eta * (v.H[n + 1] + v.H[n] * (pi2v + (n + 1) * (v.beta[n] + a1))));
    add("f12.psi2", psi_entry(Psi, 2, n),
        v.H[n + 2] * (v.beta[n] + v.beta[n + 1] + v.beta[n + 2] + v.b1 + v.b2 - real(n)));
    add("f12.psim1", psi_entry(Psi, -1, n), v.eta * v.H[n + 1]);
    add("f12.psi3", psi_entry(Psi, 3, n), v.H[n + 3]);

    if (n < 1) return;

    add("f12.p1.printed", real(n) * (n + 1) / 2 - n * v.beta[n] - f12_X(v, a1, n), v.p1[n]);
    add("f12.pi2.printed", f12_pi2_formula(v, n, true, a1 + a1),
        pi_diag(ops.Pi, 2, static_cast<int>(n) - 1));
    add("f12.pi2.corrected", f12_pi2_formula(v, n, false, v.beta[n] + a1),
        pi_diag(ops.Pi, 2, static_cast<int>(n) - 1));

    // printed superdiagonal identity
    {
        const auto& beta = v.beta;
        const auto& gam = v.gam;
        const real b1 = v.b1, b2 = v.b2;
        const real lhs = v.eta * (beta[n] + beta[n + 1] - 1);
        const real rhs =
            gam[n + 2] * (n - 2 * beta[n + 1] - beta[n + 2] + b1 + b2 + 1) +
            gam[n + 1] * (beta[n] + 1 - beta[n + 1]) +
            gam[n] * (beta[n - 1] + 2 * beta[n] + b1 + b2 - real(n) + 2) +
            beta[n] * beta[n] * beta[n] - beta[n + 1] * beta[n + 1] * beta[n + 1] +
            beta[n + 1] * beta[n + 1] + beta[n] * beta[n] + beta[n] * beta[n + 1] +
            (b1 + b2) * (beta[n] * beta[n] - beta[n + 1] * beta[n + 1] + beta[n + 1] + beta[n]) -
            n * (2 * beta[n] * beta[n] - beta[n] * beta[n + 1] - beta[n + 1] * beta[n + 1] +
                 3 * beta[n]) +
            (beta[n] + 1 - beta[n + 1]) *
                (real(n) * (n + 1) - n * (b1 + b2) + b1 * b2 -
                 pi_diag(ops.Pi, 2, static_cast<int>(n) - 1));
        report.add("lf", "f12.superdiag.printed", n, rel_diff(lhs, rhs), eps);
    }

    // derived m-identity replacing it
    {
        const real m0n = v.eta * (n + v.beta[n] + a1);
        const real m0n1 = v.eta * (n + 1 + v.beta[n + 1] + a1);
        report.add("lf", "f12.superdiag.corrected", n, m_identity_residual(v, n, m0n, m0n1),
                   eps);
    }

    if (n < 2) return;

    // printed Laguerre-Freud equations, checked against the Cholesky truth
    LFWindow w{v.beta[n - 1], v.beta[n], v.beta[n + 1],
               v.gam[n - 1],  v.gam[n],  v.gam[n + 1],
               v.p1[n - 1]};
    try {
        auto [g2, b2next] = lf12_step(spec, n, w, ctx);
        add("f12.lfgamma.printed", g2, v.gam[n + 2]);
        add("f12.lfbeta.corrected", b2next, v.beta[n + 2]);
    } catch (const denominator_underflow&) {
        // leave unrecorded at this n
    }
    {
        const auto& beta = v.beta;
        const auto& gam = v.gam;
        const real b1 = v.b1, b2 = v.b2;
        const real bn2 =
            n - 2 * beta[n + 1] + b1 + b2 + 1 +
            (1 / gam[n + 2]) *
                (v.eta * (1 - beta[n] - beta[n + 1]) +
                 gam[n + 1] * (beta[n] + 1 - beta[n + 1]) +
                 gam[n] * (beta[n - 1] + 2 * beta[n] + b1 + b2 - real(n) + 2) +
                 beta[n] * beta[n] * beta[n] - beta[n + 1] * beta[n + 1] * beta[n + 1] +
                 beta[n + 1] * beta[n + 1] + beta[n] * beta[n] + beta[n] * beta[n + 1] +
                 (b1 + b2) *
                     (beta[n] * beta[n] - beta[n + 1] * beta[n + 1] + beta[n + 1] + beta[n]) -
                 n * (2 * beta[n] * beta[n] - beta[n] * beta[n + 1] -
                      beta[n + 1] * beta[n + 1] + 3 * beta[n]) +
                 (beta[n] - beta[n + 1] + 1) *
                     (real(n) * (n + 1) - n * (b1 + b2) + b1 * b2 - f12_X(v, a1, n)));
        add("f12.lfbeta.printed", bn2, v.beta[n + 2]);
    }
}

std::pair<real, real> lf12_step(const FamilySpec& spec, long n, const LFWindow& w,
                                const PrecisionContext& ctx) {
    const real b1 = spec.b[0], b2 = spec.b[1], a1 = spec.a[0], eta = spec.eta;
    check_den(w.gamma_p1, "gamma_{n+1}", ctx);
    check_den(eta + w.gamma_0, "eta + gamma_n", ctx);

    // printed gamma equation (it holds as displayed)
    const real g2 =
        (eta + w.gamma_p1) / w.gamma_p1 * n * (w.beta_m1 - w.beta_0 + 1) -
        (w.gamma_0 + w.gamma_p1 + (w.beta_p1 + b1) * (w.beta_p1 + b2) +
         w.beta_0 * (w.beta_p1 + w.beta_0 + b1 + b2) -
         n * (2 * w.beta_0 + w.beta_p1 + b1 + b2 - real(n)) - eta) +
        eta / w.gamma_p1 * (n + 1) * (w.beta_0 + a1) +
        (eta + w.gamma_p1) / ((eta + w.gamma_0) * w.gamma_p1) *
            (w.gamma_0 * (w.gamma_m1 + w.gamma_0 + w.gamma_p1 +
                          (w.beta_0 + b1) * (w.beta_0 + b2) +
                          w.beta_m1 * (w.beta_0 + w.beta_m1 + b1 + b2) -
                          (n - 1) * (2 * w.beta_m1 + w.beta_0 + b1 + b2 - real(n) + 1) - eta) -
             eta * n * (w.beta_m1 + a1));
    check_den(g2, "gamma_{n+2}", ctx);

    // beta step derived from the m-identity (the printed one fails)
    const real pim2 = real(n) * (n - 1) / 2 + (n - 1) * w.beta_m1 + w.p1_m1;
    const real m1 = w.gamma_0 + w.gamma_p1 + g2 + (w.beta_p1 + b1) * (w.beta_p1 + b2) +
                    w.beta_0 * (w.beta_p1 + w.beta_0 + b1 + b2) -
                    n * (w.beta_m1 + w.beta_0 + w.beta_p1 + b1 + b2) + pim2;
    const real m0n = eta * (n + w.beta_0 + a1);
    const real m0n1 = eta * (n + 1 + w.beta_p1 + a1);
    const real rhs = m0n + m1 * w.beta_p1 -
                     w.gamma_0 * (w.beta_m1 + w.beta_0 + w.beta_p1 + b1 + b2 - real(n) + 1) -
                     w.beta_0 * m1 - m0n1 - m1;
    const real bp2 = -rhs / g2 - (w.beta_0 + w.beta_p1 + b1 + b2 - real(n));
    return {g2, bp2};
}

// ---------------------------------------------------------------- 2F2

F22Helpers lf22_helpers(const FamilySpec& spec, long n, const F22Window& w,
                        const PrecisionContext& ctx) {
    const real a1 = spec.a[0], a2 = spec.a[1], b1 = spec.b[0], b2 = spec.b[1], eta = spec.eta;
    const real bm1 = w.beta_m1, b0 = w.beta_0, bp1 = w.beta_p1, bp2 = w.beta_p2;
    const real gm1 = w.gamma_m1, g0 = w.gamma_0, gp1 = w.gamma_p1, gp2 = w.gamma_p2;
    const real rn(n);
    F22Helpers h;

    h.A = -eta * eta *
              (rn * (n + 1) / 2 + bm1 + b0 + gp2 + gp1 + (n + 1) * (bp1 + a1 + a2) +
               (bp1 + a1) * (bp1 + a2)) +
          eta * (4 * g0 + gp1 * (a1 + a2 - b1 - b2 + 2 * (rn + 1) + bm1 - bp1) +
                 gp2 * (rn - 1 - 2 * bp1 - bp2 - b1 - b2) +
                 rn * (n + 1) / 2 * (a1 + a2 - b1 - b2 - bp1) +
                 (bp1 + b1 + b2 + a1 + a2 - rn * rn) * (b0 + bm1) +
                 2 * (b0 * b0 + bm1 * bm1) - (bp1 + b1) * (bp1 + b2) * (bp1 - rn - 1)) -
          gp1 * (rn * (n - 1) / 2 + gp2 + gp1 + g0 + bm1 + (bp1 + b1) * (bp1 + b2) +
                 (b0 - rn) * (bp1 + b0 + b1 + b2));

    h.A_proof =
        -eta * eta *
            (rn * (n + 1) / 2 + bm1 + b0 + gp2 + gp1 + (n + 1) * (bp1 + a1 + a2) +
             (bp1 + a1) * (bp1 + a2)) +
        eta * (gp1 * (a1 + a2 - b1 - b2 + 2 * (rn + 1) + bm1 - bp1) +
               gp2 * (rn - 1 - 2 * bp1 - bp2 - b1 - b2) + rn * (bm1 + b0) +
               (a1 + a2) * bm1 + 4 * g0 + 2 * (b0 * b0 + bm1 * bm1) +
               b0 * (bp1 + a1 + a2 + b1 + b2) + (rn + 1) * a1 * a2 +
               bm1 * (bp1 + b1 + b2) - (bp1 + b1) * (bp1 + b2) * (bp1 - rn - 1) +
               rn * (n + 1) / 2 * (a1 + a2 - b1 - b2 - bp1) - rn * rn * (b0 + bm1)) -
        gp1 * (rn * (n - 1) / 2 + gp2 + gp1 + g0 + bm1 - rn * (bp1 + b0 + b1 + b2) +
               (bp1 + b1) * (bp1 + b2) + b0 * (bp1 + b0 + b1 + b2));

    h.B = eta * eta + eta * (2 * bm1 + 2 * b0 + bp1 + a1 + a2 + b1 + b2 + 2 * rn) + gp1;

    h.C = eta * ((rn + b0 + bp1 + a1 + a2) * (b0 - bp1 - 1) - b0 - bp1 + g0) -
          rn * (bp1 - b0 - 1) * (bp1 + b0 + bm1) - b0 * (bp1 + b0 + b1 + b2) -
          g0 * (bm1 + 2 * b0 + b1 + b2 - rn + 2) + gp2 * (2 * bp1 + b1 + b2 - rn - 1);

    h.D = rn * (n - 1) / 2 + bp1 * bp1 + (bp1 - rn) * (b1 + b2) + b1 * b2 + (rn - 1) * bm1 +
          gp1;

    h.E = -eta * (rn * (n - 1) / 2 + bm1 + rn * (b0 + a1 + a2) + (b0 + a1) * (b0 + a2) -
                  g0 * (rn - 2 + bm1 + b0 + a1 + a2) + gp1 * (rn + 1 + b0 + bp1 + a1 + a2)) +
          gp1 * (rn * (n - 1) / 2 + gp1 - bm1 + (b0 - rn) * (bp1 + b0 + b1 + b2) +
                 (bp1 + b1) * (bp1 + b2)) -
          g0 * ((rn - 1) * (n - 2) / 2 + g0 + gm1 + (b0 + b1) * (b0 + b2) +
                (bm1 - rn + 1) * (b0 + bm1 + b1 + b2));

    h.Ahat = -eta * eta *
                 (rn * (n + 1) / 2 + bm1 + b0 + gp1 + (n + 1) * (bp1 + a1 + a2) +
                  (bp1 + a1) * (bp1 + a2)) +
             eta * (4 * g0 + gp1 * (a1 + a2 - b1 - b2 + 2 * (rn + 1) + bm1 - bp1) +
                    rn * (n + 1) / 2 * (a1 + a2 - b1 - b2 - bp1) +
                    (bp1 + b1 + b2 + a1 + a2 - rn * rn) * (b0 + bm1) +
                    2 * (b0 * b0 + bm1 * bm1) - (bp1 + b1) * (bp1 + b2) * (bp1 - rn - 1)) -
             gp1 * (rn * (n - 1) / 2 + gp1 + g0 + bm1 + (bp1 + b1) * (bp1 + b2) +
                    (b0 - rn) * (bp1 + b0 + b1 + b2));

    const real dgamma = g0 - gp1 - eta;
    const real dbeta = 1 + b0 - bp1;
    check_den(dgamma, "gamma_n - gamma_{n+1} - eta", ctx);
    check_den(dbeta, "1 + beta_n - beta_{n+1}", ctx);

    h.F = -h.E / dgamma + h.C / dbeta - h.D +
          (h.Ahat - h.E / dgamma * h.B) / (eta * dbeta);
    h.G = gp1 / dgamma + eta / dbeta +
          (eta * eta - eta * (rn - 1 - 2 * bp1 - b1 - b2) + gp1 + gp1 * h.B / dgamma) /
              (eta * dbeta);
    return h;
}

std::array<real, 3> lf22_p1(const FamilySpec& spec, const Pipeline& pipe, long n,
                            const PrecisionContext& ctx) {
    const View v(spec, pipe);
    F22Window w{v.beta[n - 1], v.beta[n], v.beta[n + 1], v.beta[n + 2],
                v.gam[n - 1],  v.gam[n],  v.gam[n + 1],  v.gam[n + 2]};
    const F22Helpers h = lf22_helpers(spec, n, w, ctx);
    const real via_pn = h.A / h.B;
    const real via_c41 =
        (h.C + v.gam[n + 2] * (v.beta[n + 2] - v.eta)) / (1 + v.beta[n] - v.beta[n + 1]) - h.D;
    const real via_c42 =
        (h.E + v.gam[n + 1] * v.gam[n + 2]) / (v.gam[n] - v.gam[n + 1] - v.eta);
    return {via_pn, via_c41, via_c42};
}

namespace {

// psi^{(0)}_n / (eta H_n) minus the p1 part is shared between the theorem and
// the step scheme.
real f22_m0(const FamilySpec& spec, long n, const real& bm1, const real& b0, const real& g0,
            const real& gp1, const real& p1m1) {
    const real a1 = spec.a[0], a2 = spec.a[1];
    return spec.eta * (real(n) * (n - 1) / 2 + bm1 + n * (b0 + a1 + a2) + g0 + gp1 +
                       (b0 + a1) * (b0 + a2) - p1m1);
}

}  // namespace

void lf22_identities(const FamilySpec& spec, const Pipeline& pipe, const Operators& ops, long n,
                     const PrecisionContext& ctx, LFReport& report) {
    const View v(spec, pipe);
    const real a1 = spec.a[0], a2 = spec.a[1];
    const real eps = ctx.eps_verify;
    const BandedOperator Psi = structure_matrix(spec, ops, PsiMethod::sigmaJ_H_PiT);
    auto add = [&](const char* id, const real& x, const real& y) {
        report.add("lf", id, n, rel_diff(x, y), eps);
    };

    add("f22.psi2", psi_entry(Psi, 2, n),
        v.H[n + 2] * (v.beta[n] + v.beta[n + 1] + v.beta[n + 2] + v.b1 + v.b2 - real(n)));
    add("f22.psim1", psi_entry(Psi, -1, n),
        v.eta * (v.beta[n] + v.beta[n + 1] + a1 + a2 + n) * v.H[n + 1]);
    add("f22.psim2", psi_entry(Psi, -2, n), v.eta * v.H[n + 2]);
    add("f22.psi3", psi_entry(Psi, 3, n), v.H[n + 3]);

    if (n < 1) return;

    add("f22.psi0", psi_entry(Psi, 0, n),
        f22_m0(spec, n, v.beta[n - 1], v.beta[n], v.gam[n], v.gam[n + 1], v.p1[n - 1]) *
            v.H[n]);
    add("f22.psi1", psi_entry(Psi, 1, n), m1_generic(v, n) * v.H[n + 1]);

    // in-proof pi^{[+-3]}_{n-2} conversions: printed /3 vs corrected /6
    if (n >= 2) {
        const auto& p2 = pipe.data.p2;
        for (int lead_den : {3, 6}) {
            for (int s : {+1, -1}) {
                const real sign(s);
                const real val =
                    sign * real(n) * (n + 1) * (n - 1) / lead_den -
                    real(n) * (n - 1) / 2 * (v.beta[n - 1] + v.beta[n]) +
                    sign * (n - 1) * (v.beta[n] * v.beta[n - 1] - v.gam[n]) +
                    v.p1[n - 1] * (sign * v.beta[n] - sign * v.beta[n - 1] - real(n)) +
                    sign * v.p1[n - 1] * v.p1[n - 1] - sign * 2 * p2[n];
                const real truth = s > 0 ? pi_diag(ops.Pi, 3, static_cast<int>(n) - 2)
                                         : pi_diag(ops.PiInv, 3, static_cast<int>(n) - 2);
                std::string id = std::string("f22.pipm3.") +
                                 (lead_den == 3 ? "printed" : "corrected") +
                                 (s > 0 ? ".plus" : ".minus");
                report.add("lf", id, n, rel_diff(val, truth), eps);
            }
        }
    }

    auto [via_pn, via_c41, via_c42] = lf22_p1(spec, pipe, n, ctx);
    add("f22.pn.printed", via_pn, v.p1[n - 1]);
    add("f22.compat41.printed", via_c41, v.p1[n - 1]);
    add("f22.compat42.printed", via_c42, v.p1[n - 1]);

    {
        F22Window w{v.beta[n - 1], v.beta[n], v.beta[n + 1], v.beta[n + 2],
                    v.gam[n - 1],  v.gam[n],  v.gam[n + 1],  v.gam[n + 2]};
        const F22Helpers h = lf22_helpers(spec, n, w, ctx);
        // A_proof is the in-proof rearrangement of eq. (pn)
        add("f22.pn.proof", h.A_proof / h.B, v.p1[n - 1]);

        const real rn(n);
        const real tildeA =
            h.Ahat - (v.eta * v.eta - v.eta * (rn - 1 - 2 * v.beta[n + 1] - v.b1 - v.b2) +
                      v.gam[n + 1]) *
                         v.gam[n + 2];
        const real lfbeta_printed =
            tildeA / (v.eta * v.gam[n + 2]) -
            (h.E + v.gam[n + 1] * v.gam[n + 2]) / (v.gam[n] - v.gam[n + 1] - v.eta) * h.B /
                (v.eta * v.gam[n + 2]);
        add("f22.lfbeta.printed", lfbeta_printed, v.beta[n + 2]);
        add("f22.lfgamma.printed", h.F / h.G, v.gam[n + 2]);
    }

    // corrected p1 closed form
    add("f22.pn.corrected",
        corrected::f22_p1_num(real(n), a1, a2, v.b1, v.b2, v.eta, v.beta[n - 1], v.beta[n],
                              v.beta[n + 1], v.beta[n + 2], v.gam[n], v.gam[n + 1],
                              v.gam[n + 2]) /
            corrected::f22_p1_den(real(n), a1, a2, v.b1, v.b2, v.eta, v.beta[n - 1], v.beta[n],
                                  v.beta[n + 1], v.beta[n + 2], v.gam[n], v.gam[n + 1],
                                  v.gam[n + 2]),
        v.p1[n - 1]);

    // superdiagonal m-identity (the corrected compat_4_1)
    {
        const real m0n = f22_m0(spec, n, v.beta[n - 1], v.beta[n], v.gam[n], v.gam[n + 1],
                                v.p1[n - 1]);
        const real m0n1 = f22_m0(spec, n + 1, v.beta[n], v.beta[n + 1], v.gam[n + 1],
                                 v.gam[n + 2], v.p1[n]);
        report.add("lf", "f22.compat41.corrected", n, m_identity_residual(v, n, m0n, m0n1),
                   eps);
    }

    // corrected step equations against the Cholesky truth
    if (n >= 1) {
        LFWindow w{v.beta[n - 1], v.beta[n], v.beta[n + 1],
                   v.gam[n - 1],  v.gam[n],  v.gam[n + 1],
                   v.p1[n - 1]};
        try {
            auto [g2, bp2] = lf22_step(spec, n, w, ctx);
            add("f22.lfgamma.corrected", g2, v.gam[n + 2]);
            add("f22.lfbeta.corrected", bp2, v.beta[n + 2]);
        } catch (const denominator_underflow&) {
        }
    }
}

std::pair<real, real> lf22_step(const FamilySpec& spec, long n, const LFWindow& w,
                                const PrecisionContext& ctx) {
    const real b1 = spec.b[0], b2 = spec.b[1], eta = spec.eta;
    check_den(w.gamma_p1, "gamma_{n+1}", ctx);

    // gamma_{n+2} by inverting compat (4.2), which holds as displayed
    F22Window fw{w.beta_m1, w.beta_0, w.beta_p1, real(0),
                 w.gamma_m1, w.gamma_0, w.gamma_p1, real(0)};
    const F22Helpers h = lf22_helpers(spec, n, fw, ctx);  // only E is used below
    const real g2 = (w.p1_m1 * (w.gamma_0 - w.gamma_p1 - eta) - h.E) / w.gamma_p1;
    check_den(g2, "gamma_{n+2}", ctx);

    // beta_{n+2} from the m-identity
    const real rn(n);
    const real p1n = w.p1_m1 - w.beta_m1;
    const real m0n = f22_m0(spec, n, w.beta_m1, w.beta_0, w.gamma_0, w.gamma_p1, w.p1_m1);
    const real m0n1 = f22_m0(spec, n + 1, w.beta_0, w.beta_p1, w.gamma_p1, g2, p1n);
    const real m1 = rn * (n - 1) / 2 + w.gamma_0 + w.gamma_p1 + g2 +
                    (w.beta_p1 + b1) * (w.beta_p1 + b2) +
                    (w.beta_0 - rn) * (w.beta_0 + w.beta_p1 + b1 + b2) - w.beta_m1 + w.p1_m1;
    const real m2m = w.beta_m1 + w.beta_0 + w.beta_p1 + b1 + b2 - (rn - 1);
    const real base = m0n + m1 * w.beta_p1 + (w.beta_0 + w.beta_p1 + b1 + b2 - rn) * g2 -
                      w.gamma_0 * m2m - w.beta_0 * m1 - m0n1 - m1;
    const real bp2 = -base / g2;
    return {g2, bp2};
}

// ---------------------------------------------------------------- 3F2

void lf32_identities(const FamilySpec& spec, const Pipeline& pipe, const Operators& ops, long n,
                     const PrecisionContext& ctx, LFReport& report) {
    const View v(spec, pipe);
    const real a1 = spec.a[0], a2 = spec.a[1], a3 = spec.a[2];
    const real sumA = a1 + a2 + a3;
    const real e2a = a1 * a2 + a2 * a3 + a3 * a1;
    const real b1 = v.b1, b2 = v.b2, eta = v.eta;
    const auto& beta = v.beta;
    const auto& gam = v.gam;
    const auto& H = v.H;
    const auto& p1 = v.p1;
    const real eps = ctx.eps_verify;
    const BandedOperator Psi = structure_matrix(spec, ops, PsiMethod::sigmaJ_H_PiT);
    auto add = [&](const std::string& id, const real& x, const real& y) {
        report.add("lf", id, n, rel_diff(x, y), eps);
    };
    auto pi = [&](int k, long m) {
        return pi_diag(k > 0 ? ops.Pi : ops.PiInv, k, static_cast<int>(m));
    };

    add("f32.psim3", psi_entry(Psi, -3, n), eta * H[n + 3]);
    add("f32.psi3", psi_entry(Psi, 3, n), H[n + 3]);
    add("f32.psi2", psi_entry(Psi, 2, n),
        H[n + 2] * (beta[n] + beta[n + 1] + beta[n + 2] + b1 + b2 - real(n)));
    // printed has beta_+ where beta_n is meant
    add("f32.psim2.printed", psi_entry(Psi, -2, n),
        eta * H[n + 2] * (beta[n + 1] + beta[n + 1] + beta[n + 2] + sumA + real(n)));
    add("f32.psim2.corrected", psi_entry(Psi, -2, n),
        eta * H[n + 2] * (beta[n] + beta[n + 1] + beta[n + 2] + sumA + real(n)));

    if (n < 2) return;

    add("f32.psim1", psi_entry(Psi, -1, n),
        eta * H[n + 1] *
            (pi(2, static_cast<int>(n) - 2) + n * (beta[n - 1] + beta[n] + beta[n + 1] + sumA) +
             gam[n] + gam[n + 1] + gam[n + 2] + beta[n + 1] * beta[n + 1] +
             beta[n] * beta[n] + beta[n + 1] * beta[n] + (beta[n] + beta[n + 1]) * sumA +
             e2a));

    // psi^{(1)} with the theorem's beta_N read as beta_n
    add("f32.psi1", psi_entry(Psi, 1, n), m1_generic(v, n) * H[n + 1]);

    if (n < 3) return;

    // sigma-route psi^{(0)}: printed omits a '+' and carries a wrong sign
    {
        const real common = beta[n] * (beta[n] + b1) * (beta[n] + b2) +
                            gam[n] * (beta[n - 1] + 2 * beta[n] + b1 + b2) +
                            gam[n + 1] * (beta[n + 1] + 2 * beta[n] + b1 + b2) +
                            pi(-2, static_cast<int>(n) - 2) *
                                (beta[n] + beta[n - 1] + beta[n - 2] + b1 + b2);
        const real printed =
            common -
            n * (beta[n] * beta[n] + beta[n - 1] * beta[n - 1] + beta[n] * beta[n - 1] +
                 (beta[n] + beta[n - 1]) * (b1 + b2) * b1 * b2 + gam[n - 1] + gam[n] +
                 gam[n + 1]) -
            pi(-3, static_cast<int>(n) - 3);
        const real fixed =
            common -
            n * (beta[n] * beta[n] + beta[n - 1] * beta[n - 1] + beta[n] * beta[n - 1] +
                 (beta[n] + beta[n - 1]) * (b1 + b2) + b1 * b2 + gam[n - 1] + gam[n] +
                 gam[n + 1]) +
            pi(-3, static_cast<int>(n) - 3);
        add("f32.psi0a.printed", psi_entry(Psi, 0, n), H[n] * printed);
        add("f32.psi0a.corrected", psi_entry(Psi, 0, n), H[n] * fixed);
    }
    // theta-route psi^{(0)} holds as displayed
    add("f32.psi0b", psi_entry(Psi, 0, n),
        eta * H[n] *
            (pi(3, static_cast<int>(n) - 3) +
             pi(2, static_cast<int>(n) - 2) * (beta[n - 2] + beta[n - 1] + beta[n] + sumA) +
             n * (beta[n - 1] * beta[n - 1] + beta[n] * beta[n] + beta[n] * beta[n - 1] + e2a +
                  (beta[n] + beta[n - 1]) * sumA + gam[n - 1] + gam[n] + gam[n + 1]) +
             gam[n] * (beta[n - 1] + 2 * beta[n] + sumA) +
             gam[n + 1] * (beta[n + 1] + 2 * beta[n] + sumA) +
             (beta[n] + a1) * (beta[n] + a2) * (beta[n] + a3)));

    // eq:pi2 with the two readings of C_n, then the corrected closed form
    {
        const real rn(n);
        const real A = rn * (n + 1) + n * (beta[n - 1] + beta[n] + beta[n + 1]) +
                       sumA * (rn + beta[n] + beta[n + 1]) + e2a + gam[n] + gam[n + 1] +
                       gam[n + 2] + beta[n] * beta[n] + beta[n + 1] * beta[n + 1] +
                       beta[n] * beta[n + 1];
        const real B =
            -n * (beta[n] * beta[n] - beta[n + 1] * beta[n + 1] + beta[n + 1] + beta[n] -
                  gam[n + 2]) +
            (beta[n + 1] - beta[n] - 1) * (n * (b1 + b2 - beta[n - 1]) - b1 * b2) -
            (b1 + b2) * (beta[n + 1] * beta[n + 1] - beta[n] * beta[n] - beta[n] -
                         beta[n + 1]) -
            gam[n + 2] * (beta[n + 2] + 2 * beta[n + 1] + b1 + b2 - 1) -
            gam[n + 1] * (beta[n + 1] - beta[n] - 1) +
            gam[n] * (beta[n - 1] + 2 * beta[n] + b1 + b2 - (rn - 2)) -
            beta[n + 1] * beta[n + 1] * beta[n + 1] + beta[n] * beta[n] * beta[n] +
            beta[n] * beta[n] + beta[n + 1] * beta[n + 1] + beta[n] * beta[n + 1];
        const real pim2_true = pi(-2, static_cast<int>(n) - 2);
        const real C1 = eta + beta[n + 1] - beta[n - 2];
        const real C2 = eta + beta[n + 1] - beta[n];
        if (abs(C1) > ctx.eps_pivot) add("f32.pi2.printed.C1", (eta * A + B) / C1, pim2_true);
        if (abs(C2) > ctx.eps_pivot) add("f32.pi2.printed.C2", (eta * A + B) / C2, pim2_true);

        const real p1c_num = corrected::f32_p1_num(rn, a1, a2, a3, b1, b2, eta, beta[n - 1],
                                                   beta[n], beta[n + 1], beta[n + 2], gam[n],
                                                   gam[n + 1], gam[n + 2]);
        const real p1c_den = corrected::f32_p1_den(rn, a1, a2, a3, b1, b2, eta, beta[n - 1],
                                                   beta[n], beta[n + 1], beta[n + 2], gam[n],
                                                   gam[n + 1], gam[n + 2]);
        const real p1c = p1c_num / p1c_den;
        add("f32.pi2.corrected",
            rn * (n - 1) / 2 + (n - 1) * beta[n - 1] + p1c, pim2_true);

        // p1_{n-2}: printed tail -(n-3)(n-4)/2 vs the proof-line conversion
        add("f32.p1nm2.printed",
            (eta * A + B) / C1 + beta[n - 2] - (n - 1) * beta[n - 1] -
                (rn - 3) * (rn - 4) / 2,
            p1[n - 2]);
        add("f32.p1nm2.corrected",
            pim2_true - rn * (n - 1) / 2 - (n - 1) * beta[n - 1] + beta[n - 2], p1[n - 2]);
    }

    // eq:pi3 under the two printed readings of G_n, then the corrected form
    {
        const real rn(n);
        const real D =
            beta[n] * beta[n] * beta[n] +
            (b1 + b2) * (beta[n] * beta[n] - beta[n - 1] - beta[n - 2] + rn * (n - 1) / 2) +
            b1 * b2 * beta[n] -
            n * (beta[n] * beta[n] - beta[n - 1] * beta[n - 2] + (b1 + b2) * beta[n] +
                 gam[n - 1]) -
            beta[n] * (beta[n - 1] + beta[n - 2]) - 2 * beta[n - 1] * beta[n - 2] -
            beta[n - 1] * beta[n - 1] - beta[n - 2] * beta[n - 2] +
            gam[n] * (b1 * b2 + (b1 + b2) * (beta[n] + beta[n - 1] - rn + 1) - rn +
                      beta[n - 1] + 2 * beta[n] + b1 + b2) -
            gam[n + 1] * ((b1 + b2) * (beta[n] + beta[n + 1] - rn) + b1 * b2 + rn -
                          (beta[n + 1] + 2 * beta[n] + b1 + b2));
        const real E = n * gam[n + 1] * (beta[n] + beta[n + 1]) +
                       gam[n + 1] * (beta[n - 1] + beta[n - 2]) - gam[n] * beta[n - 2] -
                       (n - 1) * gam[n] * (beta[n - 1] + beta[n]);
        const real F = gam[n + 1] * (rn * (n - 1) / 2 + gam[n + 1] + gam[n + 2] +
                                     beta[n] * beta[n] + beta[n + 1] * beta[n + 1] +
                                     beta[n] * beta[n + 1]) -
                       gam[n] * ((rn - 1) * (n - 2) / 2 + gam[n - 1] + gam[n] +
                                 beta[n] * beta[n] + beta[n - 1] * beta[n - 1] +
                                 beta[n] * beta[n - 1]);
        const real rest = beta[n] + rn + gam[n + 1] * beta[n + 1] - gam[n] * (beta[n - 1] - 1);
        const real G1 = (gam[n + 1] - gam[n]) * (e2a + sumA * rest);
        const real G2 = (gam[n + 1] - gam[n]) * e2a + sumA * rest;
        const real head = p1[n - 2] * ((eta + 1) * (gam[n] - gam[n + 1]) + beta[n] +
                                       beta[n - 1] + beta[n - 2] + b1 + b2);
        const real pim3_true = pi(-3, static_cast<int>(n) - 3);
        add("f32.pi3.printed.G1", head + D + (eta + 1) * E + (eta - 1) * F + eta * G1,
            pim3_true);
        add("f32.pi3.printed.G2", head + D + (eta + 1) * E + (eta - 1) * F + eta * G2,
            pim3_true);
        add("f32.pi3.corrected",
            corrected::f32_pi3(rn, a1, a2, a3, b1, b2, eta, beta[n - 2], beta[n - 1], beta[n],
                               beta[n + 1], gam[n - 1], gam[n], gam[n + 1], gam[n + 2],
                               p1[n - 1]),
            pim3_true);
    }
}

void compat_pi_residuals(const Pipeline& pipe, const Operators& ops, long n,
                         const PrecisionContext& ctx, LFReport& report) {
    if (n < 3) return;
    const auto& beta = pipe.data.beta;
    const auto& gam = pipe.data.gamma;
    const real eps = ctx.eps_verify;
    auto pi = [&](int k, long m) {
        return pi_diag(k > 0 ? ops.Pi : ops.PiInv, k, static_cast<int>(m));
    };
    auto add = [&](const char* id, const real& x, const real& y) {
        report.add("compat", id, n, rel_diff(x, y), eps);
    };
    const int ni = static_cast<int>(n);
    const real pim2 = pi(-2, ni - 2);

    add("f32.comp1", pi(2, ni - 1) - pi(2, ni - 2), real(n) * (1 - beta[n] + beta[n - 1]));
    add("f32.comp2", pi(3, ni - 2) - pi(3, ni - 3),
        pi(2, ni - 2) * (beta[n - 2] - beta[n] + 1) + n * gam[n - 1] - (n - 1) * gam[n]);
    add("f32.comp1bis", pim2 - pi(-2, ni - 1), real(n) * (beta[n - 1] - beta[n] - 1));
    add("f32.comp2bis.printed", pi(-3, ni - 2) - pi(-3, ni - 3),
        pim2 * (1 + beta[n] - beta[n - 2]) - (n - 1) * gam[n] + n * gam[n - 1]);
    add("f32.comp2bis.corrected", pi(-3, ni - 2) - pi(-3, ni - 3),
        -pim2 * (1 + beta[n] - beta[n - 2]) + (n - 1) * gam[n] - n * gam[n - 1]);
}

void lf32_compat(const FamilySpec& spec, const EtaSweep& sweep, long n, LFReport& report) {
    (void)spec;
    if (n < 3) return;
    const auto& d = sweep.center.data;
    const real eps = pow(real(2), -static_cast<int>(sweep.center.table.bits / 2));
    const int ni = static_cast<int>(n);
    auto pi_of = [ni](const Pipeline& p, int k, int m) {
        Operators ops = make_operators(p);
        return pi_diag(k > 0 ? ops.Pi : ops.PiInv, k, m);
    };
    // amortise operator construction across the five pipelines
    auto pim2_of = [&](const Pipeline& p) { return pi_of(p, -2, ni - 2); };
    auto pim3_of = [&](const Pipeline& p) { return pi_of(p, -3, ni - 3); };
    auto p1_of = [ni](const Pipeline& p) { return p.data.p1[ni - 1]; };

    auto rec = [&](const char* id, const EtaDerivativeEstimate& dv, const real& target) {
        real scale = 1;
        if (abs(dv.value) > scale) scale = abs(dv.value);
        if (abs(target) > scale) scale = abs(target);
        report.add("compat", id, n, abs(dv.value - target) / scale,
                   10 * dv.error_estimate / scale + eps);
    };

    const real pim2_c = [&] {
        Operators ops = make_operators(sweep.center);
        return pi_diag(ops.PiInv, -2, ni - 2);
    }();

    rec("f32.comp3", sweep.deriv(pim2_of), (n - 1) * d.gamma[n] - n * d.gamma[n - 1]);
    rec("f32.comp4.printed", sweep.deriv(pim3_of),
        (d.gamma[n] - d.gamma[n - 2]) * pim2_c +
            (n - 1) * (d.beta[n - 2] - d.beta[n - 1] - 1) * d.gamma[n]);
    rec("f32.comp4.corrected", sweep.deriv(pim3_of),
        (d.gamma[n - 2] - d.gamma[n]) * pim2_c +
            (n - 1) * (d.beta[n - 1] - d.beta[n - 2] + 1) * d.gamma[n]);
    rec("f32.thetap1", sweep.deriv(p1_of), -d.gamma[n - 1]);
}

// ---------------------------------------------------------------- forward runs

LFReport lf_forward_run(const FamilySpec& spec, int steps, const PrecisionContext& ctx) {
    if (spec.family == Family::F32)
        throw validation_error("no Laguerre-Freud step equations are available for 3F2");

    LFReport report;
    report.family = spec.family;

    const int K = steps + 6;
    const Pipeline pipe = run_pipeline(spec, K, ctx);
    const auto& d = pipe.data;

    // seeds from the Cholesky ground truth
    std::vector<real> beta{d.beta[0], d.beta[1], d.beta[2]};
    std::vector<real> gam{real(0), d.gamma[1], d.gamma[2]};
    std::vector<real> p1{real(0)};  // p1_0

    for (long n = 1; n <= steps; ++n) {
        LFWindow w{beta[n - 1], beta[n], beta[n + 1], gam[n - 1], gam[n], gam[n + 1],
                   p1[n - 1]};
        auto [g2, bp2] = spec.family == Family::F12 ? lf12_step(spec, n, w, ctx)
                                                    : lf22_step(spec, n, w, ctx);
        gam.push_back(g2);
        beta.push_back(bp2);
        p1.push_back(p1[n - 1] - beta[n - 1]);

        StepRecord rec;
        rec.n = n + 2;
        rec.beta_lf = bp2;
        rec.beta_chol = d.beta[n + 2];
        rec.gamma_lf = g2;
        rec.gamma_chol = d.gamma[n + 2];
        rec.dev_beta = rel_diff(bp2, d.beta[n + 2]);
        rec.dev_gamma = rel_diff(g2, d.gamma[n + 2]);
        report.steps.push_back(rec);
    }
    return report;
}

}  // namespace lfortho
