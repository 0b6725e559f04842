#include "lfortho/toda.hpp"

#include <algorithm>
#include <cmath>

namespace lfortho {

namespace {

real step_for(const PrecisionContext& ctx) {
    return pow(real(2), -static_cast<int>(ctx.bits / 3));
}

FamilySpec scaled_eta(const FamilySpec& spec, const real& factor) {
    FamilySpec s = spec;
    s.eta *= factor;
    return s;
}

real fd_scale(const real& x, const real& y) {
    real s = 1;
    if (abs(x) > s) s = abs(x);
    if (abs(y) > s) s = abs(y);
    return s;
}

}  // namespace

EtaDerivativeEstimate theta_eta(const std::function<real(const real&)>& f, const real& eta,
                                const PrecisionContext& ctx) {
    const real h = step_for(ctx);
    const real fp = f(eta * exp(h)), fm = f(eta * exp(-h));
    const real fp2 = f(eta * exp(2 * h)), fm2 = f(eta * exp(-2 * h));
    const real Dh = (fp - fm) / (2 * h);
    const real D2h = (fp2 - fm2) / (4 * h);
    const real value = (4 * Dh - D2h) / 3;
    // rounding floor: eps-level noise in the samples divided by the step
    const real eps_m = pow(real(2), -static_cast<int>(ctx.bits));
    const real noise = eps_m * (abs(fp) + abs(fm) + abs(fp2) + abs(fm2)) / (2 * h);
    return {value, abs(value - Dh) + noise, h};
}

EtaDerivativeEstimate EtaSweep::deriv(const Getter& q) const {
    const real qp = q(ph), qm = q(mh), qp2 = q(p2h), qm2 = q(m2h);
    const real Dh = (qp - qm) / (2 * h);
    const real D2h = (qp2 - qm2) / (4 * h);
    const real value = (4 * Dh - D2h) / 3;
    const real eps_m = pow(real(2), -static_cast<int>(center.table.bits));
    const real noise = eps_m * (abs(qp) + abs(qm) + abs(qp2) + abs(qm2)) / (2 * h);
    return {value, abs(value - Dh) + noise, h};
}

EtaDerivativeEstimate EtaSweep::deriv2(const Getter& q) const {
    const real qc = q(center), qp = q(ph), qm = q(mh), qp2 = q(p2h), qm2 = q(m2h);
    const real five = (-qp2 + 16 * qp - 30 * qc + 16 * qm - qm2) / (12 * h * h);
    const real three = (qp - 2 * qc + qm) / (h * h);
    const real eps_m = pow(real(2), -static_cast<int>(center.table.bits));
    const real noise =
        eps_m * (abs(qp2) + 16 * abs(qp) + 30 * abs(qc) + 16 * abs(qm) + abs(qm2)) /
        (12 * h * h);
    return {five, abs(five - three) + noise, h};
}

real EtaSweep::deriv_plain(const Getter& q) const { return (q(ph) - q(mh)) / (2 * h); }

EtaSweep make_eta_sweep(const FamilySpec& spec, int K, const PrecisionContext& ctx,
                        const real& h) {
    EtaSweep sw;
    sw.h = h;
    sw.center = run_pipeline(spec, K, ctx);
    sw.ph = run_pipeline(scaled_eta(spec, exp(h)), K, ctx);
    sw.mh = run_pipeline(scaled_eta(spec, exp(-h)), K, ctx);
    sw.p2h = run_pipeline(scaled_eta(spec, exp(2 * h)), K, ctx);
    sw.m2h = run_pipeline(scaled_eta(spec, exp(-2 * h)), K, ctx);
    return sw;
}

EtaSweep make_eta_sweep(const FamilySpec& spec, int K, const PrecisionContext& ctx) {
    return make_eta_sweep(spec, K, ctx, step_for(ctx));
}

namespace {

void record_fd(LFReport& report, const std::string& identity, long n,
               const EtaDerivativeEstimate& d, const real& target, const real& eps) {
    const real scale = fd_scale(d.value, target);
    const real residual = abs(d.value - target) / scale;
    const real budget = 10 * d.error_estimate / scale + eps;
    report.add("toda", identity, n, residual, budget);
}

}  // namespace

void toda_residuals(const FamilySpec& spec, const EtaSweep& sweep, long n, LFReport& report) {
    (void)spec;
    const auto& d = sweep.center.data;
    const real eps = pow(real(2), -static_cast<int>(sweep.center.table.bits / 2));
    auto beta_n = [n](const Pipeline& p) { return p.data.beta[n]; };
    auto log_gamma_n = [n](const Pipeline& p) { return log(p.data.gamma[n]); };
    auto log_H_n = [n](const Pipeline& p) { return log(p.data.H[n]); };

    record_fd(report, "toda.beta", n, sweep.deriv(beta_n), d.gamma[n + 1] - d.gamma[n], eps);
    record_fd(report, "toda.logH", n, sweep.deriv(log_H_n), d.beta[n], eps);
    record_fd(report, "toda.qn", n, sweep.deriv2(log_H_n), d.gamma[n + 1] - d.gamma[n], eps);
    if (n >= 1) {
        record_fd(report, "toda.loggamma", n, sweep.deriv(log_gamma_n),
                  d.beta[n] - d.beta[n - 1], eps);
        auto dg = sweep.deriv2(log_gamma_n);
        dg.value += 2 * d.gamma[n];
        record_fd(report, "toda.gamma2", n, dg, d.gamma[n + 1] + d.gamma[n - 1], eps);
    }
}

void sato_wilson_residual(const FamilySpec& spec, const EtaSweep& sweep, long n, const real& z,
                          LFReport& report) {
    (void)spec;
    const auto& d = sweep.center.data;
    const real eps = pow(real(2), -static_cast<int>(sweep.center.table.bits / 2));
    auto Pn = [n, &z](const Pipeline& p) {
        return eval_polynomials(p.data, z, static_cast<int>(n))[n];
    };
    const std::vector<real> P = eval_polynomials(d, z, static_cast<int>(n));
    record_fd(report, "toda.sato_wilson", n, sweep.deriv(Pn), -d.gamma[n] * P[n - 1], eps);
}

void gauge_residual(const FamilySpec& spec, const EtaSweep& sweep, LFReport& report) {
    auto R_of = [](const Pipeline& p) {
        Operators ops = make_operators(p);
        // p.spec carries the swept eta, which enters sigma explicitly
        return structure_matrix(p.spec, ops, PsiMethod::sigmaJ_H_PiT) * ops.Hinv;
    };
    const BandedOperator Rc = R_of(sweep.center);
    const BandedOperator Rp = R_of(sweep.ph);
    const BandedOperator Rm = R_of(sweep.mh);
    const BandedOperator Rp2 = R_of(sweep.p2h);
    const BandedOperator Rm2 = R_of(sweep.m2h);

    // Phi = -Lambda^T gamma: the negated strictly lower part of J
    BandedOperator Phi(Rc.size);
    for (int i = 1; i < Phi.size; ++i) Phi.set(i, i - 1, -sweep.center.data.gamma[i]);
    const BandedOperator Comm = Phi * Rc - Rc * Phi;

    const real h = sweep.h;
    const real eps_m = pow(real(2), -static_cast<int>(sweep.center.table.bits));
    real max_res = 0, max_err = 0;
    const int lo = Rc.lower(), up = Rc.upper();
    for (int i = 0; i < Rc.size; ++i) {
        for (int j = std::max(0, i - lo - 1); j <= std::min(Rc.size - 1, i + up + 1); ++j) {
            if (!(Comm.exact(i, j) && Rc.exact(i, j) && Rp.exact(i, j) && Rm.exact(i, j) &&
                  Rp2.exact(i, j) && Rm2.exact(i, j)))
                continue;
            const real Dh = (Rp.entry(i, j) - Rm.entry(i, j)) / (2 * h);
            const real D2h = (Rp2.entry(i, j) - Rm2.entry(i, j)) / (4 * h);
            const real val = (4 * Dh - D2h) / 3;
            const real noise = eps_m *
                               (abs(Rp.entry(i, j)) + abs(Rm.entry(i, j)) +
                                abs(Rp2.entry(i, j)) + abs(Rm2.entry(i, j))) /
                               (2 * h);
            max_res = std::max(max_res, abs(val - Comm.entry(i, j)));
            max_err = std::max(max_err, abs(val - Dh) + noise);
        }
    }
    const real eps = pow(real(2), -static_cast<int>(sweep.center.table.bits / 2));
    const real scale = std::max(real(1), Rc.max_abs());
    report.add("toda", "toda.gauge", 0, max_res / scale, 10 * max_err / scale + eps);
}

real fd_convergence_order(const FamilySpec& spec, int K, long n, const PrecisionContext& ctx) {
    const real h_half = pow(real(2), -static_cast<int>(ctx.bits / 4)) / 2;
    const EtaSweep sw = make_eta_sweep(spec, K, ctx, h_half);
    const auto& d = sw.center.data;
    const real target = d.gamma[n + 1] - d.gamma[n];
    auto beta_n = [n](const Pipeline& p) { return p.data.beta[n]; };
    const real res_h = abs((beta_n(sw.p2h) - beta_n(sw.m2h)) / (4 * h_half) - target);
    const real res_h2 = abs((beta_n(sw.ph) - beta_n(sw.mh)) / (2 * h_half) - target);
    return res_h / res_h2;
}

}  // namespace lfortho
