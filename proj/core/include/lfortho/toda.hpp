#pragma once

#include <functional>

#include "lfortho/banded.hpp"
#include "lfortho/family.hpp"
#include "lfortho/hankel.hpp"
#include "lfortho/precision.hpp"
#include "lfortho/report.hpp"

namespace lfortho {

struct EtaDerivativeEstimate {
    real value;
    real error_estimate;
    real step_used;
};

// Richardson-extrapolated centered difference of f(eta * e^t) at t = 0,
// i.e. the eta-scaling derivative  vartheta = eta d/d eta.
EtaDerivativeEstimate theta_eta(const std::function<real(const real&)>& f, const real& eta,
                                const PrecisionContext& ctx);

// Five pipelines at eta * e^{k h}, k in {-2,-1,0,1,2}, shared by every
// finite-difference identity so the expensive Cholesky runs are amortised.
struct EtaSweep {
    real h;
    Pipeline center, ph, mh, p2h, m2h;

    using Getter = std::function<real(const Pipeline&)>;
    EtaDerivativeEstimate deriv(const Getter& q) const;    // vartheta q
    EtaDerivativeEstimate deriv2(const Getter& q) const;   // vartheta^2 q
    real deriv_plain(const Getter& q) const;               // centered, no extrapolation
};

EtaSweep make_eta_sweep(const FamilySpec& spec, int K, const PrecisionContext& ctx);
// Same but with an explicit step (used by the convergence-order check).
EtaSweep make_eta_sweep(const FamilySpec& spec, int K, const PrecisionContext& ctx, const real& h);

// First-order Toda trio plus the second-order forms, recorded per n.
void toda_residuals(const FamilySpec& spec, const EtaSweep& sweep, long n, LFReport& report);

// vartheta P_n(z) = -gamma_n P_{n-1}(z)
void sato_wilson_residual(const FamilySpec& spec, const EtaSweep& sweep, long n, const real& z,
                          LFReport& report);

// vartheta(Psi H^{-1}) = [Phi, Psi H^{-1}],  Phi = -Lambda^T gamma
void gauge_residual(const FamilySpec& spec, const EtaSweep& sweep, LFReport& report);

// res(h)/res(h/2) for the plain centered difference of beta_n; ~4 when the
// FD machinery converges at second order.
real fd_convergence_order(const FamilySpec& spec, int K, long n, const PrecisionContext& ctx);

}  // namespace lfortho
