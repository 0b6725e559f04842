#pragma once

#include <array>
#include <utility>

#include "lfortho/banded.hpp"
#include "lfortho/family.hpp"
#include "lfortho/hankel.hpp"
#include "lfortho/precision.hpp"
#include "lfortho/report.hpp"
#include "lfortho/toda.hpp"

namespace lfortho {

// Step-equation input window around index n.
struct LFWindow {
    real beta_m1, beta_0, beta_p1;   // beta_{n-1}, beta_n, beta_{n+1}
    real gamma_m1, gamma_0, gamma_p1;  // gamma_{n-1}, gamma_n, gamma_{n+1}
    real p1_m1;                      // p1_{n-1}
};

// ---- 1F2 ----
void lf12_identities(const FamilySpec& spec, const Pipeline& pipe, const Operators& ops, long n,
                     const PrecisionContext& ctx, LFReport& report);
// (gamma_{n+2}, beta_{n+2}); printed gamma equation + derived beta step
std::pair<real, real> lf12_step(const FamilySpec& spec, long n, const LFWindow& w,
                                const PrecisionContext& ctx);

// ---- 2F2 ----
struct F22Window {
    real beta_m1, beta_0, beta_p1, beta_p2;
    real gamma_m1, gamma_0, gamma_p1, gamma_p2;
};
struct F22Helpers {
    real A, A_proof, Ahat, B, C, D, E, F, G;
};
F22Helpers lf22_helpers(const FamilySpec& spec, long n, const F22Window& w,
                        const PrecisionContext& ctx);
// p1_{n-1} via (printed A/B, compat_4_1 printed, compat_4_2)
std::array<real, 3> lf22_p1(const FamilySpec& spec, const Pipeline& pipe, long n,
                            const PrecisionContext& ctx);
void lf22_identities(const FamilySpec& spec, const Pipeline& pipe, const Operators& ops, long n,
                     const PrecisionContext& ctx, LFReport& report);
// (gamma_{n+2}, beta_{n+2}); corrected scheme (compat_4_2 inversion + superdiagonal identity)
std::pair<real, real> lf22_step(const FamilySpec& spec, long n, const LFWindow& w,
                                const PrecisionContext& ctx);

// ---- 3F2 ----
void lf32_identities(const FamilySpec& spec, const Pipeline& pipe, const Operators& ops, long n,
                     const PrecisionContext& ctx, LFReport& report);
// FD-based compatibilities comp3/comp4 and the theta_eta p1 remark
void lf32_compat(const FamilySpec& spec, const EtaSweep& sweep, long n, LFReport& report);

// Parameter-independent dressed-Pascal compatibilities (comp1/comp2 and bis forms);
// valid for every family.
void compat_pi_residuals(const Pipeline& pipe, const Operators& ops, long n,
                         const PrecisionContext& ctx, LFReport& report);

// Forward recursion seeded from Cholesky ground truth (F12/F22 only).
LFReport lf_forward_run(const FamilySpec& spec, int steps, const PrecisionContext& ctx);

}  // namespace lfortho
