#pragma once

#include <cstdint>

#include "lfortho/laguerre_freud.hpp"
#include "lfortho/toda.hpp"

namespace lfortho {

// Pearson residual, six-way Psi agreement, bandedness + extreme diagonals,
// eq:P_shift at z in {1/2, 1/3, 3}, Jacobi compatibility, Hankel-determinant
// cross-routes for H_k and p1_k.
void structure_suite(const FamilySpec& spec, const Pipeline& pipe, const Operators& ops,
                     const PrecisionContext& ctx, LFReport& report);

// Section-1 dressed-Pascal diagonal relations (eq:pis, eq:piss printed and
// corrected, eq:pis2).
void pascal_suite(const Pipeline& pipe, const Operators& ops, const PrecisionContext& ctx,
                  LFReport& report);

// Family closed-form identities across the valid interior of n.
void lf_suite(const FamilySpec& spec, const Pipeline& pipe, const Operators& ops,
              const PrecisionContext& ctx, LFReport& report);

// Forward Laguerre-Freud runs checked against Cholesky (F12/F22; no-op for F32).
void lfstep_suite(const FamilySpec& spec, const PrecisionContext& ctx, LFReport& report);

// Dressed-Pascal compatibilities; for F32 also the FD-based comp3/comp4.
void compat_suite(const FamilySpec& spec, const Pipeline& pipe, const Operators& ops,
                  const PrecisionContext& ctx, LFReport& report);

// Toda flows, Sato-Wilson, gauge equivalence, FD convergence order, moment shift.
void toda_suite(const FamilySpec& spec, const PrecisionContext& ctx, LFReport& report);

// comp1/comp2 parameter independence under randomized (a, b) draws.
void random_suite(const FamilySpec& spec, std::uint64_t seed, int draws,
                  const PrecisionContext& ctx, LFReport& report);

}  // namespace lfortho
