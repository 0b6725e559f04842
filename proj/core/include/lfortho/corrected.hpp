#pragma once

#include "lfortho/precision.hpp"

namespace lfortho::corrected {

// Corrected numerator/denominator of the 2F2 subleading-coefficient formula:
// p1_{n-1} = f22_p1_num / f22_p1_den.
real f22_p1_num(const real& n, const real& a1, const real& a2, const real& b1, const real& b2,
                const real& eta, const real& bm1, const real& b0, const real& bp1,
                const real& bp2, const real& g0, const real& gp1, const real& gp2);
real f22_p1_den(const real& n, const real& a1, const real& a2, const real& b1, const real& b2,
                const real& eta, const real& bm1, const real& b0, const real& bp1,
                const real& bp2, const real& g0, const real& gp1, const real& gp2);

// Corrected 3F2 rational expression: p1_{n-1} = f32_p1_num / f32_p1_den.
real f32_p1_num(const real& n, const real& a1, const real& a2, const real& a3, const real& b1,
                const real& b2, const real& eta, const real& bm1, const real& b0,
                const real& bp1, const real& bp2, const real& g0, const real& gp1,
                const real& gp2);
real f32_p1_den(const real& n, const real& a1, const real& a2, const real& a3, const real& b1,
                const real& b2, const real& eta, const real& bm1, const real& b0,
                const real& bp1, const real& bp2, const real& g0, const real& gp1,
                const real& gp2);

// Corrected 3F2 pi^{[-3]}_{n-3} closed form; P1 = p1_{n-1}.
real f32_pi3(const real& n, const real& a1, const real& a2, const real& a3, const real& b1,
             const real& b2, const real& eta, const real& bm2, const real& bm1, const real& b0,
             const real& bp1, const real& gm1, const real& g0, const real& gp1, const real& gp2,
             const real& P1);

}  // namespace lfortho::corrected
