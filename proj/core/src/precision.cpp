#include "lfortho/precision.hpp"

#include <cmath>
#include <deque>

namespace lfortho {

void set_working_precision(unsigned bits) {
    // boost's mpfr wrapper takes decimal digits; round up and pad.
    const unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 4;
    real::default_precision(digits10);
}

PrecisionContext::PrecisionContext(unsigned bits_) : bits(bits_) {
    if (bits < 128) throw validation_error("PrecisionContext: bits must be >= 128");
    set_working_precision(bits);
    eps_verify = pow(real(2), -static_cast<int>(bits / 2));
    eps_pivot = pow(real(2), -static_cast<int>(bits / 4));
    if (!(real(0) < eps_verify && eps_verify < eps_pivot && eps_pivot < real(1)))
        throw validation_error("PrecisionContext: tolerance ordering violated");
}

SumResult sum_certified(const std::function<real(std::size_t)>& term_at,
                        const PrecisionContext& ctx) {
    real sum = 0;        // includes every term seen so far
    real sum_trunc = 0;  // sum through n_trunc (last significant term)
    std::size_t n_trunc = 0;
    int streak = 0;
    std::deque<real> recent_abs;  // |t_k| over the trailing window

    // sum to full working precision, not just eps_verify: downstream Cholesky
    // factorizations amplify moment errors, so the half-precision verification
    // tolerance is far too loose a place to stop
    const real eps_sum = pow(real(2), -static_cast<int>(ctx.bits));

    for (std::size_t k = 0; k < ctx.max_terms; ++k) {
        const real t = term_at(k);
        sum += t;
        const real at = abs(t);
        recent_abs.push_back(at);
        if (recent_abs.size() > static_cast<std::size_t>(ctx.guard_terms) + 1)
            recent_abs.pop_front();

        const real scale = abs(sum);
        if (k > 0 && scale > 0 && at < eps_sum * scale) {
            ++streak;
            if (streak >= ctx.guard_terms) {
                // ratio test over the guard window
                real rmax = 0;
                bool ratios_ok = true;
                for (std::size_t i = 1; i < recent_abs.size(); ++i) {
                    if (recent_abs[i - 1] == 0) {
                        if (recent_abs[i] != 0) ratios_ok = false;
                        continue;
                    }
                    rmax = (std::max)(rmax, recent_abs[i] / recent_abs[i - 1]);
                }
                if (ratios_ok && rmax < 1) {
                    const real tail = recent_abs.back() * rmax / (1 - rmax);
                    if (tail < eps_sum * scale) return {sum_trunc, n_trunc};
                }
            }
        } else {
            streak = 0;
            sum_trunc = sum;
            n_trunc = k;
        }
    }
    throw non_convergent("sum_certified: no certified truncation within max_terms");
}

real rel_diff(const real& x, const real& y) {
    real s = (std::max)(real(1), (std::max)(abs(x), abs(y)));
    return abs(x - y) / s;
}

}  // namespace lfortho
