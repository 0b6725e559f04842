#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace lfortho {

using real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct non_convergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct singular_minor : std::runtime_error {
    int k;
    explicit singular_minor(int k_)
        : std::runtime_error("singular minor: pivot H_" + std::to_string(k_) +
                             " below threshold"),
          k(k_) {}
};

struct insufficient_moments : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct buffer_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct denominator_underflow : std::runtime_error {
    std::string name;
    explicit denominator_underflow(std::string name_)
        : std::runtime_error("denominator below pivot threshold: " + name_),
          name(std::move(name_)) {}
};

// Sets the thread-default mantissa precision so that at least `bits` binary
// digits are carried by subsequently constructed reals.
void set_working_precision(unsigned bits);

struct PrecisionContext {
    unsigned bits;
    real eps_verify;  // relative verification tolerance, 2^(-bits/2)
    real eps_pivot;   // relative singularity threshold, 2^(-bits/4)
    int guard_terms = 5;
    std::size_t max_terms = 100000;

    explicit PrecisionContext(unsigned bits_ = 384);
};

struct SumResult {
    real value;
    std::size_t n_trunc;
};

// Certified summation of an eventually geometrically decaying series.
SumResult sum_certified(const std::function<real(std::size_t)>& term_at,
                        const PrecisionContext& ctx);

// |x-y| / max(1, |x|, |y|)
real rel_diff(const real& x, const real& y);

}  // namespace lfortho
