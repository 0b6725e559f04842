#pragma once

#include <cstddef>
#include <vector>

#include "lfortho/precision.hpp"

namespace lfortho {

enum class Family { F12, F22, F32 };

const char* family_name(Family f);

struct FamilySpec {
    Family family = Family::F12;
    std::vector<real> a;  // numerator parameters, |a| = 1/2/3 for F12/F22/F32
    std::vector<real> b;  // denominator shifts b_1, b_2
    real eta = 2;
    bool positivity = true;

    int M() const { return static_cast<int>(a.size()); }
    static constexpr int N = 2;

    void validate() const;  // throws validation_error
};

// sigma(z) = eta * prod(z + a_i), theta(z) = z (z + b_1)(z + b_2)
struct PearsonPair {
    std::vector<real> a;
    std::vector<real> b;
    real eta;
    int deg_sigma;
    int deg_theta;

    real sigma(const real& z) const;
    real theta(const real& z) const;
};

PearsonPair make_pearson(const FamilySpec& spec);

// w(0) = 1, w(k+1) = w(k) sigma(k) / theta(k+1)
std::vector<real> weight_table(const FamilySpec& spec, std::size_t kmax);
real weight(const FamilySpec& spec, std::size_t k, const PrecisionContext& ctx);

// Fresh Pochhammer products per k; independent oracle for the recurrence route.
real weight_direct(const FamilySpec& spec, std::size_t k);

struct MomentTable {
    std::vector<real> rho;
    FamilySpec spec;
    unsigned bits = 0;

    std::size_t count() const { return rho.size(); }
};

MomentTable moment_table(const FamilySpec& spec, std::size_t count, const PrecisionContext& ctx);

// Reference parameter sets used throughout the verification suites.
FamilySpec reference_spec(Family f);

}  // namespace lfortho
