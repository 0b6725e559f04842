#include "lfortho/family.hpp"

#include <memory>

namespace lfortho {

const char* family_name(Family f) {
    switch (f) {
        case Family::F12: return "f12";
        case Family::F22: return "f22";
        case Family::F32: return "f32";
    }
    return "?";
}

namespace {

bool is_nonpositive_integer(const real& x) {
    if (x > 0) return false;
    return x == floor(x);
}

}  // namespace

void FamilySpec::validate() const {
    const std::size_t want_a = family == Family::F12 ? 1 : family == Family::F22 ? 2 : 3;
    if (a.size() != want_a)
        throw validation_error("FamilySpec: expected " + std::to_string(want_a) +
                               " numerator parameters for " + family_name(family));
    if (b.size() != 2) throw validation_error("FamilySpec: expected 2 denominator shifts");
    for (const auto& bj : b)
        if (is_nonpositive_integer(bj + 1))
            throw validation_error("FamilySpec: b_j + 1 must not be a non-positive integer");
    if (!(eta > 0)) throw validation_error("FamilySpec: eta must be positive");
    if (positivity) {
        for (const auto& ai : a)
            if (!(ai > 0)) throw validation_error("FamilySpec: positivity mode requires a_i > 0");
        for (const auto& bj : b)
            if (!(bj + 1 > 0))
                throw validation_error("FamilySpec: positivity mode requires b_j + 1 > 0");
    }
    if (family == Family::F32) {
        bool terminating = false;
        for (const auto& ai : a) terminating = terminating || is_nonpositive_integer(ai);
        if (!terminating && !(eta < 1))
            throw validation_error(
                "FamilySpec: F32 needs eta < 1 unless some a_i is a non-positive integer");
    }
}

real PearsonPair::sigma(const real& z) const {
    real r = eta;
    for (const auto& ai : a) r *= z + ai;
    return r;
}

real PearsonPair::theta(const real& z) const {
    return z * (z + b[0]) * (z + b[1]);
}

PearsonPair make_pearson(const FamilySpec& spec) {
    spec.validate();
    return PearsonPair{spec.a, spec.b, spec.eta, spec.M(), FamilySpec::N + 1};
}

std::vector<real> weight_table(const FamilySpec& spec, std::size_t kmax) {
    const PearsonPair p = make_pearson(spec);
    std::vector<real> w;
    w.reserve(kmax + 1);
    w.push_back(1);
    for (std::size_t k = 0; k < kmax; ++k)
        w.push_back(w.back() * p.sigma(real(k)) / p.theta(real(k + 1)));
    return w;
}

real weight(const FamilySpec& spec, std::size_t k, const PrecisionContext&) {
    return weight_table(spec, k).at(k);
}

real weight_direct(const FamilySpec& spec, std::size_t k) {
    spec.validate();
    real num = 1, den = 1;
    for (std::size_t j = 0; j < k; ++j) {
        for (const auto& ai : spec.a) num *= ai + real(j);
        for (const auto& bj : spec.b) den *= bj + 1 + real(j);
        den *= real(j + 1);
    }
    return num / den * pow(spec.eta, static_cast<unsigned>(k));
}

MomentTable moment_table(const FamilySpec& spec, std::size_t count, const PrecisionContext& ctx) {
    spec.validate();
    if (count < 1) throw validation_error("moment_table: count must be >= 1");
    const PearsonPair p = make_pearson(spec);
    auto cache = std::make_shared<std::vector<real>>(1, real(1));
    auto w_at = [p, cache](std::size_t k) -> const real& {
        while (cache->size() <= k) {
            const real j = real(cache->size() - 1);
            cache->push_back(cache->back() * p.sigma(j) / p.theta(j + 1));
        }
        return (*cache)[k];
    };

    MomentTable table;
    table.spec = spec;
    table.bits = ctx.bits;
    table.rho.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        auto term = [&, n](std::size_t k) -> real {
            if (n == 0) return w_at(k);
            return pow(real(k), static_cast<unsigned>(n)) * w_at(k);
        };
        const auto s = sum_certified(term, ctx);
        if (spec.positivity && !(s.value > 0))
            throw validation_error("moment_table: non-positive moment in positivity mode");
        table.rho.push_back(s.value);
    }
    return table;
}

FamilySpec reference_spec(Family f) {
    FamilySpec s;
    s.family = f;
    s.b = {real(1) / 2, real(1) / 4};
    switch (f) {
        case Family::F12:
            s.a = {real(5) / 3};
            s.eta = 2;
            break;
        case Family::F22:
            s.a = {real(5) / 3, real(7) / 4};
            s.eta = 2;
            break;
        case Family::F32:
            s.a = {real(5) / 3, real(7) / 4, real(9) / 5};
            s.eta = real(1) / 2;
            break;
    }
    return s;
}

}  // namespace lfortho
