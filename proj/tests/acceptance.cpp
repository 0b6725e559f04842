// Acceptance gate: one line per criterion from the build specification.
// bits = 384, K = 16; criterion 11 reruns the identity suites at 768 bits.

#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lfortho/suites.hpp"

using namespace lfortho;

namespace {

constexpr Family kFamilies[] = {Family::F12, Family::F22, Family::F32};

LFReport run_all(Family f, const PrecisionContext& ctx) {
    const FamilySpec spec = reference_spec(f);
    const Pipeline pipe = run_pipeline(spec, 16, ctx);
    const Operators ops = make_operators(pipe);
    LFReport r;
    structure_suite(spec, pipe, ops, ctx, r);
    pascal_suite(pipe, ops, ctx, r);
    lf_suite(spec, pipe, ops, ctx, r);
    lfstep_suite(spec, ctx, r);
    compat_suite(spec, pipe, ops, ctx, r);
    toda_suite(spec, ctx, r);
    random_suite(spec, 1, 10, ctx, r);
    return r;
}

LFReport run_identity_suites(Family f, const PrecisionContext& ctx) {
    const FamilySpec spec = reference_spec(f);
    const Pipeline pipe = run_pipeline(spec, 16, ctx);
    const Operators ops = make_operators(pipe);
    LFReport r;
    structure_suite(spec, pipe, ops, ctx, r);
    lf_suite(spec, pipe, ops, ctx, r);
    lfstep_suite(spec, ctx, r);
    return r;
}

bool all_below(const std::vector<LFReport>& runs, const std::string& prefix, const real& tol,
               std::string& why) {
    bool seen = false, ok = true;
    for (const auto& run : runs)
        for (const auto& r : run.records)
            if (r.identity.rfind(prefix, 0) == 0) {
                seen = true;
                if (!(r.residual < tol)) {
                    ok = false;
                    why = r.identity + " n=" + std::to_string(r.n) + " residual " +
                          r.residual.str(3, std::ios_base::scientific);
                }
            }
    if (!seen) why = "no records for " + prefix;
    return seen && ok;
}

// Errata policy: an identity is sound if it passes at every tested n, or if it
// fails at every tested n while a sibling <base>.corrected* identity passes at
// every n (systematic misprint with an adjudicated repair).
bool errata_ok(const LFReport& run, const std::set<std::string>& ids, std::string& why) {
    std::map<std::string, std::pair<int, int>> tally;  // identity -> (pass, fail)
    for (const auto& r : run.records)
        if (ids.count(r.identity)) (r.pass ? tally[r.identity].first : tally[r.identity].second)++;
    auto all_pass = [&](const std::string& id) {
        auto it = tally.find(id);
        return it != tally.end() && it->second.second == 0 && it->second.first > 0;
    };
    for (const auto& [id, pf] : tally) {
        if (pf.second == 0) continue;  // clean
        if (pf.first != 0) {
            why = id + " fails at some but not all n";
            return false;
        }
        std::string base = id;
        for (const char* marker : {".printed", ".proof"}) {
            const auto pos = base.find(marker);
            if (pos != std::string::npos) base = base.substr(0, pos);
        }
        if (base == id) {
            why = id + " fails at every n and has no printed/proof marker";
            return false;
        }
        bool repaired = false;
        for (const auto& [other, _] : tally)
            if (other.rfind(base + ".corrected", 0) == 0 && all_pass(other)) repaired = true;
        if (!repaired) {
            why = id + " fails at every n without a validating corrected variant";
            return false;
        }
    }
    return true;
}

std::set<std::string> ids_in_suite(const LFReport& run, const std::string& suite) {
    std::set<std::string> ids;
    for (const auto& r : run.records)
        if (r.suite == suite) ids.insert(r.identity);
    return ids;
}

int line(int k, bool ok, const std::string& what, const std::string& why) {
    std::printf("criterion %2d: %s — %s%s%s\n", k, ok ? "PASS" : "FAIL", what.c_str(),
                ok || why.empty() ? "" : ": ", ok ? "" : why.c_str());
    return ok ? 0 : 1;
}

}  // namespace

int main() {
    const PrecisionContext ctx(384);
    const real tol = pow(real(2), -192);
    int failures = 0;

    std::vector<LFReport> runs;
    for (Family f : kFamilies) runs.push_back(run_all(f, ctx));

    std::string why;

    failures += line(1, all_below(runs, "pearson", tol, why),
                     "Pearson residuals < 2^-192, all families", why);

    bool c2 = all_below(runs, "chol.recon", tol, why) && all_below(runs, "det.H", tol, why) &&
              all_below(runs, "det.p1", tol, why);
    failures += line(2, c2, "Hankel reconstruction + determinantal H_k, p1_k", why);

    bool c3 = all_below(runs, "psi.band.offband", tol, why) &&
              all_below(runs, "psi.band.low", tol, why) &&
              all_below(runs, "psi.band.high", tol, why);
    for (const auto& run : runs)
        for (const auto& r : run.records)
            if (r.identity == "psi.band.count" && r.residual != 0) {
                c3 = false;
                why = "missing in-band diagonal";
            }
    failures += line(3, c3, "Psi bandedness and extreme diagonals", why);

    failures += line(4, all_below(runs, "psi.sixway", tol, why),
                     "six-way Psi agreement < 2^-192", why);
    failures += line(5, all_below(runs, "pshift", tol, why),
                     "eq:P_shift residuals at z in {1/2, 1/3, 3}", why);
    failures += line(6, all_below(runs, "compat.jacobi", tol, why),
                     "[Psi H^-1, J] = Psi H^-1", why);

    bool c7 = true;
    for (const auto& run : runs)
        c7 = c7 && errata_ok(run, ids_in_suite(run, "lf"), why);
    failures += line(7, c7, "family closed forms validate or carry adjudicated errata", why);

    bool c8 = true;
    for (const auto& run : runs) {
        std::set<std::string> step_ids;
        for (const auto& id : ids_in_suite(run, "lf"))
            if (id.find(".lfbeta") != std::string::npos ||
                id.find(".lfgamma") != std::string::npos)
                step_ids.insert(id);
        c8 = c8 && errata_ok(run, step_ids, why);
        for (const auto& r : run.records)
            if (r.suite == "lfstep" && !r.pass) {
                c8 = false;
                why = r.identity + " n=" + std::to_string(r.n) + " exceeds the forward budget";
            }
    }
    failures += line(8, c8, "Laguerre-Freud step equations + forward runs", why);

    bool c9 = true;
    for (const auto& run : runs) {
        c9 = c9 && errata_ok(run, ids_in_suite(run, "compat"), why);
        for (const auto& r : run.records)
            if (r.suite == "random" &&
                (r.identity == "f32.comp1" || r.identity == "f32.comp2") &&
                !(r.residual < tol)) {
                c9 = false;
                why = "randomized " + r.identity + " residual above 2^-192";
            }
    }
    failures += line(9, c9, "comp1-comp4 + bis forms, parameter independence over 10 draws",
                     why);

    bool c10 = true;
    for (const auto& run : runs)
        for (const auto& r : run.records)
            if (r.suite == "toda" && !r.pass) {
                c10 = false;
                why = r.identity + " n=" + std::to_string(r.n);
            }
    failures += line(10, c10, "Toda suite within FD budgets, order check, moment shift", why);

    // criterion 11: identity suites at 768 bits; every criterion-3..8 residual
    // that passed at 384 shrinks by >= 2^100 (or was already exactly zero)
    bool c11 = true;
    const real shrink = pow(real(2), 100);
    {
        const PrecisionContext ctx_hi(768);
        for (std::size_t fi = 0; fi < 3; ++fi) {
            const LFReport hi = run_identity_suites(kFamilies[fi], ctx_hi);
            std::map<std::string, real> hi_res;
            for (const auto& r : hi.records)
                hi_res[r.suite + "/" + r.identity + "/" + std::to_string(r.n)] = r.residual;
            for (const auto& r : runs[fi].records) {
                if (!(r.suite == "structure" || r.suite == "lf" || r.suite == "lfstep"))
                    continue;
                if (!r.pass) continue;  // errata rows stay O(1) by design
                if (r.identity == "pearson" || r.identity == "chol.recon" ||
                    r.identity.rfind("det.", 0) == 0 || r.identity == "psi.band.count")
                    continue;  // criteria 1-2 / structural counters
                const auto key = r.suite + "/" + r.identity + "/" + std::to_string(r.n);
                auto it = hi_res.find(key);
                if (it == hi_res.end()) continue;
                if (r.residual == 0 || it->second == 0) continue;  // zero-residual guard
                if (!(r.residual >= it->second * shrink)) {
                    c11 = false;
                    why = key + " shrank only by " +
                          (r.residual / it->second).str(3, std::ios_base::scientific);
                }
            }
        }
    }
    failures += line(11, c11, "residuals shrink by >= 2^100 at 768 bits", why);

    std::printf("%s\n", failures == 0 ? "ACCEPTANCE: ALL CRITERIA PASS"
                                      : "ACCEPTANCE: FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
