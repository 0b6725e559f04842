#pragma once

#include <string>
#include <vector>

#include "lfortho/family.hpp"
#include "lfortho/precision.hpp"

namespace lfortho {

struct ResidualRecord {
    std::string suite;
    std::string identity;
    long n = 0;
    real residual;
    real budget;
    bool pass = false;
};

struct ErratumNote {
    std::string identity;
    std::string detail;
};

struct StepRecord {
    long n = 0;
    real beta_lf, beta_chol, gamma_lf, gamma_chol;
    real dev_beta, dev_gamma;  // relative deviations
};

struct LFReport {
    Family family = Family::F12;
    std::vector<ResidualRecord> records;
    std::vector<ErratumNote> errata;
    std::vector<StepRecord> steps;

    void add(std::string suite, std::string identity, long n, const real& residual,
             const real& budget);
    bool identity_all_failed(const std::string& identity) const;
};

// Marks identities that fail at every tested n as errata candidates.
void finalize_errata(LFReport& report);

}  // namespace lfortho
