// Verification sweeps: each suite drives one identity family or estimate
// over its full grid and reports pass/fail with counts.  The CLI `verify`
// subcommand and the acceptance runner share these drivers.
#pragma once

#include <string>
#include <vector>

#include "jpcert/bounded.hpp"

namespace jpcert {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> notes;

    SuiteResult() = default;
    explicit SuiteResult(std::string n) : name(std::move(n)) {}

    void fail(const std::string& what) {
        pass = false;
        ++failures;
        if (notes.size() < 25) notes.push_back("FAIL " + what);
    }
};

// Gauss-sum table vs direct summation, float (ball containment) and exact
// (cyclotomic identity) over all (a,b,c) with gcd(a,c) = 1, c <= c_max.
SuiteResult suite_gauss(long c_max = 200, Prec prec = 64);

// 1-dimensional Kloosterman identity, exact mode, p in {3,5,7}, c <= c_max,
// rho, mu <= 2, all residues r, m prime to p.
SuiteResult suite_onedim(long c_max = 75);

// Degree-g identity for g in {1,2}, p = 3, c in {3,9}.
SuiteResult suite_higher(Prec prec = 128);

// Parity lemma, exact mode, both parts, even c <= c_max, |u|,|v| <= uv_max.
SuiteResult suite_pairity(long c_max = 100, long uv_max = 40);

// Kloosterman equality sweep H_{1,c} vs H_c(D',D); reports the constant.
SuiteResult suite_kloorelns(long c_max = 50, Prec prec = 128);

// Bessel estimate (i) and Kloosterman estimate (ii) margins.
SuiteResult suite_bounds(Prec prec = 128);

// Eichler-Zagier proportionality at k = 14 with plan escalation.
SuiteResult suite_j2h(long k = 14, Prec prec = 128);

// Consecutive-index coefficient relation at (k=12, p=3, mu=1, m0=3).
SuiteResult suite_consecutive(Prec prec = 128);

SuiteResult run_suite_by_name(const std::string& name);

}  // namespace jpcert
