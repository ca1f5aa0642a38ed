// Command-line front end: single evaluations, certification, basis
// construction, identity suites, and grid surveys.
//
// Exit codes: 0 success (including CertifiedNonzero / VanishesExactly),
// 1 when an Inconclusive result is present, 2 invalid input.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jpcert/basis.hpp"
#include "jpcert/certify.hpp"
#include "jpcert/errors.hpp"
#include "jpcert/ezmap.hpp"
#include "jpcert/gauss.hpp"
#include "jpcert/jacobi.hpp"
#include "jpcert/kloosterman.hpp"
#include "jpcert/suites.hpp"
#include "jpcert/survey.hpp"

using namespace jpcert;

namespace {

struct PlanFlags {
    long prec = 128;
    long cmax = -1;  // -1: defaults_for the discriminant

    std::optional<TruncationPlan> plan_for(const Int& D, const Int& det_two_m) const {
        TruncationPlan p = TruncationPlan::defaults_for(D > 0 ? D : Int(1), det_two_m);
        p.prec = static_cast<Prec>(prec);
        if (cmax >= 0) p.c_max = cmax;
        return p;
    }
};

void add_plan_flags(CLI::App* cmd, PlanFlags& flags) {
    cmd->add_option("--prec", flags.prec, "working precision in bits")->default_val(128);
    cmd->add_option("--cmax", flags.cmax, "series truncation point");
}

std::string show(const BoundedComplex& z) {
    return z.real().mid_string(20) + " + " + z.imag().mid_string(20) +
           "*I  (radius " + z.real().rad_string(3) + ", " + z.imag().rad_string(3) + ")";
}

int run_gauss(const std::string& a, const std::string& b, const std::string& c,
              const std::string& method, long prec) {
    GaussSumParams p{Int(a), Int(b), Int(c)};
    if (method == "direct" || method == "both") {
        BoundedComplex d = gauss_sum_direct(p, prec);
        std::cout << "direct: " << show(d) << "\n";
    }
    if (method == "closed" || method == "both") {
        GaussClosed cl = gauss_sum_closed(p, prec);
        std::cout << "closed: " << show(cl.value)
                  << (cl.used_fallback ? "  [fallback to direct]" : "") << "\n";
    }
    if (method == "both") {
        BoundedReal res = (gauss_sum_direct(p, prec) - gauss_sum_closed(p, prec).value).abs_ball();
        std::cout << "residual: " << res.mid_string(6) << "\n";
    }
    if (method == "exact") {
        CycVec d = gauss_direct_exact(p);
        GaussClosedExact cl = gauss_closed_exact(p);
        bool equal = cl.used_fallback || cyc_is_zero(cyc_sub(d, cl.vec));
        std::cout << "exact: closed" << (cl.used_fallback ? " (fallback)" : "")
                  << (equal ? " == " : " != ") << "direct in Z[zeta_" << d.modulus << "]\n";
        return equal ? 0 : 1;
    }
    return 0;
}

struct RegionFlags {
    double B = 2.1;
    double B1 = 0.7;
    long k0 = -1;  // -1: corollary default
};

int run_certify(long k, const std::string& two_m, const std::string& n, const std::string& r,
                const PlanFlags& flags, const RegionFlags& rflags) {
    HalfIntegralIndexMatrix m = parse_two_m(two_m);
    JacobiIndex idx{Int(n), parse_r_vector(r)};
    Int D = discriminant(idx, m);
    Certificate cert = certify_nonvanishing(k, m, idx, flags.plan_for(D, m.det_two_m()));
    std::cout << "k=" << k << " two_m=[" << two_m << "] n=" << n << " r=[" << r << "] D=" << D.str()
              << "\n";
    std::optional<long> k0;
    if (rflags.k0 >= 0) k0 = rflags.k0;
    std::cout << "regions: linear_weight="
              << region_linear_weight(k, m.g(), m.det_two_m(), D, k0).in_region
              << " small_discriminant=" << region_small_discriminant(m.g(), m.det_two_m(), D, k).in_region
              << " power_window=" << region_power_window(k, m.g(), m.det_two_m(), D, rflags.B, k0).in_region;
    if (m.g() == 1) {
        auto t12 = region_weight_free(m.det_two_m() / 2, D, rflags.B1);
        std::cout << " weight_free=" << (t12.applicable ? (t12.in_region ? "1" : "0") : "n/a");
    }
    std::cout << "\n";
    switch (cert.status) {
        case CertStatus::VanishesExactly:
            std::cout << "VanishesExactly (odd weight, 2r == 0 mod Z^g 2m)\n";
            return 0;
        case CertStatus::CertifiedNonzero:
            std::cout << "CertifiedNonzero\n|S| = " << cert.s_abs.mid_string(20) << " (radius "
                      << cert.s_abs.rad_string(3) << ")\ntail <= " << cert.tail.mid_string(3)
                      << "\nmargin below 1/(2 pi): " << cert.threshold_margin.mid_string(6)
                      << "\nplan: c_max=" << cert.plan_used.c_max
                      << " prec=" << cert.plan_used.prec << "\n";
            return 0;
        case CertStatus::Inconclusive:
            std::cout << "Inconclusive after escalation\n|S| = " << cert.s_abs.mid_string(20)
                      << " tail <= " << cert.tail.mid_string(3) << "\n";
            return 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified Jacobi Poincare series computations"};
    app.require_subcommand(1);

    // gauss
    std::string ga = "1", gb = "0", gc = "1", gmethod = "both";
    long gprec = 128;
    auto* gauss_cmd = app.add_subcommand("gauss", "quadratic Gauss sums");
    gauss_cmd->add_option("--a", ga)->required();
    gauss_cmd->add_option("--b", gb)->required();
    gauss_cmd->add_option("--c", gc)->required();
    gauss_cmd->add_option("--method", gmethod, "direct|closed|both|exact")->default_val("both");
    gauss_cmd->add_option("--prec", gprec)->default_val(128);

    // kloosterman
    std::string ktype = "oned", ktwo_m = "2", kr = "0", krp = "0";
    std::string kn = "1", knp = "1", kc = "1", km = "1", ku = "0", kv = "0";
    long kw = 13, kalpha = 2, kprec = 128;
    auto* kl_cmd = app.add_subcommand("kloosterman", "exponential sums");
    kl_cmd->add_option("--type", ktype, "oned|g|h|kohnen|doubleH|scriptH|scriptHprime")
        ->default_val("oned");
    kl_cmd->add_option("--c", kc)->required();
    kl_cmd->add_option("--r", kr);
    kl_cmd->add_option("--m", km);
    kl_cmd->add_option("--twoM", ktwo_m);
    kl_cmd->add_option("--n", kn);
    kl_cmd->add_option("--nprime", knp);
    kl_cmd->add_option("--rprime", krp);
    kl_cmd->add_option("--u", ku);
    kl_cmd->add_option("--v", kv);
    kl_cmd->add_option("--w", kw);
    kl_cmd->add_option("--alpha", kalpha);
    kl_cmd->add_option("--prec", kprec)->default_val(128);

    // coeff
    long ck = 14;
    std::string ctwo_m = "2", cn = "1", cr = "1", cnp, crp;
    PlanFlags cflags;
    auto* coeff_cmd = app.add_subcommand("coeff", "Poincare series Fourier coefficient");
    coeff_cmd->add_option("--k", ck)->required();
    coeff_cmd->add_option("--twoM", ctwo_m)->required();
    coeff_cmd->add_option("--n", cn)->required();
    coeff_cmd->add_option("--r", cr)->required();
    coeff_cmd->add_option("--nprime", cnp, "target n' (defaults to n)");
    coeff_cmd->add_option("--rprime", crp, "target r' (defaults to r)");
    add_plan_flags(coeff_cmd, cflags);

    // certify
    long yk = 14;
    std::string ytwo_m = "2", yn = "1", yr = "1";
    PlanFlags yflags;
    RegionFlags yregion;
    auto* cert_cmd = app.add_subcommand("certify", "non-vanishing certificate");
    cert_cmd->add_option("--k", yk)->required();
    cert_cmd->add_option("--twoM", ytwo_m)->required();
    cert_cmd->add_option("--n", yn)->required();
    cert_cmd->add_option("--r", yr)->required();
    cert_cmd->add_option("--B", yregion.B, "constant for the main-theorem region (> 3 log 2)");
    cert_cmd->add_option("--B1", yregion.B1, "constant for the M factor (> log 2)");
    cert_cmd->add_option("--k0", yregion.k0, "weight floor for the region predicates");
    add_plan_flags(cert_cmd, yflags);

    // basis
    long bk = 14;
    std::string bm = "1";
    bool brelax = false;
    PlanFlags bflags;
    auto* basis_cmd = app.add_subcommand("basis", "classical Poincare basis (g = 1)");
    basis_cmd->add_option("--k", bk)->required();
    basis_cmd->add_option("--m", bm)->required();
    basis_cmd->add_flag("--relax", brelax, "permit k < m + 12");
    add_plan_flags(basis_cmd, bflags);

    // verify
    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "identity suites");
    verify_cmd
        ->add_option("--suite", suite,
                     "gauss|onedim|pairity|kloorelns|higher|j2h|consecutive|bounds")
        ->required();

    // survey
    std::string sconfig, sout;
    int sjobs = 0;
    auto* survey_cmd = app.add_subcommand("survey", "grid survey to CSV");
    survey_cmd->add_option("--config", sconfig, "JSON job description")->required();
    survey_cmd->add_option("--out", sout, "output CSV path")->required();
    survey_cmd->add_option("--jobs", sjobs, "worker threads (overrides config)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gauss_cmd->parsed()) return run_gauss(ga, gb, gc, gmethod, gprec);

        if (kl_cmd->parsed()) {
            Prec prec = static_cast<Prec>(kprec);
            if (ktype == "oned") {
                std::cout << show(kloosterman_1d({Int(kr), Int(km), Int(kc)}, prec)) << "\n";
            } else if (ktype == "g" || ktype == "h") {
                HalfIntegralIndexMatrix m = parse_two_m(ktwo_m);
                JacobiSumParams p{m, Int(kc), Int(kn), parse_r_vector(kr), Int(knp),
                                  parse_r_vector(krp)};
                BoundedComplex v = ktype == "g" ? kloosterman_g(p, prec) : h_jacobi(p, prec);
                std::cout << show(v) << "\n";
            } else if (ktype == "kohnen") {
                std::cout << show(h_kohnen({kw, Int(kc), Int(ku), Int(kv)}, prec)) << "\n";
            } else {
                AuxKind kind = ktype == "doubleH" ? AuxKind::DoubleH
                               : ktype == "scriptH" ? AuxKind::ScriptH
                                                    : AuxKind::ScriptHPrime;
                std::cout << show(h_auxiliary(kind, {kw, Int(kc), Int(ku), Int(kv)},
                                              static_cast<int>(kalpha), prec))
                          << "\n";
            }
            return 0;
        }

        if (coeff_cmd->parsed()) {
            HalfIntegralIndexMatrix m = parse_two_m(ctwo_m);
            JacobiIndex from{Int(cn), parse_r_vector(cr)};
            JacobiIndex to = cnp.empty() ? from : JacobiIndex{Int(cnp), parse_r_vector(crp)};
            Int D = discriminant(from, m);
            CoefficientValue v = coefficient(ck, m, from, to, *cflags.plan_for(D, m.det_two_m()));
            std::cout << "coefficient: " << show(v.value) << "\n"
                      << "tail <= " << v.tail_bound.mid_string(3)
                      << "  (c_max=" << v.truncation_c_max << ")\n";
            return 0;
        }

        if (cert_cmd->parsed()) return run_certify(yk, ytwo_m, yn, yr, yflags, yregion);

        if (basis_cmd->parsed()) {
            Int m(bm);
            BasisIndexSet set = basis_indices(bk, m, brelax);
            std::cout << "dim J_{" << bk << "," << bm << "}^cusp = " << set.entries.size()
                      << (set.relaxed ? " (relaxed)" : "") << "\n";
            for (const auto& e : set.entries)
                std::cout << "  (n=" << e.index.n.str() << ", r=" << e.index.r[0].str()
                          << ")  mu=" << e.mu << " lambda=" << e.lambda
                          << " D_mu=" << e.d_mu.str() << "\n";
            if (set.entries.empty()) return 0;
            TruncationPlan plan = *bflags.plan_for(discriminant(set.entries[0].index,
                                                                HalfIntegralIndexMatrix::from_scalar_index(m)),
                                                   2 * m);
            BasisMatrixResult bm_res = basis_matrix(bk, m, plan, brelax);
            std::cout << "coefficient matrix determinant: " << show(bm_res.determinant) << "\n"
                      << (bm_res.status == InvertibilityStatus::Invertible
                              ? "certificate: invertible (interval determinant excludes 0)\n"
                              : "certificate: inconclusive\n");
            return bm_res.status == InvertibilityStatus::Invertible ? 0 : 1;
        }

        if (verify_cmd->parsed()) {
            SuiteResult r = run_suite_by_name(suite);
            std::cout << "suite " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " ("
                      << r.checks << " checks, " << r.failures << " failures)\n";
            for (const auto& n : r.notes) std::cout << "  " << n << "\n";
            return r.pass ? 0 : 1;
        }

        if (survey_cmd->parsed()) {
            SurveyJob job = SurveyJob::from_json_file(sconfig);
            if (sjobs > 0) job.jobs = sjobs;
            std::string csv = survey_csv(job);
            std::ofstream out(sout, std::ios::binary);
            if (!out) throw DomainError("survey: cannot open output " + sout);
            out << csv;
            bool inconclusive = csv.find(",Inconclusive,") != std::string::npos;
            std::cout << "survey written to " << sout << "\n";
            return inconclusive ? 1 : 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
