#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcert/gauss.hpp"
#include "lcert/lvalues.hpp"

namespace lcert {

// One instance of the main twisting identity: chi_rho = sum of the labelled
// constituents (abelian image), an even twist character, and a non-positive
// critical argument m.
struct TheoremCase {
    i64 level;  // common modulus for chi_rho (lcm of constituent moduli)
    std::vector<std::string> constituent_labels;
    std::string twist_label;
    int m;
};

struct CertificateEntry {
    i64 d;
    bool fixed;
};

// Per-constituent exact and numeric data echoed into reports.
struct ConstituentRecord {
    std::string label;            // as given
    std::string primitive_label;  // after primitivization
    std::string twisted_label;    // primitive form of twist * constituent
    i64 conductor;                // of the primitive form
    i64 twisted_conductor;
    CycNumber tau;                // tau(constituent')
    CycNumber tau_twisted;        // tau((twist x constituent)')
    CycNumber l_bar;              // L(conj constituent', m)
    CycNumber l_bar_twisted;      // L(conj twisted', m)
    double fe_residual_plain;     // relative functional-equation residuals
    double fe_residual_twisted;
    int fe_sign_plain;
    int fe_sign_twisted;
};

enum class CaseStatus { Pass, Fail, Skipped, Degenerate };

const char* status_name(CaseStatus s);

struct VerificationReport {
    TheoremCase tcase;
    int dim = 0;
    CriticalityVerdict verdict{0, false, CriticalCondition::None};
    CaseStatus status = CaseStatus::Skipped;
    std::string detail;

    std::vector<ConstituentRecord> constituents;
    CycNumber carrier_rho;        // prod tau(chi_j') L(conj chi_j', m)
    CycNumber carrier_twisted;    // same with twisted constituents
    Rational alpha_equivalent;    // prod (f_twisted / f_plain)^(m-1)
    CycNumber tau_twist_pow_dim;  // tau(twist)^dim
    CycNumber ratio;              // R

    i64 fixed_field_modulus = 1;  // values of Q(chi_rho, chi) live in this cyclotomic field
    std::vector<CertificateEntry> certificate;
    bool certificate_pass = false;
    bool gauss_ratio_fixed = false;
    bool eq123_witness = false;
    double max_fe_residual = 0.0;
    double ratio_numeric_residual = 0.0;

    bool passed() const { return status == CaseStatus::Pass; }
};

// The exact "algebraic carrier" of L at 1-m: per primitive constituent
// (optionally twisted first), tau(chi') * L(conj chi', m); the product over
// constituents. Rejects non-critical m.
CycNumber carrier_product(const std::vector<DirichletCharacter>& constituents,
                          const std::optional<DirichletCharacter>& twist, int m);

// R = [prod_j tau(t_j) L(conj t_j, m) f(t_j)^{m-1}]
//     / [tau(chi)^dim prod_j tau(chi_j') L(conj chi_j', m) f(chi_j')^{m-1}],
// an exact cyclotomic number equal to
// L(twist x chi_rho, 1-m) / (tau(twist)^dim L(chi_rho, 1-m)).
CycNumber theorem_ratio(const TheoremCase& tcase);

// Values of chi and of every constituent generate Q(zeta_M) for this M; the
// certificate subgroup is {sigma_d : d = 1 mod M}.
i64 fixed_field_modulus(const TheoremCase& tcase);

// Fixedness of R under every sigma_d with d = 1 mod field_modulus at R's
// level; passing certifies membership in Q(chi_rho, chi).
std::vector<CertificateEntry> membership_certificate(const CycNumber& ratio,
                                                     i64 field_modulus);
std::vector<CertificateEntry> membership_certificate(const CycNumber& ratio,
                                                     const TheoremCase& tcase);

// The Galois mechanics behind the restricted Gauss-sum product: for every
// valid sigma_d, the per-constituent ratio tau(twist x chi_j)/(tau(twist)
// tau(chi_j)) transforms by the predicted character values, and the full
// product is fixed by the subgroup fixing Q(chi_rho, chi).
bool gauss_ratio_fixedness_check(const TheoremCase& tcase);

VerificationReport run_case(const TheoremCase& tcase);

struct SweepConfig {
    i64 rho_modulus_max = 0;
    i64 twist_modulus_max = 0;
    std::vector<int> m_list;
    int dim_max = 1;
};

SweepConfig parse_sweep_config(const std::string& path);
SweepConfig parse_sweep_config_text(const std::string& text, const std::string& origin);

// Deterministic case list: dim-1 cases from primitive characters of modulus
// <= rho_modulus_max, dim-2 cases from conjugate pairs, crossed with every
// even primitive twist of conductor <= twist_modulus_max and every m.
std::vector<TheoremCase> sweep_cases(const SweepConfig& config);

std::vector<VerificationReport> run_sweep(const SweepConfig& config);

nlohmann::ordered_json cyc_to_json(const CycNumber& a);
nlohmann::ordered_json report_to_json(const VerificationReport& report);
nlohmann::ordered_json sweep_to_json(const SweepConfig& config,
                                     const std::vector<VerificationReport>& reports);

}  // namespace lcert
