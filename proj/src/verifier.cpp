#include "lcert/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace lcert {

namespace {

constexpr double kResidualTolerance = 1e-8;

struct CasePieces {
    DirichletCharacter twist;                       // primitive, even
    std::vector<DirichletCharacter> constituents;   // as labelled
    std::vector<DirichletCharacter> primitive;      // primitivized constituents
    std::vector<DirichletCharacter> twisted;        // primitive twisted forms
};

CasePieces resolve_case(const TheoremCase& tcase, bool require_even_twist = true) {
    if (tcase.m >= 0)
        throw std::invalid_argument("theorem case: m must be a negative integer");
    if (tcase.constituent_labels.empty())
        throw std::invalid_argument("theorem case: at least one constituent required");
    DirichletCharacter twist_raw = DirichletCharacter::from_label(tcase.twist_label);
    if (require_even_twist && !twist_raw.is_even())
        throw std::invalid_argument("theorem case: twist character must be even");
    CasePieces p{twist_raw.primitivize(), {}, {}, {}};
    i64 lcm_mod = 1;
    for (const auto& label : tcase.constituent_labels) {
        DirichletCharacter chi = DirichletCharacter::from_label(label);
        lcm_mod = std::lcm(lcm_mod, chi.modulus());
        p.primitive.push_back(chi.primitivize());
        p.twisted.push_back(twist(p.twist, chi));
        p.constituents.push_back(std::move(chi));
    }
    if (tcase.level % lcm_mod != 0)
        throw std::invalid_argument("theorem case: level must be divisible by every constituent modulus");
    return p;
}

std::vector<int> parities_of(const std::vector<DirichletCharacter>& chars) {
    std::vector<int> out;
    for (const auto& c : chars) out.push_back(c.parity());
    return out;
}

// Exact cyclotomic data of one case past the criticality gate.
struct ExactParts {
    std::vector<ConstituentRecord> records;
    CycNumber carrier_rho, carrier_twisted;
    Rational alpha_equivalent;
    CycNumber tau_twist_pow_dim;
    CycNumber ratio;
    bool degenerate = false;
    std::string degenerate_detail;
};

ExactParts compute_exact_parts(const CasePieces& p, int m) {
    ExactParts parts;
    parts.carrier_rho = CycNumber::one();
    parts.carrier_twisted = CycNumber::one();
    parts.alpha_equivalent = Rational(1);

    CycNumber numerator = CycNumber::one();
    CycNumber denominator_inv = CycNumber::one();

    for (size_t j = 0; j < p.constituents.size(); ++j) {
        const auto& prim = p.primitive[j];
        const auto& tw = p.twisted[j];
        ConstituentRecord rec{p.constituents[j].label(),
                              prim.label(),
                              tw.label(),
                              prim.conductor(),
                              tw.conductor(),
                              gauss_sum(prim),
                              gauss_sum(tw),
                              l_value_nonpositive(prim.conjugate(), m),
                              l_value_nonpositive(tw.conjugate(), m),
                              0.0,
                              0.0,
                              0,
                              0};
        if (rec.l_bar_twisted.is_zero() || rec.l_bar.is_zero()) {
            parts.degenerate = true;
            parts.degenerate_detail =
                "vanishing L-value at constituent " + rec.label + " (degenerate case)";
            parts.records.push_back(std::move(rec));
            continue;
        }
        parts.carrier_rho *= rec.tau * rec.l_bar;
        parts.carrier_twisted *= rec.tau_twisted * rec.l_bar_twisted;
        parts.alpha_equivalent *=
            rational_power_int(rec.twisted_conductor, m - 1) /
            rational_power_int(rec.conductor, m - 1);
        numerator *= rec.tau_twisted * rec.l_bar_twisted *
                     rational_power_int(rec.twisted_conductor, m - 1);
        denominator_inv *= gauss_sum_inverse(prim) * rec.l_bar.inverse() *
                           rational_power_int(prim.conductor(), 1 - m);
        parts.records.push_back(std::move(rec));
    }

    int dim = (int)p.constituents.size();
    parts.tau_twist_pow_dim = gauss_sum(p.twist).pow(dim);
    if (parts.degenerate) {
        parts.ratio = CycNumber::zero();
        return parts;
    }
    parts.ratio = numerator * denominator_inv * gauss_sum_inverse(p.twist).pow(dim);
    return parts;
}

i64 fixed_field_modulus_of(const CasePieces& p) {
    i64 m = p.twist.order();
    for (const auto& chi : p.primitive) m = std::lcm(m, chi.order());
    return m;
}

// Per-constituent Galois mechanics of the Gauss-sum ratio, then fixedness of
// the whole product under the subgroup fixing Q(chi_rho, chi).
bool gauss_ratio_fixedness(const CasePieces& p, i64 field_modulus) {
    const DirichletCharacter& chi = p.twist;
    CycNumber tau_chi_inv = gauss_sum_inverse(chi);

    i64 n_star = std::lcm(chi.conductor(), chi.order());
    for (size_t j = 0; j < p.primitive.size(); ++j) {
        n_star = std::lcm(n_star, std::lcm(p.primitive[j].conductor(), p.primitive[j].order()));
        n_star = std::lcm(n_star, std::lcm(p.twisted[j].conductor(), p.twisted[j].order()));
    }
    n_star = std::lcm(n_star, field_modulus);

    std::map<std::string, CycNumber> tau_cache;
    auto tau_of = [&](const DirichletCharacter& c) -> const CycNumber& {
        auto it = tau_cache.find(c.label());
        if (it == tau_cache.end()) it = tau_cache.emplace(c.label(), gauss_sum(c)).first;
        return it->second;
    };

    std::vector<CycNumber> ratio_terms;  // E_j = tau(t_j) / (tau(chi) tau(chi_j))
    for (size_t j = 0; j < p.primitive.size(); ++j)
        ratio_terms.push_back(tau_of(p.twisted[j]) * tau_chi_inv *
                              gauss_sum_inverse(p.primitive[j]));

    for (i64 d : unit_residues(n_star)) {
        if (d % chi.order() != 1 % chi.order()) continue;
        GaloisElement sigma(n_star, d);
        for (size_t j = 0; j < p.primitive.size(); ++j) {
            DirichletCharacter sigma_chi_j = p.primitive[j].galois_conjugated(d);
            DirichletCharacter t_sigma = twist(chi, sigma_chi_j);
            CycNumber lhs = galois_apply(sigma, ratio_terms[j]);
            CycNumber value_ratio = t_sigma.conjugate()(d) *
                                    chi.conjugate()(d).inverse() *
                                    sigma_chi_j.conjugate()(d).inverse();
            CycNumber rhs = value_ratio * tau_of(t_sigma) * tau_chi_inv *
                            gauss_sum_inverse(sigma_chi_j);
            if (lhs != rhs) return false;
        }
    }

    CycNumber product = CycNumber::one();
    for (const auto& e : ratio_terms) product *= e;
    for (i64 d : unit_residues(n_star)) {
        if (d % field_modulus != 1 % field_modulus) continue;
        if (!galois_apply(GaloisElement(n_star, d), product.promoted(n_star)).operator==(
                product.promoted(n_star)))
            return false;
    }
    return true;
}

}  // namespace

const char* status_name(CaseStatus s) {
    switch (s) {
        case CaseStatus::Pass: return "pass";
        case CaseStatus::Fail: return "fail";
        case CaseStatus::Skipped: return "skipped";
        default: return "degenerate";
    }
}

CycNumber carrier_product(const std::vector<DirichletCharacter>& constituents,
                          const std::optional<DirichletCharacter>& twist_chi, int m) {
    if (constituents.empty())
        throw std::invalid_argument("carrier_product: at least one constituent required");
    std::vector<DirichletCharacter> prims;
    for (const auto& chi : constituents)
        prims.push_back(twist_chi ? twist(*twist_chi, chi) : chi.primitivize());
    if (!classify_criticality(parities_of(prims), m).critical)
        throw std::invalid_argument("carrier_product: m is not critical for these constituents");
    CycNumber acc = CycNumber::one();
    for (const auto& chi : prims) acc *= gauss_sum(chi) * l_value_nonpositive(chi.conjugate(), m);
    return acc;
}

CycNumber theorem_ratio(const TheoremCase& tcase) {
    CasePieces p = resolve_case(tcase);
    if (!classify_criticality(parities_of(p.primitive), tcase.m).critical)
        throw std::invalid_argument("theorem_ratio: m is not critical for this case");
    ExactParts parts = compute_exact_parts(p, tcase.m);
    if (parts.degenerate) throw std::domain_error("theorem_ratio: " + parts.degenerate_detail);
    return parts.ratio;
}

i64 fixed_field_modulus(const TheoremCase& tcase) {
    return fixed_field_modulus_of(resolve_case(tcase, /*require_even_twist=*/false));
}

std::vector<CertificateEntry> membership_certificate(const CycNumber& ratio, i64 field_modulus) {
    i64 n = std::lcm(ratio.level(), field_modulus);
    if (n == 1) return {{1, true}};
    CycNumber r = ratio.promoted(n);
    std::vector<CertificateEntry> out;
    for (i64 d : unit_residues(n)) {
        if (d % field_modulus != 1 % field_modulus) continue;
        out.push_back({d, r.galois(GaloisElement(n, d)) == r});
    }
    return out;
}

std::vector<CertificateEntry> membership_certificate(const CycNumber& ratio,
                                                     const TheoremCase& tcase) {
    return membership_certificate(ratio, fixed_field_modulus(tcase));
}

bool gauss_ratio_fixedness_check(const TheoremCase& tcase) {
    // parity plays no role in the Gauss-sum mechanics, so odd twists are
    // admitted here even though the theorem pipeline requires even ones
    CasePieces p = resolve_case(tcase, /*require_even_twist=*/false);
    return gauss_ratio_fixedness(p, fixed_field_modulus_of(p));
}

VerificationReport run_case(const TheoremCase& tcase) {
    CasePieces p = resolve_case(tcase);
    VerificationReport rep;
    rep.tcase = tcase;
    rep.dim = (int)p.constituents.size();
    rep.verdict = classify_criticality(parities_of(p.primitive), tcase.m);
    rep.fixed_field_modulus = fixed_field_modulus_of(p);
    if (!rep.verdict.critical) {
        rep.status = CaseStatus::Skipped;
        rep.detail = "m is not critical for this constituent parity signature";
        return rep;
    }

    ExactParts parts = compute_exact_parts(p, tcase.m);
    rep.constituents = parts.records;
    rep.carrier_rho = parts.carrier_rho;
    rep.carrier_twisted = parts.carrier_twisted;
    rep.alpha_equivalent = parts.alpha_equivalent;
    rep.tau_twist_pow_dim = parts.tau_twist_pow_dim;
    rep.ratio = parts.ratio;
    if (parts.degenerate) {
        rep.status = CaseStatus::Degenerate;
        rep.detail = parts.degenerate_detail;
        return rep;
    }

    rep.certificate = membership_certificate(rep.ratio, rep.fixed_field_modulus);
    rep.certificate_pass = !rep.ratio.is_zero();
    for (const auto& e : rep.certificate) rep.certificate_pass = rep.certificate_pass && e.fixed;

    rep.gauss_ratio_fixed = gauss_ratio_fixedness(p, rep.fixed_field_modulus);

    // Over Q every restriction of the twist is the twist itself, so the
    // restricted Gauss-sum product collapses to tau(chi)^dim; witness that
    // the two routes agree exactly.
    CycNumber lhs = CycNumber::one();
    for (int j = 0; j < rep.dim; ++j) lhs *= gauss_sum(p.twist);
    rep.eq123_witness = lhs == rep.tau_twist_pow_dim;

    // numeric cross-checks
    int s = 1 - tcase.m;
    rep.max_fe_residual = 0.0;
    std::complex<double> num(1.0, 0.0), den(1.0, 0.0);
    for (size_t j = 0; j < p.primitive.size(); ++j) {
        auto fe_plain = functional_equation_check(p.primitive[j], tcase.m);
        auto fe_tw = functional_equation_check(p.twisted[j], tcase.m);
        rep.constituents[j].fe_residual_plain = fe_plain.relative;
        rep.constituents[j].fe_residual_twisted = fe_tw.relative;
        rep.constituents[j].fe_sign_plain = fe_plain.sign;
        rep.constituents[j].fe_sign_twisted = fe_tw.sign;
        rep.max_fe_residual =
            std::max({rep.max_fe_residual, fe_plain.relative, fe_tw.relative});
        num *= l_value_numeric(p.twisted[j], (double)s);
        den *= l_value_numeric(p.primitive[j], (double)s);
    }
    std::complex<double> tau_pow = std::pow(gauss_sum(p.twist).embed(64), rep.dim);
    std::complex<double> ratio_numeric = num / (tau_pow * den);
    rep.ratio_numeric_residual =
        std::abs(rep.ratio.embed(64) - ratio_numeric) / std::abs(ratio_numeric);

    bool ok = rep.certificate_pass && rep.gauss_ratio_fixed && rep.eq123_witness &&
              rep.max_fe_residual <= kResidualTolerance &&
              rep.ratio_numeric_residual <= kResidualTolerance;
    rep.status = ok ? CaseStatus::Pass : CaseStatus::Fail;
    if (!ok) {
        std::ostringstream why;
        if (!rep.certificate_pass) why << "membership certificate failed; ";
        if (!rep.gauss_ratio_fixed) why << "gauss-ratio fixedness failed; ";
        if (!rep.eq123_witness) why << "restricted-product witness failed; ";
        if (rep.max_fe_residual > kResidualTolerance) why << "functional-equation residual too large; ";
        if (rep.ratio_numeric_residual > kResidualTolerance) why << "numeric ratio cross-check failed; ";
        rep.detail = why.str();
    }
    return rep;
}

SweepConfig parse_sweep_config_text(const std::string& text, const std::string& origin) {
    SweepConfig cfg;
    bool have_rho = false, have_twist = false, have_m = false, have_dim = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("sweep config " + origin + " line " +
                                    std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        try {
            if (key == "rho_modulus_max") {
                cfg.rho_modulus_max = std::stoll(value);
                have_rho = true;
            } else if (key == "twist_modulus_max") {
                cfg.twist_modulus_max = std::stoll(value);
                have_twist = true;
            } else if (key == "dim_max") {
                cfg.dim_max = std::stoi(value);
                have_dim = true;
            } else if (key == "m_list") {
                std::istringstream ms(value);
                std::string tok;
                while (std::getline(ms, tok, ',')) {
                    tok = trim(tok);
                    if (tok.empty()) continue;
                    int m = std::stoi(tok);
                    if (m >= 0) fail("m_list entries must be negative");
                    cfg.m_list.push_back(m);
                }
                have_m = true;
            } else {
                fail("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            fail("bad value for '" + key + "'");
        }
    }
    if (!(have_rho && have_twist && have_m && have_dim))
        throw std::invalid_argument(
            "sweep config " + origin +
            ": rho_modulus_max, twist_modulus_max, m_list, dim_max are all required");
    // empty ranges are allowed and produce an empty case list
    if (cfg.rho_modulus_max < 0 || cfg.twist_modulus_max < 0 || cfg.dim_max < 1 ||
        cfg.dim_max > 2)
        throw std::invalid_argument("sweep config " + origin + ": values out of range");
    return cfg;
}

SweepConfig parse_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("sweep config not found: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_sweep_config_text(ss.str(), path);
}

std::vector<TheoremCase> sweep_cases(const SweepConfig& config) {
    std::vector<std::string> twists;
    for (i64 f = 1; f <= config.twist_modulus_max; ++f)
        for (const auto& chi : DirichletCharacter::enumerate(f))
            if (chi.is_primitive() && chi.is_even()) twists.push_back(chi.label());

    std::vector<TheoremCase> cases;
    for (int dim = 1; dim <= config.dim_max; ++dim) {
        for (i64 n = 1; n <= config.rho_modulus_max; ++n) {
            auto chars = DirichletCharacter::enumerate(n);
            for (const auto& chi : chars) {
                if (!chi.is_primitive()) continue;
                std::vector<std::string> labels;
                if (dim == 1) {
                    labels = {chi.label()};
                } else {
                    DirichletCharacter conj = chi.conjugate();
                    if (conj.index() <= chi.index()) continue;  // one case per pair
                    labels = {chi.label(), conj.label()};
                }
                for (const auto& tl : twists)
                    for (int m : config.m_list) cases.push_back({n, labels, tl, m});
            }
        }
    }
    return cases;
}

std::vector<VerificationReport> run_sweep(const SweepConfig& config) {
    std::vector<VerificationReport> out;
    for (const auto& c : sweep_cases(config)) {
        // a broken case is recorded as a failure, never aborts the sweep
        try {
            out.push_back(run_case(c));
        } catch (const std::exception& e) {
            VerificationReport rep;
            rep.tcase = c;
            rep.dim = (int)c.constituent_labels.size();
            rep.status = CaseStatus::Fail;
            rep.detail = std::string("exception: ") + e.what();
            out.push_back(std::move(rep));
        }
    }
    return out;
}

nlohmann::ordered_json cyc_to_json(const CycNumber& a) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [k, c] : a.coeffs())
        terms.push_back(nlohmann::ordered_json::array({k, c.str()}));
    auto approx = a.embed(64);
    return nlohmann::ordered_json{{"level", a.level()},
                                  {"terms", std::move(terms)},
                                  {"text", a.str()},
                                  {"approx_re", approx.real()},
                                  {"approx_im", approx.imag()}};
}

nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["case"] = {{"level", rep.tcase.level},
                 {"constituents", rep.tcase.constituent_labels},
                 {"twist", rep.tcase.twist_label},
                 {"m", rep.tcase.m},
                 {"dim", rep.dim}};
    j["criticality"] = {{"m", rep.verdict.m},
                        {"critical", rep.verdict.critical},
                        {"condition", condition_name(rep.verdict.condition)}};
    j["status"] = status_name(rep.status);
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    if (rep.status == CaseStatus::Skipped) return j;

    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& r : rep.constituents) {
        recs.push_back({{"label", r.label},
                        {"primitive", r.primitive_label},
                        {"twisted", r.twisted_label},
                        {"conductor", r.conductor},
                        {"twisted_conductor", r.twisted_conductor},
                        {"tau", cyc_to_json(r.tau)},
                        {"tau_twisted", cyc_to_json(r.tau_twisted)},
                        {"l_bar_at_m", cyc_to_json(r.l_bar)},
                        {"l_bar_twisted_at_m", cyc_to_json(r.l_bar_twisted)},
                        {"fe_residual", r.fe_residual_plain},
                        {"fe_residual_twisted", r.fe_residual_twisted},
                        {"fe_sign", r.fe_sign_plain},
                        {"fe_sign_twisted", r.fe_sign_twisted}});
    }
    j["constituents"] = std::move(recs);
    j["exact"] = {{"carrier_rho", cyc_to_json(rep.carrier_rho)},
                  {"carrier_twisted", cyc_to_json(rep.carrier_twisted)},
                  {"alpha_equivalent", rep.alpha_equivalent.str()},
                  {"tau_twist_pow_dim", cyc_to_json(rep.tau_twist_pow_dim)},
                  {"ratio", cyc_to_json(rep.ratio)}};
    if (rep.ratio.is_rational()) j["exact"]["ratio_rational"] = rep.ratio.rational_value().str();
    if (rep.status == CaseStatus::Degenerate) return j;

    nlohmann::ordered_json cert = nlohmann::ordered_json::array();
    for (const auto& e : rep.certificate)
        cert.push_back({{"d", e.d}, {"fixed", e.fixed}});
    j["membership"] = {{"field_level", rep.fixed_field_modulus},
                       {"entries", std::move(cert)},
                       {"pass", rep.certificate_pass}};
    j["gauss_ratio_fixed"] = rep.gauss_ratio_fixed;
    j["eq123_witness"] = rep.eq123_witness;
    j["max_fe_residual"] = rep.max_fe_residual;
    j["ratio_numeric_residual"] = rep.ratio_numeric_residual;
    return j;
}

nlohmann::ordered_json sweep_to_json(const SweepConfig& config,
                                     const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json ms = nlohmann::ordered_json::array();
    for (int m : config.m_list) ms.push_back(m);
    int pass = 0, fail = 0, skipped = 0, degenerate = 0;
    nlohmann::ordered_json rs = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        rs.push_back(report_to_json(r));
        switch (r.status) {
            case CaseStatus::Pass: ++pass; break;
            case CaseStatus::Fail: ++fail; break;
            case CaseStatus::Skipped: ++skipped; break;
            default: ++degenerate; break;
        }
    }
    return nlohmann::ordered_json{
        {"schema", "lcert-sweep-v1"},
        {"config",
         {{"rho_modulus_max", config.rho_modulus_max},
          {"twist_modulus_max", config.twist_modulus_max},
          {"m_list", std::move(ms)},
          {"dim_max", config.dim_max}}},
        {"summary",
         {{"cases", reports.size()},
          {"pass", pass},
          {"fail", fail},
          {"skipped", skipped},
          {"degenerate", degenerate}}},
        {"reports", std::move(rs)}};
}

}  // namespace lcert
