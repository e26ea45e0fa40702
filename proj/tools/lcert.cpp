// Command-line front end: characters, Gauss sums, exact and numeric L-values,
// criticality, single-case verification, batch sweeps, and Brauer
// decompositions of corpus groups.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

#include "lcert/brauer.hpp"
#include "lcert/verifier.hpp"

using namespace lcert;

namespace {

int g_exit = 0;

std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    if (out.empty()) throw std::invalid_argument("empty character list");
    return out;
}

std::string cyc_display(const CycNumber& a) {
    auto v = a.embed(64);
    std::ostringstream os;
    os << a.str() << "  (level " << a.level() << ", ~" << v.real();
    if (std::abs(v.imag()) > 1e-12) os << (v.imag() < 0 ? " - " : " + ")
                                       << std::abs(v.imag()) << "i";
    os << ")";
    return os.str();
}

void write_json(const nlohmann::ordered_json& j, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

void cmd_chars(i64 modulus, bool even_only) {
    std::cout << "label\torder\tconductor\tparity\tprimitive\n";
    for (const auto& chi : DirichletCharacter::enumerate(modulus)) {
        if (even_only && !chi.is_even()) continue;
        std::cout << chi.label() << "\t" << chi.order() << "\t" << chi.conductor() << "\t"
                  << (chi.is_even() ? "+1" : "-1") << "\t"
                  << (chi.is_primitive() ? "yes" : "no") << "\n";
    }
}

void cmd_gauss(const std::string& label, i64 shift) {
    auto chi = DirichletCharacter::from_label(label);
    auto rec = gauss_sum_value(chi, shift);
    if (rec.character_label != rec.requested_label)
        std::cout << "note: " << rec.requested_label << " is imprimitive; using primitive form "
                  << rec.character_label << "\n";
    std::cout << "tau(" << rec.character_label << ", " << shift
              << ") = " << cyc_display(rec.value) << "\n";
}

void cmd_lvalue(const std::string& label, double at, bool numeric) {
    auto chi = DirichletCharacter::from_label(label).primitivize();
    if (numeric) {
        auto v = l_value_numeric(chi, at);
        std::cout << "L(" << chi.label() << ", " << at << ") ~ " << v.real();
        if (std::abs(v.imag()) > 1e-12)
            std::cout << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
        std::cout << "\n";
        return;
    }
    double rounded = std::nearbyint(at);
    if (at != rounded || rounded > 0)
        throw std::invalid_argument("exact L-values need an integer argument <= 0 (use --numeric for s > 1)");
    std::cout << "L(" << chi.label() << ", " << (long long)rounded
              << ") = " << cyc_display(l_value_nonpositive(chi, (int)rounded)) << "\n";
}

void cmd_critical(const std::string& labels_csv, int m) {
    std::vector<int> parities;
    std::cout << "constituents:";
    for (const auto& label : split_labels(labels_csv)) {
        auto chi = DirichletCharacter::from_label(label);
        parities.push_back(chi.parity());
        std::cout << " " << chi.label() << (chi.is_even() ? "(even)" : "(odd)");
    }
    std::cout << "\n";
    auto v = classify_criticality(parities, m);
    if (v.critical)
        std::cout << "m = " << m << " is critical (condition " << condition_name(v.condition)
                  << ")\n";
    else
        std::cout << "m = " << m << " is not critical\n";
}

void print_case_summary(const VerificationReport& rep) {
    std::cout << "case: rho = {";
    for (size_t i = 0; i < rep.tcase.constituent_labels.size(); ++i)
        std::cout << (i ? "," : "") << rep.tcase.constituent_labels[i];
    std::cout << "}, twist = " << rep.tcase.twist_label << ", m = " << rep.tcase.m
              << " -> " << status_name(rep.status);
    if (rep.status == CaseStatus::Pass || rep.status == CaseStatus::Fail) {
        std::cout << "  [certificate " << (rep.certificate_pass ? "ok" : "FAILED")
                  << ", gauss-ratio " << (rep.gauss_ratio_fixed ? "fixed" : "NOT FIXED")
                  << ", residual " << rep.max_fe_residual << "]";
    }
    if (!rep.detail.empty()) std::cout << "  (" << rep.detail << ")";
    std::cout << "\n";
}

void cmd_verify(const std::string& rho_csv, const std::string& twist_label, int m,
                const std::string& out_path) {
    auto labels = split_labels(rho_csv);
    i64 level = 1;
    for (const auto& l : labels)
        level = std::lcm(level, DirichletCharacter::from_label(l).modulus());
    TheoremCase tcase{level, labels, twist_label, m};
    VerificationReport rep = run_case(tcase);
    print_case_summary(rep);
    if (rep.status == CaseStatus::Pass || rep.status == CaseStatus::Fail) {
        std::cout << "  ratio R = " << cyc_display(rep.ratio) << "\n";
        if (rep.ratio.is_rational())
            std::cout << "  R is rational: " << rep.ratio.rational_value().str() << "\n";
        std::cout << "  fixed field level: " << rep.fixed_field_modulus
                  << ", certificate entries: " << rep.certificate.size() << "\n";
    }
    if (!out_path.empty()) write_json(report_to_json(rep), out_path);
    if (rep.status == CaseStatus::Fail) g_exit = 1;
}

void cmd_sweep(const std::string& config_path, const std::string& out_path) {
    SweepConfig cfg = parse_sweep_config(config_path);
    auto reports = run_sweep(cfg);
    int pass = 0, fail = 0, skipped = 0, degenerate = 0;
    for (const auto& rep : reports) {
        print_case_summary(rep);
        switch (rep.status) {
            case CaseStatus::Pass: ++pass; break;
            case CaseStatus::Fail: ++fail; break;
            case CaseStatus::Skipped: ++skipped; break;
            default: ++degenerate; break;
        }
    }
    std::cout << "total " << reports.size() << ": " << pass << " pass, " << fail << " fail, "
              << skipped << " skipped, " << degenerate << " degenerate\n";
    if (!out_path.empty()) write_json(sweep_to_json(cfg, reports), out_path);
    if (fail > 0) g_exit = 1;
}

void cmd_brauer(const std::string& group_path, int char_index) {
    FiniteGroup g = FiniteGroup::from_file(group_path);
    auto irr = irreducible_characters(g);
    if (char_index < 0 || char_index >= (int)irr.size())
        throw std::invalid_argument("character index out of range (group has " +
                                    std::to_string(irr.size()) + " irreducible characters)");
    const ClassFunction& chi = irr[char_index];
    std::cout << "group of order " << g.order() << " with " << g.class_count()
              << " conjugacy classes, " << irr.size() << " irreducible characters\n";
    std::cout << "character " << char_index << " values:";
    for (int c = 0; c < g.class_count(); ++c)
        std::cout << " [" << g.element_name(g.conjugacy_classes()[c][0])
                  << "] " << chi.value_on_class(c).str();
    std::cout << "\n";
    auto gens = brauer_generators(g);
    auto dec = brauer_decompose(chi, gens);
    std::cout << "decomposition into induced degree-one characters:\n";
    for (const auto& t : dec.terms) {
        const auto& gen = gens[t.generator_index];
        std::cout << "  " << t.coefficient << " * Ind from subgroup of order "
                  << gen.subgroup_order << " {";
        for (size_t i = 0; i < gen.subgroup_elements.size(); ++i)
            std::cout << (i ? " " : "") << g.element_name(gen.subgroup_elements[i]);
        std::cout << "}, character #" << t.character_index << "\n";
    }
    bool exact = reconstruct(g, gens, dec) == chi;
    long long degree = chi.dimension().rational_value().num().get_si();
    std::cout << "reconstruction exact: " << (exact ? "yes" : "NO")
              << ", degree identity: " << dec.index_weighted_degree(g, gens) << " = " << degree
              << "\n";
    if (!exact || dec.index_weighted_degree(g, gens) != degree) g_exit = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for twisted Dirichlet L-values"};
    app.require_subcommand(1);

    auto* chars = app.add_subcommand("chars", "list Dirichlet characters of a modulus");
    i64 chars_modulus = 1;
    bool chars_even = false;
    chars->add_option("--modulus", chars_modulus, "modulus q")->required();
    chars->add_flag("--even-only", chars_even, "restrict to even characters");
    chars->callback([&] { cmd_chars(chars_modulus, chars_even); });

    auto* gauss = app.add_subcommand("gauss", "exact Gauss sum of a character");
    std::string gauss_label;
    i64 gauss_shift = 1;
    gauss->add_option("--char", gauss_label, "character label q.k")->required();
    gauss->add_option("--shift", gauss_shift, "shift a in tau(chi, a)");
    gauss->callback([&] { cmd_gauss(gauss_label, gauss_shift); });

    auto* lvalue = app.add_subcommand("lvalue", "exact or numeric Dirichlet L-value");
    std::string lvalue_label;
    double lvalue_at = 0;
    bool lvalue_numeric = false;
    lvalue->add_option("--char", lvalue_label, "character label q.k")->required();
    lvalue->add_option("--at", lvalue_at, "argument (integer <= 0, or s > 1 with --numeric)")
        ->required();
    lvalue->add_flag("--numeric", lvalue_numeric, "numeric evaluation for s > 1");
    lvalue->callback([&] { cmd_lvalue(lvalue_label, lvalue_at, lvalue_numeric); });

    auto* critical = app.add_subcommand("critical", "criticality verdict for constituents");
    std::string critical_labels;
    int critical_m = -1;
    critical->add_option("--chars", critical_labels, "comma-separated labels q.k,q.k,...")
        ->required();
    critical->add_option("--m", critical_m, "non-positive integer argument")->required();
    critical->callback([&] { cmd_critical(critical_labels, critical_m); });

    auto* verify = app.add_subcommand("verify", "verify one twisting-identity case");
    std::string verify_rho, verify_twist, verify_out;
    int verify_m = -1;
    verify->add_option("--rho", verify_rho, "constituent labels q.k[,q.k...]")->required();
    verify->add_option("--twist", verify_twist, "even twist character label")->required();
    verify->add_option("--m", verify_m, "negative critical argument")->required();
    verify->add_option("--out", verify_out, "write the JSON report here");
    verify->callback([&] { cmd_verify(verify_rho, verify_twist, verify_m, verify_out); });

    auto* sweep = app.add_subcommand("sweep", "run a batch of cases from a config file");
    std::string sweep_config, sweep_out;
    sweep->add_option("--config", sweep_config, "plain-text config file")->required();
    sweep->add_option("--out", sweep_out, "write the JSON report document here");
    sweep->callback([&] { cmd_sweep(sweep_config, sweep_out); });

    auto* brauer = app.add_subcommand("brauer", "decompose an irreducible character");
    std::string brauer_group;
    int brauer_char = 0;
    brauer->add_option("--group", brauer_group, "group corpus file")->required();
    brauer->add_option("--char", brauer_char, "irreducible character index")->required();
    brauer->callback([&] { cmd_brauer(brauer_group, brauer_char); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
