// Command-line front end: normalization, equality, curve-class evaluation,
// relation export, and the verification suites.
//
// Exit codes: 0 success, 1 verification/equality failure, 2 usage or parse
// errors.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qskein/qskein.hpp"

namespace {

struct print_options {
    bool as_json = false;
    bool at_q1 = false;
};

void add_print_flags(CLI::App* cmd, print_options& opts) {
    cmd->add_flag("--json", opts.as_json, "print the element as JSON");
    cmd->add_flag("--q1", opts.at_q1, "apply the q = 1 specialization before printing");
}

void print_elem(const qskein::algebra_elem& e, const print_options& opts) {
    qskein::algebra_elem out = e;
    if (opts.at_q1) {
        // rebuild from the classical image so printing stays uniform
        const qskein::classical_elem c = qskein::classicalize(e);
        out = qskein::algebra_elem(e.n());
        for (const auto& [w, coeff] : c.terms()) out.add_term(w, coeff);
    }
    if (opts.as_json)
        std::cout << qskein::to_json(out).dump(2) << "\n";
    else
        std::cout << qskein::to_text(out) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for the chord-generator skein algebra of punctured planes"};
    app.require_subcommand(1);

    int n = 0;
    std::string expr1, expr2, out_path, suite = "all", method = "closed", sign = "+";
    int vi = 0, vj = 0, vk = 0;
    int degree = 0;
    bool count_only = false;
    print_options opts;

    auto* cmd_normalize = app.add_subcommand("normalize", "reduce an expression to the basis");
    cmd_normalize->add_option("-n", n, "puncture count")->required();
    cmd_normalize->add_option("expr", expr1, "expression")->required();
    add_print_flags(cmd_normalize, opts);

    auto* cmd_eq = app.add_subcommand("eq", "exit 0 iff the two expressions are equal");
    cmd_eq->add_option("-n", n, "puncture count")->required();
    cmd_eq->add_option("expr1", expr1)->required();
    cmd_eq->add_option("expr2", expr2)->required();

    auto* cmd_gamma = app.add_subcommand("gamma", "outside arc class gamma_ij^±");
    cmd_gamma->add_option("-n", n, "puncture count")->required();
    cmd_gamma->add_option("sign", sign, "+ (clockwise) or - (counterclockwise)")
        ->check(CLI::IsMember({"+", "-"}));
    cmd_gamma->add_option("i", vi)->required();
    cmd_gamma->add_option("j", vj)->required();
    add_print_flags(cmd_gamma, opts);

    auto* cmd_delta = app.add_subcommand("delta", "big circle class");
    cmd_delta->add_option("-n", n, "puncture count")->required();
    cmd_delta->add_option("--method", method, "closed | inversion")
        ->check(CLI::IsMember({"closed", "inversion"}));
    add_print_flags(cmd_delta, opts);

    auto* cmd_eta = app.add_subcommand("eta", "eta_{ikj} recursion value");
    cmd_eta->add_option("-n", n, "puncture count")->required();
    cmd_eta->add_option("i", vi)->required();
    cmd_eta->add_option("k", vk)->required();
    cmd_eta->add_option("j", vj)->required();
    add_print_flags(cmd_eta, opts);

    auto* cmd_bar = app.add_subcommand("bar", "bar involution of an expression");
    cmd_bar->add_option("-n", n, "puncture count")->required();
    cmd_bar->add_option("expr", expr1)->required();
    add_print_flags(cmd_bar, opts);

    auto* cmd_export = app.add_subcommand("export-relations", "write the sphere ideal generators");
    cmd_export->add_option("-n", n, "puncture count")->required();
    cmd_export->add_option("-o,--output", out_path, "output file")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->add_option("-n", n, "puncture count")->required();
    cmd_verify->add_option("--suite", suite, "gamma|delta|master|confluence|classical|all")
        ->check(CLI::IsMember({"gamma", "delta", "master", "confluence", "classical", "all"}));

    auto* cmd_basis = app.add_subcommand("basis", "list basis words of a given degree");
    cmd_basis->add_option("-n", n, "puncture count")->required();
    cmd_basis->add_option("-d", degree, "degree")->required();
    cmd_basis->add_flag("--count", count_only, "print only the number of basis words");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_normalize->parsed()) {
            print_elem(qskein::normalize(qskein::parse_element(expr1, n)), opts);
        } else if (cmd_eq->parsed()) {
            const bool equal = qskein::equal_mod_relations(qskein::parse_element(expr1, n),
                                                           qskein::parse_element(expr2, n));
            std::cout << (equal ? "equal" : "different") << "\n";
            return equal ? 0 : 1;
        } else if (cmd_gamma->parsed()) {
            const auto g = sign == "+" ? qskein::gamma_plus(vi, vj, n)
                                       : qskein::gamma_plus(vj, vi, n);
            print_elem(qskein::normalize(g), opts);
        } else if (cmd_delta->parsed()) {
            print_elem(method == "closed" ? qskein::delta_closed(n)
                                          : qskein::delta_subset(qskein::full_set(n), n),
                       opts);
        } else if (cmd_eta->parsed()) {
            print_elem(qskein::normalize(qskein::eta(vi, vk, vj, n)), opts);
        } else if (cmd_bar->parsed()) {
            print_elem(qskein::normalize(qskein::bar(qskein::parse_element(expr1, n))), opts);
        } else if (cmd_export->parsed()) {
            qskein::export_relations(n, out_path);
            std::cout << "wrote " << out_path << "\n";
        } else if (cmd_verify->parsed()) {
            bool ok = true;
            for (const auto& r : qskein::run_suites(suite, n)) {
                std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail
                          << "\n";
                ok = ok && r.pass;
            }
            return ok ? 0 : 1;
        } else if (cmd_basis->parsed()) {
            const auto words = qskein::enumerate_basis(n, degree);
            if (count_only) {
                std::cout << words.size() << "\n";
            } else {
                for (const auto& w : words)
                    std::cout << qskein::to_text(
                                     qskein::algebra_elem::monomial(n, w, qskein::ring_elem::one(n)))
                              << "\n";
            }
        }
    } catch (const qskein::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
