#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ysnb/serialize.hpp"

namespace {

using namespace ysnb;
using serialize::json;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_cap(int boxes, int cap) {
    if (boxes > cap)
        throw CapExceeded("size " + std::to_string(boxes) + " exceeds cap " + std::to_string(cap));
}

std::string render_pretty(const seminormal::TransitionRow& row) {
    std::ostringstream os;
    os << serialize::pretty_tableau(row.source);
    os << "denominator: " << row.denominator.get_str() << "\n";
    for (const auto& [t, c] : row.coeffs.coords()) {
        os << numerator(c).get_str();
        if (denominator(c) != 1) os << "/" << denominator(c).get_str();
        os << "  ";
        bool first = true;
        for (const auto& r : t.rows()) {
            os << (first ? "[" : " | ");
            first = false;
            for (std::size_t b = 0; b < r.size(); ++b) os << (b ? "," : "") << r[b];
        }
        os << "]\n";
    }
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Young's seminormal basis vectors of dual Specht modules, their "
                 "transition coefficients and denominators, over exact rationals"};
    app.require_subcommand(1);

    // seminormal
    auto* cmd_semi = app.add_subcommand("seminormal", "transition row and D element of f_s");
    std::string semi_shape, semi_from, semi_tableau, semi_format = "json";
    bool semi_initial = false;
    int semi_cap = 18;
    cmd_semi->add_option("--shape", semi_shape, "shape nu, e.g. 3,1")->required();
    cmd_semi->add_flag("--initial", semi_initial, "use the initial tableau t^nu");
    cmd_semi->add_option("--uparrow-from", semi_from, "lambda: use the tableau lambda^nu");
    cmd_semi->add_option("--tableau", semi_tableau, "explicit tableau as JSON row arrays");
    cmd_semi->add_option("--format", semi_format, "json|pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    cmd_semi->add_option("--cap", semi_cap, "largest |nu| accepted");

    // denominator
    auto* cmd_den = app.add_subcommand("denominator", "denominator report for f_{lambda^nu}");
    std::string den_shape, den_nu;
    int den_cap = 12;
    cmd_den->add_option("--shape", den_shape, "lambda")->required();
    cmd_den->add_option("--nu", den_nu, "nu")->required();
    cmd_den->add_option("--cap", den_cap, "recursion fallback cap on |nu|");

    // formula evaluation
    auto* cmd_formula = app.add_subcommand("formula", "evaluate a closed formula");
    cmd_formula->require_subcommand(1);
    std::string f_shape, f_nu;
    int f_k = 0, f_l = 0, f_s = 0, f_m = 0;
    long f_a = 0, f_b = 0;
    int f_row = 0;
    auto* f_addone = cmd_formula->add_subcommand("add-one", "f_{lambda^1} and its denominator");
    f_addone->add_option("--shape", f_shape)->required();
    auto* f_tworow = cmd_formula->add_subcommand("two-row", "f_{(k,l)^m}");
    f_tworow->add_option("--k", f_k)->required();
    f_tworow->add_option("--l", f_l)->required();
    f_tworow->add_option("--m", f_m)->required();
    auto* f_hook = cmd_formula->add_subcommand("hook", "f_{(k,1^s)^m}");
    f_hook->add_option("--k", f_k)->required();
    f_hook->add_option("--s", f_s)->required();
    f_hook->add_option("--m", f_m)->required();
    auto* f_weights = cmd_formula->add_subcommand("weights", "weight coefficients a^{k,l}_{m,w}");
    f_weights->add_option("--k", f_k)->required();
    f_weights->add_option("--l", f_l)->required();
    f_weights->add_option("--s", f_s)->required();
    f_weights->add_option("--m", f_m)->required();
    auto* f_reduce = cmd_formula->add_subcommand("reduce-kls", "(k~, l~, s~) reduction");
    f_reduce->add_option("--k", f_k)->required();
    f_reduce->add_option("--l", f_l)->required();
    f_reduce->add_option("--s", f_s)->required();
    f_reduce->add_option("--m", f_m)->required();
    auto* f_lcm = cmd_formula->add_subcommand("lcm-binom", "lcm of binomials along a row");
    f_lcm->add_option("--a", f_a)->required();
    f_lcm->add_option("--b", f_b)->required();
    auto* f_bound = cmd_formula->add_subcommand("upper-bound", "gcd bound for d_{(k,l^s)^l}");
    f_bound->add_option("--k", f_k)->required();
    f_bound->add_option("--l", f_l)->required();
    f_bound->add_option("--s", f_s)->required();
    auto* f_chain = cmd_formula->add_subcommand("chain-bound", "node-chain divisor bound");
    f_chain->add_option("--shape", f_shape)->required();
    f_chain->add_option("--nu", f_nu)->required();
    auto* f_remove = cmd_formula->add_subcommand("remove-node", "single-node denominator");
    f_remove->add_option("--nu", f_nu)->required();
    f_remove->add_option("--row", f_row)->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a verification sweep");
    std::string suite;
    oracle::SweepLimits limits;
    cmd_verify->add_option("suite", suite, "one of: garnir-span action-property "
                                           "formula-vs-recursion four-reductions transport "
                                           "divisibility")
        ->required();
    cmd_verify->add_option("--max-n", limits.max_n, "size bound");
    cmd_verify->add_option("--seed", limits.seed, "seed for randomized chains");
    cmd_verify->add_option("--seeds", limits.seeds, "number of randomized chains");
    auto* opt_k = cmd_verify->add_option("--k", limits.k);
    auto* opt_l = cmd_verify->add_option("--l", limits.l);
    auto* opt_s = cmd_verify->add_option("--s", limits.s);
    auto* opt_m = cmd_verify->add_option("--m", limits.m);
    cmd_verify->add_option("--family", limits.family,
                           "formula-vs-recursion: add-one|two-row|hook");
    cmd_verify->add_flag("--log-cases", limits.log_cases, "print one JSON line per case");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "standard or colour-semistandard tableaux");
    std::string enum_shape, enum_nu;
    cmd_enum->add_option("--shape", enum_shape, "lambda")->required();
    cmd_enum->add_option("--nu", enum_nu, "enumerate SSTab(lambda; nu-lambda) instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_semi->parsed()) {
            combinat::Partition nu = serialize::parse_partition(semi_shape);
            require_cap(nu.sum(), semi_cap);
            seminormal::TransitionRow row;
            if (semi_initial) {
                row = seminormal::transition_row(combinat::initial_tableau(nu));
            } else if (!semi_from.empty()) {
                combinat::Partition lambda = serialize::parse_partition(semi_from);
                specht::SpechtVector v = seminormal::uparrow_vector(lambda, nu);
                row = seminormal::TransitionRow{combinat::up_arrow_initial(lambda, nu), v,
                                                specht::vector_denominator(v)};
            } else if (!semi_tableau.empty()) {
                combinat::Tableau t = serialize::parse_tableau(semi_tableau);
                if (t.shape() != nu.as_composition())
                    throw std::invalid_argument("tableau does not have shape --shape");
                row = seminormal::transition_row(t);
            } else {
                throw std::invalid_argument("need one of --initial, --uparrow-from, --tableau");
            }
            if (semi_format == "pretty") {
                std::cout << render_pretty(row);
            } else {
                json out = serialize::to_json(row);
                permalg::AlgebraElement d(row.source.size());
                for (const auto& [t, q] : row.coeffs.coords()) d.add(permalg::d_of(t), q);
                out["d_element"] = serialize::to_json(d);
                std::cout << out.dump() << "\n";
            }
        } else if (cmd_den->parsed()) {
            combinat::Partition lambda = serialize::parse_partition(den_shape);
            combinat::Partition nu = serialize::parse_partition(den_nu);
            json out = serialize::to_json(formulas::summary_dispatch(lambda, nu, den_cap));
            out["lambda"] = serialize::partition_string(lambda);
            out["nu"] = serialize::partition_string(nu);
            std::cout << out.dump() << "\n";
        } else if (cmd_formula->parsed()) {
            json out;
            if (f_addone->parsed()) {
                combinat::Partition lambda = serialize::parse_partition(f_shape);
                out["vector"] = serialize::to_json(formulas::f_add_one(lambda));
                out["denominator"] = formulas::denom_add_one(lambda).get_str();
            } else if (f_tworow->parsed()) {
                out["vector"] = serialize::to_json(formulas::f_two_row(f_k, f_l, f_m));
                out["denominator"] = formulas::denom_two_row(f_k, f_l, f_m).get_str();
            } else if (f_hook->parsed()) {
                out["vector"] = serialize::to_json(formulas::f_hook(f_k, f_s, f_m));
                out["denominator"] = Integer(f_k + f_s).get_str();
            } else if (f_weights->parsed()) {
                json terms = json::array();
                for (const auto& [w, c] : formulas::weights_kls(f_k, f_l, f_s, f_m)) {
                    json term;
                    term["weight"] = w.entries;
                    term["num"] = numerator(c).get_str();
                    term["den"] = denominator(c).get_str();
                    terms.push_back(std::move(term));
                }
                out["weights"] = std::move(terms);
            } else if (f_reduce->parsed()) {
                formulas::KlsReduction red = formulas::reduce_kls(f_k, f_l, f_s, f_m);
                out["k"] = red.k_tilde;
                out["l"] = red.l_tilde;
                out["s"] = red.s_tilde;
            } else if (f_lcm->parsed()) {
                out["value"] = formulas::lcm_binom(f_a, f_b).get_str();
            } else if (f_bound->parsed()) {
                out["value"] = formulas::upper_bound_kls(f_k, f_l, f_s).get_str();
            } else if (f_chain->parsed()) {
                out["value"] = formulas::denom_general_upper_bound(
                                   serialize::parse_partition(f_shape),
                                   serialize::parse_partition(f_nu))
                                   .get_str();
            } else if (f_remove->parsed()) {
                combinat::Partition nu = serialize::parse_partition(f_nu);
                out["value"] = formulas::denom_remove_node(nu, f_row).get_str();
                out["d_element"] = serialize::to_json(formulas::D_remove_one_node(nu, f_row));
            }
            std::cout << out.dump() << "\n";
        } else if (cmd_verify->parsed()) {
            if (suite == "four-reductions" && opt_k->count() && opt_l->count() && opt_s->count() &&
                opt_m->count())
                limits.single_tuple = true;
            oracle::SweepReport report = oracle::sweep(suite, limits);
            for (const auto& [name, ok] : report.case_log) {
                json line;
                line["case"] = name;
                line["ok"] = ok;
                std::cout << line.dump() << "\n";
            }
            std::cout << serialize::to_json(report).dump() << "\n";
            for (const auto& f : report.failures) std::cerr << "FAIL " << f << "\n";
            return report.ok() ? 0 : 1;
        } else if (cmd_enum->parsed()) {
            combinat::Partition lambda = serialize::parse_partition(enum_shape);
            std::vector<combinat::Tableau> tabs;
            if (enum_nu.empty())
                tabs = combinat::enumerate_standard(lambda);
            else
                tabs = combinat::colour_semistandard_tableaux(lambda,
                                                              serialize::parse_partition(enum_nu));
            json out;
            out["count"] = tabs.size();
            json list = json::array();
            for (const auto& t : tabs) list.push_back(serialize::to_json(t));
            out["tableaux"] = std::move(list);
            std::cout << out.dump() << "\n";
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
