#include "ysnb/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ysnb/formulas.hpp"
#include "ysnb/seminormal.hpp"

namespace ysnb::oracle {

using combinat::Composition;
using permalg::AlgebraElement;
using permalg::Permutation;
using specht::SpechtVector;

void TabloidVector::add(const Tableau& t, const Rational& c) {
    auto it = coords_.find(t);
    if (it == coords_.end()) {
        if (c != 0) coords_.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0) coords_.erase(it);
    }
}

namespace {

void gen_row_standard(const Partition& lambda, int row, std::vector<int> pool,
                      std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
    if (row > lambda.length()) {
        out.push_back(Tableau(rows));
        return;
    }
    int want = lambda.part(row);
    std::vector<int> pick(want);
    std::function<void(int, int)> choose = [&](int from, int depth) {
        if (depth == want) {
            std::vector<int> rest;
            std::vector<bool> used(pool.size(), false);
            for (int i = 0; i < depth; ++i) used[pick[i]] = true;
            rows[row - 1].clear();
            for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
                if (used[i])
                    rows[row - 1].push_back(pool[i]);
                else
                    rest.push_back(pool[i]);
            }
            gen_row_standard(lambda, row + 1, rest, rows, out);
            return;
        }
        for (int i = from; i < static_cast<int>(pool.size()); ++i) {
            pick[depth] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
}

}  // namespace

std::vector<Tableau> row_standard_tableaux(const Partition& lambda) {
    std::vector<int> pool(lambda.sum());
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<std::vector<int>> rows(lambda.length());
    std::vector<Tableau> out;
    gen_row_standard(lambda, 1, pool, rows, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// All c-element subsets of v.
std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& v, int c) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(pick.size()) == c) {
            out.push_back(pick);
            return;
        }
        for (int i = from; i < static_cast<int>(v.size()); ++i) {
            pick.push_back(v[i]);
            choose(i + 1);
            pick.pop_back();
        }
    };
    choose(0);
    return out;
}

Tableau swap_sets(const Tableau& t, int row_i, const std::vector<int>& take_from_below,
                  const std::vector<int>& take_from_above) {
    std::vector<std::vector<int>> rows = t.rows();
    auto& above = rows[row_i - 1];
    auto& below = rows[row_i];
    for (int x : take_from_above) above.erase(std::find(above.begin(), above.end(), x));
    for (int x : take_from_below) below.erase(std::find(below.begin(), below.end(), x));
    above.insert(above.end(), take_from_below.begin(), take_from_below.end());
    below.insert(below.end(), take_from_above.begin(), take_from_above.end());
    std::sort(above.begin(), above.end());
    std::sort(below.begin(), below.end());
    return Tableau(std::move(rows));
}

}  // namespace

std::vector<TabloidVector> garnir_relation_vectors(const Partition& lambda) {
    std::vector<TabloidVector> out;
    for (const Tableau& t : row_standard_tableaux(lambda)) {
        for (int i = 1; i < lambda.length(); ++i) {
            const auto& below = t.rows()[i];
            const auto& above = t.rows()[i - 1];
            for (int c = 1; c <= static_cast<int>(below.size()); ++c) {
                Rational sign((c % 2 == 0) ? 1 : -1);
                for (const auto& x : subsets_of_size(below, c)) {
                    TabloidVector v(lambda);
                    v.add(t, Rational(1));
                    for (const auto& y : subsets_of_size(above, c))
                        v.add(swap_sets(t, i, x, y), -sign);
                    out.push_back(std::move(v));
                }
            }
        }
    }
    return out;
}

void RationalSpan::eliminate(std::vector<Rational>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c == 0) continue;
        Rational factor = c;  // pivot entries are normalized to 1
        for (int j = 0; j < dim_; ++j)
            if (rows_[r][j] != 0) v[j] -= factor * rows_[r][j];
    }
}

bool RationalSpan::insert(std::vector<Rational> v) {
    eliminate(v);
    int pivot = -1;
    for (int j = 0; j < dim_; ++j)
        if (v[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    Rational inv = Rational(1) / v[pivot];
    for (int j = 0; j < dim_; ++j) v[j] *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool RationalSpan::contains(std::vector<Rational> v) const {
    eliminate(v);
    for (const Rational& c : v)
        if (c != 0) return false;
    return true;
}

namespace {

struct TabloidIndex {
    std::vector<Tableau> tabs;
    std::map<Tableau, int> index;
    explicit TabloidIndex(const Partition& lambda) : tabs(row_standard_tableaux(lambda)) {
        for (int i = 0; i < static_cast<int>(tabs.size()); ++i) index.emplace(tabs[i], i);
    }
    std::vector<Rational> dense(const TabloidVector& v) const {
        std::vector<Rational> out(tabs.size(), Rational(0));
        for (const auto& [t, c] : v.coords()) out[index.at(t)] = c;
        return out;
    }
};

RationalSpan garnir_span(const Partition& lambda, const TabloidIndex& ix) {
    RationalSpan span(static_cast<int>(ix.tabs.size()));
    for (const TabloidVector& rel : garnir_relation_vectors(lambda)) span.insert(ix.dense(rel));
    return span;
}

}  // namespace

bool straightening_consistent(const Partition& lambda) {
    TabloidIndex ix(lambda);
    RationalSpan span = garnir_span(lambda, ix);
    Integer expected = combinat::hook_length_count(lambda);
    if (Integer(static_cast<long>(ix.tabs.size()) - span.rank()) != expected) return false;
    for (const Tableau& t : ix.tabs) {
        TabloidVector diff(lambda);
        diff.add(t, Rational(1));
        const specht::SpechtVector expansion = specht::polytabloid(t);
        for (const auto& [s, c] : expansion.coords()) diff.add(s, -c);
        if (!span.contains(ix.dense(diff))) return false;
    }
    return true;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

void gen_sub(const Partition& nu, int row, int prev, std::vector<int>& cur,
             std::vector<Partition>& out) {
    if (!cur.empty()) out.push_back(Partition(cur));
    if (row > nu.length()) return;
    for (int p = std::min(prev, nu.part(row)); p >= 1; --p) {
        cur.push_back(p);
        gen_sub(nu, row + 1, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n <= 0) return out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> sub_partitions(const Partition& nu) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_sub(nu, 1, nu.sum(), cur, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::string show(const Partition& p) {
    std::ostringstream os;
    for (int i = 1; i <= p.length(); ++i) os << (i > 1 ? "," : "") << p.part(i);
    return os.str();
}

std::string show(const Tableau& t) {
    std::ostringstream os;
    os << "[";
    for (int a = 0; a < t.n_rows(); ++a) {
        os << (a ? "|" : "");
        for (std::size_t b = 0; b < t.rows()[a].size(); ++b)
            os << (b ? "," : "") << t.rows()[a][b];
    }
    os << "]";
    return os.str();
}

// Generators appearing in reduced words of w: i with w([1,i]) != [1,i].
std::vector<bool> coxeter_support(const Permutation& w) {
    std::vector<bool> in(w.n() + 1, false);
    int run_max = 0;
    for (int i = 1; i < w.n(); ++i) {
        run_max = std::max(run_max, w.of(i));
        in[i] = run_max != i;
    }
    return in;
}

struct Sweeper {
    SweepReport report;
    bool log = false;
    void fail(const std::string& what) { report.failures.push_back(what); }
    void check(bool ok, const std::string& what) {
        ++report.cases;
        if (log) report.case_log.push_back({what, ok});
        if (!ok) fail(what);
    }
};

void sweep_garnir_span(const SweepLimits& limits, Sweeper& sw) {
    for (int n = 1; n <= limits.max_n; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            TabloidIndex ix(lambda);
            RationalSpan span = garnir_span(lambda, ix);
            long dim = static_cast<long>(ix.tabs.size());
            Integer stab = combinat::hook_length_count(lambda);
            sw.check(Integer(dim - span.rank()) == stab,
                     "rank identity for " + show(lambda));
            sw.check(static_cast<long>(combinat::enumerate_standard(lambda).size()) ==
                         stab.get_si(),
                     "hook-length count vs enumeration for " + show(lambda));
            for (const Tableau& t : ix.tabs) {
                TabloidVector diff(lambda);
                diff.add(t, Rational(1));
                const SpechtVector expansion = specht::polytabloid(t);
                for (const auto& [s, c] : expansion.coords()) {
                    diff.add(s, -c);
                    if (denominator(c) != 1)
                        sw.fail("non-integral straightening coefficient at " + show(t));
                }
                sw.check(span.contains(ix.dense(diff)),
                         "Garnir-span membership for straightened " + show(t));
            }
        }
}

void sweep_action_property(const SweepLimits& limits, Sweeper& sw) {
    std::mt19937_64 rng(limits.seed);
    for (int n = 1; n <= limits.max_n; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            auto rows = seminormal::all_transition_rows(lambda);
            sw.check(Integer(static_cast<long>(rows.size())) ==
                         combinat::hook_length_count(lambda),
                     "transition matrix row count for " + show(lambda));
            for (const auto& [s, fs] : rows) {
                sw.check(fs.coeff(s) == 1, "unit diagonal entry at " + show(s));
                bool tri = true, parab = true;
                auto support_s = coxeter_support(permalg::d_of(s));
                for (const auto& [t, q] : fs.coords()) {
                    if (!combinat::dominance_tableau_leq(s, t)) tri = false;
                    auto support_t = coxeter_support(permalg::d_of(t));
                    for (int i = 1; i < n; ++i)
                        if (support_t[i] && !support_s[i]) parab = false;
                }
                sw.check(tri, "unitriangular support at " + show(s));
                sw.check(parab, "parabolic support at " + show(s));
                for (int i = 1; i < n; ++i)
                    sw.check(seminormal::seminormal_action_check(s, i),
                             "action identity at " + show(s) + ", i=" + std::to_string(i));
                for (int r = 0; r < limits.seeds; ++r) {
                    auto chain = seminormal::random_chain(s, rng);
                    sw.check(seminormal::seminormal_vector_along(s, chain) == fs,
                             "chain independence at " + show(s));
                }
            }
        }
}

void sweep_formula_vs_recursion(const SweepLimits& limits, Sweeper& sw) {
    bool addone = limits.family.empty() || limits.family == "add-one";
    bool tworow = limits.family.empty() || limits.family == "two-row";
    bool hook = limits.family.empty() || limits.family == "hook";
    if (addone)
        for (int n = 1; n <= limits.max_n; ++n)
            for (const Partition& lambda : partitions_of(n)) {
                Partition nu = combinat::add_first_row(lambda, 1);
                SpechtVector recursion =
                    seminormal::seminormal_vector(combinat::up_arrow_initial(lambda, nu));
                sw.check(formulas::f_add_one(lambda) == recursion,
                         "single-box formula vs recursion for " + show(lambda));
                sw.check(seminormal::uparrow_vector(lambda, nu) == recursion,
                         "staged up-arrow vs recursion for " + show(lambda));
                sw.check(formulas::denom_add_one(lambda) ==
                             specht::vector_denominator(recursion),
                         "single-box denominator vs recursion for " + show(lambda));
            }
    if (tworow)
        for (int k = 1; k <= limits.k; ++k)
            for (int l = 1; l <= (limits.l > 0 ? std::min(limits.l, k) : k); ++l)
                for (int m = 1; m <= limits.m; ++m) {
                    Partition lambda({k, l});
                    SpechtVector staged =
                        seminormal::uparrow_vector(lambda, combinat::add_first_row(lambda, m));
                    sw.check(formulas::f_two_row(k, l, m) == staged,
                             "two-row formula vs recursion at k=" + std::to_string(k) +
                                 " l=" + std::to_string(l) + " m=" + std::to_string(m));
                    sw.check(formulas::denom_two_row(k, l, m) ==
                                 specht::vector_denominator(staged),
                             "two-row denominator vs recursion at k=" + std::to_string(k) +
                                 " l=" + std::to_string(l) + " m=" + std::to_string(m));
                }
    if (hook)
        for (int k = 1; k <= limits.k; ++k)
            for (int s = 1; s <= limits.s; ++s)
                for (int m = 1; m <= limits.m; ++m) {
                    std::vector<int> p{k};
                    for (int i = 0; i < s; ++i) p.push_back(1);
                    Partition lambda(p);
                    SpechtVector staged =
                        seminormal::uparrow_vector(lambda, combinat::add_first_row(lambda, m));
                    sw.check(formulas::f_hook(k, s, m) == staged,
                             "hook formula vs recursion at k=" + std::to_string(k) +
                                 " s=" + std::to_string(s) + " m=" + std::to_string(m));
                    sw.check(specht::vector_denominator(staged) == Integer(k + s),
                             "hook denominator k+s at k=" + std::to_string(k) +
                                 " s=" + std::to_string(s) + " m=" + std::to_string(m));
                }
}

void sweep_four_reductions(const SweepLimits& limits, Sweeper& sw) {
    auto run_tuple = [&](int k, int l, int s, int m) {
        sw.check(formulas::check_four_reductions(k, l, s, m),
                 "four-reduction identities at (" + std::to_string(k) + "," +
                     std::to_string(l) + "," + std::to_string(s) + "," + std::to_string(m) + ")");
        formulas::KlsReduction red = formulas::reduce_kls(k, l, s, m);
        std::vector<int> p{k};
        for (int i = 0; i < s; ++i) p.push_back(l);
        std::vector<int> pr{red.k_tilde};
        for (int i = 0; i < red.s_tilde; ++i) pr.push_back(red.l_tilde);
        sw.check(red.k_tilde >= red.l_tilde && red.l_tilde >= red.s_tilde,
                 "reduce_kls parameter ordering");
        Partition lam(p), lam_red(pr);
        Integer d1 = formulas::recursion_denominator(lam, combinat::add_first_row(lam, m));
        Integer d2 = formulas::recursion_denominator(lam_red,
                                                     combinat::add_first_row(lam_red, red.l_tilde));
        sw.check(d1 == d2, "reduce_kls denominator preserved at (" + std::to_string(k) + "," +
                               std::to_string(l) + "," + std::to_string(s) + "," +
                               std::to_string(m) + ")");
    };
    if (limits.single_tuple) {
        run_tuple(limits.k, limits.l, limits.s, limits.m);
        return;
    }
    for (int k = 1; k <= limits.k; ++k)
        for (int l = 1; l <= (limits.l > 0 ? std::min(limits.l, k) : k); ++l)
            for (int s = 1; s <= limits.s; ++s)
                for (int m = 1; m <= limits.m; ++m) run_tuple(k, l, s, m);
}

void sweep_transport(const SweepLimits& limits, Sweeper& sw) {
    for (int n = 2; n <= limits.max_n; ++n)
        for (const Partition& nu : partitions_of(n))
            for (const Partition& lambda : sub_partitions(nu)) {
                if (lambda == nu) continue;
                SpechtVector pure =
                    seminormal::seminormal_vector(combinat::up_arrow_initial(lambda, nu));
                sw.check(seminormal::uparrow_vector(lambda, nu) == pure,
                         "staged vs pure recursion for " + show(lambda) + " in " + show(nu));
                for (int m = 1; m <= nu.part(1) - lambda.part(1); ++m) {
                    Partition mid = combinat::add_first_row(lambda, m);
                    AlgebraElement d =
                        seminormal::D_element(combinat::up_arrow_initial(lambda, mid));
                    SpechtVector rhs = specht::act_alg(permalg::extend(d, n),
                                                       seminormal::uparrow_vector(mid, nu));
                    sw.check(pure == rhs, "transport along first-row growth for " + show(lambda) + " in " +
                                              show(nu) + ", m=" + std::to_string(m));
                }
                int r = lambda.length();
                bool first_row_only = nu.length() == r || lambda.part(1) < nu.part(1);
                for (int i = 2; i <= r; ++i)
                    if (nu.part(i) != lambda.part(i)) first_row_only = false;
                if (first_row_only && nu.length() <= r && r >= 3) {
                    int m0 = nu.part(1) - lambda.part(1);
                    for (int i = 2; i <= r - 1; ++i) {
                        std::vector<int> up{lambda.part(1) + i - 1};
                        for (int j = i + 1; j <= r; ++j) up.push_back(lambda.part(j));
                        std::vector<int> low;
                        for (int j = 1; j <= i; ++j) low.push_back(lambda.part(j));
                        Partition lam_i(up), lam_le(low);
                        int z = lambda.sum() - lam_i.sum();
                        AlgebraElement d1 = seminormal::D_element(
                            combinat::up_arrow_initial(lam_i, combinat::add_first_row(lam_i, m0)));
                        SpechtVector t_vec = seminormal::uparrow_vector(lam_le, nu);
                        SpechtVector rhs =
                            specht::act_alg(permalg::extend(permalg::shift(d1, z), n), t_vec);
                        sw.check(pure == rhs, "transport along the row split for " + show(lambda) + "+(" +
                                                  std::to_string(m0) + "), i=" + std::to_string(i));
                    }
                }
            }
}

void sweep_divisibility(const SweepLimits& limits, Sweeper& sw) {
    for (int n = 1; n <= limits.max_n; ++n)
        for (const Partition& nu : partitions_of(n))
            for (const Partition& lambda : sub_partitions(nu)) {
                AlgebraElement d_full =
                    seminormal::D_element(combinat::up_arrow_initial(lambda, nu));
                Integer d = formulas::recursion_denominator(lambda, nu);
                Partition trunc = formulas::denom_truncate(lambda, nu);
                if (trunc != nu) {
                    AlgebraElement d_small =
                        seminormal::D_element(combinat::up_arrow_initial(lambda, trunc));
                    sw.check(permalg::extend(d_small, n) == d_full,
                             "truncation D-equality for " + show(lambda) + " in " + show(nu));
                }
                if (lambda.length() >= 2 && lambda.part(1) == nu.part(1)) {
                    auto [lam2, nu2] = formulas::denom_row_removal(lambda, nu);
                    AlgebraElement d_small =
                        seminormal::D_element(combinat::up_arrow_initial(lam2, nu2));
                    sw.check(permalg::shift(d_small, lambda.part(1)) == d_full,
                             "row-removal D-shift for " + show(lambda) + " in " + show(nu));
                }
                for (int m = 1; m <= nu.part(1) - lambda.part(1); ++m) {
                    auto [left, right] = formulas::divisibility_split_m(lambda, nu, m);
                    sw.check(divides(left, right), "first-row split divisibility for " +
                                                       show(lambda) + " in " + show(nu) +
                                                       ", m=" + std::to_string(m));
                }
                bool pure_first_row = nu.length() <= lambda.length();
                for (int i = 2; i <= lambda.length() && pure_first_row; ++i)
                    pure_first_row = nu.part(i) == lambda.part(i);
                if (pure_first_row && nu.part(1) > lambda.part(1)) {
                    int m0 = nu.part(1) - lambda.part(1);
                    for (int i = 2; i <= lambda.length() - 1; ++i) {
                        auto [left, right] = formulas::divisibility_split_i(lambda, m0, i);
                        sw.check(divides(left, right),
                                 "row split divisibility for " + show(lambda) + "+(" +
                                     std::to_string(m0) + "), i=" + std::to_string(i));
                    }
                }
                sw.check(divides(d, formulas::denom_general_upper_bound(lambda, nu)),
                         "chain upper bound for " + show(lambda) + " in " + show(nu));
                formulas::DenominatorReport rep = formulas::summary_dispatch(lambda, nu);
                if (rep.value)
                    sw.check(*rep.value == d, "dispatch value vs recursion for " + show(lambda) + " in " +
                                                  show(nu) + " via " + formulas::route_name(rep.route));
                if (rep.bound) {
                    sw.check(divides(d, *rep.bound),
                             "dispatch bound divisibility for " + show(lambda) + " in " + show(nu));
                    if (rep.value)
                        sw.check(divides(*rep.value, *rep.bound),
                                 "dispatch value divides bound for " + show(lambda));
                }
                if (nu.sum() - lambda.sum() == 1) {
                    int row = 0;
                    for (int i = 1; i <= nu.length(); ++i)
                        if (nu.part(i) != lambda.part(i)) row = i;
                    sw.check(formulas::D_remove_one_node(nu, row) == d_full,
                             "single-node D formula for " + show(nu) +
                                 " at row " + std::to_string(row));
                    sw.check(formulas::denom_remove_node(nu, row) == d,
                             "single-node denominator for " + show(nu));
                }
            }
    for (int k = 1; k <= limits.k; ++k)
        for (int l = 1; l <= k; ++l)
            for (int s = 1; s <= std::min(l, limits.s); ++s) {
                std::vector<int> p{k};
                for (int i = 0; i < s; ++i) p.push_back(l);
                Partition lam(p);
                if (lam.sum() + l > limits.max_n) continue;
                Integer d = formulas::recursion_denominator(lam, combinat::add_first_row(lam, l));
                sw.check(divides(d, formulas::upper_bound_kls(k, l, s)),
                         "iterated gcd upper bound at (" + std::to_string(k) + "," +
                             std::to_string(l) + "," + std::to_string(s) + ")");
            }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"garnir-span",     "action-property", "formula-vs-recursion",
            "four-reductions", "transport",       "divisibility"};
}

SweepReport sweep(const std::string& suite, const SweepLimits& limits) {
    Sweeper sw;
    sw.report.suite = suite;
    sw.log = limits.log_cases;
    if (suite == "garnir-span")
        sweep_garnir_span(limits, sw);
    else if (suite == "action-property")
        sweep_action_property(limits, sw);
    else if (suite == "formula-vs-recursion")
        sweep_formula_vs_recursion(limits, sw);
    else if (suite == "four-reductions")
        sweep_four_reductions(limits, sw);
    else if (suite == "transport")
        sweep_transport(limits, sw);
    else if (suite == "divisibility")
        sweep_divisibility(limits, sw);
    else
        throw std::invalid_argument("unknown suite: " + suite);
    return sw.report;
}

}  // namespace ysnb::oracle
