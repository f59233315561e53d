// Acceptance suite: one line per criterion, exact equality throughout.
#include <chrono>
#include <iostream>
#include <string>

#include "ysnb/formulas.hpp"
#include "ysnb/oracle.hpp"
#include "ysnb/seminormal.hpp"

using namespace ysnb;
using combinat::Partition;
using combinat::Tableau;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, long cases,
            const std::vector<std::string>& details, double seconds) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name << " ("
              << cases << " checks, " << std::fixed;
    std::cout.precision(1);
    std::cout << seconds << "s)\n";
    if (!ok) {
        ++g_failures;
        int shown = 0;
        for (const auto& d : details) {
            std::cout << "        " << d << "\n";
            if (++shown == 10) break;
        }
    }
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void run_sweep(int number, const std::string& name, const std::string& suite,
               const oracle::SweepLimits& limits) {
    Timer timer;
    oracle::SweepReport rep = oracle::sweep(suite, limits);
    report(number, name, rep.ok(), rep.cases, rep.failures, timer.seconds());
}

}  // namespace

int main() {
    {
        oracle::SweepLimits limits;
        limits.max_n = 5;
        run_sweep(1, "basis theorem: Garnir span rank and membership, n <= 5", "garnir-span",
                  limits);
    }
    {
        oracle::SweepLimits limits;
        limits.max_n = 6;
        limits.seeds = 5;
        run_sweep(2, "seminormal characterization: action table and random chains, n <= 6",
                  "action-property", limits);
    }
    {
        Timer timer;
        long cases = 0;
        std::vector<std::string> bad;
        for (int n = 1; n <= 7; ++n)
            for (const Partition& lambda : oracle::partitions_of(n)) {
                auto rows = seminormal::all_transition_rows(lambda);
                for (const auto& [s, fs] : rows) {
                    ++cases;
                    if (fs.coeff(s) != 1) bad.push_back("q_{s,s} != 1");
                    for (const auto& [t, q] : fs.coords())
                        if (!combinat::dominance_tableau_leq(s, t))
                            bad.push_back("support below s in dominance");
                }
            }
        report(3, "unitriangularity of the transition matrix, n <= 7", bad.empty(), cases, bad,
               timer.seconds());
    }
    {
        oracle::SweepLimits limits;
        limits.max_n = 8;
        limits.family = "add-one";
        run_sweep(4, "single-box formula and denominator vs recursion, |lambda| <= 8",
                  "formula-vs-recursion", limits);
    }
    {
        oracle::SweepLimits limits;
        limits.max_n = 0;
        limits.family = "two-row";
        limits.k = 6;
        limits.l = 0;
        limits.m = 4;
        run_sweep(5, "two-row formula and lcm denominator, k <= 6, l <= k, m <= 4",
                  "formula-vs-recursion", limits);
    }
    {
        oracle::SweepLimits limits;
        limits.max_n = 0;
        limits.family = "hook";
        limits.k = 5;
        limits.s = 3;
        limits.m = 3;
        run_sweep(6, "hook shapes: signs and denominator k+s, k <= 5, s <= 3, m <= 3",
                  "formula-vs-recursion", limits);
    }
    {
        Timer timer;
        oracle::SweepLimits limits;
        limits.k = 5;
        limits.l = 0;
        limits.s = 3;
        limits.m = 3;
        oracle::SweepReport rep = oracle::sweep("four-reductions", limits);
        std::vector<std::string> four, kls;
        for (const auto& f : rep.failures)
            (f.find("reduce_kls") != std::string::npos ? kls : four).push_back(f);
        double elapsed = timer.seconds();
        report(7, "four reduction identities on weights, k <= 5, s <= 3, m <= 3", four.empty(),
               rep.cases, four, elapsed);
        report(8, "k~ l~ s~ reduction preserves the denominator, same ranges", kls.empty(),
               rep.cases, kls, 0.0);
        // the big (k,l^s) shapes are not revisited; drop their memo tables
        specht::clear_straightening_cache();
        seminormal::clear_seminormal_cache();
    }
    {
        Timer timer;
        oracle::SweepLimits limits;
        limits.max_n = 9;
        limits.k = 7;
        limits.s = 3;
        oracle::SweepReport rep = oracle::sweep("divisibility", limits);
        std::vector<std::string> general, dispatch;
        for (const auto& f : rep.failures)
            (f.find("dispatch") != std::string::npos ? dispatch : general).push_back(f);
        double elapsed = timer.seconds();
        report(9, "truncation/row-removal D identities and divisibility bounds, |nu| <= 9",
               general.empty(), rep.cases, general, elapsed);
        report(11, "summary dispatch equals the recursion denominator, |nu| <= 9",
               dispatch.empty(), rep.cases, dispatch, 0.0);
    }
    {
        Timer timer;
        long cases = 0;
        std::vector<std::string> bad;
        for (int k = 2; k <= 3; ++k) {
            Partition lambda({k, 2, 2});
            Integer expected = Integer(k + 1) * Integer(k + 2);
            Integer d = formulas::recursion_denominator(lambda, combinat::add_first_row(lambda, 2));
            ++cases;
            if (d != expected) bad.push_back("recursion disagrees at k=" + std::to_string(k));
            ++cases;
            if (formulas::upper_bound_kls(k, 2, 2) != expected)
                bad.push_back("gcd upper bound not tight at k=" + std::to_string(k));
        }
        report(10, "worked example d_{(k,2,2)^2} = (k+1)(k+2), k in {2,3}", bad.empty(), cases,
               bad, timer.seconds());
    }
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED\n"
                                  : std::to_string(g_failures) + " CRITERIA FAILED\n");
    return g_failures == 0 ? 0 : 1;
}
