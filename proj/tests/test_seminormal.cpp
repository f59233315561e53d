#include <doctest.h>

#include <random>
#include <thread>

#include "ysnb/oracle.hpp"
#include "ysnb/seminormal.hpp"

using namespace ysnb;
using combinat::Partition;
using combinat::Tableau;
using permalg::AlgebraElement;
using permalg::Permutation;
using specht::SpechtVector;

TEST_CASE("chains to the initial tableau") {
    Partition l21({2, 1});
    CHECK(seminormal::chain_to_initial(combinat::initial_tableau(l21)).empty());
    CHECK(seminormal::chain_to_initial(Tableau({{1, 3}, {2}})) == std::vector<int>{2});
    CHECK(seminormal::chain_to_initial(Tableau({{1, 2, 4}, {3}})) == std::vector<int>{3});
    for (const Partition& lambda : oracle::partitions_of(6))
        for (const Tableau& s : combinat::enumerate_standard(lambda)) {
            // walking the chain from t^lambda must stay standard and descend
            Tableau u = combinat::initial_tableau(lambda);
            for (int i : seminormal::chain_to_initial(s)) {
                Tableau v = permalg::act_on_tableau(Permutation::basic(u.size(), i), u);
                CHECK(v.is_standard());
                CHECK(combinat::dominance_tableau_leq(v, u));
                u = v;
            }
            CHECK(u == s);
        }
}

TEST_CASE("seminormal vectors on small shapes") {
    Partition l21({2, 1});
    Tableau t0 = combinat::initial_tableau(l21);
    CHECK(seminormal::seminormal_vector(t0) == SpechtVector::unit(t0));

    Tableau s({{1, 3}, {2}});
    SpechtVector fs = seminormal::seminormal_vector(s);
    CHECK(fs.coeff(s) == 1);
    CHECK(fs.coeff(t0) == Rational(1, 2));
    CHECK(fs.term_count() == 2);

    Tableau s31({{1, 2, 4}, {3}});
    SpechtVector f31 = seminormal::seminormal_vector(s31);
    CHECK(f31.coeff(s31) == 1);
    CHECK(f31.coeff(Tableau({{1, 2, 3}, {4}})) == Rational(1, 3));
    CHECK(f31.term_count() == 2);
}

TEST_CASE("transition rows and denominators") {
    CHECK(seminormal::transition_row(combinat::initial_tableau(Partition({3, 2}))).denominator ==
          1);
    CHECK(seminormal::transition_row(Tableau({{1, 3}, {2}})).denominator == 2);
    CHECK(seminormal::transition_row(
              combinat::up_arrow_initial(Partition({2, 1}), Partition({3, 1})))
              .denominator == 3);
}

TEST_CASE("D elements") {
    Partition l21({2, 1});
    CHECK(seminormal::D_element(combinat::initial_tableau(l21)) == AlgebraElement::unit(3));
    AlgebraElement d = seminormal::D_element(Tableau({{1, 3}, {2}}));
    CHECK(d.coeff(Permutation::transposition(3, 2, 3)) == 1);
    CHECK(d.coeff(Permutation::identity(3)) == Rational(1, 2));
    CHECK(d.term_count() == 2);
}

TEST_CASE("f_s = D(s) e_{t^lambda}") {
    for (int n = 2; n <= 5; ++n)
        for (const Partition& lambda : oracle::partitions_of(n)) {
            SpechtVector e0 = SpechtVector::unit(combinat::initial_tableau(lambda));
            for (const Tableau& s : combinat::enumerate_standard(lambda))
                CHECK(specht::act_alg(seminormal::D_element(s), e0) ==
                      seminormal::seminormal_vector(s));
        }
}

TEST_CASE("action table branches") {
    CHECK(seminormal::seminormal_action_check(combinat::initial_tableau(Partition({2})), 1));
    CHECK(seminormal::seminormal_action_check(combinat::initial_tableau(Partition({1, 1})), 1));
    CHECK(seminormal::seminormal_action_check(Tableau({{1, 3}, {2}}), 2));
}

TEST_CASE("non-standard inputs are rejected") {
    CHECK_THROWS_AS(seminormal::seminormal_vector(Tableau({{1, 3}, {2, 4, 5}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(seminormal::chain_to_initial(Tableau({{2, 1}, {3}})), std::invalid_argument);
    CHECK_THROWS_AS(seminormal::seminormal_vector_along(Tableau({{1, 3}, {2}}), {1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(seminormal::uparrow_vector(combinat::Partition({3, 1}),
                                               combinat::Partition({2, 2})),
                    std::invalid_argument);
}

TEST_CASE("concurrent callers share the memo caches safely") {
    specht::clear_straightening_cache();
    seminormal::clear_seminormal_cache();
    Partition lambda({3, 2, 1});
    auto tabs = combinat::enumerate_standard(lambda);
    std::vector<SpechtVector> results(tabs.size());
    std::vector<std::thread> workers;
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < tabs.size(); i += 4)
                results[i] = seminormal::seminormal_vector(tabs[i]);
        });
    for (auto& th : workers) th.join();
    auto rows = seminormal::all_transition_rows(lambda);
    for (std::size_t i = 0; i < tabs.size(); ++i) CHECK(results[i] == rows.at(tabs[i]));
}

TEST_CASE("randomized chains agree with the canonical one") {
    std::mt19937_64 rng(5);
    for (const Partition& lambda : oracle::partitions_of(5))
        for (const Tableau& s : combinat::enumerate_standard(lambda)) {
            SpechtVector expect = seminormal::seminormal_vector(s);
            CHECK(seminormal::seminormal_vector_along(s, seminormal::chain_to_initial(s)) ==
                  expect);
            for (int trial = 0; trial < 3; ++trial)
                CHECK(seminormal::seminormal_vector_along(
                          s, seminormal::random_chain(s, rng)) == expect);
        }
}

TEST_CASE("randomized chains at seven boxes") {
    std::mt19937_64 rng(11);
    for (const Partition& lambda : oracle::partitions_of(7))
        for (const Tableau& s : combinat::enumerate_standard(lambda))
            CHECK(seminormal::seminormal_vector_along(s, seminormal::random_chain(s, rng)) ==
                  seminormal::seminormal_vector(s));
}

TEST_CASE("transport identities up to seven boxes") {
    oracle::SweepLimits limits;
    limits.max_n = 7;
    oracle::SweepReport rep = oracle::sweep("transport", limits);
    CHECK(rep.ok());
    CHECK(rep.cases > 0);
}

TEST_CASE("staged up-arrow vectors match the plain recursion") {
    for (int n = 2; n <= 6; ++n)
        for (const Partition& nu : oracle::partitions_of(n))
            for (const Partition& lambda : oracle::sub_partitions(nu))
                CHECK(seminormal::uparrow_vector(lambda, nu) ==
                      seminormal::seminormal_vector(combinat::up_arrow_initial(lambda, nu)));
}

TEST_CASE("batch rows agree with the memoized recursion") {
    for (const Partition& lambda : oracle::partitions_of(5)) {
        auto rows = seminormal::all_transition_rows(lambda);
        CHECK(Integer(static_cast<long>(rows.size())) == combinat::hook_length_count(lambda));
        for (const auto& [s, fs] : rows) CHECK(fs == seminormal::seminormal_vector(s));
    }
}

TEST_CASE("up-arrow coefficients are constant on fixed-orbit classes and vanish on fixed column pairs") {
    for (int n = 2; n <= 6; ++n)
        for (const Partition& nu : oracle::partitions_of(n))
            for (const Partition& lambda : oracle::sub_partitions(nu)) {
                SpechtVector u = seminormal::uparrow_vector(lambda, nu);
                std::vector<bool> fixed(n, false);  // fixed[i]: s_i u = u
                for (int i = 1; i < n; ++i)
                    fixed[i] = specht::act_perm(Permutation::basic(n, i), u) == u;
                for (const Tableau& t : combinat::enumerate_standard(nu)) {
                    // constancy along I-moves
                    for (int i = 1; i < n; ++i) {
                        if (!fixed[i]) continue;
                        Tableau moved = permalg::act_on_tableau(Permutation::basic(n, i), t);
                        if (moved.is_standard()) CHECK(u.coeff(t) == u.coeff(moved));
                    }
                    // vanishing on I-column pairs
                    bool column_pair = false;
                    for (int a = 1; a <= t.n_rows() && !column_pair; ++a)
                        for (std::size_t b = 0; b < t.rows()[a - 1].size(); ++b) {
                            if (a + 1 > t.n_rows() || b >= t.rows()[a].size()) continue;
                            int lo = t.rows()[a - 1][b], hi = t.rows()[a][b];
                            bool all_fixed = true;
                            for (int i = lo; i < hi; ++i) all_fixed &= fixed[i];
                            if (all_fixed) column_pair = true;
                        }
                    if (column_pair) CHECK(u.coeff(t) == 0);
                }
            }
}
