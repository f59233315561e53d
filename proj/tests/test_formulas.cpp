#include <doctest.h>

#include "ysnb/formulas.hpp"
#include "ysnb/oracle.hpp"

using namespace ysnb;
using combinat::Partition;
using combinat::Tableau;
using combinat::Weight;
using specht::SpechtVector;

TEST_CASE("f_add_one closed formula") {
    SpechtVector v = formulas::f_add_one(Partition({2, 1}));
    CHECK(v.term_count() == 2);
    CHECK(v.coeff(Tableau({{1, 2, 4}, {3}})) == 1);
    CHECK(v.coeff(Tableau({{1, 2, 3}, {4}})) == Rational(1, 3));

    SpechtVector row = formulas::f_add_one(Partition({4}));
    CHECK(row == SpechtVector::unit(combinat::initial_tableau(Partition({5}))));

    // hook shapes carry signs (-1)^{s-j} / (k+s)
    int k = 3, s = 2;
    Partition hook({3, 1, 1});
    const SpechtVector fh = formulas::f_add_one(hook);
    for (const auto& [t, c] : fh.coords()) {
        Weight w = combinat::weight_of(t, k, 1, s, 1);
        if (w.total() == 0) {
            CHECK(c == 1);
        } else {
            int j = 0;
            for (int i = 1; i <= s; ++i)
                if (w.entries[i - 1] == 1) j = i;
            CHECK(c == Rational(((s - j) % 2 == 0) ? 1 : -1) / (k + s));
        }
    }
}

TEST_CASE("denom_add_one") {
    CHECK(formulas::denom_add_one(Partition({2, 1})) == 3);
    CHECK(formulas::denom_add_one(Partition({6})) == 1);
    // brute force before freezing: recursion gives 2 for (2,2)
    Partition l22({2, 2});
    CHECK(formulas::recursion_denominator(l22, Partition({3, 2})) == 2);
    CHECK(formulas::denom_add_one(l22) == 2);
}

TEST_CASE("denom_remove_node") {
    CHECK(formulas::denom_remove_node(Partition({3, 1}), 1) == 3);
    CHECK(formulas::denom_remove_node(Partition({3, 1}), 2) == 1);
    CHECK(formulas::denom_remove_node(Partition({4, 3, 3}), 1) == 3);
    CHECK_THROWS_AS(formulas::denom_remove_node(Partition({3, 3}), 1), std::invalid_argument);
}

TEST_CASE("D_remove_one_node") {
    permalg::AlgebraElement d = formulas::D_remove_one_node(Partition({3, 1}), 1);
    CHECK(d.coeff(permalg::Permutation::transposition(4, 3, 4)) == 1);
    CHECK(d.coeff(permalg::Permutation::identity(4)) == Rational(1, 3));
    CHECK(d.term_count() == 2);
    for (int n = 2; n <= 6; ++n)
        for (const Partition& nu : oracle::partitions_of(n))
            for (const combinat::Node& node : combinat::removable_nodes(nu)) {
                std::vector<int> p = nu.parts();
                --p[node.row - 1];
                Partition lambda{combinat::Composition(p).parts()};
                CHECK(formulas::D_remove_one_node(nu, node.row) ==
                      seminormal::D_element(combinat::up_arrow_initial(lambda, nu)));
            }
}

TEST_CASE("two-row formula") {
    SpechtVector v = formulas::f_two_row(2, 1, 1);
    CHECK(v.term_count() == 2);
    CHECK(v.coeff(combinat::up_arrow_initial(Partition({2, 1}), Partition({3, 1}))) == 1);
    CHECK(v.coeff(Tableau({{1, 2, 3}, {4}})) == Rational(1, 3));
    CHECK(formulas::f_two_row(2, 1, 1) == formulas::f_add_one(Partition({2, 1})));

    SpechtVector w = formulas::f_two_row(3, 2, 5);
    Rational smallest(1);
    for (const auto& [t, c] : w.coords()) smallest = std::min(smallest, c);
    CHECK(smallest == Rational(1, 6));
    CHECK(w.coeff(combinat::up_arrow_initial(Partition({3, 2}), Partition({8, 2}))) == 1);
    CHECK_THROWS_AS(formulas::f_two_row(1, 2, 1), std::invalid_argument);
}

TEST_CASE("lcm of binomial rows") {
    CHECK(formulas::lcm_binom(5, 0) == 1);
    CHECK(formulas::lcm_binom(2, 2) == 6);
    CHECK(formulas::lcm_binom(3, 2) == 20);
    for (long a = 1; a <= 8; ++a)
        for (long b = 0; b <= 8; ++b) {
            Integer direct(1);
            for (long r = 0; r <= b; ++r)
                direct = lcm(direct, binomial(static_cast<unsigned long>(a + r),
                                              static_cast<unsigned long>(a)));
            CHECK(formulas::lcm_binom(a, b) == direct);
        }
}

TEST_CASE("two-row denominators") {
    CHECK(formulas::denom_two_row(2, 1, 1) == 3);
    CHECK(formulas::denom_two_row(5, 3, 2) == 20);
    CHECK(formulas::denom_two_row(3, 1, 1) == 4);
}

TEST_CASE("hook formula") {
    for (int m = 1; m <= 3; ++m)
        CHECK(specht::vector_denominator(formulas::f_hook(3, 2, m)) == 5);
    SpechtVector v = formulas::f_hook(2, 1, 1);
    CHECK(v == formulas::f_add_one(Partition({2, 1})));
    // the largest weight e_s keeps the positive sign
    std::vector<int> es(3, 0);
    es[2] = 1;
    CHECK(formulas::f_hook(4, 3, 2).coeff(combinat::tableau_from_weight(Weight{es}, 4, 1, 2)) ==
          Rational(1, 7));
}

TEST_CASE("kls reduction triple") {
    CHECK(formulas::reduce_kls(5, 3, 1, 2) == formulas::KlsReduction{4, 2, 1});
    CHECK(formulas::reduce_kls(4, 2, 1, 2) == formulas::KlsReduction{4, 2, 1});
    CHECK(formulas::reduce_kls(6, 2, 1, 2) == formulas::KlsReduction{6, 2, 1});
    CHECK(formulas::reduce_kls(3, 1, 2, 2) == formulas::KlsReduction{4, 1, 1});
    CHECK(formulas::denom_two_row(4, 2, 2) == 20);
}

TEST_CASE("weight coefficients") {
    auto w0 = formulas::weights_kls(3, 2, 2, 1);
    CHECK(w0.at(Weight{{0, 0}}) == 1);
    auto hookw = formulas::weights_kls(3, 1, 2, 1);
    CHECK(hookw.at(Weight{{1, 0}}) == Rational(-1, 5));
    CHECK(hookw.at(Weight{{0, 1}}) == Rational(1, 5));
    auto tworow = formulas::weights_kls(4, 2, 1, 3);
    for (const auto& [w, c] : tworow)
        CHECK(c == Rational(1) / Rational(binomial(4 - 2 + 1 + w.entries[0], w.entries[0])));
}

TEST_CASE("four reductions on sample tuples") {
    CHECK(formulas::check_four_reductions(3, 1, 2, 2));
    CHECK(formulas::check_four_reductions(3, 3, 1, 2));
    CHECK(formulas::check_four_reductions(4, 2, 3, 2));
}

TEST_CASE("upper bounds for d_{(k,l^s)^l}") {
    CHECK(formulas::upper_bound_kls(2, 2, 2) == 12);
    for (int k = 1; k <= 5; ++k) CHECK(formulas::upper_bound_kls(k, 1, 1) == k + 1);
    CHECK(formulas::upper_bound_kls(3, 2, 2) == 20);
    CHECK_THROWS_AS(formulas::upper_bound_kls(2, 3, 1), std::invalid_argument);
}

TEST_CASE("truncation and row removal") {
    CHECK(formulas::denom_truncate(Partition({2, 2}), Partition({4, 3, 2})) ==
          Partition({4, 2}));
    CHECK(formulas::denom_truncate(Partition({3, 1}), Partition({5, 1})) == Partition({5, 1}));
    CHECK(formulas::denom_truncate(Partition({3, 1}), Partition({5, 4, 2, 1})) ==
          Partition({5, 1}));
    auto [l1, n1] = formulas::denom_row_removal(Partition({3, 2, 1}), Partition({3, 3, 2}));
    CHECK(l1 == Partition({2, 1}));
    CHECK(n1 == Partition({3, 2}));
    auto [l2, n2] = formulas::denom_row_removal(Partition({2, 1}), Partition({2, 2}));
    CHECK(l2 == Partition({1}));
    CHECK(n2 == Partition({2}));
    // (1)^(2) is the initial tableau of (2), so both sides are 1
    CHECK(formulas::recursion_denominator(l2, n2) == 1);
    CHECK(formulas::recursion_denominator(Partition({2, 1}), Partition({2, 2})) == 1);
    CHECK_THROWS_AS(formulas::denom_row_removal(Partition({2, 1}), Partition({3, 1})),
                    std::invalid_argument);
}

TEST_CASE("divisibility splits") {
    auto [left, right] = formulas::divisibility_split_m(Partition({2, 1}), Partition({4, 1}), 1);
    CHECK(divides(left, right));
    auto [l4, r4] = formulas::divisibility_split_i(Partition({2, 2, 2}), 2, 2);
    CHECK(divides(l4, r4));
    CHECK_THROWS_AS(formulas::divisibility_split_m(Partition({2, 1}), Partition({4, 1}), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(formulas::divisibility_split_i(Partition({2, 2}), 1, 2),
                    std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(formulas::f_hook(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(formulas::reduce_kls(1, 2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(formulas::lcm_binom(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(formulas::denom_truncate(Partition({3, 1}), Partition({2, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(formulas::summary_dispatch(Partition({3, 1}), Partition({2, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(formulas::denom_general_upper_bound(Partition({3, 1}), Partition({2, 2})),
                    std::invalid_argument);
}

TEST_CASE("chain upper bound") {
    CHECK(formulas::denom_general_upper_bound(Partition({2, 2}), Partition({2, 2})) == 1);
    CHECK(formulas::denom_general_upper_bound(Partition({2, 1}), Partition({3, 1})) == 3);
    CHECK(formulas::denom_general_upper_bound(Partition({2, 2}), Partition({4, 2})) == 6);
    CHECK(formulas::recursion_denominator(Partition({2, 2}), Partition({4, 2})) == 6);
}

TEST_CASE("up-arrow coefficients are colour-type functions supported on SSTab") {
    for (int n = 2; n <= 8; ++n)
        for (const Partition& nu : oracle::partitions_of(n))
            for (const Partition& lambda : oracle::sub_partitions(nu)) {
                combinat::ColourProfile profile(lambda, nu);
                SpechtVector v = seminormal::uparrow_vector(lambda, nu);
                std::map<std::vector<int>, Rational> class_coeff;
                for (const Tableau& t : combinat::enumerate_standard(nu)) {
                    Rational c = v.coeff(t);
                    if (!combinat::is_colour_semistandard(t, profile)) {
                        CHECK(c == 0);
                        continue;
                    }
                    std::vector<int> type;
                    for (const auto& row : t.rows())
                        for (int x : row) type.push_back(profile.colour_of(x));
                    auto [it, fresh] = class_coeff.emplace(std::move(type), c);
                    if (!fresh) CHECK(it->second == c);
                }
            }
}

TEST_CASE("summary dispatch routes") {
    using formulas::Route;
    auto two_row = formulas::summary_dispatch(Partition({5, 3}), Partition({7, 3}));
    REQUIRE(two_row.value.has_value());
    CHECK(*two_row.value == 20);
    CHECK(two_row.route == Route::ExactFormula);

    auto same = formulas::summary_dispatch(Partition({3, 2}), Partition({3, 2}));
    REQUIRE(same.value.has_value());
    CHECK(*same.value == 1);

    auto node = formulas::summary_dispatch(Partition({3, 2, 2}), Partition({3, 3, 2}));
    REQUIRE(node.value.has_value());
    CHECK(node.route == Route::ExactFormula);
    CHECK(*node.value == formulas::recursion_denominator(Partition({3, 2, 2}),
                                                         Partition({3, 3, 2})));

    // the (k,l^s) route with the l~ = s~ = 2 closed form
    auto kls = formulas::summary_dispatch(Partition({3, 2, 2}), Partition({5, 2, 2}));
    REQUIRE(kls.value.has_value());
    CHECK(kls.route == Route::ReductionThenFormula);
    CHECK(*kls.value == formulas::recursion_denominator(Partition({3, 2, 2}),
                                                        Partition({5, 2, 2})));

    auto fallback = formulas::summary_dispatch(Partition({3, 2, 1}), Partition({5, 4, 1}));
    REQUIRE(fallback.value.has_value());
    CHECK(fallback.route == Route::RecursionFallback);
    CHECK(*fallback.value == formulas::recursion_denominator(Partition({3, 2, 1}),
                                                             Partition({5, 4, 1})));

    auto bound_only = formulas::summary_dispatch(Partition({8, 7, 3}), Partition({15, 7, 3}));
    CHECK_FALSE(bound_only.value.has_value());
    CHECK(bound_only.route == Route::DivisorBoundOnly);
    CHECK(bound_only.bound.has_value());

    auto kls_bound = formulas::summary_dispatch(Partition({7, 5, 5}), Partition({13, 5, 5}));
    CHECK_FALSE(kls_bound.value.has_value());
    CHECK(kls_bound.route == Route::DivisorBoundOnly);
    REQUIRE(kls_bound.bound.has_value());
    // a gcd refinement of the chain bound
    CHECK(divides(*kls_bound.bound, formulas::denom_general_upper_bound(Partition({7, 5, 5}),
                                                                        Partition({13, 5, 5}))));
}
