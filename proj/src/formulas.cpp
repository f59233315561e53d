#include "ysnb/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace ysnb::formulas {

using combinat::Composition;
using combinat::Node;
using permalg::AlgebraElement;
using specht::SpechtVector;

std::string route_name(Route route) {
    switch (route) {
        case Route::ExactFormula: return "exact-formula";
        case Route::ReductionThenFormula: return "reduction-then-formula";
        case Route::RecursionFallback: return "recursion-fallback";
        case Route::DivisorBoundOnly: return "divisor-bound-only";
    }
    return "";
}

Rational add_one_coefficient(const Tableau& s, const Partition& lambda) {
    combinat::QpSets qp = combinat::qp_sets(s, lambda);
    Rational a(((qp.q.size() - qp.p.size()) % 2 == 0) ? 1 : -1);
    for (int i : qp.p) {
        int max_block = 0;
        for (const auto& [size, block] : qp.q_blocks)
            if (size == lambda.part(i)) max_block = block.back();
        a /= lambda.part(1) - lambda.part(i) + max_block;
    }
    return a;
}

SpechtVector f_add_one(const Partition& lambda) {
    Partition nu = combinat::add_first_row(lambda, 1);
    SpechtVector out{nu};
    for (const Tableau& s : combinat::colour_semistandard_tableaux(lambda, nu))
        out.add(s, add_one_coefficient(s, lambda));
    return out;
}

Integer denom_add_one(const Partition& lambda) {
    Partition nu = combinat::add_first_row(lambda, 1);
    auto nodes = combinat::removable_nodes(nu);
    Integer d(1);
    for (std::size_t i = 1; i < nodes.size(); ++i)
        d *= combinat::residue(nodes[0]) - combinat::residue(nodes[i]);
    return d;
}

namespace {

void check_removable(const Partition& nu, int row) {
    if (row < 1 || row > nu.length() || nu.part(row + 1) >= nu.part(row))
        throw std::invalid_argument("node not removable");
}

}  // namespace

Integer denom_remove_node(const Partition& nu, int row) {
    check_removable(nu, row);
    Node a{row, nu.part(row)};
    Integer d(1);
    for (const Node& b : combinat::removable_nodes(nu))
        if (b.row > row) d *= combinat::residue(a) - combinat::residue(b);
    return d;
}

AlgebraElement D_remove_one_node(const Partition& nu, int row) {
    check_removable(nu, row);
    std::vector<int> tail;
    for (int i = row; i <= nu.length(); ++i) tail.push_back(nu.part(i));
    tail[0] -= 1;
    Partition tail_lambda{Composition(tail).parts()};
    int z = 0;
    for (int i = 1; i < row; ++i) z += nu.part(i);
    AlgebraElement d(tail_lambda.sum() + 1);
    const specht::SpechtVector f = f_add_one(tail_lambda);
    for (const auto& [t, q] : f.coords()) d.add(permalg::d_of(t), q);
    return permalg::shift(d, z);
}

SpechtVector f_two_row(int k, int l, int m) {
    if (k < l || l < 1 || m < 1) throw std::invalid_argument("f_two_row: need k >= l >= 1, m >= 1");
    Partition lambda({k, l});
    Partition nu = combinat::add_first_row(lambda, m);
    SpechtVector out{nu};
    for (const Tableau& s : combinat::colour_semistandard_tableaux(lambda, nu)) {
        int w = combinat::weight_of(s, k, l, 1, m).entries[0];
        out.add(s, Rational(1) / Rational(binomial(k - l + 1 + w, w)));
    }
    return out;
}

Integer lcm_binom(long a, long b) {
    if (a < 1 || b < 0) throw std::invalid_argument("lcm_binom: need a >= 1, b >= 0");
    return lcm_range(a, a + b) / a;
}

Integer denom_two_row(int k, int l, int m) {
    if (k < l || l < 1 || m < 1)
        throw std::invalid_argument("denom_two_row: need k >= l >= 1, m >= 1");
    return lcm_binom(k - l + 1, std::min(l, m));
}

SpechtVector f_hook(int k, int s, int m) {
    if (k < 1 || s < 1 || m < 1) throw std::invalid_argument("f_hook: need k, s, m >= 1");
    std::vector<int> p{k};
    for (int i = 0; i < s; ++i) p.push_back(1);
    Partition lambda(p);
    Partition nu = combinat::add_first_row(lambda, m);
    Tableau top = combinat::up_arrow_initial(lambda, nu);
    SpechtVector out{nu};
    for (const Tableau& t : combinat::colour_semistandard_tableaux(lambda, nu)) {
        if (t == top) {
            out.add(t, Rational(1));
            continue;
        }
        combinat::Weight w = combinat::weight_of(t, k, 1, s, m);
        int j = 0;
        for (int i = 1; i <= s; ++i)
            if (w.entries[i - 1] == 1) j = i;
        Rational c(((s - j) % 2 == 0) ? 1 : -1);
        out.add(t, c / (k + s));
    }
    return out;
}

KlsReduction reduce_kls(int k, int l, int s, int m) {
    if (k < l || l < 1 || s < 1 || m < 1) throw std::invalid_argument("reduce_kls: bad parameters");
    int lt = std::min(l, m);
    return KlsReduction{k - l + std::max(s, lt), lt, std::min(lt, s)};
}

namespace {

Partition kls_shape(int k, int l, int s) {
    std::vector<int> p{k};
    for (int i = 0; i < s; ++i) p.push_back(l);
    return Partition(p);
}

}  // namespace

std::map<Weight, Rational> weights_kls(int k, int l, int s, int m) {
    if (k < l) throw std::invalid_argument("weights_kls: need k >= l");
    Partition lambda = kls_shape(k, l, s);
    SpechtVector v = seminormal::uparrow_vector(lambda, combinat::add_first_row(lambda, m));
    std::map<Weight, Rational> out;
    for (const Weight& w : combinat::all_weights(s, std::min(l, m)))
        out.emplace(w, v.coeff(combinat::tableau_from_weight(w, k, l, m)));
    return out;
}

bool check_four_reductions(int k, int l, int s, int m) {
    auto a = weights_kls(k, l, s, m);
    // (1) |a_w| is constant on S_s-orbits.
    for (const auto& [w, c] : a) {
        std::vector<int> sorted = w.entries;
        std::sort(sorted.begin(), sorted.end());
        if (abs(c) != abs(a.at(Weight{sorted}))) return false;
    }
    // (2) a^{k}_{(0,w)} = a^{k+1}_{w}, reading (k,l,s,m) as either side.
    if (s >= 2 && s - 1 >= std::min(l, m)) {
        auto b = weights_kls(k + 1, l, s - 1, m);
        for (const auto& [w, c] : b) {
            std::vector<int> padded{0};
            padded.insert(padded.end(), w.entries.begin(), w.entries.end());
            if (a.at(Weight{padded}) != c) return false;
        }
    }
    if (s >= std::min(l, m) && k - 1 >= l) {
        auto b = weights_kls(k - 1, l, s + 1, m);
        for (const auto& [w, c] : a) {
            std::vector<int> padded{0};
            padded.insert(padded.end(), w.entries.begin(), w.entries.end());
            if (b.at(Weight{padded}) != c) return false;
        }
    }
    // (3) a_{m,w} = a_{m-1,w} when m > l.
    if (m > l) {
        auto c3 = weights_kls(k, l, s, m - 1);
        for (const auto& [w, c] : c3)
            if (a.at(w) != c) return false;
    }
    // (4) a^{k,l}_w = a^{k-1,l-1}_w when l > m.
    if (l > m && l >= 2) {
        auto c4 = weights_kls(k - 1, l - 1, s, m);
        for (const auto& [w, c] : c4)
            if (a.at(w) != c) return false;
    }
    return true;
}

Integer upper_bound_kls(int k, int l, int s) {
    if (!(k >= l && l >= s && s >= 1))
        throw std::invalid_argument("upper_bound_kls: need k >= l >= s >= 1");
    Integer left(1), right(1);
    for (int i = 1; i <= l; ++i) left *= k - l + s + i;
    for (int j = 1; j <= s; ++j) right *= lcm_range(k - l + j, k + j) / (k - l + j);
    return gcd(left, right);
}

Partition denom_truncate(const Partition& lambda, const Partition& nu) {
    if (!nu.contains(lambda)) throw std::invalid_argument("denom_truncate: containment violated");
    int r = lambda.length();
    std::vector<int> p;
    for (int i = 1; i < r; ++i) p.push_back(nu.part(i));
    if (r >= 1) p.push_back(lambda.part(r));
    return Partition(p);
}

std::pair<Partition, Partition> denom_row_removal(const Partition& lambda, const Partition& nu) {
    if (!nu.contains(lambda) || lambda.part(1) != nu.part(1) || lambda.length() < 2)
        throw std::invalid_argument("denom_row_removal: need lambda_1 = nu_1 and r >= 2");
    std::vector<int> lp(lambda.parts().begin() + 1, lambda.parts().end());
    std::vector<int> np(nu.parts().begin() + 1, nu.parts().end());
    return {Partition(lp), Partition(np)};
}

Integer recursion_denominator(const Partition& lambda, const Partition& nu) {
    return specht::vector_denominator(seminormal::uparrow_vector(lambda, nu));
}

std::pair<Integer, Integer> divisibility_split_m(const Partition& lambda, const Partition& nu,
                                                 int m) {
    if (m < 1 || m > nu.part(1) - lambda.part(1))
        throw std::invalid_argument("divisibility_split_m: m out of range");
    Partition mid = combinat::add_first_row(lambda, m);
    Integer left = recursion_denominator(lambda, nu);
    Integer right = recursion_denominator(lambda, mid) * recursion_denominator(mid, nu);
    return {left, right};
}

std::pair<Integer, Integer> divisibility_split_i(const Partition& lambda, int m, int i) {
    int r = lambda.length();
    if (i < 2 || i > r - 1) throw std::invalid_argument("divisibility_split_i: i out of range");
    if (m < 1) throw std::invalid_argument("divisibility_split_i: m out of range");
    std::vector<int> upper{lambda.part(1) + i - 1};
    for (int j = i + 1; j <= r; ++j) upper.push_back(lambda.part(j));
    std::vector<int> lower;
    for (int j = 1; j <= i; ++j) lower.push_back(lambda.part(j));
    Partition lam_i(upper), lam_le(lower);
    Integer left = recursion_denominator(lambda, combinat::add_first_row(lambda, m));
    Integer right = recursion_denominator(lam_i, combinat::add_first_row(lam_i, m)) *
                    recursion_denominator(lam_le, combinat::add_first_row(lam_le, m));
    return {left, right};
}

Integer denom_general_upper_bound(const Partition& lambda, const Partition& nu) {
    if (!nu.contains(lambda))
        throw std::invalid_argument("denom_general_upper_bound: containment violated");
    Integer d(1);
    std::vector<int> p = lambda.parts();
    for (int a = 1; a <= nu.length(); ++a)
        for (int b = lambda.part(a) + 1; b <= nu.part(a); ++b) {
            if (a > static_cast<int>(p.size())) p.push_back(0);
            ++p[a - 1];
            d *= denom_remove_node(Partition(p), a);
        }
    return d;
}

namespace {

struct Normalized {
    Partition lambda, nu;
};

// Apply the exact d-preserving reductions until stable: nu-truncation and
// removal of shared top rows.
Normalized normalize_pair(Partition lambda, Partition nu) {
    for (;;) {
        if (lambda == nu || lambda.length() == 0) return {lambda, nu};
        Partition trunc = denom_truncate(lambda, nu);
        if (trunc != nu) {
            nu = trunc;
            continue;
        }
        if (lambda.part(1) == nu.part(1)) {
            if (lambda.length() < 2) return {lambda, nu};  // lambda == nu, caught above
            auto [l2, n2] = denom_row_removal(lambda, nu);
            lambda = l2;
            nu = n2;
            continue;
        }
        return {lambda, nu};
    }
}

}  // namespace

DenominatorReport summary_dispatch(const Partition& lambda, const Partition& nu, int cap) {
    if (!nu.contains(lambda)) throw std::invalid_argument("summary_dispatch: containment violated");
    auto [lam, target] = normalize_pair(lambda, nu);
    DenominatorReport report;
    report.bound = denom_general_upper_bound(lam, target);
    if (lam == target) {
        report.value = Integer(1);
        report.route = Route::ExactFormula;
        return report;
    }
    int r = lam.length();
    // (1) single added node (necessarily in the first row after normalizing)
    if (target.sum() - lam.sum() == 1) {
        report.value = denom_remove_node(target, 1);
        report.route = Route::ExactFormula;
        return report;
    }
    // (2) two-row lambda
    if (r == 2) {
        report.value = denom_two_row(lam.part(1), lam.part(2), target.part(1) - lam.part(1));
        report.route = Route::ExactFormula;
        return report;
    }
    // (3) equal lower rows: reduce to (k~, l~^s~) ^ l~
    bool kls_form = r >= 2;
    for (int i = 2; i <= r && kls_form; ++i)
        kls_form = lam.part(i) == lam.part(2) && target.part(i) == lam.part(i);
    if (kls_form) {
        KlsReduction red = reduce_kls(lam.part(1), lam.part(2), r - 1, target.part(1) - lam.part(1));
        if (red.s_tilde == 1) {
            report.value = denom_two_row(red.k_tilde, red.l_tilde, red.l_tilde);
            report.route = Route::ReductionThenFormula;
            return report;
        }
        if (red.l_tilde == 1) {
            report.value = Integer(red.k_tilde + red.s_tilde);
            report.route = Route::ReductionThenFormula;
            return report;
        }
        if (red.l_tilde == 2 && red.s_tilde == 2) {
            report.value = Integer(red.k_tilde + 1) * Integer(red.k_tilde + 2);
            report.route = Route::ReductionThenFormula;
            return report;
        }
        Partition reduced = kls_shape(red.k_tilde, red.l_tilde, red.s_tilde);
        Partition reduced_nu = combinat::add_first_row(reduced, red.l_tilde);
        if (reduced_nu.sum() <= cap) {
            report.value = recursion_denominator(reduced, reduced_nu);
            report.route = Route::RecursionFallback;
            return report;
        }
        report.bound = gcd(*report.bound, upper_bound_kls(red.k_tilde, red.l_tilde, red.s_tilde));
        report.route = Route::DivisorBoundOnly;
        return report;
    }
    if (target.sum() <= cap) {
        report.value = recursion_denominator(lam, target);
        report.route = Route::RecursionFallback;
        return report;
    }
    report.route = Route::DivisorBoundOnly;
    return report;
}

}  // namespace ysnb::formulas
