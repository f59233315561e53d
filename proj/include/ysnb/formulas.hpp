#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ysnb/combinat.hpp"
#include "ysnb/permalg.hpp"
#include "ysnb/seminormal.hpp"
#include "ysnb/specht.hpp"

// Closed formulae and reduction rules for f_{lambda^nu} and its denominator,
// each implemented independently of the recursion in module `seminormal` so
// the two can be cross-checked.
namespace ysnb::formulas {

using combinat::Partition;
using combinat::Tableau;
using combinat::Weight;

// Outcome of the denominator dispatch (k-tilde >= l-tilde >= s-tilde).
struct KlsReduction {
    int k_tilde = 0;
    int l_tilde = 0;
    int s_tilde = 0;
    friend auto operator<=>(const KlsReduction&, const KlsReduction&) = default;
};

enum class Route { ExactFormula, ReductionThenFormula, RecursionFallback, DivisorBoundOnly };
std::string route_name(Route route);

struct DenominatorReport {
    std::optional<Integer> value;
    Route route = Route::DivisorBoundOnly;
    std::optional<Integer> bound;
};

// The coefficient a_s of e_s in f_{lambda^(lambda+(1))}, for s in
// SSTab(lambda;1): sign (-1)^{|Q|-|P|} over the P-indexed residue products.
Rational add_one_coefficient(const Tableau& s, const Partition& lambda);

// f_{lambda^1} = sum a_s e_s over SSTab(lambda;1).
specht::SpechtVector f_add_one(const Partition& lambda);

// Product of res(A_0) - res(A_i) over the removable nodes of lambda+(1)
// below the top one.
Integer denom_add_one(const Partition& lambda);

// d_{lambda^nu} where lambda = nu minus the removable node on `row`.
Integer denom_remove_node(const Partition& nu, int row);

// D(lambda^nu) for a single removed node: the shifted D((lambda_row..)^1).
permalg::AlgebraElement D_remove_one_node(const Partition& nu, int row);

// f_{(k,l)^m} = sum e_s / binom(k-l+1+wt(s), wt(s)).
specht::SpechtVector f_two_row(int k, int l, int m);

// lcm{ binom(a+r, a) : r in [0,b] } = lcm[a, a+b] / a.
Integer lcm_binom(long a, long b);

// d_{(k,l)^m} = lcm[k-l+1, k-l+1+min(l,m)] / (k-l+1).
Integer denom_two_row(int k, int l, int m);

// f_{(k,1^s)^m}: unit coefficient at the up-arrow tableau, signs
// (-1)^{s-j} / (k+s) elsewhere; denominator k+s.
specht::SpechtVector f_hook(int k, int s, int m);

// k~ = k-l+max(s,min(l,m)), l~ = min(l,m), s~ = min(l,m,s);
// d_{(k,l^s)^m} = d_{(k~,l~^s~)^l~}.
KlsReduction reduce_kls(int k, int l, int s, int m);

// The weight-class coefficients a^{k,l}_{m,w} of f_{(k,l^s)^m}, read off the
// recursion vector at the representative tableaux s_w.
std::map<Weight, Rational> weights_kls(int k, int l, int s, int m);

// The four reduction identities of the weight coefficients; checks every
// branch whose hypothesis holds for (k,l,s,m).
bool check_four_reductions(int k, int l, int s, int m);

// gcd of the two iterated upper bounds for d_{(k,l^s)^l}, k >= l >= s.
Integer upper_bound_kls(int k, int l, int s);

// nu-truncation (nu_1,..,nu_{r-1},lambda_r); leaves the D element unchanged.
Partition denom_truncate(const Partition& lambda, const Partition& nu);

// Row removal: ((lambda_2,..), (nu_2,..)); D shifts by lambda_1.
std::pair<Partition, Partition> denom_row_removal(const Partition& lambda, const Partition& nu);

// d_{lambda^nu} | d_{lambda^m} d_{(lambda+(m))^nu}: returns (left, right).
std::pair<Integer, Integer> divisibility_split_m(const Partition& lambda, const Partition& nu,
                                                 int m);

// d_{lambda^(lambda+(m))} | d_{lambda^(i)^m} d_{lambda^<=i^m}: (left, right).
std::pair<Integer, Integer> divisibility_split_i(const Partition& lambda, int m, int i);

// Product of single-node denominators along the reading-order chain from
// lambda to nu; d_{lambda^nu} divides it.
Integer denom_general_upper_bound(const Partition& lambda, const Partition& nu);

// d_{lambda^nu} by the staged recursion (the reference value for dispatch).
Integer recursion_denominator(const Partition& lambda, const Partition& nu);

// Denominator dispatch: exact single-node / two-row routes, then the
// (k,l^s) reduction with its closed forms, then recursion up to `cap`
// boxes, otherwise divisor bounds only.
DenominatorReport summary_dispatch(const Partition& lambda, const Partition& nu, int cap = 12);

}  // namespace ysnb::formulas
