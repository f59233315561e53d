#pragma once

#include <map>
#include <random>
#include <vector>

#include "ysnb/combinat.hpp"
#include "ysnb/permalg.hpp"
#include "ysnb/specht.hpp"

// Young's seminormal basis via its characterizing recursion:
//   f_{t^lambda} = e_{t^lambda},
//   f_{s_i.s} = -(1/r_{s,i}) f_s + s_i f_s   whenever s_i.s is standard and
//                                            strictly below s in dominance,
// with r_{s,i} = res_s(i+1) - res_s(i).
namespace ysnb::seminormal {

// Smallest i whose swap strictly raises s in dominance while preserving
// standardness (equivalently row_s(i+1) < row_s(i)); 0 if s is initial.
int ascent_index(const combinat::Tableau& s);

// Indices i_1..i_l such that applying s_{i_j} successively to t^lambda stays
// standard, strictly descends in dominance, and ends at s.
std::vector<int> chain_to_initial(const combinat::Tableau& s);

// A uniformly random valid chain (for chain-independence checks).
std::vector<int> random_chain(const combinat::Tableau& s, std::mt19937_64& rng);

// f_s in the standard basis, memoized per shape.
specht::SpechtVector seminormal_vector(const combinat::Tableau& s);

// f_s evaluated along an explicit chain from t^lambda (validated); no memo.
specht::SpechtVector seminormal_vector_along(const combinat::Tableau& s,
                                             const std::vector<int>& chain);

struct TransitionRow {
    combinat::Tableau source;
    specht::SpechtVector coeffs;  // the row q_{s,.}
    Integer denominator;          // d_s = lcm of coefficient denominators
};

TransitionRow transition_row(const combinat::Tableau& s);

// D(s) = sum_v q_{s,v} d(v); satisfies f_s = D(s) e_{t^lambda}.
permalg::AlgebraElement D_element(const combinat::Tableau& s);

// Whole-shape batch: every row of the transition matrix, walking the descent
// graph once from t^lambda.
std::map<combinat::Tableau, specht::SpechtVector> all_transition_rows(
    const combinat::Partition& lambda);

// Verifies the action table of the seminormal basis at (s, i).
bool seminormal_action_check(const combinat::Tableau& s, int i);

// f_{lambda^nu} ("lambda up-arrow nu") computed by the exact staged product
//   f = D(mu^0^mu^1) ... D(mu^{K-1}^mu^K) e_{t^nu},
// where the chain mu^j adds the skew boxes in reading order and each
// single-box D comes from the chain recursion on its own (small) shape.
// Agrees with seminormal_vector(up_arrow_initial(lambda, nu)) and scales to
// shapes whose full standard basis is out of reach.
specht::SpechtVector uparrow_vector(const combinat::Partition& lambda,
                                    const combinat::Partition& nu);

void clear_seminormal_cache();

}  // namespace ysnb::seminormal
