#include "ysnb/seminormal.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace ysnb::seminormal {

using combinat::Composition;
using combinat::Partition;
using combinat::Tableau;
using permalg::AlgebraElement;
using permalg::Permutation;
using specht::SpechtVector;

namespace {

std::vector<int> row_index_by_entry(const Tableau& s) {
    std::vector<int> row(s.size() + 1, 0);
    for (int a = 1; a <= s.n_rows(); ++a)
        for (int x : s.rows()[a - 1]) row[x] = a;
    return row;
}

int residue_difference(const Tableau& s, int i) {
    return s.residue_of(i + 1) - s.residue_of(i);
}

Tableau swap_entries(const Tableau& s, int i) {
    std::vector<std::vector<int>> rows = s.rows();
    for (auto& row : rows)
        for (int& x : row) {
            if (x == i)
                x = i + 1;
            else if (x == i + 1)
                x = i;
        }
    return Tableau(std::move(rows));
}

std::vector<int> ascent_indices(const Tableau& s) {
    std::vector<int> out;
    auto row = row_index_by_entry(s);
    for (int i = 1; i < s.size(); ++i)
        if (row[i + 1] < row[i]) out.push_back(i);
    return out;
}

struct ShapeCache {
    std::mutex mu;
    std::unordered_map<Tableau, std::shared_ptr<const SpechtVector>, combinat::TableauHash> memo;
};

std::mutex g_registry_mu;
std::map<std::vector<int>, std::shared_ptr<ShapeCache>> g_registry;

ShapeCache& cache_for(const Composition& shape) {
    std::lock_guard lock(g_registry_mu);
    auto& slot = g_registry[shape.parts()];
    if (!slot) slot = std::make_shared<ShapeCache>();
    return *slot;
}

// One recursion step: given f_u and a descent s_i.u (strictly below u),
// f_{s_i.u} = -(1/r_{u,i}) f_u + s_i f_u.
SpechtVector descend(const SpechtVector& fu, const Tableau& u, int i) {
    int r = residue_difference(u, i);
    SpechtVector out = specht::scale(fu, Rational(-1) / r);
    out.add_scaled(specht::act_perm(Permutation::basic(u.size(), i), fu), Rational(1));
    return out;
}

}  // namespace

int ascent_index(const Tableau& s) {
    auto row = row_index_by_entry(s);
    for (int i = 1; i < s.size(); ++i)
        if (row[i + 1] < row[i]) return i;
    return 0;
}

std::vector<int> chain_to_initial(const Tableau& s) {
    if (!s.is_standard()) throw std::invalid_argument("chain_to_initial: tableau not standard");
    std::vector<int> walk;
    Tableau u = s;
    for (int i = ascent_index(u); i != 0; i = ascent_index(u)) {
        walk.push_back(i);
        u = swap_entries(u, i);
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

std::vector<int> random_chain(const Tableau& s, std::mt19937_64& rng) {
    if (!s.is_standard()) throw std::invalid_argument("random_chain: tableau not standard");
    std::vector<int> walk;
    Tableau u = s;
    for (auto asc = ascent_indices(u); !asc.empty(); asc = ascent_indices(u)) {
        int i = asc[std::uniform_int_distribution<std::size_t>(0, asc.size() - 1)(rng)];
        walk.push_back(i);
        u = swap_entries(u, i);
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

SpechtVector seminormal_vector(const Tableau& s) {
    if (!s.is_standard()) throw std::invalid_argument("seminormal_vector: tableau not standard");
    int i = ascent_index(s);
    if (i == 0) return SpechtVector::unit(s);  // s = t^lambda
    ShapeCache& cache = cache_for(s.shape());
    {
        std::lock_guard lock(cache.mu);
        auto it = cache.memo.find(s);
        if (it != cache.memo.end()) return *it->second;
    }
    Tableau u = swap_entries(s, i);
    SpechtVector fs = descend(seminormal_vector(u), u, i);
    {
        std::lock_guard lock(cache.mu);
        cache.memo.emplace(s, std::make_shared<const SpechtVector>(fs));
    }
    return fs;
}

SpechtVector seminormal_vector_along(const Tableau& s, const std::vector<int>& chain) {
    Tableau u = combinat::initial_tableau(Partition(s.shape()));
    SpechtVector f = SpechtVector::unit(u);
    for (int i : chain) {
        Tableau v = swap_entries(u, i);
        if (!v.is_standard() || residue_difference(u, i) > -2)
            throw std::invalid_argument("seminormal_vector_along: invalid chain step");
        f = descend(f, u, i);
        u = v;
    }
    if (!(u == s)) throw std::invalid_argument("seminormal_vector_along: chain does not reach s");
    return f;
}

TransitionRow transition_row(const Tableau& s) {
    SpechtVector v = seminormal_vector(s);
    return TransitionRow{s, v, specht::vector_denominator(v)};
}

AlgebraElement D_element(const Tableau& s) {
    SpechtVector v = seminormal_vector(s);
    AlgebraElement d(s.size());
    for (const auto& [t, q] : v.coords()) d.add(permalg::d_of(t), q);
    return d;
}

std::map<Tableau, SpechtVector> all_transition_rows(const Partition& lambda) {
    std::map<Tableau, SpechtVector> rows;
    Tableau t0 = combinat::initial_tableau(lambda);
    rows.emplace(t0, SpechtVector::unit(t0));
    std::deque<Tableau> queue{t0};
    while (!queue.empty()) {
        Tableau u = queue.front();
        queue.pop_front();
        const SpechtVector fu = rows.at(u);
        auto row = row_index_by_entry(u);
        for (int i = 1; i < u.size(); ++i) {
            if (row[i + 1] <= row[i]) continue;  // not a descent
            Tableau v = swap_entries(u, i);
            if (!v.is_standard() || rows.count(v)) continue;
            rows.emplace(v, descend(fu, u, i));
            queue.push_back(v);
        }
    }
    return rows;
}

bool seminormal_action_check(const Tableau& s, int i) {
    SpechtVector fs = seminormal_vector(s);
    SpechtVector lhs = specht::act_perm(Permutation::basic(s.size(), i), fs);
    int r = residue_difference(s, i);
    SpechtVector rhs(fs.shape());
    if (r == 1 || r == -1) {
        rhs = specht::scale(fs, Rational(r));
    } else if (r <= -2) {
        rhs = specht::scale(fs, Rational(1) / r);
        rhs.add_scaled(seminormal_vector(swap_entries(s, i)), Rational(1));
    } else {
        rhs = specht::scale(fs, Rational(1) / r);
        Rational c = Rational(1) - Rational(1) / (Rational(r) * r);
        rhs.add_scaled(seminormal_vector(swap_entries(s, i)), c);
    }
    return lhs == rhs;
}

// f_{lambda^nu} = D(mu^0^mu^1) ... D(mu^{K-1}^mu^K) e_{t^nu} along the chain
// mu^j that adds the skew boxes in reading order.  Each factor is the D of a
// single-box up-arrow, computed by the plain recursion on its own shape, and
// every intermediate vector is supported on the small colour-semistandard
// region, so the standard basis of nu is never enumerated.
SpechtVector uparrow_vector(const Partition& lambda, const Partition& nu) {
    if (!nu.contains(lambda)) throw std::invalid_argument("uparrow_vector: containment violated");
    std::vector<Partition> chain{lambda};
    for (int a = 1; a <= nu.length(); ++a)
        for (int b = lambda.part(a) + 1; b <= nu.part(a); ++b) {
            std::vector<int> p = chain.back().parts();
            if (a > static_cast<int>(p.size())) p.push_back(0);
            ++p[a - 1];
            chain.push_back(Partition(p));
        }
    int n = nu.sum();
    SpechtVector v = SpechtVector::unit(combinat::initial_tableau(nu));
    for (int j = static_cast<int>(chain.size()) - 2; j >= 0; --j) {
        Tableau step = combinat::up_arrow_initial(chain[j], chain[j + 1]);
        AlgebraElement d = D_element(step);
        v = specht::act_alg(permalg::extend(d, n), v);
    }
    return v;
}

void clear_seminormal_cache() {
    std::lock_guard lock(g_registry_mu);
    g_registry.clear();
}

}  // namespace ysnb::seminormal
