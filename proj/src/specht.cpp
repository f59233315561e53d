#include "ysnb/specht.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace ysnb::specht {

using combinat::Composition;
using combinat::Partition;
using combinat::Tableau;

SpechtVector SpechtVector::unit(const Tableau& t) {
    SpechtVector v{Partition(t.shape())};
    v.add(t, Rational(1));
    return v;
}

void SpechtVector::add(const Tableau& t, const Rational& c) {
    auto it = coords_.find(t);
    if (it == coords_.end()) {
        if (c != 0) coords_.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0) coords_.erase(it);
    }
}

void SpechtVector::add_scaled(const SpechtVector& v, const Rational& c) {
    if (c == 0) return;
    for (const auto& [t, q] : v.coords()) add(t, q * c);
}

Rational SpechtVector::coeff(const Tableau& t) const {
    auto it = coords_.find(t);
    return it == coords_.end() ? Rational(0) : it->second;
}

SpechtVector add(const SpechtVector& a, const SpechtVector& b) {
    SpechtVector out = a;
    out.add_scaled(b, Rational(1));
    return out;
}

SpechtVector scale(const SpechtVector& a, const Rational& c) {
    SpechtVector out(a.shape());
    out.add_scaled(a, c);
    return out;
}

namespace {

// All column violations (a,b): t(a,b) > t(a+1,b), 1-based.
std::vector<std::pair<int, int>> column_violations(const Tableau& t) {
    std::vector<std::pair<int, int>> out;
    const auto& rows = t.rows();
    for (std::size_t a = 0; a + 1 < rows.size(); ++a)
        for (std::size_t b = 0; b < rows[a + 1].size(); ++b)
            if (rows[a][b] > rows[a + 1][b]) out.push_back({int(a + 1), int(b + 1)});
    return out;
}

void check_partition_shape(const Tableau& t) {
    const auto& rows = t.rows();
    for (std::size_t a = 1; a < rows.size(); ++a)
        if (rows[a].size() > rows[a - 1].size())
            throw std::invalid_argument("tableau shape is not a partition");
}

// Per-shape straightening memo; insert-if-absent under a shared mutex.
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

SpechtVector straighten(const Tableau& t);  // forward; expects row-standard input

}  // namespace

std::vector<Tableau> garnir_step_at(const Tableau& t, int row, int col) {
    const auto& rows = t.rows();
    int a = row - 1, b = col - 1;
    if (rows[a][b] <= rows[a + 1][b]) throw std::invalid_argument("garnir_step: no violation here");
    // X: row `a` entries from column b on; Y: row `a+1` entries up to column b.
    std::vector<int> x(rows[a].begin() + b, rows[a].end());
    std::vector<int> y(rows[a + 1].begin(), rows[a + 1].begin() + b + 1);
    std::vector<int> z = x;
    z.insert(z.end(), y.begin(), y.end());
    std::sort(z.begin(), z.end());
    int zn = static_cast<int>(z.size()), yn = static_cast<int>(y.size());

    std::vector<Tableau> out;
    std::vector<int> pick(yn);
    // Transversal: one representative per (new X-content, new Y-content)
    // partition of X u Y, mapping each of X, Y order-preservingly.
    std::function<void(int, int)> choose = [&](int from, int depth) {
        if (depth == yn) {
            std::vector<int> new_y;
            std::vector<bool> taken(zn, false);
            for (int i : pick) {
                new_y.push_back(z[i]);
                taken[i] = true;
            }
            if (new_y == y) return;  // the identity coset
            std::vector<int> new_x;
            for (int i = 0; i < zn; ++i)
                if (!taken[i]) new_x.push_back(z[i]);
            std::vector<int> image(t.size() + 1);
            for (int e = 1; e <= t.size(); ++e) image[e] = e;
            for (std::size_t i = 0; i < x.size(); ++i) image[x[i]] = new_x[i];
            for (std::size_t i = 0; i < y.size(); ++i) image[y[i]] = new_y[i];
            std::vector<std::vector<int>> relabelled = t.rows();
            for (auto& r : relabelled)
                for (int& e : r) e = image[e];
            out.push_back(Tableau(std::move(relabelled)));
            return;
        }
        for (int i = from; i < zn; ++i) {
            pick[depth] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
    return out;
}

std::vector<Tableau> garnir_step(const Tableau& t) {
    if (!t.is_row_standard()) throw std::invalid_argument("garnir_step: tableau not row-standard");
    check_partition_shape(t);
    auto violations = column_violations(t);
    if (violations.empty()) throw std::invalid_argument("garnir_step: tableau already standard");
    auto [row, col] = violations.front();
    return garnir_step_at(t, row, col);
}

namespace {

SpechtVector straighten(const Tableau& t) {
    if (t.is_standard()) return SpechtVector::unit(t);
    ShapeCache& cache = cache_for(t.shape());
    {
        std::lock_guard lock(cache.mu);
        auto it = cache.memo.find(t);
        if (it != cache.memo.end()) return *it->second;
    }
    SpechtVector result{Partition(t.shape())};
    for (const Tableau& u : garnir_step(t))
        result.add_scaled(straighten(combinat::row_standardize(u)), Rational(-1));
    {
        std::lock_guard lock(cache.mu);
        cache.memo.emplace(t, std::make_shared<const SpechtVector>(result));
    }
    return result;
}

}  // namespace

SpechtVector polytabloid(const Tableau& t) {
    check_partition_shape(t);
    return straighten(combinat::row_standardize(t));
}

SpechtVector polytabloid_with_choice(const Tableau& t, const std::function<int(int)>& pick) {
    check_partition_shape(t);
    Tableau tb = combinat::row_standardize(t);
    if (tb.is_standard()) return SpechtVector::unit(tb);
    auto violations = column_violations(tb);
    auto [row, col] = violations[pick(static_cast<int>(violations.size()))];
    SpechtVector result{Partition(tb.shape())};
    for (const Tableau& u : garnir_step_at(tb, row, col))
        result.add_scaled(polytabloid_with_choice(u, pick), Rational(-1));
    return result;
}

SpechtVector act_perm(const permalg::Permutation& sigma, const SpechtVector& v) {
    SpechtVector out(v.shape());
    for (const auto& [t, c] : v.coords()) {
        if (sigma.n() != t.size()) throw std::invalid_argument("act_perm: size mismatch");
        out.add_scaled(polytabloid(permalg::act_on_tableau(sigma, t)), c);
    }
    return out;
}

SpechtVector act_alg(const permalg::AlgebraElement& a, const SpechtVector& v) {
    SpechtVector out(v.shape());
    for (const auto& [sigma, ca] : a.terms())
        for (const auto& [t, c] : v.coords())
            out.add_scaled(polytabloid(permalg::act_on_tableau(sigma, t)), ca * c);
    return out;
}

Integer vector_denominator(const SpechtVector& v) {
    Integer d(1);
    for (const auto& [t, c] : v.coords()) d = lcm(d, denominator(c));
    return d;
}

void clear_straightening_cache() {
    std::lock_guard lock(g_registry_mu);
    g_registry.clear();
}

}  // namespace ysnb::specht
