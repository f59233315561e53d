#include "ysnb/permalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ysnb::permalg {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
        if (x < 1 || x > static_cast<int>(img_.size()) || seen[x - 1])
            throw std::invalid_argument("not a bijection of [1,n]");
        seen[x - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("transposition out of range");
    Permutation p = identity(n);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (of(i) != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= n(); ++i) inv[of(i) - 1] = i;
    return Permutation(std::move(inv));
}

int Permutation::length() const {
    int len = 0;
    for (int i = 1; i <= n(); ++i)
        for (int j = i + 1; j <= n(); ++j)
            if (of(i) > of(j)) ++len;
    return len;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(a.n());
    for (int x = 1; x <= a.n(); ++x) img[x - 1] = a.of(b.of(x));
    return Permutation(std::move(img));
}

Permutation shift(const Permutation& p, int k) {
    if (k < 0) throw std::invalid_argument("shift: negative k");
    std::vector<int> img(p.n() + k);
    std::iota(img.begin(), img.begin() + k, 1);
    for (int x = 1; x <= p.n(); ++x) img[k + x - 1] = p.of(x) + k;
    return Permutation(std::move(img));
}

Permutation extend(const Permutation& p, int m) {
    if (m < p.n()) throw std::invalid_argument("extend: target smaller than domain");
    std::vector<int> img(m);
    for (int x = 1; x <= p.n(); ++x) img[x - 1] = p.of(x);
    std::iota(img.begin() + p.n(), img.end(), p.n() + 1);
    return Permutation(std::move(img));
}

Permutation d_of(const combinat::Tableau& s) {
    return Permutation(s.reading_word());
}

combinat::Tableau act_on_tableau(const Permutation& sigma, const combinat::Tableau& t) {
    if (sigma.n() != t.size()) throw std::invalid_argument("act_on_tableau: size mismatch");
    std::vector<std::vector<int>> rows = t.rows();
    for (auto& row : rows)
        for (int& x : row) x = sigma.of(x);
    return combinat::Tableau(std::move(rows));
}

AlgebraElement AlgebraElement::unit(int n) { return of(Permutation::identity(n)); }

AlgebraElement AlgebraElement::of(const Permutation& p, const Rational& c) {
    AlgebraElement a(p.n());
    a.add(p, c);
    return a;
}

void AlgebraElement::add(const Permutation& p, const Rational& c) {
    if (p.n() != n_) throw std::invalid_argument("algebra term: size mismatch");
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational AlgebraElement::coeff(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("algebra add: size mismatch");
    AlgebraElement out = a;
    for (const auto& [p, c] : b.terms()) out.add(p, c);
    return out;
}

AlgebraElement scale(const AlgebraElement& a, const Rational& c) {
    AlgebraElement out(a.n());
    if (c == 0) return out;
    for (const auto& [p, q] : a.terms()) out.add(p, q * c);
    return out;
}

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("algebra mul: size mismatch");
    AlgebraElement out(a.n());
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) out.add(compose(pa, pb), ca * cb);
    return out;
}

AlgebraElement shift(const AlgebraElement& a, int k) {
    AlgebraElement out(a.n() + k);
    for (const auto& [p, c] : a.terms()) out.add(shift(p, k), c);
    return out;
}

AlgebraElement extend(const AlgebraElement& a, int m) {
    AlgebraElement out(m);
    for (const auto& [p, c] : a.terms()) out.add(extend(p, m), c);
    return out;
}

}  // namespace ysnb::permalg
