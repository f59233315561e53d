#pragma once

#include <compare>
#include <cstddef>
#include <unordered_map>
#include <vector>

#include "ysnb/combinat.hpp"
#include "ysnb/rational.hpp"

// Permutations of [1,n] in one-line form and the sparse group algebra over
// exact rationals.  Composition is right-to-left: (a*b)(x) = a(b(x)).
namespace ysnb::permalg {

class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // (a,b) as an element of S_n.
    static Permutation transposition(int n, int a, int b);
    // s_i = (i, i+1).
    static Permutation basic(int n, int i) { return transposition(n, i, i + 1); }

    int n() const { return static_cast<int>(img_.size()); }
    int of(int x) const { return img_[x - 1]; }
    const std::vector<int>& images() const { return img_; }
    bool is_identity() const;
    Permutation inverse() const;
    int length() const;  // Coxeter length = inversion count

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> img_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::size_t h = 0x811c9dc5u;
        for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
        return h;
    }
};

// (a o b)(x) = a(b(x)); sizes must agree.
Permutation compose(const Permutation& a, const Permutation& b);

// sigma^{+k}: fixes [1,k], maps x+k to sigma(x)+k.
Permutation shift(const Permutation& p, int k);

// Embed into S_m fixing [n+1, m] pointwise.
Permutation extend(const Permutation& p, int m);

// The unique d with d . t^lambda = s, i.e. the reading word of s in one-line
// form.
Permutation d_of(const combinat::Tableau& s);

// Entry-wise relabelling sigma . t.
combinat::Tableau act_on_tableau(const Permutation& sigma, const combinat::Tableau& t);

// Finite Q-linear combination of permutations of a fixed [1,n]; zero
// coefficients are never stored.
class AlgebraElement {
  public:
    AlgebraElement() = default;
    explicit AlgebraElement(int n) : n_(n) {}

    static AlgebraElement unit(int n);
    static AlgebraElement of(const Permutation& p, const Rational& c = Rational(1));

    int n() const { return n_; }
    const std::unordered_map<Permutation, Rational, PermutationHash>& terms() const {
        return terms_;
    }
    std::size_t term_count() const { return terms_.size(); }
    void add(const Permutation& p, const Rational& c);
    Rational coeff(const Permutation& p) const;

    bool operator==(const AlgebraElement& other) const {
        return n_ == other.n_ && terms_ == other.terms_;
    }

  private:
    int n_ = 0;
    std::unordered_map<Permutation, Rational, PermutationHash> terms_;
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const Rational& c);
// Convolution product.
AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement shift(const AlgebraElement& a, int k);
AlgebraElement extend(const AlgebraElement& a, int m);

}  // namespace ysnb::permalg
