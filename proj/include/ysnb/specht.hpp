#pragma once

#include <functional>
#include <map>
#include <vector>

#include "ysnb/combinat.hpp"
#include "ysnb/permalg.hpp"
#include "ysnb/rational.hpp"

// The dual Specht module S^Q_lambda in its standard basis: polytabloids,
// Garnir straightening and the S_n-action.
namespace ysnb::specht {

// Coordinates in the standard (polytabloid) basis, keyed by standard
// tableaux in reading-word order.  Zero coefficients are never stored.
class SpechtVector {
  public:
    SpechtVector() = default;
    explicit SpechtVector(combinat::Partition shape) : shape_(std::move(shape)) {}

    static SpechtVector unit(const combinat::Tableau& t);

    const combinat::Partition& shape() const { return shape_; }
    const std::map<combinat::Tableau, Rational>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }
    std::size_t term_count() const { return coords_.size(); }
    void add(const combinat::Tableau& t, const Rational& c);
    void add_scaled(const SpechtVector& v, const Rational& c);
    Rational coeff(const combinat::Tableau& t) const;

    bool operator==(const SpechtVector& other) const {
        return shape_ == other.shape_ && coords_ == other.coords_;
    }

  private:
    combinat::Partition shape_;
    std::map<combinat::Tableau, Rational> coords_;
};

SpechtVector add(const SpechtVector& a, const SpechtVector& b);
SpechtVector scale(const SpechtVector& a, const Rational& c);

// One Garnir exchange at the first (topmost, then leftmost) column violation
// of a row-standard non-standard tableau: returns the tableaux tau.t for tau
// in G_{X,Y} \ {1}, so that e_t = -sum e_{tau.t}.  Every output
// row-standardizes to a tableau strictly above t in dominance.
std::vector<combinat::Tableau> garnir_step(const combinat::Tableau& t);

// As above but expanding at the given column violation (row, col), for
// violation-independence tests.
std::vector<combinat::Tableau> garnir_step_at(const combinat::Tableau& t, int row, int col);

// Expansion of the polytabloid e_t in the standard basis (memoized per
// shape; thread-safe insert-if-absent).
SpechtVector polytabloid(const combinat::Tableau& t);

// Straightening with the violation chosen by `pick(count)` in [0, count)
// instead of first-in-reading-order; no memoisation.
SpechtVector polytabloid_with_choice(const combinat::Tableau& t,
                                     const std::function<int(int)>& pick);

// sigma e_t = e_{sigma.t}, extended linearly.
SpechtVector act_perm(const permalg::Permutation& sigma, const SpechtVector& v);

// Linear extension of the algebra action.
SpechtVector act_alg(const permalg::AlgebraElement& a, const SpechtVector& v);

// Least k > 0 with k.v integral; 1 for the zero vector.
Integer vector_denominator(const SpechtVector& v);

// Drop all memoized straightening data (used between large sweeps).
void clear_straightening_cache();

}  // namespace ysnb::specht
