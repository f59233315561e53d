#pragma once

#include <map>
#include <string>
#include <vector>

#include "ysnb/combinat.hpp"
#include "ysnb/specht.hpp"

// Independent brute-force verifiers: Garnir-span membership in tabloid
// space, chain independence, formula-vs-recursion sweeps.  This module
// certifies; it does not scale.
namespace ysnb::oracle {

using combinat::Partition;
using combinat::Tableau;

// Element of the permutation module M^lambda, keyed by the row-standard
// representatives of tabloids.
class TabloidVector {
  public:
    TabloidVector() = default;
    explicit TabloidVector(Partition shape) : shape_(std::move(shape)) {}

    const Partition& shape() const { return shape_; }
    const std::map<Tableau, Rational>& coords() const { return coords_; }
    void add(const Tableau& t, const Rational& c);

  private:
    Partition shape_;
    std::map<Tableau, Rational> coords_;
};

// All row-standard lambda-tableaux (tabloid representatives).
std::vector<Tableau> row_standard_tableaux(const Partition& lambda);

// For every tabloid {t}, row index i and non-empty subset X of row i+1, the
// relation vector {t} - (-1)^{|X|} sum_Y {t with X and Y interchanged}.
// These span the straightening kernel.
std::vector<TabloidVector> garnir_relation_vectors(const Partition& lambda);

// Exact rational span with incremental Gaussian elimination.
class RationalSpan {
  public:
    explicit RationalSpan(int dim) : dim_(dim) {}
    // Returns true if v was independent of the current span.
    bool insert(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;
    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    void eliminate(std::vector<Rational>& v) const;
    int dim_;
    std::vector<std::vector<Rational>> rows_;  // one pivot (=1) per row
    std::vector<int> pivots_;
};

// Every polytabloid expansion of specht::polytabloid lies in the Garnir
// span, and dim M^lambda - rank = |STab(lambda)|.
bool straightening_consistent(const Partition& lambda);

// Partitions of exactly n, and the non-empty partitions whose diagram is
// contained in [nu].
std::vector<Partition> partitions_of(int n);
std::vector<Partition> sub_partitions(const Partition& nu);

struct SweepLimits {
    int max_n = 5;          // bound on |lambda| (or |nu| where noted)
    int seeds = 5;          // randomized chains per tableau
    unsigned long seed = 12345;
    int k = 4, l = 0, s = 2, m = 2;  // parameter-family caps (l <= k when 0)
    bool single_tuple = false;       // four-reductions: run (k,l,s,m) alone
    std::string family;              // formula-vs-recursion: restrict to one family
    bool log_cases = false;          // record every case, not just failures
};

struct SweepReport {
    std::string suite;
    long cases = 0;
    std::vector<std::string> failures;
    std::vector<std::pair<std::string, bool>> case_log;  // filled when log_cases is set
    bool ok() const { return failures.empty(); }
};

// Suites: garnir-span, action-property, formula-vs-recursion,
// four-reductions, transport, divisibility.
std::vector<std::string> suite_names();
SweepReport sweep(const std::string& suite, const SweepLimits& limits);

}  // namespace ysnb::oracle
