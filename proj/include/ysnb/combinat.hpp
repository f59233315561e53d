#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ysnb/rational.hpp"

// Partitions, compositions, Young diagrams, tableaux, dominance orders,
// up-arrow constructions and the colour/weight machinery.
namespace ysnb::combinat {

struct Node {
    int row = 0;  // 1-based
    int col = 0;  // 1-based
    friend auto operator<=>(const Node&, const Node&) = default;
};

// Residue of a node: col - row.
inline int residue(const Node& a) { return a.col - a.row; }

// A finite sequence of non-negative integers; trailing zeros are trimmed on
// construction so equal compositions compare equal.  Interior zeros are kept
// (they matter for colour indexing).
class Composition {
  public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("composition part < 0");
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    int length() const { return static_cast<int>(parts_.size()); }
    // 1-based part access; parts beyond the length read as 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    int sum() const {
        int n = 0;
        for (int p : parts_) n += p;
        return n;
    }
    const std::vector<int>& parts() const { return parts_; }
    bool contains(const Composition& mu) const {
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }
    friend auto operator<=>(const Composition&, const Composition&) = default;

  private:
    std::vector<int> parts_;
};

// Weakly decreasing positive parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : comp_(std::move(parts)) {
        for (int i = 1; i < comp_.length(); ++i)
            if (comp_.part(i) < comp_.part(i + 1))
                throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    explicit Partition(const Composition& c) : Partition(c.parts()) {}

    int length() const { return comp_.length(); }
    int part(int i) const { return comp_.part(i); }
    int sum() const { return comp_.sum(); }
    const std::vector<int>& parts() const { return comp_.parts(); }
    const Composition& as_composition() const { return comp_; }
    bool contains(const Partition& mu) const { return comp_.contains(mu.as_composition()); }
    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    Composition comp_;
};

// lambda + (m) = (lambda_1 + m, lambda_2, ...).
Partition add_first_row(const Partition& lambda, int m);
// Concatenation of lambda and nu - lambda (the composition nu_lambda).
Composition concat_skew(const Partition& lambda, const Partition& nu);

// A filling of the diagram of a composition by 1..n, stored dense as rows.
class Tableau {
  public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int n_rows() const { return static_cast<int>(rows_.size()); }
    int size() const {
        int n = 0;
        for (const auto& r : rows_) n += static_cast<int>(r.size());
        return n;
    }
    Composition shape() const {
        std::vector<int> p;
        p.reserve(rows_.size());
        for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
        return Composition(p);
    }
    // 1-based
    int entry(int row, int col) const { return rows_[row - 1][col - 1]; }
    Node node_of(int k) const;
    bool is_row_standard() const;
    bool is_column_standard() const;
    bool is_standard() const { return is_row_standard() && is_column_standard(); }
    // Residue of the node holding k.
    int residue_of(int k) const { return residue(node_of(k)); }
    std::vector<int> reading_word() const;

    // Reading-word order (shapes compared implicitly through row lengths).
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

  private:
    std::vector<std::vector<int>> rows_;
};

struct TableauHash {
    std::size_t operator()(const Tableau& t) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (const auto& row : t.rows()) {
            h = (h ^ (row.size() + 0x9e3779b97f4a7c15ull)) * 0x100000001b3ull;
            for (int x : row) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
        }
        return h;
    }
};

// Dominance order on compositions: lambda >= mu iff all prefix sums of
// lambda are >= those of mu.  dominance_leq(mu, lambda) <=> lambda >= mu.
bool dominance_leq(const Composition& mu, const Composition& lambda);

// Removable nodes of a partition, in increasing row order.
std::vector<Node> removable_nodes(const Partition& lambda);

// Rows filled left-to-right, top-to-bottom with 1..n.
Tableau initial_tableau(const Composition& lambda);
inline Tableau initial_tableau(const Partition& lambda) {
    return initial_tableau(lambda.as_composition());
}

// The largest standard nu-tableau restricting to s: skew nodes filled row by
// row with n+1, n+2, ...
Tableau up_arrow(const Tableau& s, const Partition& nu);
// t^lambda up-arrowed into nu.
Tableau up_arrow_initial(const Partition& lambda, const Partition& nu);

// Restriction of a row-standard tableau to entries <= r.
Tableau restrict(const Tableau& s, int r);

// Sort each row increasingly.
Tableau row_standardize(const Tableau& t);

// All standard lambda-tableaux in reading-word order; the count matches the
// hook-length formula.
std::vector<Tableau> enumerate_standard(const Partition& lambda);

Integer hook_length_count(const Partition& lambda);

// s >= t in the dominance order on row-standard tableaux of equal shape.
// dominance_tableau_leq(t, s) <=> s >= t.
bool dominance_tableau_leq(const Tableau& t, const Tableau& s);

// Colour of each integer in [1,|nu|]: its row in the initial nu_lambda-tableau.
class ColourProfile {
  public:
    ColourProfile(const Partition& lambda, const Partition& nu);

    const Partition& lambda() const { return lambda_; }
    const Partition& nu() const { return nu_; }
    int colour_of(int i) const { return colour_[i - 1]; }
    int n() const { return static_cast<int>(colour_.size()); }

  private:
    Partition lambda_, nu_;
    std::vector<int> colour_;  // colour_[i-1] = row of i in t^{nu_lambda}
};

bool is_colour_semistandard(const Tableau& t, const ColourProfile& profile);

// SSTab(lambda; nu-lambda): standard nu-tableaux whose colours strictly
// increase down each column, in reading-word order.  Enumerated directly
// (never by filtering STab, which is astronomically larger).
std::vector<Tableau> colour_semistandard_tableaux(const Partition& lambda, const Partition& nu);

struct Weight {
    std::vector<int> entries;
    int total() const {
        int s = 0;
        for (int w : entries) s += w;
        return s;
    }
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

// All weights (w_1..w_s) with sum <= bound.
std::vector<Weight> all_weights(int s, int bound);

// Weight of s in SSTab((k,l^s); m): n_i = number of first-row entries of
// colour c_{i+1}.
Weight weight_of(const Tableau& s, int k, int l, int s_rows, int m);

// The minimal colour-semistandard tableau of a given weight (swap
// construction working from the bottom row up).
Tableau tableau_from_weight(const Weight& w, int k, int l, int m);

struct QpSets {
    std::vector<int> q;                              // Q(s), increasing
    std::vector<int> p;                              // P(s), increasing
    std::vector<std::pair<int, std::vector<int>>> q_blocks;  // part size a -> Q(s)_a
};

// Q(s)/P(s) of section-3 type for s in SSTab(lambda; 1).
QpSets qp_sets(const Tableau& s, const Partition& lambda);

}  // namespace ysnb::combinat
