#include "ysnb/combinat.hpp"

#include <algorithm>
#include <numeric>

namespace ysnb::combinat {

Partition add_first_row(const Partition& lambda, int m) {
    std::vector<int> p = lambda.parts();
    if (p.empty()) p.push_back(0);
    p[0] += m;
    return Partition(p);
}

Composition concat_skew(const Partition& lambda, const Partition& nu) {
    if (!nu.contains(lambda)) throw std::invalid_argument("diagram containment violated");
    std::vector<int> p = lambda.parts();
    for (int i = 1; i <= nu.length(); ++i) p.push_back(nu.part(i) - lambda.part(i));
    return Composition(p);
}

Node Tableau::node_of(int k) const {
    for (int a = 0; a < n_rows(); ++a)
        for (int b = 0; b < static_cast<int>(rows_[a].size()); ++b)
            if (rows_[a][b] == k) return Node{a + 1, b + 1};
    throw std::invalid_argument("entry not present in tableau");
}

bool Tableau::is_row_standard() const {
    for (const auto& row : rows_)
        for (std::size_t j = 1; j < row.size(); ++j)
            if (row[j - 1] >= row[j]) return false;
    return true;
}

bool Tableau::is_column_standard() const {
    for (std::size_t a = 1; a < rows_.size(); ++a)
        for (std::size_t b = 0; b < rows_[a].size(); ++b) {
            if (b >= rows_[a - 1].size()) return false;  // not a partition-shaped column
            if (rows_[a - 1][b] >= rows_[a][b]) return false;
        }
    return true;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> w;
    w.reserve(size());
    for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
    return w;
}

bool dominance_leq(const Composition& mu, const Composition& lambda) {
    long acc_l = 0, acc_m = 0;
    int len = std::max(mu.length(), lambda.length());
    for (int k = 1; k <= len; ++k) {
        acc_l += lambda.part(k);
        acc_m += mu.part(k);
        if (acc_l < acc_m) return false;
    }
    return true;
}

std::vector<Node> removable_nodes(const Partition& lambda) {
    std::vector<Node> out;
    for (int a = 1; a <= lambda.length(); ++a)
        if (lambda.part(a + 1) < lambda.part(a)) out.push_back(Node{a, lambda.part(a)});
    return out;
}

Tableau initial_tableau(const Composition& lambda) {
    std::vector<std::vector<int>> rows(lambda.length());
    int next = 1;
    for (int a = 0; a < lambda.length(); ++a) {
        rows[a].resize(lambda.part(a + 1));
        for (int& x : rows[a]) x = next++;
    }
    return Tableau(std::move(rows));
}

Tableau up_arrow(const Tableau& s, const Partition& nu) {
    Composition mu = s.shape();
    if (!nu.as_composition().contains(mu))
        throw std::invalid_argument("up_arrow: shape containment violated");
    std::vector<std::vector<int>> rows = s.rows();
    rows.resize(nu.length());
    int next = s.size() + 1;
    for (int a = 0; a < nu.length(); ++a)
        while (static_cast<int>(rows[a].size()) < nu.part(a + 1)) rows[a].push_back(next++);
    return Tableau(std::move(rows));
}

Tableau up_arrow_initial(const Partition& lambda, const Partition& nu) {
    return up_arrow(initial_tableau(lambda), nu);
}

Tableau restrict(const Tableau& s, int r) {
    if (r < 1 || r > s.size()) throw std::invalid_argument("restrict: r out of range");
    std::vector<std::vector<int>> rows;
    for (const auto& row : s.rows()) {
        std::vector<int> cut;
        for (int x : row)
            if (x <= r) cut.push_back(x);
        rows.push_back(std::move(cut));
    }
    return Tableau(std::move(rows));
}

Tableau row_standardize(const Tableau& t) {
    std::vector<std::vector<int>> rows = t.rows();
    for (auto& row : rows) std::sort(row.begin(), row.end());
    return Tableau(std::move(rows));
}

namespace {

void gen_standard(const Partition& lambda, int next, int n, std::vector<int>& cur,
                  std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
    if (next > n) {
        out.push_back(Tableau(rows));
        return;
    }
    for (int a = 0; a < lambda.length(); ++a) {
        if (cur[a] >= lambda.part(a + 1)) continue;
        if (a > 0 && cur[a - 1] <= cur[a]) continue;
        rows[a].push_back(next);
        ++cur[a];
        gen_standard(lambda, next + 1, n, cur, rows, out);
        --cur[a];
        rows[a].pop_back();
    }
}

}  // namespace

std::vector<Tableau> enumerate_standard(const Partition& lambda) {
    std::vector<Tableau> out;
    std::vector<int> cur(lambda.length(), 0);
    std::vector<std::vector<int>> rows(lambda.length());
    gen_standard(lambda, 1, lambda.sum(), cur, rows, out);
    std::sort(out.begin(), out.end());
    return out;
}

Integer hook_length_count(const Partition& lambda) {
    Integer num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.sum()));
    Integer den(1);
    for (int a = 1; a <= lambda.length(); ++a)
        for (int b = 1; b <= lambda.part(a); ++b) {
            int arm = lambda.part(a) - b;
            int leg = 0;
            for (int c = a + 1; c <= lambda.length() && lambda.part(c) >= b; ++c) ++leg;
            den *= arm + leg + 1;
        }
    return num / den;
}

bool dominance_tableau_leq(const Tableau& t, const Tableau& s) {
    if (t.shape() != s.shape()) throw std::invalid_argument("dominance: shape mismatch");
    int n = t.size();
    int nrows = t.n_rows();
    std::vector<int> row_t(n + 1, 0), row_s(n + 1, 0);
    for (int a = 1; a <= nrows; ++a) {
        for (int x : t.rows()[a - 1]) row_t[x] = a;
        for (int x : s.rows()[a - 1]) row_s[x] = a;
    }
    std::vector<int> cnt_t(nrows + 1, 0), cnt_s(nrows + 1, 0);
    for (int r = 1; r <= n; ++r) {
        ++cnt_t[row_t[r]];
        ++cnt_s[row_s[r]];
        int acc_t = 0, acc_s = 0;
        for (int a = 1; a <= nrows; ++a) {
            acc_t += cnt_t[a];
            acc_s += cnt_s[a];
            if (acc_s < acc_t) return false;
        }
    }
    return true;
}

ColourProfile::ColourProfile(const Partition& lambda, const Partition& nu)
    : lambda_(lambda), nu_(nu) {
    Composition nu_lambda = concat_skew(lambda, nu);
    colour_.reserve(nu.sum());
    for (int j = 1; j <= nu_lambda.length(); ++j)
        for (int c = 0; c < nu_lambda.part(j); ++c) colour_.push_back(j);
}

bool is_colour_semistandard(const Tableau& t, const ColourProfile& profile) {
    const auto& rows = t.rows();
    for (std::size_t a = 1; a < rows.size(); ++a)
        for (std::size_t b = 0; b < rows[a].size(); ++b) {
            if (b >= rows[a - 1].size()) return false;
            if (profile.colour_of(rows[a - 1][b]) >= profile.colour_of(rows[a][b])) return false;
        }
    return true;
}

namespace {

void gen_colour_semistandard(const Partition& nu, const ColourProfile& profile, int next, int n,
                             std::vector<int>& cur, std::vector<std::vector<int>>& rows,
                             std::vector<Tableau>& out) {
    if (next > n) {
        out.push_back(Tableau(rows));
        return;
    }
    for (int a = 0; a < nu.length(); ++a) {
        if (cur[a] >= nu.part(a + 1)) continue;
        if (a > 0) {
            if (cur[a - 1] <= cur[a]) continue;
            if (profile.colour_of(rows[a - 1][cur[a]]) >= profile.colour_of(next)) continue;
        }
        rows[a].push_back(next);
        ++cur[a];
        gen_colour_semistandard(nu, profile, next + 1, n, cur, rows, out);
        --cur[a];
        rows[a].pop_back();
    }
}

}  // namespace

std::vector<Tableau> colour_semistandard_tableaux(const Partition& lambda, const Partition& nu) {
    ColourProfile profile(lambda, nu);
    std::vector<Tableau> out;
    std::vector<int> cur(nu.length(), 0);
    std::vector<std::vector<int>> rows(nu.length());
    gen_colour_semistandard(nu, profile, 1, nu.sum(), cur, rows, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void gen_weights(int s, int bound, std::vector<int>& cur, std::vector<Weight>& out) {
    if (static_cast<int>(cur.size()) == s) {
        out.push_back(Weight{cur});
        return;
    }
    for (int w = 0; w <= bound; ++w) {
        cur.push_back(w);
        gen_weights(s, bound - w, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Weight> all_weights(int s, int bound) {
    std::vector<Weight> out;
    std::vector<int> cur;
    gen_weights(s, bound, cur, out);
    return out;
}

Weight weight_of(const Tableau& s, int k, int l, int s_rows, int m) {
    std::vector<int> p{k};
    for (int i = 0; i < s_rows; ++i) p.push_back(l);
    Partition lambda(p);
    Partition nu = add_first_row(lambda, m);
    if (s.shape() != nu.as_composition())
        throw std::invalid_argument("weight_of: tableau not of shape (k,l^s)+(m)");
    ColourProfile profile(lambda, nu);
    std::vector<int> w(s_rows, 0);
    for (int x : s.rows()[0]) {
        int c = profile.colour_of(x);
        if (c >= 2 && c <= s_rows + 1) ++w[c - 2];
    }
    return Weight{w};
}

Tableau tableau_from_weight(const Weight& w, int k, int l, int m) {
    int s_rows = static_cast<int>(w.entries.size());
    if (w.total() > std::min(l, m))
        throw std::invalid_argument("tableau_from_weight: weight sum exceeds min(l,m)");
    std::vector<int> p{k};
    for (int i = 0; i < s_rows; ++i) p.push_back(l);
    Partition lambda(p);
    Partition nu = add_first_row(lambda, m);
    ColourProfile profile(lambda, nu);
    std::vector<std::vector<int>> rows = up_arrow_initial(lambda, nu).rows();
    for (int j = s_rows; j >= 1; --j) {
        int c = 0;
        for (int i = 0; i < j; ++i) c += w.entries[i];
        if (c == 0) continue;
        // rightmost c entries of colour c_{j+1} in row j+1
        std::vector<int> from_below;
        for (int b = static_cast<int>(rows[j].size()) - 1;
             b >= 0 && static_cast<int>(from_below.size()) < c; --b)
            if (profile.colour_of(rows[j][b]) == j + 1) from_below.push_back(rows[j][b]);
        // leftmost c entries of colour c_{j+2} in row 1
        std::vector<int> from_top;
        for (std::size_t b = 0; b < rows[0].size() && static_cast<int>(from_top.size()) < c; ++b)
            if (profile.colour_of(rows[0][b]) == j + 2) from_top.push_back(rows[0][b]);
        if (static_cast<int>(from_below.size()) != c || static_cast<int>(from_top.size()) != c)
            throw std::invalid_argument("tableau_from_weight: swap sets unavailable");
        for (auto& x : rows[0])
            for (std::size_t i = 0; i < from_top.size(); ++i)
                if (x == from_top[i]) x = from_below[i];
        for (auto& x : rows[j])
            for (std::size_t i = 0; i < from_below.size(); ++i)
                if (x == from_below[i]) x = from_top[i];
        std::sort(rows[0].begin(), rows[0].end());
        std::sort(rows[j].begin(), rows[j].end());
    }
    return Tableau(std::move(rows));
}

QpSets qp_sets(const Tableau& s, const Partition& lambda) {
    Partition nu = add_first_row(lambda, 1);
    if (s.shape() != nu.as_composition())
        throw std::invalid_argument("qp_sets: tableau not of shape lambda+(1)");
    ColourProfile profile(lambda, nu);
    if (!s.is_standard() || !is_colour_semistandard(s, profile))
        throw std::invalid_argument("qp_sets: tableau not colour-semistandard");
    QpSets out;
    int r = lambda.length();
    for (int i = 2; i <= r; ++i) {
        bool foreign = false;
        for (int x : s.rows()[i - 1])
            if (profile.colour_of(x) != i) foreign = true;
        if (foreign) out.q.push_back(i);
    }
    for (int i : out.q) {
        int a = lambda.part(i);
        bool found = false;
        for (auto& [size, block] : out.q_blocks)
            if (size == a) {
                block.push_back(i);
                found = true;
            }
        if (!found) out.q_blocks.push_back({a, {i}});
    }
    for (const auto& [size, block] : out.q_blocks) out.p.push_back(block.front());
    std::sort(out.p.begin(), out.p.end());
    return out;
}

}  // namespace ysnb::combinat
