#include "ysnb/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ysnb::serialize {

combinat::Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || item.empty())
            throw std::invalid_argument("bad partition entry: '" + item + "'");
        parts.push_back(value);
    }
    if (parts.empty()) throw std::invalid_argument("empty partition string");
    return combinat::Partition(parts);
}

combinat::Tableau parse_tableau(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("tableau must be an array of row arrays");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("tableau row must be an array");
        rows.push_back(row.get<std::vector<int>>());
    }
    return combinat::Tableau(std::move(rows));
}

std::string partition_string(const combinat::Partition& p) {
    std::ostringstream os;
    for (int i = 1; i <= p.length(); ++i) os << (i > 1 ? "," : "") << p.part(i);
    return os.str();
}

json to_json(const combinat::Tableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return rows;
}

json to_json(const Rational& q) {
    return json{{"num", numerator(q).get_str()}, {"den", denominator(q).get_str()}};
}

json to_json(const specht::SpechtVector& v) {
    json terms = json::array();
    for (const auto& [t, c] : v.coords()) {
        json term;
        term["tableau"] = to_json(t);
        term["num"] = numerator(c).get_str();
        term["den"] = denominator(c).get_str();
        terms.push_back(std::move(term));
    }
    return terms;
}

json to_json(const permalg::AlgebraElement& a) {
    std::vector<permalg::Permutation> keys;
    keys.reserve(a.term_count());
    for (const auto& [p, c] : a.terms()) keys.push_back(p);
    std::sort(keys.begin(), keys.end());
    json terms = json::array();
    for (const auto& p : keys) {
        Rational c = a.coeff(p);
        json term;
        term["perm"] = p.images();
        term["num"] = numerator(c).get_str();
        term["den"] = denominator(c).get_str();
        terms.push_back(std::move(term));
    }
    return terms;
}

json to_json(const seminormal::TransitionRow& row) {
    json out;
    out["shape"] = partition_string(combinat::Partition(row.source.shape()));
    out["tableau"] = to_json(row.source);
    out["coeffs"] = to_json(row.coeffs);
    out["denominator"] = row.denominator.get_str();
    return out;
}

json to_json(const formulas::DenominatorReport& report) {
    json out;
    if (report.value) out["value"] = report.value->get_str();
    out["route"] = formulas::route_name(report.route);
    if (report.bound) out["bound"] = report.bound->get_str();
    return out;
}

json to_json(const oracle::SweepReport& report) {
    json out;
    out["suite"] = report.suite;
    out["cases"] = report.cases;
    out["failures"] = report.failures;
    out["ok"] = report.ok();
    return out;
}

std::string pretty_tableau(const combinat::Tableau& t) {
    int width = 1;
    for (const auto& row : t.rows())
        for (int x : row) width = std::max(width, static_cast<int>(std::to_string(x).size()));
    std::ostringstream os;
    for (const auto& row : t.rows()) {
        for (std::size_t b = 0; b < row.size(); ++b) {
            std::string cell = std::to_string(row[b]);
            os << (b ? " " : "") << std::string(width - cell.size(), ' ') << cell;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace ysnb::serialize
