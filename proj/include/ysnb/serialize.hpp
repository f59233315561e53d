#pragma once

#include <string>

#include <json.hpp>

#include "ysnb/combinat.hpp"
#include "ysnb/formulas.hpp"
#include "ysnb/oracle.hpp"
#include "ysnb/permalg.hpp"
#include "ysnb/seminormal.hpp"
#include "ysnb/specht.hpp"

// Machine formats: partitions as comma-separated integers, tableaux as JSON
// row arrays, fractions as decimal strings {"num","den"}.  Key order is
// fixed so output is byte-stable.
namespace ysnb::serialize {

using json = nlohmann::ordered_json;

combinat::Partition parse_partition(const std::string& text);
combinat::Tableau parse_tableau(const std::string& text);  // JSON row arrays

std::string partition_string(const combinat::Partition& p);

json to_json(const combinat::Tableau& t);
json to_json(const Rational& q);
json to_json(const specht::SpechtVector& v);
json to_json(const permalg::AlgebraElement& a);
json to_json(const seminormal::TransitionRow& row);
json to_json(const formulas::DenominatorReport& report);
json to_json(const oracle::SweepReport& report);

// Aligned text grid for --pretty.
std::string pretty_tableau(const combinat::Tableau& t);

}  // namespace ysnb::serialize
