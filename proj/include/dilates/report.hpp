#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dilates/bounds.hpp"
#include "dilates/intset.hpp"
#include "dilates/search.hpp"

namespace nlohmann {

template <>
struct adl_serializer<dilates::IntSet> {
  static void to_json(json& j, const dilates::IntSet& s) { j = s.list(); }
  static dilates::IntSet from_json(const json& j) {
    return dilates::IntSet::from_sorted(j.get<std::vector<std::int64_t>>());
  }
};

}  // namespace nlohmann

namespace dilates {

void to_json(nlohmann::json& j, const NamedFlag& f);
void from_json(const nlohmann::json& j, NamedFlag& f);

/// Flat record; "holds" is null when the verdict is not-applicable.
void to_json(nlohmann::json& j, const BoundReport& r);
void from_json(const nlohmann::json& j, BoundReport& r);

void to_json(nlohmann::json& j, const SearchResult& r);
void from_json(const nlohmann::json& j, SearchResult& r);

void to_json(nlohmann::json& j, const ProbeRow& r);
void from_json(const nlohmann::json& j, ProbeRow& r);

std::string reports_csv(const std::vector<BoundReport>& reports);
std::string probe_csv(const std::vector<ProbeRow>& rows);

}  // namespace dilates
