#include "dilates/report.hpp"

#include <sstream>

#include "dilates/error.hpp"

namespace dilates {

using nlohmann::json;

void to_json(json& j, const NamedFlag& f) { j = json{{"name", f.name}, {"value", f.value}}; }

void from_json(const json& j, NamedFlag& f) {
  j.at("name").get_to(f.name);
  j.at("value").get_to(f.value);
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"statement_id", to_string(r.statement_id)},
           {"hypotheses_met", r.hypotheses_met},
           {"hypotheses", r.hypotheses},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"slack", r.slack},
           {"holds", r.verdict == Verdict::not_applicable ? json(nullptr) : json(r.holds())},
           {"verdict", to_string(r.verdict)},
           {"details", r.details},
           {"normalized", r.normalized},
           {"note", r.note}};
}

void from_json(const json& j, BoundReport& r) {
  const auto id = statement_from_string(j.at("statement_id").get<std::string>());
  const auto verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (!id || !verdict) throw InvalidArgument("unknown statement id or verdict in report");
  r.statement_id = *id;
  r.verdict = *verdict;
  j.at("hypotheses_met").get_to(r.hypotheses_met);
  j.at("hypotheses").get_to(r.hypotheses);
  j.at("lhs").get_to(r.lhs);
  j.at("rhs").get_to(r.rhs);
  j.at("slack").get_to(r.slack);
  j.at("details").get_to(r.details);
  j.at("normalized").get_to(r.normalized);
  j.at("note").get_to(r.note);
}

void to_json(json& j, const SearchResult& r) {
  j = json{{"minimum", r.minimum},
           {"witnesses", r.witnesses},
           {"witness_count", r.witness_count},
           {"nodes_visited", r.nodes_visited},
           {"nodes_pruned", r.nodes_pruned}};
}

void from_json(const json& j, SearchResult& r) {
  j.at("minimum").get_to(r.minimum);
  r.witnesses.clear();
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(w.get<IntSet>());
  j.at("witness_count").get_to(r.witness_count);
  j.at("nodes_visited").get_to(r.nodes_visited);
  j.at("nodes_pruned").get_to(r.nodes_pruned);
}

void to_json(json& j, const ProbeRow& r) {
  j = json{{"cardinality", r.cardinality},
           {"minimum", r.minimum},
           {"deficiency", r.deficiency},
           {"witness", r.witness},
           {"witness_count", r.witness_count},
           {"non_progression_witness", r.non_progression_witness},
           {"touches_range", r.touches_range}};
}

void from_json(const json& j, ProbeRow& r) {
  j.at("cardinality").get_to(r.cardinality);
  j.at("minimum").get_to(r.minimum);
  j.at("deficiency").get_to(r.deficiency);
  r.witness = j.at("witness").get<IntSet>();
  j.at("witness_count").get_to(r.witness_count);
  j.at("non_progression_witness").get_to(r.non_progression_witness);
  j.at("touches_range").get_to(r.touches_range);
}

std::string reports_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << "statement_id,hypotheses_met,lhs,rhs,slack,verdict,normalized\n";
  for (const auto& r : reports)
    os << to_string(r.statement_id) << ',' << (r.hypotheses_met ? "true" : "false") << ','
       << r.lhs << ',' << r.rhs << ',' << r.slack << ',' << to_string(r.verdict) << ','
       << (r.normalized ? "true" : "false") << '\n';
  return os.str();
}

std::string probe_csv(const std::vector<ProbeRow>& rows) {
  std::ostringstream os;
  os << "cardinality,minimum,deficiency,witness,witness_count,non_progression_witness,"
        "touches_range\n";
  for (const auto& r : rows) {
    os << r.cardinality << ',' << r.minimum << ',' << r.deficiency << ',';
    for (std::size_t i = 0; i < r.witness.size(); ++i) os << (i ? " " : "") << r.witness[i];
    os << ',' << r.witness_count << ',' << (r.non_progression_witness ? "true" : "false") << ','
       << (r.touches_range ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace dilates
