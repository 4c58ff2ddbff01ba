#include "dilates/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dilates/bounds.hpp"
#include "dilates/components.hpp"
#include "dilates/error.hpp"
#include "dilates/intset.hpp"
#include "dilates/report.hpp"
#include "dilates/search.hpp"

namespace dilates::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct Output {
  Format format = Format::text;
  bool timestamp = false;
};

std::string join(std::span<const std::int64_t> v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void emit_json(std::ostream& out, const Output& o, const std::string& command, json params,
               json results, int status) {
  json doc{{"command", command},
           {"params", std::move(params)},
           {"results", std::move(results)},
           {"exit_status", status}};
  if (o.timestamp) doc["timestamp"] = utc_now();
  out << doc.dump(2) << '\n';
}

int run_sum(const std::string& set_text, const std::string& coeff_text, const Output& o,
            std::ostream& out) {
  const auto a = IntSet::from_elements(parse_int_list(set_text));
  const DilateSpec spec(parse_int_list(coeff_text));
  const auto s = dilate_sum(a, spec);
  if (o.format == Format::json) {
    emit_json(out, o, "sum", {{"set", a.list()}, {"coeffs", spec.coefficients()}},
              {{"size", s.size()}, {"elements", s.list()}}, success);
  } else {
    out << "size " << s.size() << '\n' << "elements " << join(s.elements()) << '\n';
  }
  return success;
}

int run_check(const std::string& set_text, std::int64_t k, const Output& o, std::ostream& out) {
  const auto a = IntSet::from_elements(parse_int_list(set_text));
  require_odd_prime(k, "--k");
  const auto canon = canonicalize(a);
  const auto reports = check_suite(a, k);
  const bool any_failed =
      std::any_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.fails(); });
  const int status = any_failed ? inequality_failed : success;

  switch (o.format) {
    case Format::json:
      emit_json(out, o, "check", {{"set", a.list()}, {"k", k}},
                {{"canonical_set", canon.set},
                 {"normalized", canon.set != a},
                 {"shift", canon.map.shift},
                 {"scale", canon.map.scale},
                 {"reports", reports}},
                status);
      break;
    case Format::csv:
      out << reports_csv(reports);
      break;
    case Format::text:
      out << "set " << a.to_string() << ", k = " << k << '\n';
      if (canon.set != a)
        out << "canonical form " << canon.set.to_string() << " (shift " << canon.map.shift
            << ", scale " << canon.map.scale << ") used where 0 in A and gcd 1 are required\n";
      for (const auto& r : reports) {
        out << std::left << std::setw(18) << to_string(r.statement_id) << std::setw(15)
            << to_string(r.verdict) << "lhs " << std::setw(8) << r.lhs << "rhs " << std::setw(8)
            << r.rhs << "slack " << r.slack;
        if (!r.note.empty()) out << "  [" << r.note << ']';
        if (!r.hypotheses_met) {
          for (const auto& h : r.hypotheses)
            if (!h.value) out << "  unmet: " << h.name;
        }
        out << '\n';
      }
      out << (any_failed ? "FAILED: a verified inequality does not hold\n"
                         : "all applicable statements hold\n");
      break;
  }
  return status;
}

int run_search(const SearchConfig& config, const Output& o, std::ostream& out) {
  const auto result = min_dilate_sum(config);
  const bool touches = result.touches_range(config.range_max);
  if (o.format == Format::json) {
    json results = result;
    results["touches_range"] = touches;
    emit_json(out, o, "search",
              {{"coeffs", config.spec.coefficients()},
               {"n", config.cardinality},
               {"range", config.range_max},
               {"prune", config.pruning},
               {"reflect", config.reflection_quotient},
               {"threads", config.parallel_width}},
              std::move(results), success);
    return success;
  }
  out << "minimum " << result.minimum << " for |sum m A|, m in " << config.spec.to_string()
      << ", over canonical " << config.cardinality << "-sets in [0, " << config.range_max << "]\n";
  out << "witnesses " << result.witness_count << " (showing " << result.witnesses.size() << ")\n";
  for (const auto& w : result.witnesses) out << "  " << w.to_string() << '\n';
  out << "nodes visited " << result.nodes_visited << ", pruned " << result.nodes_pruned << '\n';
  if (touches)
    out << "note: a witness reaches the range bound " << config.range_max
        << "; this is a minimum over [0, " << config.range_max << "] only\n";
  return success;
}

int run_probe(const DilateSpec& spec, std::int64_t from, std::int64_t to, std::int64_t range,
              std::size_t threads, const Output& o, std::ostream& out) {
  const auto rows = conjecture_probe(spec, from, to, range, threads);
  switch (o.format) {
    case Format::json:
      emit_json(out, o, "probe",
                {{"coeffs", spec.coefficients()}, {"n_from", from}, {"n_to", to}, {"range", range}},
                {{"rows", rows}}, success);
      break;
    case Format::csv:
      out << probe_csv(rows);
      break;
    case Format::text:
      out << "coefficients " << spec.to_string() << ", range [0, " << range << "]\n";
      out << std::left << std::setw(6) << "n" << std::setw(10) << "minimum" << std::setw(12)
          << "deficiency" << "witness\n";
      for (const auto& r : rows) {
        out << std::setw(6) << r.cardinality << std::setw(10) << r.minimum << std::setw(12)
            << r.deficiency << r.witness.to_string();
        if (r.non_progression_witness) out << "  (non-progression minimizer)";
        if (r.touches_range) out << "  (reaches range bound)";
        out << '\n';
      }
      break;
  }
  return success;
}

int run_ap(std::int64_t n, std::int64_t k, const Output& o, std::ostream& out) {
  const auto report = verify_ap_exact(n, k);
  const int status = report.holds() ? success : inequality_failed;
  if (o.format == Format::json) {
    emit_json(out, o, "ap", {{"n", n}, {"k", k}},
              {{"value", report.rhs}, {"computed", report.lhs}, {"report", report}}, status);
  } else {
    out << "(k+2)n - 2k = " << report.rhs << '\n'
        << "|2P + " << k << "P| for P = {0..." << n - 1 << "} = " << report.lhs << " ("
        << (report.holds() ? "verified" : "MISMATCH") << ")\n";
  }
  return status;
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    auto end = text.find(',', start);
    auto token = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw InvalidArgument("empty entry in integer list \"" + text + "\"");
    token = token.substr(first, last - first + 1);
    std::int64_t value = 0;
    const auto* b = token.data();
    const auto* e = token.data() + token.size();
    if (*b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, value);
    if (ec == std::errc::result_out_of_range)
      throw RangeError("integer " + token + " is outside the 64-bit range");
    if (ec != std::errc() || ptr != e)
      throw InvalidArgument("not an integer: \"" + token + "\"");
    out.push_back(value);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sums of dilates: exact sizes, bound checks and extremal search", "dilates"};
  app.require_subcommand(1);
  Output o;
  app.add_flag("--timestamp", o.timestamp, "Add a UTC timestamp to JSON output");

  auto add_format = [&](CLI::App* sub, bool csv) {
    auto* j = sub->add_flag_callback("--json", [&] { o.format = Format::json; }, "JSON output");
    if (csv) {
      auto* c = sub->add_flag_callback("--csv", [&] { o.format = Format::csv; }, "CSV output");
      j->excludes(c);
    }
  };

  std::string set_text, coeff_text;
  std::int64_t k = 0, n = 0, range = 0, n_from = 0, n_to = 0;
  std::size_t threads = 1, witness_cap = 64;
  bool no_prune = false, no_reflect = false, component_prune = false;

  auto* sum = app.add_subcommand("sum", "Print |sum m A| and its elements");
  sum->add_option("--set", set_text, "Comma-separated integers")->required();
  sum->add_option("--coeffs", coeff_text, "Comma-separated nonzero coefficients")->required();
  add_format(sum, false);

  auto* check = app.add_subcommand("check", "Check every applicable bound on A for an odd prime k");
  check->add_option("--set", set_text, "Comma-separated integers")->required();
  check->add_option("--k", k, "Odd prime")->required();
  add_format(check, true);

  auto* search = app.add_subcommand("search", "Exact minimum of |sum m A| over canonical sets");
  search->add_option("--coeffs", coeff_text, "Comma-separated nonzero coefficients")->required();
  search->add_option("--n", n, "Cardinality of A")->required();
  search->add_option("--range", range, "Sets are drawn from [0, range]")->required();
  search->add_flag("--no-prune", no_prune, "Disable branch pruning");
  search->add_flag("--no-reflect", no_reflect, "Do not quotient by reflection");
  search->add_flag("--component-prune", component_prune,
                   "Also prune with the residue-class count bound");
  search->add_option("--threads", threads, "Worker threads")->default_val(1);
  search->add_option("--witness-cap", witness_cap, "Witnesses to retain")->default_val(64);
  add_format(search, false);

  auto* probe = app.add_subcommand("probe", "Minimum and deficiency for a range of cardinalities");
  probe->add_option("--coeffs", coeff_text, "Comma-separated coefficients with gcd 1")->required();
  probe->add_option("--n-from", n_from, "Smallest cardinality")->required();
  probe->add_option("--n-to", n_to, "Largest cardinality")->required();
  probe->add_option("--range", range, "Sets are drawn from [0, range]")->required();
  probe->add_option("--threads", threads, "Worker threads")->default_val(1);
  add_format(probe, true);

  auto* ap = app.add_subcommand("ap", "Exact |2P + kP| for an arithmetic progression");
  ap->add_option("--n", n, "Length of the progression")->required();
  ap->add_option("--k", k, "Odd prime")->required();
  add_format(ap, false);

  std::vector<const char*> argv{"dilates"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? success : usage_error;
  }

  try {
    if (sum->parsed()) return run_sum(set_text, coeff_text, o, out);
    if (check->parsed()) return run_check(set_text, k, o, out);
    if (search->parsed()) {
      SearchConfig config{.spec = DilateSpec(parse_int_list(coeff_text)),
                          .cardinality = n,
                          .range_max = range,
                          .reflection_quotient = !no_reflect,
                          .pruning = !no_prune,
                          .component_pruning = component_prune,
                          .parallel_width = threads,
                          .witness_cap = witness_cap};
      return run_search(config, o, out);
    }
    if (probe->parsed())
      return run_probe(DilateSpec(parse_int_list(coeff_text)), n_from, n_to, range, threads, o, out);
    if (ap->parsed()) return run_ap(n, k, o, out);
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return range_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace dilates::cli
