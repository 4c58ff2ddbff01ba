#include "dilates/bounds.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

#include "dilates/checked.hpp"
#include "dilates/components.hpp"
#include "dilates/error.hpp"

namespace dilates {

namespace {

constexpr std::array statement_names{
    std::pair{StatementId::affine_invariance, std::string_view("affine_invariance")},
    std::pair{StatementId::component_bound, std::string_view("component_bound")},
    std::pair{StatementId::coprime_four, std::string_view("coprime_four")},
    std::pair{StatementId::full_semifull, std::string_view("full_semifull")},
    std::pair{StatementId::marginal_total, std::string_view("marginal_total")},
    std::pair{StatementId::marginal_faithful, std::string_view("marginal_faithful")},
    std::pair{StatementId::main_small, std::string_view("main_small")},
    std::pair{StatementId::main_strict, std::string_view("main_strict")},
    std::pair{StatementId::main_large, std::string_view("main_large")},
    std::pair{StatementId::ap_exact, std::string_view("ap_exact")},
};

constexpr std::array verdict_names{
    std::pair{Verdict::holds, std::string_view("holds")},
    std::pair{Verdict::fails, std::string_view("fails")},
    std::pair{Verdict::not_applicable, std::string_view("not-applicable")},
};

// Largest k for which 8 k^k fits in 64 bits among odd primes.
constexpr std::int64_t max_exact_k = 13;

std::int64_t size_of(const IntSet& a) { return static_cast<std::int64_t>(a.size()); }

std::int64_t size_of_sum(const IntSet& a, std::int64_t n, std::int64_t m) {
  return size_of(minkowski_sum(dilate(a, n), dilate(a, m)));
}

void require_exact_k(std::int64_t k) {
  require_odd_prime(k);
  if (k > max_exact_k)
    throw RangeError("k = " + std::to_string(k) + " exceeds " + std::to_string(max_exact_k) +
                     "; the bound's constant does not fit in 64 bits");
}

BoundReport not_applicable(StatementId id, std::string hypothesis, std::string note) {
  BoundReport r;
  r.statement_id = id;
  r.hypotheses.push_back({std::move(hypothesis), false});
  r.note = std::move(note);
  return finish_report(std::move(r), Relation::at_least);
}

}  // namespace

std::string_view to_string(StatementId id) {
  for (auto [k, name] : statement_names)
    if (k == id) return name;
  return "unknown";
}

std::optional<StatementId> statement_from_string(std::string_view name) {
  for (auto [k, n] : statement_names)
    if (n == name) return k;
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  for (auto [k, name] : verdict_names)
    if (k == v) return name;
  return "unknown";
}

std::optional<Verdict> verdict_from_string(std::string_view name) {
  for (auto [k, n] : verdict_names)
    if (n == name) return k;
  return std::nullopt;
}

BoundReport finish_report(BoundReport r, Relation rel) {
  r.hypotheses_met = std::all_of(r.hypotheses.begin(), r.hypotheses.end(),
                                 [](const NamedFlag& f) { return f.value; });
  r.slack = checked::sub(r.lhs, r.rhs);
  if (!r.hypotheses_met) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  bool ok = false;
  switch (rel) {
    case Relation::at_least: ok = r.lhs >= r.rhs; break;
    case Relation::greater: ok = r.lhs > r.rhs; break;
    case Relation::equal: ok = r.lhs == r.rhs; break;
  }
  r.verdict = ok ? Verdict::holds : Verdict::fails;
  return r;
}

BoundReport check_affine_invariance(const IntSet& a, std::int64_t r, std::int64_t s,
                                    std::int64_t u, std::int64_t v) {
  if (r == 0 || s == 0 || u == 0)
    throw InvalidArgument("affine invariance needs nonzero r, s and u");
  const auto base = size_of_sum(a, r, s);
  const auto translated = size_of_sum(translate(a, v), r, s);
  const auto scaled = size_of_sum(dilate(a, u), r, s);

  BoundReport rep;
  rep.statement_id = StatementId::affine_invariance;
  rep.lhs = base;
  rep.rhs = translated != base ? translated : scaled;
  rep.details = {{"translation_preserves_size", translated == base},
                 {"scaling_preserves_size", scaled == base}};
  rep = finish_report(std::move(rep), Relation::equal);
  if (rep.hypotheses_met && (translated != base || scaled != base)) rep.verdict = Verdict::fails;
  return rep;
}

BoundReport bound_basic(const IntSet& a, const IntSet& b, std::int64_t n, std::int64_t m) {
  if (n < 2 || m < 2) throw InvalidArgument("component bound needs n, m >= 2");
  const auto cn_b = static_cast<std::int64_t>(component_count(b, n));
  const auto cm_a = static_cast<std::int64_t>(component_count(a, m));

  BoundReport rep;
  rep.statement_id = StatementId::component_bound;
  rep.hypotheses = {{"gcd(n, m) = 1", std::gcd(n, m) == 1}};
  rep.lhs = size_of(minkowski_sum(dilate(a, n), dilate(b, m)));
  rep.rhs = checked::sub(checked::add(checked::mul(cn_b, size_of(a)), checked::mul(cm_a, size_of(b))),
                         checked::mul(cm_a, cn_b));
  return finish_report(std::move(rep), Relation::at_least);
}

BoundReport bound_four(const IntSet& a, std::int64_t n, std::int64_t m) {
  BoundReport rep;
  rep.statement_id = StatementId::coprime_four;
  rep.hypotheses = {{"2 <= n < m", 2 <= n && n < m}, {"gcd(n, m) = 1", std::gcd(n, m) == 1}};
  rep.lhs = size_of_sum(a, n, m);
  rep.rhs = checked::sub(checked::mul(4, size_of(a)), 4);
  return finish_report(std::move(rep), Relation::at_least);
}

BoundReport bound_full_semifull(const IntSet& a, std::int64_t m) {
  if (m < 3 || m % 2 == 0)
    throw InvalidArgument("modulus must be odd and >= 3, got " + std::to_string(m));
  const bool full = is_full(a, m);
  const bool semi = is_semi_full(a, m);
  const auto n = size_of(a);
  const auto scaled = checked::mul(checked::add(m, 2), n);

  BoundReport rep;
  rep.statement_id = StatementId::full_semifull;
  rep.hypotheses = {{"m-full or m-semi-full", full || semi}};
  rep.details = {{"m-full", full}, {"m-semi-full", semi}};
  rep.lhs = size_of_sum(a, 2, m);
  if (full) {
    rep.rhs = checked::sub(scaled, checked::mul(2, m));
  } else {
    const auto c = static_cast<std::int64_t>(component_count(a, m));
    rep.rhs = checked::sub(scaled, checked::mul(checked::mul(2, m), c));
  }
  return finish_report(std::move(rep), Relation::at_least);
}

BoundReport bound_marginal_total(const IntSet& a, std::int64_t k, bool require_prime) {
  if (require_prime)
    require_odd_prime(k);
  else if (k < 2)
    throw InvalidArgument("k must be >= 2, got " + std::to_string(k));

  const auto d = decompose(a, k);
  std::int64_t total = 0;
  std::int64_t outer = 0;
  bool interior_empty = true;
  for (const auto& [r, c] : d.blocks()) {
    const auto split = marginal_split(c, a, k);
    total += static_cast<std::int64_t>(split.size());
    outer += static_cast<std::int64_t>(split.low.size() + split.high.size());
    interior_empty = interior_empty && split.interior.empty();
  }
  const auto count = static_cast<std::int64_t>(d.count());

  BoundReport rep;
  rep.statement_id = StatementId::marginal_total;
  rep.hypotheses = {{"k odd prime", is_odd_prime(k)}};
  if (!require_prime) rep.hypotheses.clear();
  rep.lhs = total;
  rep.rhs = checked::mul(count - 1, count);
  rep.details = {{"interior_empty", interior_empty}, {"outer_parts_meet_bound", outer >= rep.rhs}};
  return finish_report(std::move(rep), Relation::at_least);
}

BoundReport check_faithful(const IntSet& a, std::int64_t k, std::int64_t c_residue) {
  BoundReport rep;
  rep.statement_id = StatementId::marginal_faithful;
  rep.note = "component residue " + std::to_string(c_residue) + " mod " + std::to_string(k);

  const bool prime = is_odd_prime(k);
  rep.hypotheses.push_back({"k odd prime", prime});
  rep.hypotheses.push_back({"0 in A", a.contains(0)});
  rep.hypotheses.push_back({"gcd(A) = 1", gcd(a) == 1});
  if (!prime) return finish_report(std::move(rep), Relation::at_least);

  const auto d = decompose(a, k);
  const bool exists = c_residue >= 0 && c_residue < k && d.has(c_residue);
  rep.hypotheses.push_back({"component exists", exists});
  if (!exists) return finish_report(std::move(rep), Relation::at_least);

  const auto& c = d.block(c_residue);
  const auto k2 = checked::mul(k, k);
  rep.hypotheses.push_back(
      {"component not k-semi-full", component_count(c, k2) < static_cast<std::size_t>(k)});
  rep.hypotheses.push_back({"another component exists", d.count() >= 2});

  const auto marginal = static_cast<std::int64_t>(marginal_set(c, a, k).size());
  std::int64_t largest_other = 0;
  for (const auto& [r, other] : d.blocks())
    if (r != c_residue) largest_other = std::max(largest_other, size_of(other));

  const bool other_as_large = largest_other >= size_of(c);
  const bool not_two_full = component_count(c, 2) < 2;
  rep.lhs = marginal;
  rep.rhs = largest_other;
  if (other_as_large || not_two_full) rep.rhs = std::max(rep.rhs, size_of(c));
  rep.details = {{"other_component_at_least_as_large", other_as_large},
                 {"component_not_2_full", not_two_full},
                 {"faithful", marginal >= size_of(c)}};
  return finish_report(std::move(rep), Relation::at_least);
}

BoundReport bound_main_small(const IntSet& a, std::int64_t k) {
  require_exact_k(k);
  BoundReport rep;
  rep.statement_id = StatementId::main_small;
  rep.hypotheses = {{"k odd prime", true}};
  rep.lhs = size_of_sum(a, 2, k);
  rep.rhs = checked::sub(checked::mul(k + 2, size_of(a)),
                         checked::mul(4, checked::pow(k, static_cast<unsigned>(k - 1))));
  return finish_report(std::move(rep), Relation::at_least);
}

LargeSetReports bound_main_large(const IntSet& a, std::int64_t k) {
  require_exact_k(k);
  const auto threshold = checked::mul(8, checked::pow(k, static_cast<unsigned>(k)));
  const auto n = size_of(a);
  const bool large = n > threshold;
  const auto lhs = size_of_sum(a, 2, k);
  const auto scaled = checked::mul(k + 2, n);

  LargeSetReports out;
  out.corollary.statement_id = StatementId::main_large;
  out.corollary.hypotheses = {{"|A| > 8k^k", large}};
  out.corollary.lhs = lhs;
  out.corollary.rhs = checked::add(checked::sub(checked::sub(scaled, k * k), k), 2);
  out.corollary = finish_report(std::move(out.corollary), Relation::at_least);

  out.strict.statement_id = StatementId::main_strict;
  out.strict.hypotheses = {{"0 in A", a.contains(0)},
                           {"gcd(A) = 1", gcd(a) == 1},
                           {"|A| > 8k^k", large},
                           {"A not k-semi-full", !is_semi_full(a, k)}};
  out.strict.lhs = lhs;
  out.strict.rhs = scaled;
  out.strict = finish_report(std::move(out.strict), Relation::greater);
  return out;
}

std::int64_t ap_exact_size(std::int64_t n, std::int64_t k) {
  if (n < 1) throw InvalidArgument("progression length must be >= 1, got " + std::to_string(n));
  require_odd_prime(k);
  if (n == 1) return 1;
  return checked::sub(checked::mul(checked::add(k, 2), n), checked::mul(2, k));
}

BoundReport verify_ap_exact(std::int64_t n, std::int64_t k) {
  BoundReport rep;
  rep.statement_id = StatementId::ap_exact;
  rep.rhs = ap_exact_size(n, k);
  rep.lhs = size_of_sum(IntSet::interval(0, n - 1), 2, k);
  return finish_report(std::move(rep), Relation::equal);
}

std::int64_t deficiency(const IntSet& a, const DilateSpec& spec) {
  if (spec.gcd() != 1)
    throw InvalidArgument("coefficients " + spec.to_string() + " must have gcd 1");
  return checked::sub(checked::mul(spec.abs_sum(), size_of(a)), size_of(dilate_sum(a, spec)));
}

std::vector<BoundReport> check_suite(const IntSet& a, std::int64_t k) {
  require_odd_prime(k);
  const auto canon = canonicalize(a);
  const bool normalized = canon.set != a;

  std::vector<BoundReport> out;
  auto guarded = [&](StatementId id, auto&& run) {
    try {
      run();
    } catch (const Error& e) {
      out.push_back(not_applicable(id, "computable in 64-bit range", e.what()));
    }
  };

  guarded(StatementId::component_bound, [&] { out.push_back(bound_basic(a, a, 2, k)); });
  guarded(StatementId::coprime_four, [&] { out.push_back(bound_four(a, 2, k)); });
  guarded(StatementId::full_semifull, [&] { out.push_back(bound_full_semifull(a, k)); });
  guarded(StatementId::marginal_total, [&] { out.push_back(bound_marginal_total(a, k)); });
  guarded(StatementId::marginal_faithful, [&] {
    for (const auto& [r, c] : decompose(canon.set, k).blocks()) {
      auto rep = check_faithful(canon.set, k, r);
      rep.normalized = normalized;
      out.push_back(std::move(rep));
    }
  });
  guarded(StatementId::main_small, [&] { out.push_back(bound_main_small(a, k)); });
  try {
    auto large = bound_main_large(canon.set, k);
    large.strict.normalized = normalized;
    large.corollary.normalized = normalized;
    out.push_back(std::move(large.strict));
    out.push_back(std::move(large.corollary));
  } catch (const Error& e) {
    out.push_back(not_applicable(StatementId::main_strict, "computable in 64-bit range", e.what()));
    out.push_back(not_applicable(StatementId::main_large, "computable in 64-bit range", e.what()));
  }

  std::stable_sort(out.begin(), out.end(), [](const BoundReport& x, const BoundReport& y) {
    return x.statement_id < y.statement_id;
  });
  return out;
}

}  // namespace dilates
