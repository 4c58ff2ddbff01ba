#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dilates/intset.hpp"

namespace dilates {

/// One label per verified statement. The declaration order is the order in
/// which check_suite reports.
enum class StatementId {
  affine_invariance,     ///< |rA+sA| unchanged by translation and scaling of A
  component_bound,       ///< |nA+mB| >= c_n(B)|A| + c_m(A)|B| - c_m(A)c_n(B)
  coprime_four,          ///< |nA+mA| >= 4|A| - 4
  full_semifull,         ///< |2A+mA| >= (m+2)|A| - 2m (full) or - 2m c_m(A) (semi-full)
  marginal_total,        ///< sum of |M_C| >= (c-1)c
  marginal_faithful,     ///< |M_C| >= |C'|, and |M_C| >= |C| under either sufficient condition
  main_small,            ///< |2A+kA| >= (k+2)|A| - 4k^(k-1)
  main_strict,           ///< |2A+kA| > (k+2)|A| for large non semi-full A
  main_large,            ///< |2A+kA| >= (k+2)|A| - k^2 - k + 2 for |A| > 8k^k
  ap_exact,              ///< |2P+kP| = (k+2)|P| - 2k for an arithmetic progression P
};

std::string_view to_string(StatementId id);
std::optional<StatementId> statement_from_string(std::string_view name);

enum class Verdict { holds, fails, not_applicable };

std::string_view to_string(Verdict v);
std::optional<Verdict> verdict_from_string(std::string_view name);

/// How lhs is compared with rhs.
enum class Relation { at_least, greater, equal };

struct NamedFlag {
  std::string name;
  bool value = false;

  friend bool operator==(const NamedFlag&, const NamedFlag&) = default;
};

/// The outcome of checking one inequality (or exact value) on one input.
///
/// When a hypothesis fails the verdict is not_applicable, never holds; lhs
/// and rhs are still filled in where they are defined.
struct BoundReport {
  StatementId statement_id = StatementId::affine_invariance;
  bool hypotheses_met = false;
  std::vector<NamedFlag> hypotheses;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::int64_t slack = 0;
  Verdict verdict = Verdict::not_applicable;
  /// Extra per-condition facts (faithfulness conditions, selected residue, ...).
  std::vector<NamedFlag> details;
  /// The checker ran on the canonical form of the input.
  bool normalized = false;
  std::string note;

  bool holds() const { return verdict == Verdict::holds; }
  bool fails() const { return verdict == Verdict::fails; }

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Fill slack and verdict from lhs, rhs and the hypothesis list.
BoundReport finish_report(BoundReport r, Relation rel);

/// Both affine-invariance equalities for (r, s) under A -> A + v and A -> uA.
BoundReport check_affine_invariance(const IntSet& a, std::int64_t r, std::int64_t s,
                                    std::int64_t u, std::int64_t v);

/// |nA + mB| >= c_n(B)|A| + c_m(A)|B| - c_m(A)c_n(B) for coprime n, m.
BoundReport bound_basic(const IntSet& a, const IntSet& b, std::int64_t n, std::int64_t m);

/// |nA + mA| >= 4|A| - 4 for coprime 2 <= n < m.
BoundReport bound_four(const IntSet& a, std::int64_t n, std::int64_t m);

/// |2A + mA| lower bounds for m-full and m-semi-full sets; m odd, m >= 3.
BoundReport bound_full_semifull(const IntSet& a, std::int64_t m);

/// Sum of |M_C| over the k-components C of A is at least (c_k(A) - 1) c_k(A).
/// With require_prime false any k >= 2 is accepted, for experiments.
BoundReport bound_marginal_total(const IntSet& a, std::int64_t k, bool require_prime = true);

/// Lower bounds on |M_C| for the component with residue c_residue mod k.
BoundReport check_faithful(const IntSet& a, std::int64_t k, std::int64_t c_residue);

/// |2A + kA| >= (k+2)|A| - 4k^(k-1).
BoundReport bound_main_small(const IntSet& a, std::int64_t k);

struct LargeSetReports {
  BoundReport strict;     ///< main_strict
  BoundReport corollary;  ///< main_large
};

/// The two large-set statements, each gated on its own hypotheses.
LargeSetReports bound_main_large(const IntSet& a, std::int64_t k);

/// (k+2)n - 2k, or 1 when n == 1.
std::int64_t ap_exact_size(std::int64_t n, std::int64_t k);
/// Recomputes |2P + kP| for P = {0, ..., n-1} against ap_exact_size.
BoundReport verify_ap_exact(std::int64_t n, std::int64_t k);

/// (sum |m|)|A| - |sum m A|; coefficients must have gcd 1.
std::int64_t deficiency(const IntSet& a, const DilateSpec& spec);

/// Every applicable checker on (A, k), sorted by statement id. Checkers that
/// need 0 in A and gcd(A) = 1 run on the canonical form and are marked
/// normalized when that differs from A.
std::vector<BoundReport> check_suite(const IntSet& a, std::int64_t k);

}  // namespace dilates
