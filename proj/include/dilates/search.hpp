#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dilates/intset.hpp"

namespace dilates {

struct SearchConfig {
  DilateSpec spec{2, 3};
  std::int64_t cardinality = 1;
  /// Sets are drawn from [0, range_max].
  std::int64_t range_max = 0;
  bool reflection_quotient = true;
  /// Cut a branch once its partial dilate sum already exceeds the incumbent.
  bool pruning = true;
  /// Additionally cut with the residue-class count bound; two coprime
  /// coefficients with |m| >= 2 only.
  bool component_pruning = false;
  std::size_t parallel_width = 1;
  std::size_t witness_cap = 64;

  /// Throws InvalidArgument on an inconsistent configuration.
  void validate() const;
};

struct SearchResult {
  std::int64_t minimum = 0;
  /// Lexicographically smallest minimizers, at most witness_cap of them.
  std::vector<IntSet> witnesses;
  /// Exact number of minimizers in the family, retained or not.
  std::uint64_t witness_count = 0;
  std::uint64_t nodes_visited = 0;
  std::uint64_t nodes_pruned = 0;

  /// Some retained witness has range_max as its largest element, so a wider
  /// range might hold smaller values.
  bool touches_range(std::int64_t range_max) const;

  /// Minimum, witness list and witness count agree. The node counters are
  /// diagnostics and depend on pruning and scheduling.
  bool same_outcome(const SearchResult& other) const {
    return minimum == other.minimum && witnesses == other.witnesses &&
           witness_count == other.witness_count;
  }
};

/// Visits, in ascending lexicographic order, every A in [0, range_max] with
/// |A| = cardinality, min A = 0 and gcd A = 1 ({0} when cardinality is 1).
/// With reflection_quotient, A is skipped when its reflection is smaller.
void enumerate_canonical(std::int64_t cardinality, std::int64_t range_max, bool reflection_quotient,
                         const std::function<void(const IntSet&)>& visit);
std::vector<IntSet> canonical_sets(std::int64_t cardinality, std::int64_t range_max,
                                   bool reflection_quotient);

/// Exact minimum of |sum m A| over the canonical family of the config.
SearchResult min_dilate_sum(const SearchConfig& config);

struct ProbeRow {
  std::int64_t cardinality = 0;
  std::int64_t minimum = 0;
  /// (sum |m|) * cardinality - minimum
  std::int64_t deficiency = 0;
  IntSet witness{0};
  std::uint64_t witness_count = 0;
  /// Some retained minimizer is not an arithmetic progression.
  bool non_progression_witness = false;
  bool touches_range = false;

  friend bool operator==(const ProbeRow&, const ProbeRow&) = default;
};

/// One row per cardinality in [n_from, n_to], ascending.
std::vector<ProbeRow> conjecture_probe(const DilateSpec& spec, std::int64_t n_from,
                                       std::int64_t n_to, std::int64_t range_max,
                                       std::size_t parallel_width = 1);

}  // namespace dilates
