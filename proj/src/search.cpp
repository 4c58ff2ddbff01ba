#include "dilates/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

#include "dilates/checked.hpp"
#include "dilates/error.hpp"

namespace dilates {

namespace {

constexpr std::int64_t max_bitset_width = std::int64_t{1} << 28;
constexpr std::int64_t no_value = std::numeric_limits<std::int64_t>::max();

using Elements = std::vector<std::int64_t>;

/// |sum m A| for subsets of [0, R], computed on a bitset indexed by
/// value - base where base is the smallest reachable sum.
class SumSizer {
 public:
  SumSizer(const DilateSpec& spec, std::int64_t range_max)
      : coefficients_(spec.coefficients().begin(), spec.coefficients().end()) {
    std::int64_t negative = 0;
    for (auto m : coefficients_)
      if (m < 0) negative = checked::add(negative, m);
    base_ = checked::mul(negative, range_max);
    const auto width = checked::add(checked::mul(spec.abs_sum(), range_max), 1);
    if (width > max_bitset_width)
      throw InvalidArgument("search range too large: dilate sums span " + std::to_string(width) +
                            " values");
    words_ = static_cast<std::size_t>((width + 63) / 64);
    acc_.resize(words_);
    next_.resize(words_);
  }

  std::int64_t operator()(const Elements& a) {
    std::fill(acc_.begin(), acc_.end(), 0);
    set_bit(acc_, -base_);
    for (auto m : coefficients_) {
      std::fill(next_.begin(), next_.end(), 0);
      for (auto x : a) or_shifted(next_, acc_, m * x);
      std::swap(acc_, next_);
    }
    std::int64_t count = 0;
    for (auto w : acc_) count += std::popcount(w);
    return count;
  }

 private:
  static void set_bit(std::vector<std::uint64_t>& bits, std::int64_t i) {
    bits[static_cast<std::size_t>(i / 64)] |= std::uint64_t{1} << (i % 64);
  }

  void or_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                  std::int64_t shift) const {
    const auto n = static_cast<std::int64_t>(words_);
    if (shift >= 0) {
      const auto ws = shift / 64;
      const auto bs = static_cast<unsigned>(shift % 64);
      for (auto i = n - 1; i >= ws; --i) {
        auto v = src[static_cast<std::size_t>(i - ws)] << bs;
        if (bs && i - ws - 1 >= 0) v |= src[static_cast<std::size_t>(i - ws - 1)] >> (64 - bs);
        dst[static_cast<std::size_t>(i)] |= v;
      }
    } else {
      const auto ws = -shift / 64;
      const auto bs = static_cast<unsigned>(-shift % 64);
      for (std::int64_t i = 0; i + ws < n; ++i) {
        auto v = src[static_cast<std::size_t>(i + ws)] >> bs;
        if (bs && i + ws + 1 < n) v |= src[static_cast<std::size_t>(i + ws + 1)] << (64 - bs);
        dst[static_cast<std::size_t>(i)] |= v;
      }
    }
  }

  std::vector<std::int64_t> coefficients_;
  std::int64_t base_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> acc_;
  std::vector<std::uint64_t> next_;
};

/// The lexicographically smaller (or equal) of A and its reflection.
bool reflection_minimal(const Elements& a) {
  const auto n = a.size();
  const auto top = a.back();
  for (std::size_t i = 0; i < n; ++i) {
    const auto mirrored = top - a[n - 1 - i];
    if (a[i] != mirrored) return a[i] < mirrored;
  }
  return true;
}

std::size_t residue_count(const Elements& a, std::int64_t m) {
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::size_t count = 0;
  for (auto x : a) {
    auto& s = seen[static_cast<std::size_t>(x % m)];
    if (!s) ++count;
    s = 1;
  }
  return count;
}

/// Depth-first walk over increasing sequences 0 = a_0 < a_1 < ... in [0, R].
/// Without an objective it is the plain canonical enumeration.
class Walker {
 public:
  struct Outcome {
    std::int64_t minimum = no_value;
    std::vector<IntSet> witnesses;
    std::uint64_t witness_count = 0;
    std::uint64_t visited = 0;
    std::uint64_t pruned = 0;
  };

  Walker(const SearchConfig& config, std::atomic<std::int64_t>* incumbent)
      : config_(config), incumbent_(incumbent), sizer_(config.spec, config.range_max) {
    if (config.component_pruning) {
      auto c = config.spec.coefficients();
      moduli_ = {checked::abs(c[0]), checked::abs(c[1])};
    }
  }

  Outcome run(const Elements& prefix) {
    outcome_ = {};
    Elements a{0};
    std::int64_t g = 0;
    for (auto x : prefix) {
      a.push_back(x);
      g = std::gcd(g, x);
    }
    descend(a, g);
    return std::move(outcome_);
  }

 private:
  void descend(Elements& a, std::int64_t g) {
    ++outcome_.visited;
    const auto n = static_cast<std::size_t>(config_.cardinality);
    if (a.size() == n) {
      if ((n == 1 || g == 1) && (!config_.reflection_quotient || reflection_minimal(a)))
        record(a, sizer_(a));
      return;
    }
    if (config_.pruning && lower_bound(a) > incumbent_->load(std::memory_order_relaxed)) {
      ++outcome_.pruned;
      return;
    }
    const auto remaining = static_cast<std::int64_t>(n - a.size());
    for (auto x = a.back() + 1; x <= config_.range_max - (remaining - 1); ++x) {
      a.push_back(x);
      descend(a, std::gcd(g, x));
      a.pop_back();
    }
  }

  // Every completion contains a, and each further (larger) element adds a
  // new extreme sum, so this never exceeds the value of any completion.
  std::int64_t lower_bound(const Elements& a) {
    const auto remaining = config_.cardinality - static_cast<std::int64_t>(a.size());
    auto bound = sizer_(a) + remaining;
    if (!moduli_.empty()) {
      const auto cn = static_cast<std::int64_t>(residue_count(a, moduli_[0]));
      const auto cm = static_cast<std::int64_t>(residue_count(a, moduli_[1]));
      const auto size = config_.cardinality;
      bound = std::max(bound, cn * size + cm * size - cn * cm);
    }
    return bound;
  }

  void record(const Elements& a, std::int64_t value) {
    if (value < outcome_.minimum) {
      outcome_.minimum = value;
      outcome_.witnesses.clear();
      outcome_.witness_count = 0;
    }
    if (value == outcome_.minimum) {
      ++outcome_.witness_count;
      if (outcome_.witnesses.size() < config_.witness_cap)
        outcome_.witnesses.push_back(IntSet::from_sorted(a));
    }
    auto current = incumbent_->load(std::memory_order_relaxed);
    while (value < current && !incumbent_->compare_exchange_weak(current, value)) {
    }
  }

  const SearchConfig& config_;
  std::atomic<std::int64_t>* incumbent_;
  SumSizer sizer_;
  std::vector<std::int64_t> moduli_;
  Outcome outcome_;
};

/// Prefixes (a_1, ..., a_d) with d = min(2, n - 1): the unit of parallel work.
std::vector<Elements> split_prefixes(std::int64_t n, std::int64_t range_max) {
  const auto depth = std::min<std::int64_t>(2, n - 1);
  std::vector<Elements> out;
  Elements current;
  std::function<void()> extend = [&] {
    if (static_cast<std::int64_t>(current.size()) == depth) {
      out.push_back(current);
      return;
    }
    const auto used = static_cast<std::int64_t>(current.size()) + 1;
    const auto start = current.empty() ? 1 : current.back() + 1;
    for (auto x = start; x <= range_max - (n - used - 1); ++x) {
      current.push_back(x);
      extend();
      current.pop_back();
    }
  };
  extend();
  return out;
}

}  // namespace

void SearchConfig::validate() const {
  if (cardinality < 1) throw InvalidArgument("cardinality must be >= 1");
  if (range_max < 0) throw InvalidArgument("range must be >= 0");
  if (cardinality > range_max + 1)
    throw InvalidArgument("cardinality " + std::to_string(cardinality) + " does not fit in [0, " +
                          std::to_string(range_max) + "]");
  if (parallel_width < 1) throw InvalidArgument("parallel width must be >= 1");
  if (witness_cap < 1) throw InvalidArgument("witness cap must be >= 1");
  const auto width = checked::add(checked::mul(spec.abs_sum(), range_max), 1);
  if (width > max_bitset_width)
    throw InvalidArgument("search range too large: dilate sums span " + std::to_string(width) +
                          " values");
  if (component_pruning) {
    auto c = spec.coefficients();
    if (c.size() != 2 || std::gcd(c[0], c[1]) != 1 || checked::abs(c[0]) < 2 ||
        checked::abs(c[1]) < 2)
      throw InvalidArgument(
          "component pruning needs exactly two coprime coefficients of absolute value >= 2");
  }
}

bool SearchResult::touches_range(std::int64_t range_max) const {
  return std::any_of(witnesses.begin(), witnesses.end(),
                     [&](const IntSet& w) { return w.max() == range_max; });
}

void enumerate_canonical(std::int64_t cardinality, std::int64_t range_max, bool reflection_quotient,
                         const std::function<void(const IntSet&)>& visit) {
  if (cardinality < 1) throw InvalidArgument("cardinality must be >= 1");
  if (cardinality > range_max + 1)
    throw InvalidArgument("cardinality " + std::to_string(cardinality) + " does not fit in [0, " +
                          std::to_string(range_max) + "]");
  const auto n = static_cast<std::size_t>(cardinality);
  Elements a{0};
  std::function<void(std::int64_t)> walk = [&](std::int64_t g) {
    if (a.size() == n) {
      if ((n == 1 || g == 1) && (!reflection_quotient || reflection_minimal(a)))
        visit(IntSet::from_sorted(a));
      return;
    }
    const auto remaining = static_cast<std::int64_t>(n - a.size());
    for (auto x = a.back() + 1; x <= range_max - (remaining - 1); ++x) {
      a.push_back(x);
      walk(std::gcd(g, x));
      a.pop_back();
    }
  };
  walk(0);
}

std::vector<IntSet> canonical_sets(std::int64_t cardinality, std::int64_t range_max,
                                   bool reflection_quotient) {
  std::vector<IntSet> out;
  enumerate_canonical(cardinality, range_max, reflection_quotient,
                      [&](const IntSet& s) { out.push_back(s); });
  return out;
}

SearchResult min_dilate_sum(const SearchConfig& config) {
  config.validate();
  const auto prefixes = split_prefixes(config.cardinality, config.range_max);
  std::vector<Walker::Outcome> outcomes(prefixes.size());
  std::atomic<std::int64_t> incumbent{no_value};
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    try {
      Walker walker(config, &incumbent);
      for (auto i = next++; i < prefixes.size() && !failed; i = next++)
        outcomes[i] = walker.run(prefixes[i]);
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };

  const auto width = std::min(config.parallel_width, std::max<std::size_t>(prefixes.size(), 1));
  if (width == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(width);
    for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SearchResult result;
  result.minimum = no_value;
  for (const auto& o : outcomes) {
    result.minimum = std::min(result.minimum, o.minimum);
    result.nodes_visited += o.visited;
    result.nodes_pruned += o.pruned;
  }
  if (result.minimum == no_value) throw Error("internal error: empty canonical family");
  // Prefixes are in lexicographic order, so concatenation keeps witnesses sorted.
  for (const auto& o : outcomes) {
    if (o.minimum != result.minimum) continue;
    result.witness_count += o.witness_count;
    for (const auto& w : o.witnesses)
      if (result.witnesses.size() < config.witness_cap) result.witnesses.push_back(w);
  }
  return result;
}

std::vector<ProbeRow> conjecture_probe(const DilateSpec& spec, std::int64_t n_from,
                                       std::int64_t n_to, std::int64_t range_max,
                                       std::size_t parallel_width) {
  if (spec.gcd() != 1)
    throw InvalidArgument("coefficients " + spec.to_string() + " must have gcd 1");
  if (n_from < 1 || n_to < n_from)
    throw InvalidArgument("cardinality range must satisfy 1 <= from <= to");
  std::vector<ProbeRow> rows;
  for (auto n = n_from; n <= n_to; ++n) {
    SearchConfig config{.spec = spec, .cardinality = n, .range_max = range_max,
                        .parallel_width = parallel_width};
    const auto result = min_dilate_sum(config);
    ProbeRow row;
    row.cardinality = n;
    row.minimum = result.minimum;
    row.deficiency = checked::sub(checked::mul(spec.abs_sum(), n), result.minimum);
    row.witness = result.witnesses.front();
    row.witness_count = result.witness_count;
    row.non_progression_witness =
        std::any_of(result.witnesses.begin(), result.witnesses.end(),
                    [](const IntSet& w) { return !is_arithmetic_progression(w); });
    row.touches_range = result.touches_range(range_max);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dilates
