#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dilates {

/// Sorted, duplicate-free, possibly empty sequence of integers. Used for
/// results that may legitimately be empty (marginal sets, splits).
using IntList = std::vector<std::int64_t>;

/// A finite nonempty set of 64-bit integers, stored strictly increasing.
///
/// Every constructor validates: empty input and duplicate elements are
/// rejected with InvalidArgument. Arithmetic producing an IntSet is checked
/// and raises RangeError instead of wrapping.
class IntSet {
 public:
  IntSet(std::initializer_list<std::int64_t> elements);

  /// Sorts the input; rejects duplicates.
  static IntSet from_elements(std::vector<std::int64_t> elements);
  /// Accepts already sorted input; duplicates (and so disorder) are rejected.
  static IntSet from_sorted(std::vector<std::int64_t> elements);
  /// {lo, lo+1, ..., hi}
  static IntSet interval(std::int64_t lo, std::int64_t hi);

  std::size_t size() const { return elements_.size(); }
  std::int64_t min() const { return elements_.front(); }
  std::int64_t max() const { return elements_.back(); }
  std::span<const std::int64_t> elements() const { return elements_; }
  const IntList& list() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  std::int64_t operator[](std::size_t i) const { return elements_[i]; }

  bool contains(std::int64_t x) const;
  bool is_subset_of(const IntSet& other) const;

  std::string to_string() const;

  friend bool operator==(const IntSet&, const IntSet&) = default;
  /// Lexicographic on the sorted element sequence.
  friend std::strong_ordering operator<=>(const IntSet& a, const IntSet& b) {
    return a.elements_ <=> b.elements_;
  }

 private:
  explicit IntSet(std::vector<std::int64_t> sorted_unique) : elements_(std::move(sorted_unique)) {}

  std::vector<std::int64_t> elements_;
};

/// The maps used to put a set in canonical position: x -> (x - shift) / scale.
struct AffineMap {
  std::int64_t shift = 0;
  std::int64_t scale = 1;

  bool is_identity() const { return shift == 0 && scale == 1; }
  /// x -> (x - shift) / scale; every element must be divisible after the shift.
  IntSet apply(const IntSet& a) const;
  /// x -> x * scale + shift
  IntSet invert(const IntSet& a) const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Distinct nonzero dilation coefficients, kept in ascending order.
class DilateSpec {
 public:
  DilateSpec(std::initializer_list<std::int64_t> coefficients);
  explicit DilateSpec(std::vector<std::int64_t> coefficients);

  std::span<const std::int64_t> coefficients() const { return coefficients_; }
  std::size_t size() const { return coefficients_.size(); }
  /// Sum of |m| over all coefficients.
  std::int64_t abs_sum() const;
  /// gcd of |m| over all coefficients.
  std::int64_t gcd() const;
  std::string to_string() const;

  friend bool operator==(const DilateSpec&, const DilateSpec&) = default;

 private:
  std::vector<std::int64_t> coefficients_;
};

/// {a + b : a in a, b in b}
IntSet minkowski_sum(const IntSet& a, const IntSet& b);
/// {r * a : a in a}; r == 0 is rejected.
IntSet dilate(const IntSet& a, std::int64_t r);
/// Minkowski sum of m * a over every coefficient m.
IntSet dilate_sum(const IntSet& a, const DilateSpec& spec);
/// a + v
IntSet translate(const IntSet& a, std::int64_t v);
/// {max(a) - x : x in a}
IntSet reflect(const IntSet& a);
/// gcd of all elements (0 only for {0}).
std::int64_t gcd(const IntSet& a);
/// gcd of all elements after subtracting the minimum (0 for singletons).
std::int64_t difference_gcd(const IntSet& a);

struct Canonical {
  IntSet set;
  AffineMap map;
};

/// Translate to minimum 0 and divide by the gcd of the differences.
/// Singletons map to {0} with scale 1.
Canonical canonicalize(const IntSet& a);
bool is_canonical(const IntSet& a);

/// True when the elements form an arithmetic progression (any size-1 or
/// size-2 set qualifies).
bool is_arithmetic_progression(const IntSet& a);

}  // namespace dilates
