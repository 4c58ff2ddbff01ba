#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dilates/intset.hpp"

namespace dilates {

/// Partition of a set into its n-components: the nonempty intersections
/// with the residue classes modulo n. Residues are Euclidean, in [0, n).
class Decomposition {
 public:
  Decomposition(const IntSet& a, std::int64_t modulus);

  std::int64_t modulus() const { return modulus_; }
  /// c_n(A): the number of nonempty classes.
  std::size_t count() const { return blocks_.size(); }
  const std::map<std::int64_t, IntSet>& blocks() const& { return blocks_; }
  /// By value on temporaries, so `for (auto& b : decompose(a, n).blocks())` is safe.
  std::map<std::int64_t, IntSet> blocks() && { return std::move(blocks_); }
  bool has(std::int64_t residue) const { return blocks_.contains(residue); }
  const IntSet& block(std::int64_t residue) const;

 private:
  std::int64_t modulus_;
  std::map<std::int64_t, IntSet> blocks_;
};

/// Parts of a marginal set relative to the interval [min, max] of 2C + kC.
struct MarginalSplit {
  IntList low;       ///< below min(2C + kC)
  IntList interior;  ///< strictly inside, but not in 2C + kC
  IntList high;      ///< above max(2C + kC)

  std::size_t size() const { return low.size() + interior.size() + high.size(); }
};

Decomposition decompose(const IntSet& a, std::int64_t n);
/// c_n(A)
std::size_t component_count(const IntSet& a, std::int64_t n);
/// A meets every residue class modulo n.
bool is_full(const IntSet& a, std::int64_t n);
/// Every n-component meets exactly n residue classes modulo n^2.
bool is_semi_full(const IntSet& a, std::int64_t n);

bool is_prime(std::int64_t k);
bool is_odd_prime(std::int64_t k);
/// Throws InvalidArgument unless k is an odd prime.
void require_odd_prime(std::int64_t k, const char* what = "k");

/// Throws InvalidArgument unless c is exactly one k-component of a.
void require_component(const IntSet& c, const IntSet& a, std::int64_t k);

/// M_C = (2C + kA) \ (2C + kC) for a k-component C of A.
///
/// k is only required to be >= 2 here; callers that depend on primality
/// (the bound checkers) validate it themselves.
IntList marginal_set(const IntSet& c, const IntSet& a, std::int64_t k);
MarginalSplit marginal_split(const IntSet& c, const IntSet& a, std::int64_t k);

/// {t in Z/m : t + X = X} for a nonempty set X of residues in [0, m).
std::vector<std::int64_t> stabilizer(const std::vector<std::int64_t>& residues, std::int64_t m);

}  // namespace dilates
