#include "dilates/components.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "dilates/checked.hpp"
#include "dilates/error.hpp"

namespace dilates {

namespace {

void require_modulus(std::int64_t n) {
  if (n < 2) throw InvalidArgument("modulus must be >= 2, got " + std::to_string(n));
}

}  // namespace

Decomposition::Decomposition(const IntSet& a, std::int64_t modulus) : modulus_(modulus) {
  require_modulus(modulus);
  std::map<std::int64_t, std::vector<std::int64_t>> classes;
  for (auto x : a) classes[checked::residue(x, modulus)].push_back(x);
  for (auto& [r, elems] : classes) blocks_.emplace(r, IntSet::from_sorted(std::move(elems)));
}

const IntSet& Decomposition::block(std::int64_t residue) const {
  auto it = blocks_.find(residue);
  if (it == blocks_.end())
    throw InvalidArgument("no component with residue " + std::to_string(residue) + " mod " +
                          std::to_string(modulus_));
  return it->second;
}

Decomposition decompose(const IntSet& a, std::int64_t n) { return Decomposition(a, n); }

std::size_t component_count(const IntSet& a, std::int64_t n) {
  require_modulus(n);
  std::vector<std::int64_t> rs;
  rs.reserve(a.size());
  for (auto x : a) rs.push_back(checked::residue(x, n));
  std::sort(rs.begin(), rs.end());
  return static_cast<std::size_t>(std::unique(rs.begin(), rs.end()) - rs.begin());
}

bool is_full(const IntSet& a, std::int64_t n) {
  return component_count(a, n) == static_cast<std::size_t>(n);
}

bool is_semi_full(const IntSet& a, std::int64_t n) {
  require_modulus(n);
  const auto n2 = checked::mul(n, n);
  for (const auto& [r, c] : decompose(a, n).blocks())
    if (component_count(c, n2) != static_cast<std::size_t>(n)) return false;
  return true;
}

bool is_prime(std::int64_t k) {
  if (k < 2) return false;
  for (std::int64_t d = 2; d <= k / d; ++d)
    if (k % d == 0) return false;
  return true;
}

bool is_odd_prime(std::int64_t k) { return k != 2 && is_prime(k); }

void require_odd_prime(std::int64_t k, const char* what) {
  if (!is_odd_prime(k))
    throw InvalidArgument(std::string(what) + " must be an odd prime, got " + std::to_string(k));
}

void require_component(const IntSet& c, const IntSet& a, std::int64_t k) {
  require_modulus(k);
  const auto r = checked::residue(c.min(), k);
  auto d = decompose(a, k);
  if (!d.has(r) || d.block(r) != c)
    throw InvalidArgument(c.to_string() + " is not a " + std::to_string(k) + "-component of " +
                          a.to_string());
}

IntList marginal_set(const IntSet& c, const IntSet& a, std::int64_t k) {
  require_component(c, a, k);
  const auto two_c = dilate(c, 2);
  const auto with_a = minkowski_sum(two_c, dilate(a, k));
  const auto with_c = minkowski_sum(two_c, dilate(c, k));
  IntList out;
  std::set_difference(with_a.begin(), with_a.end(), with_c.begin(), with_c.end(),
                      std::back_inserter(out));
  return out;
}

MarginalSplit marginal_split(const IntSet& c, const IntSet& a, std::int64_t k) {
  const auto marginal = marginal_set(c, a, k);
  const auto own = minkowski_sum(dilate(c, 2), dilate(c, k));
  MarginalSplit split;
  for (auto x : marginal) {
    if (x < own.min())
      split.low.push_back(x);
    else if (x > own.max())
      split.high.push_back(x);
    else
      split.interior.push_back(x);
  }
  return split;
}

std::vector<std::int64_t> stabilizer(const std::vector<std::int64_t>& residues, std::int64_t m) {
  if (m < 1) throw InvalidArgument("modulus must be >= 1, got " + std::to_string(m));
  if (residues.empty()) throw InvalidArgument("stabilizer of an empty residue set");
  std::vector<char> member(static_cast<std::size_t>(m), 0);
  for (auto x : residues) {
    if (x < 0 || x >= m)
      throw InvalidArgument("residue " + std::to_string(x) + " outside [0, " + std::to_string(m) +
                            ")");
    member[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<std::int64_t> out;
  for (std::int64_t t = 0; t < m; ++t) {
    bool fixes = true;
    for (std::int64_t x = 0; x < m && fixes; ++x)
      if (member[static_cast<std::size_t>(x)] && !member[static_cast<std::size_t>((x + t) % m)])
        fixes = false;
    if (fixes) out.push_back(t);
  }
  return out;
}

}  // namespace dilates
