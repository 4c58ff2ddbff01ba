#include "dilates/intset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "dilates/checked.hpp"
#include "dilates/error.hpp"

namespace dilates {

namespace {

void require_strictly_increasing(const std::vector<std::int64_t>& v) {
  if (v.empty()) throw InvalidArgument("integer set must be nonempty");
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] == v[i])
      throw InvalidArgument("duplicate element " + std::to_string(v[i]) + " in integer set");
    if (v[i - 1] > v[i]) throw InvalidArgument("integer set elements are not sorted");
  }
}

std::string join(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

}  // namespace

IntSet::IntSet(std::initializer_list<std::int64_t> elements)
    : IntSet(from_elements(std::vector<std::int64_t>(elements))) {}

IntSet IntSet::from_elements(std::vector<std::int64_t> elements) {
  std::sort(elements.begin(), elements.end());
  require_strictly_increasing(elements);
  return IntSet(std::move(elements));
}

IntSet IntSet::from_sorted(std::vector<std::int64_t> elements) {
  require_strictly_increasing(elements);
  return IntSet(std::move(elements));
}

IntSet IntSet::interval(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidArgument("empty interval");
  checked::sub(hi, lo);
  std::vector<std::int64_t> v;
  v.reserve(static_cast<std::size_t>(hi - lo) + 1);
  for (std::int64_t x = lo;; ++x) {
    v.push_back(x);
    if (x == hi) break;
  }
  return IntSet(std::move(v));
}

bool IntSet::contains(std::int64_t x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool IntSet::is_subset_of(const IntSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

std::string IntSet::to_string() const { return join(elements_); }

IntSet AffineMap::apply(const IntSet& a) const {
  if (scale < 1) throw InvalidArgument("affine map scale must be >= 1");
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (auto x : a) {
    auto d = checked::sub(x, shift);
    if (d % scale != 0)
      throw InvalidArgument("element " + std::to_string(x) + " is not on the map's lattice");
    out.push_back(d / scale);
  }
  return IntSet::from_sorted(std::move(out));
}

IntSet AffineMap::invert(const IntSet& a) const {
  if (scale < 1) throw InvalidArgument("affine map scale must be >= 1");
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (auto x : a) out.push_back(checked::add(checked::mul(x, scale), shift));
  return IntSet::from_sorted(std::move(out));
}

DilateSpec::DilateSpec(std::initializer_list<std::int64_t> coefficients)
    : DilateSpec(std::vector<std::int64_t>(coefficients)) {}

DilateSpec::DilateSpec(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw InvalidArgument("dilate spec needs at least one coefficient");
  std::sort(coefficients_.begin(), coefficients_.end());
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) throw InvalidArgument("dilation coefficient must be nonzero");
    if (i > 0 && coefficients_[i] == coefficients_[i - 1])
      throw InvalidArgument("duplicate dilation coefficient " + std::to_string(coefficients_[i]));
    checked::abs(coefficients_[i]);
  }
}

std::int64_t DilateSpec::abs_sum() const {
  std::int64_t s = 0;
  for (auto m : coefficients_) s = checked::add(s, checked::abs(m));
  return s;
}

std::int64_t DilateSpec::gcd() const {
  std::int64_t g = 0;
  for (auto m : coefficients_) g = std::gcd(g, checked::abs(m));
  return g;
}

std::string DilateSpec::to_string() const { return join(coefficients_); }

IntSet minkowski_sum(const IntSet& a, const IntSet& b) {
  // The extreme sums bound every other sum, so checking them suffices.
  checked::add(a.min(), b.min());
  checked::add(a.max(), b.max());

  const IntSet& outer = a.size() <= b.size() ? a : b;
  const IntSet& inner = a.size() <= b.size() ? b : a;

  // k-way merge of the translates inner + x for x in outer.
  using Cursor = std::pair<std::int64_t, std::size_t>;  // (value, outer index)
  std::vector<std::size_t> pos(outer.size(), 0);
  std::priority_queue<Cursor, std::vector<Cursor>, std::greater<>> heap;
  for (std::size_t i = 0; i < outer.size(); ++i) heap.emplace(outer[i] + inner[0], i);

  std::vector<std::int64_t> out;
  out.reserve(a.size() + b.size() - 1);
  while (!heap.empty()) {
    auto [value, i] = heap.top();
    heap.pop();
    if (out.empty() || out.back() != value) out.push_back(value);
    if (++pos[i] < inner.size()) heap.emplace(outer[i] + inner[pos[i]], i);
  }
  return IntSet::from_sorted(std::move(out));
}

IntSet dilate(const IntSet& a, std::int64_t r) {
  if (r == 0) throw InvalidArgument("dilation coefficient must be nonzero");
  checked::mul(a.min(), r);
  checked::mul(a.max(), r);
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (auto x : a) out.push_back(x * r);
  if (r < 0) std::reverse(out.begin(), out.end());
  return IntSet::from_sorted(std::move(out));
}

IntSet dilate_sum(const IntSet& a, const DilateSpec& spec) {
  auto coeffs = spec.coefficients();
  IntSet acc = dilate(a, coeffs[0]);
  for (std::size_t i = 1; i < coeffs.size(); ++i) acc = minkowski_sum(acc, dilate(a, coeffs[i]));
  return acc;
}

IntSet translate(const IntSet& a, std::int64_t v) {
  checked::add(a.min(), v);
  checked::add(a.max(), v);
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (auto x : a) out.push_back(x + v);
  return IntSet::from_sorted(std::move(out));
}

IntSet reflect(const IntSet& a) {
  checked::sub(a.max(), a.min());
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (auto it = a.list().rbegin(); it != a.list().rend(); ++it) out.push_back(a.max() - *it);
  return IntSet::from_sorted(std::move(out));
}

std::int64_t gcd(const IntSet& a) {
  std::int64_t g = 0;
  for (auto x : a) g = std::gcd(g, checked::abs(x));
  return g;
}

std::int64_t difference_gcd(const IntSet& a) {
  std::int64_t g = 0;
  for (auto x : a) g = std::gcd(g, checked::sub(x, a.min()));
  return g;
}

Canonical canonicalize(const IntSet& a) {
  AffineMap map{a.min(), 1};
  if (a.size() > 1) map.scale = difference_gcd(a);
  return {map.apply(a), map};
}

bool is_canonical(const IntSet& a) {
  return a.min() == 0 && (a.size() == 1 || gcd(a) == 1);
}

bool is_arithmetic_progression(const IntSet& a) {
  if (a.size() <= 2) return true;
  const auto step = checked::sub(a[1], a[0]);
  for (std::size_t i = 2; i < a.size(); ++i)
    if (checked::sub(a[i], a[i - 1]) != step) return false;
  return true;
}

}  // namespace dilates
