#include "stretchkit/index_domain.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "stretchkit/errors.hpp"

namespace stretchkit {

std::int64_t MultiIndex::dot(const MultiIndex& other) const {
  if (arity() != other.arity()) throw DomainError("dot: arity mismatch");
  std::int64_t s = 0;
  for (std::size_t t = 0; t < arity(); ++t) s += coords_[t] * other.coords_[t];
  return s;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t t = 0; t < coords_.size(); ++t) os << (t ? "," : "") << coords_[t];
  os << ')';
  return os.str();
}

bool CanonicalLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  if (a.arity() != b.arity()) return a.arity() < b.arity();
  for (std::size_t t = a.arity(); t-- > 0;) {
    if (a[t] != b[t]) return a[t] < b[t];
  }
  return false;
}

IndexSet IndexSet::rectangular(std::vector<std::size_t> dims) {
  if (dims.empty()) throw DomainError("rectangular index set needs at least one dimension");
  if (std::any_of(dims.begin(), dims.end(), [](std::size_t n) { return n == 0; })) {
    throw DomainError("rectangular index set dimensions must be positive");
  }
  IndexSet set;
  set.kind_ = Kind::Rectangular;
  set.arity_ = dims.size();
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  set.points_.reserve(total);
  std::vector<std::int64_t> digits(dims.size(), 0);
  for (std::size_t pos = 0; pos < total; ++pos) {
    set.points_.emplace_back(digits);
    set.lookup_.emplace(digits, pos);
    for (std::size_t t = 0; t < dims.size(); ++t) {
      if (++digits[t] < static_cast<std::int64_t>(dims[t])) break;
      digits[t] = 0;
    }
  }
  set.dims_ = std::move(dims);
  return set;
}

IndexSet IndexSet::explicit_points(std::vector<MultiIndex> points) {
  if (points.empty()) throw DomainError("explicit index set must contain at least one point");
  const std::size_t l = points.front().arity();
  if (l == 0) throw DomainError("multi-indices must have arity >= 1");
  for (const auto& p : points) {
    if (p.arity() != l) throw DomainError("explicit index set mixes arities");
  }
  std::sort(points.begin(), points.end(), CanonicalLess{});
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw DomainError("explicit index set contains duplicate points");
  }
  IndexSet set;
  set.kind_ = Kind::Explicit;
  set.arity_ = l;
  for (std::size_t pos = 0; pos < points.size(); ++pos) set.lookup_.emplace(points[pos].coords(), pos);
  set.points_ = std::move(points);
  return set;
}

std::optional<std::size_t> IndexSet::position(const MultiIndex& i) const {
  if (i.arity() != arity_) return std::nullopt;
  auto it = lookup_.find(i.coords());
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t IndexSet::require_position(const MultiIndex& i) const {
  if (auto pos = position(i)) return *pos;
  throw DomainError("point " + i.to_string() + " is not in the index set");
}

Permutation Permutation::from_one_line(const std::vector<std::size_t>& one_based) {
  if (one_based.empty()) throw std::invalid_argument("permutation must be nonempty");
  const std::size_t l = one_based.size();
  std::vector<bool> seen(l, false);
  Permutation p;
  p.image_.reserve(l);
  for (std::size_t v : one_based) {
    if (v < 1 || v > l || seen[v - 1]) {
      throw std::invalid_argument("not a permutation of {1,...," + std::to_string(l) + "}");
    }
    seen[v - 1] = true;
    p.image_.push_back(v - 1);
  }
  return p;
}

Permutation Permutation::identity(std::size_t l) {
  Permutation p;
  p.image_.resize(l);
  std::iota(p.image_.begin(), p.image_.end(), std::size_t{0});
  return p;
}

Permutation Permutation::reversal(std::size_t l) {
  Permutation p = identity(l);
  std::reverse(p.image_.begin(), p.image_.end());
  return p;
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<std::size_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty entry in permutation");
    item = item.substr(first, last - first + 1);
    if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("invalid permutation entry '" + item + "'");
    }
    values.push_back(std::stoul(item));
  }
  return from_one_line(values);
}

std::vector<std::size_t> Permutation::one_line() const {
  std::vector<std::size_t> out(image_.size());
  std::transform(image_.begin(), image_.end(), out.begin(), [](std::size_t v) { return v + 1; });
  return out;
}

MultiIndex Permutation::apply(const MultiIndex& i) const {
  if (i.arity() != arity()) {
    throw DomainError("permutation of arity " + std::to_string(arity()) +
                      " applied to point of arity " + std::to_string(i.arity()));
  }
  std::vector<std::int64_t> out(arity());
  for (std::size_t s = 0; s < arity(); ++s) out[s] = i[image_[s]];
  return MultiIndex(std::move(out));
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image_.resize(image_.size());
  for (std::size_t s = 0; s < image_.size(); ++s) p.image_[image_[s]] = s;
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.arity() != inner.arity()) throw DomainError("compose: arity mismatch");
  std::vector<std::size_t> one_based(outer.arity());
  for (std::size_t s = 0; s < outer.arity(); ++s) one_based[s] = inner[outer[s]] + 1;
  return Permutation::from_one_line(one_based);
}

namespace {

std::uint64_t zigzag(std::int64_t x) {
  // 0,-1,1,-2,2,... -> 0,1,2,3,4,...
  return x >= 0 ? static_cast<std::uint64_t>(x) << 1
                : (static_cast<std::uint64_t>(-(x + 1)) << 1) | 1u;
}

std::int64_t unzigzag(std::uint64_t u) {
  return (u & 1u) ? -static_cast<std::int64_t>(u >> 1) - 1 : static_cast<std::int64_t>(u >> 1);
}

std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s, t, out;
  if (__builtin_add_overflow(a, b, &s) || __builtin_mul_overflow(s, s + 1, &t) ||
      __builtin_add_overflow(t / 2, b, &out) || s + 1 == 0) {
    throw std::overflow_error("enumerate_z: value exceeds 64 bits");
  }
  return out;
}

__extension__ typedef unsigned __int128 u128;

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n) {
  // w = floor((sqrt(8n+1)-1)/2), corrected for rounding.
  auto tri = [](u128 w) { return w * (w + 1) / 2; };
  u128 w = static_cast<u128>(
      (std::sqrt(8.0L * static_cast<long double>(n) + 1.0L) - 1.0L) / 2.0L);
  while (tri(w) > n) --w;
  while (tri(w + 1) <= n) ++w;
  const auto b = static_cast<std::uint64_t>(n - tri(w));
  const auto a = static_cast<std::uint64_t>(w) - b;
  return {a, b};
}

}  // namespace

std::int64_t enumerate_z(const MultiIndex& i) {
  if (i.arity() == 0) throw DomainError("enumerate_z: empty multi-index");
  std::uint64_t acc = zigzag(i[0]);
  for (std::size_t s = 1; s < i.arity(); ++s) acc = cantor_pair(acc, zigzag(i[s]));
  return unzigzag(acc);
}

MultiIndex enumerate_z_inverse(std::int64_t value, std::size_t arity) {
  if (arity == 0) throw DomainError("enumerate_z_inverse: arity must be >= 1");
  std::vector<std::int64_t> coords(arity);
  std::uint64_t acc = zigzag(value);
  for (std::size_t s = arity - 1; s >= 1; --s) {
    auto [a, b] = cantor_unpair(acc);
    coords[s] = unzigzag(b);
    acc = a;
  }
  coords[0] = unzigzag(acc);
  return MultiIndex(std::move(coords));
}

IndexMap::IndexMap(Kind kind, IndexSet domain, std::vector<std::int64_t> values, MultiIndex k)
    : kind_(kind), domain_(std::move(domain)), values_(std::move(values)), k_(std::move(k)) {}

IndexMap IndexMap::linear(IndexSet domain, MultiIndex k) {
  if (k.arity() != domain.arity()) {
    throw DomainError("linear map coefficient vector has arity " + std::to_string(k.arity()) +
                      ", domain has arity " + std::to_string(domain.arity()));
  }
  std::vector<std::int64_t> values;
  values.reserve(domain.size());
  for (const auto& p : domain.points()) values.push_back(k.dot(p));
  return IndexMap(Kind::Linear, std::move(domain), std::move(values), std::move(k));
}

IndexMap IndexMap::mixed_radix(IndexSet domain) {
  if (!domain.is_rectangular()) throw DomainError("mixed-radix map requires a rectangular set");
  std::vector<std::int64_t> values(domain.size());
  std::iota(values.begin(), values.end(), std::int64_t{0});
  return IndexMap(Kind::MixedRadix, std::move(domain), std::move(values));
}

IndexMap IndexMap::max_coord(IndexSet domain) {
  std::vector<std::int64_t> values;
  values.reserve(domain.size());
  for (const auto& p : domain.points()) {
    values.push_back(*std::max_element(p.coords().begin(), p.coords().end()));
  }
  return IndexMap(Kind::MaxCoord, std::move(domain), std::move(values));
}

IndexMap IndexMap::table(IndexSet domain,
                         const std::vector<std::pair<MultiIndex, std::int64_t>>& pairs) {
  std::vector<std::optional<std::int64_t>> slots(domain.size());
  for (const auto& [point, value] : pairs) {
    const std::size_t pos = domain.require_position(point);
    if (slots[pos] && *slots[pos] != value) {
      throw DomainError("table assigns two values to " + point.to_string());
    }
    slots[pos] = value;
  }
  std::vector<std::int64_t> values;
  values.reserve(domain.size());
  for (std::size_t pos = 0; pos < slots.size(); ++pos) {
    if (!slots[pos]) throw DomainError("table has no value for " + domain.point(pos).to_string());
    values.push_back(*slots[pos]);
  }
  return IndexMap(Kind::Table, std::move(domain), std::move(values));
}

IndexMap IndexMap::enumeration(IndexSet domain) {
  std::vector<std::int64_t> values;
  values.reserve(domain.size());
  for (const auto& p : domain.points()) values.push_back(enumerate_z(p));
  return IndexMap(Kind::Enumeration, std::move(domain), std::move(values));
}

std::int64_t IndexMap::evaluate(const MultiIndex& i) const {
  return values_[domain_.require_position(i)];
}

bool IndexMap::is_injective() const {
  std::vector<std::int64_t> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

IndexMap IndexMap::to_table() const { return IndexMap(Kind::Table, domain_, values_); }

std::string to_string(IndexMap::Kind kind) {
  switch (kind) {
    case IndexMap::Kind::Linear: return "linear";
    case IndexMap::Kind::MixedRadix: return "mixed-radix";
    case IndexMap::Kind::MaxCoord: return "max";
    case IndexMap::Kind::Table: return "table";
    case IndexMap::Kind::Enumeration: return "enumeration";
  }
  return "unknown";
}

std::vector<std::int64_t> ClassPartition::values() const {
  std::vector<std::int64_t> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(c.value);
  return out;
}

std::int64_t evaluate(const IndexMap& map, const MultiIndex& i) { return map.evaluate(i); }

ClassPartition partition(const IndexMap& map) {
  const auto& values = map.values();
  std::vector<std::int64_t> distinct = values;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  ClassPartition out;
  out.classes.resize(distinct.size());
  out.class_of.resize(values.size());
  std::unordered_map<std::int64_t, std::size_t> index;
  for (std::size_t c = 0; c < distinct.size(); ++c) {
    out.classes[c].value = distinct[c];
    index.emplace(distinct[c], c);
  }
  for (std::size_t pos = 0; pos < values.size(); ++pos) {
    const std::size_t c = index.at(values[pos]);
    out.class_of[pos] = c;
    out.classes[c].positions.push_back(pos);
    out.classes[c].members.push_back(map.domain().point(pos));
  }
  return out;
}

MultiIndex apply_permutation(const Permutation& sigma, const MultiIndex& i) {
  return sigma.apply(i);
}

bool preserves_domain(const Permutation& sigma, const IndexSet& domain) {
  if (sigma.arity() != domain.arity()) return false;
  return std::all_of(domain.points().begin(), domain.points().end(),
                     [&](const MultiIndex& p) { return domain.contains(sigma.apply(p)); });
}

IndexMap compose_with_permutation(const IndexMap& map, const Permutation& sigma) {
  const IndexSet& domain = map.domain();
  if (sigma.arity() != domain.arity()) {
    throw PermutationDomainError("permutation arity " + std::to_string(sigma.arity()) +
                                 " does not match index set arity " +
                                 std::to_string(domain.arity()));
  }
  std::vector<std::pair<MultiIndex, std::int64_t>> pairs;
  pairs.reserve(domain.size());
  for (const auto& p : domain.points()) {
    const MultiIndex image = sigma.apply(p);
    const auto pos = domain.position(image);
    if (!pos) {
      throw PermutationDomainError("sigma maps " + p.to_string() + " to " + image.to_string() +
                                   ", outside the index set");
    }
    pairs.emplace_back(p, map.value_at(*pos));
  }
  return IndexMap::table(domain, pairs);
}

}  // namespace stretchkit
