#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stretchkit {

/// A point (i_1, ..., i_l) of Z^l.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit MultiIndex(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  std::size_t arity() const { return coords_.size(); }
  std::int64_t operator[](std::size_t s) const { return coords_[s]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  std::int64_t dot(const MultiIndex& other) const;
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// Canonical order: lexicographic with the LAST coordinate most significant,
/// so that rectangular sets enumerate in mixed-radix order i1 + n1*i2 + ...
struct CanonicalLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// A finite index set A in Z^l, either a box prod [0, n_s - 1] or an explicit
/// list of points. Points are always held in canonical order; a point's
/// position in that order is its row/column in every dense array over A.
class IndexSet {
 public:
  enum class Kind { Rectangular, Explicit };

  static IndexSet rectangular(std::vector<std::size_t> dims);
  static IndexSet explicit_points(std::vector<MultiIndex> points);

  Kind kind() const { return kind_; }
  bool is_rectangular() const { return kind_ == Kind::Rectangular; }
  std::size_t arity() const { return arity_; }
  std::size_t size() const { return points_.size(); }
  /// Only meaningful for rectangular sets.
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<MultiIndex>& points() const { return points_; }
  const MultiIndex& point(std::size_t pos) const { return points_[pos]; }

  std::optional<std::size_t> position(const MultiIndex& i) const;
  bool contains(const MultiIndex& i) const { return position(i).has_value(); }
  /// Throws DomainError if i is not in the set.
  std::size_t require_position(const MultiIndex& i) const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.arity_ == b.arity_ && a.points_ == b.points_;
  }

 private:
  Kind kind_ = Kind::Rectangular;
  std::size_t arity_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<MultiIndex> points_;
  std::map<std::vector<std::int64_t>, std::size_t> lookup_;
};

/// sigma in S_l acting on multi-indices by sigma(i) = (i_{sigma(1)}, ..., i_{sigma(l)}).
/// Stored 0-based; one-line notation in/out is 1-based.
class Permutation {
 public:
  /// From 1-based one-line notation. Throws std::invalid_argument if not bijective.
  static Permutation from_one_line(const std::vector<std::size_t>& one_based);
  static Permutation identity(std::size_t l);
  static Permutation reversal(std::size_t l);
  /// Parses "2,1,3".
  static Permutation parse(const std::string& text);

  std::size_t arity() const { return image_.size(); }
  std::vector<std::size_t> one_line() const;
  /// 0-based image of position s.
  std::size_t operator[](std::size_t s) const { return image_[s]; }

  MultiIndex apply(const MultiIndex& i) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// The permutation whose action on multi-indices is outer(inner(i)).
/// With R_s the operator stretch(., F o s), R_{s1} R_{s2} = R_{compose(s2, s1)}.
Permutation compose(const Permutation& outer, const Permutation& inner);

/// Deterministic bijection Z^l -> Z: zigzag each coordinate into N, fold the
/// coordinates left to right with the Cantor pairing, then map back to Z with
/// the inverse zigzag. Throws std::overflow_error past 64 bits.
std::int64_t enumerate_z(const MultiIndex& i);
MultiIndex enumerate_z_inverse(std::int64_t value, std::size_t arity);

/// A function F: A -> Z together with the set A it is defined on.
/// F's values on all of A are evaluated once at construction.
class IndexMap {
 public:
  enum class Kind { Linear, MixedRadix, MaxCoord, Table, Enumeration };

  /// F(i) = k . i
  static IndexMap linear(IndexSet domain, MultiIndex k);
  /// F(i) = i1 + n1 i2 + ... ; rectangular domains only (DomainError otherwise).
  static IndexMap mixed_radix(IndexSet domain);
  static IndexMap max_coord(IndexSet domain);
  /// Must assign a value to every point of the domain (DomainError otherwise).
  static IndexMap table(IndexSet domain, const std::vector<std::pair<MultiIndex, std::int64_t>>& pairs);
  static IndexMap enumeration(IndexSet domain);

  Kind kind() const { return kind_; }
  const IndexSet& domain() const { return domain_; }
  /// Only set for Kind::Linear.
  const MultiIndex& coefficients() const { return k_; }

  /// Throws DomainError if i is outside the domain.
  std::int64_t evaluate(const MultiIndex& i) const;
  /// F evaluated at every point, in canonical order.
  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t value_at(std::size_t pos) const { return values_[pos]; }

  bool is_injective() const;
  /// The same function as an explicit table.
  IndexMap to_table() const;

 private:
  IndexMap(Kind kind, IndexSet domain, std::vector<std::int64_t> values, MultiIndex k = {});

  Kind kind_;
  IndexSet domain_;
  std::vector<std::int64_t> values_;
  MultiIndex k_;
};

std::string to_string(IndexMap::Kind kind);

struct EquivalenceClass {
  std::int64_t value;
  std::vector<std::size_t> positions;  // canonical order
  std::vector<MultiIndex> members;
};

/// The classes of i ~ j <=> F(i) = F(j), ordered by ascending F-value.
struct ClassPartition {
  std::vector<EquivalenceClass> classes;
  std::vector<std::size_t> class_of;  // canonical position -> class index

  std::size_t size() const { return classes.size(); }
  std::vector<std::int64_t> values() const;
};

std::int64_t evaluate(const IndexMap& map, const MultiIndex& i);
ClassPartition partition(const IndexMap& map);
MultiIndex apply_permutation(const Permutation& sigma, const MultiIndex& i);

/// sigma(A) is contained in A, checked by exhaustion.
bool preserves_domain(const Permutation& sigma, const IndexSet& domain);

/// The table map i -> F(sigma(i)) on the same domain. Throws
/// PermutationDomainError if sigma(A) is not contained in A.
IndexMap compose_with_permutation(const IndexMap& map, const Permutation& sigma);

}  // namespace stretchkit
