#pragma once

// Small permutation groups with all elements listed explicitly. Sized for
// groups of order up to a few thousand.
//
// Composition convention everywhere: compose(a, b) applies b first, then a,
// i.e. compose(a, b)[x] == a[b[x]].

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace cover {

using Point = std::uint32_t;
using Perm = std::vector<Point>;

inline constexpr std::size_t kDefaultGroupCap = 10240;

class GroupCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

Perm identity_perm(std::size_t degree);
Perm compose(const Perm& a, const Perm& b);  // b first, then a
Perm inverse(const Perm& a);
bool is_permutation(const Perm& a);
std::size_t element_order(const Perm& a);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

class PermGroup {
 public:
  /// Breadth-first product closure of the generators. Element 0 is the
  /// identity. Throws GroupCapExceeded past `cap` elements and
  /// std::invalid_argument on a non-bijection or a degree mismatch.
  static PermGroup closure(std::size_t degree, std::vector<Perm> generators,
                           std::size_t cap = kDefaultGroupCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }

  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  std::optional<std::size_t> index_of(const Perm& p) const;
  bool is_abelian() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

struct Orbit {
  std::vector<Point> points;  // ascending
  std::optional<std::int64_t> label;
};

/// Orbits ordered by their minimal point, labels unset.
std::vector<Orbit> orbits(const PermGroup& g);

std::vector<Point> orbit_of(const PermGroup& g, Point x);

/// Pointwise stabilizer of x, generated by a small subset of its elements.
PermGroup stabilizer(const PermGroup& g, Point x);

/// Abstract isomorphism: order, abelianness and element-order counts
/// first, then a backtracking search over images of a generating set.
bool are_isomorphic(const PermGroup& g1, const PermGroup& g2);

/// Direct product acting on the disjoint union of the factors' point sets
/// (factor j occupies the points after those of factors 0..j-1).
PermGroup direct_product(std::span<const PermGroup> factors, std::size_t cap = kDefaultGroupCap);

/// A short generating list chosen greedily among the elements, higher
/// element orders first.
std::vector<Perm> small_generating_set(const PermGroup& g);

}  // namespace cover
