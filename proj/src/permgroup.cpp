#include "cover/permgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace cover {

Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), Point{0});
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<Point>(x);
  return out;
}

bool is_permutation(const Perm& a) {
  std::vector<bool> hit(a.size(), false);
  for (const Point y : a) {
    if (y >= a.size() || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::size_t element_order(const Perm& a) {
  // lcm of cycle lengths
  std::vector<bool> seen(a.size(), false);
  std::size_t out = 1;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = a[y]) {
      seen[y] = true;
      ++len;
    }
    out = std::lcm(out, len);
  }
  return out;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (const Point x : p) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

PermGroup PermGroup::closure(std::size_t degree, std::vector<Perm> generators, std::size_t cap) {
  PermGroup g;
  g.degree_ = degree;
  for (const Perm& s : generators) {
    if (s.size() != degree) {
      throw std::invalid_argument("generator of degree " + std::to_string(s.size()) +
                                  " in a group of degree " + std::to_string(degree));
    }
    if (!is_permutation(s)) throw std::invalid_argument("generator is not a bijection");
  }
  g.generators_ = std::move(generators);
  g.elements_.push_back(identity_perm(degree));
  g.index_.emplace(g.elements_.back(), 0);
  for (std::size_t j = 0; j < g.elements_.size(); ++j) {
    for (const Perm& s : g.generators_) {
      Perm next = compose(s, g.elements_[j]);
      if (g.index_.count(next) != 0) continue;
      if (g.elements_.size() >= cap) {
        throw GroupCapExceeded("group order exceeds the cap of " + std::to_string(cap));
      }
      g.index_.emplace(next, g.elements_.size());
      g.elements_.push_back(std::move(next));
    }
  }
  return g;
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PermGroup::is_abelian() const {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    for (std::size_t b = a + 1; b < generators_.size(); ++b) {
      if (compose(generators_[a], generators_[b]) != compose(generators_[b], generators_[a])) return false;
    }
  }
  return true;
}

std::vector<Point> orbit_of(const PermGroup& g, Point x) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{x};
  seen[x] = true;
  for (std::size_t j = 0; j < out.size(); ++j) {
    for (const Perm& s : g.generators()) {
      const Point y = s[out[j]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Orbit> orbits(const PermGroup& g) {
  std::vector<bool> covered(g.degree(), false);
  std::vector<Orbit> out;
  for (Point x = 0; x < g.degree(); ++x) {
    if (covered[x]) continue;
    Orbit o{orbit_of(g, x), std::nullopt};
    for (const Point y : o.points) covered[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

namespace {

// Greedy generators for a subgroup given as an element list.
std::vector<Perm> greedy_generators(std::size_t degree, std::vector<Perm> candidates, std::size_t cap) {
  std::stable_sort(candidates.begin(), candidates.end(), [](const Perm& a, const Perm& b) {
    return element_order(a) > element_order(b);
  });
  std::vector<Perm> gens;
  PermGroup span = PermGroup::closure(degree, {}, cap);
  for (const Perm& c : candidates) {
    if (span.order() == candidates.size()) break;
    if (span.contains(c)) continue;
    gens.push_back(c);
    span = PermGroup::closure(degree, gens, cap);
  }
  return gens;
}

}  // namespace

std::vector<Perm> small_generating_set(const PermGroup& g) {
  return greedy_generators(g.degree(), g.elements(), std::max(g.order(), std::size_t{1}));
}

PermGroup stabilizer(const PermGroup& g, Point x) {
  std::vector<Perm> fixing;
  for (const Perm& p : g.elements()) {
    if (p[x] == x) fixing.push_back(p);
  }
  const std::size_t order = fixing.size();
  PermGroup out = PermGroup::closure(g.degree(), greedy_generators(g.degree(), std::move(fixing), order), order);
  return out;
}

namespace {

// Elements indexed 0..n-1 with multiplication by lookup.
struct IndexedGroup {
  const PermGroup* group;
  std::vector<std::size_t> order_of;

  explicit IndexedGroup(const PermGroup& g) : group(&g) {
    for (const Perm& p : g.elements()) order_of.push_back(element_order(p));
  }
  std::size_t mul(std::size_t a, std::size_t b) const {
    return *group->index_of(compose(group->elements()[a], group->elements()[b]));
  }
};

class IsomorphismSearch {
 public:
  IsomorphismSearch(const PermGroup& g1, const PermGroup& g2) : a_(g1), b_(g2) {
    for (const Perm& s : small_generating_set(g1)) gens_.push_back(*g1.index_of(s));
  }

  bool run() { return assign(0); }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Extends the map over the subgroup generated by the first `count`
  // generators; returns false on a clash or a loss of injectivity.
  bool extend(std::size_t count, std::vector<std::size_t>& image, std::vector<bool>& used) const {
    std::vector<std::size_t> frontier;
    for (std::size_t x = 0; x < image.size(); ++x) {
      if (image[x] != kUnset) frontier.push_back(x);
    }
    for (std::size_t j = 0; j < frontier.size(); ++j) {
      const std::size_t x = frontier[j];
      for (std::size_t t = 0; t < count; ++t) {
        const std::size_t y = a_.mul(gens_[t], x);
        const std::size_t fy = b_.mul(chosen_[t], image[x]);
        if (image[y] == kUnset) {
          if (used[fy]) return false;
          image[y] = fy;
          used[fy] = true;
          frontier.push_back(y);
        } else if (image[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  bool assign(std::size_t t) {
    if (t == gens_.size()) {
      std::vector<std::size_t> image(a_.group->order(), kUnset);
      std::vector<bool> used(b_.group->order(), false);
      image[0] = 0;
      used[0] = true;
      return extend(gens_.size(), image, used) &&
             std::none_of(image.begin(), image.end(), [](std::size_t v) { return v == kUnset; });
    }
    const std::size_t want = a_.order_of[gens_[t]];
    for (std::size_t h = 0; h < b_.group->order(); ++h) {
      if (b_.order_of[h] != want) continue;
      chosen_.push_back(h);
      std::vector<std::size_t> image(a_.group->order(), kUnset);
      std::vector<bool> used(b_.group->order(), false);
      image[0] = 0;
      used[0] = true;
      if (extend(t + 1, image, used) && assign(t + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  IndexedGroup a_, b_;
  std::vector<std::size_t> gens_;
  std::vector<std::size_t> chosen_;
};

std::map<std::size_t, std::size_t> order_histogram(const PermGroup& g) {
  std::map<std::size_t, std::size_t> out;
  for (const Perm& p : g.elements()) ++out[element_order(p)];
  return out;
}

}  // namespace

bool are_isomorphic(const PermGroup& g1, const PermGroup& g2) {
  if (g1.order() != g2.order()) return false;
  if (g1.is_abelian() != g2.is_abelian()) return false;
  if (order_histogram(g1) != order_histogram(g2)) return false;
  return IsomorphismSearch(g1, g2).run();
}

PermGroup direct_product(std::span<const PermGroup> factors, std::size_t cap) {
  std::size_t degree = 0;
  std::size_t order = 1;
  for (const PermGroup& f : factors) {
    degree += f.degree();
    if (order > cap / std::max<std::size_t>(f.order(), 1)) {
      throw GroupCapExceeded("direct product order exceeds the cap of " + std::to_string(cap));
    }
    order *= f.order();
  }
  std::vector<Perm> gens;
  std::size_t shift = 0;
  for (const PermGroup& f : factors) {
    for (const Perm& s : f.generators()) {
      Perm lifted = identity_perm(degree);
      for (std::size_t x = 0; x < s.size(); ++x) lifted[shift + x] = static_cast<Point>(shift + s[x]);
      gens.push_back(std::move(lifted));
    }
    shift += f.degree();
  }
  return PermGroup::closure(degree, std::move(gens), cap);
}

}  // namespace cover
