#pragma once

/// \file finite_group.hpp
/// Fully materialized finite groups: element list, Cayley table, labels,
/// identity, inverses, generators.  Construction validates the group
/// axioms (Latin square always, full associativity up to order 256) and
/// enforces a configurable order cap.  Instances are immutable and meant
/// to be shared through GroupPtr.

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cptrep {

using ElementId = std::size_t;

/// Maximum group order accepted by constructors; override with the
/// CPTREP_ORDER_CAP environment variable.
inline std::size_t group_order_cap() {
  if (const char* env = std::getenv("CPTREP_ORDER_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

class FiniteGroup {
public:
  /// cayley is row-major: cayley[a * order + b] = a*b.
  FiniteGroup(std::vector<std::string> labels, std::vector<ElementId> cayley,
              std::vector<ElementId> generators)
      : labels_(std::move(labels)), cayley_(std::move(cayley)), generators_(std::move(generators)) {
    order_ = labels_.size();
    validate();
  }

  std::size_t order() const { return order_; }
  ElementId identity() const { return identity_; }
  ElementId mul(ElementId a, ElementId b) const { return cayley_[a * order_ + b]; }
  ElementId inv(ElementId a) const { return inverses_[a]; }

  const std::string& label(ElementId a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<ElementId>& cayley() const { return cayley_; }
  const std::vector<ElementId>& generators() const { return generators_; }

  std::optional<ElementId> find(std::string_view label) const {
    for (ElementId a = 0; a < order_; ++a)
      if (labels_[a] == label) return a;
    return std::nullopt;
  }

  /// Element with the given label; throws when absent.
  ElementId require(std::string_view label) const {
    if (auto a = find(label)) return *a;
    throw std::out_of_range("FiniteGroup: no element labeled '" + std::string(label) + "'");
  }

  /// Same structure under new labels.
  FiniteGroup relabeled(std::vector<std::string> labels) const {
    return FiniteGroup(std::move(labels), cayley_, generators_);
  }

  /// Structural equality: same Cayley table, labels and generators.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.labels_ == b.labels_ && a.cayley_ == b.cayley_ && a.generators_ == b.generators_;
  }

private:
  void validate() {
    if (order_ == 0) throw std::invalid_argument("FiniteGroup: empty element list");
    if (order_ > group_order_cap())
      throw std::invalid_argument("FiniteGroup: order " + std::to_string(order_) +
                                  " exceeds cap " + std::to_string(group_order_cap()));
    if (cayley_.size() != order_ * order_)
      throw std::invalid_argument("FiniteGroup: Cayley table size mismatch");
    for (ElementId v : cayley_)
      if (v >= order_) throw std::invalid_argument("FiniteGroup: Cayley entry out of range");
    {
      std::vector<std::string> sorted = labels_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("FiniteGroup: duplicate element labels");
    }
    // Latin square: every row and column is a permutation.
    std::vector<char> seen(order_);
    for (ElementId a = 0; a < order_; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (ElementId b = 0; b < order_; ++b) {
        ElementId p = mul(a, b);
        if (seen[p]) throw std::invalid_argument("FiniteGroup: row " + labels_[a] + " repeats");
        seen[p] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (ElementId b = 0; b < order_; ++b) {
        ElementId p = mul(b, a);
        if (seen[p]) throw std::invalid_argument("FiniteGroup: column " + labels_[a] + " repeats");
        seen[p] = 1;
      }
    }
    // Two-sided identity.
    std::optional<ElementId> id;
    for (ElementId e = 0; e < order_; ++e) {
      bool ok = true;
      for (ElementId x = 0; x < order_ && ok; ++x)
        ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) {
        id = e;
        break;
      }
    }
    if (!id) throw std::invalid_argument("FiniteGroup: no identity element");
    identity_ = *id;
    // Two-sided inverses.
    inverses_.assign(order_, 0);
    for (ElementId a = 0; a < order_; ++a) {
      std::optional<ElementId> ia;
      for (ElementId b = 0; b < order_; ++b)
        if (mul(a, b) == identity_ && mul(b, a) == identity_) {
          ia = b;
          break;
        }
      if (!ia) throw std::invalid_argument("FiniteGroup: element " + labels_[a] + " has no inverse");
      inverses_[a] = *ia;
    }
    // Associativity, exhaustively for small orders.
    if (order_ <= 256) {
      for (ElementId a = 0; a < order_; ++a)
        for (ElementId b = 0; b < order_; ++b) {
          ElementId ab = mul(a, b);
          for (ElementId c = 0; c < order_; ++c)
            if (mul(ab, c) != mul(a, mul(b, c)))
              throw std::invalid_argument("FiniteGroup: associativity fails at (" + labels_[a] +
                                          "," + labels_[b] + "," + labels_[c] + ")");
        }
    }
    // Declared generators must generate the whole group.
    if (generators_.empty()) throw std::invalid_argument("FiniteGroup: no generators given");
    for (ElementId g : generators_)
      if (g >= order_) throw std::invalid_argument("FiniteGroup: generator out of range");
    std::vector<char> reached(order_, 0);
    std::vector<ElementId> frontier;
    for (ElementId g : generators_)
      if (!reached[g]) {
        reached[g] = 1;
        frontier.push_back(g);
      }
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (ElementId g : generators_) {
        ElementId p = mul(frontier[i], g);
        if (!reached[p]) {
          reached[p] = 1;
          frontier.push_back(p);
        }
      }
    if (std::find(reached.begin(), reached.end(), 0) != reached.end())
      throw std::invalid_argument("FiniteGroup: declared generators do not generate the group");
  }

  std::size_t order_;
  std::vector<std::string> labels_;
  std::vector<ElementId> cayley_;
  std::vector<ElementId> generators_;
  std::vector<ElementId> inverses_;
  ElementId identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Closure of seed elements under an opaque multiplication, materialized
/// as a FiniteGroup.  Element order is breadth-first from the seeds, so
/// repeated runs give identical element lists and labels.
template <class T, class Mul, class Eq, class LabelFn>
GroupPtr generate_group(const std::vector<T>& seeds, Mul multiply, Eq equal, LabelFn label) {
  if (seeds.empty()) throw std::invalid_argument("generate_group: no seed elements");
  const std::size_t cap = group_order_cap();
  std::vector<T> elems;
  auto find_elem = [&](const T& x) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (equal(elems[i], x)) return i;
    return std::nullopt;
  };
  for (const T& s : seeds) {
    if (!find_elem(s)) elems.push_back(s);
  }
  const std::size_t seed_count = elems.size();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s = 0; s < seed_count; ++s) {
      T p = multiply(elems[i], elems[s]);
      if (!find_elem(p)) {
        if (elems.size() >= cap)
          throw std::invalid_argument("generate_group: closure exceeds order cap");
        elems.push_back(std::move(p));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<ElementId> cayley(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T p = multiply(elems[i], elems[j]);
      auto k = find_elem(p);
      if (!k)
        throw std::invalid_argument("generate_group: multiplication left the closed set");
      cayley[i * n + j] = *k;
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const T& x : elems) labels.push_back(label(x));
  std::vector<ElementId> gen_ids(seed_count);
  std::iota(gen_ids.begin(), gen_ids.end(), 0);
  return std::make_shared<FiniteGroup>(std::move(labels), std::move(cayley), std::move(gen_ids));
}

inline unsigned element_order(const FiniteGroup& g, ElementId x) {
  unsigned k = 1;
  ElementId p = x;
  while (p != g.identity()) {
    p = g.mul(p, x);
    ++k;
  }
  return k;
}

/// Multiset {order -> count} over all elements; an isomorphism invariant.
inline std::vector<std::pair<unsigned, std::size_t>> order_profile(const FiniteGroup& g) {
  std::vector<unsigned> orders;
  for (ElementId x = 0; x < g.order(); ++x) orders.push_back(element_order(g, x));
  std::sort(orders.begin(), orders.end());
  std::vector<std::pair<unsigned, std::size_t>> profile;
  for (unsigned o : orders) {
    if (!profile.empty() && profile.back().first == o) ++profile.back().second;
    else profile.emplace_back(o, 1);
  }
  return profile;
}

struct ConjugacyClass {
  ElementId representative;  // least member
  std::vector<ElementId> members;  // ascending
  std::size_t size() const { return members.size(); }
};

/// Classes ordered by least member index.
inline std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<ConjugacyClass> classes;
  for (ElementId x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ConjugacyClass cls;
    for (ElementId a = 0; a < n; ++a) {
      ElementId y = g.mul(g.mul(a, x), g.inv(a));
      if (!seen[y]) {
        seen[y] = 1;
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// class_of[x] = index of x's class in the conjugacy_classes order.
inline std::vector<std::size_t> class_index_map(const FiniteGroup& g,
                                                const std::vector<ConjugacyClass>& classes) {
  std::vector<std::size_t> idx(g.order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (ElementId m : classes[c].members) idx[m] = c;
  return idx;
}

inline std::vector<std::size_t> class_index_map(const FiniteGroup& g) {
  return class_index_map(g, conjugacy_classes(g));
}

/// Center: elements commuting with everything.
inline std::vector<ElementId> center(const FiniteGroup& g) {
  std::vector<ElementId> z;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElementId y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<ElementId> map;  // indexed by source element

  ElementId operator()(ElementId a) const { return map[a]; }

  bool is_injective() const {
    std::vector<char> hit(target->order(), 0);
    for (ElementId v : map) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  }
  bool is_surjective() const {
    std::vector<char> hit(target->order(), 0);
    std::size_t count = 0;
    for (ElementId v : map)
      if (!hit[v]) {
        hit[v] = 1;
        ++count;
      }
    return count == target->order();
  }
  bool is_bijective() const { return is_injective() && is_surjective(); }

  /// Sorted image element list.
  std::vector<ElementId> image() const {
    std::vector<ElementId> im = map;
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }
};

struct HomReport {
  // Pairs (a, b) with f(a*b) != f(a)*f(b).
  std::vector<std::pair<ElementId, ElementId>> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive check of the homomorphism law over all element pairs.
inline HomReport verify_hom(const GroupHom& f) {
  if (f.map.size() != f.source->order())
    throw std::invalid_argument("verify_hom: map size does not match source order");
  for (ElementId v : f.map)
    if (v >= f.target->order())
      throw std::invalid_argument("verify_hom: map value out of target range");
  HomReport report;
  const FiniteGroup& s = *f.source;
  const FiniteGroup& t = *f.target;
  for (ElementId a = 0; a < s.order(); ++a)
    for (ElementId b = 0; b < s.order(); ++b)
      if (f.map[s.mul(a, b)] != t.mul(f.map[a], f.map[b]))
        report.violations.emplace_back(a, b);
  return report;
}

/// Subgroup generated by the given elements, as a sorted element list.
/// Finite order makes right-multiplication by the seeds reach every word.
inline std::vector<ElementId> subgroup_closure(const FiniteGroup& g,
                                               const std::vector<ElementId>& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<ElementId> list;
  auto add = [&](ElementId x) {
    if (!in[x]) {
      in[x] = 1;
      list.push_back(x);
    }
  };
  add(g.identity());
  for (ElementId s : seed) add(s);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (ElementId s : seed) add(g.mul(list[i], s));
  std::sort(list.begin(), list.end());
  return list;
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<ElementId>& elems) {
  std::vector<char> in(g.order(), 0);
  for (ElementId x : elems) {
    if (x >= g.order() || in[x]) return false;
    in[x] = 1;
  }
  if (!in[g.identity()]) return false;
  for (ElementId a : elems)
    for (ElementId b : elems)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

inline bool is_normal_subgroup(const FiniteGroup& g, const std::vector<ElementId>& elems) {
  if (!is_subgroup(g, elems)) return false;
  std::vector<char> in(g.order(), 0);
  for (ElementId x : elems) in[x] = 1;
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId h : elems)
      if (!in[g.mul(g.mul(a, h), g.inv(a))]) return false;
  return true;
}

}  // namespace cptrep
