#pragma once

/// \file subgroup_search.hpp
/// Exhaustive searches over small groups: subgroup enumeration by
/// generator growth, injective-homomorphism (embedding) search, and
/// isomorphism testing.  All results are deterministic.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "finite_group.hpp"

namespace cptrep {

/// All subgroups of exact order k, each a sorted element list, in
/// lexicographic order.  k not dividing |g| gives an empty list.
inline std::vector<std::vector<ElementId>> subgroups_of_order(const FiniteGroup& g,
                                                              std::size_t k) {
  if (k == 0 || g.order() % k != 0) return {};
  std::set<std::vector<ElementId>> pool;
  std::vector<std::vector<ElementId>> queue;
  std::vector<ElementId> trivial = subgroup_closure(g, {});
  pool.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    std::vector<ElementId> s = std::move(queue.back());
    queue.pop_back();
    for (ElementId x = 0; x < g.order(); ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      std::vector<ElementId> seed = s;
      seed.push_back(x);
      std::vector<ElementId> t = subgroup_closure(g, seed);
      if (t.size() > k) continue;
      if (pool.insert(t).second) queue.push_back(t);
    }
  }
  std::vector<std::vector<ElementId>> result;
  for (const auto& s : pool)
    if (s.size() == k) result.push_back(s);
  return result;
}

namespace detail {

// Extends generator images to a full map by breadth-first word
// reconstruction, then checks the homomorphism law and injectivity.
inline std::optional<std::vector<ElementId>> hom_from_generator_images(
    const FiniteGroup& h, const FiniteGroup& g, const std::vector<ElementId>& gens,
    const std::vector<ElementId>& images) {
  constexpr ElementId unset = static_cast<ElementId>(-1);
  std::vector<ElementId> map(h.order(), unset);
  std::vector<ElementId> frontier;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (map[gens[i]] != unset && map[gens[i]] != images[i]) return std::nullopt;
    if (map[gens[i]] == unset) {
      map[gens[i]] = images[i];
      frontier.push_back(gens[i]);
    }
  }
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      ElementId next = h.mul(frontier[i], gens[s]);
      ElementId img = g.mul(map[frontier[i]], map[gens[s]]);
      if (map[next] == unset) {
        map[next] = img;
        frontier.push_back(next);
      } else if (map[next] != img) {
        return std::nullopt;
      }
    }
  }
  // Generators generate h, so the map is total; verify the law fully.
  for (ElementId a = 0; a < h.order(); ++a)
    for (ElementId b = 0; b < h.order(); ++b)
      if (map[h.mul(a, b)] != g.mul(map[a], map[b])) return std::nullopt;
  std::vector<char> hit(g.order(), 0);
  for (ElementId v : map) {
    if (hit[v]) return std::nullopt;  // not injective
    hit[v] = 1;
  }
  return map;
}

inline bool backtrack_images(const FiniteGroup& h, const FiniteGroup& g,
                             const std::vector<ElementId>& gens,
                             const std::vector<std::vector<ElementId>>& candidates,
                             std::vector<ElementId>& chosen, std::size_t depth,
                             std::vector<ElementId>& out) {
  if (depth == gens.size()) {
    if (auto map = hom_from_generator_images(h, g, gens, chosen)) {
      out = *map;
      return true;
    }
    return false;
  }
  for (ElementId img : candidates[depth]) {
    chosen[depth] = img;
    if (backtrack_images(h, g, gens, candidates, chosen, depth + 1, out)) return true;
  }
  return false;
}

}  // namespace detail

/// Realizes a closed element list of g as a group in its own right,
/// keeping the parent labels.  Throws if the list is not closed.
inline GroupPtr subgroup_as_group(const GroupPtr& g, const std::vector<ElementId>& members) {
  if (!is_subgroup(*g, members))
    throw std::invalid_argument("subgroup_as_group: element list is not a subgroup");
  return generate_group(
      members, [g](ElementId a, ElementId b) { return g->mul(a, b); },
      [](ElementId a, ElementId b) { return a == b; },
      [g](ElementId x) { return g->label(x); });
}

/// First injective homomorphism h -> g in lexicographic generator-image
/// order, or nullopt when none exists.
inline std::optional<GroupHom> embeds(GroupPtr h, GroupPtr g) {
  if (g->order() % h->order() != 0) return std::nullopt;
  const std::vector<ElementId>& gens = h->generators();
  std::vector<std::vector<ElementId>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    unsigned ord = element_order(*h, gens[i]);
    for (ElementId x = 0; x < g->order(); ++x)
      if (element_order(*g, x) == ord) candidates[i].push_back(x);
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<ElementId> chosen(gens.size());
  std::vector<ElementId> map;
  if (!detail::backtrack_images(*h, *g, gens, candidates, chosen, 0, map)) return std::nullopt;
  return GroupHom{h, g, std::move(map)};
}

/// Bijective homomorphism g -> h, or nullopt.  Cheap invariants (order
/// profile, class sizes, center) answer most negatives without search.
inline std::optional<GroupHom> is_isomorphic(GroupPtr g, GroupPtr h) {
  if (g->order() != h->order()) return std::nullopt;
  if (g == h || *g == *h) {
    GroupHom ident{g, h, std::vector<ElementId>(g->order())};
    std::iota(ident.map.begin(), ident.map.end(), 0);
    return ident;
  }
  if (order_profile(*g) != order_profile(*h)) return std::nullopt;
  auto class_sizes = [](const FiniteGroup& x) {
    std::vector<std::size_t> sizes;
    for (const auto& c : conjugacy_classes(x)) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (class_sizes(*g) != class_sizes(*h)) return std::nullopt;
  if (center(*g).size() != center(*h).size()) return std::nullopt;
  auto hom = embeds(g, h);  // same order: injective means bijective
  if (!hom) return std::nullopt;
  return hom;
}

}  // namespace cptrep
