#pragma once

/// \file products.hpp
/// Direct products, semidirect products driven by a validated action
/// table, and quotient groups with their canonical projections.
///
/// Product element (i, j) over factors (A, B) lives at index i*|B| + j,
/// labeled "(label_A,label_B)".

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "finite_group.hpp"

namespace cptrep {

struct DirectProduct {
  GroupPtr group;
  GroupHom proj_left, proj_right;  // onto the factors
  GroupHom inj_left, inj_right;    // x -> (x, e) and y -> (e, y)
};

inline DirectProduct direct_product(GroupPtr a, GroupPtr b) {
  const std::size_t na = a->order(), nb = b->order();
  if (na * nb > group_order_cap())
    throw std::invalid_argument("direct_product: order exceeds cap");
  auto id = [nb](ElementId i, ElementId j) { return i * nb + j; };
  std::vector<std::string> labels;
  labels.reserve(na * nb);
  for (ElementId i = 0; i < na; ++i)
    for (ElementId j = 0; j < nb; ++j)
      labels.push_back("(" + a->label(i) + "," + b->label(j) + ")");
  std::vector<ElementId> cayley(na * nb * na * nb);
  for (ElementId i = 0; i < na; ++i)
    for (ElementId j = 0; j < nb; ++j)
      for (ElementId k = 0; k < na; ++k)
        for (ElementId l = 0; l < nb; ++l)
          cayley[id(i, j) * na * nb + id(k, l)] = id(a->mul(i, k), b->mul(j, l));
  std::vector<ElementId> gens;
  for (ElementId g : a->generators()) gens.push_back(id(g, b->identity()));
  for (ElementId g : b->generators()) gens.push_back(id(a->identity(), g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto group = std::make_shared<FiniteGroup>(std::move(labels), std::move(cayley), std::move(gens));

  DirectProduct dp;
  dp.group = group;
  dp.proj_left = {group, a, {}};
  dp.proj_right = {group, b, {}};
  for (ElementId i = 0; i < na; ++i)
    for (ElementId j = 0; j < nb; ++j) {
      dp.proj_left.map.push_back(i);
      dp.proj_right.map.push_back(j);
    }
  dp.inj_left = {a, group, {}};
  for (ElementId i = 0; i < na; ++i) dp.inj_left.map.push_back(id(i, b->identity()));
  dp.inj_right = {b, group, {}};
  for (ElementId j = 0; j < nb; ++j) dp.inj_right.map.push_back(id(a->identity(), j));
  return dp;
}

/// An action of H on N by automorphisms: one permutation of N per
/// element of H.  Validated on construction.
struct ActionTable {
  GroupPtr acting;  // H
  GroupPtr target;  // N
  std::vector<std::vector<ElementId>> table;  // table[h][x] = action of h on x

  ActionTable(GroupPtr h, GroupPtr n, std::vector<std::vector<ElementId>> t)
      : acting(std::move(h)), target(std::move(n)), table(std::move(t)) {
    validate();
  }

  /// Trivial action: every h acts as the identity automorphism.
  static ActionTable trivial(GroupPtr h, GroupPtr n) {
    std::vector<ElementId> ident(n->order());
    std::iota(ident.begin(), ident.end(), 0);
    return ActionTable(std::move(h), std::move(n),
                       std::vector<std::vector<ElementId>>(h->order(), ident));
  }

private:
  void validate() const {
    const FiniteGroup& h = *acting;
    const FiniteGroup& n = *target;
    if (table.size() != h.order())
      throw std::invalid_argument("ActionTable: one permutation per acting element required");
    for (ElementId a = 0; a < h.order(); ++a) {
      const auto& perm = table[a];
      if (perm.size() != n.order())
        throw std::invalid_argument("ActionTable: permutation size mismatch");
      std::vector<char> seen(n.order(), 0);
      for (ElementId v : perm) {
        if (v >= n.order() || seen[v])
          throw std::invalid_argument("ActionTable: entry for " + h.label(a) +
                                      " is not a permutation");
        seen[v] = 1;
      }
      for (ElementId x = 0; x < n.order(); ++x)
        for (ElementId y = 0; y < n.order(); ++y)
          if (perm[n.mul(x, y)] != n.mul(perm[x], perm[y]))
            throw std::invalid_argument("ActionTable: action of " + h.label(a) +
                                        " is not an automorphism");
    }
    for (ElementId a = 0; a < h.order(); ++a)
      for (ElementId b = 0; b < h.order(); ++b) {
        const auto& pa = table[a];
        const auto& pb = table[b];
        const auto& pab = table[h.mul(a, b)];
        for (ElementId x = 0; x < n.order(); ++x)
          if (pab[x] != pa[pb[x]])
            throw std::invalid_argument("ActionTable: H -> Aut(N) is not a homomorphism at (" +
                                        h.label(a) + "," + h.label(b) + ")");
      }
  }
};

/// Semidirect product N x| H with law (g',h')(g,h) = (g' . h'(g), h'h).
/// Element (g, h) sits at index g*|H| + h, labeled "(g,h)".
inline GroupPtr semidirect_product(GroupPtr n, GroupPtr h, const ActionTable& action) {
  if (action.target != n || action.acting != h)
    throw std::invalid_argument("semidirect_product: action built for different groups");
  const std::size_t nn = n->order(), nh = h->order();
  if (nn * nh > group_order_cap())
    throw std::invalid_argument("semidirect_product: order exceeds cap");
  auto id = [nh](ElementId g, ElementId a) { return g * nh + a; };
  std::vector<std::string> labels;
  labels.reserve(nn * nh);
  for (ElementId g = 0; g < nn; ++g)
    for (ElementId a = 0; a < nh; ++a)
      labels.push_back("(" + n->label(g) + "," + h->label(a) + ")");
  std::vector<ElementId> cayley(nn * nh * nn * nh);
  for (ElementId g2 = 0; g2 < nn; ++g2)
    for (ElementId a2 = 0; a2 < nh; ++a2)
      for (ElementId g1 = 0; g1 < nn; ++g1)
        for (ElementId a1 = 0; a1 < nh; ++a1) {
          // (g2, a2)(g1, a1) = (g2 . a2(g1), a2 a1)
          ElementId gp = n->mul(g2, action.table[a2][g1]);
          cayley[id(g2, a2) * nn * nh + id(g1, a1)] = id(gp, h->mul(a2, a1));
        }
  std::vector<ElementId> gens;
  for (ElementId g : n->generators()) gens.push_back(id(g, h->identity()));
  for (ElementId a : h->generators()) gens.push_back(id(n->identity(), a));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return std::make_shared<FiniteGroup>(std::move(labels), std::move(cayley), std::move(gens));
}

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

/// Quotient by a normal subgroup given as an element list.  Cosets are
/// ordered by least member and labeled "<least-member-label>".
inline Quotient quotient_group(GroupPtr g, const std::vector<ElementId>& normal) {
  if (!is_subgroup(*g, normal))
    throw std::invalid_argument("quotient_group: element list is not a subgroup");
  if (!is_normal_subgroup(*g, normal))
    throw std::invalid_argument("quotient_group: subgroup is not normal");
  const std::size_t n = g->order();
  std::vector<std::size_t> coset_of(n, SIZE_MAX);
  std::vector<ElementId> coset_rep;  // least member of each coset, discovery order
  for (ElementId x = 0; x < n; ++x) {
    if (coset_of[x] != SIZE_MAX) continue;
    std::size_t c = coset_rep.size();
    coset_rep.push_back(x);
    for (ElementId hh : normal) coset_of[g->mul(x, hh)] = c;
  }
  const std::size_t q = coset_rep.size();
  std::vector<std::string> labels;
  labels.reserve(q);
  for (ElementId r : coset_rep) labels.push_back("<" + g->label(r) + ">");
  std::vector<ElementId> cayley(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      cayley[i * q + j] = coset_of[g->mul(coset_rep[i], coset_rep[j])];
  std::vector<ElementId> gens;
  for (ElementId gg : g->generators()) gens.push_back(coset_of[gg]);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto qgroup = std::make_shared<FiniteGroup>(std::move(labels), std::move(cayley), std::move(gens));
  GroupHom proj{g, qgroup, {}};
  proj.map.reserve(n);
  for (ElementId x = 0; x < n; ++x) proj.map.push_back(coset_of[x]);
  return {qgroup, proj};
}

}  // namespace cptrep
