#pragma once

/// \file models.hpp
/// Constructs the CPT groups of quantum electrodynamics and their
/// irreducible representations:
///
///  * the spinor-field group G_psi_hat = Q x Z2 (quaternion group times
///    charge conjugation), order 16,
///  * the gauge-potential group G_A = Z2 x Z2 x Z2, order 8, realized
///    both abstractly and as transformations of the vector potential,
///  * the equation-level group G_psi_eq = D4 x| Z2 (semidirect), order
///    16, which shares its character table with G_psi_hat without being
///    isomorphic to it,
///  * the full group G_QED = G_psi_hat x G_A, order 128.
///
/// Element labels follow the printed operator notation recorded in
/// fixtures.hpp, so groups, dictionaries and tables can be cross-checked
/// by label.  Irreducible representations are built constructively
/// (tensor products, quotient pullbacks, explicit matrices, and one
/// orthogonality completion), independently of the Dixon route in
/// character_table.hpp.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "../character_table.hpp"
#include "../cmatrix.hpp"
#include "../finite_group.hpp"
#include "../permutation.hpp"
#include "../products.hpp"
#include "../quaternion.hpp"
#include "../representation.hpp"
#include "fixtures.hpp"

namespace cptrep::cpt {

inline GroupPtr quaternion_group() {
  using SQ = SignedQuaternion;
  std::vector<SQ> seeds{SQ::iota(), SQ::gamma()};
  return generate_group(
      seeds, [](const SQ& a, const SQ& b) { return a * b; },
      [](const SQ& a, const SQ& b) { return a == b; },
      [](const SQ& a) { return a.to_string(); });
}

/// Z2 with labels e, a.
inline GroupPtr z2_group() {
  std::vector<int> seeds{1};
  return generate_group(
      seeds, [](int a, int b) { return a ^ b; }, [](int a, int b) { return a == b; },
      [](int a) { return std::string(a ? "a" : "e"); });
}

/// Z2 written multiplicatively with labels 1, -1.
inline GroupPtr z2_signs_group() {
  std::vector<int> seeds{-1};
  return generate_group(
      seeds, [](int a, int b) { return a * b; }, [](int a, int b) { return a == b; },
      [](int a) { return std::string(a > 0 ? "1" : "-1"); });
}

/// Z2 x Z2 x Z2 as bit masks, labeled "(x,y,z)" with x the low bit.
inline GroupPtr z2_cubed_group() {
  std::vector<unsigned> seeds{1, 2, 4};
  auto label = [](unsigned m) {
    std::string s = "(";
    for (unsigned bit = 0; bit < 3; ++bit) {
      if (bit) s += ',';
      s += (m >> bit) & 1u ? 'a' : 'e';
    }
    return s + ")";
  };
  return generate_group(
      seeds, [](unsigned a, unsigned b) { return a ^ b; },
      [](unsigned a, unsigned b) { return a == b; }, label);
}

inline GroupPtr permutation_group(const std::vector<Permutation>& seeds) {
  return generate_group(
      seeds, [](const Permutation& a, const Permutation& b) { return a * b; },
      [](const Permutation& a, const Permutation& b) { return a == b; },
      [](const Permutation& a) { return a.cycle_string(); });
}

inline GroupPtr c4_group() {
  return permutation_group({Permutation::from_cycles({{1, 2, 3, 4}}, 4)});
}

/// Symmetries of the square as permutations of its corners 1..4.
inline GroupPtr d4_group() {
  return permutation_group({Permutation::from_cycles({{1, 2, 3, 4}}, 4),
                            Permutation::from_cycles({{1, 3}}, 4)});
}

inline DirectProduct d4_x_z2() { return direct_product(d4_group(), z2_group()); }
inline DirectProduct c4_x_z2() { return direct_product(c4_group(), z2_group()); }

namespace detail {

/// Renames `base` so that element dictionary[k].to gets the label
/// dictionary[k].from; requires the dictionary to cover every element
/// exactly once.
inline GroupPtr relabel_by_dictionary(const GroupPtr& base,
                                      const std::vector<fixtures::LabelPair>& dictionary) {
  if (dictionary.size() != base->order())
    throw std::invalid_argument("relabel_by_dictionary: dictionary does not cover the group");
  std::vector<std::string> labels(base->order());
  std::vector<char> hit(base->order(), 0);
  for (const auto& row : dictionary) {
    ElementId x = base->require(row.to);
    if (hit[x])
      throw std::invalid_argument("relabel_by_dictionary: element named twice: " + row.to);
    hit[x] = 1;
    labels[x] = row.from;
  }
  return std::make_shared<FiniteGroup>(base->relabeled(std::move(labels)));
}

inline CMatrix scalar_matrix(const Cyclotomic& v) {
  CMatrix m(1, 1);
  m.at(0, 0) = v;
  return m;
}

}  // namespace detail

/// The spinor-field CPT group: the quaternion factor carries P^ and T^
/// (as iota and gamma), the Z2 factor carries C^.
struct PsiHatModel {
  GroupPtr quaternion;
  GroupPtr z2;
  DirectProduct product;  // pair-labeled Q x Z2
  GroupPtr group;         // the same group under operator labels
};

inline PsiHatModel psi_hat_model() {
  PsiHatModel m;
  m.quaternion = quaternion_group();
  m.z2 = z2_group();
  m.product = direct_product(m.quaternion, m.z2);
  m.group = detail::relabel_by_dictionary(m.product.group, fixtures::eq2_dictionary());
  return m;
}

/// The gauge-potential CPT group, an elementary abelian group of order
/// 8 whose coordinates record the C^, P^ and T^ content.
struct GAModel {
  GroupPtr bits;   // triple-labeled Z2^3
  GroupPtr group;  // the same group under operator labels
};

inline GAModel g_a_model() {
  GAModel m;
  m.bits = z2_cubed_group();
  m.group = detail::relabel_by_dictionary(m.bits, fixtures::eq5_dictionary_corrected());
  return m;
}

/// A transformation of the vector potential: an overall sign, an index
/// lowering by the metric, and reflections of the spatial and time
/// arguments.  All four ingredients are involutive and commute, so
/// composition multiplies signs and toggles flags.
struct FieldTransform {
  int sign = 1;
  bool lower_index = false;
  bool space_flip = false;
  bool time_flip = false;

  friend bool operator==(const FieldTransform&, const FieldTransform&) = default;

  friend FieldTransform operator*(const FieldTransform& a, const FieldTransform& b) {
    return {a.sign * b.sign, a.lower_index != b.lower_index, a.space_flip != b.space_flip,
            a.time_flip != b.time_flip};
  }
};

/// A^mu(x) -> -A^mu(x).
inline FieldTransform field_charge_conjugation() { return {-1, false, false, false}; }
/// A^mu(x) -> A_mu(x_P): lower the index, reflect the spatial argument.
inline FieldTransform field_parity() { return {1, true, true, false}; }
/// A^mu(x) -> A_mu(x_T): lower the index, reflect the time argument.
inline FieldTransform field_time_reversal() { return {1, true, false, true}; }

/// Operator label of a transform in the closure of C^, P^, T^; in that
/// closure the index lowering always equals space_flip XOR time_flip.
inline std::string field_label(const FieldTransform& t) {
  if (t.lower_index != (t.space_flip != t.time_flip))
    throw std::invalid_argument("field_label: transform outside the C,P,T closure");
  const bool c = t.sign < 0;
  if (!c && !t.space_flip && !t.time_flip) return "I^";
  if (c && !t.space_flip && !t.time_flip) return "C^";
  if (!c && t.space_flip && !t.time_flip) return "P^";
  if (!c && !t.space_flip && t.time_flip) return "T^";
  if (!c && t.space_flip && t.time_flip) return "P^*T^";
  if (c && t.space_flip && !t.time_flip) return "C^*P^";
  if (c && !t.space_flip && t.time_flip) return "C^*T^";
  return "Theta^";
}

/// Closure of the three field transformations under composition.
inline GroupPtr field_action_group() {
  std::vector<FieldTransform> seeds{field_charge_conjugation(), field_parity(),
                                    field_time_reversal()};
  return generate_group(
      seeds, [](const FieldTransform& a, const FieldTransform& b) { return a * b; },
      [](const FieldTransform& a, const FieldTransform& b) { return a == b; },
      [](const FieldTransform& t) { return field_label(t); });
}

/// Label-preserving isomorphism from the field-transform closure onto
/// the abstract gauge-potential group; throws if the labels do not
/// define one.
inline GroupHom field_action_iso(const GroupPtr& field, const GroupPtr& g_a) {
  GroupHom hom{field, g_a, {}};
  hom.map.reserve(field->order());
  for (ElementId x = 0; x < field->order(); ++x) hom.map.push_back(g_a->require(field->label(x)));
  if (!verify_hom(hom).violations.empty() || !hom.is_bijective())
    throw std::logic_error("field_action_iso: labels do not define an isomorphism");
  return hom;
}

/// The equation-level CPT group D4 x| Z2, with -1 acting on D4 by the
/// outer automorphism that swaps the two reflection classes.
struct PsiEqModel {
  GroupPtr d4;
  GroupPtr signs;
  GroupPtr pairs;  // pair-labeled semidirect product
  GroupPtr group;  // the same group under operator labels
};

inline PsiEqModel psi_eq_model() {
  PsiEqModel m;
  m.d4 = d4_group();
  m.signs = z2_signs_group();

  std::vector<std::vector<ElementId>> table(m.signs->order(),
                                            std::vector<ElementId>(m.d4->order()));
  for (ElementId x = 0; x < m.d4->order(); ++x) table[m.signs->identity()][x] = x;
  const ElementId minus = m.signs->require("-1");
  for (const auto& row : fixtures::eq17_lambda_action())
    table[minus][m.d4->require(row.from)] = m.d4->require(row.to);
  m.pairs = semidirect_product(m.d4, m.signs, ActionTable(m.signs, m.d4, std::move(table)));

  std::map<std::string, std::string> perm_of_token;
  for (const auto& row : fixtures::eq25_dictionary()) perm_of_token[row.to] = row.from;
  std::vector<fixtures::LabelPair> dictionary;
  for (const auto& row : fixtures::eq22_dictionary())
    dictionary.push_back({row.label, "(" + perm_of_token.at(row.d4_token) + "," +
                                         (row.sign > 0 ? "1" : "-1") + ")"});
  m.group = detail::relabel_by_dictionary(m.pairs, dictionary);
  return m;
}

/// The full CPT group of quantum electrodynamics.
struct QedModel {
  PsiHatModel psi_hat;
  GAModel g_a;
  DirectProduct product;  // G_psi_hat x G_A
  GroupPtr group;
};

inline QedModel qed_model() {
  QedModel m;
  m.psi_hat = psi_hat_model();
  m.g_a = g_a_model();
  m.product = direct_product(m.psi_hat.group, m.g_a.group);
  m.group = m.product.group;
  return m;
}

/// The five irreducibles of the quaternion group: the trivial
/// character, the three sign characters killing one of iota, gamma,
/// kappa, and the 2-dimensional representation by Pauli-like matrices.
inline std::vector<Representation> quaternion_irreps(const GroupPtr& q) {
  auto unit_part = [](const std::string& label) {
    return label.front() == '-' ? label.substr(1) : label;
  };
  auto sign_rep = [&](std::map<std::string, int> on_unit, std::string name) {
    std::vector<CMatrix> mats;
    mats.reserve(q->order());
    for (ElementId x = 0; x < q->order(); ++x)
      mats.push_back(detail::scalar_matrix(Cyclotomic(on_unit.at(unit_part(q->label(x))))));
    return Representation(q, std::move(mats), std::move(name));
  };

  std::vector<Representation> out;
  out.push_back(sign_rep({{"1", 1}, {"iota", 1}, {"gamma", 1}, {"kappa", 1}}, "chi_1"));
  out.push_back(sign_rep({{"1", 1}, {"iota", 1}, {"gamma", -1}, {"kappa", -1}}, "chi_2"));
  out.push_back(sign_rep({{"1", 1}, {"iota", -1}, {"gamma", 1}, {"kappa", -1}}, "chi_3"));
  out.push_back(sign_rep({{"1", 1}, {"iota", -1}, {"gamma", -1}, {"kappa", 1}}, "chi_4"));

  const Cyclotomic i = Cyclotomic::i(), zero, one(1), minus_one(-1);
  std::map<std::string, CMatrix> on_unit{{"1", CMatrix::identity(2)},
                                         {"iota", CMatrix{{i, zero}, {zero, -i}}},
                                         {"gamma", CMatrix{{zero, one}, {minus_one, zero}}}};
  on_unit.emplace("kappa", on_unit.at("iota") * on_unit.at("gamma"));
  std::vector<CMatrix> mats;
  mats.reserve(q->order());
  for (ElementId x = 0; x < q->order(); ++x) {
    const std::string& label = q->label(x);
    CMatrix m = on_unit.at(unit_part(label));
    if (label.front() == '-') m = minus_one * m;
    mats.push_back(std::move(m));
  }
  out.push_back(Representation(q, std::move(mats), "chi_5"));
  return out;
}

/// The two characters of Z2, for either labeling convention.
inline std::vector<Representation> z2_irreps(const GroupPtr& z2) {
  if (z2->order() != 2) throw std::invalid_argument("z2_irreps: group of order 2 required");
  std::vector<CMatrix> trivial(2, CMatrix::identity(1));
  std::vector<CMatrix> sign(2, CMatrix::identity(1));
  sign[1 - z2->identity()] = detail::scalar_matrix(Cyclotomic(-1));
  return {Representation(z2, std::move(trivial), "psi_1"),
          Representation(z2, std::move(sign), "psi_2")};
}

/// All ten irreducibles of the spinor-field group as tensor products
/// chi x psi, numbered with the Z2 factor varying fastest:
/// phi_1 = chi_1 x psi_1, phi_2 = chi_1 x psi_2, phi_3 = chi_2 x psi_1,
/// and so on up to phi_10 = chi_5 x psi_2.
inline std::vector<Representation> irreps_g_psi_hat(const PsiHatModel& m) {
  auto chi = quaternion_irreps(m.quaternion);
  auto psi = z2_irreps(m.z2);
  std::vector<Representation> out;
  out.reserve(10);
  for (const auto& a : chi)
    for (const auto& b : psi) {
      Representation on_pairs = tensor_product_rep(m.product, a, b);
      std::vector<CMatrix> mats;
      mats.reserve(m.group->order());
      for (ElementId x = 0; x < m.group->order(); ++x) mats.push_back(on_pairs.at(x));
      out.push_back(Representation(m.group, std::move(mats),
                                   "phi_" + std::to_string(out.size() + 1)));
    }
  return out;
}

/// The eight characters of the gauge-potential group.  Phi_(s1 s2 s3)
/// multiplies a factor -1 for every coordinate that is nontrivial in
/// both the subscript (s_j = 2) and the group element; the printed
/// numbering orders the subscripts 111, 211, 121, 112, 221, 212, 122,
/// 222.
inline std::vector<Representation> irreps_g_a(const GAModel& m) {
  static constexpr int subscripts[8][3] = {{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2},
                                           {2, 2, 1}, {2, 1, 2}, {1, 2, 2}, {2, 2, 2}};
  std::vector<Representation> out;
  out.reserve(8);
  for (std::size_t r = 0; r < 8; ++r) {
    std::vector<CMatrix> mats;
    mats.reserve(m.group->order());
    for (ElementId x = 0; x < m.group->order(); ++x) {
      const std::string& triple = m.bits->label(x);  // "(x,y,z)", coordinates at 1, 3, 5
      int v = 1;
      for (int j = 0; j < 3; ++j)
        if (subscripts[r][j] == 2 && triple[1 + 2 * j] == 'a') v = -v;
      mats.push_back(detail::scalar_matrix(Cyclotomic(v)));
    }
    out.push_back(Representation(m.group, std::move(mats), "Phi_" + std::to_string(r + 1)));
  }
  return out;
}

/// All ten irreducibles of the equation-level group: the trivial
/// character, three sign characters pulled back from the index-2
/// quotients, the two 2-dimensional representations extending the
/// 2-dimensional representation of D4, and the remaining four sign
/// characters recovered by orthogonality.  The completed four are
/// numbered by their values at C and T: phi_5 = (-1,-1), phi_6 =
/// (-1,+1), phi_7 = (+1,-1), phi_8 = (+1,+1).
inline std::vector<Representation> irreps_g_psi_eq(const PsiEqModel& m) {
  const GroupPtr& g = m.group;
  const std::size_t n = g->order();
  auto classes = conjugacy_classes(*g);
  auto cmap = class_index_map(*g, classes);

  auto trivial = Representation(g, std::vector<CMatrix>(n, CMatrix::identity(1)), "phi_1");

  // Sign characters of the three index-2 invariant subgroups.
  auto quotient_sign = [&](const std::string& gen_a, const std::string& gen_b,
                           std::string name) {
    auto sub = subgroup_closure(*g, {g->require(gen_a), g->require(gen_b)});
    Quotient q = quotient_group(g, sub);
    if (q.group->order() != 2)
      throw std::logic_error("irreps_g_psi_eq: expected an index-2 subgroup");
    std::vector<CMatrix> on_quotient(2, CMatrix::identity(1));
    on_quotient[1 - q.group->identity()] = detail::scalar_matrix(Cyclotomic(-1));
    return pullback_rep(Representation(q.group, std::move(on_quotient)), q.projection,
                        std::move(name));
  };
  auto phi_2 = quotient_sign("P", "CT", "phi_2");
  auto phi_3 = quotient_sign("P", "T", "phi_3");
  auto phi_4 = quotient_sign("C", "P", "phi_4");

  // The 2-dimensional pair: matrices M(d) on the D4 part, times N on
  // the nontrivial sign, where N = M((14)(23)) rho(C) for the printed
  // choice of rho(C).
  std::map<std::string, CMatrix> d4_matrix;
  for (const auto& [perm, mat] : fixtures::eq27_d4_matrices())
    d4_matrix.emplace(perm, fixtures::matrix_of(mat));
  const std::size_t nh = m.signs->order();
  const ElementId plus = m.signs->identity();
  auto two_dim = [&](const std::vector<std::pair<std::string, fixtures::PrintedMatrix>>& choice,
                     std::string name) {
    CMatrix rho_c;
    for (const auto& [label, mat] : choice)
      if (label == "C") rho_c = fixtures::matrix_of(mat);
    CMatrix n_mat = d4_matrix.at("(14)(23)") * rho_c;
    std::vector<CMatrix> mats;
    mats.reserve(n);
    for (ElementId x = 0; x < n; ++x) {
      const CMatrix& md = d4_matrix.at(m.d4->label(x / nh));
      mats.push_back(x % nh == plus ? md : md * n_mat);
    }
    return Representation(g, std::move(mats), std::move(name));
  };
  auto phi_9 = two_dim(fixtures::eq28_phi9_choice(), "phi_9");
  auto phi_10 = two_dim(fixtures::eq29_phi10_choice(), "phi_10");

  // The last four sign characters are the unique completion of the
  // six known rows.
  std::vector<CharacterTable::Row> known;
  for (const Representation* r : {&trivial, &phi_2, &phi_3, &phi_4, &phi_9, &phi_10})
    known.push_back({r->name(), character_of(*r), RowProvenance::constructive});
  CharacterTable completed =
      complete_by_orthogonality(CharacterTable(g, classes, std::move(known)));

  std::vector<std::vector<Cyclotomic>> found;
  for (const auto& row : completed.rows())
    if (row.provenance == RowProvenance::orthogonality_completion)
      found.push_back(row.character.values());
  if (found.size() != 4)
    throw std::logic_error("irreps_g_psi_eq: expected four completed characters");
  const std::size_t at_c = cmap[g->require("C")], at_t = cmap[g->require("T")];
  std::sort(found.begin(), found.end(),
            [&](const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
              auto key = [&](const std::vector<Cyclotomic>& v) {
                return std::make_pair(v[at_c].to_rational(), v[at_t].to_rational());
              };
              return key(a) < key(b);
            });

  std::vector<Representation> out{trivial, phi_2, phi_3, phi_4};
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<CMatrix> mats;
    mats.reserve(n);
    for (ElementId x = 0; x < n; ++x)
      mats.push_back(detail::scalar_matrix(found[k][cmap[x]]));
    out.push_back(Representation(g, std::move(mats), "phi_" + std::to_string(k + 5)));
  }
  out.push_back(phi_9);
  out.push_back(phi_10);
  return out;
}

/// All eighty irreducibles of the full group as tensor products
/// phi_a x Phi_b, the potential factor varying fastest.
inline std::vector<Representation> irreps_qed(const QedModel& m) {
  auto left = irreps_g_psi_hat(m.psi_hat);
  auto right = irreps_g_a(m.g_a);
  std::vector<Representation> out;
  out.reserve(left.size() * right.size());
  for (const auto& a : left)
    for (const auto& b : right)
      out.push_back(tensor_product_rep(m.product, a, b, a.name() + "(x)" + b.name()));
  return out;
}

}  // namespace cptrep::cpt
