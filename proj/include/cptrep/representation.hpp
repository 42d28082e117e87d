#pragma once

/// \file representation.hpp
/// Matrix representations of finite groups over cyclotomic numbers,
/// their characters, and the standard constructions: tensor products
/// over direct products, pullbacks along quotient projections, and
/// restrictions along embeddings.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmatrix.hpp"
#include "finite_group.hpp"
#include "products.hpp"

namespace cptrep {

/// Same group object or structurally identical copy.
inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && *a == *b);
}

class Representation {
public:
  /// One matrix per element; the homomorphism law is verified over all
  /// pairs on construction.
  Representation(GroupPtr group, std::vector<CMatrix> matrices, std::string name = "")
      : group_(std::move(group)), matrices_(std::move(matrices)), name_(std::move(name)) {
    const FiniteGroup& g = *group_;
    if (matrices_.size() != g.order())
      throw std::invalid_argument("Representation: one matrix per element required");
    dim_ = matrices_.empty() ? 0 : matrices_[0].rows();
    if (dim_ == 0) throw std::invalid_argument("Representation: dimension must be positive");
    for (const CMatrix& m : matrices_)
      if (m.rows() != dim_ || m.cols() != dim_)
        throw std::invalid_argument("Representation: inconsistent matrix shapes");
    if (!(matrices_[g.identity()] == CMatrix::identity(dim_)))
      throw std::invalid_argument("Representation: identity element must map to the identity matrix");
    for (ElementId a = 0; a < g.order(); ++a)
      for (ElementId b = 0; b < g.order(); ++b)
        if (!(matrices_[g.mul(a, b)] == matrices_[a] * matrices_[b]))
          throw std::invalid_argument("Representation: homomorphism law fails at (" +
                                      g.label(a) + "," + g.label(b) + ")");
  }

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const CMatrix& at(ElementId x) const { return matrices_[x]; }

  Representation renamed(std::string name) const {
    Representation r = *this;
    r.name_ = std::move(name);
    return r;
  }

private:
  GroupPtr group_;
  std::size_t dim_;
  std::vector<CMatrix> matrices_;
  std::string name_;
};

class Character {
public:
  /// values follow the conjugacy-class order the caller computed; the
  /// canonical choice is conjugacy_classes(group).
  Character(GroupPtr group, std::vector<Cyclotomic> values)
      : group_(std::move(group)), values_(std::move(values)) {}

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& at(std::size_t class_index) const { return values_[class_index]; }
  std::size_t class_count() const { return values_.size(); }

  friend bool operator==(const Character& a, const Character& b) {
    return same_group(a.group_, b.group_) && a.values_ == b.values_;
  }

  friend Character operator+(const Character& a, const Character& b) {
    if (!same_group(a.group_, b.group_) || a.values_.size() != b.values_.size())
      throw std::invalid_argument("Character: group mismatch in sum");
    std::vector<Cyclotomic> v = a.values_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
    return Character(a.group_, std::move(v));
  }

private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// Trace at one representative per class, in conjugacy_classes order.
inline Character character_of(const Representation& rep) {
  auto classes = conjugacy_classes(*rep.group());
  std::vector<Cyclotomic> values;
  values.reserve(classes.size());
  for (const auto& c : classes) values.push_back(trace(rep.at(c.representative)));
  return Character(rep.group(), std::move(values));
}

/// (1/|G|) sum over classes of |C| a(C) conj(b(C)), exact.
inline Cyclotomic char_inner_product(const Character& a, const Character& b) {
  if (!same_group(a.group(), b.group()))
    throw std::invalid_argument("char_inner_product: different groups");
  auto classes = conjugacy_classes(*a.group());
  if (a.class_count() != classes.size() || b.class_count() != classes.size())
    throw std::invalid_argument("char_inner_product: class count mismatch");
  Cyclotomic sum;
  for (std::size_t j = 0; j < classes.size(); ++j)
    sum += Cyclotomic(static_cast<long long>(classes[j].size())) * a.at(j) * b.at(j).conj();
  return sum * Cyclotomic(Rational(Int(1), Int(a.group()->order())));
}

inline bool is_irreducible(const Representation& rep) {
  Character chi = character_of(rep);
  return char_inner_product(chi, chi).is_one();
}

/// Character equality decides equivalence over characteristic zero.
inline bool are_equivalent(const Representation& a, const Representation& b) {
  if (!same_group(a.group(), b.group()))
    throw std::invalid_argument("are_equivalent: different groups");
  return character_of(a) == character_of(b);
}

/// Kronecker-product representation of a direct product group.
inline Representation tensor_product_rep(const DirectProduct& product, const Representation& a,
                                         const Representation& b, std::string name = "") {
  if (!same_group(a.group(), product.proj_left.target) ||
      !same_group(b.group(), product.proj_right.target))
    throw std::invalid_argument("tensor_product_rep: factors do not match the product");
  const FiniteGroup& g = *product.group;
  std::vector<CMatrix> mats;
  mats.reserve(g.order());
  for (ElementId x = 0; x < g.order(); ++x)
    mats.push_back(kron(a.at(product.proj_left(x)), b.at(product.proj_right(x))));
  return Representation(product.group, std::move(mats), std::move(name));
}

/// Composition with a surjection G -> G/H; kernel elements land on the
/// identity matrix.
inline Representation pullback_rep(const Representation& rep, const GroupHom& projection,
                                   std::string name = "") {
  if (!same_group(projection.target, rep.group()))
    throw std::invalid_argument("pullback_rep: projection target mismatch");
  if (!projection.is_surjective())
    throw std::invalid_argument("pullback_rep: projection must be surjective");
  const FiniteGroup& g = *projection.source;
  std::vector<CMatrix> mats;
  mats.reserve(g.order());
  for (ElementId x = 0; x < g.order(); ++x) mats.push_back(rep.at(projection(x)));
  return Representation(projection.source, std::move(mats), std::move(name));
}

/// Composition with an injection H -> G.
inline Representation restrict_rep(const Representation& rep, const GroupHom& embedding,
                                   std::string name = "") {
  if (!same_group(embedding.target, rep.group()))
    throw std::invalid_argument("restrict_rep: embedding target mismatch");
  if (!embedding.is_injective())
    throw std::invalid_argument("restrict_rep: embedding must be injective");
  const FiniteGroup& h = *embedding.source;
  std::vector<CMatrix> mats;
  mats.reserve(h.order());
  for (ElementId x = 0; x < h.order(); ++x) mats.push_back(rep.at(embedding(x)));
  return Representation(embedding.source, std::move(mats), std::move(name));
}

/// Block-diagonal sum of representations of one group.
inline Representation direct_sum(const Representation& a, const Representation& b,
                                 std::string name = "") {
  if (!same_group(a.group(), b.group()))
    throw std::invalid_argument("direct_sum: different groups");
  const FiniteGroup& g = *a.group();
  std::vector<CMatrix> mats;
  mats.reserve(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    CMatrix m(a.dim() + b.dim(), a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m.at(i, j) = a.at(x).at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j)
        m.at(a.dim() + i, a.dim() + j) = b.at(x).at(i, j);
    mats.push_back(std::move(m));
  }
  return Representation(a.group(), std::move(mats), std::move(name));
}

}  // namespace cptrep
