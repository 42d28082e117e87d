#pragma once

/// \file character_table.hpp
/// Complete character tables of finite groups, computed two independent
/// ways: from explicit irreducible representations, and by Dixon's
/// class-algebra method working modulo a recorded prime. Every table
/// verifies the orthogonality relations exactly on construction.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "finite_group.hpp"
#include "representation.hpp"

namespace cptrep {

enum class RowProvenance { constructive, dixon, orthogonality_completion, transcribed };

inline std::string to_string(RowProvenance p) {
  switch (p) {
    case RowProvenance::constructive: return "constructive";
    case RowProvenance::dixon: return "dixon";
    case RowProvenance::orthogonality_completion: return "orthogonality-completion";
    case RowProvenance::transcribed: return "transcribed";
  }
  throw std::logic_error("to_string: unknown provenance");
}

namespace detail {

/// (1/|G|) sum over columns of |C_j| x_j conj(y_j) for value vectors in
/// the given class order.
inline Cyclotomic class_inner(const std::vector<ConjugacyClass>& classes, std::size_t group_order,
                              const std::vector<Cyclotomic>& x, const std::vector<Cyclotomic>& y) {
  Cyclotomic sum;
  for (std::size_t j = 0; j < classes.size(); ++j)
    sum += Cyclotomic(static_cast<long long>(classes[j].size())) * x[j] * y[j].conj();
  return sum * Cyclotomic(Rational(Int(1), Int(group_order)));
}

}  // namespace detail

/// A (possibly partial) character table. The column order is the table's
/// own `classes` sequence, which must be a reordering of the group's
/// conjugacy classes; row values are read in that column order.
class CharacterTable {
public:
  struct Row {
    std::string name;
    Character character;
    RowProvenance provenance;
  };

  CharacterTable(GroupPtr group, std::vector<ConjugacyClass> classes, std::vector<Row> rows,
                 std::optional<unsigned> dixon_prime = std::nullopt)
      : group_(std::move(group)),
        classes_(std::move(classes)),
        rows_(std::move(rows)),
        dixon_prime_(dixon_prime) {
    validate();
  }

  const GroupPtr& group() const { return group_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::optional<unsigned> dixon_prime() const { return dixon_prime_; }
  bool is_complete() const { return rows_.size() == classes_.size(); }

  const Cyclotomic& value(std::size_t row, std::size_t col) const {
    return rows_.at(row).character.values().at(col);
  }

  /// Index of the column whose class contains the group identity.
  std::size_t identity_column() const {
    for (std::size_t j = 0; j < classes_.size(); ++j)
      if (classes_[j].representative == group_->identity()) return j;
    throw std::logic_error("CharacterTable: no identity column");
  }

  /// Degree of the row's character, the value at the identity column.
  long long dimension(std::size_t row) const {
    Int d = value(row, identity_column()).to_rational().to_integer();
    return static_cast<long long>(d);
  }

private:
  void validate() const {
    if (!group_) throw std::invalid_argument("CharacterTable: null group");
    const std::size_t n = group_->order();
    const std::size_t r = classes_.size();
    if (rows_.size() > r) throw std::invalid_argument("CharacterTable: more rows than classes");

    auto canonical = conjugacy_classes(*group_);
    if (canonical.size() != r)
      throw std::invalid_argument("CharacterTable: class count does not match the group");
    std::vector<std::vector<ElementId>> want, have;
    for (const auto& c : canonical) want.push_back(c.members);
    for (const auto& c : classes_) have.push_back(c.members);
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have)
      throw std::invalid_argument("CharacterTable: classes are not the group's conjugacy classes");

    const std::size_t idc = identity_column();
    for (const Row& row : rows_) {
      if (!same_group(row.character.group(), group_))
        throw std::invalid_argument("CharacterTable: row belongs to a different group");
      if (row.character.class_count() != r)
        throw std::invalid_argument("CharacterTable: row length does not match class count");
      const Cyclotomic& d = row.character.at(idc);
      if (!d.is_rational() || !d.to_rational().is_integer() || d.to_rational().sign() <= 0)
        throw std::invalid_argument("CharacterTable: row degree must be a positive integer");
    }

    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = i; j < rows_.size(); ++j) {
        Cyclotomic ip = detail::class_inner(classes_, n, rows_[i].character.values(),
                                            rows_[j].character.values());
        bool want_one = (i == j);
        if ((want_one && !ip.is_one()) || (!want_one && !ip.is_zero()))
          throw std::invalid_argument("CharacterTable: rows " + rows_[i].name + " and " +
                                      rows_[j].name + " violate row orthogonality");
      }

    if (!is_complete()) return;

    Rational dim_sum;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Rational d = rows_[i].character.at(idc).to_rational();
      dim_sum += d * d;
    }
    if (!(dim_sum == Rational(Int(n))))
      throw std::invalid_argument("CharacterTable: squared degrees do not sum to the group order");

    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t l = k; l < r; ++l) {
        Cyclotomic sum;
        for (std::size_t i = 0; i < rows_.size(); ++i)
          sum += value(i, k) * value(i, l).conj();
        Cyclotomic want = (k == l)
                              ? Cyclotomic(Rational(Int(n), Int(classes_[k].size())))
                              : Cyclotomic();
        if (!(sum == want))
          throw std::invalid_argument("CharacterTable: columns " + std::to_string(k) + " and " +
                                      std::to_string(l) + " violate column orthogonality");
      }
  }

  GroupPtr group_;
  std::vector<ConjugacyClass> classes_;
  std::vector<Row> rows_;
  std::optional<unsigned> dixon_prime_;
};

namespace detail {

// Arithmetic in F_p for p < 2^31, so products stay inside long long.

inline long long mod_pow(long long base, long long exp, long long p) {
  long long result = 1 % p;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

inline long long mod_inv(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::logic_error("mod_inv: zero is not invertible");
  return mod_pow(a, p - 2, p);
}

using ModRow = std::vector<long long>;
using ModMatrix = std::vector<ModRow>;

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref_mod(ModMatrix& m, long long p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] % p == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    long long inv = mod_inv(m[row][col], p);
    for (std::size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] % p == 0) continue;
      long long f = m[i][col] % p;
      for (std::size_t j = col; j < cols; ++j) {
        m[i][j] = (m[i][j] - f * m[row][j]) % p;
        if (m[i][j] < 0) m[i][j] += p;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(pivots.size());
  return pivots;
}

/// Basis of the right null space of a square matrix over F_p, in reduced
/// echelon form for determinism.
inline ModMatrix kernel_mod(ModMatrix m, long long p) {
  const std::size_t d = m.size();
  std::vector<std::size_t> pivots = rref_mod(m, p);
  std::vector<bool> is_pivot(d, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  ModMatrix basis;
  for (std::size_t f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    ModRow v(d, 0);
    v[f] = 1;
    for (std::size_t rrow = 0; rrow < pivots.size(); ++rrow) {
      long long val = (p - m[rrow][f] % p) % p;
      v[pivots[rrow]] = val;
    }
    basis.push_back(std::move(v));
  }
  rref_mod(basis, p);
  return basis;
}

/// Smallest prime exceeding 2 sqrt(n) that is 1 mod the group exponent.
inline long long dixon_prime_for(std::size_t group_order, std::size_t exponent) {
  auto is_prime = [](long long x) {
    if (x < 2) return false;
    for (long long d = 2; d * d <= x; ++d)
      if (x % d == 0) return false;
    return true;
  };
  const long long n = static_cast<long long>(group_order);
  for (long long p = static_cast<long long>(exponent) + 1;; p += static_cast<long long>(exponent)) {
    if (p > 1 && is_prime(p) && p * p > 4 * n) return p;
    if (p > (1LL << 30)) throw std::logic_error("dixon_prime_for: no prime found");
  }
}

struct ModSubspace {
  ModMatrix basis;               // reduced echelon rows spanning the space
  std::vector<std::size_t> pivots;
};

/// Splits each invariant subspace into eigenspaces of the commuting
/// matrix `a` until nothing new appears.
inline std::vector<ModSubspace> split_by(const std::vector<ModSubspace>& spaces, const ModMatrix& a,
                                         long long p) {
  const std::size_t r = a.size();
  std::vector<ModSubspace> out;
  for (const ModSubspace& s : spaces) {
    const std::size_t d = s.basis.size();
    if (d == 1) {
      out.push_back(s);
      continue;
    }
    // Matrix of the action restricted to the subspace: column t holds the
    // coordinates of a * basis[t], read off the pivot columns of the
    // echelon basis.
    ModMatrix restricted(d, ModRow(d, 0));
    for (std::size_t t = 0; t < d; ++t) {
      ModRow image(r, 0);
      for (std::size_t j = 0; j < r; ++j) {
        long long acc = 0;
        for (std::size_t k = 0; k < r; ++k) acc = (acc + a[j][k] * s.basis[t][k]) % p;
        image[j] = acc;
      }
      ModRow coords(d);
      for (std::size_t u = 0; u < d; ++u) coords[u] = image[s.pivots[u]];
      ModRow check(r, 0);
      for (std::size_t u = 0; u < d; ++u)
        for (std::size_t k = 0; k < r; ++k)
          check[k] = (check[k] + coords[u] * s.basis[u][k]) % p;
      if (check != image) throw std::logic_error("split_by: subspace is not invariant");
      for (std::size_t u = 0; u < d; ++u) restricted[u][t] = coords[u];
    }
    std::vector<ModSubspace> pieces;
    for (long long lambda = 0; lambda < p; ++lambda) {
      ModMatrix shifted = restricted;
      for (std::size_t t = 0; t < d; ++t) shifted[t][t] = ((shifted[t][t] - lambda) % p + p) % p;
      ModMatrix null_basis = kernel_mod(std::move(shifted), p);
      if (null_basis.empty()) continue;
      ModMatrix lifted;
      for (const ModRow& coeff : null_basis) {
        ModRow w(r, 0);
        for (std::size_t u = 0; u < d; ++u)
          for (std::size_t k = 0; k < r; ++k) w[k] = (w[k] + coeff[u] * s.basis[u][k]) % p;
        lifted.push_back(std::move(w));
      }
      ModSubspace piece;
      piece.pivots = rref_mod(lifted, p);
      piece.basis = std::move(lifted);
      pieces.push_back(std::move(piece));
    }
    std::size_t total = 0;
    for (const auto& piece : pieces) total += piece.basis.size();
    if (total != d) throw std::logic_error("split_by: eigenspace dimensions do not add up");
    for (auto& piece : pieces) out.push_back(std::move(piece));
  }
  return out;
}

}  // namespace detail

/// Computes the full character table by Dixon's method: common
/// eigenvectors of the class-algebra multiplication matrices over F_p,
/// degrees from the second orthogonality relation, and exact character
/// values lifted through eigenvalue multiplicities. The prime is recorded
/// on the returned table. Rows are sorted by degree, then
/// lexicographically on their values.
inline CharacterTable character_table(const GroupPtr& group) {
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  auto classes = conjugacy_classes(g);
  const std::size_t r = classes.size();
  auto cmap = class_index_map(g);

  std::size_t exponent = 1;
  for (const auto& c : classes)
    exponent = std::lcm(exponent, element_order(g, c.representative));
  const long long p = detail::dixon_prime_for(n, exponent);

  std::size_t idc = r;
  std::vector<std::size_t> inverse_class(r);
  for (std::size_t k = 0; k < r; ++k) {
    inverse_class[k] = cmap[g.inv(classes[k].representative)];
    if (classes[k].representative == g.identity()) idc = k;
  }

  // Class-algebra structure constants: a[i][j][k] counts x in C_i with
  // x^-1 z_k in C_j, i.e. pairs (x, y) in C_i x C_j with x y = z_k.
  std::vector<detail::ModMatrix> action(r, detail::ModMatrix(r, detail::ModRow(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (ElementId x : classes[i].members) {
        ElementId y = g.mul(g.inv(x), classes[k].representative);
        ++action[i][cmap[y]][k];
      }

  std::vector<detail::ModSubspace> spaces(1);
  spaces[0].basis.assign(r, detail::ModRow(r, 0));
  spaces[0].pivots.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    spaces[0].basis[k][k] = 1;
    spaces[0].pivots[k] = k;
  }
  for (std::size_t i = 0; i < r && spaces.size() < r; ++i)
    spaces = detail::split_by(spaces, action[i], p);
  if (spaces.size() != r)
    throw std::logic_error("character_table: class algebra did not split into lines");

  // Each line holds the class-sum eigenvalue vector of one character,
  // normalised so the identity class entry is 1.
  std::vector<long long> class_size_inv(r);
  for (std::size_t k = 0; k < r; ++k)
    class_size_inv[k] = detail::mod_inv(static_cast<long long>(classes[k].size()), p);

  const long long m = static_cast<long long>(exponent);
  long long root = 0;
  for (long long c = 2; c < p; ++c) {
    bool primitive = detail::mod_pow(c, m, p) == 1;
    for (long long d = 1; primitive && d < m; ++d)
      if (m % d == 0 && detail::mod_pow(c, d, p) == 1) primitive = false;
    if (primitive) {
      root = c;
      break;
    }
  }
  if (root == 0 && m > 1) throw std::logic_error("character_table: no element of full order mod p");

  std::vector<CharacterTable::Row> rows;
  for (const detail::ModSubspace& line : spaces) {
    const detail::ModRow& w = line.basis.at(0);
    if (w[idc] == 0) throw std::logic_error("character_table: eigenvector vanishes at the identity");
    long long scale = detail::mod_inv(w[idc], p);
    detail::ModRow omega(r);
    for (std::size_t k = 0; k < r; ++k) omega[k] = w[k] * scale % p;

    long long t = 0;
    for (std::size_t k = 0; k < r; ++k)
      t = (t + omega[k] * omega[inverse_class[k]] % p * class_size_inv[k]) % p;
    long long dd = static_cast<long long>(n) % p * detail::mod_inv(t, p) % p;
    long long degree = 0;
    for (long long d = 1; 2 * d < p; ++d)
      if (d * d % p == dd) {
        degree = d;
        break;
      }
    if (degree == 0) throw std::logic_error("character_table: no degree below p/2 squares to n/t");

    detail::ModRow chi_mod(r);
    for (std::size_t k = 0; k < r; ++k)
      chi_mod[k] = degree % p * omega[k] % p * class_size_inv[k] % p;

    // Lift each value through the multiplicities of the exponent-th roots
    // of unity among the eigenvalues of the representing matrix.
    const long long m_inv = detail::mod_inv(m, p);
    std::vector<Cyclotomic> values(r);
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<std::size_t> power_class(exponent);
      ElementId cur = g.identity();
      for (std::size_t j = 0; j < exponent; ++j) {
        power_class[j] = cmap[cur];
        cur = g.mul(cur, classes[k].representative);
      }
      Cyclotomic value;
      long long total = 0;
      for (long long tt = 0; tt < m; ++tt) {
        long long acc = 0;
        for (long long j = 0; j < m; ++j) {
          long long phase = detail::mod_pow(root, (m - tt % m) * j % m, p);
          acc = (acc + chi_mod[power_class[static_cast<std::size_t>(j)]] * phase) % p;
        }
        long long mult = acc * m_inv % p;
        total += mult;
        if (mult != 0)
          value += Cyclotomic(mult) * Cyclotomic::root_of_unity(static_cast<unsigned>(exponent),
                                                                static_cast<unsigned>(tt));
      }
      if (total != degree)
        throw std::logic_error("character_table: eigenvalue multiplicities do not sum to the degree");
      values[k] = value;
    }
    rows.push_back({"", Character(group, std::move(values)), RowProvenance::dixon});
  }

  std::sort(rows.begin(), rows.end(),
            [&](const CharacterTable::Row& a, const CharacterTable::Row& b) {
              const Cyclotomic& da = a.character.at(idc);
              const Cyclotomic& db = b.character.at(idc);
              if (!(da == db)) return da < db;
              return a.character.values() < b.character.values();
            });
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].name = "chi_" + std::to_string(i + 1);

  return CharacterTable(group, std::move(classes), std::move(rows),
                        static_cast<unsigned>(p));
}

/// Builds the table directly from a supposed-complete list of irreducible
/// representations, in the given order; construction fails if the list is
/// not a full set of pairwise inequivalent irreducibles.
inline CharacterTable constructive_table(const GroupPtr& group,
                                         const std::vector<Representation>& irreps) {
  auto classes = conjugacy_classes(*group);
  std::vector<CharacterTable::Row> rows;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    if (!same_group(irreps[i].group(), group))
      throw std::invalid_argument("constructive_table: representation of a different group");
    std::string name = irreps[i].name().empty() ? "chi_" + std::to_string(i + 1) : irreps[i].name();
    rows.push_back({std::move(name), character_of(irreps[i]), RowProvenance::constructive});
  }
  if (rows.size() != classes.size())
    throw std::invalid_argument("constructive_table: need exactly one representation per class");
  return CharacterTable(group, std::move(classes), std::move(rows));
}

/// Fills in the missing rows of a partial table, provided they are all
/// one-dimensional, as the unique set of sign characters (multiplicative
/// ±1 class functions) orthogonal to the known rows and to each other.
/// Orthogonality alone can be satisfied by sign patterns that are not
/// characters of anything, so candidates must also respect the product
/// law; with that restriction the completion is unique whenever it
/// exists. Throws if no (or more than one) completion is found.
inline CharacterTable complete_by_orthogonality(const CharacterTable& partial) {
  if (partial.is_complete()) return partial;
  const std::size_t r = partial.classes().size();
  const std::size_t known = partial.rows().size();
  const std::size_t missing = r - known;
  const std::size_t n = partial.group()->order();
  const std::size_t idc = partial.identity_column();

  Rational dim_sum;
  for (std::size_t i = 0; i < known; ++i) {
    Rational d = partial.value(i, idc).to_rational();
    dim_sum += d * d;
  }
  if (!(dim_sum + Rational(Int(missing)) == Rational(Int(n))))
    throw std::invalid_argument(
        "complete_by_orthogonality: missing rows cannot all be one-dimensional");
  if (r > 20)
    throw std::invalid_argument("complete_by_orthogonality: too many classes to enumerate");

  std::vector<std::size_t> col_of(n);
  for (std::size_t j = 0; j < r; ++j)
    for (ElementId x : partial.classes()[j].members) col_of[x] = j;
  const FiniteGroup& g = *partial.group();
  auto is_multiplicative = [&](const std::vector<Cyclotomic>& v) {
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y)
        if (!(v[col_of[x]] * v[col_of[y]] == v[col_of[g.mul(x, y)]])) return false;
    return true;
  };

  const Cyclotomic plus(1), minus(-1);
  std::vector<std::vector<Cyclotomic>> candidates;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (r - 1)); ++mask) {
    std::vector<Cyclotomic> cand(r);
    std::size_t bit = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (j == idc) {
        cand[j] = plus;
        continue;
      }
      cand[j] = (mask >> bit & 1) ? minus : plus;
      ++bit;
    }
    bool ok = true;
    for (std::size_t i = 0; ok && i < known; ++i)
      ok = detail::class_inner(partial.classes(), n, cand,
                               partial.rows()[i].character.values())
               .is_zero();
    if (ok && is_multiplicative(cand)) candidates.push_back(std::move(cand));
  }

  std::vector<std::vector<std::size_t>> solutions;
  std::vector<std::size_t> chosen;
  auto mutually_orthogonal = [&](std::size_t a, std::size_t b) {
    return detail::class_inner(partial.classes(), n, candidates[a], candidates[b]).is_zero();
  };
  auto search = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == missing) {
      solutions.push_back(chosen);
      return;
    }
    for (std::size_t c = start; c < candidates.size(); ++c) {
      bool ok = true;
      for (std::size_t prev : chosen)
        if (!mutually_orthogonal(prev, c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(c);
      self(self, c + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);
  if (solutions.size() != 1)
    throw std::runtime_error("complete_by_orthogonality: found " +
                             std::to_string(solutions.size()) +
                             " completions where exactly one was required");

  std::vector<CharacterTable::Row> rows = partial.rows();
  std::vector<std::vector<Cyclotomic>> found;
  for (std::size_t c : solutions[0]) found.push_back(candidates[c]);
  std::sort(found.begin(), found.end());
  for (std::size_t k = 0; k < found.size(); ++k)
    rows.push_back({"completed_" + std::to_string(k + 1),
                    Character(partial.group(), std::move(found[k])),
                    RowProvenance::orthogonality_completion});
  return CharacterTable(partial.group(), partial.classes(), std::move(rows),
                        partial.dixon_prime());
}

/// Multiplicity of each table row in the given class function, by the
/// inner product formula; verifies the multiplicities reconstruct the
/// input exactly.
inline std::vector<long long> decompose_character(const Character& x, const CharacterTable& table) {
  if (!table.is_complete())
    throw std::invalid_argument("decompose_character: table is incomplete");
  if (!same_group(x.group(), table.group()))
    throw std::invalid_argument("decompose_character: different groups");
  const FiniteGroup& g = *table.group();
  auto cmap = class_index_map(g);
  auto canonical = conjugacy_classes(g);
  if (x.class_count() != canonical.size())
    throw std::invalid_argument("decompose_character: class count mismatch");

  // Reorder the input to the table's column order before taking inner
  // products.
  std::vector<Cyclotomic> xv(table.classes().size());
  for (std::size_t j = 0; j < table.classes().size(); ++j)
    xv[j] = x.at(cmap[table.classes()[j].representative]);

  std::vector<long long> mult;
  std::vector<Cyclotomic> recon(xv.size());
  for (std::size_t i = 0; i < table.rows().size(); ++i) {
    Cyclotomic ip = detail::class_inner(table.classes(), g.order(), xv,
                                        table.rows()[i].character.values());
    if (!ip.is_rational() || !ip.to_rational().is_integer())
      throw std::invalid_argument("decompose_character: multiplicity of " + table.rows()[i].name +
                                  " is not an integer");
    long long c = static_cast<long long>(ip.to_rational().to_integer());
    mult.push_back(c);
    for (std::size_t j = 0; j < recon.size(); ++j)
      recon[j] += Cyclotomic(c) * table.value(i, j);
  }
  if (recon != xv)
    throw std::invalid_argument("decompose_character: rows do not span the given class function");
  return mult;
}

/// A witness that two tables agree up to reordering: row_map[i] and
/// col_map[j] give the row and column of `a` matching row i and column j
/// of `b`.
struct TableMatch {
  std::vector<std::size_t> row_map;
  std::vector<std::size_t> col_map;
};

namespace detail {

/// Matches rows of `a`, with columns permuted by col_map, bijectively
/// against rows of `b` by exact value equality.
inline std::optional<std::vector<std::size_t>> match_rows(
    const CharacterTable& a, const CharacterTable& b, const std::vector<std::size_t>& col_map) {
  const std::size_t r = b.classes().size();
  std::map<std::vector<Cyclotomic>, std::vector<std::size_t>> pool;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Cyclotomic> permuted(r);
    for (std::size_t j = 0; j < r; ++j) permuted[j] = a.value(i, col_map[j]);
    pool[std::move(permuted)].push_back(i);
  }
  std::vector<std::size_t> row_map(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto it = pool.find(b.rows()[i].character.values());
    if (it == pool.end() || it->second.empty()) return std::nullopt;
    row_map[i] = it->second.front();
    it->second.erase(it->second.begin());
  }
  return row_map;
}

}  // namespace detail

/// Decides whether two complete tables are equal up to a simultaneous row
/// and column permutation that preserves class sizes, and returns the
/// permutations when they exist.
inline std::optional<TableMatch> tables_match(const CharacterTable& a, const CharacterTable& b) {
  if (!a.is_complete() || !b.is_complete())
    throw std::invalid_argument("tables_match: both tables must be complete");
  const std::size_t r = a.classes().size();
  if (b.classes().size() != r) return std::nullopt;

  std::vector<std::size_t> sizes_a, sizes_b;
  for (const auto& c : a.classes()) sizes_a.push_back(c.size());
  for (const auto& c : b.classes()) sizes_b.push_back(c.size());
  {
    auto sa = sizes_a, sb = sizes_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  if (sizes_a == sizes_b) {
    std::vector<std::size_t> ident(r);
    std::iota(ident.begin(), ident.end(), 0);
    if (auto rows = detail::match_rows(a, b, ident)) return TableMatch{*rows, ident};
  }

  // Column signature: class size plus the multiset of values above it.
  auto signature = [r](const CharacterTable& t, std::size_t j) {
    std::vector<Cyclotomic> column;
    for (std::size_t i = 0; i < r; ++i) column.push_back(t.value(i, j));
    std::sort(column.begin(), column.end());
    return std::make_pair(t.classes()[j].size(), column);
  };
  std::vector<std::vector<std::size_t>> candidates(r);
  for (std::size_t j = 0; j < r; ++j) {
    auto sig_b = signature(b, j);
    for (std::size_t k = 0; k < r; ++k)
      if (signature(a, k) == sig_b) candidates[j].push_back(k);
    if (candidates[j].empty()) return std::nullopt;
  }
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (candidates[x].size() != candidates[y].size())
      return candidates[x].size() < candidates[y].size();
    return x < y;
  });

  std::vector<std::size_t> col_map(r, r);
  std::vector<bool> used(r, false);
  std::optional<TableMatch> found;
  auto assign = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == r) {
      if (auto rows = detail::match_rows(a, b, col_map)) {
        found = TableMatch{*rows, col_map};
        return true;
      }
      return false;
    }
    std::size_t j = order[depth];
    for (std::size_t k : candidates[j]) {
      if (used[k]) continue;
      used[k] = true;
      col_map[j] = k;
      if (self(self, depth + 1)) return true;
      used[k] = false;
      col_map[j] = r;
    }
    return false;
  };
  assign(assign, 0);
  return found;
}

}  // namespace cptrep
