#pragma once

/// \file permutation.hpp
/// Permutations of {0, ..., n-1} with cycle-notation labels printed in
/// the customary 1-based convention, e.g. "(1234)" or "(13)(24)".
/// Composition is right-to-left: (a*b)(x) = a(b(x)).

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cptrep {

class Permutation {
public:
  explicit Permutation(std::size_t n) : images_(n) {
    for (std::size_t i = 0; i < n; ++i) images_[i] = i;
  }

  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t v : images_) {
      if (v >= images_.size() || seen[v])
        throw std::invalid_argument("Permutation: image list is not a bijection");
      seen[v] = 1;
    }
  }

  /// Build from 1-based cycles, e.g. from_cycles({{1,2,3,4}}, 4) -> (1234).
  static Permutation from_cycles(const std::vector<std::vector<std::size_t>>& cycles,
                                 std::size_t n) {
    Permutation p(n);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        std::size_t from = cyc[i], to = cyc[(i + 1) % cyc.size()];
        if (from < 1 || from > n || to < 1 || to > n)
          throw std::invalid_argument("Permutation: cycle point out of range");
        p.images_[from - 1] = to - 1;
      }
    }
    // Validate the result (overlapping cycles could break bijectivity).
    return Permutation(p.images_);
  }

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t x) const { return images_[x]; }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
      throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<std::size_t> img(a.degree());
    for (std::size_t x = 0; x < a.degree(); ++x) img[x] = a(b(x));
    return Permutation(std::move(img));
  }

  Permutation inverse() const {
    std::vector<std::size_t> img(degree());
    for (std::size_t x = 0; x < degree(); ++x) img[images_[x]] = x;
    return Permutation(std::move(img));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// "(1234)", "(13)(24)"; the identity prints as "()".  Fixed points are
  /// omitted and each cycle starts at its least point.
  std::string cycle_string() const {
    std::string s;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      s += "(";
      std::size_t x = start;
      do {
        seen[x] = 1;
        s += std::to_string(x + 1);
        x = images_[x];
      } while (x != start);
      s += ")";
    }
    return s.empty() ? "()" : s;
  }

private:
  std::vector<std::size_t> images_;
};

}  // namespace cptrep
