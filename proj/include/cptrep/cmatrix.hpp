#pragma once

/// \file cmatrix.hpp
/// Dense matrices over the cyclotomic numbers.  Row-major storage; all
/// operations are exact.

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace cptrep {

class CMatrix {
public:
  CMatrix() : rows_(0), cols_(0) {}

  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Cyclotomic()) {}

  CMatrix(std::initializer_list<std::initializer_list<Cyclotomic>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    e_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("CMatrix: ragged initializer");
      for (const auto& v : row) e_.push_back(v);
    }
  }

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Cyclotomic& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Cyclotomic& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  CMatrix operator-() const {
    CMatrix m = *this;
    for (Cyclotomic& v : m.e_) v = -v;
    return m;
  }

  friend CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("CMatrix: shape mismatch in addition");
    CMatrix m = a;
    for (std::size_t k = 0; k < m.e_.size(); ++k) m.e_[k] += b.e_[k];
    return m;
  }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("CMatrix: shape mismatch in product");
    CMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Cyclotomic& av = a.at(i, k);
        if (av.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Cyclotomic& bv = b.at(k, j);
          if (bv.is_zero()) continue;
          m.at(i, j) += av * bv;
        }
      }
    }
    return m;
  }

  friend CMatrix operator*(const Cyclotomic& s, const CMatrix& a) {
    CMatrix m = a;
    for (Cyclotomic& v : m.e_) v = s * v;
    return m;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i == 0 ? "[" : " [");
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) os << ", ";
        os << at(i, j);
      }
      os << "]";
      if (i + 1 < rows_) os << ",";
    }
    os << "]";
    return os.str();
  }

private:
  std::size_t rows_, cols_;
  std::vector<Cyclotomic> e_;
};

/// Sum of diagonal entries; requires a square matrix.
inline Cyclotomic trace(const CMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("trace: matrix not square");
  Cyclotomic t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

/// Kronecker product; block (i,j) of the result is a(i,j) * b.
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Cyclotomic& av = a.at(i, j);
      if (av.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Cyclotomic& bv = b.at(k, l);
          if (bv.is_zero()) continue;
          m.at(i * b.rows() + k, j * b.cols() + l) = av * bv;
        }
    }
  return m;
}

}  // namespace cptrep
