#pragma once

/// \file quaternion.hpp
/// The eight signed quaternion units {±1, ±iota, ±gamma, ±kappa} with
/// iota*gamma = kappa, gamma*kappa = iota, kappa*iota = gamma and each
/// imaginary unit squaring to -1.

#include <stdexcept>
#include <string>

namespace cptrep {

class SignedQuaternion {
public:
  enum class Unit { One, Iota, Gamma, Kappa };

  SignedQuaternion() : unit_(Unit::One), sign_(1) {}
  SignedQuaternion(Unit u, int sign) : unit_(u), sign_(sign) {
    if (sign != 1 && sign != -1)
      throw std::invalid_argument("SignedQuaternion: sign must be +1 or -1");
  }

  static SignedQuaternion one() { return {Unit::One, 1}; }
  static SignedQuaternion iota() { return {Unit::Iota, 1}; }
  static SignedQuaternion gamma() { return {Unit::Gamma, 1}; }
  static SignedQuaternion kappa() { return {Unit::Kappa, 1}; }

  Unit unit() const { return unit_; }
  int sign() const { return sign_; }

  friend SignedQuaternion operator*(const SignedQuaternion& a, const SignedQuaternion& b) {
    // Unit products: table[a][b] = (unit, sign), 0=1, 1=iota, 2=gamma, 3=kappa.
    static constexpr int unit_table[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign_table[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    int i = static_cast<int>(a.unit_), j = static_cast<int>(b.unit_);
    return {static_cast<Unit>(unit_table[i][j]), a.sign_ * b.sign_ * sign_table[i][j]};
  }

  SignedQuaternion operator-() const { return {unit_, -sign_}; }

  friend bool operator==(const SignedQuaternion& a, const SignedQuaternion& b) {
    return a.unit_ == b.unit_ && a.sign_ == b.sign_;
  }

  std::string to_string() const {
    static const char* names[] = {"1", "iota", "gamma", "kappa"};
    std::string s = names[static_cast<int>(unit_)];
    return sign_ < 0 ? "-" + s : s;
  }

private:
  Unit unit_;
  int sign_;
};

}  // namespace cptrep
