#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <cptrep/cmatrix.hpp>

using cptrep::CMatrix;
using cptrep::Cyclotomic;

namespace {

const Cyclotomic I = Cyclotomic::i();

CMatrix draw_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long long> v(-3, 3);
  std::uniform_int_distribution<int> imag(0, 1);
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      Cyclotomic val(v(rng));
      if (imag(rng)) val += Cyclotomic(v(rng)) * I;
      m.at(i, j) = val;
    }
  return m;
}

}  // namespace

TEST_CASE("matrix product follows hand-checked 2x2 example") {
  // [[0,1],[-1,0]] * [[0,i],[i,0]] = [[i,0],[0,-i]]
  CMatrix a{{Cyclotomic(0), Cyclotomic(1)}, {Cyclotomic(-1), Cyclotomic(0)}};
  CMatrix b{{Cyclotomic(0), I}, {I, Cyclotomic(0)}};
  CMatrix expect{{I, Cyclotomic(0)}, {Cyclotomic(0), -I}};
  CHECK(a * b == expect);
}

TEST_CASE("matrix product is associative and identity-neutral") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    CMatrix a = draw_matrix(rng, 2, 3);
    CMatrix b = draw_matrix(rng, 3, 2);
    CMatrix c = draw_matrix(rng, 2, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(CMatrix::identity(2) * a == a);
    CHECK(a * CMatrix::identity(3) == a);
  }
  CHECK_THROWS_AS(draw_matrix(rng, 2, 3) * draw_matrix(rng, 2, 3), std::invalid_argument);
}

TEST_CASE("trace of a kronecker product is the product of traces") {
  std::mt19937 rng(12);
  for (int t = 0; t < 40; ++t) {
    CMatrix a = draw_matrix(rng, 2, 2);
    CMatrix b = draw_matrix(rng, 3, 3);
    CHECK(trace(kron(a, b)) == trace(a) * trace(b));
  }
  CHECK_THROWS_AS(trace(draw_matrix(rng, 2, 3)), std::invalid_argument);
}

TEST_CASE("kronecker product is multiplicative") {
  std::mt19937 rng(13);
  for (int t = 0; t < 20; ++t) {
    CMatrix a = draw_matrix(rng, 2, 2), b = draw_matrix(rng, 2, 2);
    CMatrix c = draw_matrix(rng, 2, 2), d = draw_matrix(rng, 2, 2);
    CHECK(kron(a, c) * kron(b, d) == kron(a * b, c * d));
  }
}

TEST_CASE("kronecker block layout places a(i,j)*b in block (i,j)") {
  CMatrix a{{Cyclotomic(1), Cyclotomic(2)}, {Cyclotomic(0), I}};
  CMatrix b{{Cyclotomic(3), Cyclotomic(0)}, {Cyclotomic(0), Cyclotomic(4)}};
  CMatrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k.at(0, 0) == Cyclotomic(3));
  CHECK(k.at(0, 2) == Cyclotomic(6));
  CHECK(k.at(1, 3) == Cyclotomic(8));
  CHECK(k.at(2, 2) == Cyclotomic(3) * I);
  CHECK(k.at(3, 3) == Cyclotomic(4) * I);
  CHECK(k.at(2, 0) == Cyclotomic(0));
}
