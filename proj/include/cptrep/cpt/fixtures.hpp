#pragma once

/// \file fixtures.hpp
/// Reference data transcribed from the published CPT-group tables that
/// this library reproduces: character tables, representation matrices,
/// label dictionaries, conjugacy-class lists, and the known print
/// defects together with their corrected values.  The `location` string
/// of each item names the table, equation, or section where it appears
/// in print; the verifier reports its findings under these names.
///
/// Transcription conventions:
///  * hatted operator symbols carry a trailing '^' ("C^", "Theta^") and
///    keep their composition stars ("C^*P^"); the equation-level group
///    drops both ("CP"),
///  * the Z2 factor of the psi-hat group is written {e, a} throughout,
///    matching the class list and table headers (the printed dictionary
///    block writes the same factor as {1, -1}),
///  * permutations are disjoint cycles; the identity is "()".

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "../cmatrix.hpp"
#include "../cyclotomic.hpp"

namespace cptrep::cpt::fixtures {

/// Gaussian integer re + im*i; every printed table entry lies in Z[i].
struct GaussInt {
  int re = 0;
  int im = 0;
  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

inline Cyclotomic value_of(const GaussInt& g) {
  return Cyclotomic::gaussian(Rational(g.re), Rational(g.im));
}

/// One printed scalar cell; `dash` marks a bare "-" glyph carrying no
/// numeric value.
struct PrintedScalar {
  GaussInt value;
  bool dash = false;
};

/// One printed 2x2 matrix cell, row-major.
using PrintedMatrix = std::array<GaussInt, 4>;

inline CMatrix matrix_of(const PrintedMatrix& m) {
  CMatrix out(2, 2);
  for (std::size_t k = 0; k < 4; ++k) out.at(k / 2, k % 2) = value_of(m[k]);
  return out;
}

inline PrintedMatrix negated(const PrintedMatrix& m) {
  PrintedMatrix out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = {-m[k].re, -m[k].im};
  return out;
}

// Recurring 2x2 cells.  sigma_1/2/3 are the Pauli matrices.
inline PrintedMatrix mat_identity() { return {{{1, 0}, {0, 0}, {0, 0}, {1, 0}}}; }
inline PrintedMatrix mat_sigma1() { return {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}; }
inline PrintedMatrix mat_sigma2() { return {{{0, 0}, {0, -1}, {0, 1}, {0, 0}}}; }
inline PrintedMatrix mat_sigma3() { return {{{1, 0}, {0, 0}, {0, 0}, {-1, 0}}}; }
inline PrintedMatrix mat_i_sigma1() { return {{{0, 0}, {0, 1}, {0, 1}, {0, 0}}}; }
inline PrintedMatrix mat_i_sigma3() { return {{{0, 1}, {0, 0}, {0, 0}, {0, -1}}}; }
inline PrintedMatrix mat_minus_i_sigma2() { return {{{0, 0}, {-1, 0}, {1, 0}, {0, 0}}}; }
inline PrintedMatrix mat_i_identity() { return {{{0, 1}, {0, 0}, {0, 0}, {0, 1}}}; }

/// A character table keyed by conjugacy classes; `class_reps` bind the
/// columns to group elements by label, `class_sizes` record the printed
/// "2[x]" multiplicities.
struct CharRow {
  std::string name;
  std::vector<GaussInt> values;
};

struct CharTableFixture {
  std::string location;
  std::vector<std::string> class_reps;
  std::vector<std::size_t> class_sizes;
  std::vector<CharRow> rows;
};

/// A representation table with one column per group element.
struct ScalarRepRow {
  std::string name;
  std::vector<PrintedScalar> values;
};

struct MatrixRepRow {
  std::string name;
  std::vector<PrintedMatrix> values;
};

struct RepTableFixture {
  std::string location;
  std::vector<std::string> columns;
  std::vector<ScalarRepRow> scalar_rows;
  std::vector<MatrixRepRow> matrix_rows;
};

/// One row of a printed label dictionary.
struct LabelPair {
  std::string from;
  std::string to;
};

/// One printed conjugacy class: its naming representative and members.
struct ClassFixture {
  std::string representative;
  std::vector<std::string> members;
};

/// A documented print defect: what the source shows, the corrected
/// value, and why the correction is forced.
struct Defect {
  std::string location;
  std::string printed;
  std::string corrected;
  std::string note;
};

namespace build {

inline std::vector<GaussInt> ints(std::initializer_list<int> v) {
  std::vector<GaussInt> out;
  out.reserve(v.size());
  for (int x : v) out.push_back({x, 0});
  return out;
}

inline CharRow crow(std::string name, std::initializer_list<int> v) {
  return {std::move(name), ints(v)};
}

inline ScalarRepRow srow(std::string name, std::initializer_list<int> v) {
  ScalarRepRow row{std::move(name), {}};
  row.values.reserve(v.size());
  for (int x : v) row.values.push_back({{x, 0}, false});
  return row;
}

}  // namespace build

/// The sixteen psi-hat operator labels in printed column order.
inline std::vector<std::string> psi_hat_labels() {
  return {"I^",  "C^",    "-I^",  "-C^",    "P^",    "C^*P^",  "-P^",    "-C^*P^",
          "T^",  "C^*T^", "-T^",  "-C^*T^", "P^*T^", "Theta^", "-P^*T^", "-Theta^"};
}

/// The sixteen equation-level labels in printed column order.
inline std::vector<std::string> psi_eq_labels() {
  return {"I", "C",  "-I", "-C",  "P",  "CP",    "-P",  "-CP",
          "T", "CT", "-T", "-CT", "PT", "Theta", "-PT", "-Theta"};
}

/// The eight potential-group labels in printed column order.
inline std::vector<std::string> g_a_labels() {
  return {"I^", "C^", "P^", "T^", "P^*T^", "C^*P^", "C^*T^", "Theta^"};
}

/// Quaternion character table.
inline CharTableFixture table_1() {
  using build::crow;
  CharTableFixture f;
  f.location = "Table 1";
  f.class_reps = {"1", "-1", "iota", "gamma", "kappa"};
  f.class_sizes = {1, 1, 2, 2, 2};
  f.rows = {crow("chi_1", {1, 1, 1, 1, 1}),   crow("chi_2", {1, 1, 1, -1, -1}),
            crow("chi_3", {1, 1, -1, 1, -1}), crow("chi_4", {1, 1, -1, -1, 1}),
            crow("chi_5", {2, -2, 0, 0, 0})};
  return f;
}

/// Representation table of the psi-hat group, one column per element.
inline RepTableFixture table_2() {
  using build::srow;
  RepTableFixture f;
  f.location = "Table 2";
  f.columns = psi_hat_labels();
  f.scalar_rows = {
      srow("phi_1", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
      srow("phi_2", {1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1}),
      srow("phi_3", {1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1}),
      srow("phi_4", {1, -1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1, -1, 1}),
      srow("phi_5", {1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1}),
      srow("phi_6", {1, -1, 1, -1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1}),
      srow("phi_7", {1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1}),
      srow("phi_8", {1, -1, 1, -1, -1, 1, -1, 1, -1, 1, -1, 1, 1, -1, 1, -1}),
  };
  const PrintedMatrix one = mat_identity();
  const PrintedMatrix d = {{{0, 1}, {0, 0}, {0, 0}, {0, -1}}};   // diag(i, -i)
  const PrintedMatrix j = {{{0, 0}, {1, 0}, {-1, 0}, {0, 0}}};   // [[0,1],[-1,0]]
  const PrintedMatrix k = mat_i_sigma1();                        // [[0,i],[i,0]]
  f.matrix_rows = {
      {"phi_9",
       {one, one, negated(one), negated(one), d, d, negated(d), negated(d), j, j, negated(j),
        negated(j), k, k, negated(k), negated(k)}},
      {"phi_10",
       {one, negated(one), negated(one), one, d, negated(d), negated(d), d, j, negated(j),
        negated(j), j, k, negated(k), negated(k), k}},
  };
  return f;
}

/// Character table of the psi-hat group.
inline CharTableFixture table_3() {
  using build::crow;
  CharTableFixture f;
  f.location = "Table 3";
  f.class_reps = {"I^", "C^", "-I^", "-C^", "P^", "C^*P^", "T^", "C^*T^", "P^*T^", "Theta^"};
  f.class_sizes = {1, 1, 1, 1, 2, 2, 2, 2, 2, 2};
  f.rows = {crow("lambda_1", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
            crow("lambda_2", {1, -1, 1, -1, 1, -1, 1, -1, 1, -1}),
            crow("lambda_3", {1, 1, 1, 1, 1, 1, -1, -1, -1, -1}),
            crow("lambda_4", {1, -1, 1, -1, 1, -1, -1, 1, -1, 1}),
            crow("lambda_5", {1, 1, 1, 1, -1, -1, 1, 1, -1, -1}),
            crow("lambda_6", {1, -1, 1, -1, -1, 1, 1, -1, -1, 1}),
            crow("lambda_7", {1, 1, 1, 1, -1, -1, -1, -1, 1, 1}),
            crow("lambda_8", {1, -1, 1, -1, -1, 1, -1, 1, 1, -1}),
            crow("lambda_9", {2, 2, -2, -2, 0, 0, 0, 0, 0, 0}),
            crow("lambda_10", {2, -2, -2, 2, 0, 0, 0, 0, 0, 0})};
  return f;
}

/// Character (= representation) table of the potential group; every
/// class is a singleton.
inline CharTableFixture table_4() {
  using build::crow;
  CharTableFixture f;
  f.location = "Table 4";
  f.class_reps = g_a_labels();
  f.class_sizes = {1, 1, 1, 1, 1, 1, 1, 1};
  f.rows = {crow("Phi_1", {1, 1, 1, 1, 1, 1, 1, 1}),
            crow("Phi_2", {1, -1, 1, 1, 1, -1, -1, -1}),
            crow("Phi_3", {1, 1, -1, 1, -1, -1, 1, -1}),
            crow("Phi_4", {1, 1, 1, -1, -1, 1, -1, -1}),
            crow("Phi_5", {1, -1, -1, 1, -1, 1, -1, 1}),
            crow("Phi_6", {1, -1, 1, -1, -1, -1, 1, 1}),
            crow("Phi_7", {1, 1, -1, -1, 1, -1, -1, 1}),
            crow("Phi_8", {1, -1, -1, -1, 1, 1, 1, -1})};
  return f;
}

/// Representation table of the equation-level group, as printed: row
/// phi_8 shows bare dashes in the C and -C columns, and the phi_10
/// entry in the -CT column repeats the CT matrix.  See defect_list().
inline RepTableFixture table_5() {
  using build::srow;
  RepTableFixture f;
  f.location = "Table 5";
  f.columns = psi_eq_labels();
  f.scalar_rows = {
      srow("phi_1", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
      srow("phi_2", {1, -1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1, -1, 1}),
      srow("phi_3", {1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1}),
      srow("phi_4", {1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1}),
      srow("phi_5", {1, -1, 1, -1, -1, 1, -1, 1, -1, 1, -1, 1, 1, -1, 1, -1}),
      srow("phi_6", {1, -1, 1, -1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1}),
      srow("phi_7", {1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1}),
      srow("phi_8", {1, 0, 1, 0, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1}),
  };
  f.scalar_rows[7].values[1].dash = true;  // C column: printed as "-"
  f.scalar_rows[7].values[3].dash = true;  // -C column: printed as "-"
  const PrintedMatrix one = mat_identity();
  const PrintedMatrix s1 = mat_sigma1();
  const PrintedMatrix s2 = mat_sigma2();
  const PrintedMatrix s3 = mat_sigma3();
  const PrintedMatrix is1 = mat_i_sigma1();
  const PrintedMatrix is3 = mat_i_sigma3();
  const PrintedMatrix mis2 = mat_minus_i_sigma2();
  const PrintedMatrix i_one = mat_i_identity();
  f.matrix_rows = {
      {"phi_9",
       {one, is1, negated(one), negated(is1), mis2, is3, negated(mis2), negated(is3), i_one,
        negated(s1), negated(i_one), s1, s2, negated(s3), negated(s2), s3}},
      {"phi_10",
       {one, negated(is1), negated(one), is1, mis2, negated(is3), negated(mis2), is3,
        negated(i_one), negated(s1), i_one, negated(s1), negated(s2), negated(s3), s2, s3}},
  };
  return f;
}

/// Character table of the equation-level group.
inline CharTableFixture table_6() {
  using build::crow;
  CharTableFixture f;
  f.location = "Table 6";
  f.class_reps = {"I", "-I", "C", "T", "-T", "P", "CP", "CT", "PT", "Theta"};
  f.class_sizes = {1, 1, 2, 1, 1, 2, 2, 2, 2, 2};
  f.rows = {crow("chi_1", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
            crow("chi_2", {1, 1, -1, -1, -1, 1, -1, 1, -1, 1}),
            crow("chi_3", {1, 1, -1, 1, 1, 1, -1, -1, 1, -1}),
            crow("chi_4", {1, 1, 1, -1, -1, 1, 1, -1, -1, -1}),
            crow("chi_5", {1, 1, -1, -1, -1, -1, 1, 1, 1, -1}),
            crow("chi_6", {1, 1, -1, 1, 1, -1, 1, -1, -1, 1}),
            crow("chi_7", {1, 1, 1, -1, -1, -1, -1, -1, 1, 1}),
            crow("chi_8", {1, 1, 1, 1, 1, -1, -1, 1, -1, -1}),
            {"chi_9", {{2, 0}, {-2, 0}, {0, 0}, {0, 2}, {0, -2}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}},
            {"chi_10", {{2, 0}, {-2, 0}, {0, 0}, {0, -2}, {0, 2}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}}};
  return f;
}

/// Dictionary from psi-hat operator labels to (quaternion, Z2) pairs.
/// The first two rows are printed as bare "1" and "-1"; the table
/// headers name the same elements I^ and -I^.
inline std::vector<LabelPair> eq2_dictionary() {
  return {{"I^", "(1,e)"},        {"-I^", "(-1,e)"},      {"C^", "(1,a)"},
          {"-C^", "(-1,a)"},      {"P^", "(iota,e)"},     {"-P^", "(-iota,e)"},
          {"T^", "(gamma,e)"},    {"-T^", "(-gamma,e)"},  {"C^*P^", "(iota,a)"},
          {"-C^*P^", "(-iota,a)"}, {"C^*T^", "(gamma,a)"}, {"-C^*T^", "(-gamma,a)"},
          {"P^*T^", "(kappa,e)"}, {"-P^*T^", "(-kappa,e)"}, {"Theta^", "(kappa,a)"},
          {"-Theta^", "(-kappa,a)"}};
}

/// Dictionary from potential-group labels to Z2^3 triples, as printed:
/// the T^ row repeats the P^*T^ image (e,a,a).  See defect_list().
inline std::vector<LabelPair> eq5_dictionary_as_printed() {
  return {{"I^", "(e,e,e)"},    {"C^", "(a,e,e)"},    {"P^", "(e,a,e)"},
          {"T^", "(e,a,a)"},    {"P^*T^", "(e,a,a)"}, {"C^*P^", "(a,a,e)"},
          {"C^*T^", "(a,e,a)"}, {"Theta^", "(a,a,a)"}};
}

/// The same dictionary with the T^ row corrected to (e,e,a).
inline std::vector<LabelPair> eq5_dictionary_corrected() {
  auto rows = eq5_dictionary_as_printed();
  for (auto& row : rows)
    if (row.from == "T^") row.to = "(e,e,a)";
  return rows;
}

/// The ten conjugacy classes of the psi-hat group; members are written
/// in the (quaternion, Z2) pair notation.
inline std::vector<ClassFixture> eq15_classes() {
  return {{"I^", {"(1,e)"}},
          {"C^", {"(1,a)"}},
          {"-I^", {"(-1,e)"}},
          {"-C^", {"(-1,a)"}},
          {"P^", {"(iota,e)", "(-iota,e)"}},
          {"C^*P^", {"(iota,a)", "(-iota,a)"}},
          {"T^", {"(gamma,e)", "(-gamma,e)"}},
          {"C^*T^", {"(gamma,a)", "(-gamma,a)"}},
          {"P^*T^", {"(kappa,e)", "(-kappa,e)"}},
          {"Theta^", {"(kappa,a)", "(-kappa,a)"}}};
}

/// The action of -1 on D4, element by element.
inline std::vector<LabelPair> eq17_lambda_action() {
  return {{"()", "()"},
          {"(1234)", "(1234)"},
          {"(24)", "(13)"},
          {"(13)", "(24)"},
          {"(12)(34)", "(14)(23)"},
          {"(14)(23)", "(12)(34)"},
          {"(13)(24)", "(13)(24)"},
          {"(1432)", "(1432)"}};
}

/// The five conjugacy classes of D4 as printed between semicolons.
inline std::vector<std::vector<std::string>> eq18_d4_classes() {
  return {{"()"}, {"(1234)", "(1432)"}, {"(13)(24)"}, {"(12)(34)", "(14)(23)"}, {"(24)", "(13)"}};
}

/// One row of the dictionary from equation-level labels to semidirect
/// pairs (D4 part named by its CPT token, Z2 part +1 or -1).
struct SemidirectPair {
  std::string label;
  std::string d4_token;
  int sign;
};

inline std::vector<SemidirectPair> eq22_dictionary() {
  return {{"I", "I", 1},        {"-I", "-I", 1},      {"C", "-Theta", -1}, {"-C", "Theta", -1},
          {"P", "P", 1},        {"-P", "-P", 1},      {"T", "P", -1},      {"-T", "-P", -1},
          {"CP", "CT", -1},     {"-CP", "-CT", -1},   {"CT", "CT", 1},     {"-CT", "-CT", 1},
          {"PT", "-I", -1},     {"-PT", "I", -1},     {"Theta", "Theta", 1},
          {"-Theta", "-Theta", 1}};
}

/// Dictionary from D4 permutations to their CPT tokens.
inline std::vector<LabelPair> eq25_dictionary() {
  return {{"()", "I"},          {"(1234)", "P"},      {"(1432)", "-P"},
          {"(13)(24)", "-I"},   {"(12)(34)", "Theta"}, {"(14)(23)", "-Theta"},
          {"(24)", "-CT"},      {"(13)", "CT"}};
}

/// The ten conjugacy classes of the equation-level group.
inline std::vector<ClassFixture> eq26_classes() {
  return {{"I", {"I"}},
          {"-I", {"-I"}},
          {"C", {"C", "-C"}},
          {"T", {"T"}},
          {"-T", {"-T"}},
          {"P", {"P", "-P"}},
          {"CP", {"CP", "-CP"}},
          {"CT", {"CT", "-CT"}},
          {"PT", {"PT", "-PT"}},
          {"Theta", {"Theta", "-Theta"}}};
}

/// One of the three index-2 invariant subgroups used to pull back sign
/// characters, with the printed complement (the "a" coset).  The
/// C4 x Z2 member list is printed in semidirect pair notation; here it
/// is translated through the eq22_dictionary() rows.
struct QuotientFixture {
  std::string subgroup_name;
  std::vector<std::string> subgroup;
  std::vector<std::string> a_set;
  std::string rep_name;
};

inline std::vector<QuotientFixture> section4_quotients() {
  return {{"D4",
           {"I", "-I", "P", "-P", "CT", "-CT", "Theta", "-Theta"},
           {"C", "T", "CP", "PT", "-C", "-T", "-CP", "-PT"},
           "phi_2"},
          {"C4xZ2",
           {"I", "-PT", "-I", "PT", "P", "T", "-P", "-T"},
           {"C", "CP", "CT", "Theta", "-C", "-CP", "-CT", "-Theta"},
           "phi_3"},
          {"Q",
           {"I", "C", "P", "CP", "-I", "-C", "-P", "-CP"},
           {"T", "CT", "PT", "Theta", "-T", "-CT", "-PT", "-Theta"},
           "phi_4"}};
}

/// The printed 2-dimensional representation of D4.
inline std::vector<std::pair<std::string, PrintedMatrix>> eq27_d4_matrices() {
  return {{"()", mat_identity()},
          {"(13)(24)", negated(mat_identity())},
          {"(1234)", mat_minus_i_sigma2()},
          {"(1432)", negated(mat_minus_i_sigma2())},
          {"(12)(34)", negated(mat_sigma3())},
          {"(14)(23)", mat_sigma3()},
          {"(24)", mat_sigma1()},
          {"(13)", negated(mat_sigma1())}};
}

/// The phi_9 completion: the choice C = i sigma_1 and its consequences.
inline std::vector<std::pair<std::string, PrintedMatrix>> eq28_phi9_choice() {
  return {{"C", mat_i_sigma1()},
          {"T", mat_i_identity()},
          {"CP", mat_i_sigma3()},
          {"PT", mat_sigma2()}};
}

/// The phi_10 completion: the choice C = -i sigma_1 and its consequences.
inline std::vector<std::pair<std::string, PrintedMatrix>> eq29_phi10_choice() {
  return {{"C", negated(mat_i_sigma1())},
          {"T", negated(mat_i_identity())},
          {"CP", negated(mat_i_sigma3())},
          {"PT", negated(mat_sigma2())}};
}

/// The printed identifications between the 1-dimensional rows of
/// Table 2 (left) and Table 5 (right).
inline std::vector<LabelPair> eq31_identifications() {
  return {{"phi_1", "phi_1"}, {"phi_2", "phi_3"}, {"phi_3", "phi_4"}, {"phi_4", "phi_2"},
          {"phi_5", "phi_8"}, {"phi_6", "phi_6"}, {"phi_7", "phi_7"}, {"phi_8", "phi_5"}};
}

/// The three order-2 subgroups of the equation-level group listed in
/// the final section.
inline std::vector<std::vector<std::string>> section5_z2_subgroups() {
  return {{"I", "CT"}, {"I", "PT"}, {"I", "Theta"}};
}

/// Every known print defect, with the forced correction.
inline std::vector<Defect> defect_list() {
  return {
      {"Eq. (5), row T^", "T^ -> (e,a,a)", "T^ -> (e,e,a)",
       "the printed row repeats the P^*T^ image, leaving (e,e,a) unused and breaking "
       "multiplicativity: the images of P^ and T^ would multiply to (e,e,a), not the printed "
       "P^*T^ image; the Table 4 column header for T^ prints the corrected triple"},
      {"Table 5, row phi_8, columns C and -C", "bare dash glyphs", "1",
       "column orthogonality between [I] and [C] forces the entry to 1, and Table 6 prints 1 "
       "in the [C] column of row chi_8"},
      {"Table 5, row phi_10, column -CT", "[[0,-1],[-1,0]]", "[[0,1],[1,0]]",
       "phi_10(-CT) = phi_10(-I) phi_10(CT) = (-1)(-sigma_1) = sigma_1; the printed cell "
       "repeats the CT column"},
      {"Section 4, dimension-sum sentence", "sum of squared dimensions must be 10", "16",
       "the squared irrep dimensions sum to the group order 16; ten is the class count, which "
       "the sentence conflates with the dimension sum"},
      {"Section 5, Z2-subgroup count for G_psi_hat", "only one Z2 subgroup, generated by C^",
       "three", "the involutions of the psi-hat group are C^, -I^ and -C^, giving the order-2 "
       "subgroups {I^,C^}, {I^,-I^} and {I^,-C^}"},
  };
}

}  // namespace cptrep::cpt::fixtures
