#pragma once

#include <string>
#include <vector>

#include "ffd/pauli.hpp"

namespace ffd {

enum class RepKind { IsingStandard, IsingHomogeneous, FFDBasic, FFDCut, FFDShift6, FFDMinimal };

std::string to_string(RepKind kind);
/// Accepts the enum names and the short CLI spellings (ffd-min, ffd-basic, ising, ...).
RepKind parse_rep_kind(const std::string& name);
bool is_ffd(RepKind kind);

/// Which pairs of distinct generators anticommute: |j-k| == 1 for Ising, |j-k| <= 2 for FFD.
bool expect_anticommute(RepKind kind, int j, int k);

struct Representation {
  RepKind kind = RepKind::FFDMinimal;
  int m = 0;
  int n_sites = 0;
  std::vector<PauliString> generators;

  /// Generator h_j, 1-based.
  const PauliString& h(int j) const;
};

Representation build_representation(RepKind kind, int m);

/// One entry of the infinite shift-by-three FFD sequence (X1, Z1Z3, Z1X2Y3, X3, ...).
PauliString shift6_term(int j, int n_sites);

/// Second FFDBasic copy Z_j X_{j+1} X_{j+2}, commuting with every h_k.
std::vector<PauliString> ffd_basic_partner(int m);

struct RelationViolation {
  int j;
  int k;
  std::string relation;  // "square", "anticommute" or "commute"
};

std::vector<RelationViolation> verify_relations(const Representation& rep);

/// Rank over GF(2) of the generators' symplectic vectors; equals m for a faithful embedding.
int gf2_rank(const std::vector<PauliString>& ops);

struct AlgebraWord {
  std::vector<int> indices;
  cplx coefficient{1.0, 0.0};

  std::string to_string() const;
};

std::vector<AlgebraWord> central_elements(int m);

/// Sorts a word into increasing indices, cancelling h_j^2 = 1 and tracking swap signs.
AlgebraWord normal_order(const AlgebraWord& word, RepKind kind);

/// Sign s with reverse(word) == s * word, for a normal-ordered word.
int transpose_sign(const AlgebraWord& word, RepKind kind);

/// Exact realization of a word whose coefficient is a power of i.
PauliString realize(const Representation& rep, const AlgebraWord& word);
Matrix realize_dense(const Representation& rep, const AlgebraWord& word);

/// Hermitian Pauli string commuting with h_1..h_{m-1} and anticommuting with h_m.
PauliString boundary_operator(const Representation& rep);

}  // namespace ffd
