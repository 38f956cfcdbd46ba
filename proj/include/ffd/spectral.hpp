#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffd/pauli.hpp"

namespace ffd {

inline constexpr double kPhaseTol = 1e-7;

enum class Verdict { FreeFermionic, GenericReflectionSymmetric, Intermediate, Inconclusive };

std::string to_string(Verdict v);

/// Sorted phases in (-pi, pi] of the eigenvalues of a unitary matrix.
std::vector<double> eigenphases(const Matrix& u, double unitarity_tol = 1e-9);

struct Clustering {
  std::vector<double> representatives;  // ascending
  std::vector<int> counts;

  int count() const { return static_cast<int>(representatives.size()); }
};

/// Single-linkage clustering with gap threshold `tol`.  With `circular` the
/// values are angles and -pi, pi are neighbours.
Clustering cluster_distinct(std::vector<double> values, double tol, bool circular = true);

/// Distinct phases and distinct pairwise differences (j == k included), both mod 2 pi.
std::pair<int, int> ratio_signature(const std::vector<double>& phases, double tol = kPhaseTol);

struct SpectralSignature {
  std::vector<double> phases;
  std::vector<double> distinct;
  std::vector<int> multiplicities;
  int n_distinct = 0;
  int n_distinct_diffs = 0;
  std::optional<int> uniform_degeneracy;
  bool conjugation_symmetric = false;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<double> modes;
  double tol = kPhaseTol;
};

SpectralSignature classify_phases(std::vector<double> phases, double tol = kPhaseTol);
SpectralSignature classify(const Matrix& u, double tol = kPhaseTol);

/// Mode angles, descending, whose 2^n signed sums give the distinct phases.
/// Throws ExtractionError when no such decomposition exists.
std::vector<double> extract_modes(const SpectralSignature& sig);

/// All 2^n sums of +-modes[k], wrapped to (-pi, pi] and sorted.
std::vector<double> signed_sums(const std::vector<double>& modes);

/// True when the two phase multisets agree element by element on the circle.
bool same_phases(std::vector<double> a, std::vector<double> b, double tol);

/// Largest circular distance between matched sorted phase lists (inf on size mismatch).
double phase_distance(std::vector<double> a, std::vector<double> b);

std::string phases_csv(const std::vector<double>& phases);

}  // namespace ffd
