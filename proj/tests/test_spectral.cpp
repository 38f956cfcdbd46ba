#include <gtest/gtest.h>

#include <numbers>

#include "ffd/circuits.hpp"
#include "ffd/error.hpp"
#include "ffd/rng.hpp"
#include "ffd/spectral.hpp"
#include "oracles.hpp"

using namespace ffd;

namespace {

constexpr double kPi = std::numbers::pi;

Matrix diag_phases(const std::vector<double>& p) {
  Matrix d = Matrix::Zero(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(p.size()));
  for (std::size_t k = 0; k < p.size(); ++k) d(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = std::polar(1.0, p[k]);
  return d;
}

// Planted free spectrum: all signed sums of the modes, each repeated `mult` times.
std::vector<double> free_spectrum(const std::vector<double>& modes, int mult) {
  std::vector<double> sums{0.0};
  for (double e : modes) {
    std::vector<double> next;
    for (double s : sums) {
      next.push_back(std::remainder(s + e, 2 * kPi));
      next.push_back(std::remainder(s - e, 2 * kPi));
    }
    sums = next;
  }
  std::vector<double> out;
  for (double s : sums)
    for (int r = 0; r < mult; ++r) out.push_back(s);
  return out;
}

std::vector<double> random_modes(int n, Rng& rng) {
  std::vector<double> m;
  for (int k = 0; k < n; ++k) m.push_back(rng.uniform(0.05, kPi / 2 - 0.05));
  return m;
}

// Expected verdict from an independent count and the counting rules.
Verdict oracle_verdict(const std::vector<double>& phases, double tol) {
  auto d = oracle::distinct(phases, tol, true);
  int nd = static_cast<int>(d.size());
  int diffs = oracle::diff_count(d, tol);
  int n = 0;
  while ((1 << n) < nd) ++n;
  if (nd == 1) return Verdict::Inconclusive;
  if ((1 << n) != nd) return Verdict::Intermediate;
  int three = 1, four = 1;
  for (int k = 0; k < n; ++k) three *= 3;
  for (int k = 0; k < n - 1; ++k) four *= 4;
  if (n >= 3) {
    if (diffs == three) return Verdict::FreeFermionic;
    if (diffs == 2 * four + 1) return Verdict::GenericReflectionSymmetric;
    return Verdict::Intermediate;
  }
  return diffs == three ? Verdict::FreeFermionic : Verdict::Inconclusive;
}

}  // namespace

TEST(Spectral, EigenphaseExamples) {
  EXPECT_EQ(eigenphases(Matrix::Identity(4, 4)), (std::vector<double>{0, 0, 0, 0}));
  auto p = eigenphases(diag_phases({kPi / 2, -kPi / 2}));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p[0], -kPi / 2, 1e-14);
  EXPECT_NEAR(p[1], kPi / 2, 1e-14);
  Matrix bad = 1.01 * Matrix::Identity(2, 2);
  EXPECT_THROW(eigenphases(bad), ValidationError);
}

TEST(Spectral, EigenphasesOfFullProduct) {
  Representation rep = build_representation(RepKind::FFDMinimal, 4);
  auto p = eigenphases(assemble(rep, named_geometry("full_product", 4, AngleSource::sin_rule())));
  const double published[] = {0.90790, 0.93150, 1.47642, 1.69880};
  std::vector<double> expected;
  for (double x : published) {
    expected.push_back(x);
    expected.push_back(-x);
  }
  std::sort(expected.begin(), expected.end());
  auto c = cluster_distinct(p, kPhaseTol);
  EXPECT_LT(phase_distance(c.representatives, expected), 5e-6);
  for (int k : c.counts) EXPECT_EQ(k, c.counts[0]);
}

TEST(Spectral, ClusterExamples) {
  EXPECT_EQ(cluster_distinct({0.1, 0.1 + 1e-12, 0.5}, 1e-9).count(), 2);
  EXPECT_EQ(cluster_distinct({}, 1e-9).count(), 0);
  EXPECT_EQ(cluster_distinct({-kPi + 1e-10, kPi}, 1e-9).count(), 1);
  EXPECT_EQ(cluster_distinct({-kPi + 1e-10, kPi}, 1e-9, false).count(), 2);
  auto c = cluster_distinct({0.3, 0.1, 0.3, 0.3}, 1e-9);
  EXPECT_EQ(c.counts, (std::vector<int>{1, 3}));
}

TEST(Spectral, RatioSignatureFormulas) {
  Rng rng(17);
  for (int n = 1; n <= 5; ++n) {
    auto phases = free_spectrum(random_modes(n, rng), 1);
    auto [nd, diffs] = ratio_signature(phases);
    int three = 1;
    for (int k = 0; k < n; ++k) three *= 3;
    EXPECT_EQ(nd, 1 << n);
    EXPECT_EQ(diffs, three);
  }
  for (int n = 2; n <= 5; ++n) {
    std::vector<double> phases;
    for (int k = 0; k < (1 << (n - 1)); ++k) {
      double a = rng.uniform(0.01, kPi - 0.01);
      phases.push_back(a);
      phases.push_back(-a);
    }
    auto [nd, diffs] = ratio_signature(phases);
    EXPECT_EQ(nd, 1 << n);
    EXPECT_EQ(diffs, 2 * (1 << (2 * (n - 1))) + 1);
  }
}

TEST(Spectral, SmallCountsAreAmbiguous) {
  // For n = 2 both formulas give 9.
  EXPECT_EQ(3 * 3, 2 * 4 + 1);
  SpectralSignature sig = classify(diag_phases({0.3, -0.3, 1.1, -1.1, 0.3, -0.3, 1.1, -1.1}));
  EXPECT_EQ(sig.n_distinct_diffs, 9);
  EXPECT_EQ(sig.verdict, Verdict::FreeFermionic);  // conjugation symmetric and uniform
  SpectralSignature uneven = classify(diag_phases({0.3, -0.3, 1.1, -1.1, 0.3, -0.3}));
  EXPECT_EQ(uneven.verdict, Verdict::Inconclusive);
  EXPECT_EQ(classify(Matrix::Identity(4, 4)).verdict, Verdict::Inconclusive);
}

TEST(Spectral, PlantedSpectraAgreeWithOracle) {
  Rng rng(23);
  for (int n = 3; n <= 4; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<double> phases;
      switch (trial % 4) {
        case 0: phases = free_spectrum(random_modes(n, rng), 1 + trial % 3); break;
        case 1:
          for (int k = 0; k < (1 << (n - 1)); ++k) {
            double a = rng.uniform(0.01, kPi - 0.01);
            phases.insert(phases.end(), {a, -a});
          }
          break;
        case 2: {
          // Degenerate free spectrum: two equal modes produce coincidences.
          auto m = random_modes(n, rng);
          m[1] = m[0];
          phases = free_spectrum(m, 1);
          break;
        }
        default:
          for (int k = 0; k < (1 << n) + 1; ++k) phases.push_back(rng.uniform(-kPi, kPi));
      }
      SpectralSignature sig = classify(diag_phases(phases));
      EXPECT_EQ(sig.verdict, oracle_verdict(phases, kPhaseTol)) << "n=" << n << " trial=" << trial;
    }
}

TEST(Spectral, PermutationSimilarityInvariance) {
  Rng rng(29);
  auto phases = free_spectrum(random_modes(3, rng), 2);
  Matrix d = diag_phases(phases);
  std::vector<int> perm(phases.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  Matrix p = Matrix::Zero(d.rows(), d.cols());
  for (std::size_t i = 0; i < perm.size(); ++i) p(static_cast<Eigen::Index>(i), perm[i]) = 1.0;
  SpectralSignature a = classify(d), b = classify(p * d * p.adjoint());
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(a.n_distinct, b.n_distinct);
  EXPECT_EQ(a.n_distinct_diffs, b.n_distinct_diffs);
  EXPECT_EQ(a.uniform_degeneracy, b.uniform_degeneracy);
}

TEST(Spectral, ExtractTwoModes) {
  const double a = 1.3, b = 0.4;
  SpectralSignature sig = classify_phases({a, -a, b, -b});
  auto modes = extract_modes(sig);
  ASSERT_EQ(modes.size(), 2u);
  EXPECT_NEAR(modes[0], (a + b) / 2, 1e-12);
  EXPECT_NEAR(modes[1], (a - b) / 2, 1e-12);
}

TEST(Spectral, ExtractAllZero) {
  SpectralSignature sig = classify_phases({0, 0, 0, 0});
  EXPECT_EQ(extract_modes(sig), (std::vector<double>{0, 0}));
}

TEST(Spectral, ExtractPublishedSevenGeneratorSet) {
  const double pub[] = {1.2386, 1.3379, 1.8236, 1.8830};
  std::vector<double> phases;
  for (double x : pub) phases.insert(phases.end(), {x, -x});
  SpectralSignature sig = classify_phases(phases, 1e-3);
  auto modes = extract_modes(sig);
  ASSERT_EQ(modes.size(), 3u);
  EXPECT_TRUE(std::is_sorted(modes.rbegin(), modes.rend()));
  EXPECT_LT(phase_distance(signed_sums(modes), sig.distinct), 2e-4);
}

TEST(Spectral, ExtractedModesRebuildSpectrum) {
  Rng rng(31);
  for (int n = 1; n <= 5; ++n) {
    const int mult = 1 << (5 - n);
    auto phases = free_spectrum(random_modes(n, rng), mult);
    SpectralSignature sig = classify(diag_phases(phases));
    ASSERT_EQ(sig.verdict, Verdict::FreeFermionic) << n;
    ASSERT_EQ(static_cast<int>(sig.modes.size()), n);
    ASSERT_TRUE(sig.uniform_degeneracy.has_value());
    EXPECT_EQ(*sig.uniform_degeneracy, mult);
    std::vector<double> rebuilt;
    for (double s : signed_sums(sig.modes))
      for (int r = 0; r < mult; ++r) rebuilt.push_back(s);
    EXPECT_LT(phase_distance(rebuilt, sig.phases), 1e-9);
  }
}

TEST(Spectral, ExtractionFailureRaises) {
  SpectralSignature sig = classify_phases({0.1, 0.2, 0.3, 0.4});
  EXPECT_THROW(extract_modes(sig), ExtractionError);
}

TEST(Spectral, PublishedClassifications) {
  AngleSource sin = AngleSource::sin_rule();
  Representation r4 = build_representation(RepKind::FFDMinimal, 4);
  SpectralSignature full = classify(assemble(r4, named_geometry("full_product", 4, sin)));
  EXPECT_EQ(full.n_distinct, 8);
  EXPECT_EQ(full.n_distinct_diffs, 33);
  EXPECT_NE(full.verdict, Verdict::FreeFermionic);

  SpectralSignature ggt = classify(assemble(r4, named_geometry("staircase_ggt", 4, sin)));
  EXPECT_EQ(ggt.n_distinct, 4);
  EXPECT_EQ(ggt.verdict, Verdict::FreeFermionic);

  Representation r12 = build_representation(RepKind::FFDMinimal, 12);
  SpectralSignature g1 = classify(assemble(r12, named_geometry("g1_ggt", 12, sin)));
  EXPECT_EQ(g1.n_distinct, 16);
  EXPECT_EQ(g1.n_distinct_diffs, 81);
  EXPECT_EQ(g1.verdict, Verdict::FreeFermionic);
}

TEST(Spectral, ReversedFullProductHasSameSpectrum) {
  // The full product read in either order is the same circuit up to transposition.
  AngleSource sin = AngleSource::sin_rule();
  for (int m : {4, 12}) {
    Representation rep = build_representation(RepKind::FFDMinimal, m);
    CircuitGeometry fwd = named_geometry("full_product", m, sin);
    std::vector<Gate> rev(fwd.gates().rbegin(), fwd.gates().rend());
    EXPECT_LT(phase_distance(eigenphases(assemble(rep, fwd)), eigenphases(assemble(rep, CircuitGeometry(rev)))), 1e-9);
  }
}

TEST(Spectral, CsvExport) {
  EXPECT_EQ(phases_csv({}), "index,phase\n");
  std::string csv = phases_csv({-0.5, 0.5});
  EXPECT_NE(csv.find("0,-0.5"), std::string::npos);
  EXPECT_NE(csv.find("1,0.5"), std::string::npos);
}
