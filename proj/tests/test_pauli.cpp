#include <gtest/gtest.h>

#include "ffd/error.hpp"
#include "ffd/pauli.hpp"
#include "oracles.hpp"

using namespace ffd;

namespace {

// Every string on n sites with phase 0, enumerated by (x, z).
std::vector<PauliString> all_strings(int n) {
  std::vector<PauliString> out;
  for (std::uint64_t x = 0; x < (1u << n); ++x)
    for (std::uint64_t z = 0; z < (1u << n); ++z) out.emplace_back(n, x, z, 0);
  return out;
}

std::string letters(const PauliString& p) {
  std::string s;
  for (int j = 1; j <= p.n_sites(); ++j) s += p.op_at(j);
  return s;
}

bool exactly_equal(const Matrix& a, const Matrix& b) { return a.rows() == b.rows() && (a - b).cwiseAbs().maxCoeff() == 0.0; }

}  // namespace

TEST(Pauli, MultiplicationTable) {
  PauliString x = PauliString::parse("X1"), z = PauliString::parse("Z1");
  PauliString xx = x * x;
  EXPECT_TRUE(xx.is_identity());
  EXPECT_EQ(xx.phase_exp(), 0);

  PauliString xz = x * z;
  EXPECT_EQ(xz.op_at(1), 'Y');
  EXPECT_EQ(xz.phase_exp(), 3);  // XZ = -iY
}

TEST(Pauli, TwoSiteProductMatchesDense) {
  PauliString p = PauliString::parse("X1 Z2"), q = PauliString::parse("Z1 Z2");
  PauliString r = p * q;
  EXPECT_EQ(r, PauliString::parse("-i Y1", 2));
  EXPECT_TRUE(exactly_equal(oracle::dense("XZ") * oracle::dense("ZZ"), oracle::dense("YI", cplx(0, -1))));
}

TEST(Pauli, DenseMatchesKroneckerOracle) {
  for (int n = 1; n <= 3; ++n)
    for (const PauliString& p : all_strings(n))
      for (int ph = 0; ph < 4; ++ph) {
        PauliString q = p.with_phase(ph);
        EXPECT_TRUE(exactly_equal(to_dense(q), oracle::dense(letters(q), i_pow(ph)))) << q.to_string();
      }
}

TEST(Pauli, DenseSmallExamples) {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  EXPECT_TRUE(exactly_equal(to_dense(PauliString::parse("X1")), x));
  EXPECT_TRUE(exactly_equal(to_dense(PauliString(2)), Matrix::Identity(4, 4)));
  Matrix my(2, 2);
  my << 0, -1, 1, 0;
  EXPECT_TRUE(exactly_equal(to_dense(PauliString::parse("-i Y1")), my));
}

TEST(Pauli, ProductIsDenseHomomorphismExhaustiveTwoSites) {
  auto all = all_strings(2);
  for (const auto& p : all)
    for (const auto& q : all) {
      PauliString pq = (p.times_i(1)) * q;
      EXPECT_TRUE(exactly_equal(to_dense(pq), to_dense(p.times_i(1)) * to_dense(q)));
    }
}

TEST(Pauli, AssociativityExhaustiveTwoSites) {
  auto all = all_strings(2);
  for (const auto& p : all)
    for (const auto& q : all)
      for (const auto& r : all) EXPECT_EQ((p * q) * r, p * (q * r));
}

TEST(Pauli, SquareIsScalar) {
  for (const auto& p : all_strings(3)) EXPECT_TRUE((p * p).is_identity());
}

TEST(Pauli, CommutesAgreesWithDenseCommutator) {
  for (int n = 1; n <= 3; ++n) {
    auto all = all_strings(n);
    for (const auto& p : all)
      for (const auto& q : all) {
        Matrix a = to_dense(p), b = to_dense(q);
        bool dense_commute = (a * b - b * a).cwiseAbs().maxCoeff() == 0.0;
        EXPECT_EQ(commutes(p, q), dense_commute);
      }
  }
}

TEST(Pauli, CommutationExamples) {
  EXPECT_FALSE(commutes(PauliString::parse("X1"), PauliString::parse("Z1")));
  PauliString h1 = PauliString::parse("X1 X2 Z3", 6), h2 = PauliString::parse("X2 X3 Z4", 6),
              h4 = PauliString::parse("X4 X5 Z6", 6);
  EXPECT_FALSE(commutes(h1, h2));
  EXPECT_TRUE(commutes(h1, h4));
}

TEST(Pauli, HermitianFlagMatchesAdjoint) {
  for (const auto& p : all_strings(2))
    for (int ph = 0; ph < 4; ++ph) {
      PauliString q = p.with_phase(ph);
      Matrix d = to_dense(q);
      EXPECT_EQ(q.is_hermitian(), (d - d.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST(Pauli, TextRoundTrip) {
  for (const std::string s : {"+i X1 X2 Z3", "-1 Y2", "+1 I", "-i Z1 Y4"}) {
    PauliString p = PauliString::parse(s, 4);
    EXPECT_EQ(PauliString::parse(p.to_string(), 4), p);
  }
  EXPECT_EQ(PauliString::parse("+i X1 X2 Z3").to_string(), "+i X1 X2 Z3");
}

TEST(Pauli, ShiftAndTruncate) {
  PauliString p = PauliString::parse("X1 Z3", 5);
  EXPECT_EQ(p.shifted(2, 5), PauliString::parse("X3 Z5", 5));
  EXPECT_EQ(p.truncated(2), PauliString::parse("X1", 2));
  EXPECT_EQ(p.weight(), 2);
  EXPECT_EQ(p.max_site(), 3);
}

TEST(Pauli, Errors) {
  EXPECT_THROW(PauliString::parse("Q1"), ParseError);
  EXPECT_THROW(PauliString::parse("X0"), ParseError);
  EXPECT_THROW(multiply(PauliString(2), PauliString(3)), DimensionError);
  EXPECT_THROW(commutes(PauliString(2), PauliString(3)), DimensionError);
  EXPECT_THROW(to_dense(PauliString(dense_cap() + 1)), SizeError);
}
