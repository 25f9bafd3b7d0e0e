#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "troploc/error.hpp"
#include "troploc/lattice.hpp"

using namespace troploc;

namespace {

Errc code_of(const auto& thunk) {
  try {
    thunk();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

}  // namespace

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing(LatticeVector{2, 3}, LatticeVector({3, 0}, Lattice::M)), 6);
  EXPECT_EQ(pairing(LatticeVector::unit(5, 0), LatticeVector::unit(5, 0, Lattice::M)), 1);
  EXPECT_EQ(pairing(LatticeVector::zero(3), LatticeVector({7, -2, 9}, Lattice::M)), 0);
}

TEST(Pairing, RankMismatch) {
  EXPECT_EQ(code_of([] { pairing(LatticeVector{1, 2}, LatticeVector{1, 2, 3}); }), Errc::rank_mismatch);
}

TEST(Primitive, Examples) {
  EXPECT_EQ(primitive(LatticeVector{4, 6}), (LatticeVector{2, 3}));
  EXPECT_EQ(primitive(LatticeVector{2, 3}), (LatticeVector{2, 3}));
  EXPECT_EQ(primitive(LatticeVector{21, 14, 6}), (LatticeVector{21, 14, 6}));
  EXPECT_EQ(primitive(LatticeVector{0, -4, 6}), (LatticeVector{0, -2, 3}));
  EXPECT_TRUE(primitive(LatticeVector{4, 6}).is_primitive());
}

TEST(Primitive, ZeroVectorRejected) {
  EXPECT_EQ(code_of([] { primitive(LatticeVector{0, 0}); }), Errc::zero_vector);
}

TEST(Primitive, BigCoordinates) {
  const Integer big("123456789012345678901234567890");
  LatticeVector v({big * 6, big * 10});
  EXPECT_EQ(primitive(v), (LatticeVector{3, 5}));
}

TEST(LatticeProperty, PrimitiveIdempotentAndMatchesGcd) {
  gen::Engine rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    oracle::Vec v = gen::random_point(rng, 4, -30, 30);
    if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) continue;
    const LatticeVector p = primitive(gen::lattice(v));
    EXPECT_EQ(primitive(p), p);
    EXPECT_EQ(p, gen::lattice(oracle::primitive(v)));
  }
}

TEST(LatticeProperty, PairingBilinear) {
  gen::Engine rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const oracle::Vec w1 = gen::random_point(rng, 3, -20, 20), w2 = gen::random_point(rng, 3, -20, 20);
    const oracle::Vec m = gen::random_point(rng, 3, -20, 20);
    const long a = gen::uniform(rng, -5, 5), b = gen::uniform(rng, -5, 5);
    const LatticeVector lhs = Integer(a) * gen::lattice(w1) + Integer(b) * gen::lattice(w2);
    const LatticeVector mm = gen::lattice(m, Lattice::M);
    EXPECT_EQ(pairing(lhs, mm), a * pairing(gen::lattice(w1), mm) + b * pairing(gen::lattice(w2), mm));
    EXPECT_EQ(pairing(gen::lattice(w1), mm), oracle::dot(w1, m));
  }
}

TEST(RationalVector, LowestTerms) {
  RationalVector v{Rational(4, 6), Rational(-3, 9)};
  EXPECT_EQ(v[0].get_num(), 2);
  EXPECT_EQ(v[0].get_den(), 3);
  EXPECT_EQ(v[1], Rational(-1, 3));
  EXPECT_EQ(v.primitive_direction(), (LatticeVector{2, -1}));
}

TEST(LinearAlgebra, DeterminantMatchesCofactorExpansion) {
  gen::Engine rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    IntMatrix m(n, std::vector<Integer>(n));
    std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const long x = gen::uniform(rng, -6, 6);
        m[i][j] = x;
        q[i][j] = x;
      }
    }
    EXPECT_EQ(Rational(determinant(m)), oracle::determinant(q));
    EXPECT_EQ(matrix_rank(m) == n, oracle::determinant(q) != 0);
  }
}

TEST(LinearAlgebra, KernelBasisIsAnnihilatedAndSaturated) {
  const IntMatrix rows = {{2, 4, 6}, {1, 2, 3}};
  const IntMatrix k = kernel_basis(rows, 3);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) {
    EXPECT_EQ(2 * v[0] + 4 * v[1] + 6 * v[2], 0);
    EXPECT_EQ(content(v), 1);
  }
}

TEST(LinearAlgebra, HermiteTransformIsUnimodular) {
  const IntMatrix rows = {{2, 3, 0}};
  const IntMatrix v = column_hermite_transform(rows, 3);
  EXPECT_EQ(abs(determinant(v)), 1);
  // rows * V has zeros beyond the first column.
  for (std::size_t j = 1; j < 3; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += rows[0][i] * v[i][j];
    EXPECT_EQ(s, 0);
  }
  const IntMatrix inv = unimodular_inverse(v);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += v[i][k] * inv[k][j];
      EXPECT_EQ(s, i == j ? 1 : 0);
    }
  }
}
