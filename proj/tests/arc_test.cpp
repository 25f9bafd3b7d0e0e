#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "generators.hpp"
#include "oracles.hpp"
#include "troploc/arc.hpp"
#include "troploc/error.hpp"

using namespace troploc;

namespace {

using Coord = std::map<long, Rational>;

Series cusp() { return Series::over_orthant(2, {{{0, 2}, 1}, {{3, 0}, -2}, {{2, 1}, 1}}); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

oracle::Poly dense(const Coord& c, std::size_t len) {
  oracle::Poly p(len, 0);
  for (const auto& [e, v] : c) {
    if (e < static_cast<long>(len)) p[static_cast<std::size_t>(e)] = v;
  }
  return p;
}

// Polynomial coordinates of order >= 1 with up to three terms of degree <= 6.
std::vector<Coord> random_coords(gen::Engine& rng, std::size_t rank) {
  std::vector<Coord> out(rank);
  for (auto& c : out) {
    const long count = gen::uniform(rng, 1, 3);
    for (long k = 0; k < count; ++k) c[gen::uniform(rng, 1, 6)] = gen::nonzero_rational(rng);
  }
  return out;
}

}  // namespace

TEST(ArcWeight, Examples) {
  EXPECT_EQ(arc_weight(make_exact_arc({{{2, 1}}, {{3, 1}}}, 10)), (LatticeVector{2, 3}));
  EXPECT_EQ(arc_weight(make_exact_arc({{{4, 1}}, {{6, 1}, {7, 1}}}, 10)), (LatticeVector{4, 6}));
  EXPECT_EQ(arc_weight(make_exact_arc({{{1, 1}}, {{1, 1}}, {{1, 1}}}, 5)), (LatticeVector{1, 1, 1}));
  EXPECT_EQ(arc_weight(make_float_arc({{{2, 1.0}}, {{3, std::sqrt(2.0)}}}, 10)), (LatticeVector{2, 3}));
}

TEST(ArcWeight, FloatToleranceDropsNoise) {
  const FloatArc a = make_float_arc({{{1, 1e-14}, {2, 1.0}}, {{3, 1.0}}}, 10);
  EXPECT_EQ(arc_weight(a), (LatticeVector{2, 3}));
  EXPECT_EQ(arc_weight(a, 0.0), (LatticeVector{1, 3}));
}

TEST(ArcWeight, Errors) {
  EXPECT_EQ(code_of([] { arc_weight(make_exact_arc({{{15, 1}}, {{3, 1}}}, 12)); }), Errc::undetermined_weight);
  EXPECT_EQ(code_of([] { arc_weight(make_exact_arc({{}, {{3, 1}}}, 12)); }), Errc::undetermined_weight);
  // A pole leaves the orthant.
  EXPECT_EQ(code_of([] { arc_weight(make_exact_arc({{{-1, 1}}, {{3, 1}}}, 12)); }), Errc::invalid_input);
}

TEST(ArcWeight, PerCoordinatePrecision) {
  ExactArc a = make_exact_arc({{{2, 1}}, {{9, 1}}}, 12);
  a.precision = {12, 8};
  EXPECT_EQ(code_of([&] { arc_weight(a); }), Errc::undetermined_weight);
  a.precision = {12, 10};
  EXPECT_EQ(arc_weight(a), (LatticeVector{2, 9}));
}

TEST(Evaluate, CuspOnItsParametrization) {
  // x = 2t^2, y = 4t^3 - 2t^4 + t^5/2: the t^6 terms cancel.
  const ExactArc a = make_exact_arc({{{2, 2}}, {{3, 4}, {4, -2}, {5, Rational(1, 2)}}}, 12);
  const Evaluation<Rational> ev = evaluate_on_arc(cusp(), a);
  EXPECT_EQ(ev.validity, 15);
  EXPECT_FALSE(ev.terms.count(6));
  const oracle::Poly p = oracle::substitute(gen::terms_of(cusp()), {dense(a.coords[0], 15), dense(a.coords[1], 15)}, 15);
  for (long k = 0; k < 15; ++k) {
    const Rational got = ev.terms.count(k) ? ev.terms.at(k) : Rational(0);
    EXPECT_EQ(got, p[static_cast<std::size_t>(k)]) << k;
  }
}

TEST(Evaluate, LinearForm) {
  const Series f = Series::over_orthant(2, {{{1, 0}, 1}, {{0, 1}, 1}});
  const auto ev = evaluate_on_arc(f, make_exact_arc({{{1, 1}}, {{1, -1}, {2, 1}}}, kExact));
  EXPECT_EQ(ev.validity, kExact);
  EXPECT_EQ(ev.terms, (std::map<long, Rational>{{2, 1}}));
}

TEST(Semivaluation, Examples) {
  const ExactArc a = make_exact_arc({{{2, 2}}, {{3, 4}, {4, -2}, {5, Rational(1, 2)}}}, 12);
  const Series xy = Series::over_orthant(2, {{{1, 0}, 1}, {{0, 1}, 1}});
  const auto v = semivaluation_on(a, {xy, cusp()});
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].value, 2);
  EXPECT_EQ(v[1].value, 10);

  // y^2 - 2x^3 vanishes identically on (t^2, sqrt(2) t^3).
  const FloatArc b = make_float_arc({{{2, 1.0}}, {{3, std::sqrt(2.0)}}}, kExact);
  const Series g = Series::over_orthant(2, {{{0, 2}, 1}, {{3, 0}, -2}});
  const auto w = semivaluation_on(b, {g});
  EXPECT_TRUE(w[0].infinite());
  EXPECT_EQ(w[0].to_string(), "inf");

  // Truncated: infinite only up to the validity order.
  const ExactArc c = make_exact_arc({{{2, 1}}, {{3, 1}}}, 8);
  const Series h = Series::over_orthant(2, {{{0, 2}, 1}, {{3, 0}, -1}});
  const auto u = semivaluation_on(c, {h});
  EXPECT_TRUE(u[0].infinite());
  EXPECT_EQ(u[0].validity, 11);
  EXPECT_EQ(u[0].to_string(), "inf(>=11)");
}

TEST(Semivaluation, ZeroSeriesRejected) {
  const ExactArc a = make_exact_arc({{{1, 1}}, {{1, 1}}}, 5);
  EXPECT_EQ(code_of([&] { semivaluation_on(a, {Series(Cone::orthant(2), {})}); }), Errc::zero_series);
}

TEST(ArcProperty, EvaluationMatchesSubstitution) {
  gen::Engine rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rank = 2 + trial % 2;
    const auto coords = random_coords(rng, rank);
    const ExactArc a = make_exact_arc(coords, kExact);
    const oracle::Terms t = gen::random_terms(rng, rank, 5, 4);
    const auto ev = evaluate_on_arc(gen::series_of(rank, t), a);
    ASSERT_EQ(ev.validity, kExact);
    const std::size_t len = 80;
    std::vector<oracle::Poly> x;
    for (const auto& c : coords) x.push_back(dense(c, len));
    const oracle::Poly p = oracle::substitute(t, x, len);
    for (std::size_t k = 0; k < len; ++k) {
      const long e = static_cast<long>(k);
      const Rational got = ev.terms.count(e) ? ev.terms.at(e) : Rational(0);
      ASSERT_EQ(got, p[k]) << trial << " at t^" << k;
    }
  }
}

TEST(ArcProperty, SemivaluationAxioms) {
  gen::Engine rng(72);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rank = 2 + trial % 2;
    const ExactArc a = make_exact_arc(random_coords(rng, rank), kExact);
    const oracle::Terms f = gen::random_terms(rng, rank, 4, 3);
    const oracle::Terms g = gen::random_terms(rng, rank, 4, 3);
    oracle::Terms sum = f;
    for (const auto& [m, c] : g) sum[m] += c;
    for (auto it = sum.begin(); it != sum.end();) it = it->second == 0 ? sum.erase(it) : std::next(it);

    std::vector<Series> elems{gen::series_of(rank, f), gen::series_of(rank, g),
                              gen::series_of(rank, oracle::multiply(f, g))};
    if (!sum.empty()) elems.push_back(gen::series_of(rank, sum));
    const auto v = semivaluation_on(a, elems);
    if (v[0].infinite() || v[1].infinite()) {
      EXPECT_TRUE(v[2].infinite());
      continue;
    }
    EXPECT_EQ(*v[2].value, *v[0].value + *v[1].value);
    if (v.size() == 4 && !v[3].infinite()) EXPECT_GE(*v[3].value, std::min(*v[0].value, *v[1].value));
  }
}

TEST(ArcProperty, MonomialsPairWithWeight) {
  gen::Engine rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rank = 2 + trial % 3;
    const ExactArc a = make_exact_arc(random_coords(rng, rank), kExact);
    const oracle::Vec m = gen::random_point(rng, rank, 0, 5);
    if (std::all_of(m.begin(), m.end(), [](long x) { return x == 0; })) continue;
    const auto v = semivaluation_on(a, {gen::series_of(rank, {{m, 1}})});
    EXPECT_EQ(Integer(*v[0].value), pairing(arc_weight(a), gen::lattice(m, Lattice::M)));
  }
}

TEST(ArcProperty, ReparametrizationScales) {
  gen::Engine rng(74);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rank = 2;
    const auto coords = random_coords(rng, rank);
    const long k = gen::uniform(rng, 2, 4);
    std::vector<Coord> scaled(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      for (const auto& [e, c] : coords[i]) scaled[i][k * e] = c;
    }
    const ExactArc a = make_exact_arc(coords, kExact), b = make_exact_arc(scaled, kExact);
    EXPECT_EQ(arc_weight(b), Integer(k) * arc_weight(a));
    const Series f = gen::series_of(rank, gen::random_terms(rng, rank, 4, 4));
    const auto va = semivaluation_on(a, {f}), vb = semivaluation_on(b, {f});
    ASSERT_EQ(va[0].infinite(), vb[0].infinite());
    if (!va[0].infinite()) EXPECT_EQ(*vb[0].value, k * *va[0].value);
  }
}
