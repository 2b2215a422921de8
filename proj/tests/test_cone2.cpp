#include <gtest/gtest.h>

#include "ampcyl/cone2.hpp"
#include "support/generators.hpp"

using namespace ampcyl;

namespace {

Vec2 v(Rational a, Rational b) { return {a, b}; }
Wedge span(long long a, long long b, long long c, long long d) { return Wedge::span(Ray2(a, b), Ray2(c, d)); }

} // namespace

TEST(Ray2, Normalizes) {
  EXPECT_EQ(Ray2(4, -6), Ray2(2, -3));
  EXPECT_EQ(Ray2(0, 5), Ray2(0, 1));
  EXPECT_EQ(Ray2::of(v(Rational(1, 3), -1)), Ray2(1, -3));
  EXPECT_EQ(Ray2::of(v(Rational(-1, 6), 2)), Ray2(-1, 12));
  EXPECT_FALSE(Ray2(1, 0) == Ray2(-1, 0));
  EXPECT_THROW(Ray2(0, 0), DimensionMismatch);
}

TEST(Ray2, NormalizationIdempotent) {
  gen::Rng rng(gen::kSeed);
  for (int i = 0; i < 1000; ++i) {
    long long x = rng.integer(-50, 50), y = rng.integer(-50, 50);
    if (!x && !y) continue;
    Ray2 r(x, y);
    EXPECT_EQ(Ray2(r.x(), r.y()), r);
    EXPECT_EQ(gcd(abs(r.x()), abs(r.y())), 1);
    long long k = rng.integer(1, 20);
    EXPECT_EQ(Ray2(x * k, y * k), r);
  }
}

TEST(Ray2, CircularOrderIsTotalInsideSalientWedges) {
  gen::Rng rng(gen::kSeed + 1);
  for (int it = 0; it < 300; ++it) {
    Wedge w = rng.span();
    std::vector<Ray2> inside{w.start(), w.end()};
    for (int k = 0; k < 6; ++k) {
      Ray2 r = rng.ray();
      if (in_closed(w, r)) inside.push_back(r);
    }
    for (const auto& a : inside)
      for (const auto& b : inside) {
        int rel = (cross(a, b) > 0) + (cross(b, a) > 0) + (a == b);
        EXPECT_EQ(rel, 1);
      }
  }
}

TEST(Wedge, SpanOrientation) {
  auto w = span(0, 1, 1, -3);
  EXPECT_EQ(w.start(), Ray2(1, -3));
  EXPECT_EQ(w.end(), Ray2(0, 1));
  EXPECT_EQ(span(1, -3, 0, 1), w);
  EXPECT_EQ(span(2, 2, 1, 1).kind(), Wedge::Kind::Single);
  EXPECT_THROW(span(1, 0, -1, 0), NotSalient);
}

TEST(ConeFromGenerators, Examples) {
  EXPECT_EQ(cone_from_generators({v(0, 1), v(Rational(1, 6), 0), v(Rational(1, 3), -1)}), span(0, 1, 1, -3));
  EXPECT_EQ(cone_from_generators({v(2, 0)}), Wedge::single(Ray2(1, 0)));
  EXPECT_THROW(cone_from_generators({v(1, 0), v(-1, 0)}), NotSalient);
  EXPECT_EQ(cone_from_generators({}).kind(), Wedge::Kind::Zero);
  EXPECT_EQ(cone_from_generators({v(0, 0)}).kind(), Wedge::Kind::Zero);
  EXPECT_THROW(cone_from_generators({v(1, 0), v(0, 1), v(-1, -1)}), NotSalient);
  EXPECT_THROW(cone_from_generators({v(1, 0), v(-1, 1), v(-1, -1)}), NotSalient);
  // boundary crossing the positive x-axis
  EXPECT_EQ(cone_from_generators({v(1, 1), v(1, -1), v(1, 0)}), span(1, -1, 1, 1));
  EXPECT_EQ(cone_from_generators({v(-1, 1), v(-1, -1)}), span(-1, 1, -1, -1));
}

TEST(InRelint, Examples) {
  auto w = span(0, 1, 1, -3);
  EXPECT_TRUE(in_relint(w, Ray2(1, 1)));
  EXPECT_FALSE(in_relint(w, Ray2(0, 1)));
  EXPECT_FALSE(in_relint(w, Ray2(1, -3)));
  EXPECT_FALSE(in_relint(w, Ray2(-1, 1)));
  EXPECT_TRUE(in_relint(Wedge::single(Ray2(1, 0)), Ray2(1, 0)));
  EXPECT_FALSE(in_relint(Wedge::single(Ray2(1, 0)), Ray2(1, 1)));
  EXPECT_FALSE(in_relint(Wedge::zero(), Ray2(1, 0)));
}

TEST(CoversOpen, Examples) {
  auto t = span(0, 1, 1, -3);
  EXPECT_TRUE(covers_open(t, {t}).covered);

  auto d5 = covers_open(span(-2, 9, 4, -9), {span(0, 1, 4, -9), span(-2, 9, 2, -3)});
  EXPECT_TRUE(d5.covered);
  EXPECT_FALSE(d5.witness);

  auto gap = covers_open(t, {span(0, 1, 1, 0), span(1, 0, 1, -3)});
  EXPECT_FALSE(gap.covered);
  ASSERT_TRUE(gap.witness);
  EXPECT_EQ(*gap.witness, Ray2(1, 0));

  auto none = covers_open(t, {});
  EXPECT_FALSE(none.covered);
  EXPECT_TRUE(none.witness);
  EXPECT_TRUE(in_relint(t, *none.witness));
}

TEST(CoversOpen, SinglePiecesPlugEventRays) {
  auto t = span(0, 1, 1, -3);
  auto c = covers_open(t, {span(0, 1, 1, 0), span(1, 0, 1, -3), Wedge::single(Ray2(1, 0))});
  EXPECT_TRUE(c.covered);
  auto alone = covers_open(t, {Wedge::single(Ray2(1, 0))});
  EXPECT_FALSE(alone.covered);
}

TEST(CoversOpen, ChainConcatenatesToTarget) {
  auto t = span(-2, 9, 4, -9);
  std::vector<Wedge> pieces{span(0, 1, 4, -9), span(-2, 9, 2, -3)};
  auto c = covers_open(t, pieces);
  ASSERT_TRUE(c.covered);
  std::vector<CoverStep> arcs;
  for (const auto& s : c.chain)
    if (s.arc()) arcs.push_back(s);
  ASSERT_FALSE(arcs.empty());
  EXPECT_EQ(arcs.front().from, t.start());
  EXPECT_EQ(arcs.back().to, t.end());
  for (std::size_t i = 0; i + 1 < arcs.size(); ++i) {
    EXPECT_EQ(arcs[i].to, arcs[i + 1].from);
    EXPECT_GT(cross(arcs[i].from, arcs[i].to), 0);
  }
  for (const auto& s : c.chain) EXPECT_TRUE(in_relint(pieces[s.piece], midpoint(s.from, s.to)));
}

TEST(CoversOpen, TargetCoversItselfAndEmptyFails) {
  gen::Rng rng(gen::kSeed + 2);
  for (int i = 0; i < 500; ++i) {
    auto t = rng.span();
    EXPECT_TRUE(covers_open(t, {t}).covered);
    auto e = covers_open(t, {});
    EXPECT_FALSE(e.covered);
    ASSERT_TRUE(e.witness);
    EXPECT_TRUE(in_relint(t, *e.witness));
  }
}

TEST(CoversOpen, WitnessIsUncovered) {
  gen::Rng rng(gen::kSeed + 3);
  for (int i = 0; i < 500; ++i) {
    auto t = rng.span();
    std::vector<Wedge> pieces;
    for (int k = rng.integer(1, 4); k > 0; --k) pieces.push_back(rng.span());
    auto c = covers_open(t, pieces);
    if (c.covered) continue;
    ASSERT_TRUE(c.witness);
    EXPECT_TRUE(in_relint(t, *c.witness));
    for (const auto& p : pieces) EXPECT_FALSE(in_relint(p, *c.witness)) << gen::seed_note(gen::kSeed + 3);
  }
  EXPECT_THROW(covers_open(Wedge::single(Ray2(1, 0)), {}), NotSalient);
}

TEST(PositiveWeights, Examples) {
  auto w = positive_weights(v(3, 0), {v(1, 0), v(1, 0)});
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::vector<Rational>{Rational(3, 2), Rational(3, 2)}));

  auto w2 = positive_weights(v(3, 0), {v(1, 0), v(2, 0)});
  ASSERT_TRUE(w2);
  EXPECT_EQ(*w2, (std::vector<Rational>{Rational(3, 2), Rational(3, 4)}));

  std::vector<Vec2> g{v(1, 0), v(0, 1), v(1, -3)};
  auto w3 = positive_weights(v(1, 1), g);
  ASSERT_TRUE(w3);
  EXPECT_EQ(*w3, (std::vector<Rational>{Rational(1, 2), Rational(5, 2), Rational(1, 2)}));
  Vec2 s{0, 0};
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_GT((*w3)[i], 0);
    s[0] += (*w3)[i] * g[i][0];
    s[1] += (*w3)[i] * g[i][1];
  }
  EXPECT_EQ(s, v(1, 1));

  EXPECT_FALSE(positive_weights(v(0, 1), {v(1, 0), v(1, 1)}));
  EXPECT_FALSE(positive_weights(v(1, 1), {v(1, 0), v(1, 1)}));
  EXPECT_FALSE(positive_weights(v(1, 1), {}));
  EXPECT_FALSE(positive_weights(v(0, 0), {v(1, 0)}));
}

TEST(PositiveWeights, NonSalientGenerators) {
  std::vector<Vec2> g{v(1, 0), v(-1, 0), v(0, 1)};
  auto w = positive_weights(v(5, 2), g);
  ASSERT_TRUE(w);
  Vec2 s{0, 0};
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_GT((*w)[i], 0);
    s[0] += (*w)[i] * g[i][0];
    s[1] += (*w)[i] * g[i][1];
  }
  EXPECT_EQ(s, v(5, 2));
  EXPECT_FALSE(positive_weights(v(1, 0), g));  // on the boundary line
  EXPECT_FALSE(positive_weights(v(0, -1), g));
}

TEST(PositiveWeights, AgreesWithRelint) {
  gen::Rng rng(gen::kSeed + 4);
  for (int it = 0; it < 1000; ++it) {
    std::vector<Vec2> g;
    for (int k = rng.integer(1, 5); k > 0; --k) g.push_back(rng.vec());
    Vec2 t = rng.vec();
    if (is_zero(t)) continue;
    std::optional<Wedge> w;
    try {
      w = cone_from_generators(g);
    } catch (const NotSalient&) {
      continue;
    }
    auto wt = positive_weights(t, g);
    EXPECT_EQ(wt.has_value(), in_relint(*w, Ray2::of(t))) << gen::seed_note(gen::kSeed + 4);
    if (!wt) continue;
    Vec2 s{0, 0};
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_GT((*wt)[i], 0);
      s[0] += (*wt)[i] * g[i][0];
      s[1] += (*wt)[i] * g[i][1];
    }
    EXPECT_EQ(s, t);
  }
}
