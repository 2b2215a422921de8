#ifndef AMPCYL_CONE2_HPP
#define AMPCYL_CONE2_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ampcyl/errors.hpp"
#include "ampcyl/rational.hpp"

namespace ampcyl {

using Vec2 = std::array<Rational, 2>;

inline Rational cross(const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; }
inline bool is_zero(const Vec2& v) { return v[0] == 0 && v[1] == 0; }

// Primitive integer direction.
class Ray2 {
public:
  Ray2(BigInt x, BigInt y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_ == 0 && y_ == 0) throw DimensionMismatch("the zero vector spans no ray");
    BigInt g = gcd(abs(x_), abs(y_));
    x_ /= g;
    y_ /= g;
  }
  Ray2(long long x, long long y) : Ray2(BigInt(x), BigInt(y)) {}

  static Ray2 of(const Vec2& v) {
    BigInt l = boost::multiprecision::lcm(den(v[0]), den(v[1]));
    return Ray2(BigInt(num(v[0]) * (l / den(v[0]))), BigInt(num(v[1]) * (l / den(v[1]))));
  }

  const BigInt& x() const { return x_; }
  const BigInt& y() const { return y_; }
  Vec2 vec() const { return {Rational(x_), Rational(y_)}; }
  Ray2 operator-() const { return Ray2(BigInt(-x_), BigInt(-y_)); }

  bool operator==(const Ray2&) const = default;

  std::string to_string() const { return "(" + x_.str() + "," + y_.str() + ")"; }

private:
  BigInt x_, y_;
};

inline BigInt cross(const Ray2& u, const Ray2& v) { return u.x() * v.y() - u.y() * v.x(); }
inline BigInt dot(const Ray2& u, const Ray2& v) { return u.x() * v.x() + u.y() * v.y(); }

// Primitive direction of u + v.
inline Ray2 midpoint(const Ray2& u, const Ray2& v) {
  return Ray2(BigInt(u.x() + v.x()), BigInt(u.y() + v.y()));
}

// Total order by angle in [0, 2pi) from the positive x-axis.
inline bool angle_less(const Ray2& u, const Ray2& v) {
  auto half = [](const Ray2& r) { return (r.y() > 0 || (r.y() == 0 && r.x() > 0)) ? 0 : 1; };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

class Wedge {
public:
  enum class Kind { Zero, Single, Span };

  static Wedge zero() { return Wedge(Kind::Zero, Ray2(1, 0), Ray2(1, 0)); }
  static Wedge single(const Ray2& r) { return Wedge(Kind::Single, r, r); }
  // Boundary pair in either order; stored counterclockwise.
  static Wedge span(const Ray2& a, const Ray2& b) {
    BigInt c = cross(a, b);
    if (c > 0) return Wedge(Kind::Span, a, b);
    if (c < 0) return Wedge(Kind::Span, b, a);
    if (a == b) return single(a);
    throw NotSalient("opposite rays " + a.to_string() + " and " + b.to_string());
  }

  Kind kind() const { return kind_; }
  bool is_span() const { return kind_ == Kind::Span; }
  const Ray2& start() const { return start_; }
  const Ray2& end() const { return end_; }

  bool operator==(const Wedge&) const = default;

  std::string to_string() const {
    switch (kind_) {
      case Kind::Zero: return "Zero";
      case Kind::Single: return "Single" + start_.to_string();
      default: return "Span(" + start_.to_string() + "," + end_.to_string() + ")";
    }
  }

private:
  Wedge(Kind k, Ray2 s, Ray2 e) : kind_(k), start_(std::move(s)), end_(std::move(e)) {}
  Kind kind_;
  Ray2 start_, end_;
};

inline bool in_relint(const Wedge& w, const Ray2& r) {
  switch (w.kind()) {
    case Wedge::Kind::Zero: return false;
    case Wedge::Kind::Single: return r == w.start();
    default: return cross(w.start(), r) > 0 && cross(r, w.end()) > 0;
  }
}

inline bool in_closed(const Wedge& w, const Ray2& r) {
  switch (w.kind()) {
    case Wedge::Kind::Zero: return false;
    case Wedge::Kind::Single: return r == w.start();
    default: return cross(w.start(), r) >= 0 && cross(r, w.end()) >= 0;
  }
}

// Distinct rays sorted by angle; the salient hull is bounded by the two rays
// around the unique gap wider than a half-turn.
inline Wedge cone_from_generators(const std::vector<Vec2>& gens) {
  std::vector<Ray2> rays;
  for (const auto& g : gens)
    if (!is_zero(g)) rays.push_back(Ray2::of(g));
  if (rays.empty()) return Wedge::zero();
  std::sort(rays.begin(), rays.end(), angle_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (rays.size() == 1) return Wedge::single(rays[0]);
  const std::size_t k = rays.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Ray2& u = rays[i];
    const Ray2& v = rays[(i + 1) % k];
    if (cross(u, v) < 0) return Wedge::span(v, u);
  }
  throw NotSalient("generators are not contained in an open half-plane");
}

struct CoverStep {
  Ray2 from, to;        // from == to for an isolated event ray
  std::size_t piece;    // index of the covering piece
  bool arc() const { return !(from == to); }
};

struct CoverageCertificate {
  bool covered = false;
  std::vector<CoverStep> chain;
  std::optional<Ray2> witness;
};

// Open target covered by the relative interiors of the pieces. Uncovered
// sub-arcs take precedence over uncovered event rays as witnesses.
inline CoverageCertificate covers_open(const Wedge& target, const std::vector<Wedge>& pieces) {
  if (!target.is_span()) throw NotSalient("coverage target must be a two-dimensional wedge");
  std::vector<Ray2> events{target.start(), target.end()};
  for (const auto& p : pieces) {
    if (p.kind() == Wedge::Kind::Zero) continue;
    for (const Ray2& r : {p.start(), p.end()})
      if (in_relint(target, r)) events.push_back(r);
  }
  const Ray2 s = target.start();
  std::sort(events.begin(), events.end(), [&](const Ray2& a, const Ray2& b) {
    if (a == s) return !(b == s);
    if (b == s) return false;
    return cross(a, b) > 0;
  });
  events.erase(std::unique(events.begin(), events.end()), events.end());

  auto find_piece = [&](const Ray2& r) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (in_relint(pieces[i], r)) return i;
    return std::nullopt;
  };

  CoverageCertificate cert;
  std::optional<Ray2> bad_ray;
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    if (i > 0) {
      auto p = find_piece(events[i]);
      if (p) cert.chain.push_back({events[i], events[i], *p});
      else if (!bad_ray) bad_ray = events[i];
    }
    Ray2 m = midpoint(events[i], events[i + 1]);
    auto p = find_piece(m);
    if (!p) {
      cert.chain.clear();
      cert.witness = m;
      return cert;
    }
    cert.chain.push_back({events[i], events[i + 1], *p});
  }
  if (bad_ray) {
    cert.chain.clear();
    cert.witness = bad_ray;
    return cert;
  }
  cert.covered = true;
  return cert;
}

namespace detail {

// Nonnegative weights on at most two generators reaching v, if any.
inline std::optional<std::vector<Rational>> nonneg_combination(const Vec2& v,
                                                              const std::vector<Vec2>& g) {
  std::vector<Rational> w(g.size(), Rational(0));
  if (is_zero(v)) return w;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (is_zero(g[i]) || cross(g[i], v) != 0) continue;
    Rational k = g[i][0] != 0 ? v[0] / g[i][0] : v[1] / g[i][1];
    if (k > 0) {
      w[i] = k;
      return w;
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      Rational d = cross(g[i], g[j]);
      if (d <= 0) continue;
      Rational a = cross(v, g[j]) / d, b = cross(g[i], v) / d;
      if (a >= 0 && b >= 0) {
        w[i] = a;
        w[j] = b;
        return w;
      }
    }
  return std::nullopt;
}

} // namespace detail

// Strictly positive w with sum w_i g_i = target. Collinear generators share the
// target evenly; otherwise every generator except one representative per
// extremal ray carries the same weight, half the largest admissible value.
inline std::optional<std::vector<Rational>> positive_weights(const Vec2& target,
                                                             const std::vector<Vec2>& gens) {
  if (gens.empty() || is_zero(target)) return std::nullopt;
  const std::size_t k = gens.size();
  std::vector<Vec2> nonzero;
  for (const auto& g : gens)
    if (!is_zero(g)) nonzero.push_back(g);
  if (nonzero.empty()) return std::nullopt;

  std::optional<Wedge> w;
  try {
    w = cone_from_generators(nonzero);
  } catch (const NotSalient&) {
  }

  if (!w) {
    // Not salient: shrink by the full sum until the rest is a cone point.
    Vec2 sum{0, 0};
    for (const auto& g : gens) {
      sum[0] += g[0];
      sum[1] += g[1];
    }
    Rational lambda = 1;
    for (int it = 0; it < 256; ++it, lambda /= 2) {
      Vec2 rest{target[0] - lambda * sum[0], target[1] - lambda * sum[1]};
      auto mu = detail::nonneg_combination(rest, gens);
      if (!mu) continue;
      for (auto& x : *mu) x += lambda;
      return mu;
    }
    return std::nullopt;
  }

  Ray2 t = Ray2::of(target);
  if (!in_relint(*w, t)) return std::nullopt;
  std::vector<Rational> out(k, Rational(0));

  if (w->kind() == Wedge::Kind::Single) {
    for (std::size_t i = 0; i < k; ++i) {
      if (is_zero(gens[i])) {
        out[i] = 1;
        continue;
      }
      const auto& g = gens[i];
      Rational ratio = g[0] != 0 ? target[0] / g[0] : target[1] / g[1];
      out[i] = ratio / static_cast<long>(nonzero.size());
    }
    return out;
  }

  const Vec2 a = w->start().vec(), b = w->end().vec();
  std::optional<std::size_t> ia, ib;
  for (std::size_t i = 0; i < k; ++i) {
    if (is_zero(gens[i])) continue;
    Ray2 r = Ray2::of(gens[i]);
    if (!ia && r == w->start()) ia = i;
    else if (!ib && r == w->end()) ib = i;
  }
  // target = alpha a + beta b; each redundant generator pulls (alpha_r, beta_r).
  const Rational d = cross(a, b);
  auto coords = [&](const Vec2& v) {
    return std::array<Rational, 2>{cross(v, b) / d, cross(a, v) / d};
  };
  auto tc = coords(target);
  std::array<Rational, 2> rc{0, 0};
  for (std::size_t i = 0; i < k; ++i) {
    if (i == *ia || i == *ib) continue;
    auto c = coords(gens[i]);
    rc[0] += c[0];
    rc[1] += c[1];
  }
  std::optional<Rational> bound;
  for (int j = 0; j < 2; ++j)
    if (rc[j] > 0) {
      Rational lim = tc[j] / rc[j];
      if (!bound || lim < *bound) bound = lim;
    }
  Rational lambda = bound ? Rational(*bound / 2) : Rational(1);
  for (std::size_t i = 0; i < k; ++i)
    if (i != *ia && i != *ib) out[i] = lambda;
  Rational alpha = tc[0] - lambda * rc[0], beta = tc[1] - lambda * rc[1];
  out[*ia] = alpha * (a[0] != 0 ? a[0] / gens[*ia][0] : a[1] / gens[*ia][1]);
  out[*ib] = beta * (b[0] != 0 ? b[0] / gens[*ib][0] : b[1] / gens[*ib][1]);
  return out;
}

} // namespace ampcyl

#endif // AMPCYL_CONE2_HPP
