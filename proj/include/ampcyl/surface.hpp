#ifndef AMPCYL_SURFACE_HPP
#define AMPCYL_SURFACE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ampcyl/cone2.hpp"
#include "ampcyl/contraction.hpp"
#include "ampcyl/errors.hpp"
#include "ampcyl/rational.hpp"

namespace ampcyl {

class Rank2Basis {
public:
  Rank2Basis() = default;
  Rank2Basis(std::array<std::string, 2> names, Matrix2 gram)
      : names_(std::move(names)), gram_(std::move(gram)) {
    if (gram_[0][1] != gram_[1][0]) throw SchemaError("basis Gram matrix is not symmetric");
    if (gram_[0][0] * gram_[1][1] - gram_[0][1] * gram_[1][0] == 0)
      throw SchemaError("basis Gram matrix is singular");
  }
  const std::array<std::string, 2>& names() const { return names_; }
  const Matrix2& gram() const { return gram_; }
  bool operator==(const Rank2Basis&) const = default;

private:
  std::array<std::string, 2> names_;
  Matrix2 gram_;
};

struct PushedClass {
  std::string name;
  Vec2 coords;
  bool operator==(const PushedClass&) const = default;
};

struct PolarizationQuery {
  Rational a, b;
};

// gram * coords: the linear form (coef of a, coef of b) of H -> H.C.
inline Vec2 pairing_form(const Rank2Basis& basis, const Vec2& c) {
  const auto& g = basis.gram();
  return {g[0][0] * c[0] + g[0][1] * c[1], g[1][0] * c[0] + g[1][1] * c[1]};
}

inline Rational pair(const Rank2Basis& basis, const Vec2& h, const Vec2& c) {
  Vec2 f = pairing_form(basis, c);
  return h[0] * f[0] + h[1] * f[1];
}

inline Rational pair(const Rank2Basis& basis, const PolarizationQuery& h, const PushedClass& c) {
  return pair(basis, Vec2{h.a, h.b}, c.coords);
}

struct MoriResult {
  Wedge cone = Wedge::zero();
  Ray2 first{1, 0}, second{1, 0};  // counterclockwise boundary
  std::vector<bool> extremal;      // per input class
};

inline MoriResult mori_extremal(const std::vector<PushedClass>& classes) {
  std::vector<Vec2> gens;
  for (const auto& c : classes) gens.push_back(c.coords);
  MoriResult m;
  m.cone = cone_from_generators(gens);
  if (m.cone.kind() == Wedge::Kind::Zero) throw NotSalient("no nonzero Mori generator");
  m.first = m.cone.start();
  m.second = m.cone.end();
  for (const auto& c : classes) {
    bool ext = !is_zero(c.coords) && (Ray2::of(c.coords) == m.first || Ray2::of(c.coords) == m.second);
    m.extremal.push_back(ext);
  }
  return m;
}

namespace detail {

// Nonzero H with H.r = 0, signed so that H.s > 0.
inline Ray2 dual_boundary(const Rank2Basis& basis, const Ray2& r, const Ray2& s) {
  Vec2 f = pairing_form(basis, r.vec());
  Ray2 h = Ray2::of(Vec2{Rational(-f[1]), f[0]});
  Rational p = pair(basis, h.vec(), s.vec());
  if (p == 0) throw DegenerateDual("extremal rays are orthogonal to the same class");
  return p > 0 ? h : -h;
}

} // namespace detail

// Open dual cone {H : H.r > 0 for both extremal rays}.
inline Wedge ample_wedge(const Rank2Basis& basis, const Ray2& r1, const Ray2& r2) {
  if (r1 == r2 || cross(r1, r2) == 0) throw DegenerateDual("Mori cone is not two-dimensional");
  Ray2 h1 = detail::dual_boundary(basis, r1, r2);
  Ray2 h2 = detail::dual_boundary(basis, r2, r1);
  if (cross(h1, h2) == 0) throw DegenerateDual("ample boundary rays coincide or oppose");
  return Wedge::span(h1, h2);
}

inline Wedge ample_wedge(const Rank2Basis& basis, const MoriResult& m) {
  return ample_wedge(basis, m.first, m.second);
}

struct InequalityMatch {
  std::string generator;
  Vec2 form;
  std::optional<std::size_t> printed;  // index into the printed list
};

struct InequalityReport {
  std::vector<InequalityMatch> computed;
  std::vector<std::size_t> unmatched_printed;
  std::vector<std::string> warnings;
};

inline bool same_form(const Vec2& u, const Vec2& v) {
  if (is_zero(u) || is_zero(v)) return is_zero(u) && is_zero(v);
  return cross(u, v) == 0 && u[0] * v[0] + u[1] * v[1] > 0;
}

inline std::string format_form(const Vec2& f) {
  std::string out;
  auto term = [&](const Rational& k, const char* var) {
    if (k == 0) return;
    Rational a = k < 0 ? Rational(-k) : k;
    if (!out.empty()) out += k < 0 ? " - " : " + ";
    else if (k < 0) out += "-";
    if (a != 1) out += to_string(a) + (is_integer(a) ? "" : "·");
    out += var;
  };
  term(f[0], "a");
  term(f[1], "b");
  return out.empty() ? "0" : out;
}

inline InequalityReport inequality_report(const Rank2Basis& basis,
                                          const std::vector<PushedClass>& generators,
                                          const std::vector<Vec2>& printed) {
  InequalityReport rep;
  std::vector<bool> used(printed.size(), false);
  for (const auto& g : generators) {
    InequalityMatch m{g.name, pairing_form(basis, g.coords), std::nullopt};
    for (std::size_t i = 0; i < printed.size(); ++i)
      if (same_form(m.form, printed[i])) {
        m.printed = i;
        used[i] = true;
        break;
      }
    if (!m.printed)
      rep.warnings.push_back("computed form " + format_form(m.form) + " > 0 (from " + g.name +
                             ") has no printed counterpart");
    rep.computed.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < printed.size(); ++i)
    if (!used[i]) {
      rep.unmatched_printed.push_back(i);
      rep.warnings.push_back("printed form " + format_form(printed[i]) +
                             " > 0 matches no generator");
    }
  return rep;
}

// Solves H.P = 1 over all pushed lines; requires H.H = 1.
inline PushedClass anticanonical_rank2(const Rank2Basis& basis,
                                       const std::vector<PushedClass>& pushed_lines) {
  std::vector<Vec2> rows;
  for (const auto& p : pushed_lines) rows.push_back(pairing_form(basis, p.coords));
  std::optional<Vec2> k;
  for (std::size_t i = 0; i < rows.size() && !k; ++i)
    for (std::size_t j = i + 1; j < rows.size() && !k; ++j) {
      Rational d = cross(rows[i], rows[j]);
      if (d == 0) continue;
      k = Vec2{(rows[j][1] - rows[i][1]) / d, (rows[i][0] - rows[j][0]) / d};
    }
  if (!k) throw InconsistentSystem("pushed lines do not span the rank-2 lattice");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Rational v = (*k)[0] * rows[i][0] + (*k)[1] * rows[i][1];
    if (v != 1)
      throw InconsistentSystem("-K." + pushed_lines[i].name + " = " + to_string(v) + ", expected 1");
  }
  Rational sq = pair(basis, *k, *k);
  if (sq != 1) throw NotUnimodular("(-K)^2 = " + to_string(sq));
  return {"-K", *k};
}

} // namespace ampcyl

#endif // AMPCYL_SURFACE_HPP
