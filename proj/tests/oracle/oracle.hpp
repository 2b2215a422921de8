#ifndef AMPCYL_TESTS_ORACLE_HPP
#define AMPCYL_TESTS_ORACLE_HPP

// Brute-force cross-checks. Deliberately does not call the library's cone
// algorithms; only the value types are shared.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "ampcyl/cone2.hpp"
#include "ampcyl/errors.hpp"
#include "ampcyl/lattice.hpp"

namespace oracle {

using ampcyl::BigInt;
using ampcyl::Ray2;
using ampcyl::Wedge;

struct FareyFan {
  int N;
  std::vector<Ray2> rays;
};

// Primitive (p, q) with |p|, |q| <= N, ordered by p then q.
inline FareyFan farey_fan(int N) {
  FareyFan f{N, {}};
  for (int p = -N; p <= N; ++p)
    for (int q = -N; q <= N; ++q)
      if ((p != 0 || q != 0) && std::gcd(std::abs(p), std::abs(q)) == 1) f.rays.emplace_back(p, q);
  return f;
}

inline BigInt cr(const Ray2& u, const Ray2& v) { return u.x() * v.y() - u.y() * v.x(); }

inline bool strictly_inside(const Wedge& w, const Ray2& r) {
  switch (w.kind()) {
    case Wedge::Kind::Zero: return false;
    case Wedge::Kind::Single: return w.start().x() == r.x() && w.start().y() == r.y();
    default: return cr(w.start(), r) > 0 && cr(r, w.end()) > 0;
  }
}

struct SweepResult {
  bool covered;
  std::optional<Ray2> witness;
};

inline SweepResult sweep_coverage(const Wedge& target, const std::vector<Wedge>& pieces, int N) {
  auto covered = [&](const Ray2& r) {
    for (const auto& p : pieces)
      if (strictly_inside(p, r)) return true;
    return false;
  };
  for (const auto& r : farey_fan(N).rays)
    if (strictly_inside(target, r) && !covered(r)) return {false, r};

  std::vector<Ray2> ev{target.start(), target.end()};
  for (const auto& p : pieces)
    if (p.kind() != Wedge::Kind::Zero)
      for (const Ray2& r : {p.start(), p.end()})
        if (strictly_inside(target, r)) ev.push_back(r);
  // insertion sort by angle from the target start
  auto before = [&](const Ray2& a, const Ray2& b) {
    if (a == b) return false;
    if (a == target.start()) return true;
    if (b == target.start()) return false;
    return cr(a, b) > 0;
  };
  for (std::size_t i = 1; i < ev.size(); ++i)
    for (std::size_t j = i; j > 0 && before(ev[j], ev[j - 1]); --j) std::swap(ev[j], ev[j - 1]);
  for (std::size_t i = 0; i + 1 < ev.size(); ++i) {
    if (ev[i] == ev[i + 1]) continue;
    Ray2 m(BigInt(ev[i].x() + ev[i + 1].x()), BigInt(ev[i].y() + ev[i + 1].y()));
    if (!covered(m)) return {false, m};
  }
  return {true, std::nullopt};
}

inline std::pair<Ray2, Ray2> brute_extremal(const std::vector<Ray2>& rays) {
  if (rays.empty()) throw ampcyl::NotSalient("no rays");
  if (std::all_of(rays.begin(), rays.end(), [&](const Ray2& r) { return r == rays[0]; }))
    return {rays[0], rays[0]};
  for (const auto& r : rays)
    for (const auto& s : rays) {
      if (cr(r, s) <= 0) continue;
      bool all = true;
      for (const auto& t : rays)
        if (cr(r, t) < 0 || cr(t, s) < 0) {
          all = false;
          break;
        }
      if (all) return {r, s};
    }
  throw ampcyl::NotSalient("rays fit no salient cone");
}

// d l - sum m_i e_i with sum m = 3d - 1, sum m^2 = d^2 + 1.
inline std::vector<ampcyl::DivisorClass> enumerate_line_classes(int n = 8) {
  if (n != 8) throw ampcyl::UnsupportedRank("line classes are enumerated only for n = 8");
  const ampcyl::BlowupLattice lat{8};
  std::vector<ampcyl::DivisorClass> out;
  std::vector<int> m(8);
  // Cauchy-Schwarz: (3d-1)^2 <= 8 (d^2+1).
  for (int d = 0; (3 * d - 1) * (3 * d - 1) <= 8 * (d * d + 1); ++d) {
    const int sum = 3 * d - 1, sq = d * d + 1;
    const int bound = static_cast<int>(std::sqrt(static_cast<double>(sq))) + 1;
    auto rec = [&](auto&& self, int i, int s, int q) -> void {
      const int left = 8 - i;
      if (left == 0) {
        if (s == sum && q == sq) {
          ampcyl::Vector v{ampcyl::Rational(d)};
          for (int x : m) v.push_back(ampcyl::Rational(-x));
          out.emplace_back(lat, std::move(v));
        }
        return;
      }
      const int rs = sum - s, rq = sq - q;
      if (rq < 0 || static_cast<long long>(rs) * rs > static_cast<long long>(left) * rq) return;
      for (int x = -bound; x <= bound; ++x) {
        m[i] = x;
        self(self, i + 1, s + x, q + x * x);
      }
    };
    rec(rec, 0, 0, 0);
  }
  return out;
}

} // namespace oracle

#endif // AMPCYL_TESTS_ORACLE_HPP
