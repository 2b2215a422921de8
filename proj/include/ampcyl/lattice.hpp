#ifndef AMPCYL_LATTICE_HPP
#define AMPCYL_LATTICE_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ampcyl/errors.hpp"
#include "ampcyl/linalg.hpp"
#include "ampcyl/rational.hpp"

namespace ampcyl {

// Picard lattice of P^2 blown up in n points, basis l, e_1..e_n.
struct BlowupLattice {
  int n = 0;
  int rank() const { return n + 1; }
  bool operator==(const BlowupLattice&) const = default;
};

class DivisorClass {
public:
  DivisorClass(BlowupLattice lattice, Vector coords)
      : lattice_(lattice), coords_(std::move(coords)) {
    if (lattice_.n < 0) throw DimensionMismatch("negative number of blow-ups");
    if (coords_.size() != static_cast<std::size_t>(lattice_.rank()))
      throw DimensionMismatch("class has " + std::to_string(coords_.size()) +
                              " coordinates, lattice rank is " + std::to_string(lattice_.rank()));
  }

  static DivisorClass zero(BlowupLattice lat) {
    return DivisorClass(lat, Vector(lat.rank(), Rational(0)));
  }
  static DivisorClass line(BlowupLattice lat) {
    auto c = zero(lat);
    c.coords_[0] = 1;
    return c;
  }
  static DivisorClass exceptional(BlowupLattice lat, int i) {
    if (i < 1 || i > lat.n) throw DimensionMismatch("e_" + std::to_string(i) + " out of range");
    auto c = zero(lat);
    c.coords_[i] = 1;
    return c;
  }

  // Reads "6l-2e1-e10" style expressions; 'L' is accepted for l.
  static DivisorClass parse(BlowupLattice lat, std::string_view text) {
    auto c = zero(lat);
    std::size_t i = 0;
    auto fail = [&] { throw ParseError("bad class expression '" + std::string(text) + "'"); };
    while (i < text.size()) {
      while (i < text.size() && text[i] == ' ') ++i;
      if (i == text.size()) break;
      int sign = 1;
      if (text[i] == '+' || text[i] == '-') {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      Rational k = j > i ? Rational(BigInt(std::string(text.substr(i, j - i)))) : Rational(1);
      i = j;
      if (i == text.size()) fail();
      if (text[i] == 'l' || text[i] == 'L') {
        c.coords_[0] += sign * k;
        ++i;
      } else if (text[i] == 'e') {
        ++i;
        j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) fail();
        int idx = std::stoi(std::string(text.substr(i, j - i)));
        if (idx < 1 || idx > lat.n) fail();
        c.coords_[idx] += sign * k;
        i = j;
      } else {
        fail();
      }
    }
    return c;
  }

  const BlowupLattice& lattice() const { return lattice_; }
  const Vector& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  DivisorClass operator+(const DivisorClass& o) const { return combine(o, 1); }
  DivisorClass operator-(const DivisorClass& o) const { return combine(o, -1); }
  friend DivisorClass operator*(const Rational& k, const DivisorClass& c) {
    Vector v = c.coords_;
    for (auto& x : v) x *= k;
    return DivisorClass(c.lattice_, std::move(v));
  }

  bool operator==(const DivisorClass&) const = default;

  std::string to_string() const {
    std::string out;
    auto term = [&](const Rational& k, const std::string& sym) {
      if (k == 0) return;
      Rational a = k < 0 ? Rational(-k) : k;
      if (!out.empty() || k < 0) out += k < 0 ? "-" : "+";
      if (a != 1) out += ampcyl::to_string(a);
      out += sym;
    };
    term(coords_[0], "l");
    for (int i = 1; i <= lattice_.n; ++i) term(coords_[i], "e" + std::to_string(i));
    return out.empty() ? "0" : out;
  }

private:
  DivisorClass combine(const DivisorClass& o, int s) const {
    if (!(lattice_ == o.lattice_)) throw MismatchedLattice("classes live in different lattices");
    Vector v = coords_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += s * o.coords_[i];
    return DivisorClass(lattice_, std::move(v));
  }

  BlowupLattice lattice_;
  Vector coords_;
};

inline Rational intersect(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.lattice() == b.lattice()))
    throw MismatchedLattice("intersecting classes of n=" + std::to_string(a.lattice().n) +
                            " and n=" + std::to_string(b.lattice().n));
  Rational s = a[0] * b[0];
  for (int i = 1; i <= a.lattice().n; ++i) s -= a[i] * b[i];
  return s;
}

inline Matrix gram_matrix(const BlowupLattice& lat) {
  Matrix g = zero_matrix(lat.rank(), lat.rank());
  for (int i = 0; i < lat.rank(); ++i) {
    auto ei = i == 0 ? DivisorClass::line(lat) : DivisorClass::exceptional(lat, i);
    for (int j = 0; j < lat.rank(); ++j) {
      auto ej = j == 0 ? DivisorClass::line(lat) : DivisorClass::exceptional(lat, j);
      g[i][j] = intersect(ei, ej);
    }
  }
  return g;
}

// -K = 3l - sum e_i.
inline DivisorClass anticanonical(const BlowupLattice& lat) {
  Vector v(lat.rank(), Rational(-1));
  v[0] = 3;
  return DivisorClass(lat, std::move(v));
}

inline bool is_line_class(const DivisorClass& c) {
  return intersect(c, c) == -1 && intersect(anticanonical(c.lattice()), c) == 1;
}

struct LineViolation {
  std::size_t index;
  DivisorClass cls;
  Rational self_intersection;
  Rational degree;  // -K.c
};

inline std::vector<LineViolation> validate_line_table(const std::vector<DivisorClass>& lines) {
  std::vector<LineViolation> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& c = lines[i];
    if (i > 0 && !(c.lattice() == lines[0].lattice()))
      throw MismatchedLattice("line table mixes lattices");
    Rational sq = intersect(c, c);
    Rational deg = intersect(anticanonical(c.lattice()), c);
    if (sq != -1 || deg != 1) out.push_back({i, c, sq, deg});
  }
  return out;
}

} // namespace ampcyl

#endif // AMPCYL_LATTICE_HPP
