#ifndef AMPCYL_CONTRACTION_HPP
#define AMPCYL_CONTRACTION_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ampcyl/errors.hpp"
#include "ampcyl/linalg.hpp"
#include "ampcyl/rational.hpp"

namespace ampcyl {

enum class Morphism { F, FG };

inline std::string to_string(Morphism m) { return m == Morphism::F ? "f" : "f∘g"; }

struct CurveConfiguration {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> adjacency;
  std::vector<int> self_intersections;

  std::size_t size() const { return labels.size(); }

  static CurveConfiguration build(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                  int self = -2) {
    CurveConfiguration c;
    const std::size_t n = labels.size();
    c.labels = std::move(labels);
    c.adjacency.assign(n, std::vector<int>(n, 0));
    c.self_intersections.assign(n, self);
    for (auto [a, b] : edges) {
      if (a >= n || b >= n || a == b) throw DimensionMismatch("bad configuration edge");
      c.adjacency[a][b] = c.adjacency[b][a] = 1;
    }
    return c;
  }

  Matrix gram() const {
    const std::size_t n = size();
    Matrix g = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        g[i][j] = i == j ? Rational(self_intersections[i]) : Rational(adjacency[i][j]);
    return g;
  }

  bool negative_definite() const { return is_negative_definite(gram()); }

  std::vector<std::pair<std::string, std::string>> edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (adjacency[i][j]) out.emplace_back(labels[i], labels[j]);
    return out;
  }
};

// ---- Dynkin labels ----

struct DynkinComponent {
  char family;  // 'A', 'D', 'E'
  int rank;
  auto operator<=>(const DynkinComponent&) const = default;
};

// Components sorted by decreasing rank, then family.
struct DynkinType {
  std::vector<DynkinComponent> components;

  void normalize() {
    std::sort(components.begin(), components.end(), [](const auto& x, const auto& y) {
      if (x.rank != y.rank) return x.rank > y.rank;
      return x.family > y.family;
    });
  }
  int nodes() const {
    int s = 0;
    for (const auto& c : components) s += c.rank;
    return s;
  }
  bool operator==(const DynkinType&) const = default;
};

inline std::string to_string(const DynkinType& t) {
  std::string out;
  for (std::size_t i = 0; i < t.components.size();) {
    std::size_t j = i;
    while (j < t.components.size() && t.components[j] == t.components[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += t.components[i].family + std::to_string(t.components[i].rank);
    i = j;
  }
  return out.empty() ? "0" : out;
}

// "A5+2A1", "A7''"; primes are dropped.
inline DynkinType parse_dynkin(const std::string& label) {
  DynkinType t;
  std::size_t i = 0;
  auto fail = [&] { throw NotADE("cannot read Dynkin label '" + label + "'"); };
  while (i < label.size()) {
    int mult = 0;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i])))
      mult = mult * 10 + (label[i++] - '0');
    if (mult == 0) mult = 1;
    if (i == label.size()) fail();
    char fam = label[i++];
    if (fam != 'A' && fam != 'D' && fam != 'E') fail();
    int rank = 0;
    std::size_t start = i;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i])))
      rank = rank * 10 + (label[i++] - '0');
    if (i == start) fail();
    bool ok = (fam == 'A' && rank >= 1) || (fam == 'D' && rank >= 4) ||
              (fam == 'E' && rank >= 6 && rank <= 8);
    if (!ok) fail();
    while (i < label.size() && label[i] == '\'') ++i;
    for (int k = 0; k < mult; ++k) t.components.push_back({fam, rank});
    if (i < label.size()) {
      if (label[i] != '+') fail();
      ++i;
    }
  }
  t.normalize();
  return t;
}

// Standard diagram: A chain; D chain 0..n-2 with node n-1 on n-3;
// E chain 0..n-2 with node n-1 on node 2.
inline std::vector<std::pair<std::size_t, std::size_t>> dynkin_edges(const DynkinType& t) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t off = 0;
  for (const auto& c : t.components) {
    std::size_t n = c.rank;
    std::size_t chain = c.family == 'A' ? n : n - 1;
    for (std::size_t i = 0; i + 1 < chain; ++i) edges.emplace_back(off + i, off + i + 1);
    if (c.family == 'D') edges.emplace_back(off + n - 3, off + n - 1);
    if (c.family == 'E') edges.emplace_back(off + 2, off + n - 1);
    off += n;
  }
  return edges;
}

inline DynkinType recognize_dynkin(const CurveConfiguration& config) {
  const std::size_t n = config.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (config.self_intersections[i] != -2)
      throw NotADE("curve " + config.labels[i] + " has self-intersection " +
                   std::to_string(config.self_intersections[i]));
    for (std::size_t j = 0; j < n; ++j)
      if (config.adjacency[i][j] != config.adjacency[j][i] || (i != j && config.adjacency[i][j] > 1) ||
          config.adjacency[i][j] < 0 || (i == j && config.adjacency[i][j] != 0))
        throw NotADE("adjacency is not a simple graph");
  }
  std::vector<int> comp(n, -1);
  DynkinType t;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> nodes{s};
    comp[s] = static_cast<int>(s);
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (config.adjacency[nodes[k]][j] && comp[j] < 0) {
          comp[j] = static_cast<int>(s);
          nodes.push_back(j);
        }
    std::size_t edges = 0;
    std::vector<std::size_t> branch;
    for (auto v : nodes) {
      int d = 0;
      for (std::size_t j = 0; j < n; ++j) d += config.adjacency[v][j];
      edges += d;
      if (d >= 4) throw NotADE("node " + config.labels[v] + " has degree " + std::to_string(d));
      if (d == 3) branch.push_back(v);
    }
    edges /= 2;
    const int size = static_cast<int>(nodes.size());
    if (edges != nodes.size() - 1) throw NotADE("component contains a cycle");
    if (branch.size() > 1) throw NotADE("component has several branch nodes");
    if (branch.empty()) {
      t.components.push_back({'A', size});
      continue;
    }
    // Arm lengths from the branch node.
    std::vector<int> arms;
    std::size_t b = branch[0];
    for (std::size_t j = 0; j < n; ++j) {
      if (!config.adjacency[b][j]) continue;
      int len = 1;
      std::size_t prev = b, cur = j;
      for (;;) {
        std::size_t next = n;
        for (std::size_t k = 0; k < n; ++k)
          if (config.adjacency[cur][k] && k != prev) next = k;
        if (next == n) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
      t.components.push_back({'D', size});
    else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
      t.components.push_back({'E', size});
    else
      throw NotADE("arm lengths (" + std::to_string(arms[0]) + "," + std::to_string(arms[1]) + "," +
                   std::to_string(arms[2]) + ") are not of Dynkin type");
  }
  t.normalize();
  return t;
}

// ---- pullbacks ----

// c with (-G) c = incidence.
inline Vector solve_pullback(const CurveConfiguration& config, const Vector& incidence) {
  if (incidence.size() != config.size())
    throw DimensionMismatch("incidence length " + std::to_string(incidence.size()) + " vs " +
                            std::to_string(config.size()) + " curves");
  Matrix m = config.gram();
  for (auto& row : m)
    for (auto& x : row) x = -x;
  auto c = solve(std::move(m), incidence);
  if (!c) throw SingularConfiguration("configuration Gram matrix is singular");
  return *c;
}

inline Vector incidence_from_coefficients(const CurveConfiguration& config, const Vector& coeffs) {
  if (coeffs.size() != config.size()) throw DimensionMismatch("coefficient vector length");
  Vector out = mat_vec(config.gram(), coeffs);
  for (auto& x : out) x = -x;
  return out;
}

inline Rational quotient_pairing(const Rational& xy_strict, const Vector& incidence_x,
                                 const Vector& coeffs_y) {
  if (incidence_x.size() != coeffs_y.size())
    throw DimensionMismatch("incidence and coefficient vectors differ in length");
  return xy_strict + dot(incidence_x, coeffs_y);
}

// One formula f*(x) = x~ + sum c_j E_j. Strict pairings: self = x~.x~,
// cross = x~.y~, other_self = y~.y~ for the other basis class y.
struct PullbackDatum {
  std::string target;
  Rational strict_self;
  Rational strict_cross;
  Rational strict_other_self;
  std::vector<std::pair<std::string, Rational>> coefficients;
  bool operator==(const PullbackDatum&) const = default;

  Rational coefficient(const std::string& label) const {
    for (const auto& [k, v] : coefficients)
      if (k == label) return v;
    return 0;
  }
};

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

struct Inference {
  CurveConfiguration config;
  std::vector<Vector> coefficients;  // per datum, over config.labels
  std::vector<Vector> incidences;    // per datum
  Matrix2 gram;
  std::size_t accepted = 0;          // distinct accepted assignments seen
};

namespace detail {

inline std::vector<std::string> inference_labels(const std::vector<PullbackDatum>& data) {
  std::vector<std::string> labels;
  for (const auto& d : data)
    for (const auto& [k, v] : d.coefficients)
      if (std::find(labels.begin(), labels.end(), k) == labels.end()) labels.push_back(k);
  return labels;
}

} // namespace detail

// Exhaustive search over placements of the labels on the nodes of the valid
// Dynkin diagram. Distinct adjacency patterns are tested once. Among accepted
// ones the lexicographically greatest upper-triangular adjacency (labels in
// order of first appearance, phantoms last) is returned.
inline std::optional<Inference> infer_configuration(const DynkinType& type,
                                                    const std::vector<PullbackDatum>& data,
                                                    const Matrix2& target_gram,
                                                    Morphism morphism = Morphism::F) {
  if (morphism != Morphism::F)
    throw UnsupportedMorphism("configuration inference needs a pure f contraction");
  if (data.size() != 2) throw DimensionMismatch("inference needs two pullback formulas");
  for (const auto& d : data)
    for (const auto& [k, v] : d.coefficients)
      if (v < 0) return std::nullopt;

  auto labels = detail::inference_labels(data);
  const std::size_t nodes = static_cast<std::size_t>(type.nodes());
  if (labels.size() > nodes) return std::nullopt;
  for (std::size_t p = 1; labels.size() < nodes; ++p) labels.push_back("_p" + std::to_string(p));
  const std::size_t n = nodes;

  std::vector<Vector> coeffs;
  for (const auto& d : data) {
    Vector c;
    for (const auto& l : labels) c.push_back(d.coefficient(l));
    coeffs.push_back(std::move(c));
  }
  const Matrix2 strict{{{data[0].strict_self, data[0].strict_cross},
                        {data[0].strict_cross, data[0].strict_other_self}}};

  // Integer prefilter: scaled coefficients D*c, incidence must be a
  // nonnegative multiple of D. Exact rational check afterwards.
  std::vector<std::vector<long long>> scaled;
  std::vector<long long> scale;
  bool fast = true;
  for (const auto& c : coeffs) {
    BigInt d = 1;
    for (const auto& x : c) d = boost::multiprecision::lcm(d, den(x));
    std::vector<long long> row;
    for (const auto& x : c) {
      BigInt v = num(x) * (d / den(x));
      if (abs(v) > (BigInt(1) << 40)) fast = false;
      row.push_back(fast ? v.convert_to<long long>() : 0);
    }
    if (d > (BigInt(1) << 20)) fast = false;
    scale.push_back(fast ? d.convert_to<long long>() : 1);
    scaled.push_back(std::move(row));
  }

  auto edges = dynkin_edges(type);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<bool>> seen;
  std::optional<Inference> best;
  std::vector<bool> best_key;
  std::size_t accepted = 0;
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));

  do {
    // node v carries label perm[v]
    for (auto& row : adj) std::fill(row.begin(), row.end(), 0);
    for (auto [a, b] : edges) adj[perm[a]][perm[b]] = adj[perm[b]][perm[a]] = 1;
    if (fast) {
      bool ok = true;
      for (std::size_t d = 0; d < scaled.size() && ok; ++d)
        for (std::size_t i = 0; i < n && ok; ++i) {
          long long v = 2 * scaled[d][i];
          for (std::size_t j = 0; j < n; ++j)
            if (adj[i][j]) v -= scaled[d][j];
          if (v < 0 || v % scale[d] != 0) ok = false;
        }
      if (!ok) continue;
    }
    std::vector<bool> key;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) key.push_back(adj[i][j] != 0);
    if (!seen.insert(key).second) continue;

    CurveConfiguration cfg;
    cfg.labels = labels;
    cfg.adjacency = adj;
    cfg.self_intersections.assign(n, -2);
    std::vector<Vector> inc;
    bool ok = true;
    for (const auto& c : coeffs) {
      auto v = incidence_from_coefficients(cfg, c);
      for (const auto& x : v)
        if (x < 0 || !is_integer(x)) ok = false;
      if (!ok) break;
      inc.push_back(std::move(v));
    }
    if (!ok) continue;
    Matrix2 g;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) g[i][j] = quotient_pairing(strict[i][j], inc[i], coeffs[j]);
    if (g != target_gram) continue;
    ++accepted;
    if (!best || key > best_key) {
      best = Inference{cfg, coeffs, inc, g, 0};
      best_key = key;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (best) best->accepted = accepted;
  return best;
}

} // namespace ampcyl

#endif // AMPCYL_CONTRACTION_HPP
