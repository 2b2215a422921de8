#ifndef AMPCYL_VERIFY_HPP
#define AMPCYL_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ampcyl/cases.hpp"
#include "ampcyl/cone2.hpp"
#include "ampcyl/contraction.hpp"
#include "ampcyl/lattice.hpp"
#include "ampcyl/surface.hpp"

namespace ampcyl {

inline Wedge polarity_cone(const CaseFile& c, const std::string& cylinder) {
  std::vector<Vec2> gens;
  for (const auto& n : c.cylinder(cylinder).boundary) gens.push_back(c.resolve(n).coords);
  return cone_from_generators(gens);
}

inline Wedge case_ample_wedge(const CaseFile& c) {
  return ample_wedge(c.basis, mori_extremal(c.mori_classes()));
}

inline CoverageCertificate coverage_verdict(const CaseFile& c, const CylinderSet& cylinders) {
  std::vector<Wedge> pieces;
  for (const auto& n : cylinders) pieces.push_back(polarity_cone(c, n));
  return covers_open(case_ample_wedge(c), pieces);
}

enum class Status { Pass, Fail, Skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    default: return "SKIP";
  }
}

struct CheckResult {
  std::string name;
  Status status;
  std::string detail;
};

struct CoverageOutcome {
  CylinderSet cylinders;
  bool expect_covered;
  CoverageCertificate certificate;
  bool ok() const { return certificate.covered == expect_covered; }
};

struct CaseReport {
  std::string type;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  std::size_t line_count = 0;
  std::vector<LineViolation> line_violations;
  std::optional<Inference> inference;
  std::optional<MoriResult> mori;
  std::optional<Wedge> ample;
  std::optional<InequalityReport> inequalities;
  std::optional<PushedClass> minus_k;
  std::vector<std::pair<std::string, Wedge>> polarity;
  std::vector<CoverageOutcome> coverage;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == Status::Fail) return false;
    return true;
  }
  const CheckResult* check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline std::string format_set(const CylinderSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
  return out + "}";
}

struct VerifyOptions {
  std::optional<CylinderSet> cylinders;  // replaces the expected covering sets
};

inline CaseReport verify_case(const CaseFile& c, const VerifyOptions& opt = {}) {
  CaseReport r;
  r.type = c.type_label;
  auto add = [&](std::string name, Status s, std::string detail = "") {
    r.checks.push_back({std::move(name), s, std::move(detail)});
  };

  // line table
  std::vector<DivisorClass> lines;
  for (const auto& l : c.lines) lines.push_back(l.cls);
  r.line_count = lines.size();
  r.line_violations = validate_line_table(lines);
  if (r.line_violations.empty()) {
    add("line_table", Status::Pass, std::to_string(lines.size()) + " classes");
  } else {
    std::string d;
    for (const auto& v : r.line_violations)
      d += c.lines[v.index].name + " (c^2=" + to_string(v.self_intersection) +
           ", -K.c=" + to_string(v.degree) + ") ";
    add("line_table", Status::Fail, d);
  }

  // inference
  if (c.morphism == Morphism::FG) {
    add("inference", Status::Skipped, "composite morphism f∘g");
  } else if (c.pullbacks.size() != 2) {
    add("inference", Status::Skipped, "no pullback formulas");
  } else {
    try {
      r.inference = infer_configuration(parse_dynkin(c.type_label), c.pullbacks, c.basis.gram());
      if (r.inference)
        add("inference", Status::Pass,
            "Gram reproduced; " + std::to_string(r.inference->accepted) + " accepted assignment(s)");
      else
        add("inference", Status::Fail, "no assignment reproduces the Gram matrix");
    } catch (const Error& e) {
      add("inference", Status::Fail, e.what());
    }
  }

  // Mori cone
  try {
    r.mori = mori_extremal(c.mori_classes());
    if (!r.mori->cone.is_span()) throw NotSalient("Mori cone is not two-dimensional");
    std::string outside;
    for (const auto& p : c.pushforwards)
      if (!is_zero(p.coords) && !in_closed(r.mori->cone, Ray2::of(p.coords))) outside += p.name + " ";
    if (outside.empty())
      add("mori", Status::Pass, r.mori->cone.to_string());
    else
      add("mori", Status::Fail, "pushed lines outside the Mori cone: " + outside);
  } catch (const Error& e) {
    r.mori.reset();
    add("mori", Status::Fail, e.what());
  }

  // ample cone
  if (r.mori && r.mori->cone.is_span()) {
    try {
      r.ample = ample_wedge(c.basis, *r.mori);
      add("ample", Status::Pass, r.ample->to_string());
    } catch (const Error& e) {
      add("ample", Status::Fail, e.what());
    }
  } else {
    add("ample", Status::Skipped, "no Mori cone");
  }

  // printed inequalities
  r.inequalities = inequality_report(c.basis, c.mori_classes(), c.printed_inequalities);
  for (const auto& w : r.inequalities->warnings) r.warnings.push_back(w);
  add("inequalities", Status::Pass,
      std::to_string(r.inequalities->warnings.size()) + " mismatch warning(s)");

  // polarity cones
  for (const auto& u : c.cylinders) {
    try {
      r.polarity.emplace_back(u.name, polarity_cone(c, u.name));
    } catch (const Error& e) {
      add("polarity", Status::Fail, u.name + ": " + e.what());
    }
  }
  auto pol = [&](const std::string& name) -> const Wedge* {
    for (const auto& [n, w] : r.polarity)
      if (n == name) return &w;
    return nullptr;
  };

  // anticanonical class
  try {
    r.minus_k = anticanonical_rank2(c.basis, c.pushforwards);
    const Wedge* u0 = pol("U0");
    if (!u0)
      add("anticanonical", Status::Fail, "no cylinder U0");
    else if (!in_relint(*u0, Ray2::of(r.minus_k->coords)))
      add("anticanonical", Status::Fail, "-K not in relint Pol(U0)");
    else
      add("anticanonical", Status::Pass,
          "-K = (" + to_string(r.minus_k->coords[0]) + ", " + to_string(r.minus_k->coords[1]) + ")");
  } catch (const Error& e) {
    add("anticanonical", Status::Fail, e.what());
  }

  // coverage
  if (!r.ample) {
    add("coverage", Status::Skipped, "no ample cone");
    return r;
  }
  std::vector<std::pair<CylinderSet, bool>> sets;
  if (opt.cylinders) {
    sets.emplace_back(*opt.cylinders, true);
  } else {
    for (const auto& s : c.expected.covering_sets) sets.emplace_back(s, true);
    for (const auto& s : c.expected.insufficient_sets) sets.emplace_back(s, false);
  }
  std::string detail;
  bool ok = true;
  for (const auto& [set, expect] : sets) {
    std::vector<Wedge> pieces;
    try {
      for (const auto& n : set) {
        const Wedge* w = pol(n);
        if (!w) throw UnknownCylinder("'" + n + "' in case " + c.type_label);
        pieces.push_back(*w);
      }
    } catch (const Error& e) {
      ok = false;
      detail += format_set(set) + ": " + e.what() + "; ";
      continue;
    }
    CoverageOutcome o{set, expect, covers_open(*r.ample, pieces)};
    ok = ok && o.ok();
    detail += format_set(set) + (o.certificate.covered ? " covered" : " NOT COVERED");
    if (o.certificate.witness) detail += ", witness " + o.certificate.witness->to_string();
    detail += "; ";
    r.coverage.push_back(std::move(o));
  }
  if (!detail.empty()) detail.resize(detail.size() - 2);
  add("coverage", ok ? Status::Pass : Status::Fail, detail);
  return r;
}

} // namespace ampcyl

#endif // AMPCYL_VERIFY_HPP
