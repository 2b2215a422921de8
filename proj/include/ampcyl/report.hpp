#ifndef AMPCYL_REPORT_HPP
#define AMPCYL_REPORT_HPP

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>

#include "ampcyl/verify.hpp"

namespace ampcyl {

namespace detail {

inline nlohmann::ordered_json ray_json(const Ray2& r) {
  return nlohmann::ordered_json::array({r.x().str(), r.y().str()});
}

inline nlohmann::ordered_json wedge_json(const Wedge& w) {
  nlohmann::ordered_json j;
  switch (w.kind()) {
    case Wedge::Kind::Zero: j["kind"] = "zero"; break;
    case Wedge::Kind::Single:
      j["kind"] = "single";
      j["ray"] = ray_json(w.start());
      break;
    default:
      j["kind"] = "span";
      j["start"] = ray_json(w.start());
      j["end"] = ray_json(w.end());
  }
  return j;
}

} // namespace detail

inline nlohmann::ordered_json report_json(const CaseReport& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["type"] = r.type;
  j["passed"] = r.passed();
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    e["detail"] = c.detail;
    j["checks"].push_back(e);
  }
  j["warnings"] = r.warnings;

  j["lines"]["count"] = r.line_count;
  j["lines"]["violations"] = json::array();
  for (const auto& v : r.line_violations) {
    json e;
    e["index"] = v.index;
    e["class"] = v.cls.to_string();
    e["self_intersection"] = to_string(v.self_intersection);
    e["anticanonical_degree"] = to_string(v.degree);
    j["lines"]["violations"].push_back(e);
  }

  if (r.inference) {
    const auto& inf = *r.inference;
    json e;
    e["labels"] = inf.config.labels;
    e["edges"] = json::array();
    for (const auto& [a, b] : inf.config.edges()) e["edges"].push_back(json::array({a, b}));
    e["incidences"] = json::array();
    for (const auto& v : inf.incidences) {
      json row = json::array();
      for (const auto& x : v) row.push_back(to_string(x));
      e["incidences"].push_back(row);
    }
    e["gram"] = json::array();
    for (const auto& row : inf.gram)
      e["gram"].push_back(json::array({to_string(row[0]), to_string(row[1])}));
    e["accepted_assignments"] = inf.accepted;
    j["inference"] = e;
  } else {
    j["inference"] = nullptr;
  }

  j["mori"] = r.mori ? detail::wedge_json(r.mori->cone) : json(nullptr);
  j["ample"] = r.ample ? detail::wedge_json(*r.ample) : json(nullptr);
  j["minus_k"] = r.minus_k ? json::array({to_string(r.minus_k->coords[0]), to_string(r.minus_k->coords[1])})
                           : json(nullptr);

  j["inequalities"] = json::array();
  if (r.inequalities)
    for (const auto& m : r.inequalities->computed) {
      json e;
      e["generator"] = m.generator;
      e["form"] = format_form(m.form);
      e["printed_index"] = m.printed ? json(*m.printed) : json(nullptr);
      j["inequalities"].push_back(e);
    }

  j["polarity"] = json::array();
  for (const auto& [n, w] : r.polarity) {
    json e;
    e["cylinder"] = n;
    e["cone"] = detail::wedge_json(w);
    j["polarity"].push_back(e);
  }

  j["coverage"] = json::array();
  for (const auto& o : r.coverage) {
    json e;
    e["cylinders"] = o.cylinders;
    e["expected"] = o.expect_covered ? "covered" : "not covered";
    e["covered"] = o.certificate.covered;
    e["witness"] = o.certificate.witness ? detail::ray_json(*o.certificate.witness) : json(nullptr);
    e["chain"] = json::array();
    for (const auto& s : o.certificate.chain) {
      json step;
      step["from"] = detail::ray_json(s.from);
      step["to"] = detail::ray_json(s.to);
      step["piece"] = o.cylinders[s.piece];
      e["chain"].push_back(step);
    }
    j["coverage"].push_back(e);
  }
  return j;
}

// Short form used by `verify`.
inline std::string verify_text(const CaseReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.type;
  if (!r.warnings.empty()) os << " (" << r.warnings.size() << " warning" << (r.warnings.size() > 1 ? "s" : "") << ")";
  os << "\n";
  for (const auto& c : r.checks)
    if (c.status == Status::Fail && (c.name != "coverage" || r.coverage.empty()))
      os << "  " << c.name << ": " << c.detail << "\n";
  for (const auto& o : r.coverage) {
    if (!o.certificate.covered)
      os << "  " << format_set(o.cylinders) << " NOT COVERED, witness "
         << o.certificate.witness->to_string() << (o.ok() ? " (expected)" : "") << "\n";
    else if (!o.ok())
      os << "  " << format_set(o.cylinders) << " covered, expected NOT COVERED\n";
  }
  for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
  return os.str();
}

// Full report used by `report`.
inline std::string report_text(const CaseReport& r) {
  std::ostringstream os;
  os << "case " << r.type << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    os << "  " << to_string(c.status) << "  " << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  if (r.inference) {
    os << "  configuration:";
    for (const auto& [a, b] : r.inference->config.edges()) os << " " << a << "-" << b;
    os << "\n";
  }
  if (r.mori) os << "  Mori cone " << r.mori->cone.to_string() << "\n";
  if (r.ample) os << "  ample cone (open) " << r.ample->to_string() << "\n";
  if (r.inequalities)
    for (const auto& m : r.inequalities->computed)
      os << "  " << m.generator << ": " << format_form(m.form) << " > 0"
         << (m.printed ? "" : "  [unprinted]") << "\n";
  for (const auto& [n, w] : r.polarity) os << "  Pol(" << n << ") = " << w.to_string() << "\n";
  for (const auto& o : r.coverage) {
    os << "  " << format_set(o.cylinders) << ": " << (o.certificate.covered ? "covered" : "NOT COVERED");
    if (o.certificate.witness) os << ", witness " << o.certificate.witness->to_string();
    os << (o.ok() ? "" : "  [unexpected]") << "\n";
    for (const auto& s : o.certificate.chain)
      os << "    " << (s.arc() ? "arc " + s.from.to_string() + ".." + s.to.to_string() : "ray " + s.from.to_string())
         << " in Pol(" << o.cylinders[s.piece] << ")\n";
  }
  for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
  return os.str();
}

} // namespace ampcyl

#endif // AMPCYL_REPORT_HPP
