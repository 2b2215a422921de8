#ifndef AMPCYL_BUNDLE_HPP
#define AMPCYL_BUNDLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ampcyl/bundled_cases_data.hpp"
#include "ampcyl/cases.hpp"

namespace ampcyl {

// The 13 compiled-in cases, in canonical order.
inline const std::vector<CaseFile>& bundled_cases() {
  static const std::vector<CaseFile> all = [] {
    std::vector<CaseFile> out;
    for (auto text : detail::bundled_case_sources) out.push_back(load_case(text));
    return out;
  }();
  return all;
}

inline std::optional<CaseFile> bundled_case(const std::string& type) {
  for (const auto& c : bundled_cases())
    if (c.type_label == type) return c;
  return std::nullopt;
}

} // namespace ampcyl

#endif // AMPCYL_BUNDLE_HPP
