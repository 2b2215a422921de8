// Verifies one bundled case and prints its coverage certificate.
#include <iostream>

#include "ampcyl/ampcyl.hpp"

int main(int argc, char** argv) {
  const std::string type = argc > 1 ? argv[1] : "D5+A2";
  auto c = ampcyl::bundled_case(type);
  if (!c) {
    std::cerr << "unknown case " << type << "\n";
    return 2;
  }
  auto amp = ampcyl::case_ample_wedge(*c);
  std::cout << type << ": Amp = " << amp.to_string() << "\n";
  for (const auto& u : c->cylinders)
    std::cout << "  Pol(" << u.name << ") = " << ampcyl::polarity_cone(*c, u.name).to_string() << "\n";
  for (const auto& set : c->expected.covering_sets) {
    auto cert = ampcyl::coverage_verdict(*c, set);
    std::cout << "  " << ampcyl::format_set(set) << (cert.covered ? " covers" : " does not cover") << "\n";
    for (const auto& s : cert.chain) {
      if (s.arc()) std::cout << "    arc " << s.from.to_string() << ".." << s.to.to_string();
      else std::cout << "    ray " << s.from.to_string();
      std::cout << " in " << set[s.piece] << "\n";
    }
  }
  return 0;
}
