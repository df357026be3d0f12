// Demo: locate the first pair of distinct theta divisors, living on abelian
// varieties of different dimension, whose Gauss maps have the same degree.
// The scan walks every proved locus up to the requested genus, then the two
// sides of the first hit are recomputed through all three routes.

#include <iostream>

#include "gaussdeg/scan.hpp"

using namespace gaussdeg;

int main() {
  const int g_max = 30;
  std::cout << "scanning proved loci for cross-genus degree collisions, g <= "
            << g_max << "\n";

  ScanReport report = scan_collisions(g_max);
  if (report.records.empty()) {
    std::cout << "no collisions found\n";
    return 0;
  }

  for (const auto& record : report.records) {
    const auto& hit = std::get<CollisionRecord>(record);
    std::cout << "\ncollision: (g=" << hit.g_a << ", delta=(" << hit.delta_a
              << "), t=" << hit.t_a << ")  ==  (g=" << hit.g_b << ", delta=("
              << hit.delta_b << "), t=" << hit.t_b << ")\n"
              << "shared degree: " << hit.degree << "\n";

    for (const auto& side :
         {std::pair{hit.g_a, std::pair{hit.delta_a, hit.t_a}},
          std::pair{hit.g_b, std::pair{hit.delta_b, hit.t_b}}}) {
      LocusSpec spec(side.first, PolarizationType::parse(side.second.first),
                     side.second.second);
      std::cout << "  g=" << spec.g() << " delta=(" << spec.delta().str()
                << ") t=" << spec.t() << ": dim sing = " << spec.dim_sing()
                << ", codim = " << spec.codim() << "\n"
                << "    closed form  " << to_decimal(gauss_degree_locus(spec))
                << "\n"
                << "    Euler route  "
                << to_decimal(gauss_degree_locus(spec, DegreeMethod::Euler))
                << "\n"
                << "    smooth bound " << to_decimal(gauss_degree_smooth(spec.g()))
                << "\n";
    }
  }
  return 0;
}
