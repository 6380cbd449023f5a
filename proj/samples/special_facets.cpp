// Prints the slice distribution of every special facet for the members of
// the classification list in a given dimension (default 4).
#include <cstdlib>
#include <iostream>

#include "reflex/reflex.hpp"

int main(int argc, char** argv) {
  using namespace reflex;
  const std::size_t d = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
  for (const auto& e : classification_entries(d)) {
    const auto& p = e.polytope;
    std::cout << e.name() << ": " << p.num_vertices() << " vertices, " << p.facets().size() << " facets, nu "
              << to_string(nu_kind(p)) << "\n";
    for (std::size_t k : special_facet_indices(p)) {
      const SliceDistribution s = hyperplane_distribution(p, k);
      std::cout << "  facet " << k << ":";
      for (auto it = s.counts.rbegin(); it != s.counts.rend(); ++it) std::cout << " " << it->first << ":" << it->second;
      if (p.num_vertices() + 1 == 3 * p.dim()) std::cout << " case " << to_string(classify_case(p, k));
      std::cout << "\n";
    }
  }
}
