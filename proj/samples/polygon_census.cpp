// Lists the reflexive polygons with their vertex counts and the position of
// the vertex sum, then names the three pentagons.
#include <iostream>

#include "reflex/reflex.hpp"

int main() {
  using namespace reflex;
  const auto classes = enumerate_reflexive_polygons();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& c = classes[k];
    std::cout << "polygon-" << k + 1 << ": " << c.vertex_count << " vertices"
              << (c.smooth ? ", smooth" : "") << ", nu " << to_string(c.nu_kind) << "\n";
  }
  for (const auto& [name, c] : five_vertex_taxonomy(classes)) {
    std::cout << to_string(name) << ":";
    for (const auto& v : c.representative.vertices()) std::cout << " (" << to_string(v, ",") << ")";
    std::cout << "\n";
  }
}
