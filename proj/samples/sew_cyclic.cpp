// Sews a few vertices onto C(7,4) and prints what comes out.

#include <iostream>

#include "sewkit/cyclic.hpp"
#include "sewkit/neighbourly.hpp"
#include "sewkit/sewing.hpp"
#include "sewkit/tower.hpp"

int main() {
  using namespace sewkit;
  SimplicialPolytope p = cyclic_polytope(7, 4);
  std::cout << "C(7,4): " << p.num_facets() << " facets\n";
  for (int step = 1; step <= 3; ++step) {
    const auto towers = find_towers(p, 1);
    const UniversalTower& t = towers.front();
    std::cout << "  tower";
    for (const TowerPair& tp : t.pairs()) std::cout << " {" << p.label(tp.x) << "," << p.label(tp.y) << "}";
    p = sew(p, t);
    std::cout << " -> " << p.num_vertices() << " vertices, " << p.num_facets() << " facets, neighbourly "
              << (is_neighbourly(p) ? "yes" : "no") << "\n";
  }
  for (VertexSet f : p.facets()) {
    for (VertexId v : f) std::cout << p.label(v) << ' ';
    std::cout << '\n';
  }
}
