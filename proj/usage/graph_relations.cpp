// Relations of the graph quotient for a path and a 4-cycle.
#include <iostream>

#include "nckoszul/nckoszul.hpp"

using namespace nckoszul;

int main() {
  for (auto const* text : {"n=3; 1-2 2-3", "n=4; 1-2 2-3 3-4 1-4"}) {
    auto gp = qn_graph_instances<Rational>(parse_graph_text(text));
    std::cout << text << ": " << gp.instances.family_i.size() << " + "
              << gp.instances.family_ii.size() << " + " << gp.instances.family_iii.size()
              << " instances span " << gp.presentation.relations.size() << " relations\n";
    std::cout << to_text(gp.presentation) << "\n";
  }
}
