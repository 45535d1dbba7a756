// Complete the K3 relations and count the normal words they leave.
#include <iostream>

#include "nckoszul/nckoszul.hpp"

using namespace nckoszul;

int main() {
  auto pres  = k3_fixture<Rational>();
  auto order = MonomialOrder::parse(pres.generators, "c,b,e,f,a,d");
  auto sys   = complete(pres, order, 3);
  std::cout << to_text(sys);

  auto aut = build_automaton(pres.generators.size(), forbidden_patterns(sys));
  auto fit = fit_recurrence(counts(aut, 12), 4);
  std::cout << "counts:";
  for (auto const& c : fit.counts) {
    std::cout << " " << c;
  }
  std::cout << "\nH(x) = " << polynomial_str(fit.numerator, "x") << " / ("
            << polynomial_str(fit.denominator, "x") << ")\n";
}
