// The chopped K3 presentation needs an infinite family e f^j b of rules.
// Complete to a cap, generalize the family and compare Hilbert series.
#include <iostream>

#include "nckoszul/nckoszul.hpp"

using namespace nckoszul;

int main() {
  auto k3 = k3_fixture<Rational>();
  auto ch = chop(k3);
  auto order = MonomialOrder::parse(ch.generators, "f,e,d,c,b,a");
  auto sys   = complete(ch, order, 8);

  auto pats = forbidden_patterns(sys, true);
  for (auto const& p : pats) {
    std::cout << p.str(ch.generators) << " ";
  }
  std::cout << "\n";

  auto k3_sys = complete(k3, MonomialOrder::parse(k3.generators, "c,b,e,f,a,d"), 3);
  auto a = fit_recurrence(counts(build_automaton(6, forbidden_patterns(k3_sys)), 12), 4);
  auto b = fit_recurrence(counts(build_automaton(6, pats), 12), 4);
  std::cout << "same series through degree 12: " << std::boolalpha << series_equal(a, b, 12)
            << "\n";

  auto rep = koszul_certificate(ch, 5, CertificateScope::decreasing_weights);
  std::cout << rep.cells.size() << " triples, all distributive: " << rep.cells_pass() << "\n";
}
