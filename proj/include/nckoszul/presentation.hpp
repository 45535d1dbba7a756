#ifndef NCKOSZUL_PRESENTATION_HPP_
#define NCKOSZUL_PRESENTATION_HPP_

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"
#include "linear.hpp"
#include "poly.hpp"
#include "word.hpp"

namespace nckoszul {

  // Generators with weights plus relations spanning R.
  template <exact_field F>
  struct Presentation {
    using field_type = F;

    std::string          name;
    Alphabet             generators;
    std::vector<Poly<F>> relations;

    std::size_t num_generators() const {
      return generators.size();
    }

    template <exact_field G>
    Presentation<G> map_field() const {
      Presentation<G> out{name, generators, {}};
      for (auto const& r : relations) {
        out.relations.push_back(r.template map_field<G>());
      }
      return out;
    }

    bool is_quadratic() const {
      for (auto const& r : relations) {
        if (r.is_zero() || !r.is_homogeneous() || r.degree() != 2) {
          return false;
        }
      }
      return true;
    }
  };

  template <exact_field F>
  Subspace<F> relation_span(Presentation<F> const& pres) {
    return span(pres.relations, GradedComponent::full(pres.generators, 2));
  }

  // Replace the relation list by the RREF basis of its span.
  template <exact_field F>
  Presentation<F> canonicalize(Presentation<F> pres) {
    if (!pres.is_quadratic()) {
      throw std::invalid_argument("relations must be nonzero and quadratic");
    }
    pres.relations = relation_span(pres).basis();
    return pres;
  }

  // The same relations over `target`, matching generators by label. Weights
  // must agree.
  template <exact_field F>
  Presentation<F> relabel(Presentation<F> const& pres, Alphabet const& target) {
    if (pres.generators.size() != target.size()) {
      throw std::invalid_argument("relabel needs alphabets of equal size");
    }
    std::vector<letter_type> image;
    for (auto const& g : pres.generators) {
      auto id = target.at(g.label);
      if (target[id].weight != g.weight) {
        throw std::invalid_argument("weight of " + g.label + " differs");
      }
      image.push_back(id);
    }
    Presentation<F> out{pres.name, target, {}};
    for (auto const& r : pres.relations) {
      Poly<F> p;
      for (auto const& [w, c] : r.terms()) {
        Word v;
        for (auto x : w) {
          v.push_back(image[x]);
        }
        p.add_term(v, c);
      }
      out.relations.push_back(std::move(p));
    }
    return out;
  }

  // Throws unless the relations are quadratic and linearly independent.
  template <exact_field F>
  void validate(Presentation<F> const& pres) {
    for (auto const& r : pres.relations) {
      for (auto const& [w, c] : r.terms()) {
        if (!pres.generators.valid(w)) {
          throw std::invalid_argument("relation uses an unknown generator");
        }
      }
    }
    if (!pres.is_quadratic()) {
      throw std::invalid_argument("relations must be nonzero and quadratic");
    }
    if (relation_span(pres).dim() != pres.relations.size()) {
      throw std::invalid_argument("relations are linearly dependent");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////
  //
  //   # comment
  //   name k3
  //   generator u(1) weight 1 alias a
  //   relation db - da + ab - ba

  template <exact_field F>
  std::string to_text(Presentation<F> const& pres) {
    std::ostringstream os;
    os << "# nckoszul presentation: " << pres.generators.size() << " generators, "
       << pres.relations.size() << " relations\n";
    os << "name " << (pres.name.empty() ? "unnamed" : pres.name) << "\n";
    os << "field " << F::name() << "\n";
    for (auto const& g : pres.generators) {
      os << "generator " << g.label << " weight " << g.weight;
      if (!g.alias.empty()) {
        os << " alias " << g.alias;
      }
      os << "\n";
    }
    auto order = MonomialOrder::descending_ids(pres.generators.size());
    for (auto const& r : pres.relations) {
      os << "relation " << r.str(pres.generators, order) << "\n";
    }
    return os.str();
  }

  template <exact_field F>
  Presentation<F> parse_presentation(std::string_view text) {
    Presentation<F>          pres;
    std::vector<Generator>   gens;
    std::vector<std::string> rel_text;
    std::istringstream       in{std::string(text)};
    std::string              line;
    std::size_t              lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream ls(line);
      std::string        key;
      if (!(ls >> key)) {
        continue;
      }
      auto fail = [&](std::string const& what) {
        return parse_error("line " + std::to_string(lineno) + ": " + what);
      };
      if (key == "name") {
        ls >> pres.name;
      } else if (key == "field") {
        // informational; the caller picks F
      } else if (key == "generator") {
        Generator g;
        if (!(ls >> g.label)) {
          throw fail("generator needs a label");
        }
        std::string attr;
        while (ls >> attr) {
          if (attr == "weight") {
            if (!(ls >> g.weight) || g.weight == 0) {
              throw fail("bad weight");
            }
          } else if (attr == "alias") {
            if (!(ls >> g.alias)) {
              throw fail("alias needs a value");
            }
          } else {
            throw fail("unknown generator attribute '" + attr + "'");
          }
        }
        gens.push_back(std::move(g));
      } else if (key == "relation") {
        std::string rest;
        std::getline(ls, rest);
        rel_text.push_back(rest);
      } else {
        throw fail("unknown keyword '" + key + "'");
      }
    }
    try {
      pres.generators = Alphabet(std::move(gens));
    } catch (std::invalid_argument const& e) {
      throw parse_error(e.what());
    }
    for (auto const& t : rel_text) {
      pres.relations.push_back(parse_poly<F>(pres.generators, t));
    }
    return pres;
  }

}  // namespace nckoszul

#endif  // NCKOSZUL_PRESENTATION_HPP_
