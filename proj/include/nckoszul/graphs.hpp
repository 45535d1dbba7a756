#ifndef NCKOSZUL_GRAPHS_HPP_
#define NCKOSZUL_GRAPHS_HPP_

// Presentations of the graph quotients Q_n(G) and the built-in fixtures.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "field.hpp"
#include "poly.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace nckoszul {

  // Simple graph on vertices 1..n (0-indexed internally).
  class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n) {}

    static Graph complete(std::size_t n) {
      Graph g(n);
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
          g.add_edge(i, j);
        }
      }
      return g;
    }

    // 1-indexed endpoints.
    Graph& add_edge(std::size_t i, std::size_t j) {
      if (i == j) {
        throw std::invalid_argument("graphs have no loops");
      }
      if (i < 1 || j < 1 || i > n_ || j > n_) {
        throw std::invalid_argument("edge endpoint outside 1.." + std::to_string(n_));
      }
      if (!edges_.emplace(std::min(i, j) - 1, std::max(i, j) - 1).second) {
        throw std::invalid_argument("duplicate edge");
      }
      return *this;
    }

    std::size_t vertex_count() const {
      return n_;
    }
    // 0-indexed pairs (i < j).
    std::set<std::pair<std::size_t, std::size_t>> const& edges() const {
      return edges_;
    }
    bool has_edge(std::size_t i, std::size_t j) const {
      return edges_.contains({std::min(i, j), std::max(i, j)});
    }

   private:
    std::size_t                                   n_ = 0;
    std::set<std::pair<std::size_t, std::size_t>> edges_;
  };

  // "n=4; 1-2 2-3 3-4"
  inline Graph parse_graph_text(std::string_view text) {
    std::string s(text);
    auto        eq = s.find('=');
    if (eq == std::string::npos || s.substr(0, eq).find('n') == std::string::npos) {
      throw parse_error("graph text must start with n=<vertices>");
    }
    std::size_t stop = eq + 1;
    while (stop < s.size() && std::isspace(static_cast<unsigned char>(s[stop]))) {
      ++stop;
    }
    std::size_t n = 0;
    std::size_t digits = 0;
    while (stop < s.size() && std::isdigit(static_cast<unsigned char>(s[stop]))) {
      n = n * 10 + static_cast<std::size_t>(s[stop] - '0');
      ++stop;
      ++digits;
    }
    if (digits == 0) {
      throw parse_error("graph text must start with n=<vertices>");
    }
    Graph              g(n);
    std::istringstream rest(s.substr(stop));
    std::string        tok;
    while (rest >> tok) {
      tok.erase(std::remove(tok.begin(), tok.end(), ';'), tok.end());
      tok.erase(std::remove(tok.begin(), tok.end(), ','), tok.end());
      if (tok.empty()) {
        continue;
      }
      auto dash = tok.find('-');
      if (dash == std::string::npos) {
        throw parse_error("bad edge '" + tok + "'");
      }
      try {
        g.add_edge(std::stoul(tok.substr(0, dash)), std::stoul(tok.substr(dash + 1)));
      } catch (std::invalid_argument const& e) {
        throw parse_error("bad edge '" + tok + "': " + e.what());
      }
    }
    return g;
  }

  inline std::string vertex_label(std::size_t i) {
    return "u(" + std::to_string(i + 1) + ")";
  }

  inline std::string edge_label(std::size_t i, std::size_t j, std::size_t n) {
    if (i > j) {
      std::swap(i, j);
    }
    if (n <= 9) {
      return "u(" + std::to_string(i + 1) + std::to_string(j + 1) + ")";
    }
    return "u(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  }

  // The relation instances before canonicalization, by family.
  template <exact_field F>
  struct GraphRelations {
    std::vector<Poly<F>> family_i;    // one per pair {i, j}
    std::vector<Poly<F>> family_ii;   // one per ordered distinct (i, j, k)
    std::vector<Poly<F>> family_iii;  // one per pairing {{i, j}, {k, l}}
  };

  template <exact_field F>
  struct GraphPresentation {
    Presentation<F>   presentation;
    GraphRelations<F> instances;
  };

  // Generators u(i) (weight 1) then u(i,j) for edges (weight 2), relations
  // moved to one side as left minus right, u(i,j) = 0 for non-edges.
  template <exact_field F>
  GraphPresentation<F> qn_graph_instances(Graph const& g) {
    std::size_t const      n = g.vertex_count();
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < n; ++i) {
      gens.push_back({0, vertex_label(i), 1, {}});
    }
    std::map<std::pair<std::size_t, std::size_t>, letter_type> edge_id;
    for (auto const& [i, j] : g.edges()) {
      edge_id[{i, j}] = static_cast<letter_type>(gens.size());
      gens.push_back({0, edge_label(i, j, n), 2, {}});
    }
    using P = Poly<F>;
    auto u  = [](std::size_t i) { return P::letter(static_cast<letter_type>(i)); };
    auto uu = [&](std::size_t i, std::size_t j) {
      auto it = edge_id.find({std::min(i, j), std::max(i, j)});
      return it == edge_id.end() ? P() : P::letter(it->second);
    };
    GraphPresentation<F> out;
    out.presentation.name       = "qn-graph";
    out.presentation.generators = Alphabet(std::move(gens));
    auto& inst                  = out.instances;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        inst.family_i.push_back(commutator(u(i), u(j)) - uu(i, j) * (u(i) - u(j)));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (i == j || j == k || i == k) {
            continue;
          }
          inst.family_ii.push_back(commutator(uu(i, k), uu(j, k))
                                   + commutator(uu(i, k), u(j))
                                   + commutator(u(i), uu(j, k))
                                   - uu(i, j) * (uu(i, k) - uu(j, k)));
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          for (std::size_t d = c + 1; d < n; ++d) {
            inst.family_iii.push_back(commutator(uu(a, b), uu(c, d)));
            inst.family_iii.push_back(commutator(uu(a, c), uu(b, d)));
            inst.family_iii.push_back(commutator(uu(a, d), uu(b, c)));
          }
        }
      }
    }
    std::vector<P> all;
    for (auto const* fam : {&inst.family_i, &inst.family_ii, &inst.family_iii}) {
      for (auto const& r : *fam) {
        if (!r.is_zero()) {
          all.push_back(r);
        }
      }
    }
    out.presentation.relations = std::move(all);
    if (!out.presentation.relations.empty()) {
      out.presentation = canonicalize(std::move(out.presentation));
    }
    return out;
  }

  template <exact_field F = Rational>
  Presentation<F> qn_graph_presentation(Graph const& g) {
    return qn_graph_instances<F>(g).presentation;
  }

  namespace detail {
    // a = u(1), b = u(2), c = u(3), d = u(12), e = u(23), f = u(13)
    inline Alphabet k3_alphabet() {
      return Alphabet({{0, "u(1)", 1, "a"},
                       {0, "u(2)", 1, "b"},
                       {0, "u(3)", 1, "c"},
                       {0, "u(12)", 2, "d"},
                       {0, "u(23)", 2, "e"},
                       {0, "u(13)", 2, "f"}});
    }
  }  // namespace detail

  // The five relations r_1..r_5 of Q_3(K_3), built from commutators.
  template <exact_field F = Rational>
  Presentation<F> k3_fixture() {
    using P    = Poly<F>;
    Alphabet A = detail::k3_alphabet();
    auto     x = [&A](char c) { return P::letter(A.at(std::string_view(&c, 1))); };
    P a = x('a'), b = x('b'), c = x('c'), d = x('d'), e = x('e'), f = x('f');
    Presentation<F> pres;
    pres.name       = "k3";
    pres.generators = A;
    pres.relations  = {
        commutator(a, b) + d * (b - a),
        commutator(b, c) + e * (c - b),
        commutator(c, a) + f * (a - c),
        commutator(d, e) + commutator(d, c) + commutator(a, e) - f * (d - e),
        commutator(d, f) + commutator(d, c) + commutator(b, f) - e * (d - f),
    };
    return pres;
  }

  // The chopped relations: db - da, ec - eb, fa - fc, de - ed - fd + fe,
  // df - fd - ed + ef.
  template <exact_field F = Rational>
  Presentation<F> gr_k3_fixture() {
    Presentation<F> pres;
    pres.name       = "gr-k3";
    pres.generators = detail::k3_alphabet();
    for (auto t : {"db - da", "ec - eb", "fa - fc", "de - ed - fd + fe",
                   "df - fd - ed + ef"}) {
      pres.relations.push_back(parse_poly<F>(pres.generators, t));
    }
    return pres;
  }

  // Free algebra on x, y, z (k <= 26 generators named from 'x' cyclically).
  template <exact_field F = Rational>
  Presentation<F> free_fixture(std::size_t k = 3) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < k; ++i) {
      gens.push_back({0, std::string(1, static_cast<char>('a' + (23 + i) % 26)), 1, {}});
    }
    Presentation<F> pres;
    pres.name       = "free" + std::to_string(k);
    pres.generators = Alphabet(std::move(gens));
    return pres;
  }

}  // namespace nckoszul

#endif  // NCKOSZUL_GRAPHS_HPP_
