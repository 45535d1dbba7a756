#include <catch2/catch_amalgamated.hpp>

#include "nckoszul/json_io.hpp"
#include "support.hpp"

using namespace nckoszul;
using namespace nckoszul::testing;

namespace {

  using Q = Rational;

  // Instance counts by direct enumeration of index tuples.
  struct Tally {
    std::size_t pairs = 0, triples = 0, pairings = 0;
  };

  Tally enumerate(std::size_t n) {
    Tally t;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      auto bits = static_cast<std::size_t>(__builtin_popcountll(mask));
      t.pairs += bits == 2;
      t.pairings += bits == 4 ? 3 : 0;  // {ab|cd}, {ac|bd}, {ad|bc}
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          t.triples += i != j && j != k && i != k;
        }
      }
    }
    return t;
  }

  Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 1; i < n; ++i) {
      g.add_edge(i, i + 1);
    }
    return g;
  }

}  // namespace

TEST_CASE("triangle gives the five K3 relations", "[graph]") {
  auto gp = qn_graph_instances<Q>(Graph::complete(3));
  auto p  = gp.presentation;
  CHECK(p.generators.size() == 6);
  CHECK(p.relations.size() == 5);
  CHECK(gp.instances.family_iii.empty());
  auto k3 = k3_fixture<Q>();
  // Edges come out as u(12), u(13), u(23); the fixture orders them d, e, f =
  // u(12), u(23), u(13).
  CHECK(p.generators[4].label == "u(13)");
  auto moved = relabel(p, k3.generators);
  CHECK(relation_span(moved) == relation_span(k3));
  for (auto const& r : k3.relations) {
    CHECK(contains(relation_span(moved), r));
  }
  CHECK(!(relation_span(p) == relation_span(k3)));
  CHECK_THROWS(relabel(p, free_fixture<Q>(6).generators));
}

TEST_CASE("K3 fixture relations", "[graph]") {
  auto k3 = k3_fixture<Q>();
  auto A  = k3.generators;
  CHECK(k3.relations[0] == parse_poly<Q>(A, "db - da + ab - ba"));
  CHECK(A.weight(Word{A.at("u(1)")}) == 1);
  CHECK(A.weight(Word{A.at("u(12)")}) == 2);
  CHECK(relation_span(chop(k3)) == relation_span(gr_k3_fixture<Q>()));
  auto gr = gr_k3_fixture<Q>();
  CHECK(gr.relations[3] == parse_poly<Q>(A, "de - ed - fd + fe"));
  for (auto const& r : gr.relations) {
    auto w = A.weight(r.terms().begin()->first);
    for (auto const& [word, c] : r.terms()) {
      CHECK(A.weight(word) == w);
    }
  }
}

TEST_CASE("single edge", "[graph]") {
  auto gp = qn_graph_instances<Q>(Graph::complete(2));
  auto p  = gp.presentation;
  CHECK(p.generators.size() == 3);
  CHECK(p.generators[2].label == "u(12)");
  CHECK(p.relations.size() == 1);
  CHECK(gp.instances.family_ii.empty());
  CHECK(gp.instances.family_iii.empty());
}

TEST_CASE("instance counts match enumeration", "[graph][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& g : {Graph::complete(n), path(n), Graph(n)}) {
      auto inst = qn_graph_instances<Q>(g).instances;
      auto t    = enumerate(n);
      CHECK(inst.family_i.size() == t.pairs);
      CHECK(inst.family_ii.size() == t.triples);
      CHECK(inst.family_iii.size() == t.pairings);
      CHECK(t.pairs == n * (n - 1) / 2);
      CHECK(t.triples == n * (n - 1) * (n - 2));
    }
  }
}

TEST_CASE("graph relations are quadratic and canonical", "[graph][property]") {
  auto rng = make_rng(50);
  for (int round = 0; round < 12; ++round) {
    auto  n = static_cast<std::size_t>(uniform(rng, 2, 4));
    Graph g(n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        if (uniform(rng, 0, 1) == 1) {
          g.add_edge(i, j);
        }
      }
    }
    auto p = qn_graph_presentation<Q>(g);
    CHECK(p.generators.size() == n + g.edges().size());
    CHECK(relation_span(p).dim() == p.relations.size());
    for (auto const& r : p.relations) {
      CHECK(r.is_homogeneous());
      CHECK(r.degree() == 2);
    }
    CHECK_NOTHROW(validate(p));
  }
}

TEST_CASE("graph text and JSON input", "[io]") {
  auto g = parse_graph("n=4; 1-2 2-3 3-4");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges().size() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(!g.has_edge(0, 3));
  auto h = parse_graph(R"({"n": 4, "edges": [[1,2],[2,3],[3,4]]})");
  CHECK(h.edges() == g.edges());
  CHECK(parse_graph("n=3").edges().empty());
  CHECK_THROWS_AS(parse_graph("1-2"), parse_error);
  CHECK_THROWS(parse_graph("n=3; 1-4"));
  CHECK_THROWS(parse_graph("n=3; 1-1"));
  CHECK_THROWS(parse_graph("n=3; 1-2 2-1"));
  CHECK_THROWS(parse_graph(R"({"n": 3, "edges": [[1]]})"));
  CHECK_THROWS(parse_graph(R"({"edges": []})"));
}

TEST_CASE("presentation text round trip", "[io]") {
  for (auto const& p : {k3_fixture<Q>(), gr_k3_fixture<Q>(), qn_graph_presentation<Q>(path(4))}) {
    auto text = to_text(p);
    auto back = parse_presentation<Q>(text);
    CHECK(back.name == p.name);
    CHECK(back.relations == p.relations);
    CHECK(back.generators.size() == p.generators.size());
    CHECK(to_text(back) == text);
  }
  CHECK_THROWS_AS(parse_presentation<Q>("generator x\nbogus line\n"), parse_error);
  CHECK_THROWS_AS(parse_presentation<Q>("generator x weight 0\n"), parse_error);
}
