#ifndef NCKOSZUL_JSON_IO_HPP_
#define NCKOSZUL_JSON_IO_HPP_

// JSON rendering of reports and graph input. Needs nlohmann/json on the
// include path; the core headers do not.

#include <gmpxx.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "avoidance.hpp"
#include "field.hpp"
#include "graphs.hpp"
#include "quadratic.hpp"
#include "rewrite.hpp"

namespace nckoszul {

  using json = nlohmann::ordered_json;

  // Integers that fit in a long stay numbers, larger ones become strings.
  inline json to_json(mpz_class const& z) {
    if (z.fits_slong_p()) {
      return z.get_si();
    }
    return z.get_str();
  }

  inline json to_json(Rational const& q) {
    return q.str();
  }

  template <typename T>
  json to_json(std::vector<T> const& v) {
    json out = json::array();
    for (auto const& x : v) {
      out.push_back(to_json(x));
    }
    return out;
  }

  // {"n": 4, "edges": [[1, 2], [2, 3]]}
  inline Graph parse_graph_json(std::string const& text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      throw parse_error(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned()) {
      throw parse_error("graph JSON needs a non-negative integer \"n\"");
    }
    Graph g(j["n"].get<std::size_t>());
    if (j.contains("edges")) {
      if (!j["edges"].is_array()) {
        throw parse_error("\"edges\" must be an array");
      }
      for (auto const& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned()
            || !e[1].is_number_unsigned()) {
          throw parse_error("each edge must be a pair of vertex numbers");
        }
        try {
          g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        } catch (std::invalid_argument const& ex) {
          throw parse_error(ex.what());
        }
      }
    }
    return g;
  }

  // JSON when the text starts with '{', otherwise the "n=4; 1-2" form.
  inline Graph parse_graph(std::string const& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      return parse_graph_json(text);
    }
    return parse_graph_text(text);
  }

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline json to_json(SeriesFit const& fit) {
    json j;
    j["counts"]           = to_json(fit.counts);
    j["recurrence"]       = to_json(fit.recurrence);
    j["start"]            = fit.start;
    j["numerator"]        = to_json(fit.numerator);
    j["denominator"]      = to_json(fit.denominator);
    j["series"]           = polynomial_str(fit.numerator, "x") + " / ("
                  + polynomial_str(fit.denominator, "x") + ")";
    j["verified_through"] = fit.verified_through;
    return j;
  }

  inline json to_json(KoszulReport const& rep) {
    json j;
    j["n_max"]         = rep.n_max;
    j["scope"]         = scope_str(rep.scope);
    j["weight_graded"] = rep.weight_graded;
    json cells         = json::array();
    for (auto const& c : rep.cells) {
      json cj;
      cj["n"]      = c.n;
      cj["a"]      = c.a;
      cj["weight"] = c.weight ? json(weight_str(*c.weight)) : json("unrestricted");
      cj["dim_x"]  = c.dim_x;
      cj["dim_y"]  = c.dim_y;
      cj["dim_z"]  = c.dim_z;
      cj["median_left"]  = c.median_left;
      cj["median_right"] = c.median_right;
      cj["pass"]         = c.pass;
      cells.push_back(std::move(cj));
    }
    j["cells"]       = std::move(cells);
    j["primal_dims"] = to_json(rep.primal_dims);
    j["dual_dims"]   = to_json(rep.dual_dims);
    j["convolution"] = to_json(rep.convolution);
    j["cells_pass"]  = rep.cells_pass();
    j["convolution_ok"] = rep.convolution_ok();
    j["status"] = rep.pass() ? "verified through n_max = " + std::to_string(rep.n_max)
                             : std::string("failed");
    return j;
  }

  template <exact_field F>
  json log_to_json(RewriteSystem<F> const& sys) {
    auto const& a   = sys.alphabet();
    json        out = json::array();
    for (auto const& ev : sys.log()) {
      json e;
      e["overlap"] = a.str(ev.overlap_word);
      e["left"]    = a.str(ev.left_lhs);
      e["right"]   = a.str(ev.right_lhs);
      e["result"]  = ev.new_lhs ? "new rule " + a.str(*ev.new_lhs) : std::string("resolved");
      out.push_back(std::move(e));
    }
    for (auto const& amb : sys.unresolved()) {
      json e;
      e["overlap"] = a.str(amb.overlap_word);
      e["left"]    = a.str(sys.rules()[amb.left_rule].lhs);
      e["right"]   = a.str(sys.rules()[amb.right_rule].lhs);
      e["result"]  = "unresolved above cap";
      out.push_back(std::move(e));
    }
    return out;
  }

}  // namespace nckoszul

#endif  // NCKOSZUL_JSON_IO_HPP_
