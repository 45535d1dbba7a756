#ifndef NCKOSZUL_GOLDEN_HPP_
#define NCKOSZUL_GOLDEN_HPP_

// Golden-value checks for the K3 quotient, its chopped presentation and the
// graph construction. Used by `nckoszul verify-paper`.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "avoidance.hpp"
#include "field.hpp"
#include "graphs.hpp"
#include "linear.hpp"
#include "poly.hpp"
#include "presentation.hpp"
#include "quadratic.hpp"
#include "rewrite.hpp"

namespace nckoszul::golden {

  enum class Status { pass, fail, warn };

  inline char const* status_str(Status s) {
    switch (s) {
      case Status::pass:
        return "PASS";
      case Status::fail:
        return "FAIL";
      case Status::warn:
        return "WARN";
    }
    return "?";
  }

  struct Check {
    std::string id;
    std::string location;  // the result being reproduced
    Status      status = Status::pass;
    std::string detail;    // computed values
    std::string printed;   // printed value, for WARN rows and notes
  };

  struct Options {
    std::size_t n_max = 5;  // highest tensor degree for linear algebra
  };

  inline std::string join(std::vector<std::string> v, bool sort = true) {
    if (sort) {
      std::sort(v.begin(), v.end());
    }
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? "," : "") + v[i];
    }
    return out;
  }

  template <typename T>
  std::string seq(std::vector<T> const& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << (i ? "," : "") << v[i];
    }
    return os.str();
  }

  inline std::string rat_seq(std::vector<Rational> const& v) {
    std::vector<std::string> s;
    for (auto const& x : v) {
      s.push_back(x.str());
    }
    return join(s, false);
  }

  template <exact_field F>
  std::vector<std::string> lhs_strings(RewriteSystem<F> const& sys) {
    std::vector<std::string> out;
    for (auto const& r : sys.rules()) {
      out.push_back(sys.alphabet().str(r.lhs));
    }
    return out;
  }

  // Shared fixtures, computed once.
  struct Context {
    Presentation<Rational> k3    = k3_fixture<Rational>();
    Presentation<Rational> gr    = gr_k3_fixture<Rational>();
    MonomialOrder          k3_order = MonomialOrder::parse(k3.generators, "c,b,e,f,a,d");
    MonomialOrder          gr_order = MonomialOrder::parse(gr.generators, "f,e,d,c,b,a");
    RewriteSystem<Rational> k3_sys  = complete(k3, k3_order, 3);
    RewriteSystem<Rational> gr_sys  = complete(gr, gr_order, 8);
    Automaton               k3_aut  = build_automaton(6, forbidden_patterns(k3_sys, false));
    Automaton               gr_aut  = build_automaton(6, forbidden_patterns(gr_sys, true));
  };

  inline Check counts_check(Context const& ctx) {
    auto c  = counts(ctx.k3_aut, 4);
    bool ok = c == std::vector<mpz_class>{1, 6, 31, 157, 793};
    return {"normal-word counts", "K3 basis theorem, counts T_1..T_3 (T_4 derived)",
            ok ? Status::pass : Status::fail, "T_0..T_4 = " + seq(c), ""};
  }

  inline std::vector<Check> recurrence_checks(Context const& ctx) {
    auto fit = fit_recurrence(counts(ctx.k3_aut, 12), 4);
    bool ok  = fit.recurrence == std::vector<Rational>{6, -5, 1}
              && fit.numerator == std::vector<Rational>{1}
              && fit.denominator == std::vector<Rational>{1, -6, 5, -1};
    std::string den = polynomial_str(fit.denominator, "x");
    Check rec{"minimal recurrence", "Hilbert series of K3",
              ok ? Status::pass : Status::fail,
              "T_{n+1} = (" + rat_seq(fit.recurrence) + ") . (T_n, T_{n-1}, T_{n-2}); H = 1/("
                  + den + ")",
              ""};
    // The printed denominator, as coefficients of 1, x, x^2, x^3.
    std::vector<Rational> printed{-1, 5, -6, 1};
    Check warn{"series denominator sign", "Hilbert series of K3", Status::warn,
               "recurrence-consistent denominator " + den,
               "printed denominator " + polynomial_str(printed, "x")
                   + " expands to -1,-5,-19,... rather than 1,6,31,..."};
    return {rec, warn};
  }

  inline Check k3_completion_check(Context const& ctx) {
    auto lhs = lhs_strings(ctx.k3_sys);
    bool ok  = join(lhs) == join({"ba", "cb", "ca", "bf", "cd", "cef"});
    // c(ba) - (cb)a with the five initial rules.
    auto init = make_system(ctx.k3, ctx.k3_order);
    bool zero = false;
    for (auto const& a : find_ambiguities(init)) {
      if (init.alphabet().str(a.overlap_word) == "cba") {
        zero = init.s_polynomial(a).is_zero();
      }
    }
    return {"K3 completion", "K3 basis theorem", ok && zero ? Status::pass : Status::fail,
            "leading words {" + join(lhs) + "}; cba overlap reduces to "
                + (zero ? "zero" : "nonzero"),
            ""};
  }

  inline std::vector<Check> gr_completion_checks(Context const& ctx) {
    auto                     lhs = lhs_strings(ctx.gr_sys);
    std::vector<std::string> expect{"fe", "fd", "db", "ec", "fc"};
    for (std::size_t j = 1; j <= 6; ++j) {
      expect.push_back("e" + std::string(j, 'f') + "b");
    }
    bool  words_ok = join(lhs) == join(expect);
    Check words{"chopped completion", "chopped K3 bad-word lemma",
                words_ok ? Status::pass : Status::fail, "leading words {" + join(lhs) + "}", ""};

    std::vector<Rational> alpha;
    for (std::size_t j = 1; j <= 6; ++j) {
      alpha.push_back(family_coefficient(ctx.gr_sys, j));
    }
    bool rec_ok = alpha[0] == Rational(1);
    for (std::size_t j = 0; j + 1 < alpha.size(); ++j) {
      rec_ok = rec_ok && alpha[j + 1] == alpha[j] / (Rational(1) + alpha[j]);
    }
    Check rec{"alpha recursion", "chopped K3 bad-word lemma",
              rec_ok ? Status::pass : Status::fail,
              "alpha_1..alpha_6 = " + rat_seq(alpha)
                  + " (minus the d f^j b coefficient of rule e f^j b)",
              "alpha_{j+1} = alpha_j/(1+alpha_j), alpha_j = 1/j"};

    // effb as printed, compared with the rule and with the lemma's alpha_2.
    auto const& A       = ctx.gr.generators;
    auto        printed = parse_poly<Rational>(
        A, "effb - effa - dffa + dffb - 1/2 edfb + 1/2 edfa + 1/2 ddfb - 1/2 ddfa");
    auto        rule    = ctx.gr_sys.rules()[*ctx.gr_sys.find_rule(A.word("effb"))].relation();
    bool        same    = printed == rule;
    Check warn{"effb coefficient sign", "chopped K3 bad-word lemma", Status::warn,
               std::string("rule effb ") + (same ? "equals" : "differs from")
                   + " the printed relation; its dffb coefficient is "
                   + (-alpha[1]).str(),
               "the lemma's alpha_2 = 1/2 would put -1/2 on dffb"};
    return {words, rec, warn};
  }

  inline Check series_check(Context const& ctx) {
    auto a  = fit_recurrence(counts(ctx.k3_aut, 12), 4);
    auto b  = fit_recurrence(counts(ctx.gr_aut, 12), 4);
    bool ok = series_equal(a, b, 12);
    return {"series equality", "chopped K3 Hilbert series proposition",
            ok ? Status::pass : Status::fail,
            "chopped counts T_0..T_12 = " + seq(b.counts), ""};
  }

  inline Check bridge_check(Context const& ctx, Options const& opt) {
    auto ck = counts(ctx.k3_aut, opt.n_max);
    auto cg = counts(ctx.gr_aut, opt.n_max);
    auto dk = graded_dims(ctx.k3, opt.n_max);
    auto dg = graded_dims(ctx.gr, opt.n_max);
    bool ok = ck == dk && cg == dg;
    return {"count/rank bridge", "diamond lemma basis vs 6^n - dim W_n",
            ok ? Status::pass : Status::fail,
            "n<=" + std::to_string(opt.n_max) + ": K3 " + seq(dk) + "; chopped " + seq(dg), ""};
  }

  template <exact_field F>
  std::size_t degree3_intersection_dim(Presentation<F> const& gr) {
    RelationLattice<F> lat(gr);
    auto               c = lat.component(3, WeightVector{2, 2, 1});
    return intersect(lat.slot(c, 0), lat.slot(c, 1)).dim();
  }

  inline Check degree3_check(Context const& ctx) {
    using P  = Poly<Rational>;
    auto& r  = ctx.gr.relations;  // fixture order r_1..r_5
    auto  A  = ctx.gr.generators;
    auto  L  = [&A](char ch) { return P::letter(A.at(std::string_view(&ch, 1))); };
    P     x  = r[3] * (L('b') - L('c')) + r[4] * (L('c') - L('a'));
    P     y  = (L('e') + L('f')) * r[0] - (L('d') + L('f')) * r[1] - (L('d') + L('e')) * r[2];
    RelationLattice<Rational> lat(ctx.gr);
    auto  c     = lat.component(3, WeightVector{2, 2, 1});
    auto  cap   = intersect(lat.slot(c, 0), lat.slot(c, 1));
    bool  ok    = cap.dim() == 1 && x == y && contains(cap, x);
    return {"degree-3 intersection", "dim gr(RV) cap gr(VR) = 1 proposition",
            ok ? Status::pass : Status::fail,
            "dim = " + std::to_string(cap.dim()) + "; r4(b-c)+r5(c-a) "
                + (x == y ? "=" : "!=") + " (e+f)r1-(d+f)r2-(d+e)r3",
            ""};
  }

  inline Check original_identity_check(Context const& ctx) {
    using P = Poly<Rational>;
    auto& r = ctx.k3.relations;
    auto  A = ctx.k3.generators;
    auto  L = [&A](char ch) { return P::letter(A.at(std::string_view(&ch, 1))); };
    P a = L('a'), b = L('b'), c = L('c'), d = L('d'), e = L('e'), f = L('f');
    P lhs = r[0] * c + r[1] * a + r[2] * b + r[3] * (c - b) + r[4] * (a - c);
    P rhs = a * r[1] + b * r[2] + c * r[0] + d * (r[1] + r[2]) + e * (r[0] + r[2])
            + f * (r[0] + r[1]);
    bool ok = lhs == rhs && !lhs.is_zero();
    return {"RV cap VR nonzero", "K3 element of RV cap VR", ok ? Status::pass : Status::fail,
            std::string("identity ") + (lhs == rhs ? "holds" : "fails") + ", element has "
                + std::to_string(lhs.size()) + " terms",
            ""};
  }

  inline Check dual_check(Context const& ctx, Options const& opt) {
    auto dd   = dual_dims(ctx.gr, opt.n_max);
    auto pd   = graded_dims(ctx.gr, opt.n_max);
    auto conv = duality_convolution(pd, dd);
    std::vector<mpz_class> expect{1, 6, 5, 1, 0, 0};
    expect.resize(opt.n_max + 1, 0);
    bool ok = dd == expect;
    for (std::size_t i = 0; i < conv.size(); ++i) {
      ok = ok && conv[i] == (i == 0 ? 1 : 0);
    }
    return {"dual dimensions", "dual Hilbert series theorem", ok ? Status::pass : Status::fail,
            "dual " + seq(dd) + "; convolution " + seq(conv), ""};
  }

  inline Check certificate_check(Context const& ctx, Options const& opt) {
    auto dec = koszul_certificate(ctx.gr, opt.n_max, CertificateScope::decreasing_weights);
    auto all = koszul_certificate(ctx.gr, opt.n_max, CertificateScope::all_weights);
    auto red = koszul_certificate(ctx.gr, opt.n_max, CertificateScope::reduced);
    bool ok  = dec.cells_pass() && all.cells_pass() == red.cells_pass() && red.cells_pass();
    return {"distributive triples", "Koszul criterion via triples",
            ok ? Status::pass : Status::fail,
            std::to_string(dec.cells.size()) + " decreasing cells, "
                + std::to_string(all.cells.size()) + " full cells, "
                + std::to_string(red.cells.size()) + " reduced cells; verified through n_max = "
                + std::to_string(opt.n_max),
            ""};
  }

  inline Check graph_check(Context const& ctx) {
    auto gp   = qn_graph_instances<Rational>(Graph::complete(3));
    auto p    = gp.presentation;
    bool ok = p.generators.size() == 6 && relation_span(p).dim() == 5
              && gp.instances.family_iii.empty()
              && relation_span(relabel(p, ctx.k3.generators)) == relation_span(ctx.k3);
    return {"graph presentation", "graph algebra theorem, triangle",
            ok ? Status::pass : Status::fail,
            "span dim " + std::to_string(relation_span(p).dim()) + ", family (iii) size "
                + std::to_string(gp.instances.family_iii.size()),
            ""};
  }

  inline Check field_check(Context const& ctx, Options const& opt) {
    std::size_t const n = std::min<std::size_t>(opt.n_max, 4);
    auto              k3p = ctx.k3.map_field<Fp>();
    auto              grp = ctx.gr.map_field<Fp>();
    bool ok = graded_dims(ctx.k3, n) == graded_dims(k3p, n)
              && graded_dims(ctx.gr, n) == graded_dims(grp, n)
              && dual_dims(ctx.gr, n) == dual_dims(grp, n)
              && degree3_intersection_dim(ctx.gr) == degree3_intersection_dim(grp);
    auto q = koszul_certificate(ctx.gr, n, CertificateScope::decreasing_weights);
    auto f = koszul_certificate(grp, n, CertificateScope::decreasing_weights);
    ok     = ok && q.cells.size() == f.cells.size();
    for (std::size_t i = 0; ok && i < q.cells.size(); ++i) {
      auto const& a = q.cells[i];
      auto const& b = f.cells[i];
      ok = a.dim_x == b.dim_x && a.dim_y == b.dim_y && a.dim_z == b.dim_z
           && a.median_left == b.median_left && a.median_right == b.median_right;
    }
    return {"field agreement", "rational vs F_2147483647", ok ? Status::pass : Status::fail,
            "dimensions through n = " + std::to_string(n), ""};
  }

  // Printed relations that differ from the engine without changing any
  // checked value.
  inline std::vector<Check> notes(Context const& ctx) {
    auto const& A       = ctx.k3.generators;
    auto        printed = parse_poly<Rational>(
        A, "cef - cfb - cfe - ace - fce + fae + cea - dce - dee - aee - fee + fde + dcf + def"
           " + aef - eaf + fef - fdf + bcf + ecf - efb - efe + eef + eea + edf");
    auto rule = ctx.k3_sys.rules()[*ctx.k3_sys.find_rule(A.word("cef"))].relation();
    auto diff = printed - rule;
    auto w3   = relation_subspace(ctx.k3, 3);
    return {{"cef relation", "K3 basis theorem", Status::pass,
             "printed minus engine = " + diff.str(A, ctx.k3_order) + "; printed relation "
                 + (contains(w3, printed) ? "is" : "is not") + " in W_3",
             "printed cef relation"}};
  }

  inline std::vector<Check> run_all(Options const& opt) {
    Context            ctx;
    std::vector<Check> out;
    auto add = [&out](std::vector<Check> v) {
      out.insert(out.end(), v.begin(), v.end());
    };
    out.push_back(counts_check(ctx));
    add(recurrence_checks(ctx));
    out.push_back(k3_completion_check(ctx));
    add(gr_completion_checks(ctx));
    out.push_back(series_check(ctx));
    out.push_back(bridge_check(ctx, opt));
    out.push_back(degree3_check(ctx));
    out.push_back(original_identity_check(ctx));
    out.push_back(dual_check(ctx, opt));
    if (opt.n_max >= 4) {
      out.push_back(certificate_check(ctx, opt));
    }
    out.push_back(graph_check(ctx));
    out.push_back(field_check(ctx, opt));
    return out;
  }

}  // namespace nckoszul::golden

#endif  // NCKOSZUL_GOLDEN_HPP_
