#ifndef NCKOSZUL_QUADRATIC_HPP_
#define NCKOSZUL_QUADRATIC_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "linear.hpp"
#include "poly.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace nckoszul {

  using WeightVector = std::vector<unsigned>;

  // All weight vectors of length n over the generator weights.
  inline std::vector<WeightVector> weight_vectors(Alphabet const& a,
                                                  std::size_t     n,
                                                  bool decreasing_only = false) {
    auto const                weights = a.weights();
    std::vector<WeightVector> out{{}};
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<WeightVector> next;
      for (auto const& v : out) {
        for (auto w : weights) {
          if (decreasing_only && !v.empty() && w > v.back()) {
            continue;
          }
          auto u = v;
          u.push_back(w);
          next.push_back(std::move(u));
        }
      }
      out = std::move(next);
    }
    // Lexicographically decreasing, so (2,2,...) comes first.
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  inline std::string weight_str(WeightVector const& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      out += (i ? "," : "") + std::to_string(w[i]);
    }
    return out + ")";
  }

  // The subspaces V^i R V^(n-2-i), their sums and intersections, restricted
  // to graded components. Caches R intersected with each 2-slot component.
  template <exact_field F>
  class RelationLattice {
   public:
    explicit RelationLattice(Presentation<F> const& pres)
        : alphabet_(pres.generators),
          relations_(relation_span(pres)) {
      std::size_t total = 0;
      for (auto const& w : weight_vectors(alphabet_, 2)) {
        total += relations_in(GradedComponent(alphabet_, w)).dim();
      }
      graded_ = total == relations_.dim();
    }

    Alphabet const& alphabet() const {
      return alphabet_;
    }
    Subspace<F> const& relations() const {
      return relations_;
    }

    // R = sum over 2-slot weight components of R intersected with them.
    bool weight_graded() const {
      return graded_;
    }

    ComponentPtr component(std::size_t n, std::optional<WeightVector> const& w) const {
      if (w) {
        if (w->size() != n) {
          throw std::invalid_argument("weight vector length differs from degree");
        }
        return GradedComponent::weighted(alphabet_, *w);
      }
      return GradedComponent::full(alphabet_, n);
    }

    // R intersected with a 2-slot component.
    Subspace<F> relations_in(GradedComponent const& pair) const {
      if (pair.unrestricted()) {
        return relations_;
      }
      auto key = *pair.weights();
      auto it  = cache_.find(key);
      if (it == cache_.end()) {
        it = cache_.emplace(key, restrict_to(relations_, std::make_shared<GradedComponent const>(pair)))
                 .first;
      }
      return it->second;
    }

    // V^i R V^(n-2-i) intersected with `c`. Tensor products commute with
    // intersections against coordinate subspaces, so this is exact for any R.
    Subspace<F> slot(ComponentPtr const& c, std::size_t i) const {
      if (i + 2 > c->degree()) {
        throw std::out_of_range("relation slot outside the degree");
      }
      return tensor_embed(c, i, relations_in(c->slice(i, 2)));
    }

    std::vector<Subspace<F>> slots(ComponentPtr const& c) const {
      std::vector<Subspace<F>> out;
      for (std::size_t i = 0; i + 2 <= c->degree(); ++i) {
        out.push_back(slot(c, i));
      }
      return out;
    }

    // W_n intersected with `c`. For ungraded R the sum is formed in the
    // full tensor power first.
    Subspace<F> ideal_component(ComponentPtr const& c) const {
      if (c->degree() < 2) {
        return Subspace<F>::zero(c);
      }
      if (c->unrestricted() || graded_) {
        return sum(slots(c), c);
      }
      auto full = GradedComponent::full(alphabet_, c->degree());
      return restrict_to(sum(slots(full), full), c);
    }

    // Intersection of every V^i R V^(n-2-i) with `c`.
    Subspace<F> dual_component(ComponentPtr const& c) const {
      if (c->degree() < 2) {
        return Subspace<F>::full(c);
      }
      if (c->unrestricted() || graded_) {
        return intersect(slots(c), c);
      }
      auto full = GradedComponent::full(alphabet_, c->degree());
      return restrict_to(intersect(slots(full), full), c);
    }

   private:
    Alphabet                                    alphabet_;
    Subspace<F>                                 relations_;
    bool                                        graded_ = false;
    mutable std::map<WeightVector, Subspace<F>> cache_;
  };

  // W_n = R V^(n-2) + V R V^(n-3) + ... + V^(n-2) R, optionally intersected
  // with a weight component; zero for n < 2.
  template <exact_field F>
  Subspace<F> relation_subspace(Presentation<F> const&          pres,
                                std::size_t                     n,
                                std::optional<WeightVector> const& weight = std::nullopt) {
    RelationLattice<F> lat(pres);
    return lat.ideal_component(lat.component(n, weight));
  }

  template <exact_field F>
  mpz_class graded_dim(RelationLattice<F> const& lat, std::size_t n) {
    if (lat.weight_graded() && n >= 2) {
      mpz_class total = 0;
      for (auto const& w : weight_vectors(lat.alphabet(), n)) {
        auto c = lat.component(n, w);
        total += static_cast<unsigned long>(c->dim() - lat.ideal_component(c).dim());
      }
      return total;
    }
    auto c = lat.component(n, std::nullopt);
    return static_cast<unsigned long>(c->dim() - lat.ideal_component(c).dim());
  }

  // dim A_n = dim V^n - dim W_n.
  template <exact_field F>
  mpz_class graded_dim(Presentation<F> const& pres, std::size_t n) {
    return graded_dim(RelationLattice<F>(pres), n);
  }

  template <exact_field F>
  std::vector<mpz_class> graded_dims(Presentation<F> const& pres, std::size_t n_max) {
    RelationLattice<F>     lat(pres);
    std::vector<mpz_class> out;
    for (std::size_t n = 0; n <= n_max; ++n) {
      out.push_back(graded_dim(lat, n));
    }
    return out;
  }

  // dim of the degree-n component of the quadratic dual, computed as the
  // dimension of the intersection of all V^i R V^(n-2-i).
  template <exact_field F>
  mpz_class dual_dim(RelationLattice<F> const& lat, std::size_t n) {
    if (lat.weight_graded() && n >= 2) {
      mpz_class total = 0;
      for (auto const& w : weight_vectors(lat.alphabet(), n)) {
        total += static_cast<unsigned long>(lat.dual_component(lat.component(n, w)).dim());
      }
      return total;
    }
    return static_cast<unsigned long>(
        lat.dual_component(lat.component(n, std::nullopt)).dim());
  }

  template <exact_field F>
  std::vector<mpz_class> dual_dims(Presentation<F> const& pres, std::size_t n_max) {
    RelationLattice<F>     lat(pres);
    std::vector<mpz_class> out;
    for (std::size_t n = 0; n <= n_max; ++n) {
      out.push_back(dual_dim(lat, n));
    }
    return out;
  }

  // sum_{i+j=n} (-1)^j a_i b_j; (1, 0, 0, ...) for a Koszul algebra.
  inline std::vector<mpz_class> duality_convolution(std::vector<mpz_class> const& a,
                                                    std::vector<mpz_class> const& b) {
    std::size_t const      n = std::min(a.size(), b.size());
    std::vector<mpz_class> out(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j <= k; ++j) {
        mpz_class t = a[k - j] * b[j];
        out[k] += (j % 2 == 0) ? t : mpz_class(-t);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Quadratic dual
  ////////////////////////////////////////////////////////////////////////

  template <exact_field F>
  struct DualPresentation {
    Alphabet             generators;
    std::vector<Poly<F>> relations;  // basis of the annihilator of R
  };

  // Pairing of pure tensors: <x_i* x_j*, x_k x_l> = [i = k][j = l].
  template <exact_field F>
  F pairing(Poly<F> const& dual, Poly<F> const& primal) {
    F acc = F::zero();
    for (auto const& [w, c] : dual.terms()) {
      acc += c * primal.coefficient(w);
    }
    return acc;
  }

  template <exact_field F>
  DualPresentation<F> quadratic_dual(Presentation<F> const& pres) {
    std::vector<Generator> gens;
    for (auto const& g : pres.generators) {
      gens.push_back({0, g.label + "*", g.weight, g.alias.empty() ? "" : g.alias + "*"});
    }
    auto        v2 = GradedComponent::full(pres.generators, 2);
    Subspace<F> r  = relation_span(pres);
    std::vector<std::vector<F>> rows;
    for (auto const& row : r.rows()) {
      std::vector<F> dense(v2->dim(), F::zero());
      for (auto const& [c, x] : row) {
        dense[c] = x;
      }
      rows.push_back(std::move(dense));
    }
    DualPresentation<F> out{Alphabet(std::move(gens)), {}};
    for (auto const& k : kernel(rows, v2->dim())) {
      Poly<F> p;
      for (std::size_t c = 0; c < k.size(); ++c) {
        p.add_term(v2->word_at(static_cast<column_type>(c)), k[c]);
      }
      out.relations.push_back(std::move(p));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Associated graded presentation
  ////////////////////////////////////////////////////////////////////////

  // Keep the terms of maximal total weight.
  template <exact_field F>
  Poly<F> chop(Alphabet const& alphabet, Poly<F> const& p) {
    unsigned top = 0;
    for (auto const& [w, c] : p.terms()) {
      top = std::max(top, alphabet.weight(w));
    }
    Poly<F> out;
    for (auto const& [w, c] : p.terms()) {
      if (alphabet.weight(w) == top) {
        out.add_term(w, c);
      }
    }
    return out;
  }

  template <exact_field F>
  Presentation<F> chop(Presentation<F> const& pres) {
    Presentation<F> out{pres.name.empty() ? "chopped" : "ch(" + pres.name + ")",
                        pres.generators,
                        {}};
    for (auto const& r : pres.relations) {
      out.relations.push_back(chop(pres.generators, r));
    }
    return canonicalize(std::move(out));
  }

  // gr(S) for the filtration by total weight: eliminate with heavier words
  // first, then keep the top-weight part of each row.
  template <exact_field F>
  Subspace<F> associated_graded(Subspace<F> const& s, Alphabet const& alphabet) {
    auto const&       amb = *s.ambient();
    std::size_t const n   = amb.dim();
    std::vector<column_type> by_weight(n);
    for (std::size_t c = 0; c < n; ++c) {
      by_weight[c] = static_cast<column_type>(c);
    }
    std::vector<unsigned> weight(n);
    for (std::size_t c = 0; c < n; ++c) {
      weight[c] = alphabet.weight(amb.word_at(static_cast<column_type>(c)));
    }
    std::stable_sort(by_weight.begin(), by_weight.end(),
                     [&weight](auto a, auto b) { return weight[a] > weight[b]; });
    std::vector<column_type> perm(n);
    for (std::size_t k = 0; k < n; ++k) {
      perm[by_weight[k]] = static_cast<column_type>(k);
    }
    EchelonBasis<F> b(n);
    for (auto const& r : s.rows()) {
      SparseVec<F> row;
      for (auto const& [c, x] : r) {
        row.emplace_back(perm[c], x);
      }
      std::sort(row.begin(), row.end(),
                [](auto const& x, auto const& y) { return x.first < y.first; });
      b.insert(row);
    }
    std::vector<Poly<F>> tops;
    for (auto const& row : b.take_rref()) {
      unsigned const top = weight[by_weight[row.front().first]];
      Poly<F>        p;
      for (auto const& [c, x] : row) {
        if (weight[by_weight[c]] == top) {
          p.add_term(amb.word_at(by_weight[c]), x);
        }
      }
      tops.push_back(std::move(p));
    }
    return span(tops, s.ambient());
  }

  ////////////////////////////////////////////////////////////////////////
  // Cyclic symmetry of the K3 presentations
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Vertex set of a label "u(1)", "u(23)".
    inline std::set<int> label_vertices(std::string const& label) {
      if (label.size() < 4 || label.rfind("u(", 0) != 0 || label.back() != ')') {
        throw std::invalid_argument("label '" + label + "' is not of the form u(A)");
      }
      std::set<int> out;
      for (std::size_t i = 2; i + 1 < label.size(); ++i) {
        out.insert(label[i] - '0');
      }
      return out;
    }

    // Image of each generator under u(A) -> u(sigma(A)), sigma = (1 2 3).
    inline std::vector<letter_type> cyclic_shift(Alphabet const& a) {
      std::map<std::set<int>, letter_type> by_set;
      for (auto const& g : a) {
        by_set[label_vertices(g.label)] = g.id;
      }
      std::vector<letter_type> image;
      for (auto const& g : a) {
        std::set<int> moved;
        for (int v : label_vertices(g.label)) {
          moved.insert(v % 3 + 1);
        }
        auto it = by_set.find(moved);
        if (it == by_set.end()) {
          throw std::invalid_argument("generators are not closed under the 3-cycle");
        }
        image.push_back(it->second);
      }
      return image;
    }
  }  // namespace detail

  template <exact_field F>
  Poly<F> apply_letter_map(Poly<F> const& p, std::vector<letter_type> const& image) {
    Poly<F> out;
    for (auto const& [w, c] : p.terms()) {
      Word v;
      for (auto x : w) {
        v.push_back(image.at(x));
      }
      out.add_term(v, c);
    }
    return out;
  }

  // T: u(A) -> u(sigma(A)). True when T maps span R onto itself.
  template <exact_field F>
  bool is_cyclically_invariant(Presentation<F> const& pres) {
    auto image = detail::cyclic_shift(pres.generators);
    auto v2    = GradedComponent::full(pres.generators, 2);
    std::vector<Poly<F>> moved;
    for (auto const& r : pres.relations) {
      moved.push_back(apply_letter_map(r, image));
    }
    return span(pres.relations, v2) == span(moved, v2);
  }

  // Generators of the eigenbasis presentation, in this order:
  //   a = v_1, b = v_2, c = v_3       (weight 1)
  //   d = u_1, e = u_w, f = u_w2      (weight 2)
  // with v_1 = u(1)+u(2)+u(3), v_2 = u(1)+w u(2)+w^2 u(3),
  // v_3 = u(1)+w^2 u(2)+w u(3), u_1 = u(12)+u(23)+u(13),
  // u_w = u(12)+w u(23)+w^2 u(13), u_w2 = u(12)+w^2 u(23)+w u(13).
  inline Alphabet eigen_alphabet() {
    return Alphabet({{0, "v_1", 1, "a"},
                     {0, "v_2", 1, "b"},
                     {0, "v_3", 1, "c"},
                     {0, "u_1", 2, "d"},
                     {0, "u_w", 2, "e"},
                     {0, "u_w2", 2, "f"}});
  }

  // Rewrites R in the eigenbasis of T over Q(w). Requires the six K3
  // generators and a T-invariant relation span.
  inline Presentation<Cyclotomic> eigenbasis(Presentation<Rational> const& pres) {
    auto const& A = pres.generators;
    if (A.size() != 6) {
      throw std::invalid_argument("eigenbasis needs the six K3 generators");
    }
    for (auto const* name : {"u(1)", "u(2)", "u(3)", "u(12)", "u(23)", "u(13)"}) {
      if (!A.find(name)) {
        throw std::invalid_argument(std::string("missing generator ") + name);
      }
    }
    if (!is_cyclically_invariant(pres)) {
      throw std::invalid_argument("relations are not invariant under the 3-cycle");
    }
    using C        = Cyclotomic;
    using P        = Poly<C>;
    Alphabet  E    = eigen_alphabet();
    C const   w    = C::omega();
    C const   w2   = w * w;
    C const   third(Rational(1, 3), Rational());
    auto      lt   = [&E](char c) { return P::letter(E.at(std::string_view(&c, 1))); };
    P a = lt('a'), b = lt('b'), c = lt('c'), d = lt('d'), e = lt('e'), f = lt('f');
    // Inverse change of basis: x_k = (1/3) sum_j conj(chi_j(k)) y_j.
    std::vector<P> image(6);
    image[A.at("u(1)")]  = third * (a + b + c);
    image[A.at("u(2)")]  = third * (a + w2 * b + w * c);
    image[A.at("u(3)")]  = third * (a + w * b + w2 * c);
    image[A.at("u(12)")] = third * (d + e + f);
    image[A.at("u(23)")] = third * (d + w2 * e + w * f);
    image[A.at("u(13)")] = third * (d + w * e + w2 * f);
    Presentation<C> out;
    out.name       = "eigen(" + pres.name + ")";
    out.generators = E;
    for (auto const& r : pres.relations) {
      out.relations.push_back(r.map_field<C>().substitute(image));
    }
    return out;
  }

  // T in the eigenbasis: v_1, u_1 fixed; v_2, u_w scale by w^2; v_3, u_w2
  // scale by w.
  inline Poly<Cyclotomic> eigen_action(Poly<Cyclotomic> const& p) {
    using C = Cyclotomic;
    C const          w = C::omega();
    std::vector<C>   scale{C::one(), w * w, w, C::one(), w * w, w};
    Poly<C>          out;
    for (auto const& [word, c] : p.terms()) {
      C s = c;
      for (auto x : word) {
        s *= scale[x];
      }
      out.add_term(word, s);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Koszulness certificate
  ////////////////////////////////////////////////////////////////////////

  enum class CertificateScope {
    unrestricted,        // one cell per (n, a) in the whole tensor power
    all_weights,         // every weight vector
    decreasing_weights,  // weakly decreasing weight vectors
    reduced,             // (2,...,2) and (2,...,2,1) with a = 2 only
  };

  inline std::string scope_str(CertificateScope s) {
    switch (s) {
      case CertificateScope::unrestricted:
        return "unrestricted";
      case CertificateScope::all_weights:
        return "all";
      case CertificateScope::decreasing_weights:
        return "decreasing";
      case CertificateScope::reduced:
        return "reduced";
    }
    return "?";
  }

  struct CertificateCell {
    std::size_t                 n = 0;
    std::size_t                 a = 0;
    std::optional<WeightVector> weight;
    std::size_t                 dim_x = 0, dim_y = 0, dim_z = 0;
    std::size_t                 median_left = 0, median_right = 0;
    bool                        pass = false;
  };

  struct KoszulReport {
    std::size_t                  n_max = 0;
    CertificateScope             scope = CertificateScope::unrestricted;
    bool                         weight_graded = false;
    std::vector<CertificateCell> cells;
    std::vector<mpz_class>       primal_dims;
    std::vector<mpz_class>       dual_dims;
    std::vector<mpz_class>       convolution;

    bool cells_pass() const {
      return std::all_of(cells.begin(), cells.end(), [](auto const& c) { return c.pass; });
    }
    bool convolution_ok() const {
      for (std::size_t i = 0; i < convolution.size(); ++i) {
        if (convolution[i] != (i == 0 ? 1 : 0)) {
          return false;
        }
      }
      return true;
    }
    bool pass() const {
      return cells_pass() && convolution_ok();
    }
  };

  // The triple (X, Y, Z) = (intersection of V^i R V^(n-2-i) for i < a-1,
  // V^(a-1) R V^(n-a-1), sum of V^i R V^(n-2-i) for i >= a) in one component.
  template <exact_field F>
  CertificateCell certificate_cell(RelationLattice<F> const&          lat,
                                   std::size_t                        n,
                                   std::size_t                        a,
                                   std::optional<WeightVector> const& weight) {
    auto c     = lat.component(n, weight);
    auto slots = lat.slots(c);
    std::vector<Subspace<F>> head(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(a - 1));
    std::vector<Subspace<F>> tail(slots.begin() + static_cast<std::ptrdiff_t>(a), slots.end());
    Subspace<F> x   = intersect(head, c);
    Subspace<F> y   = slots[a - 1];
    Subspace<F> z   = sum(tail, c);
    auto        rep = triple_medians(x, y, z);
    return {n,       a,       weight,
            x.dim(), y.dim(), z.dim(),
            rep.median_left.dim(), rep.median_right.dim(), rep.distributive};
  }

  // Distributive-triple checks for 4 <= n <= n_max and 2 <= a <= n-2, plus
  // the Hilbert series duality through n_max. A finite-degree certificate
  // only: it says nothing beyond n_max.
  template <exact_field F>
  KoszulReport koszul_certificate(Presentation<F> const& pres,
                                  std::size_t            n_max,
                                  CertificateScope       scope) {
    RelationLattice<F> lat(pres);
    KoszulReport       rep;
    rep.n_max         = n_max;
    rep.weight_graded = lat.weight_graded();
    if (scope != CertificateScope::unrestricted && !lat.weight_graded()) {
      // Weight components only split the lattice when R is graded.
      scope = CertificateScope::unrestricted;
    }
    rep.scope = scope;
    for (std::size_t n = 4; n <= n_max; ++n) {
      std::vector<std::optional<WeightVector>> comps;
      switch (scope) {
        case CertificateScope::unrestricted:
          comps.emplace_back(std::nullopt);
          break;
        case CertificateScope::all_weights:
        case CertificateScope::decreasing_weights:
          for (auto& w : weight_vectors(lat.alphabet(), n,
                                        scope == CertificateScope::decreasing_weights)) {
            comps.emplace_back(std::move(w));
          }
          break;
        case CertificateScope::reduced: {
          WeightVector twos(n, 2);
          comps.emplace_back(twos);
          twos.back() = 1;
          comps.emplace_back(twos);
          break;
        }
      }
      std::size_t const a_max = scope == CertificateScope::reduced ? 2 : n - 2;
      for (auto const& w : comps) {
        for (std::size_t a = 2; a <= a_max; ++a) {
          rep.cells.push_back(certificate_cell(lat, n, a, w));
        }
      }
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
      rep.primal_dims.push_back(graded_dim(lat, n));
      rep.dual_dims.push_back(dual_dim(lat, n));
    }
    rep.convolution = duality_convolution(rep.primal_dims, rep.dual_dims);
    return rep;
  }

}  // namespace nckoszul

#endif  // NCKOSZUL_QUADRATIC_HPP_
