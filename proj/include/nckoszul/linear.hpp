#ifndef NCKOSZUL_LINEAR_HPP_
#define NCKOSZUL_LINEAR_HPP_

// Exact linear algebra on graded components of tensor powers of V.
//
// A Subspace is stored as the reduced row echelon form of a basis, rows
// sparse and sorted by pivot column. The pivot of a row is its smallest
// column, so the representation is unique for each subspace.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "poly.hpp"
#include "word.hpp"

namespace nckoszul {

  using column_type = std::uint32_t;

  template <exact_field F>
  using SparseVec = std::vector<std::pair<column_type, F>>;

  ////////////////////////////////////////////////////////////////////////
  // GradedComponent
  ////////////////////////////////////////////////////////////////////////

  // The span of words x_1...x_n with x_k drawn from a per-slot letter set.
  // With a weight vector (i_1, ..., i_n) slot k holds the letters of weight
  // i_k; without one every slot holds the whole alphabet. Coordinates are
  // mixed radix with slot 0 most significant, i.e. lexicographic by ids.
  class GradedComponent {
   public:
    GradedComponent(Alphabet const& alphabet, std::size_t degree)
        : slots_(degree), alphabet_size_(alphabet.size()) {
      std::vector<letter_type> all(alphabet.size());
      std::iota(all.begin(), all.end(), letter_type(0));
      std::fill(slots_.begin(), slots_.end(), all);
      init();
    }

    GradedComponent(Alphabet const& alphabet, std::vector<unsigned> weights)
        : slots_(weights.size()),
          weights_(std::move(weights)),
          alphabet_size_(alphabet.size()) {
      for (std::size_t k = 0; k < slots_.size(); ++k) {
        for (auto const& g : alphabet) {
          if (g.weight == (*weights_)[k]) {
            slots_[k].push_back(g.id);
          }
        }
      }
      init();
    }

    static std::shared_ptr<GradedComponent const>
    full(Alphabet const& alphabet, std::size_t degree) {
      return std::make_shared<GradedComponent const>(alphabet, degree);
    }

    static std::shared_ptr<GradedComponent const>
    weighted(Alphabet const& alphabet, std::vector<unsigned> weights) {
      return std::make_shared<GradedComponent const>(alphabet,
                                                     std::move(weights));
    }

    std::size_t degree() const {
      return slots_.size();
    }
    std::size_t dim() const {
      return dim_;
    }
    std::optional<std::vector<unsigned>> const& weights() const {
      return weights_;
    }
    bool unrestricted() const {
      return !weights_.has_value();
    }
    std::vector<letter_type> const& slot(std::size_t k) const {
      return slots_[k];
    }
    std::size_t alphabet_size() const {
      return alphabet_size_;
    }

    // Product of slot sizes over [first, last).
    std::size_t span_dim(std::size_t first, std::size_t last) const {
      std::size_t d = 1;
      for (std::size_t k = first; k < last; ++k) {
        d *= slots_[k].size();
      }
      return d;
    }

    std::optional<column_type> index_of(Word const& w) const {
      if (w.size() != degree()) {
        return std::nullopt;
      }
      std::size_t idx = 0;
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] >= alphabet_size_) {
          return std::nullopt;
        }
        int pos = position_[k][w[k]];
        if (pos < 0) {
          return std::nullopt;
        }
        idx = idx * slots_[k].size() + static_cast<std::size_t>(pos);
      }
      return static_cast<column_type>(idx);
    }

    Word word_at(column_type index) const {
      Word::container letters(degree());
      std::size_t     idx = index;
      for (std::size_t k = degree(); k-- > 0;) {
        letters[k] = slots_[k][idx % slots_[k].size()];
        idx /= slots_[k].size();
      }
      return Word(std::move(letters));
    }

    std::vector<Word> basis_words() const {
      std::vector<Word> out;
      out.reserve(dim_);
      for (std::size_t i = 0; i < dim_; ++i) {
        out.push_back(word_at(static_cast<column_type>(i)));
      }
      return out;
    }

    // The component formed by slots [first, first + count).
    GradedComponent slice(std::size_t first, std::size_t count) const {
      GradedComponent out = *this;
      out.slots_.assign(slots_.begin() + first, slots_.begin() + first + count);
      if (weights_) {
        out.weights_ = std::vector<unsigned>(weights_->begin() + first,
                                             weights_->begin() + first + count);
      }
      out.init();
      return out;
    }

    std::string str() const {
      std::string out = "V^" + std::to_string(degree());
      if (weights_) {
        out += "_(";
        for (std::size_t k = 0; k < weights_->size(); ++k) {
          out += (k ? "," : "") + std::to_string((*weights_)[k]);
        }
        out += ")";
      }
      return out;
    }

    friend bool operator==(GradedComponent const& a, GradedComponent const& b) {
      return a.slots_ == b.slots_ && a.alphabet_size_ == b.alphabet_size_;
    }

   private:
    void init() {
      position_.assign(slots_.size(), {});
      dim_ = 1;
      for (std::size_t k = 0; k < slots_.size(); ++k) {
        position_[k].fill(-1);
        for (std::size_t p = 0; p < slots_[k].size(); ++p) {
          position_[k][slots_[k][p]] = static_cast<std::int8_t>(p);
        }
        dim_ *= slots_[k].size();
        if (dim_ > (std::size_t(1) << 30)) {
          throw std::length_error("graded component too large");
        }
      }
    }

    std::vector<std::vector<letter_type>>                   slots_;
    std::optional<std::vector<unsigned>>                    weights_;
    std::vector<std::array<std::int8_t, max_alphabet_size>> position_;
    std::size_t                                             alphabet_size_ = 0;
    std::size_t                                             dim_           = 1;
  };

  using ComponentPtr = std::shared_ptr<GradedComponent const>;

  ////////////////////////////////////////////////////////////////////////
  // EchelonBasis: incremental elimination
  ////////////////////////////////////////////////////////////////////////

  template <exact_field F>
  class EchelonBasis {
   public:
    explicit EchelonBasis(std::size_t ncols)
        : ncols_(ncols), pivot_row_(ncols, -1), work_(ncols), mark_(ncols, 0) {}

    std::size_t ncols() const {
      return ncols_;
    }
    std::size_t rank() const {
      return rows_.size();
    }

    // Adds rows already known to be independent with distinct pivots and
    // leading coefficient one.
    void adopt(SparseVec<F> row) {
      column_type p = row.front().first;
      pivot_row_[p] = static_cast<std::int32_t>(rows_.size());
      rows_.push_back(std::move(row));
    }

    // Returns true when v was independent of the rows so far.
    bool insert(SparseVec<F> const& v) {
      SparseVec<F> r = reduce_impl(v, std::numeric_limits<column_type>::max());
      if (r.empty()) {
        return false;
      }
      F inv = r.front().second.inverse();
      for (auto& [c, x] : r) {
        x = x * inv;
      }
      adopt(std::move(r));
      return true;
    }

    SparseVec<F> reduce(SparseVec<F> const& v) {
      return reduce_impl(v, std::numeric_limits<column_type>::max());
    }

    // Fully reduced rows sorted by pivot. Leaves the basis empty.
    std::vector<SparseVec<F>> take_rref() {
      std::vector<std::size_t> order(rows_.size());
      std::iota(order.begin(), order.end(), std::size_t(0));
      std::sort(order.begin(), order.end(), [this](auto i, auto j) {
        return rows_[i].front().first < rows_[j].front().first;
      });
      // Back substitution: a row only needs rows with larger pivots, which
      // are final by the time it is visited.
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        SparseVec<F>& row = rows_[*it];
        if (row.size() == 1) {
          continue;
        }
        column_type  p = row.front().first;
        SparseVec<F> tail(row.begin() + 1, row.end());
        bool         hits = std::any_of(tail.begin(), tail.end(), [&](auto const& e) {
          return pivot_row_[e.first] >= 0;
        });
        if (!hits) {
          continue;
        }
        SparseVec<F> reduced = reduce_impl(tail, p);
        SparseVec<F> out;
        out.reserve(reduced.size() + 1);
        out.push_back(std::move(row.front()));
        for (auto& e : reduced) {
          out.push_back(std::move(e));
        }
        row = std::move(out);
      }
      std::vector<SparseVec<F>> out;
      out.reserve(rows_.size());
      for (auto i : order) {
        out.push_back(std::move(rows_[i]));
      }
      rows_.clear();
      std::fill(pivot_row_.begin(), pivot_row_.end(), -1);
      return out;
    }

   private:
    // Eliminates pivot columns from v in increasing column order, ignoring
    // the pivot `skip` (used during back substitution).
    SparseVec<F> reduce_impl(SparseVec<F> const& v, column_type skip) {
      using heap_type = std::priority_queue<column_type,
                                            std::vector<column_type>,
                                            std::greater<column_type>>;
      heap_type heap;
      for (auto const& [c, x] : v) {
        if (x.is_zero()) {
          continue;
        }
        if (!mark_[c]) {
          mark_[c] = 1;
          heap.push(c);
          work_[c] = x;
        } else {
          work_[c] += x;
        }
      }
      SparseVec<F> out;
      while (!heap.empty()) {
        column_type c = heap.top();
        heap.pop();
        mark_[c] = 0;
        F x      = std::move(work_[c]);
        work_[c] = F::zero();
        if (x.is_zero()) {
          continue;
        }
        std::int32_t r = pivot_row_[c];
        if (r < 0 || c == skip) {
          out.emplace_back(c, std::move(x));
          continue;
        }
        auto const& row = rows_[static_cast<std::size_t>(r)];
        for (std::size_t k = 1; k < row.size(); ++k) {
          column_type cc = row[k].first;
          if (!mark_[cc]) {
            mark_[cc] = 1;
            heap.push(cc);
            work_[cc] = -(x * row[k].second);
          } else {
            work_[cc] -= x * row[k].second;
          }
        }
      }
      return out;
    }

    std::size_t               ncols_;
    std::vector<SparseVec<F>> rows_;
    std::vector<std::int32_t> pivot_row_;
    std::vector<F>            work_;
    std::vector<std::uint8_t> mark_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Subspace
  ////////////////////////////////////////////////////////////////////////

  class ambient_mismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  template <exact_field F>
  class Subspace {
   public:
    using field_type = F;

    explicit Subspace(ComponentPtr ambient) : ambient_(std::move(ambient)) {}

    // rows must already be in reduced row echelon form, sorted by pivot.
    Subspace(ComponentPtr ambient, std::vector<SparseVec<F>> rref_rows)
        : ambient_(std::move(ambient)), rows_(std::move(rref_rows)) {}

    static Subspace zero(ComponentPtr ambient) {
      return Subspace(std::move(ambient));
    }

    static Subspace full(ComponentPtr ambient) {
      std::vector<SparseVec<F>> rows(ambient->dim());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i] = {{static_cast<column_type>(i), F::one()}};
      }
      return Subspace(std::move(ambient), std::move(rows));
    }

    static Subspace from_vectors(ComponentPtr ambient,
                                 std::vector<SparseVec<F>> const& vectors) {
      EchelonBasis<F> basis(ambient->dim());
      for (auto const& v : vectors) {
        basis.insert(v);
      }
      return Subspace(std::move(ambient), basis.take_rref());
    }

    ComponentPtr const& ambient() const {
      return ambient_;
    }
    std::size_t dim() const {
      return rows_.size();
    }
    bool is_zero() const {
      return rows_.empty();
    }
    std::vector<SparseVec<F>> const& rows() const {
      return rows_;
    }

    SparseVec<F> to_vector(Poly<F> const& p) const {
      SparseVec<F> v;
      v.reserve(p.size());
      for (auto const& [w, c] : p.terms()) {
        auto idx = ambient_->index_of(w);
        if (!idx) {
          throw ambient_mismatch("vector outside " + ambient_->str());
        }
        v.emplace_back(*idx, c);
      }
      std::sort(v.begin(), v.end(), [](auto const& a, auto const& b) {
        return a.first < b.first;
      });
      return v;
    }

    Poly<F> to_poly(SparseVec<F> const& v) const {
      Poly<F> p;
      for (auto const& [c, x] : v) {
        p.add_term(ambient_->word_at(c), x);
      }
      return p;
    }

    std::vector<Poly<F>> basis() const {
      std::vector<Poly<F>> out;
      for (auto const& r : rows_) {
        out.push_back(to_poly(r));
      }
      return out;
    }

    EchelonBasis<F> echelon() const {
      EchelonBasis<F> b(ambient_->dim());
      for (auto const& r : rows_) {
        b.adopt(r);
      }
      return b;
    }

    // Subspace dump: a header line then one dense row per basis vector.
    std::string dump() const {
      std::ostringstream os;
      os << "subspace " << ambient_->str() << " dim " << ambient_->dim()
         << " rank " << rows_.size() << "\n";
      for (auto const& r : rows_) {
        std::size_t k = 0;
        for (std::size_t c = 0; c < ambient_->dim(); ++c) {
          if (c) {
            os << ' ';
          }
          if (k < r.size() && r[k].first == c) {
            os << r[k++].second.str();
          } else {
            os << '0';
          }
        }
        os << "\n";
      }
      return os.str();
    }

    friend bool operator==(Subspace const& a, Subspace const& b) {
      return *a.ambient_ == *b.ambient_ && a.rows_ == b.rows_;
    }

   private:
    ComponentPtr              ambient_;
    std::vector<SparseVec<F>> rows_;
  };

  namespace detail {
    template <exact_field F>
    void require_same_ambient(Subspace<F> const& s, Subspace<F> const& t) {
      if (!(*s.ambient() == *t.ambient())) {
        throw ambient_mismatch("subspaces of " + s.ambient()->str() + " and "
                               + t.ambient()->str());
      }
    }
  }  // namespace detail

  template <exact_field F>
  Subspace<F> span(std::vector<Poly<F>> const& vectors, ComponentPtr ambient) {
    Subspace<F>               probe(ambient);
    std::vector<SparseVec<F>> rows;
    rows.reserve(vectors.size());
    for (auto const& p : vectors) {
      rows.push_back(probe.to_vector(p));
    }
    return Subspace<F>::from_vectors(std::move(ambient), rows);
  }

  template <exact_field F>
  Subspace<F> sum(Subspace<F> const& s, Subspace<F> const& t) {
    detail::require_same_ambient(s, t);
    Subspace<F> const& big   = s.dim() >= t.dim() ? s : t;
    Subspace<F> const& small = s.dim() >= t.dim() ? t : s;
    EchelonBasis<F>    b     = big.echelon();
    bool               grew  = false;
    for (auto const& r : small.rows()) {
      grew = b.insert(r) || grew;
    }
    if (!grew) {
      return big;
    }
    return Subspace<F>(s.ambient(), b.take_rref());
  }

  template <exact_field F>
  Subspace<F> sum(std::vector<Subspace<F>> const& parts, ComponentPtr ambient) {
    if (parts.empty()) {
      return Subspace<F>::zero(std::move(ambient));
    }
    Subspace<F> acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
      acc = sum(acc, parts[i]);
    }
    return acc;
  }

  // Zassenhaus: eliminate the rows (s | s) and (t | 0); rows whose pivot
  // falls in the right half span the intersection.
  template <exact_field F>
  Subspace<F> intersect(Subspace<F> const& s, Subspace<F> const& t) {
    detail::require_same_ambient(s, t);
    if (s.is_zero() || t.is_zero()) {
      return Subspace<F>::zero(s.ambient());
    }
    column_type const n = static_cast<column_type>(s.ambient()->dim());
    if (s.dim() == n) {
      return t;
    }
    if (t.dim() == n) {
      return s;
    }
    EchelonBasis<F> b(2 * std::size_t(n));
    for (auto const& r : s.rows()) {
      SparseVec<F> row = r;
      row.reserve(2 * r.size());
      for (auto const& [c, x] : r) {
        row.emplace_back(c + n, x);
      }
      b.insert(row);
    }
    for (auto const& r : t.rows()) {
      b.insert(r);
    }
    std::vector<SparseVec<F>> right;
    for (auto& row : b.take_rref()) {
      if (row.front().first >= n) {
        for (auto& e : row) {
          e.first -= n;
        }
        right.push_back(std::move(row));
      }
    }
    return Subspace<F>(s.ambient(), std::move(right));
  }

  template <exact_field F>
  Subspace<F> intersect(std::vector<Subspace<F>> const& parts,
                        ComponentPtr                    ambient) {
    if (parts.empty()) {
      return Subspace<F>::full(std::move(ambient));
    }
    Subspace<F> acc = parts.front();
    for (std::size_t i = 1; i < parts.size() && !acc.is_zero(); ++i) {
      acc = intersect(acc, parts[i]);
    }
    return acc;
  }

  template <exact_field F>
  bool contains(Subspace<F> const& s, SparseVec<F> const& v) {
    return s.echelon().reduce(v).empty();
  }

  template <exact_field F>
  bool contains(Subspace<F> const& s, Poly<F> const& v) {
    return contains(s, s.to_vector(v));
  }

  template <exact_field F>
  bool is_subspace_of(Subspace<F> const& s, Subspace<F> const& t) {
    detail::require_same_ambient(s, t);
    if (s.dim() > t.dim()) {
      return false;
    }
    auto b = t.echelon();
    return std::all_of(s.rows().begin(), s.rows().end(), [&b](auto const& r) {
      return b.reduce(r).empty();
    });
  }

  // Median equality for a triple in the modular lattice of subspaces:
  // (X^Y)+(Y^Z)+(Z^X) = (X+Y)^(Y+Z)^(Z+X).
  template <exact_field F>
  struct TripleReport {
    Subspace<F> median_left;
    Subspace<F> median_right;
    bool        distributive;
  };

  template <exact_field F>
  TripleReport<F> triple_medians(Subspace<F> const& x,
                                 Subspace<F> const& y,
                                 Subspace<F> const& z) {
    detail::require_same_ambient(x, y);
    detail::require_same_ambient(y, z);
    Subspace<F> left
        = sum(sum(intersect(x, y), intersect(y, z)), intersect(z, x));
    Subspace<F> right
        = intersect(intersect(sum(x, y), sum(y, z)), sum(z, x));
    bool ok = left == right;
    return {std::move(left), std::move(right), ok};
  }

  template <exact_field F>
  bool distributive_triple(Subspace<F> const& x,
                           Subspace<F> const& y,
                           Subspace<F> const& z) {
    return triple_medians(x, y, z).distributive;
  }

  ////////////////////////////////////////////////////////////////////////
  // Debug oracle: explicit sublattice closure
  ////////////////////////////////////////////////////////////////////////

  // Closes a family under + and intersection. The free modular lattice on
  // three generators has 28 elements, so `limit` only guards misuse.
  template <exact_field F>
  std::vector<Subspace<F>> generated_sublattice(std::vector<Subspace<F>> gens,
                                                std::size_t limit = 64) {
    std::vector<Subspace<F>> elems;
    auto add = [&elems](Subspace<F> s) {
      for (auto const& e : elems) {
        if (e == s) {
          return false;
        }
      }
      elems.push_back(std::move(s));
      return true;
    };
    for (auto& g : gens) {
      add(std::move(g));
    }
    bool changed = true;
    while (changed) {
      changed = false;
      std::size_t const n = elems.size();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          changed = add(sum(elems[i], elems[j])) || changed;
          changed = add(intersect(elems[i], elems[j])) || changed;
          if (elems.size() > limit) {
            throw std::length_error("sublattice closure exceeded limit");
          }
        }
      }
    }
    return elems;
  }

  template <exact_field F>
  bool lattice_is_distributive(std::vector<Subspace<F>> const& elems) {
    for (auto const& a : elems) {
      for (auto const& b : elems) {
        for (auto const& c : elems) {
          if (!(intersect(a, sum(b, c))
                == sum(intersect(a, b), intersect(a, c)))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structured constructions
  ////////////////////////////////////////////////////////////////////////

  // V^i (x) S (x) V^j inside `ambient`, where S lives in the slice of
  // `ambient` covering slots [i, i + m) and the outer factors are the full
  // slot spans. The result is already in RREF.
  template <exact_field F>
  Subspace<F> tensor_embed(ComponentPtr       ambient,
                           std::size_t        i,
                           Subspace<F> const& inner) {
    std::size_t const m     = inner.ambient()->degree();
    std::size_t const left  = ambient->span_dim(0, i);
    std::size_t const mid   = ambient->span_dim(i, i + m);
    std::size_t const right = ambient->span_dim(i + m, ambient->degree());
    if (mid != inner.ambient()->dim()) {
      throw ambient_mismatch("inner component does not match the slots");
    }
    struct Entry {
      std::size_t l, r, k;
    };
    // Sort by pivot: pivot(l, r, k) = l*mid*right + piv(k)*right + r.
    std::vector<Entry> order;
    order.reserve(left * right * inner.dim());
    for (std::size_t l = 0; l < left; ++l) {
      for (std::size_t k = 0; k < inner.dim(); ++k) {
        for (std::size_t r = 0; r < right; ++r) {
          order.push_back({l, r, k});
        }
      }
    }
    auto pivot = [&](Entry const& e) {
      return (e.l * mid + inner.rows()[e.k].front().first) * right + e.r;
    };
    std::sort(order.begin(), order.end(), [&](auto const& a, auto const& b) {
      return pivot(a) < pivot(b);
    });
    std::vector<SparseVec<F>> rows;
    rows.reserve(order.size());
    for (auto const& e : order) {
      SparseVec<F> row;
      row.reserve(inner.rows()[e.k].size());
      for (auto const& [c, x] : inner.rows()[e.k]) {
        row.emplace_back(
            static_cast<column_type>((e.l * mid + c) * right + e.r), x);
      }
      rows.push_back(std::move(row));
    }
    return Subspace<F>(std::move(ambient), std::move(rows));
  }

  // S intersected with the coordinate subspace spanned by `target`'s basis
  // words, re-expressed in target coordinates.
  template <exact_field F>
  Subspace<F> restrict_to(Subspace<F> const& s, ComponentPtr target) {
    auto const& source = *s.ambient();
    if (source.degree() != target->degree()) {
      throw ambient_mismatch("restriction changes degree");
    }
    std::size_t const        n = source.dim();
    std::vector<std::int64_t> inside(n, -1);
    for (std::size_t c = 0; c < target->dim(); ++c) {
      auto idx = source.index_of(target->word_at(static_cast<column_type>(c)));
      if (!idx) {
        throw ambient_mismatch("target is not a sub-component");
      }
      inside[*idx] = static_cast<std::int64_t>(c);
    }
    // Put outside columns first so elimination clears them before any
    // inside column becomes a pivot.
    std::size_t const         outside = n - target->dim();
    std::vector<column_type> perm(n);
    std::size_t               next_out = 0;
    for (std::size_t c = 0; c < n; ++c) {
      perm[c] = inside[c] < 0 ? static_cast<column_type>(next_out++)
                              : static_cast<column_type>(outside + inside[c]);
    }
    EchelonBasis<F> b(n);
    for (auto const& r : s.rows()) {
      SparseVec<F> row;
      row.reserve(r.size());
      for (auto const& [c, x] : r) {
        row.emplace_back(perm[c], x);
      }
      std::sort(row.begin(), row.end(), [](auto const& a, auto const& b2) {
        return a.first < b2.first;
      });
      b.insert(row);
    }
    std::vector<SparseVec<F>> kept;
    for (auto& row : b.take_rref()) {
      if (row.front().first >= outside) {
        for (auto& e : row) {
          e.first -= static_cast<column_type>(outside);
        }
        kept.push_back(std::move(row));
      }
    }
    return Subspace<F>(std::move(target), std::move(kept));
  }

  // Nullspace of a dense matrix given by rows over F.
  template <exact_field F>
  std::vector<std::vector<F>> kernel(std::vector<std::vector<F>> const& rows,
                                     std::size_t                       ncols) {
    EchelonBasis<F> b(ncols);
    for (auto const& r : rows) {
      SparseVec<F> v;
      for (std::size_t c = 0; c < ncols; ++c) {
        if (!r[c].is_zero()) {
          v.emplace_back(static_cast<column_type>(c), r[c]);
        }
      }
      b.insert(v);
    }
    auto                     rref = b.take_rref();
    std::vector<std::int64_t> pivot_of(ncols, -1);
    for (std::size_t i = 0; i < rref.size(); ++i) {
      pivot_of[rref[i].front().first] = static_cast<std::int64_t>(i);
    }
    std::vector<std::vector<F>> out;
    for (std::size_t free = 0; free < ncols; ++free) {
      if (pivot_of[free] >= 0) {
        continue;
      }
      std::vector<F> v(ncols, F::zero());
      v[free] = F::one();
      for (auto const& row : rref) {
        for (auto const& [c, x] : row) {
          if (c == free) {
            v[row.front().first] = -x;
          }
        }
      }
      out.push_back(std::move(v));
    }
    return out;
  }

}  // namespace nckoszul

#endif  // NCKOSZUL_LINEAR_HPP_
