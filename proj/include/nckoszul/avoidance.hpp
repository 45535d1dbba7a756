#ifndef NCKOSZUL_AVOIDANCE_HPP_
#define NCKOSZUL_AVOIDANCE_HPP_

// Counting words that avoid a set of forbidden factors. Factors are plain
// words or single-star patterns u g^j v (j >= 1); both are compiled into
// one deterministic automaton by subset construction, so the infinite
// families are handled exactly.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"
#include "linear.hpp"
#include "word.hpp"

namespace nckoszul {

  struct Pattern {
    Word                       prefix;
    std::optional<letter_type> star;
    Word                       suffix;

    static Pattern word(Word w) {
      return {std::move(w), std::nullopt, {}};
    }
    static Pattern starred(Word prefix, letter_type g, Word suffix) {
      return {std::move(prefix), g, std::move(suffix)};
    }

    bool is_word() const {
      return !star.has_value();
    }

    // The word prefix * g^j * suffix (or the plain word when unstarred).
    Word instance(std::size_t j) const {
      Word w = prefix;
      if (star) {
        for (std::size_t i = 0; i < j; ++i) {
          w.push_back(*star);
        }
      }
      w += suffix;
      return w;
    }

    std::size_t min_length() const {
      return prefix.size() + suffix.size() + (star ? 1 : 0);
    }

    std::string str(Alphabet const& alphabet) const {
      std::string out = prefix.empty() ? "" : alphabet.str(prefix, "");
      if (star) {
        out += alphabet[*star].display() + "*";
      }
      out += suffix.empty() ? "" : alphabet.str(suffix, "");
      return out;
    }

    friend bool operator==(Pattern const&, Pattern const&) = default;
  };

  // "ef*b" is e f^j b for j >= 1; other text is a literal word. Letters are
  // one-character display names.
  inline Pattern parse_pattern(Alphabet const& alphabet, std::string_view text) {
    auto star = text.find('*');
    if (star == std::string_view::npos) {
      return Pattern::word(alphabet.word(text));
    }
    if (star == 0 || text.find('*', star + 1) != std::string_view::npos) {
      throw std::invalid_argument("pattern '" + std::string(text)
                                  + "' must contain one starred letter");
    }
    Word head = alphabet.word(text.substr(0, star - 1));
    auto g    = alphabet.at(text.substr(star - 1, 1));
    Word tail = alphabet.word(text.substr(star + 1));
    return Pattern::starred(head, g, tail);
  }

  inline std::vector<Pattern> parse_patterns(Alphabet const& alphabet,
                                             std::string_view text) {
    std::vector<Pattern> out;
    std::size_t          start = 0;
    while (start < text.size()) {
      auto stop = text.find(',', start);
      if (stop == std::string_view::npos) {
        stop = text.size();
      }
      auto tok = text.substr(start, stop - start);
      while (!tok.empty() && tok.front() == ' ') {
        tok.remove_prefix(1);
      }
      while (!tok.empty() && tok.back() == ' ') {
        tok.remove_suffix(1);
      }
      if (!tok.empty()) {
        out.push_back(parse_pattern(alphabet, tok));
      }
      start = stop + 1;
    }
    return out;
  }

  class Automaton {
   public:
    static constexpr std::int32_t reject = -1;

    Automaton(std::size_t alphabet_size, std::size_t states)
        : alphabet_size_(alphabet_size),
          next_(alphabet_size * states, reject) {}

    std::size_t alphabet_size() const {
      return alphabet_size_;
    }
    std::size_t num_states() const {
      return alphabet_size_ == 0 ? 1 : next_.size() / alphabet_size_;
    }
    std::int32_t start() const {
      return 0;
    }
    std::int32_t step(std::int32_t state, letter_type x) const {
      return next_[static_cast<std::size_t>(state) * alphabet_size_ + x];
    }
    void set(std::int32_t state, letter_type x, std::int32_t to) {
      next_[static_cast<std::size_t>(state) * alphabet_size_ + x] = to;
    }

    bool accepts(Word const& w) const {
      std::int32_t s = start();
      for (auto x : w) {
        if (x >= alphabet_size_) {
          return false;
        }
        s = step(s, x);
        if (s == reject) {
          return false;
        }
      }
      return true;
    }

   private:
    std::size_t               alphabet_size_;
    std::vector<std::int32_t> next_;
  };

  inline Automaton build_automaton(std::size_t                 alphabet_size,
                                   std::vector<Pattern> const& forbidden) {
    // NFA: state 0 loops on every letter; pattern p contributes a chain of
    // states, one per element, with a self-loop on the starred element.
    struct Element {
      letter_type letter;
      bool        loops;
    };
    std::vector<std::vector<Element>> chains;
    for (auto const& p : forbidden) {
      std::vector<Element> chain;
      for (auto x : p.prefix) {
        chain.push_back({x, false});
      }
      if (p.star) {
        chain.push_back({*p.star, true});
      }
      for (auto x : p.suffix) {
        chain.push_back({x, false});
      }
      if (chain.empty()) {
        throw std::invalid_argument("empty forbidden word rejects everything");
      }
      for (auto const& e : chain) {
        if (e.letter >= alphabet_size) {
          throw std::invalid_argument("pattern letter outside the alphabet");
        }
      }
      chains.push_back(std::move(chain));
    }
    // NFA state ids: 0 is the root, then chain states numbered consecutively.
    std::vector<std::size_t> base(chains.size());
    std::size_t              total = 1;
    for (std::size_t i = 0; i < chains.size(); ++i) {
      base[i] = total;
      total += chains[i].size();
    }
    std::vector<bool> final_state(total, false);
    // nfa[s][x] -> successors
    std::vector<std::vector<std::vector<std::uint32_t>>> nfa(
        total, std::vector<std::vector<std::uint32_t>>(alphabet_size));
    for (letter_type x = 0; x < alphabet_size; ++x) {
      nfa[0][x].push_back(0);
    }
    for (std::size_t i = 0; i < chains.size(); ++i) {
      auto const& chain = chains[i];
      for (std::size_t k = 0; k < chain.size(); ++k) {
        std::uint32_t from = k == 0 ? 0 : static_cast<std::uint32_t>(base[i] + k - 1);
        std::uint32_t to   = static_cast<std::uint32_t>(base[i] + k);
        nfa[from][chain[k].letter].push_back(to);
        if (chain[k].loops) {
          nfa[to][chain[k].letter].push_back(to);
        }
      }
      final_state[base[i] + chain.size() - 1] = true;
    }

    using subset = std::vector<std::uint32_t>;
    std::map<subset, std::int32_t> index;
    std::vector<subset>            states;
    states.push_back({0});
    index[states[0]] = 0;
    std::vector<std::vector<std::int32_t>> table;
    for (std::size_t s = 0; s < states.size(); ++s) {
      table.emplace_back(alphabet_size, Automaton::reject);
      for (letter_type x = 0; x < alphabet_size; ++x) {
        subset next;
        for (auto q : states[s]) {
          auto const& succ = nfa[q][x];
          next.insert(next.end(), succ.begin(), succ.end());
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        bool matched = std::any_of(next.begin(), next.end(), [&](auto q) {
          return final_state[q];
        });
        if (matched) {
          continue;
        }
        auto [it, inserted]
            = index.try_emplace(next, static_cast<std::int32_t>(states.size()));
        if (inserted) {
          states.push_back(next);
        }
        table[s][x] = it->second;
      }
    }
    Automaton aut(alphabet_size, states.size());
    for (std::size_t s = 0; s < states.size(); ++s) {
      for (letter_type x = 0; x < alphabet_size; ++x) {
        aut.set(static_cast<std::int32_t>(s), x, table[s][x]);
      }
    }
    return aut;
  }

  // Accepted words of lengths 0..n_max via the transfer matrix.
  inline std::vector<mpz_class> counts(Automaton const& aut, std::size_t n_max) {
    std::vector<mpz_class> cur(aut.num_states(), 0), next(aut.num_states());
    cur[0] = 1;
    std::vector<mpz_class> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0;; ++n) {
      mpz_class total = 0;
      for (auto const& v : cur) {
        total += v;
      }
      out.push_back(total);
      if (n == n_max) {
        break;
      }
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t s = 0; s < cur.size(); ++s) {
        if (cur[s] == 0) {
          continue;
        }
        for (letter_type x = 0; x < aut.alphabet_size(); ++x) {
          auto t = aut.step(static_cast<std::int32_t>(s), x);
          if (t != Automaton::reject) {
            next[static_cast<std::size_t>(t)] += cur[s];
          }
        }
      }
      std::swap(cur, next);
    }
    return out;
  }

  inline mpz_class count(Automaton const& aut, std::size_t n) {
    return counts(aut, n).back();
  }

  ////////////////////////////////////////////////////////////////////////
  // Recurrences and rational generating functions
  ////////////////////////////////////////////////////////////////////////

  class fit_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // T_n = sum_i c_i T_{n-i} for every n >= start, equivalently
  // sum_n T_n x^n = numerator / denominator with denominator(0) = 1.
  struct SeriesFit {
    std::vector<Rational>  recurrence;
    std::size_t            start = 0;
    std::vector<mpz_class> initial;
    std::vector<Rational>  numerator;
    std::vector<Rational>  denominator;
    std::size_t            verified_through = 0;
    std::vector<mpz_class> counts;

    std::size_t order() const {
      return recurrence.size();
    }

    // First n_terms power series coefficients of numerator / denominator.
    std::vector<Rational> expand(std::size_t n_terms) const {
      std::vector<Rational> out(n_terms);
      for (std::size_t n = 0; n < n_terms; ++n) {
        Rational t = n < numerator.size() ? numerator[n] : Rational();
        for (std::size_t i = 1; i < denominator.size() && i <= n; ++i) {
          t -= denominator[i] * out[n - i];
        }
        out[n] = t;
      }
      return out;
    }
  };

  namespace detail {
    inline void trim(std::vector<Rational>& p) {
      while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
      }
    }

    inline std::vector<Rational> poly_mul(std::vector<Rational> const& a,
                                          std::vector<Rational> const& b) {
      if (a.empty() || b.empty()) {
        return {};
      }
      std::vector<Rational> out(a.size() + b.size() - 1);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          out[i + j] += a[i] * b[j];
        }
      }
      trim(out);
      return out;
    }

    // Kernel vectors (k_0, ..., k_d) of the Hankel-type rows
    // (T_n, T_{n-1}, ..., T_{n-d}) for start <= n < len.
    inline std::optional<std::vector<Rational>>
    recurrence_kernel(std::vector<mpz_class> const& t,
                      std::size_t                   d,
                      std::size_t                   start) {
      std::vector<std::vector<Rational>> rows;
      for (std::size_t n = start; n < t.size(); ++n) {
        std::vector<Rational> row(d + 1);
        for (std::size_t i = 0; i <= d; ++i) {
          row[i] = Rational(mpq_class(t[n - i]));
        }
        rows.push_back(std::move(row));
      }
      for (auto& k : kernel(rows, d + 1)) {
        if (!k[0].is_zero()) {
          Rational inv = k[0].inverse();
          for (auto& x : k) {
            x = x * inv;
          }
          return k;
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  // Minimal-order recurrence (then minimal start) fitting every term, with
  // at least two equations beyond the number of unknowns.
  inline SeriesFit fit_recurrence(std::vector<mpz_class> const& counts,
                                  std::size_t                   max_order) {
    std::size_t const len = counts.size();
    if (len < 2 * max_order + 2) {
      throw std::invalid_argument("fit_recurrence needs at least "
                                  + std::to_string(2 * max_order + 2)
                                  + " terms");
    }
    for (std::size_t d = 0; d <= max_order; ++d) {
      for (std::size_t start = d; start + d + 2 <= len; ++start) {
        auto k = detail::recurrence_kernel(counts, d, start);
        if (!k) {
          continue;
        }
        SeriesFit fit;
        fit.start = start;
        fit.initial.assign(counts.begin(), counts.begin() + start);
        fit.denominator = *k;
        for (std::size_t i = 1; i <= d; ++i) {
          fit.recurrence.push_back(-(*k)[i]);
        }
        std::vector<Rational> series;
        for (std::size_t n = 0; n < start; ++n) {
          series.push_back(Rational(mpq_class(counts[n])));
        }
        fit.numerator = detail::poly_mul(fit.denominator, series);
        fit.numerator.resize(std::min(fit.numerator.size(), start));
        detail::trim(fit.numerator);
        fit.verified_through = len - 1;
        fit.counts           = counts;
        auto check           = fit.expand(len);
        for (std::size_t n = 0; n < len; ++n) {
          if (!(check[n] == Rational(mpq_class(counts[n])))) {
            throw fit_error("internal: fitted series does not reproduce term "
                            + std::to_string(n));
          }
        }
        return fit;
      }
    }
    throw fit_error("no linear recurrence of order <= "
                    + std::to_string(max_order) + " fits "
                    + std::to_string(len) + " terms");
  }

  inline bool series_equal(SeriesFit const& f1,
                           SeriesFit const& f2,
                           std::size_t      horizon) {
    if (f1.verified_through < horizon || f2.verified_through < horizon) {
      throw std::invalid_argument("series not verified through the horizon");
    }
    if (f1.expand(horizon + 1) != f2.expand(horizon + 1)) {
      return false;
    }
    return detail::poly_mul(f1.numerator, f2.denominator)
           == detail::poly_mul(f2.numerator, f1.denominator);
  }

  inline std::string polynomial_str(std::vector<Rational> const& p,
                                    std::string_view             var = "x") {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].is_zero()) {
        continue;
      }
      Rational mag = p[i].sign() < 0 ? -p[i] : p[i];
      if (out.empty()) {
        out += p[i].sign() < 0 ? "-" : "";
      } else {
        out += p[i].sign() < 0 ? " - " : " + ";
      }
      if (i == 0 || !mag.is_one()) {
        out += mag.str();
      }
      if (i >= 1) {
        out += std::string(var);
      }
      if (i >= 2) {
        out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

}  // namespace nckoszul

#endif  // NCKOSZUL_AVOIDANCE_HPP_
