#ifndef NCKOSZUL_POLY_HPP_
#define NCKOSZUL_POLY_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "field.hpp"
#include "word.hpp"

namespace nckoszul {

  class parse_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Element of the free associative algebra over F. Zero coefficients are
  // never stored.
  template <exact_field F>
  class Poly {
   public:
    using field_type = F;
    using term_map   = std::map<Word, F>;

    Poly() = default;
    explicit Poly(F c) {
      add_term(Word(), std::move(c));
    }

    static Poly monomial(Word w, F c = F::one()) {
      Poly p;
      p.add_term(std::move(w), std::move(c));
      return p;
    }
    static Poly letter(letter_type x) {
      return monomial(Word{x});
    }

    term_map const& terms() const {
      return terms_;
    }
    std::size_t size() const {
      return terms_.size();
    }
    bool is_zero() const {
      return terms_.empty();
    }

    F coefficient(Word const& w) const {
      auto it = terms_.find(w);
      return it == terms_.end() ? F::zero() : it->second;
    }

    Poly& add_term(Word const& w, F const& c) {
      if (c.is_zero()) {
        return *this;
      }
      auto [it, inserted] = terms_.try_emplace(w, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
          terms_.erase(it);
        }
      }
      return *this;
    }

    std::size_t degree() const {
      std::size_t d = 0;
      for (auto const& [w, c] : terms_) {
        d = std::max(d, w.size());
      }
      return d;
    }

    bool is_homogeneous() const {
      if (terms_.empty()) {
        return true;
      }
      std::size_t d = terms_.begin()->first.size();
      return std::all_of(terms_.begin(), terms_.end(), [d](auto const& t) {
        return t.first.size() == d;
      });
    }

    std::pair<Word, F> leading_term(MonomialOrder const& order) const {
      if (terms_.empty()) {
        throw std::invalid_argument("leading term of the zero polynomial");
      }
      auto best = terms_.begin();
      for (auto it = std::next(best); it != terms_.end(); ++it) {
        if (order.less(best->first, it->first)) {
          best = it;
        }
      }
      return *best;
    }

    // Terms in decreasing order.
    std::vector<std::pair<Word, F>> sorted_terms(MonomialOrder const& order) const {
      std::vector<std::pair<Word, F>> out(terms_.begin(), terms_.end());
      std::sort(out.begin(), out.end(), [&order](auto const& a, auto const& b) {
        return order.less(b.first, a.first);
      });
      return out;
    }

    Poly operator-() const {
      Poly out;
      for (auto const& [w, c] : terms_) {
        out.terms_.emplace(w, -c);
      }
      return out;
    }

    Poly& operator+=(Poly const& q) {
      for (auto const& [w, c] : q.terms_) {
        add_term(w, c);
      }
      return *this;
    }
    Poly& operator-=(Poly const& q) {
      for (auto const& [w, c] : q.terms_) {
        add_term(w, -c);
      }
      return *this;
    }
    Poly& operator*=(F const& s) {
      if (s.is_zero()) {
        terms_.clear();
        return *this;
      }
      for (auto& [w, c] : terms_) {
        c *= s;
      }
      return *this;
    }

    friend Poly operator+(Poly p, Poly const& q) {
      return p += q;
    }
    friend Poly operator-(Poly p, Poly const& q) {
      return p -= q;
    }
    friend Poly operator*(F const& s, Poly p) {
      return p *= s;
    }
    friend Poly operator*(Poly p, F const& s) {
      return p *= s;
    }

    // Bilinear extension of concatenation.
    friend Poly operator*(Poly const& p, Poly const& q) {
      Poly out;
      for (auto const& [u, a] : p.terms_) {
        for (auto const& [v, b] : q.terms_) {
          out.add_term(concat(u, v), a * b);
        }
      }
      return out;
    }

    friend bool operator==(Poly const&, Poly const&) = default;

    template <exact_field G>
    Poly<G> map_field() const {
      Poly<G> out;
      for (auto const& [w, c] : terms_) {
        out.add_term(w, convert<G>(c));
      }
      return out;
    }

    // Replace each letter x by image[x] and expand.
    Poly substitute(std::vector<Poly> const& image) const {
      Poly out;
      for (auto const& [w, c] : terms_) {
        Poly t(c);
        for (auto x : w) {
          t = t * image.at(x);
        }
        out += t;
      }
      return out;
    }

    std::string str(Alphabet const& alphabet) const {
      return str(alphabet, MonomialOrder::descending_ids(alphabet.size()));
    }

    std::string str(Alphabet const& alphabet, MonomialOrder const& order) const {
      if (terms_.empty()) {
        return "0";
      }
      std::string out;
      bool        first = true;
      for (auto const& [w, c] : sorted_terms(order)) {
        F    mag = c;
        bool neg = false;
        if constexpr (requires { c.sign(); }) {
          if (c.sign() < 0) {
            neg = true;
            mag = -c;
          }
        }
        if (first) {
          out += neg ? "-" : "";
        } else {
          out += neg ? " - " : " + ";
        }
        first = false;
        if (w.empty()) {
          out += mag.str();
        } else {
          if (!mag.is_one()) {
            out += mag.str() + "*";
          }
          out += alphabet.str(w);
        }
      }
      return out;
    }

   private:
    term_map terms_;
  };

  template <exact_field F>
  std::pair<Word, F> leading_term(MonomialOrder const& order, Poly<F> const& p) {
    return p.leading_term(order);
  }

  template <exact_field F>
  Poly<F> commutator(Poly<F> const& x, Poly<F> const& y) {
    return x * y - y * x;
  }

  namespace detail {
    inline std::string normalize_minus(std::string_view text) {
      std::string out;
      for (std::size_t i = 0; i < text.size(); ++i) {
        // U+2212 MINUS SIGN
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2
            && static_cast<unsigned char>(text[i + 1]) == 0x88
            && static_cast<unsigned char>(text[i + 2]) == 0x92) {
          out += '-';
          i += 2;
        } else {
          out += text[i];
        }
      }
      return out;
    }

    inline bool is_number(std::string_view tok) {
      if (tok.empty()) {
        return false;
      }
      bool digit = false;
      for (char c : tok) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          digit = true;
        } else if (c != '/') {
          return false;
        }
      }
      return digit;
    }
  }  // namespace detail

  // Parse text such as "3/2*u(12)*u(2) - d*b + 1/2 ab". A factor is a
  // rational literal or a run of generator labels and aliases, matched
  // longest first; "*" and juxtaposition both multiply.
  template <exact_field F>
  Poly<F> parse_poly(Alphabet const& alphabet, std::string_view input) {
    std::string const text = detail::normalize_minus(input);
    Poly<F>           out;
    std::size_t       pos   = 0;
    auto              skip  = [&] {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    skip();
    if (text.substr(pos) == "0") {
      return out;
    }
    bool first = true;
    while (true) {
      skip();
      if (pos >= text.size()) {
        break;
      }
      bool negative = false;
      if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
        skip();
      } else if (!first) {
        throw parse_error("expected '+' or '-' at position "
                          + std::to_string(pos) + " in '" + text + "'");
      }
      first = false;
      mpq_class coeff(negative ? -1 : 1);
      Word      word;
      bool      any = false;
      while (true) {
        skip();
        std::size_t start = pos;
        int         depth = 0;
        while (pos < text.size()) {
          char c = text[pos];
          if (c == '(') {
            ++depth;
          } else if (c == ')') {
            --depth;
          } else if (depth == 0
                     && (c == '*' || c == '+' || c == '-'
                         || std::isspace(static_cast<unsigned char>(c)))) {
            break;
          }
          ++pos;
        }
        std::string_view tok(text.data() + start, pos - start);
        if (tok.empty()) {
          throw parse_error("empty factor in '" + text + "'");
        }
        any = true;
        // A numeric prefix glued to letters: "2ab".
        std::size_t digits = 0;
        while (digits < tok.size()
               && (std::isdigit(static_cast<unsigned char>(tok[digits])) || tok[digits] == '/')) {
          ++digits;
        }
        if (digits > 0 && digits < tok.size()) {
          coeff *= Rational::parse(tok.substr(0, digits)).value();
          tok.remove_prefix(digits);
        }
        if (detail::is_number(tok)) {
          coeff *= Rational::parse(tok).value();
        } else if (auto id = alphabet.find(tok)) {
          word.push_back(*id);
        } else {
          // Longest matching label at each position: "dba", "u(1)u(2)".
          while (!tok.empty()) {
            std::optional<letter_type> hit;
            std::size_t                len = tok.size();
            while (len > 0 && !(hit = alphabet.find(tok.substr(0, len)))) {
              --len;
            }
            if (!hit) {
              throw parse_error("unknown generator '" + std::string(tok) + "'");
            }
            word.push_back(*hit);
            tok.remove_prefix(len);
          }
        }
        skip();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          continue;
        }
        // Juxtaposition also multiplies: "1/2 edfb", "u(1) u(2)".
        if (pos < text.size() && text[pos] != '+' && text[pos] != '-') {
          continue;
        }
        break;
      }
      if (!any) {
        throw parse_error("empty term in '" + text + "'");
      }
      out.add_term(word, F::from_rational(coeff));
    }
    if (first) {
      throw parse_error("empty polynomial");
    }
    return out;
  }

}  // namespace nckoszul

#endif  // NCKOSZUL_POLY_HPP_
