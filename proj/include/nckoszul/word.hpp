#ifndef NCKOSZUL_WORD_HPP_
#define NCKOSZUL_WORD_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nckoszul {

  using letter_type = std::uint8_t;

  inline constexpr std::size_t max_alphabet_size = 64;

  struct Generator {
    letter_type id = 0;
    std::string label;
    unsigned    weight = 1;
    // Optional short display name, e.g. "d" for u(12).
    std::string alias;

    std::string const& display() const {
      return alias.empty() ? label : alias;
    }
  };

  // A monomial of the free algebra. The empty word is the unit monomial.
  class Word {
   public:
    using container = std::vector<letter_type>;

    Word() = default;
    Word(std::initializer_list<letter_type> letters) : letters_(letters) {}
    explicit Word(container letters) : letters_(std::move(letters)) {}
    template <typename It>
    Word(It first, It last) : letters_(first, last) {}

    static Word repeat(letter_type x, std::size_t n) {
      return Word(container(n, x));
    }

    std::size_t size() const {
      return letters_.size();
    }
    bool empty() const {
      return letters_.empty();
    }
    letter_type operator[](std::size_t i) const {
      return letters_[i];
    }
    auto begin() const {
      return letters_.begin();
    }
    auto end() const {
      return letters_.end();
    }
    container const& letters() const {
      return letters_;
    }
    letter_type front() const {
      return letters_.front();
    }
    letter_type back() const {
      return letters_.back();
    }

    Word subword(std::size_t pos, std::size_t len) const {
      return Word(letters_.begin() + pos, letters_.begin() + pos + len);
    }
    Word prefix(std::size_t len) const {
      return subword(0, len);
    }
    Word suffix(std::size_t len) const {
      return subword(size() - len, len);
    }

    // Leftmost occurrence of `factor` at or after `from`.
    std::optional<std::size_t> find(Word const& factor,
                                    std::size_t from = 0) const {
      if (factor.size() > size()) {
        return std::nullopt;
      }
      auto it = std::search(letters_.begin() + from, letters_.end(),
                            factor.letters_.begin(), factor.letters_.end());
      if (it == letters_.end() && !factor.empty()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - letters_.begin());
    }
    bool contains(Word const& factor) const {
      return find(factor).has_value();
    }

    Word& operator+=(Word const& other) {
      letters_.insert(letters_.end(), other.begin(), other.end());
      return *this;
    }
    Word& push_back(letter_type x) {
      letters_.push_back(x);
      return *this;
    }

    // Plain lexicographic order on letter ids; used for container keys only.
    friend auto operator<=>(Word const&, Word const&) = default;
    friend bool operator==(Word const&, Word const&)  = default;

   private:
    container letters_;
  };

  inline Word concat(Word const& u, Word const& v) {
    Word out = u;
    out += v;
    return out;
  }

  inline Word concat(Word const& u, Word const& v, Word const& w) {
    Word out = u;
    out += v;
    out += w;
    return out;
  }

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (auto x : w) {
        h = (h ^ x) * 1099511628211ull;
      }
      return h ^ w.size();
    }
  };

  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
      if (gens_.size() > max_alphabet_size) {
        throw std::invalid_argument("at most 64 generators are supported");
      }
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        gens_[i].id = static_cast<letter_type>(i);
        if (gens_[i].weight == 0) {
          throw std::invalid_argument("generator weights must be positive");
        }
        if (gens_[i].label.empty()) {
          throw std::invalid_argument("generator labels must be nonempty");
        }
        for (std::size_t j = 0; j < i; ++j) {
          for (auto const& name : {gens_[i].label, gens_[i].alias}) {
            if (!name.empty()
                && (name == gens_[j].label || name == gens_[j].alias)) {
              throw std::invalid_argument("duplicate generator name '" + name
                                          + "'");
            }
          }
        }
      }
    }

    // Generators named by single characters, weight 1.
    static Alphabet letters(std::string_view names) {
      std::vector<Generator> gens;
      for (char c : names) {
        gens.push_back({0, std::string(1, c), 1, {}});
      }
      return Alphabet(std::move(gens));
    }

    std::size_t size() const {
      return gens_.size();
    }
    Generator const& operator[](letter_type id) const {
      return gens_.at(id);
    }
    auto begin() const {
      return gens_.begin();
    }
    auto end() const {
      return gens_.end();
    }
    std::vector<Generator> const& generators() const {
      return gens_;
    }

    // Look up by label or alias.
    std::optional<letter_type> find(std::string_view name) const {
      for (auto const& g : gens_) {
        if (g.label == name || (!g.alias.empty() && g.alias == name)) {
          return g.id;
        }
      }
      return std::nullopt;
    }
    letter_type at(std::string_view name) const {
      auto id = find(name);
      if (!id) {
        throw std::invalid_argument("unknown generator '" + std::string(name)
                                    + "'");
      }
      return *id;
    }

    unsigned weight(letter_type id) const {
      return gens_.at(id).weight;
    }
    unsigned weight(Word const& w) const {
      unsigned total = 0;
      for (auto x : w) {
        total += weight(x);
      }
      return total;
    }

    // Distinct generator weights, ascending.
    std::vector<unsigned> weights() const {
      std::vector<unsigned> out;
      for (auto const& g : gens_) {
        out.push_back(g.weight);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    bool valid(Word const& w) const {
      return std::all_of(
          w.begin(), w.end(), [this](letter_type x) { return x < size(); });
    }

    // Words of the given letters by display name, e.g. word({"d", "b"}).
    Word word(std::initializer_list<std::string_view> names) const {
      Word w;
      for (auto n : names) {
        w.push_back(at(n));
      }
      return w;
    }

    // Parse a word written as juxtaposed single-character display names,
    // e.g. "cef". Every generator involved must have a one-character name.
    Word word(std::string_view compact) const {
      Word w;
      for (char c : compact) {
        w.push_back(at(std::string_view(&c, 1)));
      }
      return w;
    }

    std::string str(Word const& w, std::string_view sep = "*") const {
      if (w.empty()) {
        return "1";
      }
      bool compact = std::all_of(w.begin(), w.end(), [this](letter_type x) {
        return gens_[x].display().size() == 1;
      });
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0 && !compact) {
          out += sep;
        }
        out += gens_[w[i]].display();
      }
      return out;
    }

    friend bool operator==(Alphabet const& a, Alphabet const& b) {
      if (a.size() != b.size()) {
        return false;
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.gens_[i].label != b.gens_[i].label
            || a.gens_[i].weight != b.gens_[i].weight) {
          return false;
        }
      }
      return true;
    }

   private:
    std::vector<Generator> gens_;
  };

  ////////////////////////////////////////////////////////////////////////
  // MonomialOrder
  ////////////////////////////////////////////////////////////////////////

  // Degree first, then lexicographic left to right using a precedence list
  // of generator ids (highest first).
  class MonomialOrder {
   public:
    MonomialOrder() = default;

    explicit MonomialOrder(std::vector<letter_type> precedence)
        : precedence_(std::move(precedence)),
          rank_(precedence_.size(), 0) {
      std::vector<bool> seen(precedence_.size(), false);
      for (std::size_t i = 0; i < precedence_.size(); ++i) {
        letter_type x = precedence_[i];
        if (x >= precedence_.size() || seen[x]) {
          throw std::invalid_argument(
              "order precedence must be a permutation of generator ids");
        }
        seen[x] = true;
        rank_[x] = static_cast<letter_type>(precedence_.size() - 1 - i);
      }
    }

    // Comma separated display names, highest first: "c,b,e,f,a,d".
    static MonomialOrder parse(Alphabet const& alphabet, std::string_view text) {
      std::vector<letter_type> prec;
      std::size_t              start = 0;
      while (start <= text.size()) {
        auto stop = text.find(',', start);
        if (stop == std::string_view::npos) {
          stop = text.size();
        }
        auto name = text.substr(start, stop - start);
        while (!name.empty() && name.front() == ' ') {
          name.remove_prefix(1);
        }
        while (!name.empty() && name.back() == ' ') {
          name.remove_suffix(1);
        }
        if (!name.empty()) {
          prec.push_back(alphabet.at(name));
        }
        start = stop + 1;
      }
      if (prec.size() != alphabet.size()) {
        throw std::invalid_argument("order must list every generator once");
      }
      return MonomialOrder(std::move(prec));
    }

    // Highest id first; a convenient default.
    static MonomialOrder descending_ids(std::size_t n) {
      std::vector<letter_type> prec(n);
      for (std::size_t i = 0; i < n; ++i) {
        prec[i] = static_cast<letter_type>(n - 1 - i);
      }
      return MonomialOrder(std::move(prec));
    }

    std::vector<letter_type> const& precedence() const {
      return precedence_;
    }
    std::size_t alphabet_size() const {
      return precedence_.size();
    }
    letter_type rank(letter_type x) const {
      return rank_[x];
    }

    std::strong_ordering compare(Word const& u, Word const& v) const {
      if (u.size() != v.size()) {
        return u.size() <=> v.size();
      }
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != v[i]) {
          return rank_[u[i]] <=> rank_[v[i]];
        }
      }
      return std::strong_ordering::equal;
    }

    bool less(Word const& u, Word const& v) const {
      return compare(u, v) < 0;
    }

    std::string str(Alphabet const& alphabet) const {
      std::string out;
      for (std::size_t i = 0; i < precedence_.size(); ++i) {
        if (i != 0) {
          out += ",";
        }
        out += alphabet[precedence_[i]].display();
      }
      return out;
    }

    friend bool operator==(MonomialOrder const& a, MonomialOrder const& b) {
      return a.precedence_ == b.precedence_;
    }

   private:
    std::vector<letter_type> precedence_;
    std::vector<letter_type> rank_;
  };

  // Strict-weak-ordering adaptor for ordered containers.
  struct OrderLess {
    MonomialOrder const* order;
    bool operator()(Word const& u, Word const& v) const {
      return order->less(u, v);
    }
  };

}  // namespace nckoszul

#endif  // NCKOSZUL_WORD_HPP_
