#ifndef NCKOSZUL_REWRITE_HPP_
#define NCKOSZUL_REWRITE_HPP_

// Diamond-lemma rewriting for the free associative algebra: normal forms,
// overlap/inclusion ambiguities, and degree-bounded completion.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "avoidance.hpp"
#include "field.hpp"
#include "poly.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace nckoszul {

  // lhs -> rhs, every rhs word strictly below lhs.
  template <exact_field F>
  struct Rule {
    Word    lhs;
    Poly<F> rhs;

    // The relation lhs - rhs this rule encodes.
    Poly<F> relation() const {
      return Poly<F>::monomial(lhs) - rhs;
    }
  };

  enum class AmbiguityKind { overlap, inclusion };

  struct Ambiguity {
    std::size_t   left_rule  = 0;
    std::size_t   right_rule = 0;
    Word          overlap_word;
    // Position of the right rule's lhs inside overlap_word; the left rule's
    // lhs always starts at 0.
    std::size_t   offset = 0;
    AmbiguityKind kind   = AmbiguityKind::overlap;
  };

  // One processed ambiguity during completion.
  struct CompletionEvent {
    Word                overlap_word;
    Word                left_lhs;
    Word                right_lhs;
    std::optional<Word> new_lhs;  // empty when it resolved to zero
  };

  class completion_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  template <exact_field F>
  class RewriteSystem {
   public:
    RewriteSystem(Alphabet alphabet, MonomialOrder order, std::size_t cap)
        : alphabet_(std::move(alphabet)), order_(std::move(order)), cap_(cap) {
      if (order_.alphabet_size() != alphabet_.size()) {
        throw std::invalid_argument("order does not cover the generators");
      }
      rebuild_index();
    }

    Alphabet const& alphabet() const {
      return alphabet_;
    }
    MonomialOrder const& order() const {
      return order_;
    }
    std::size_t cap() const {
      return cap_;
    }
    std::vector<Rule<F>> const& rules() const {
      return rules_;
    }
    std::vector<Ambiguity> const& unresolved() const {
      return unresolved_;
    }
    std::vector<CompletionEvent> const& log() const {
      return log_;
    }

    std::vector<Word> leading_words() const {
      std::vector<Word> out;
      for (auto const& r : rules_) {
        out.push_back(r.lhs);
      }
      return out;
    }

    std::optional<std::size_t> find_rule(Word const& lhs) const {
      for (std::size_t i = 0; i < rules_.size(); ++i) {
        if (rules_[i].lhs == lhs) {
          return i;
        }
      }
      return std::nullopt;
    }

    // The rules whose lhs has length at most `degree`.
    RewriteSystem truncated(std::size_t degree) const {
      RewriteSystem out(alphabet_, order_, std::min(cap_, degree));
      for (auto const& r : rules_) {
        if (r.lhs.size() <= degree) {
          out.rules_.push_back(r);
        }
      }
      out.rebuild_index();
      return out;
    }

    // Leftmost (position, rule) whose lhs occurs in w.
    std::optional<std::pair<std::size_t, std::size_t>>
    first_match(Word const& w, std::size_t from = 0) const {
      for (std::size_t pos = from; pos < w.size(); ++pos) {
        std::int32_t node = 0;
        for (std::size_t k = pos; k < w.size(); ++k) {
          node = trie_[static_cast<std::size_t>(node)].next[w[k]];
          if (node < 0) {
            break;
          }
          auto r = trie_[static_cast<std::size_t>(node)].rule;
          if (r >= 0) {
            return std::make_pair(pos, static_cast<std::size_t>(r));
          }
        }
      }
      return std::nullopt;
    }

    bool is_normal(Word const& w) const {
      return !first_match(w).has_value();
    }

    // Rewrites the greatest reducible word at its leftmost reducible
    // position until no word contains a rule lhs.
    Poly<F> reduce(Poly<F> const& p) const {
      std::map<Word, F, OrderLess> work(OrderLess{&order_});
      for (auto const& [w, c] : p.terms()) {
        work.emplace(w, c);
      }
      Poly<F> out;
      while (!work.empty()) {
        auto it    = std::prev(work.end());
        Word w     = it->first;
        F    c     = std::move(it->second);
        work.erase(it);
        auto match = first_match(w);
        if (!match) {
          out.add_term(w, c);
          continue;
        }
        apply(work, w, c, match->first, match->second);
      }
      return out;
    }

    // Applies rewrites in a random order; used to test confluence.
    template <typename Rng>
    Poly<F> reduce_randomly(Poly<F> const& p, Rng& rng) const {
      std::map<Word, F, OrderLess> work(OrderLess{&order_});
      for (auto const& [w, c] : p.terms()) {
        work.emplace(w, c);
      }
      while (true) {
        std::vector<std::tuple<Word, std::size_t, std::size_t>> options;
        for (auto const& [w, c] : work) {
          for (std::size_t pos = 0; pos < w.size(); ++pos) {
            for (std::size_t r = 0; r < rules_.size(); ++r) {
              auto const& lhs = rules_[r].lhs;
              if (pos + lhs.size() <= w.size()
                  && std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) {
                options.emplace_back(w, pos, r);
              }
            }
          }
        }
        if (options.empty()) {
          break;
        }
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        auto [w, pos, r] = options[pick(rng)];
        auto it          = work.find(w);
        F    c           = it->second;
        work.erase(it);
        apply(work, w, c, pos, r);
      }
      Poly<F> out;
      for (auto const& [w, c] : work) {
        out.add_term(w, c);
      }
      return out;
    }

    // Reduces p, turns a nonzero remainder into a monic rule, and restores
    // inter-reduction. Returns the new lhs, if any.
    std::optional<Word> add_relation(Poly<F> const& p) {
      std::vector<Poly<F>> queue{p};
      std::optional<Word>  first_new;
      while (!queue.empty()) {
        Poly<F> q = reduce(queue.back());
        queue.pop_back();
        if (q.is_zero()) {
          continue;
        }
        auto [lw, lc] = q.leading_term(order_);
        q *= lc.inverse();
        Rule<F> rule{lw, Poly<F>::monomial(lw) - q};
        // Rules whose lhs contains the new lhs are dropped and re-queued.
        std::vector<Rule<F>> kept;
        for (auto& r : rules_) {
          if (r.lhs.contains(lw)) {
            queue.push_back(r.relation());
          } else {
            kept.push_back(std::move(r));
          }
        }
        rules_ = std::move(kept);
        auto pos = std::lower_bound(
            rules_.begin(), rules_.end(), rule.lhs,
            [this](Rule<F> const& r, Word const& w) { return order_.less(r.lhs, w); });
        rules_.insert(pos, std::move(rule));
        rebuild_index();
        for (auto& r : rules_) {
          bool stale = std::any_of(
              r.rhs.terms().begin(), r.rhs.terms().end(),
              [&lw](auto const& t) { return t.first.contains(lw); });
          if (stale) {
            r.rhs = reduce(r.rhs);
          }
        }
        if (!first_new) {
          first_new = lw;
        }
        if (rules_.size() > max_rules_) {
          throw completion_error("rule count exceeded "
                                 + std::to_string(max_rules_));
        }
      }
      return first_new;
    }

    // Resolution of one ambiguity: both one-step rewrites of the overlap
    // word, reduced to normal form and subtracted.
    Poly<F> s_polynomial(Ambiguity const& a) const {
      auto const& left  = rules_.at(a.left_rule);
      auto const& right = rules_.at(a.right_rule);
      Word const& w     = a.overlap_word;
      Word        head  = w.prefix(a.offset);
      Word        tail  = w.suffix(w.size() - a.offset - right.lhs.size());
      Poly<F>     via_left
          = left.rhs * Poly<F>::monomial(w.suffix(w.size() - left.lhs.size()));
      Poly<F> via_right = Poly<F>::monomial(head) * right.rhs
                          * Poly<F>::monomial(tail);
      return reduce(via_left - via_right);
    }

    void set_max_rules(std::size_t n) {
      max_rules_ = n;
    }
    void set_unresolved(std::vector<Ambiguity> a) {
      unresolved_ = std::move(a);
    }
    void record(CompletionEvent e) {
      log_.push_back(std::move(e));
    }

   private:
    void apply(std::map<Word, F, OrderLess>& work,
               Word const&                   w,
               F const&                      c,
               std::size_t                   pos,
               std::size_t                   r) const {
      auto const& rule = rules_[r];
      Word        head = w.prefix(pos);
      Word        tail = w.suffix(w.size() - pos - rule.lhs.size());
      for (auto const& [v, d] : rule.rhs.terms()) {
        F    x = c * d;
        Word u = concat(head, v, tail);
        auto [it, inserted] = work.try_emplace(std::move(u), x);
        if (!inserted) {
          it->second += x;
          if (it->second.is_zero()) {
            work.erase(it);
          }
        }
      }
    }

    struct TrieNode {
      std::vector<std::int32_t> next;
      std::int32_t              rule = -1;
    };

    void rebuild_index() {
      trie_.assign(1, TrieNode{std::vector<std::int32_t>(alphabet_.size(), -1), -1});
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        std::size_t node = 0;
        for (auto x : rules_[r].lhs) {
          if (trie_[node].next[x] < 0) {
            trie_[node].next[x] = static_cast<std::int32_t>(trie_.size());
            trie_.push_back(
                TrieNode{std::vector<std::int32_t>(alphabet_.size(), -1), -1});
          }
          node = static_cast<std::size_t>(trie_[node].next[x]);
        }
        trie_[node].rule = static_cast<std::int32_t>(r);
      }
    }

    Alphabet                     alphabet_;
    MonomialOrder                order_;
    std::size_t                  cap_;
    std::vector<Rule<F>>         rules_;
    std::vector<Ambiguity>       unresolved_;
    std::vector<CompletionEvent> log_;
    std::vector<TrieNode>        trie_;
    std::size_t                  max_rules_ = 1000;
  };

  // All minimal overlap and inclusion ambiguities, sorted by degree of the
  // overlap word, then by the monomial order, then by rule indices.
  template <exact_field F>
  std::vector<Ambiguity> find_ambiguities(RewriteSystem<F> const& sys) {
    auto const&            rules = sys.rules();
    std::vector<Ambiguity> out;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      Word const& a = rules[i].lhs;
      for (std::size_t j = 0; j < rules.size(); ++j) {
        Word const& b = rules[j].lhs;
        if (i != j) {
          for (auto pos = a.find(b); pos; pos = a.find(b, *pos + 1)) {
            out.push_back({i, j, a, *pos, AmbiguityKind::inclusion});
          }
        }
        // Proper overlaps: a suffix of a equals a prefix of b.
        std::size_t const limit = std::min(a.size(), b.size());
        for (std::size_t k = 1; k < limit; ++k) {
          if (std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) {
            Word w = concat(a, b.suffix(b.size() - k));
            out.push_back({i, j, std::move(w), a.size() - k,
                           AmbiguityKind::overlap});
          }
        }
      }
    }
    auto const& order = sys.order();
    std::sort(out.begin(), out.end(), [&order](auto const& x, auto const& y) {
      auto c = order.compare(x.overlap_word, y.overlap_word);
      if (c != 0) {
        return c < 0;
      }
      return std::tie(x.left_rule, x.right_rule, x.offset)
             < std::tie(y.left_rule, y.right_rule, y.offset);
    });
    return out;
  }

  // Inter-reduced rules from the relations, without resolving ambiguities.
  template <exact_field F>
  RewriteSystem<F> make_system(Presentation<F> const& pres,
                               MonomialOrder const&   order,
                               std::size_t            cap = 2) {
    RewriteSystem<F> sys(pres.generators, order, cap);
    for (auto const& r : pres.relations) {
      sys.add_relation(r);
    }
    return sys;
  }

  struct CompletionOptions {
    std::size_t max_rules = 1000;
  };

  // Processes ambiguities in increasing overlap degree up to `cap`; the
  // remaining ones are listed as unresolved.
  template <exact_field F>
  RewriteSystem<F> complete(Presentation<F> const& pres,
                            MonomialOrder const&   order,
                            std::size_t            cap,
                            CompletionOptions      opts = {}) {
    if (cap < 2) {
      throw std::invalid_argument("completion cap must be at least 2");
    }
    RewriteSystem<F> sys(pres.generators, order, cap);
    sys.set_max_rules(opts.max_rules);
    for (auto const& r : pres.relations) {
      if (r.is_zero()) {
        throw std::invalid_argument("zero relation");
      }
      sys.add_relation(r);
    }
    using key_type = std::tuple<Word, Word, std::size_t>;
    std::set<key_type> done;
    for (std::size_t d = 2; d <= cap; ++d) {
      while (true) {
        std::vector<Ambiguity> todo;
        for (auto const& a : find_ambiguities(sys)) {
          if (a.overlap_word.size() > d) {
            break;
          }
          auto const& rules = sys.rules();
          key_type    key{rules[a.left_rule].lhs, rules[a.right_rule].lhs, a.offset};
          if (!done.contains(key)) {
            todo.push_back(a);
          }
        }
        if (todo.empty()) {
          break;
        }
        // Resolve the first pending ambiguity, then rescan: a new rule can
        // renumber or retire rules.
        Ambiguity const& a     = todo.front();
        auto const&      rules = sys.rules();
        Word             l     = rules[a.left_rule].lhs;
        Word             r     = rules[a.right_rule].lhs;
        done.emplace(l, r, a.offset);
        Poly<F>         s = sys.s_polynomial(a);
        CompletionEvent ev{a.overlap_word, l, r, std::nullopt};
        if (!s.is_zero()) {
          ev.new_lhs = sys.add_relation(s);
        }
        sys.record(std::move(ev));
      }
    }
    std::vector<Ambiguity> rest;
    for (auto const& a : find_ambiguities(sys)) {
      if (a.overlap_word.size() > cap) {
        rest.push_back(a);
      }
    }
    sys.set_unresolved(std::move(rest));
    return sys;
  }

  ////////////////////////////////////////////////////////////////////////
  // Infinite families
  ////////////////////////////////////////////////////////////////////////

  // Letters of a family of rules head * star^n * tail whose rhs carries the
  // word probe * star^n * tail.
  struct FamilyShape {
    letter_type head;
    letter_type star;
    letter_type tail;
    letter_type probe;
  };

  namespace detail {
    inline Word family_word(letter_type first, letter_type star, std::size_t n,
                            letter_type last) {
      Word w{first};
      for (std::size_t i = 0; i < n; ++i) {
        w.push_back(star);
      }
      w.push_back(last);
      return w;
    }
  }  // namespace detail

  // -(coefficient of probe star^n tail in the rhs of head star^n tail).
  template <exact_field F>
  F family_coefficient(RewriteSystem<F> const& sys,
                       FamilyShape const&      shape,
                       std::size_t             n) {
    Word lhs   = detail::family_word(shape.head, shape.star, n, shape.tail);
    Word probe = detail::family_word(shape.probe, shape.star, n, shape.tail);
    auto r     = sys.find_rule(lhs);
    if (!r) {
      throw std::out_of_range("no rule with lhs " + sys.alphabet().str(lhs));
    }
    return -sys.rules()[*r].rhs.coefficient(probe);
  }

  // The e f^n b family of the chopped K3 presentation, by display names.
  template <exact_field F>
  F family_coefficient(RewriteSystem<F> const& sys, std::size_t n) {
    auto const& a = sys.alphabet();
    return family_coefficient(sys, FamilyShape{a.at("e"), a.at("f"), a.at("b"), a.at("d")}, n);
  }

  // Overlap of the rules star*head and head*star^n*tail at
  // star*head*star^n*tail, reduced by the rules of degree at most n + 2.
  // Its coefficient on head*star^(n+1)*tail is the divisor that makes the
  // next family member monic.
  template <exact_field F>
  Poly<F> family_overlap(RewriteSystem<F> const& sys,
                         FamilyShape const&      shape,
                         std::size_t             n) {
    Word member = detail::family_word(shape.head, shape.star, n, shape.tail);
    Word swap{shape.star, shape.head};
    auto rm = sys.find_rule(member);
    auto rs = sys.find_rule(swap);
    if (!rm) {
      throw std::out_of_range("no rule with lhs " + sys.alphabet().str(member));
    }
    if (!rs) {
      throw std::out_of_range("no rule with lhs " + sys.alphabet().str(swap));
    }
    Poly<F> rest    = Poly<F>::monomial(member.suffix(member.size() - 1));
    Poly<F> overlap = sys.rules()[*rs].rhs * rest
                      - Poly<F>::letter(shape.star) * sys.rules()[*rm].rhs;
    return sys.truncated(member.size()).reduce(overlap);
  }

  // Flags lhs words u g^j v (u, v nonempty) present for every j from 1 up
  // to the cap, with at least `min_members` members. Heuristic only: the
  // caller decides whether to trust the family beyond the cap.
  template <exact_field F>
  std::vector<Pattern> conjecture_family(RewriteSystem<F> const& sys,
                                         std::size_t min_members = 2) {
    std::set<Word> lhs;
    for (auto const& r : sys.rules()) {
      lhs.insert(r.lhs);
    }
    std::vector<Pattern> out;
    for (auto const& w : lhs) {
      for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        letter_type g = w[i];
        if (w[i - 1] == g || w[i + 1] == g) {
          continue;
        }
        Pattern     p = Pattern::starred(w.prefix(i), g, w.suffix(w.size() - i - 1));
        std::size_t fixed = p.prefix.size() + p.suffix.size();
        if (sys.cap() < fixed + min_members) {
          continue;
        }
        bool all = true;
        for (std::size_t j = 1; fixed + j <= sys.cap(); ++j) {
          all = all && lhs.contains(p.instance(j));
        }
        if (all && std::find(out.begin(), out.end(), p) == out.end()) {
          out.push_back(std::move(p));
        }
      }
    }
    return out;
  }

  // Rule lhs words as forbidden patterns: conjectured families become star
  // patterns and the words they cover are dropped.
  template <exact_field F>
  std::vector<Pattern> forbidden_patterns(RewriteSystem<F> const& sys,
                                          bool use_families = true) {
    std::vector<Pattern> fams;
    if (use_families) {
      fams = conjecture_family(sys);
    }
    std::vector<Pattern> out;
    for (auto const& r : sys.rules()) {
      bool covered = std::any_of(fams.begin(), fams.end(), [&](Pattern const& p) {
        for (std::size_t j = 1; p.min_length() - 1 + j <= r.lhs.size(); ++j) {
          if (p.instance(j) == r.lhs) {
            return true;
          }
        }
        return false;
      });
      if (!covered) {
        out.push_back(Pattern::word(r.lhs));
      }
    }
    out.insert(out.end(), fams.begin(), fams.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////
  //
  //   # nckoszul rewrite system
  //   field rational
  //   order c,b,e,f,a,d
  //   cap 3
  //   rules 6
  //   ba -> ab + db - da

  template <exact_field F>
  std::string to_text(RewriteSystem<F> const& sys) {
    auto const&        a = sys.alphabet();
    std::ostringstream os;
    os << "# nckoszul rewrite system\n";
    os << "field " << F::name() << "\n";
    os << "order " << sys.order().str(a) << "\n";
    os << "cap " << sys.cap() << "\n";
    os << "rules " << sys.rules().size() << "\n";
    for (auto const& r : sys.rules()) {
      os << a.str(r.lhs) << " -> " << r.rhs.str(a, sys.order()) << "\n";
    }
    for (auto const& u : sys.unresolved()) {
      os << "# unresolved " << a.str(u.overlap_word) << "\n";
    }
    return os.str();
  }

  template <exact_field F>
  RewriteSystem<F> parse_rewrite_system(Alphabet const& alphabet,
                                        std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        line;
    std::optional<MonomialOrder> order;
    std::size_t                  cap = 2;
    std::vector<Rule<F>>         rules;
    std::optional<std::size_t>   declared;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) {
        line.erase(hash);
      }
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      auto arrow = line.find("->");
      if (arrow != std::string::npos) {
        Poly<F> lhs = parse_poly<F>(alphabet, line.substr(0, arrow));
        if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one()) {
          throw parse_error("rule lhs must be a single word: " + line);
        }
        rules.push_back({lhs.terms().begin()->first,
                         parse_poly<F>(alphabet, line.substr(arrow + 2))});
        continue;
      }
      std::istringstream ls(line);
      std::string        key, value;
      ls >> key >> value;
      if (key == "order") {
        order = MonomialOrder::parse(alphabet, value);
      } else if (key == "cap") {
        cap = std::stoul(value);
      } else if (key == "rules") {
        declared = std::stoul(value);
      } else if (key != "field") {
        throw parse_error("unknown keyword '" + key + "'");
      }
    }
    if (!order) {
      throw parse_error("rewrite system without an order line");
    }
    if (declared && *declared != rules.size()) {
      throw parse_error("rule count mismatch");
    }
    RewriteSystem<F> sys(alphabet, *order, cap);
    for (auto const& r : rules) {
      sys.add_relation(r.relation());
    }
    if (sys.rules().size() != rules.size()) {
      throw parse_error("rules are not inter-reduced");
    }
    std::vector<Ambiguity> rest;
    for (auto const& a : find_ambiguities(sys)) {
      if (a.overlap_word.size() > cap) {
        rest.push_back(a);
      }
    }
    sys.set_unresolved(std::move(rest));
    return sys;
  }

}  // namespace nckoszul

#endif  // NCKOSZUL_REWRITE_HPP_
