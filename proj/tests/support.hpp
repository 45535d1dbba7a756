#ifndef NCKOSZUL_TESTS_SUPPORT_HPP_
#define NCKOSZUL_TESTS_SUPPORT_HPP_

// Random generators for property tests. Fixed seeds keep runs reproducible.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nckoszul/nckoszul.hpp"

namespace nckoszul::testing {

  using Rng = std::mt19937_64;

  inline Rng make_rng(std::uint64_t salt = 0) {
    return Rng(0x6e636b6f737a756cULL ^ salt);
  }

  inline long uniform(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  }

  inline Word random_word(Rng& rng, std::size_t k, std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(static_cast<letter_type>(uniform(rng, 0, static_cast<long>(k) - 1)));
    }
    return w;
  }

  template <exact_field F>
  F random_scalar(Rng& rng);

  template <>
  inline Rational random_scalar<Rational>(Rng& rng) {
    return Rational(uniform(rng, -9, 9), uniform(rng, 1, 5));
  }

  template <>
  inline Cyclotomic random_scalar<Cyclotomic>(Rng& rng) {
    return Cyclotomic(random_scalar<Rational>(rng), random_scalar<Rational>(rng));
  }

  template <>
  inline Fp random_scalar<Fp>(Rng& rng) {
    return Fp::raw(static_cast<std::uint64_t>(rng() % Fp::modulus));
  }

  template <exact_field F>
  F random_nonzero(Rng& rng) {
    F x;
    do {
      x = random_scalar<F>(rng);
    } while (x.is_zero());
    return x;
  }

  // Homogeneous of degree `len` when `mixed` is false.
  template <exact_field F>
  Poly<F> random_poly(Rng& rng, std::size_t k, std::size_t len, std::size_t terms,
                      bool mixed = false) {
    Poly<F> p;
    for (std::size_t i = 0; i < terms; ++i) {
      std::size_t l = mixed ? static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(len)))
                            : len;
      p.add_term(random_word(rng, k, l), random_scalar<F>(rng));
    }
    return p;
  }

  // Random quadratic presentation on k weight-1 generators.
  template <exact_field F>
  Presentation<F> random_quadratic(Rng& rng, std::size_t k, std::size_t rels,
                                   std::size_t terms = 3) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < k; ++i) {
      gens.push_back({0, std::string(1, static_cast<char>('a' + i)), 1, {}});
    }
    Presentation<F> p{"random", Alphabet(std::move(gens)), {}};
    while (p.relations.size() < rels) {
      auto r = random_poly<F>(rng, k, 2, terms);
      if (!r.is_zero()) {
        p.relations.push_back(std::move(r));
      }
    }
    return p;
  }

  // Every word of length n over k letters, in id-lexicographic order.
  inline std::vector<Word> all_words(std::size_t k, std::size_t n) {
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Word> next;
      for (auto const& w : out) {
        for (std::size_t x = 0; x < k; ++x) {
          Word v = w;
          v.push_back(static_cast<letter_type>(x));
          next.push_back(std::move(v));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  // Brute-force rank of a list of dense-able polynomials over F, by plain
  // Gaussian elimination on a dense matrix.
  template <exact_field F>
  std::size_t dense_rank(std::vector<Poly<F>> const& polys, std::vector<Word> const& basis) {
    std::vector<std::vector<F>> m;
    for (auto const& p : polys) {
      std::vector<F> row;
      for (auto const& w : basis) {
        row.push_back(p.coefficient(w));
      }
      m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < basis.size() && rank < m.size(); ++col) {
      std::size_t piv = rank;
      while (piv < m.size() && m[piv][col].is_zero()) {
        ++piv;
      }
      if (piv == m.size()) {
        continue;
      }
      std::swap(m[piv], m[rank]);
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r != rank && !m[r][col].is_zero()) {
          F f = m[r][col] / m[rank][col];
          for (std::size_t c = col; c < basis.size(); ++c) {
            m[r][c] -= f * m[rank][c];
          }
        }
      }
      ++rank;
    }
    return rank;
  }

}  // namespace nckoszul::testing

#endif  // NCKOSZUL_TESTS_SUPPORT_HPP_
