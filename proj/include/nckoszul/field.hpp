#ifndef NCKOSZUL_FIELD_HPP_
#define NCKOSZUL_FIELD_HPP_

// Exact coefficient fields: Q, Q(w) with w a primitive cube root of unity,
// and F_p for a compile-time prime p.

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nckoszul {

  class field_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Every coefficient type used by Poly, Subspace and the rewriting engine
  // models this concept.
  template <typename F>
  concept exact_field = std::regular<F> && requires(F a, F b, mpq_class q) {
    { F::from_rational(q) } -> std::same_as<F>;
    { F::zero() } -> std::same_as<F>;
    { F::one() } -> std::same_as<F>;
    { F::name() } -> std::convertible_to<std::string_view>;
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.inverse() } -> std::same_as<F>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.is_one() } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
  };

  ////////////////////////////////////////////////////////////////////////
  // Rational
  ////////////////////////////////////////////////////////////////////////

  class Rational {
   public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT(runtime/explicit)
    Rational(long num, long den) : value_(num, den) {
      if (den == 0) {
        throw field_error("zero denominator");
      }
      value_.canonicalize();
    }
    explicit Rational(mpq_class q) : value_(std::move(q)) {
      value_.canonicalize();
    }

    static Rational from_rational(mpq_class const& q) {
      return Rational(q);
    }
    static Rational zero() {
      return Rational();
    }
    static Rational one() {
      return Rational(1);
    }
    static constexpr std::string_view name() {
      return "rational";
    }

    // Accepts "p", "-p", "p/q".
    static Rational parse(std::string_view text) {
      mpq_class q;
      if (text.empty() || q.set_str(std::string(text), 10) != 0) {
        throw field_error("malformed rational '" + std::string(text) + "'");
      }
      if (q.get_den() == 0) {
        throw field_error("zero denominator in '" + std::string(text) + "'");
      }
      q.canonicalize();
      return Rational(q);
    }

    mpq_class const& value() const {
      return value_;
    }
    mpz_class numerator() const {
      return value_.get_num();
    }
    mpz_class denominator() const {
      return value_.get_den();
    }
    bool is_integer() const {
      return value_.get_den() == 1;
    }

    bool is_zero() const {
      return sgn(value_) == 0;
    }
    bool is_one() const {
      return value_ == 1;
    }
    int sign() const {
      return sgn(value_);
    }

    Rational inverse() const {
      if (is_zero()) {
        throw field_error("inverse of zero");
      }
      return Rational(mpq_class(1) / value_);
    }

    std::string str() const {
      return value_.get_str();
    }

    friend Rational operator+(Rational const& a, Rational const& b) {
      return Rational(mpq_class(a.value_ + b.value_));
    }
    friend Rational operator-(Rational const& a, Rational const& b) {
      return Rational(mpq_class(a.value_ - b.value_));
    }
    friend Rational operator*(Rational const& a, Rational const& b) {
      return Rational(mpq_class(a.value_ * b.value_));
    }
    friend Rational operator/(Rational const& a, Rational const& b) {
      if (b.is_zero()) {
        throw field_error("division by zero");
      }
      return Rational(mpq_class(a.value_ / b.value_));
    }
    Rational operator-() const {
      return Rational(mpq_class(-value_));
    }
    Rational& operator+=(Rational const& o) {
      value_ += o.value_;
      return *this;
    }
    Rational& operator-=(Rational const& o) {
      value_ -= o.value_;
      return *this;
    }
    Rational& operator*=(Rational const& o) {
      value_ *= o.value_;
      return *this;
    }
    friend bool operator==(Rational const& a, Rational const& b) {
      return a.value_ == b.value_;
    }
    friend bool operator<(Rational const& a, Rational const& b) {
      return a.value_ < b.value_;
    }

   private:
    mpq_class value_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Cyclotomic: a + b*w with w^2 = -1 - w
  ////////////////////////////////////////////////////////////////////////

  class Cyclotomic {
   public:
    Cyclotomic() : a_(0), b_(0) {}
    Cyclotomic(long n) : a_(n), b_(0) {}  // NOLINT(runtime/explicit)
    Cyclotomic(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Cyclotomic from_rational(mpq_class const& q) {
      return Cyclotomic(Rational(q), Rational());
    }
    static Cyclotomic zero() {
      return Cyclotomic();
    }
    static Cyclotomic one() {
      return Cyclotomic(1);
    }
    static Cyclotomic omega() {
      return Cyclotomic(Rational(0), Rational(1));
    }
    static constexpr std::string_view name() {
      return "cyclotomic";
    }

    Rational const& real_part() const {
      return a_;
    }
    Rational const& omega_part() const {
      return b_;
    }

    bool is_zero() const {
      return a_.is_zero() && b_.is_zero();
    }
    bool is_one() const {
      return a_.is_one() && b_.is_zero();
    }

    // Sign for printing only: rational values carry one, others print as +.
    int sign() const {
      return b_.is_zero() ? a_.sign() : 0;
    }

    // Norm to Q: (a + bw)(a + bw^2) = a^2 - ab + b^2, positive unless zero.
    Rational norm() const {
      return a_ * a_ - a_ * b_ + b_ * b_;
    }

    // Galois conjugate w -> w^2 = -1 - w.
    Cyclotomic conjugate() const {
      return Cyclotomic(a_ - b_, -b_);
    }

    Cyclotomic inverse() const {
      if (is_zero()) {
        throw field_error("inverse of zero");
      }
      Rational n = norm().inverse();
      Cyclotomic c = conjugate();
      return Cyclotomic(c.a_ * n, c.b_ * n);
    }

    std::complex<double> evaluate(std::complex<double> w) const {
      return a_.value().get_d() + b_.value().get_d() * w;
    }

    std::string str() const {
      if (b_.is_zero()) {
        return a_.str();
      }
      std::string out = "(";
      if (!a_.is_zero()) {
        out += a_.str();
        out += b_.sign() < 0 ? "-" : "+";
      } else if (b_.sign() < 0) {
        out += "-";
      }
      Rational mag = b_.sign() < 0 ? -b_ : b_;
      if (!mag.is_one()) {
        out += mag.str() + "*";
      }
      out += "w)";
      return out;
    }

    friend Cyclotomic operator+(Cyclotomic const& x, Cyclotomic const& y) {
      return Cyclotomic(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend Cyclotomic operator-(Cyclotomic const& x, Cyclotomic const& y) {
      return Cyclotomic(x.a_ - y.a_, x.b_ - y.b_);
    }
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2 = (ac - bd) + (ad + bc - bd)w
    friend Cyclotomic operator*(Cyclotomic const& x, Cyclotomic const& y) {
      Rational bd = x.b_ * y.b_;
      return Cyclotomic(x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd);
    }
    friend Cyclotomic operator/(Cyclotomic const& x, Cyclotomic const& y) {
      return x * y.inverse();
    }
    Cyclotomic operator-() const {
      return Cyclotomic(-a_, -b_);
    }
    Cyclotomic& operator+=(Cyclotomic const& o) {
      a_ += o.a_;
      b_ += o.b_;
      return *this;
    }
    Cyclotomic& operator-=(Cyclotomic const& o) {
      a_ -= o.a_;
      b_ -= o.b_;
      return *this;
    }
    Cyclotomic& operator*=(Cyclotomic const& o) {
      return *this = *this * o;
    }
    friend bool operator==(Cyclotomic const& x, Cyclotomic const& y) {
      return x.a_ == y.a_ && x.b_ == y.b_;
    }

   private:
    Rational a_;
    Rational b_;
  };

  ////////////////////////////////////////////////////////////////////////
  // PrimeField
  ////////////////////////////////////////////////////////////////////////

  template <std::uint64_t P>
  class PrimeField {
    static_assert(P > 2 && P < (std::uint64_t(1) << 32),
                  "products must fit in 64 bits");

   public:
    static constexpr std::uint64_t modulus = P;

    PrimeField() = default;
    PrimeField(long n)  // NOLINT(runtime/explicit)
        : value_(static_cast<std::uint64_t>(
            ((n % static_cast<long>(P)) + static_cast<long>(P))
            % static_cast<long>(P))) {}

    static PrimeField raw(std::uint64_t v) {
      PrimeField x;
      x.value_ = v % P;
      return x;
    }

    // Rejects denominators divisible by p.
    static PrimeField from_rational(mpq_class const& q) {
      mpz_class p(static_cast<unsigned long>(P));
      mpz_class num = q.get_num() % p;
      mpz_class den = q.get_den() % p;
      if (num < 0) {
        num += p;
      }
      if (den == 0) {
        throw field_error("denominator " + q.get_den().get_str()
                          + " is divisible by " + std::to_string(P));
      }
      return raw(num.get_ui()) / raw(den.get_ui());
    }
    static PrimeField zero() {
      return PrimeField();
    }
    static PrimeField one() {
      return raw(1);
    }
    static constexpr std::string_view name() {
      return "prime";
    }

    // Returns an element of multiplicative order 3; requires p = 1 mod 3.
    static PrimeField cube_root_of_unity() {
      static_assert(P % 3 == 1, "F_p contains a primitive cube root of unity "
                                "only when p = 1 mod 3");
      for (std::uint64_t g = 2;; ++g) {
        PrimeField w = raw(g).pow((P - 1) / 3);
        if (!w.is_one()) {
          return w;
        }
      }
    }

    std::uint64_t value() const {
      return value_;
    }
    bool is_zero() const {
      return value_ == 0;
    }
    bool is_one() const {
      return value_ == 1;
    }

    PrimeField pow(std::uint64_t e) const {
      PrimeField base = *this, acc = one();
      while (e != 0) {
        if (e & 1) {
          acc = acc * base;
        }
        base = base * base;
        e >>= 1;
      }
      return acc;
    }

    PrimeField inverse() const {
      if (is_zero()) {
        throw field_error("inverse of zero");
      }
      return pow(P - 2);
    }

    std::string str() const {
      return std::to_string(value_);
    }

    friend PrimeField operator+(PrimeField a, PrimeField b) {
      std::uint64_t s = a.value_ + b.value_;
      return raw(s >= P ? s - P : s);
    }
    friend PrimeField operator-(PrimeField a, PrimeField b) {
      return raw(a.value_ >= b.value_ ? a.value_ - b.value_
                                      : a.value_ + P - b.value_);
    }
    friend PrimeField operator*(PrimeField a, PrimeField b) {
      return raw((a.value_ * b.value_) % P);
    }
    friend PrimeField operator/(PrimeField a, PrimeField b) {
      return a * b.inverse();
    }
    PrimeField operator-() const {
      return raw(value_ == 0 ? 0 : P - value_);
    }
    PrimeField& operator+=(PrimeField o) {
      return *this = *this + o;
    }
    PrimeField& operator-=(PrimeField o) {
      return *this = *this - o;
    }
    PrimeField& operator*=(PrimeField o) {
      return *this = *this * o;
    }
    friend bool operator==(PrimeField a, PrimeField b) = default;

   private:
    std::uint64_t value_ = 0;
  };

  inline constexpr std::uint64_t default_prime = 2147483647;
  static_assert(default_prime % 3 == 1, "default prime must be 1 mod 3");

  using Fp = PrimeField<default_prime>;

  static_assert(exact_field<Rational>);
  static_assert(exact_field<Cyclotomic>);
  static_assert(exact_field<Fp>);

  ////////////////////////////////////////////////////////////////////////
  // Field maps
  ////////////////////////////////////////////////////////////////////////

  inline Cyclotomic embed(Rational const& q) {
    return Cyclotomic(q, Rational());
  }

  template <std::uint64_t P>
  PrimeField<P> reduce_mod(Rational const& q) {
    return PrimeField<P>::from_rational(q.value());
  }

  // Q(w) -> F_p, sending w to a fixed primitive cube root of unity.
  template <std::uint64_t P>
  PrimeField<P> reduce_mod(Cyclotomic const& x) {
    return reduce_mod<P>(x.real_part())
           + reduce_mod<P>(x.omega_part()) * PrimeField<P>::cube_root_of_unity();
  }

  // Generic coefficient conversion used by Poly::map_field.
  template <exact_field To, exact_field From>
  To convert(From const& x) {
    if constexpr (std::is_same_v<To, From>) {
      return x;
    } else if constexpr (std::is_same_v<From, Rational>) {
      return To::from_rational(x.value());
    } else if constexpr (std::is_same_v<From, Cyclotomic>
                         && requires { To::modulus; }) {
      return reduce_mod<To::modulus>(x);
    } else {
      static_assert(std::is_same_v<To, From>, "no field map between these types");
    }
  }

}  // namespace nckoszul

#endif  // NCKOSZUL_FIELD_HPP_
