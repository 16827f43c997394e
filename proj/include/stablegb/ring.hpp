#pragma once

// Exact polynomial arithmetic over the rationals with the degree reverse
// lexicographic order x_n < ... < x_1.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace stablegb {

using BigInt = mpz_class;
using Rational = mpq_class;

inline constexpr int kMaxVars = 16;

/// Number of variables and their printable names.
class RingContext {
 public:
  explicit RingContext(int n);
  explicit RingContext(std::vector<std::string> names);

  int n() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }

  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  /// The same names with one extra variable appended (used for homogenization).
  RingContext extended(const std::string& extra) const;
  /// The first `n - count` variables.
  RingContext truncated(int count) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  std::vector<std::string> names_;
};

/// A power product x^alpha in a fixed number of variables. Index 0 is x_1.
class Term {
 public:
  Term() = default;
  explicit Term(int arity);
  Term(int arity, std::initializer_list<int> exponents);
  Term(int arity, std::span<const int> exponents);

  static Term variable(int arity, int index, int power = 1);

  int arity() const { return arity_; }
  int degree() const { return static_cast<int>(degree_); }
  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  bool is_one() const { return degree_ == 0; }

  /// Returns a copy with exponent of variable i set to e.
  Term with(int i, int e) const;
  /// Largest index (1-based) with positive exponent; 0 for the unit term.
  int max_index() const;

  bool divides(const Term& other) const;
  /// this / other; other must divide this.
  Term operator/(const Term& other) const;
  Term operator*(const Term& other) const;
  Term lcm(const Term& other) const;
  Term gcd(const Term& other) const;
  bool coprime(const Term& other) const;

  /// Drops trailing variables, keeping the first `arity` exponents.
  Term truncated(int arity) const;
  /// Appends a variable with the given exponent.
  Term extended(int exponent) const;

  std::vector<int> exponents() const;

  friend bool operator==(const Term& a, const Term& b) {
    return a.arity_ == b.arity_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint8_t arity_ = 0;
  std::uint32_t degree_ = 0;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Degree reverse lexicographic comparison with x_n < ... < x_1.
/// Throws UsageError on arity mismatch.
std::strong_ordering degrevlex_cmp(const Term& a, const Term& b);

/// All terms of total degree `degree` in `arity` variables, in descending degrevlex order.
std::vector<Term> terms_of_degree(int arity, int degree);

/// Strict "greater" predicate usable with std::sort to obtain descending order.
struct DegrevlexGreater {
  bool operator()(const Term& a, const Term& b) const { return degrevlex_cmp(a, b) > 0; }
};

struct Monomial {
  Rational coeff;
  Term term;
};

/// Sparse polynomial with terms kept in descending degrevlex order and no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int arity) : arity_(arity) {}
  /// Builds from arbitrary monomials: sorts, merges duplicates and drops zeros.
  Polynomial(int arity, std::vector<Monomial> monomials);

  static Polynomial constant(int arity, const Rational& c);
  static Polynomial monomial(const Rational& c, const Term& t);
  static Polynomial term(const Term& t) { return monomial(Rational(1), t); }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Monomial> terms() const { return terms_; }

  /// Leading term; throws DomainError for the zero polynomial.
  const Term& lt() const;
  const Rational& lc() const;
  /// Maximal total degree; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial monic() const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Rational& c);

  /// this - c * t * g, computed in one merge pass. Terms before index `from`
  /// are kept untouched; they must all be greater than every term of t * g.
  void sub_mul(const Rational& c, const Term& t, const Polynomial& g, std::size_t from = 0);
  Polynomial mul_term(const Rational& c, const Term& t) const;

  /// Sets the variables with (0-based) index >= keep to zero and drops them.
  Polynomial restrict_last(int count) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

 private:
  int arity_ = 0;
  std::vector<Monomial> terms_;
};

Polynomial pow(const Polynomial& f, int e);

/// The leading data of a nonzero polynomial.
struct LeadingData {
  Term lt;
  Rational lc;
  Polynomial lm;
};

/// Throws DomainError for the zero polynomial.
LeadingData leading_data(const Polynomial& f);

/// An invertible n x n rational matrix acting by x_j -> sum_i a_ij x_i.
class LinearChange {
 public:
  /// Throws DomainError if the matrix is singular, UsageError if not square.
  explicit LinearChange(std::vector<std::vector<Rational>> matrix);

  static LinearChange identity(int n);

  int n() const { return static_cast<int>(matrix_.size()); }
  const Rational& operator()(int i, int j) const {
    return matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }
  bool is_identity() const;

  LinearChange inverse() const;
  /// (this * other) as matrices; (A*B).f = B.(A.f).
  LinearChange operator*(const LinearChange& other) const;

  friend bool operator==(const LinearChange&, const LinearChange&) = default;

 private:
  std::vector<std::vector<Rational>> matrix_;
};

Rational determinant(std::vector<std::vector<Rational>> m);

/// A.f = f(sum_i a_i1 x_i, ..., sum_i a_in x_i).
Polynomial apply_linear_change(const LinearChange& a, const Polynomial& f);
std::vector<Polynomial> apply_linear_change(const LinearChange& a, std::span<const Polynomial> fs);

/// Homogenizes with a new last variable x_{n+1}; the zero polynomial maps to zero.
Polynomial homogenize(const Polynomial& f);
/// Sets the last variable to 1 and drops it.
Polynomial dehomogenize(const Polynomial& f);

}  // namespace stablegb
