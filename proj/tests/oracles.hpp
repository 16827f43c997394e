#pragma once

// Brute-force reference implementations used only by the tests. They work on
// raw exponent vectors and dense linear algebra and share no algorithmic code
// with the library.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "stablegb/ring.hpp"

namespace oracle {

using stablegb::BigInt;
using stablegb::Polynomial;
using stablegb::Rational;
using stablegb::Term;
using Exponents = std::vector<int>;

Exponents exps(const Term& t);
bool divides(const Exponents& a, const Exponents& b);

/// a > b in degrevlex with x1 > ... > xn, straight from the definition.
bool degrevlex_greater(const Exponents& a, const Exponents& b);

/// All exponent vectors of total degree s in n variables.
std::vector<Exponents> monomials(int n, int s);

/// Membership in the monomial ideal generated by `gens`, by divisibility.
bool in_monomial_ideal(const std::vector<Exponents>& gens, const Exponents& t);
std::vector<Exponents> exps(const std::vector<Term>& terms);

/// Number of degree-s monomials outside the monomial ideal.
BigInt hf_by_enumeration(int n, const std::vector<Exponents>& gens, int s);

/// Rank of a list of sparse rows over Q by dense Gaussian elimination.
std::size_t rank(std::vector<std::map<Exponents, Rational>> rows);

/// f in <gens> for homogeneous gens, checked degreewise by linear algebra.
bool in_ideal(const Polynomial& f, const std::vector<Polynomial>& gens);

/// The degree-s slice of <gens> as a vector space: its dimension.
std::size_t ideal_slice_dimension(const std::vector<Polynomial>& gens, int s);

/// Is `t` (degree s) the leading term of some element of the degree-s slice?
/// Decided by row reduction with columns in brute-force degrevlex order.
std::vector<Exponents> leading_terms_of_slice(const std::vector<Polynomial>& gens, int s);

/// Raw definitions on all terms of the ideal up to degree `up_to`.
bool strongly_stable(int n, const std::vector<Exponents>& gens, int up_to);
bool stable(int n, const std::vector<Exponents>& gens, int up_to);
bool quasi_stable(int n, const std::vector<Exponents>& gens, int up_to);

int cls(const Exponents& t);
/// b |_P a straight from the definition.
bool pommaret_divides(const Exponents& b, const Exponents& a);

/// Substitutes x_j -> sum_i a(i, j) x_i by expanding products term by term.
Polynomial substitute(const stablegb::LinearChange& a, const Polynomial& f);

Polynomial random_homogeneous(std::mt19937_64& rng, int n, int degree, int terms, int bound);
Polynomial random_polynomial(std::mt19937_64& rng, int n, int max_degree, int terms, int bound);
std::vector<Exponents> random_monomial_gens(std::mt19937_64& rng, int n, int count, int max_degree);

}  // namespace oracle
