#include "stablegb/ring.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "stablegb/error.hpp"

namespace stablegb {

// ---------------------------------------------------------------- RingContext

RingContext::RingContext(int n) {
  if (n < 1 || n > kMaxVars) {
    throw UsageError("number of variables must be in [1, " + std::to_string(kMaxVars) + "]");
  }
  for (int i = 1; i <= n; ++i) names_.push_back("x" + std::to_string(i));
}

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty() || static_cast<int>(names_.size()) > kMaxVars) {
    throw UsageError("number of variables must be in [1, " + std::to_string(kMaxVars) + "]");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) throw UsageError("duplicate variable name '" + name + "'");
  }
}

int RingContext::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingContext RingContext::extended(const std::string& extra) const {
  auto names = names_;
  std::string candidate = extra;
  while (std::find(names.begin(), names.end(), candidate) != names.end()) candidate += "_";
  names.push_back(candidate);
  return RingContext(std::move(names));
}

RingContext RingContext::truncated(int count) const {
  if (count < 0 || count >= n()) throw UsageError("cannot drop " + std::to_string(count) + " variables");
  return RingContext(std::vector<std::string>(names_.begin(), names_.end() - count));
}

// ----------------------------------------------------------------------- Term

Term::Term(int arity) {
  if (arity < 0 || arity > kMaxVars) throw UsageError("term arity out of range");
  arity_ = static_cast<std::uint8_t>(arity);
}

Term::Term(int arity, std::initializer_list<int> exponents)
    : Term(arity, std::span<const int>(exponents.begin(), exponents.size())) {}

Term::Term(int arity, std::span<const int> exponents) : Term(arity) {
  if (static_cast<int>(exponents.size()) != arity) throw UsageError("exponent vector length differs from arity");
  for (int i = 0; i < arity; ++i) {
    int e = exponents[static_cast<std::size_t>(i)];
    if (e < 0 || e > 0xFFFF) throw UsageError("exponent out of range");
    exp_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
    degree_ += static_cast<std::uint32_t>(e);
  }
}

Term Term::variable(int arity, int index, int power) {
  Term t(arity);
  return t.with(index, power);
}

Term Term::with(int i, int e) const {
  if (i < 0 || i >= arity_) throw UsageError("variable index out of range");
  Term t = *this;
  t.degree_ = t.degree_ - exp_[static_cast<std::size_t>(i)] + static_cast<std::uint32_t>(e);
  t.exp_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
  return t;
}

int Term::max_index() const {
  for (int i = arity_ - 1; i >= 0; --i) {
    if (exp_[static_cast<std::size_t>(i)] != 0) return i + 1;
  }
  return 0;
}

bool Term::divides(const Term& other) const {
  if (degree_ > other.degree_) return false;
  for (int i = 0; i < arity_; ++i) {
    if (exp_[static_cast<std::size_t>(i)] > other.exp_[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

Term Term::operator/(const Term& other) const {
  Term t = *this;
  for (int i = 0; i < arity_; ++i) {
    auto k = static_cast<std::size_t>(i);
    if (other.exp_[k] > exp_[k]) throw DomainError("term quotient is not a term");
    t.exp_[k] = static_cast<std::uint16_t>(exp_[k] - other.exp_[k]);
  }
  t.degree_ = degree_ - other.degree_;
  return t;
}

Term Term::operator*(const Term& other) const {
  Term t = *this;
  for (int i = 0; i < arity_; ++i) {
    auto k = static_cast<std::size_t>(i);
    t.exp_[k] = static_cast<std::uint16_t>(exp_[k] + other.exp_[k]);
  }
  t.degree_ = degree_ + other.degree_;
  return t;
}

Term Term::lcm(const Term& other) const {
  Term t(arity_);
  for (int i = 0; i < arity_; ++i) {
    auto k = static_cast<std::size_t>(i);
    t.exp_[k] = std::max(exp_[k], other.exp_[k]);
    t.degree_ += t.exp_[k];
  }
  return t;
}

Term Term::gcd(const Term& other) const {
  Term t(arity_);
  for (int i = 0; i < arity_; ++i) {
    auto k = static_cast<std::size_t>(i);
    t.exp_[k] = std::min(exp_[k], other.exp_[k]);
    t.degree_ += t.exp_[k];
  }
  return t;
}

bool Term::coprime(const Term& other) const {
  for (int i = 0; i < arity_; ++i) {
    auto k = static_cast<std::size_t>(i);
    if (exp_[k] != 0 && other.exp_[k] != 0) return false;
  }
  return true;
}

Term Term::truncated(int arity) const {
  Term t(arity);
  for (int i = 0; i < arity; ++i) {
    t.exp_[static_cast<std::size_t>(i)] = exp_[static_cast<std::size_t>(i)];
    t.degree_ += exp_[static_cast<std::size_t>(i)];
  }
  return t;
}

Term Term::extended(int exponent) const {
  if (arity_ >= kMaxVars) throw UsageError("too many variables");
  Term t = *this;
  t.arity_ = static_cast<std::uint8_t>(arity_ + 1);
  t.exp_[arity_] = static_cast<std::uint16_t>(exponent);
  t.degree_ += static_cast<std::uint32_t>(exponent);
  return t;
}

std::vector<int> Term::exponents() const {
  return std::vector<int>(exp_.begin(), exp_.begin() + arity_);
}

std::size_t Term::hash() const {
  std::size_t h = arity_;
  for (int i = 0; i < arity_; ++i) h = h * 1000003u ^ exp_[static_cast<std::size_t>(i)];
  return h;
}

std::strong_ordering degrevlex_cmp(const Term& a, const Term& b) {
  if (a.arity() != b.arity()) throw UsageError("degrevlex_cmp: arity mismatch");
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = a.arity() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

namespace {

void enumerate_terms(std::vector<int>& exps, int index, int remaining, std::vector<Term>& out) {
  const int n = static_cast<int>(exps.size());
  if (index == n - 1) {
    exps[static_cast<std::size_t>(index)] = remaining;
    out.emplace_back(n, std::span<const int>(exps));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[static_cast<std::size_t>(index)] = e;
    enumerate_terms(exps, index + 1, remaining - e, out);
  }
  exps[static_cast<std::size_t>(index)] = 0;
}

}  // namespace

std::vector<Term> terms_of_degree(int arity, int degree) {
  std::vector<Term> out;
  if (degree < 0) return out;
  if (arity == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> exps(static_cast<std::size_t>(arity), 0);
  enumerate_terms(exps, 0, degree, out);
  std::sort(out.begin(), out.end(), DegrevlexGreater{});
  return out;
}

// ----------------------------------------------------------------- Polynomial

Polynomial::Polynomial(int arity, std::vector<Monomial> monomials) : arity_(arity) {
  for (const auto& m : monomials) {
    if (m.term.arity() != arity) throw UsageError("monomial arity differs from polynomial arity");
  }
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& x, const Monomial& y) { return degrevlex_cmp(x.term, y.term) > 0; });
  for (auto& m : monomials) {
    if (!terms_.empty() && terms_.back().term == m.term) {
      terms_.back().coeff += m.coeff;
      if (sgn(terms_.back().coeff) == 0) terms_.pop_back();
    } else if (sgn(m.coeff) != 0) {
      terms_.push_back(std::move(m));
    }
  }
}

Polynomial Polynomial::constant(int arity, const Rational& c) {
  Polynomial p(arity);
  if (sgn(c) != 0) p.terms_.push_back({c, Term(arity)});
  return p;
}

Polynomial Polynomial::monomial(const Rational& c, const Term& t) {
  Polynomial p(t.arity());
  if (sgn(c) != 0) p.terms_.push_back({c, t});
  return p;
}

const Term& Polynomial::lt() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front().term;
}

const Rational& Polynomial::lc() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.front().coeff;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.front().term.degree(); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().term.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Monomial& m) { return m.term.degree() == d; });
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial p = *this;
  Rational inv = 1 / terms_.front().coeff;
  for (auto& m : p.terms_) m.coeff *= inv;
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& m : p.terms_) m.coeff = -m.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  sub_mul(Rational(-1), Term(arity_), g);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  sub_mul(Rational(1), Term(arity_), g);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& m : terms_) m.coeff *= c;
  return *this;
}

void Polynomial::sub_mul(const Rational& c, const Term& t, const Polynomial& g, std::size_t from) {
  if (g.arity_ != arity_ || t.arity() != arity_) throw UsageError("polynomial arity mismatch");
  if (sgn(c) == 0 || g.terms_.empty()) return;
  if (&g == this) {
    Polynomial copy = g;
    sub_mul(c, t, copy, from);
    return;
  }
  std::vector<Monomial> out;
  out.reserve(terms_.size() + g.terms_.size());
  for (std::size_t i = 0; i < from; ++i) out.push_back(std::move(terms_[i]));
  auto a = terms_.begin() + static_cast<std::ptrdiff_t>(from);
  auto b = g.terms_.begin();
  Rational prod;
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Term bt = b->term * t;
    auto order = a == terms_.end() ? std::strong_ordering::less : degrevlex_cmp(a->term, bt);
    if (order > 0) {
      out.push_back(std::move(*a++));
    } else if (order < 0) {
      prod = b->coeff * c;
      out.push_back({-prod, bt});
      ++b;
    } else {
      prod = b->coeff * c;
      a->coeff -= prod;
      if (sgn(a->coeff) != 0) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial Polynomial::mul_term(const Rational& c, const Term& t) const {
  Polynomial p(arity_);
  if (sgn(c) == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& m : terms_) p.terms_.push_back({m.coeff * c, m.term * t});
  return p;
}

Polynomial Polynomial::restrict_last(int count) const {
  if (count < 0 || count > arity_) throw UsageError("restrict_last: bad variable count");
  int keep = arity_ - count;
  std::vector<Monomial> out;
  for (const auto& m : terms_) {
    bool vanishes = false;
    for (int i = keep; i < arity_; ++i) vanishes = vanishes || m.term[i] != 0;
    if (!vanishes) out.push_back({m.coeff, m.term.truncated(keep)});
  }
  return Polynomial(keep, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].term == b.terms_[i].term) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity()) throw UsageError("polynomial arity mismatch");
  std::vector<Monomial> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) prod.push_back({x.coeff * y.coeff, x.term * y.term});
  }
  return Polynomial(a.arity(), std::move(prod));
}

Polynomial pow(const Polynomial& f, int e) {
  if (e < 0) throw DomainError("negative polynomial power");
  Polynomial result = Polynomial::constant(f.arity(), Rational(1));
  Polynomial base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LeadingData leading_data(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("leading data of the zero polynomial");
  return {f.lt(), f.lc(), Polynomial::monomial(f.lc(), f.lt())};
}

// --------------------------------------------------------------- LinearChange

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

LinearChange::LinearChange(std::vector<std::vector<Rational>> matrix) : matrix_(std::move(matrix)) {
  const std::size_t n = matrix_.size();
  if (n == 0 || n > static_cast<std::size_t>(kMaxVars)) throw UsageError("linear change size out of range");
  for (const auto& row : matrix_) {
    if (row.size() != n) throw UsageError("linear change matrix is not square");
  }
  if (sgn(determinant(matrix_)) == 0) throw DomainError("linear change matrix is singular");
}

LinearChange LinearChange::identity(int n) {
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return LinearChange(std::move(m));
}

bool LinearChange::is_identity() const {
  for (int i = 0; i < n(); ++i) {
    for (int j = 0; j < n(); ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

LinearChange LinearChange::inverse() const {
  const std::size_t n = matrix_.size();
  auto a = matrix_;
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (sgn(a[pivot][col]) == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale = 1 / a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rational factor = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= factor * a[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return LinearChange(std::move(inv));
}

LinearChange LinearChange::operator*(const LinearChange& other) const {
  if (other.n() != n()) throw UsageError("linear change size mismatch");
  const std::size_t n = matrix_.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] += matrix_[i][k] * other.matrix_[k][j];
    }
  }
  return LinearChange(std::move(m));
}

namespace {

// Memoized powers of the images of the variables.
class SubstitutionCache {
 public:
  explicit SubstitutionCache(const LinearChange& a) : powers_(static_cast<std::size_t>(a.n())) {
    const int n = a.n();
    for (int j = 0; j < n; ++j) {
      std::vector<Monomial> image;
      for (int i = 0; i < n; ++i) image.push_back({a(i, j), Term::variable(n, i)});
      powers_[static_cast<std::size_t>(j)].push_back(Polynomial::constant(n, Rational(1)));
      powers_[static_cast<std::size_t>(j)].push_back(Polynomial(n, std::move(image)));
    }
  }

  const Polynomial& power(int j, int e) {
    auto& cache = powers_[static_cast<std::size_t>(j)];
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[static_cast<std::size_t>(e)];
  }

 private:
  std::vector<std::vector<Polynomial>> powers_;
};

Polynomial substitute(SubstitutionCache& cache, const Polynomial& f) {
  const int n = f.arity();
  std::vector<Monomial> acc;
  for (const auto& m : f.terms()) {
    Polynomial image = Polynomial::constant(n, m.coeff);
    for (int j = 0; j < n; ++j) {
      if (m.term[j] > 0) image = image * cache.power(j, m.term[j]);
    }
    for (const auto& x : image.terms()) acc.push_back(x);
  }
  return Polynomial(n, std::move(acc));
}

}  // namespace

Polynomial apply_linear_change(const LinearChange& a, const Polynomial& f) {
  if (a.n() != f.arity()) throw UsageError("linear change arity mismatch");
  SubstitutionCache cache(a);
  return substitute(cache, f);
}

std::vector<Polynomial> apply_linear_change(const LinearChange& a, std::span<const Polynomial> fs) {
  SubstitutionCache cache(a);
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) {
    if (a.n() != f.arity()) throw UsageError("linear change arity mismatch");
    out.push_back(substitute(cache, f));
  }
  return out;
}

Polynomial homogenize(const Polynomial& f) {
  const int n = f.arity();
  if (n + 1 > kMaxVars) throw UsageError("too many variables to homogenize");
  const int d = f.degree();
  std::vector<Monomial> out;
  for (const auto& m : f.terms()) out.push_back({m.coeff, m.term.extended(d - m.term.degree())});
  return Polynomial(n + 1, std::move(out));
}

Polynomial dehomogenize(const Polynomial& f) {
  const int n = f.arity();
  if (n < 2) throw UsageError("dehomogenize needs at least two variables");
  std::vector<Monomial> out;
  for (const auto& m : f.terms()) out.push_back({m.coeff, m.term.truncated(n - 1)});
  return Polynomial(n - 1, std::move(out));
}

}  // namespace stablegb
