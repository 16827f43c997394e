#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

Exponents exps(const Term& t) {
  Exponents e(static_cast<std::size_t>(t.arity()));
  for (int i = 0; i < t.arity(); ++i) e[static_cast<std::size_t>(i)] = t[i];
  return e;
}

std::vector<Exponents> exps(const std::vector<Term>& terms) {
  std::vector<Exponents> out;
  for (const auto& t : terms) out.push_back(exps(t));
  return out;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

static int total(const Exponents& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

bool degrevlex_greater(const Exponents& a, const Exponents& b) {
  if (total(a) != total(b)) return total(a) > total(b);
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<Exponents> monomials(int n, int s) {
  std::vector<Exponents> out;
  Exponents e(static_cast<std::size_t>(n), 0);
  // odometer over all vectors with entries in [0, s], keeping those of sum s
  for (;;) {
    if (total(e) == s) out.push_back(e);
    std::size_t i = 0;
    while (i < e.size() && e[i] == s) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return out;
}

bool in_monomial_ideal(const std::vector<Exponents>& gens, const Exponents& t) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exponents& g) { return divides(g, t); });
}

BigInt hf_by_enumeration(int n, const std::vector<Exponents>& gens, int s) {
  BigInt count = 0;
  for (const auto& m : monomials(n, s)) {
    if (!in_monomial_ideal(gens, m)) ++count;
  }
  return count;
}

namespace {

using Row = std::map<Exponents, Rational>;

// Row-reduces in place with the given column order; returns the pivot columns.
std::vector<Exponents> echelon(std::vector<Row> rows, const std::vector<Exponents>& columns) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> dense(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      auto it = r.find(columns[c]);
      if (it != r.end()) dense[c] = it->second;
    }
    m.push_back(std::move(dense));
  }
  std::vector<Exponents> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < columns.size() && top < m.size(); ++c) {
    std::size_t p = top;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[top]);
    for (std::size_t r = top + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[top][c];
      for (std::size_t k = c; k < columns.size(); ++k) m[r][k] -= f * m[top][k];
    }
    pivots.push_back(columns[c]);
    ++top;
  }
  return pivots;
}

std::vector<Row> slice_rows(const std::vector<Polynomial>& gens, int s) {
  std::vector<Row> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > s) continue;
    const int n = g.arity();
    for (const auto& m : monomials(n, s - g.degree())) {
      Row row;
      for (const auto& mono : g.terms()) {
        Exponents e = exps(mono.term);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += m[i];
        row[e] += mono.coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<Exponents> columns_of(const std::vector<Row>& rows) {
  std::set<Exponents> keys;
  for (const auto& r : rows) {
    for (const auto& [k, v] : r) keys.insert(k);
  }
  return {keys.begin(), keys.end()};
}

}  // namespace

std::size_t rank(std::vector<std::map<Exponents, Rational>> rows) {
  const auto columns = columns_of(rows);
  return echelon(std::move(rows), columns).size();
}

bool in_ideal(const Polynomial& f, const std::vector<Polynomial>& gens) {
  std::map<int, Row> parts;
  for (const auto& m : f.terms()) parts[m.term.degree()][exps(m.term)] += m.coeff;
  for (const auto& [s, part] : parts) {
    std::vector<Row> rows = slice_rows(gens, s);
    const std::size_t without = rank(rows);
    rows.push_back(part);
    if (rank(rows) != without) return false;
  }
  return true;
}

std::size_t ideal_slice_dimension(const std::vector<Polynomial>& gens, int s) { return rank(slice_rows(gens, s)); }

std::vector<Exponents> leading_terms_of_slice(const std::vector<Polynomial>& gens, int s) {
  if (gens.empty()) return {};
  std::vector<Exponents> columns = monomials(gens.front().arity(), s);
  std::sort(columns.begin(), columns.end(), degrevlex_greater);
  auto pivots = echelon(slice_rows(gens, s), columns);
  std::sort(pivots.begin(), pivots.end());
  return pivots;
}

namespace {

template <typename Moves>
bool closed_under(int n, const std::vector<Exponents>& gens, int up_to, Moves moves) {
  for (int s = 0; s <= up_to; ++s) {
    for (const auto& t : monomials(n, s)) {
      if (in_monomial_ideal(gens, t) && !moves(t)) return false;
    }
  }
  return true;
}

}  // namespace

int cls(const Exponents& t) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] > 0) return static_cast<int>(i) + 1;
  }
  return 0;
}

bool strongly_stable(int n, const std::vector<Exponents>& gens, int up_to) {
  return closed_under(n, gens, up_to, [&](const Exponents& t) {
    for (int j = 0; j < n; ++j) {
      if (t[static_cast<std::size_t>(j)] == 0) continue;
      for (int i = 0; i < j; ++i) {
        Exponents u = t;
        --u[static_cast<std::size_t>(j)];
        ++u[static_cast<std::size_t>(i)];
        if (!in_monomial_ideal(gens, u)) return false;
      }
    }
    return true;
  });
}

bool stable(int n, const std::vector<Exponents>& gens, int up_to) {
  return closed_under(n, gens, up_to, [&](const Exponents& t) {
    const int m = cls(t);
    for (int i = 1; i < m; ++i) {
      Exponents u = t;
      --u[static_cast<std::size_t>(m - 1)];
      ++u[static_cast<std::size_t>(i - 1)];
      if (!in_monomial_ideal(gens, u)) return false;
    }
    return true;
  });
}

bool quasi_stable(int n, const std::vector<Exponents>& gens, int up_to) {
  int bound = 0;
  for (const auto& g : gens) bound = std::max(bound, total(g));
  return closed_under(n, gens, up_to, [&](const Exponents& t) {
    const int m = cls(t);
    for (int j = 1; j < m; ++j) {
      bool reached = false;
      for (int s = 0; s <= bound && !reached; ++s) {
        Exponents u = t;
        u[static_cast<std::size_t>(m - 1)] = 0;
        u[static_cast<std::size_t>(j - 1)] += s;
        reached = in_monomial_ideal(gens, u);
      }
      if (!reached) return false;
    }
    return true;
  });
}

bool pommaret_divides(const Exponents& b, const Exponents& a) {
  if (!divides(b, a)) return false;
  const int c = cls(b);
  for (int i = 1; i < c; ++i) {
    if (a[static_cast<std::size_t>(i - 1)] != b[static_cast<std::size_t>(i - 1)]) return false;
  }
  return true;
}

Polynomial substitute(const stablegb::LinearChange& a, const Polynomial& f) {
  const int n = f.arity();
  std::map<Exponents, Rational> acc;
  for (const auto& mono : f.terms()) {
    std::map<Exponents, Rational> product{{Exponents(static_cast<std::size_t>(n), 0), mono.coeff}};
    for (int j = 0; j < n; ++j) {
      for (int e = 0; e < mono.term[j]; ++e) {
        std::map<Exponents, Rational> next;
        for (const auto& [k, c] : product) {
          for (int i = 0; i < n; ++i) {
            if (a(i, j) == 0) continue;
            Exponents k2 = k;
            ++k2[static_cast<std::size_t>(i)];
            next[k2] += c * a(i, j);
          }
        }
        product = std::move(next);
      }
    }
    for (const auto& [k, c] : product) acc[k] += c;
  }
  std::vector<stablegb::Monomial> out;
  for (const auto& [k, c] : acc) {
    if (c != 0) out.push_back({c, Term(n, std::span<const int>(k))});
  }
  return Polynomial(n, std::move(out));
}

Polynomial random_homogeneous(std::mt19937_64& rng, int n, int degree, int terms, int bound) {
  const auto basis = monomials(n, degree);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-bound, bound);
  for (;;) {
    std::vector<stablegb::Monomial> ms;
    for (int k = 0; k < terms; ++k) {
      int c = 0;
      while (c == 0) c = coeff(rng);
      ms.push_back({Rational(c), Term(n, std::span<const int>(basis[pick(rng)]))});
    }
    Polynomial f(n, std::move(ms));
    if (!f.is_zero()) return f;
  }
}

Polynomial random_polynomial(std::mt19937_64& rng, int n, int max_degree, int terms, int bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  Polynomial f(n);
  while (f.is_zero()) {
    for (int k = 0; k < terms; ++k) f += random_homogeneous(rng, n, deg(rng), 1, bound);
  }
  return f;
}

std::vector<Exponents> random_monomial_gens(std::mt19937_64& rng, int n, int count, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::vector<Exponents> out;
  for (int k = 0; k < count; ++k) {
    const auto basis = monomials(n, deg(rng));
    out.push_back(basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)]);
  }
  return out;
}

}  // namespace oracle
