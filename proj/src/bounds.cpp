#include "stablegb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>

#include "stablegb/error.hpp"

namespace stablegb {

namespace {

constexpr std::uint64_t kDefaultBitCap = 1000000;

struct NamedFormula {
  Formula formula;
  std::string_view name;
};

constexpr NamedFormula kNames[] = {
    {Formula::moller_mora, "moller_mora"},     {Formula::giusti, "giusti"},
    {Formula::dube, "dube"},                   {Formula::caviglia_sbarra, "caviglia_sbarra"},
    {Formula::mayr_ritscher, "mayr_ritscher"}, {Formula::hs_A, "hs_A"},
    {Formula::hs_A_depth, "hs_A_depth"},       {Formula::hs_C, "hs_C"},
    {Formula::hs_C_depth, "hs_C_depth"},       {Formula::macaulay_0dim, "macaulay_0dim"},
    {Formula::lazard, "lazard"},               {Formula::lazard_affine, "lazard_affine"},
    {Formula::cm_noether, "cm_noether"},       {Formula::fset_bound, "fset_bound"},
};

double log2_of(const BigInt& z) {
  long exp = 0;
  double mantissa = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exp);
}

double log2_of(const Rational& q) { return log2_of(q.get_num()) - log2_of(q.get_den()); }

BigInt pow_big(unsigned long base, unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

BigInt pow2(int k) { return pow_big(2, static_cast<unsigned long>(k)); }

Rational pow_rational(const Rational& q, unsigned long e) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

BigInt ceiling(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw DomainError(what);
}

int need_dim(const BoundInputs& in) {
  require(in.dim.has_value(), "formula needs the dimension D");
  require(*in.dim >= 0 && *in.dim <= in.n, "need 0 <= D <= n");
  return *in.dim;
}

int need_depth(const BoundInputs& in) {
  require(in.depth.has_value(), "formula needs the depth lambda");
  require(*in.depth >= 0 && *in.depth <= in.n, "need 0 <= lambda <= n");
  return *in.depth;
}

BoundValue power_form(Formula f, const BoundInputs& in, Rational coefficient, Rational base, BigInt exponent,
                      int root = 1) {
  BoundValue v;
  v.formula = f;
  v.inputs = in;
  v.coefficient = std::move(coefficient);
  v.base = std::move(base);
  v.exponent = std::move(exponent);
  v.root = root;
  return v;
}

BoundValue integer_value(Formula f, const BoundInputs& in, const BigInt& value) {
  return power_form(f, in, Rational(value), Rational(1), BigInt(1));
}

void materialize(BoundValue& v, std::uint64_t cap) {
  if (v.base == 1) {
    v.exact = v.coefficient;
  } else {
    const double bits = v.log2();
    if (!(bits <= static_cast<double>(cap))) return;
    const unsigned long e = v.exponent.get_ui();
    if (v.root == 1) {
      v.exact = v.coefficient * pow_rational(v.base, e);
    } else {
      // coefficient * sqrt(base^e) with integer coefficient and base.
      BigInt radicand = BigInt(v.coefficient * v.coefficient) * BigInt(pow_rational(v.base, e));
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
      if (root * root == radicand) {
        v.exact = Rational(root);
      } else {
        v.irrational = true;
        v.value = root;
        return;
      }
    }
  }
  v.exact->canonicalize();
  v.value = ceiling(*v.exact);
}

std::vector<int> padded_degrees(const BoundInputs& in) {
  std::vector<int> degrees = in.degrees;
  if (degrees.empty()) degrees.assign(static_cast<std::size_t>(in.n), in.d);
  return degrees;
}

BoundValue evaluate(Formula f, const BoundInputs& in, std::uint64_t cap) {
  require(in.n >= 1, "need n >= 1");
  require(in.d >= 1, "need d >= 1");
  for (int e : in.degrees) require(e >= 1, "generator degrees must be positive");
  const int n = in.n;
  const Rational d(in.d);
  BoundValue v;
  switch (f) {
    case Formula::moller_mora: {
      BigInt exponent = pow_big(static_cast<unsigned long>(2 * n + 2), static_cast<unsigned long>(n + 1));
      v = power_form(f, in, 1, 2 * d, exponent);
      break;
    }
    case Formula::giusti:
      v = power_form(f, in, 1, 2 * d, pow2(n - 1));
      break;
    case Formula::dube:
      v = power_form(f, in, 2, d * d / 2 + d, pow2(n - 1));
      break;
    case Formula::caviglia_sbarra:
      require(n >= 2, "caviglia_sbarra needs n >= 2");
      v = power_form(f, in, 1, 2 * d, pow2(n - 2));
      break;
    case Formula::mayr_ritscher: {
      const int dim = need_dim(in);
      require(dim >= 1, "mayr_ritscher needs D >= 1");
      Rational base = Rational(pow_big(static_cast<unsigned long>(in.d), static_cast<unsigned long>(n - dim))) / 2 + d;
      v = power_form(f, in, 2, base, pow2(dim - 1));
      break;
    }
    case Formula::hs_A: {
      const int dim = need_dim(in);
      BoundValue linear = integer_value(f, in, BigInt((n - dim + 1) * (in.d - 1) + 1));
      BoundValue exponential = dim == 0 ? power_form(f, in, 2, d, BigInt(n), 2)
                                        : power_form(f, in, 2, d, BigInt(n - dim) * pow2(dim - 1));
      materialize(linear, cap);
      materialize(exponential, cap);
      return compare(linear, exponential) >= 0 ? linear : exponential;
    }
    case Formula::hs_A_depth: {
      const int dim = need_dim(in);
      const int depth = need_depth(in);
      require(dim > 1, "hs_A_depth needs D > 1");
      require(dim > depth, "hs_A_depth needs D > lambda");
      v = power_form(f, in, 2, d, BigInt(n - dim) * pow2(dim - depth - 1));
      break;
    }
    case Formula::hs_C:
    case Formula::hs_C_depth: {
      const int dim = need_dim(in);
      require(dim >= 1, "hs_C needs D >= 1");
      int depth = 0;
      if (f == Formula::hs_C_depth) {
        depth = need_depth(in);
        require(dim > depth, "hs_C_depth needs D > lambda");
      }
      BigInt base = pow_big(static_cast<unsigned long>(in.d), static_cast<unsigned long>(n - dim)) +
                    (n - dim) * (in.d - 1);
      v = power_form(f, in, 1, Rational(base), pow2(dim - depth - 1));
      break;
    }
    case Formula::macaulay_0dim:
      v = integer_value(f, in, lazard_sum(padded_degrees(in), n));
      break;
    case Formula::lazard:
      v = integer_value(f, in, lazard_sum(padded_degrees(in), n - need_depth(in)));
      break;
    case Formula::lazard_affine:
      v = integer_value(f, in, lazard_sum(padded_degrees(in), n + 1 - need_depth(in)));
      break;
    case Formula::cm_noether:
      v = integer_value(f, in, lazard_sum(padded_degrees(in), n - need_dim(in)));
      break;
    case Formula::fset_bound: {
      const int dim = need_dim(in);
      v = power_form(f, in, 1, d, BigInt(n - dim) * pow2(dim));
      break;
    }
  }
  materialize(v, cap);
  return v;
}

}  // namespace

std::string_view formula_name(Formula f) {
  for (const auto& entry : kNames) {
    if (entry.formula == f) return entry.name;
  }
  return "unknown";
}

std::optional<Formula> formula_from_name(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.formula;
  }
  return std::nullopt;
}

double BoundValue::log2() const {
  if (value && !irrational && exact) return log2_of(*exact);
  double out = log2_of(coefficient);
  if (base != 1) out += exponent.get_d() / root * log2_of(base);
  return out;
}

std::string BoundValue::to_string() const {
  if (value) return value->get_str();
  std::string out;
  if (coefficient != 1) out += coefficient.get_str() + "*";
  out += "(" + base.get_str() + ")^" + exponent.get_str();
  if (root != 1) out += "/" + std::to_string(root);
  return out;
}

std::uint64_t bit_cap() {
  if (const char* env = std::getenv("STABLEGB_BIT_CAP")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) return parsed;
  }
  return kDefaultBitCap;
}

int lazard_sum(std::vector<int> degrees, int r) {
  if (r < 0) throw DomainError("lazard_sum: r must be non-negative");
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  degrees.resize(std::max(degrees.size(), static_cast<std::size_t>(r)), 1);
  int sum = 0;
  for (int i = 0; i < r; ++i) sum += degrees[static_cast<std::size_t>(i)];
  return sum - r + 1;
}

BoundValue bound(Formula f, const BoundInputs& in, std::optional<std::uint64_t> cap) {
  return evaluate(f, in, cap.value_or(bit_cap()));
}

int compare(const BoundValue& a, const BoundValue& b) {
  if (a.value && b.value) {
    // All values are positive, so comparing squares is exact even for roots.
    auto square = [](const BoundValue& v) {
      if (v.exact) return Rational(*v.exact * *v.exact);
      return Rational(v.coefficient * v.coefficient * pow_rational(v.base, v.exponent.get_ui()));
    };
    int c = cmp(square(a), square(b));
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (a.base == b.base && a.coefficient == b.coefficient && a.root == b.root) {
    int c = cmp(a.exponent, b.exponent);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  const double la = a.log2();
  const double lb = b.log2();
  return la < lb ? -1 : (la > lb ? 1 : 0);
}

std::vector<BoundValue> compare_bounds(const BoundInputs& in, std::optional<std::uint64_t> cap) {
  std::vector<BoundValue> out;
  for (Formula f : kAllFormulas) {
    try {
      out.push_back(bound(f, in, cap));
    } catch (const DomainError&) {
      // not applicable to these inputs
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const BoundValue& a, const BoundValue& b) { return compare(a, b) < 0; });
  return out;
}

}  // namespace stablegb
