#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpweyl/errors.hpp"

namespace mpweyl {

// ---------------------------------------------------------------------------
// Parameter variables.
//
// The coefficient field is Q(r_1, s_1, r_2, s_2, ...), optionally extended by
// named formal parameters (used for symbolic module data such as lambda or xi).
// Variable ids interleave the deformation parameters, r_1 < s_1 < r_2 < ...,
// which is also the variable significance used by the global term order below.
// Named parameters sort after every r_i/s_i, in registration order.
// ---------------------------------------------------------------------------

using VarId = std::int32_t;

inline constexpr VarId kNamedParamBase = 1 << 20;

inline VarId var_r(int i) { return 2 * (i - 1); }
inline VarId var_s(int i) { return 2 * (i - 1) + 1; }
inline bool is_named_param(VarId v) { return v >= kNamedParamBase; }

// Registers (or looks up) a named formal parameter; ids are stable for the
// lifetime of the process. Names must not collide with r<k>/s<k>.
VarId register_parameter(const std::string& name);
std::string variable_name(VarId v);

// ---------------------------------------------------------------------------
// Monomial: a sparse Laurent exponent vector, sorted by VarId, no zero entries.
// ---------------------------------------------------------------------------

class Monomial {
public:
  using Entry = std::pair<VarId, std::int32_t>;

  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial var(VarId v, std::int32_t exp = 1);

  bool is_one() const { return entries_.empty(); }
  std::int32_t exponent(VarId v) const;
  long total_degree() const;
  bool all_nonnegative() const;
  const std::vector<Entry>& entries() const { return entries_; }

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  // this / o, entrywise difference of exponents.
  Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }
  // Componentwise min (used to split off the common monomial factor).
  static Monomial min(const Monomial& a, const Monomial& b);
  // True if o divides this with nonnegative quotient exponents.
  bool divisible_by(const Monomial& o) const;

  // Global term order: graded, then lexicographic with var significance
  // r_1 > none... compare total degree first, then the first variable (in id
  // order r_1, s_1, r_2, ...) whose exponents differ decides, larger exponent
  // meaning larger monomial. Returns <0, 0, >0.
  static int cmp(const Monomial& a, const Monomial& b);
  bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }
  bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::string to_string() const;  // "r1^2*s1^-1", "1" for the empty monomial

private:
  std::vector<Entry> entries_;
};

// ---------------------------------------------------------------------------
// LaurentPoly: sparse Laurent polynomial with exact rational coefficients.
// ---------------------------------------------------------------------------

class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return integer(1); }
  static LaurentPoly integer(long v);
  static LaurentPoly rational(const mpq_class& v);
  static LaurentPoly variable(VarId v, std::int32_t exp = 1);
  static LaurentPoly monomial(const Monomial& m, const mpq_class& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;   // zero or a single term with empty monomial
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }

  // The single term of a monomial poly.
  const Monomial& sole_monomial() const { return terms_.begin()->first; }
  const mpq_class& sole_coeff() const { return terms_.begin()->second; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const mpq_class& c) const;
  LaurentPoly shifted(const Monomial& m) const;  // multiply by a monomial
  LaurentPoly pow(unsigned long k) const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Leading term under the global order (max). Poly must be nonzero.
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const mpq_class& leading_coeff() const { return terms_.rbegin()->second; }

  bool all_exponents_nonnegative() const;
  // Componentwise minimum exponent vector over all terms (the common monomial
  // factor; negative entries appear for genuinely Laurent polys).
  Monomial min_exponents() const;

  // Positive rational c with p/c having coprime integer coefficients.
  // Zero poly has content 0.
  mpq_class content() const;

  long degree_in(VarId v) const;        // max exponent of v (0 if absent)
  LaurentPoly coeff_of(VarId v, std::int32_t d) const;  // v stripped from result

  // Exact division; both operands must have nonnegative exponents and o must
  // divide this evenly (checked; throws std::logic_error otherwise).
  static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

  // Polynomial gcd over Q (primitive pseudo-remainder sequences). Operands must
  // have nonnegative exponents. Result is primitive with integer coefficients
  // and positive leading coefficient; gcd(0,0) = 0, gcd of anything with a
  // nonzero constant is 1.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  // Primitive part with positive leading coefficient (unit normalization).
  LaurentPoly normalized_primitive() const;

  std::string to_string() const;  // "r1^2 - s1^2", "0", leading term first

  void add_term(const Monomial& m, const mpq_class& c);  // merges, drops zeros

private:
  std::map<Monomial, mpq_class> terms_;
};

// ---------------------------------------------------------------------------
// Scalar: element of the fraction field, kept in canonical reduced form.
//
// Invariants: den is a genuine polynomial (no negative exponents) whose
// componentwise-min exponent is 0 in every variable, with coprime integer
// coefficients and positive leading coefficient; the polynomial parts of num
// and den share no factor of positive degree; num carries the monomial factor
// (it may be any Laurent polynomial with rational coefficients). Zero is 0/1.
// ---------------------------------------------------------------------------

class Scalar {
public:
  Scalar() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
  Scalar(long v) : num_(LaurentPoly::integer(v)), den_(LaurentPoly::one()) {}
  explicit Scalar(const mpq_class& v)
      : num_(LaurentPoly::rational(v)), den_(LaurentPoly::one()) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar param_r(int i) { return from_poly(LaurentPoly::variable(var_r(i))); }
  static Scalar param_s(int i) { return from_poly(LaurentPoly::variable(var_s(i))); }
  static Scalar parameter(const std::string& name) {
    return from_poly(LaurentPoly::variable(register_parameter(name)));
  }
  // r_i^e / s_i^e as Laurent monomials (e may be negative).
  static Scalar r_power(int i, long e);
  static Scalar s_power(int i, long e);
  static Scalar from_poly(const LaurentPoly& p);
  static Scalar monomial(const Monomial& m, const mpq_class& c = 1);
  // num/den, reduced to canonical form. Throws DivisionByZero if den is 0.
  static Scalar fraction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  // Single Laurent term with trivial denominator.
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;        // throws DivisionByZero on zero
  Scalar pow(long k) const;      // negative k inverts first

  // Equality by cross-multiplication of canonical forms.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;  // "r1^2 + s1^2" or "(...)/(...)"

private:
  Scalar(LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {}
  static Scalar reduced(const LaurentPoly& num, const LaurentPoly& den);
  // Canonicalization when the polynomial parts are already known coprime:
  // splits the monomial factor and normalizes the denominator, no gcd.
  static Scalar normalized_coprime(const LaurentPoly& num, const LaurentPoly& den);

  LaurentPoly num_;
  LaurentPoly den_;
};

// ---------------------------------------------------------------------------
// Derived quantities.
// ---------------------------------------------------------------------------

// [k] at index i: (r_i^{2k} - s_i^{2k})/(r_i^2 - s_i^2). [0] = 0, [1] = 1,
// and for k >= 1 this is the sum of r_i^{2j} s_i^{2(k-1-j)} over 0 <= j < k.
Scalar quantum_integer(int i, long k);

struct SignedPower {
  int sign;    // +1 or -1
  long power;  // exponent p with x = sign * (r_j/s_j)^p
};

// Exact partial inverse of p -> sign*(r_j/s_j)^p: inspects the canonical form
// of x and returns the unique (sign, p) if x has exactly that shape, nullopt
// otherwise. Throws ZeroInput when x is zero.
std::optional<SignedPower> ratio_as_signed_power(const Scalar& x, int j);

}  // namespace mpweyl
