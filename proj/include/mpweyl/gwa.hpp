#pragma once

#include <map>
#include <string>
#include <utility>

#include "mpweyl/algebra.hpp"
#include "mpweyl/scalars.hpp"

// Generalized-Weyl-algebra realization over the commutative base ring
// D = K[rho_i^{+-1}, sigma_i^{+-1}]: elements are sums c_d * Z^d with
// c_d in D and Z^d = prod X_i^{d_i} (d_i > 0) or Y_i^{-d_i} (d_i < 0).
// The product uses only the commutation rules
//   X_i d = phi_i(d) X_i,   Y_i d = phi_i^{-1}(d) Y_i,
//   Y_i X_i = t_i,          X_i Y_i = phi_i(t_i),
// and never consults the rewriting engine or the closed-form block products
// of the algebra module, so the two multiplications check each other.

namespace mpweyl::gwa {

// Monomial prod_i rho_i^{a_i} sigma_i^{b_i} of the base ring.
struct TorusMonomial {
  // index -> (a, b); pairs with a = b = 0 are never stored
  std::map<int, std::pair<long, long>> exps;

  static TorusMonomial one() { return TorusMonomial{}; }
  static TorusMonomial rho(int i, long e = 1);
  static TorusMonomial sigma(int i, long e = 1);

  bool is_one() const { return exps.empty(); }
  long a(int i) const;
  long b(int i) const;
  void set(int i, long a, long b);

  TorusMonomial operator*(const TorusMonomial& o) const;
  bool operator<(const TorusMonomial& o) const { return exps < o.exps; }
  bool operator==(const TorusMonomial& o) const { return exps == o.exps; }
  std::string to_string() const;
};

class BaseRingElement {
public:
  BaseRingElement() = default;

  static BaseRingElement zero() { return BaseRingElement(); }
  static BaseRingElement one();
  static BaseRingElement monomial(const TorusMonomial& m, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<TorusMonomial, Scalar>& terms() const { return terms_; }
  void add_term(const TorusMonomial& m, const Scalar& c);

  BaseRingElement operator+(const BaseRingElement& o) const;
  BaseRingElement operator-(const BaseRingElement& o) const;
  BaseRingElement operator-() const;
  BaseRingElement operator*(const BaseRingElement& o) const;
  BaseRingElement operator*(const Scalar& c) const;

  bool operator==(const BaseRingElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const BaseRingElement& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  std::map<TorusMonomial, Scalar> terms_;
};

// Signed x/y degree per index: d_i > 0 encodes X_i^{d_i} and d_i < 0 encodes
// Y_i^{-d_i}, which is exactly the u_i * v_i = 0 exponent constraint of the
// basis. Zero entries are never stored.
using DegreeVector = std::map<int, long>;

class GWAElement {
public:
  GWAElement() = default;

  static GWAElement zero() { return GWAElement(); }
  static GWAElement one();
  static GWAElement from_base(const BaseRingElement& c);
  static GWAElement X(int i, long u = 1);
  static GWAElement Y(int i, long v = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<DegreeVector, BaseRingElement>& terms() const { return terms_; }
  void add_term(const DegreeVector& d, const BaseRingElement& c);

  GWAElement operator+(const GWAElement& o) const;
  GWAElement operator-(const GWAElement& o) const;

  bool operator==(const GWAElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const GWAElement& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  std::map<DegreeVector, BaseRingElement> terms_;
};

// phi_i^{power}: scales the coefficient of each torus monomial by
// r_i^{-power*a_i} s_i^{-power*b_i}.
BaseRingElement phi_apply(int i, const BaseRingElement& e, long power = 1);

// t_i = (r_i^2 rho_i^2 - s_i^2 sigma_i^2)/(r_i^2 - s_i^2).
BaseRingElement t_element(int i);

GWAElement gwa_multiply(const GWAElement& a, const GWAElement& b);

// Mutually inverse basis-preserving maps (x_i = X_i, y_i = Y_i).
GWAElement to_gwa(const AlgebraElement& e);
AlgebraElement from_gwa(const GWAElement& g);

}  // namespace mpweyl::gwa
