#pragma once

#include <string>
#include <vector>

#include "mpweyl/algebra.hpp"
#include "mpweyl/modules.hpp"
#include "mpweyl/scalars.hpp"

// The two-parameter quantum group attached to sl_n, realized through its
// image inside the rank-n algebra: torus generators map to rho/sigma pairs,
// the raising/lowering generators to two-index quadratic elements. Relation
// verification runs through normal forms, so every report is exact.

namespace mpweyl {

enum class UKind { E, F, Omega, OmegaPrime };

struct UGenerator {
  UKind kind;
  int index;          // 1..n-1
  long exponent = 1;  // omega/omega_prime only; e and f are never powered

  bool operator==(const UGenerator& o) const {
    return kind == o.kind && index == o.index && exponent == o.exponent;
  }
};

inline UGenerator ue(int i) { return {UKind::E, i, 1}; }
inline UGenerator uf(int i) { return {UKind::F, i, 1}; }
inline UGenerator uomega(int i, long e = 1) { return {UKind::Omega, i, e}; }
inline UGenerator uomega_prime(int i, long e = 1) {
  return {UKind::OmegaPrime, i, e};
}

std::string u_generator_name(const UGenerator& g);

// Image in the rank-n algebra: omega_i -> rho_i sigma_{i+1},
// omega_i' -> rho_{i+1} sigma_i, e_i -> y_{i+1} x_i (normalized),
// f_i -> y_i x_{i+1} (normalized); exponents map multiplicatively.
AlgebraElement u_image(const UGenerator& g, int n);

// Pushes every defining relation of the quantum group through u_image and
// reports the exact normalized residual. The mixed commutator relation at
// equal indices does not vanish in this realization unless adjacent parameter
// pairs coincide; its report carries the nonzero residual.
std::vector<RelationCheck> verify_u_relations(int n);

// Direct ladder action on the polynomial module basis:
// omega_i: r_i^{k_i} s_{i+1}^{k_{i+1}}, omega_i': r_{i+1}^{k_{i+1}} s_i^{k_i},
// e_i: [k_{i+1}] at k + e_i - e_{i+1}, f_i: [k_i] at k - e_i + e_{i+1}.
// Must agree with act_element(u_image(g), v) on P(n).
ModuleVector u_act(const UGenerator& g, const ModuleVector& v, int n);

struct UWeight {
  std::vector<Scalar> eta, theta;

  bool operator==(const UWeight& o) const {
    return eta == o.eta && theta == o.theta;
  }
  bool operator!=(const UWeight& o) const { return !(*this == o); }
};

// Joint torus eigenvalue of the basis vector z(k) of P(n).
UWeight weight_of(const BasisIndex& k);

struct GradedComponentReport {
  std::size_t component_size = 0;
  bool degree_preserved = false;
  bool connected = false;
  bool highest_weight_killed = false;
  std::string detail;

  bool ok() const {
    return degree_preserved && connected && highest_weight_killed;
  }
};

// Checks that the degree-m slice of P(n) is a submodule for the quantum
// group: e/f preserve total degree, the slice is connected under their
// action, and z(m, 0, ..., 0) is killed by every e_i.
GradedComponentReport graded_component_check(long m, int n);

}  // namespace mpweyl
