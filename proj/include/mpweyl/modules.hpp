#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mpweyl/algebra.hpp"
#include "mpweyl/scalars.hpp"

// Concrete module families with exact symbolic actions.  Every family is a
// genuine representation: the defining relations hold identically on basis
// vectors, not just up to truncation, so relation checks on a finite box are
// exact statements about the infinite module.
//
// Families:
//   Polynomial   basis z(k), k in N^n
//   Verma        basis v(k), k in N^n, highest weight (lambda, zeta)
//   WeightNoBreak  basis z(k), k in Z^n, torus data (mu, nu) with no break
//   WeightBroken   basis z(k), support determined by the corner alpha
//   Whittaker    basis w(k, l), (k, l) in Z^{2n}, eigenvalues xi
//
// Action outputs that would leave the support are dropped; action inputs
// outside the support are rejected (UnsupportedIndex).

namespace mpweyl {

// Basis label. Every family uses the integer vector k of length n; the
// Whittaker family uses a second vector l of the same length (empty for the
// lattice families).
struct BasisIndex {
  std::vector<long> k;
  std::vector<long> l;

  bool operator==(const BasisIndex& o) const { return k == o.k && l == o.l; }
  bool operator!=(const BasisIndex& o) const { return !(*this == o); }
  bool operator<(const BasisIndex& o) const {
    return std::tie(k, l) < std::tie(o.k, o.l);
  }
  std::string to_string() const;
};

BasisIndex lattice_index(std::vector<long> k);
BasisIndex whittaker_index(std::vector<long> k, std::vector<long> l);

// Finite formal linear combination of basis vectors with Scalar coefficients.
class ModuleVector {
 public:
  ModuleVector() = default;

  static ModuleVector zero() { return ModuleVector(); }
  static ModuleVector unit(const BasisIndex& idx);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<BasisIndex, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const BasisIndex& idx) const;

  void add_term(const BasisIndex& idx, const Scalar& c);

  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector operator-() const;
  ModuleVector operator*(const Scalar& c) const;
  ModuleVector& operator+=(const ModuleVector& o);

  bool operator==(const ModuleVector& o) const { return terms_ == o.terms_; }
  bool operator!=(const ModuleVector& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::map<BasisIndex, Scalar> terms_;
};

ModuleVector operator*(const Scalar& c, const ModuleVector& v);

enum class Family { Polynomial, Verma, WeightNoBreak, WeightBroken, Whittaker };

std::string family_name(Family f);

// Validated description of one module. Constructed through the factories,
// which check the family's parameter constraints once; the action code then
// trusts the stored data.
class ModuleSpec {
 public:
  static ModuleSpec polynomial(int n);

  // zeta_rho/zeta_sigma are the 2n signs (+1 or -1 each); lambda_i != 0.
  static ModuleSpec verma(std::vector<Scalar> lambda, std::vector<int> zeta_rho,
                          std::vector<int> zeta_sigma);

  // Requires nu_i / mu_i to avoid +-(r_i/s_i)^Z for every i, i.e. no break
  // anywhere in the orbit.
  static ModuleSpec weight_no_break(std::vector<Scalar> mu,
                                    std::vector<Scalar> nu);

  // alpha maps each break index j to 0 or 1; its key set is the break set J.
  // Every j in J must satisfy nu_j = +-(r_j/s_j)^m mu_j for some integer m,
  // and no other index may. The coordinates are normalized internally to the
  // designated ideal (the corner all of whose one-step descents stay inside),
  // so shifted coordinates on the same orbit describe the same module.
  static ModuleSpec weight_broken(std::vector<Scalar> mu,
                                  std::vector<Scalar> nu,
                                  std::map<int, int> alpha);

  // xi_i != 0 for all i.
  static ModuleSpec whittaker(std::vector<Scalar> xi);

  Family family() const { return family_; }
  int rank() const { return n_; }

  bool in_support(const BasisIndex& idx) const;

  // Stored family parameters (1-based index accessors).
  const Scalar& lambda(int i) const;
  int zeta_rho(int i) const;
  int zeta_sigma(int i) const;
  const Scalar& mu(int i) const;  // designated coordinates for WeightBroken
  const Scalar& nu(int i) const;
  const Scalar& xi(int i) const;
  const std::set<int>& breaks() const;        // WeightBroken only
  const std::map<int, int>& corner() const;   // WeightBroken only

  // Eigenvalue prefactors the action actually uses: rho_i acts on z(k) by
  // r_i^{k_i} * action_mu(i), sigma_i by s_i^{k_i} * action_nu(i). Defined
  // for the four lattice families.
  const Scalar& action_mu(int i) const;
  const Scalar& action_nu(int i) const;

 private:
  ModuleSpec() = default;

  Family family_ = Family::Polynomial;
  int n_ = 0;
  std::vector<Scalar> lambda_;
  std::vector<int> zeta_rho_, zeta_sigma_;
  std::vector<Scalar> mu_, nu_;        // designated for WeightBroken
  std::vector<Scalar> act_mu_, act_nu_;
  std::map<int, int> alpha_;
  std::set<int> breaks_;
  std::vector<Scalar> xi_;
};

// Action of one generator power. Inputs outside the support raise
// UnsupportedIndex; output terms outside the support are dropped. Negative
// powers are allowed for rho/sigma (inverse eigenvalue or inverse shift) and
// rejected for x/y.
ModuleVector act_generator(const ModuleSpec& spec, const GeneratorSymbol& g,
                           const ModuleVector& v);

// Action of a normal-form element: each monomial acts factor by factor from
// the right (y, then x, then sigma, then rho, highest index first).
ModuleVector act_element(const ModuleSpec& spec, const AlgebraElement& e,
                         const ModuleVector& v);

struct ModuleRelationCheck {
  std::string name;
  bool ok = false;
  std::string detail;  // first failing basis vector and residual, if any
};

// Evaluates the defining relations as operator identities on every basis
// vector of the support box |k_i| <= box_radius (and |l_i| <= box_radius for
// Whittaker). Exact: no truncation effects, since actions never leave the
// module.
std::vector<ModuleRelationCheck> check_module_relations(const ModuleSpec& spec,
                                                        long box_radius);

struct CyclicityReport {
  std::size_t reached = 0;
  std::size_t box_points = 0;
  bool complete = false;
};

// Closes the single basis vector `start` under all generator actions,
// restricted to the box |k_i| <= box_radius, and reports whether the whole
// in-support box was reached.
CyclicityReport cyclicity_probe(const ModuleSpec& spec, const BasisIndex& start,
                                long box_radius);

struct IsoCheckReport {
  bool ok = false;
  std::size_t points_checked = 0;
  std::string detail;
};

// Confirms that the Verma module V(lambda, zeta) and the broken weight module
// built from mu_i = lambda_i * zeta_rho_i, nu_i = lambda_i * zeta_sigma_i with
// the all-ones corner have identical generator actions under the identity map
// on basis indices, over the box 0 <= k_i <= box_radius.
IsoCheckReport verma_weight_iso_check(const std::vector<Scalar>& lambda,
                                      const std::vector<int>& zeta_rho,
                                      const std::vector<int>& zeta_sigma,
                                      long box_radius);

}  // namespace mpweyl
