#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mpweyl/modules.hpp"
#include "mpweyl/scalars.hpp"

// Break detection across a shift orbit of maximal torus ideals, the quiver
// skeleton of the resulting block, and enumeration of the simple weight
// modules supported on one orbit.

namespace mpweyl {

// Coordinates (mu_i, nu_i) of the maximal ideal <rho_i - mu_i, sigma_i - nu_i>.
struct IdealCoordinates {
  std::vector<Scalar> mu, nu;

  int rank() const { return static_cast<int>(mu.size()); }
};

struct OrbitShift {
  std::vector<long> k;
};

// Outcome of the orbit-wide break search. For j in J the orbit has a break at
// the shift p_j (relative to the input coordinates), with
// nu_j = sign_j * (r_j/s_j)^{p_j + 1} * mu_j; the designated coordinates are
// the input shifted by p on J, the canonical maximal-break ideal.
struct BreakReport {
  std::set<int> J;
  std::map<int, long> p;
  std::map<int, int> sign;
  IdealCoordinates designated;
};

BreakReport detect_breaks(const IdealCoordinates& c);

// One simple weight module on the orbit: the corner alpha over J, the stored
// module data, and the support wall positions expressed as shifts relative to
// the original input coordinates (alpha_j = 1 side: k_j > wall_j; alpha_j = 0
// side: k_j <= wall_j; free elsewhere).
struct SimpleModuleDescriptor {
  std::map<int, int> alpha;
  std::map<int, long> wall;
  ModuleSpec spec;
  std::string support_rule;

  bool contains_shift(const std::vector<long>& k) const;
};

std::vector<SimpleModuleDescriptor> enumerate_simples(const BreakReport& br);

struct QuiverArrow {
  char kind;              // 'a' (raising) or 'b' (lowering)
  int index;              // the break index j the arrow moves
  std::vector<int> from;  // corner bits in sorted-index order
  std::vector<int> to;

  std::string name() const;  // e.g. "a1[00]"
};

// The finite-dimensional quiver algebra attached to a break set: objects are
// corners {0,1}^q, each break index contributes an up/down arrow pair between
// adjacent corners, and the two-step relations ab = ba = 0 hold at every
// index while arrows at distinct indices commute. Basis elements are tensor
// words with one factor {e_0, e_1, a, b} per break index, so the dimension is
// 4^q.
class QuiverPresentation {
 public:
  explicit QuiverPresentation(std::set<int> J);

  std::size_t object_count() const;
  std::size_t arrow_count() const;
  std::size_t dimension() const;
  const std::vector<int>& indices() const { return indices_; }

  std::vector<std::vector<int>> objects() const;
  std::vector<QuiverArrow> arrows() const;

  // Basis element of the algebra: one code per break index,
  // 0 = e_0, 1 = e_1, 2 = a, 3 = b.
  std::vector<std::vector<int>> basis() const;

  // Product of two basis elements: another basis element or nothing (zero).
  std::optional<std::vector<int>> multiply(const std::vector<int>& x,
                                           const std::vector<int>& y) const;

  // Left-multiplication matrix of an arrow on the basis (faithful regular
  // representation; entries 0/1).
  std::vector<std::vector<int>> arrow_matrix(const QuiverArrow& arrow) const;

  std::string to_dot() const;
  std::string to_json() const;

 private:
  std::vector<int> indices_;
};

QuiverPresentation skeleton(const std::set<int>& J);

// The one-dimensional simple modules of the skeleton: concentrated at one
// corner, all arrows acting by zero.
struct QuiverSimple {
  std::vector<int> alpha;
  std::string name;  // "S[01]"
};

std::vector<QuiverSimple> quiver_simples(std::size_t q);

// True iff c2 = Phi^k(c1) for some shift k (else NotSameOrbit) and walking
// from c1 to c2 never crosses a break wall, i.e. both ideals lie in the same
// support class of the orbit.
bool equivalence_check(const IdealCoordinates& c1, const IdealCoordinates& c2);

}  // namespace mpweyl
