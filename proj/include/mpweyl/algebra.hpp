#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mpweyl/scalars.hpp"

namespace mpweyl {

// ---------------------------------------------------------------------------
// Free words over the generators rho_i^{+-1}, sigma_i^{+-1}, x_i, y_i.
// ---------------------------------------------------------------------------

enum class GenKind : std::uint8_t { Rho, Sigma, X, Y };

const char* gen_kind_name(GenKind k);

// One generator raised to a power. Rho/Sigma admit any nonzero integer power;
// X and Y only nonnegative ones (there are no inverses for them).
struct GeneratorSymbol {
  GenKind kind;
  int index;   // 1-based
  long power;

  bool operator==(const GeneratorSymbol& o) const {
    return kind == o.kind && index == o.index && power == o.power;
  }
};

using Word = std::vector<GeneratorSymbol>;

Word operator*(const Word& a, const Word& b);
std::string word_to_string(const Word& w);

// Convenience builders.
inline GeneratorSymbol rho(int i, long e = 1) { return {GenKind::Rho, i, e}; }
inline GeneratorSymbol sigma(int i, long e = 1) { return {GenKind::Sigma, i, e}; }
inline GeneratorSymbol xgen(int i, long u = 1) { return {GenKind::X, i, u}; }
inline GeneratorSymbol ygen(int i, long v = 1) { return {GenKind::Y, i, v}; }

// ---------------------------------------------------------------------------
// Normal form: an ordered monomial is a product over ascending indices i of
//   rho_i^{a_i} sigma_i^{b_i} x_i^{u_i}        (v_i = 0), or
//   rho_i^{a_i} sigma_i^{b_i} y_i^{v_i}        (u_i = 0),
// i.e. u_i * v_i = 0 always, with a_i, b_i of any sign and u_i, v_i >= 0.
// ---------------------------------------------------------------------------

struct IndexBlock {
  long a = 0;  // rho exponent
  long b = 0;  // sigma exponent
  long u = 0;  // x exponent, >= 0
  long v = 0;  // y exponent, >= 0

  bool is_trivial() const { return a == 0 && b == 0 && u == 0 && v == 0; }
  bool operator==(const IndexBlock& o) const {
    return a == o.a && b == o.b && u == o.u && v == o.v;
  }
  bool operator<(const IndexBlock& o) const;
};

class NormalMonomial {
public:
  NormalMonomial() = default;

  static NormalMonomial identity() { return NormalMonomial(); }
  static NormalMonomial single(int index, const IndexBlock& block);

  bool is_identity() const { return blocks_.empty(); }
  // Zero block for indices that do not occur.
  IndexBlock block(int index) const;
  void set_block(int index, const IndexBlock& block);
  const std::map<int, IndexBlock>& blocks() const { return blocks_; }

  // Total degree in the x and y generators.
  long xy_degree() const;
  Word to_word() const;
  std::string to_string() const;

  bool operator==(const NormalMonomial& o) const { return blocks_ == o.blocks_; }
  // Term order used everywhere a canonical ordering of monomials is needed:
  // lexicographic on the sequence (u_1, v_1, a_1, b_1, u_2, v_2, a_2, b_2, ...).
  bool operator<(const NormalMonomial& o) const;

private:
  std::map<int, IndexBlock> blocks_;  // only nontrivial blocks are stored
};

// ---------------------------------------------------------------------------
// Elements: finite scalar combinations of normal monomials, canonically
// stored with zero coefficients pruned.
// ---------------------------------------------------------------------------

class AlgebraElement {
public:
  AlgebraElement() = default;

  static AlgebraElement zero() { return AlgebraElement(); }
  static AlgebraElement one();
  static AlgebraElement monomial(const NormalMonomial& m, const Scalar& c);
  static AlgebraElement generator(GenKind kind, int index, long power = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<NormalMonomial, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const NormalMonomial& m) const;

  void add_term(const NormalMonomial& m, const Scalar& c);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator*(const Scalar& c) const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);

  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  std::map<NormalMonomial, Scalar> terms_;
};

inline AlgebraElement operator*(const Scalar& c, const AlgebraElement& e) {
  return e * c;
}

// ---------------------------------------------------------------------------
// Rewriting a free word into the normal basis. The rewriting system is
// confluent, so the choice of which reducible position to contract next does
// not change the result; `normalize(w)` always takes the leftmost one, and the
// picker overload lets tests drive the order externally.
// ---------------------------------------------------------------------------

// Receives the number of currently reducible positions (>= 1), returns the
// zero-based choice among them.
using PositionPicker = std::function<std::size_t(std::size_t)>;

AlgebraElement normalize(const Word& w);
AlgebraElement normalize(const Word& w, const PositionPicker& pick);

// Product of two normal-form elements via per-index closed-form block
// products (no free rewriting involved); AlgebraElement::operator* forwards
// here.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

enum class ConjKind : std::uint8_t { Rho, Sigma };

// g e g^{-1} for g = rho_i^{power} (kind Rho) or sigma_i^{power} (kind Sigma).
// Acts on a normal monomial by the scalar r_i^{power*(u_i - v_i)} resp.
// s_i^{power*(u_i - v_i)}.
AlgebraElement conjugate(int index, ConjKind kind, const AlgebraElement& e,
                         long power = 1);

// t_i = (r_i^2 rho_i^2 - s_i^2 sigma_i^2) / (r_i^2 - s_i^2), the value of
// y_i x_i in the normal basis; phi_of_t(i) is x_i y_i = (rho_i^2 - sigma_i^2)
// / (r_i^2 - s_i^2).
AlgebraElement t_element(int index);
AlgebraElement phi_of_t_element(int index);

// ---------------------------------------------------------------------------
// Presentation checks: every defining relation (and the derived identities
// that the rest of the code relies on) evaluated as a residual in the normal
// basis. All residuals must be zero.
// ---------------------------------------------------------------------------

struct RelationCheck {
  std::string name;
  bool ok;
  AlgebraElement residual;
};

std::vector<RelationCheck> verify_presentation(int n);

}  // namespace mpweyl
