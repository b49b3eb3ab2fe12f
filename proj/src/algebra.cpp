#include "mpweyl/algebra.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <tuple>
#include <utility>

#include "mpweyl/errors.hpp"

namespace mpweyl {

namespace {

int rank_of(GenKind k) { return static_cast<int>(k); }

// The coefficients of t_i = y_i x_i and phi_i(t_i) = x_i y_i in the normal
// basis; cached since rewriting requests them constantly.
struct TCoeffs {
  Scalar r2_over;   // r_i^2 / (r_i^2 - s_i^2)
  Scalar s2_over;   // s_i^2 / (r_i^2 - s_i^2)
  Scalar one_over;  // 1 / (r_i^2 - s_i^2)
};

const TCoeffs& t_coeffs(int i) {
  thread_local std::map<int, TCoeffs> cache;
  auto it = cache.find(i);
  if (it == cache.end()) {
    Scalar inv = (Scalar::r_power(i, 2) - Scalar::s_power(i, 2)).inverse();
    it = cache
             .emplace(i, TCoeffs{Scalar::r_power(i, 2) * inv,
                                 Scalar::s_power(i, 2) * inv, inv})
             .first;
  }
  return it->second;
}

void validate_symbol(const GeneratorSymbol& g) {
  if (g.index < 1) throw IndexOutOfRange("generator index must be >= 1");
  if ((g.kind == GenKind::X || g.kind == GenKind::Y) && g.power < 0)
    throw InvalidParameter("x and y generators have no negative powers");
}

Word cleaned(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const GeneratorSymbol& g : w) {
    validate_symbol(g);
    if (g.power != 0) out.push_back(g);
  }
  return out;
}

// An adjacent pair contracts when it is out of normal order: descending index,
// any same-kind repetition, a same-index pair out of the rho < sigma < x/y
// rank order, or a same-index x/y meeting (which trades degree for torus
// terms).
bool reducible(const GeneratorSymbol& l, const GeneratorSymbol& r) {
  if (l.index != r.index) return l.index > r.index;
  if (l.kind == r.kind) return true;
  bool xy = (l.kind == GenKind::X && r.kind == GenKind::Y) ||
            (l.kind == GenKind::Y && r.kind == GenKind::X);
  return xy || rank_of(l.kind) > rank_of(r.kind);
}

struct Replacement {
  Scalar factor;
  Word segment;
};

void push_nonzero(Word& w, GenKind kind, int index, long power) {
  if (power != 0) w.push_back(GeneratorSymbol{kind, index, power});
}

std::vector<Replacement> contract(const GeneratorSymbol& l,
                                  const GeneratorSymbol& r) {
  if (l.index != r.index) return {{Scalar::one(), {r, l}}};
  int i = l.index;

  if (l.kind == r.kind) {
    Word seg;
    push_nonzero(seg, l.kind, i, l.power + r.power);
    return {{Scalar::one(), std::move(seg)}};
  }

  // y_i^v x_i^u = (r_i^2/(r_i^2-s_i^2)) y^{v-1} rho^2 x^{u-1}
  //             - (s_i^2/(r_i^2-s_i^2)) y^{v-1} sigma^2 x^{u-1}
  if (l.kind == GenKind::Y && r.kind == GenKind::X) {
    const TCoeffs& tc = t_coeffs(i);
    Word sr, ss;
    push_nonzero(sr, GenKind::Y, i, l.power - 1);
    sr.push_back(rho(i, 2));
    push_nonzero(sr, GenKind::X, i, r.power - 1);
    push_nonzero(ss, GenKind::Y, i, l.power - 1);
    ss.push_back(sigma(i, 2));
    push_nonzero(ss, GenKind::X, i, r.power - 1);
    return {{tc.r2_over, std::move(sr)}, {-tc.s2_over, std::move(ss)}};
  }

  // x_i^u y_i^v = (1/(r_i^2-s_i^2)) (x^{u-1} rho^2 y^{v-1}
  //                                  - x^{u-1} sigma^2 y^{v-1})
  if (l.kind == GenKind::X && r.kind == GenKind::Y) {
    const TCoeffs& tc = t_coeffs(i);
    Word sr, ss;
    push_nonzero(sr, GenKind::X, i, l.power - 1);
    sr.push_back(rho(i, 2));
    push_nonzero(sr, GenKind::Y, i, r.power - 1);
    push_nonzero(ss, GenKind::X, i, l.power - 1);
    ss.push_back(sigma(i, 2));
    push_nonzero(ss, GenKind::Y, i, r.power - 1);
    return {{tc.one_over, std::move(sr)}, {-tc.one_over, std::move(ss)}};
  }

  if (l.kind == GenKind::Sigma && r.kind == GenKind::Rho)
    return {{Scalar::one(), {r, l}}};

  // Remaining cases: l is x or y, r is a torus generator.
  long sign = (l.kind == GenKind::X) ? -1 : 1;
  if (r.kind == GenKind::Rho)
    return {{Scalar::r_power(i, sign * l.power * r.power), {r, l}}};
  if (r.kind == GenKind::Sigma)
    return {{Scalar::s_power(i, sign * l.power * r.power), {r, l}}};
  throw std::logic_error("contract called on a normally ordered pair");
}

NormalMonomial to_monomial(const Word& w) {
  NormalMonomial m;
  for (const GeneratorSymbol& g : w) {
    IndexBlock blk = m.block(g.index);
    switch (g.kind) {
      case GenKind::Rho: blk.a += g.power; break;
      case GenKind::Sigma: blk.b += g.power; break;
      case GenKind::X: blk.u += g.power; break;
      case GenKind::Y: blk.v += g.power; break;
    }
    m.set_block(g.index, blk);
  }
  return m;
}

struct FreeTerm {
  Scalar coeff;
  Word word;
};

}  // namespace

const char* gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::Rho: return "rho";
    case GenKind::Sigma: return "sigma";
    case GenKind::X: return "x";
    case GenKind::Y: return "y";
  }
  return "?";
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += " ";
    out += gen_kind_name(w[k].kind);
    out += std::to_string(w[k].index);
    if (w[k].power != 1) out += "^" + std::to_string(w[k].power);
  }
  return out;
}

// ---------------------------------------------------------------------------
// NormalMonomial.
// ---------------------------------------------------------------------------

bool IndexBlock::operator<(const IndexBlock& o) const {
  return std::tie(u, v, a, b) < std::tie(o.u, o.v, o.a, o.b);
}

NormalMonomial NormalMonomial::single(int index, const IndexBlock& block) {
  NormalMonomial m;
  m.set_block(index, block);
  return m;
}

IndexBlock NormalMonomial::block(int index) const {
  auto it = blocks_.find(index);
  return it == blocks_.end() ? IndexBlock{} : it->second;
}

void NormalMonomial::set_block(int index, const IndexBlock& block) {
  if (index < 1) throw IndexOutOfRange("generator index must be >= 1");
  if (block.is_trivial())
    blocks_.erase(index);
  else
    blocks_[index] = block;
}

long NormalMonomial::xy_degree() const {
  long d = 0;
  for (const auto& [i, blk] : blocks_) d += blk.u + blk.v;
  return d;
}

Word NormalMonomial::to_word() const {
  Word w;
  for (const auto& [i, blk] : blocks_) {
    push_nonzero(w, GenKind::Rho, i, blk.a);
    push_nonzero(w, GenKind::Sigma, i, blk.b);
    push_nonzero(w, GenKind::X, i, blk.u);
    push_nonzero(w, GenKind::Y, i, blk.v);
  }
  return w;
}

std::string NormalMonomial::to_string() const { return word_to_string(to_word()); }

bool NormalMonomial::operator<(const NormalMonomial& o) const {
  auto it1 = blocks_.begin();
  auto it2 = o.blocks_.begin();
  static const IndexBlock zero{};
  while (it1 != blocks_.end() || it2 != o.blocks_.end()) {
    int i1 = it1 != blocks_.end() ? it1->first : INT_MAX;
    int i2 = it2 != o.blocks_.end() ? it2->first : INT_MAX;
    int i = std::min(i1, i2);
    const IndexBlock& b1 = (i1 == i) ? it1->second : zero;
    const IndexBlock& b2 = (i2 == i) ? it2->second : zero;
    if (!(b1 == b2)) return b1 < b2;
    if (i1 == i) ++it1;
    if (i2 == i) ++it2;
  }
  return false;
}

// ---------------------------------------------------------------------------
// AlgebraElement.
// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::one() {
  return monomial(NormalMonomial(), Scalar::one());
}

AlgebraElement AlgebraElement::monomial(const NormalMonomial& m, const Scalar& c) {
  AlgebraElement e;
  e.add_term(m, c);
  return e;
}

AlgebraElement AlgebraElement::generator(GenKind kind, int index, long power) {
  validate_symbol(GeneratorSymbol{kind, index, power});
  IndexBlock blk;
  switch (kind) {
    case GenKind::Rho: blk.a = power; break;
    case GenKind::Sigma: blk.b = power; break;
    case GenKind::X: blk.u = power; break;
    case GenKind::Y: blk.v = power; break;
  }
  return monomial(NormalMonomial::single(index, blk), Scalar::one());
}

Scalar AlgebraElement::coefficient(const NormalMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

void AlgebraElement::add_term(const NormalMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  out += o;
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  out -= o;
  return out;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  return multiply(*this, o);
}

AlgebraElement AlgebraElement::operator*(const Scalar& c) const {
  AlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    if (c.is_one())
      out += m.to_string();
    else if (m.is_identity())
      out += c.to_string();
    else
      out += c.to_string() + " * " + m.to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting.
// ---------------------------------------------------------------------------

AlgebraElement normalize(const Word& w, const PositionPicker& pick) {
  AlgebraElement out;
  std::vector<FreeTerm> work;
  work.push_back(FreeTerm{Scalar::one(), cleaned(w)});
  while (!work.empty()) {
    FreeTerm t = std::move(work.back());
    work.pop_back();

    std::vector<std::size_t> positions;
    for (std::size_t p = 0; p + 1 < t.word.size(); ++p)
      if (reducible(t.word[p], t.word[p + 1])) positions.push_back(p);

    if (positions.empty()) {
      out.add_term(to_monomial(t.word), t.coeff);
      continue;
    }

    std::size_t choice = pick(positions.size());
    if (choice >= positions.size())
      throw std::logic_error("position picker returned an out-of-range choice");
    std::size_t p = positions[choice];

    for (Replacement& rep : contract(t.word[p], t.word[p + 1])) {
      FreeTerm nt;
      nt.coeff = t.coeff * rep.factor;
      nt.word.reserve(t.word.size() + rep.segment.size());
      nt.word.insert(nt.word.end(), t.word.begin(),
                     t.word.begin() + static_cast<std::ptrdiff_t>(p));
      nt.word.insert(nt.word.end(), rep.segment.begin(), rep.segment.end());
      nt.word.insert(nt.word.end(),
                     t.word.begin() + static_cast<std::ptrdiff_t>(p) + 2,
                     t.word.end());
      work.push_back(std::move(nt));
    }
  }
  return out;
}

AlgebraElement normalize(const Word& w) {
  return normalize(w, [](std::size_t) { return std::size_t{0}; });
}

// ---------------------------------------------------------------------------
// Closed-form products. For a single index,
//   (rho^a sigma^b x^u y^v) g  for g one of rho^e, sigma^e, x, y
// has an explicit expansion in the normal basis; a full product applies the
// right factor's block generator by generator, and distinct indices commute.
// ---------------------------------------------------------------------------

namespace {

using BlockTerms = std::vector<std::pair<IndexBlock, Scalar>>;

BlockTerms collect(std::map<IndexBlock, Scalar>&& acc) {
  BlockTerms out;
  for (auto& [blk, c] : acc)
    if (!c.is_zero()) out.emplace_back(blk, std::move(c));
  return out;
}

// Right-multiply by a single x_i.
BlockTerms x_step(int i, const BlockTerms& in) {
  const TCoeffs& tc = t_coeffs(i);
  std::map<IndexBlock, Scalar> acc;
  for (const auto& [blk, c] : in) {
    if (blk.v == 0) {
      IndexBlock nb = blk;
      nb.u += 1;
      acc[nb] += c;
    } else {
      // (y^v) x = (r^{2v} rho^2 y^{v-1} - s^{2v} sigma^2 y^{v-1})/(r^2-s^2)
      acc[IndexBlock{blk.a + 2, blk.b, 0, blk.v - 1}] +=
          c * Scalar::r_power(i, 2 * blk.v) * tc.one_over;
      acc[IndexBlock{blk.a, blk.b + 2, 0, blk.v - 1}] -=
          c * Scalar::s_power(i, 2 * blk.v) * tc.one_over;
    }
  }
  return collect(std::move(acc));
}

// Right-multiply by a single y_i.
BlockTerms y_step(int i, const BlockTerms& in) {
  const TCoeffs& tc = t_coeffs(i);
  std::map<IndexBlock, Scalar> acc;
  for (const auto& [blk, c] : in) {
    if (blk.u == 0) {
      IndexBlock nb = blk;
      nb.v += 1;
      acc[nb] += c;
    } else {
      // (x^u) y = (r^{-2(u-1)} rho^2 x^{u-1} - s^{-2(u-1)} sigma^2 x^{u-1})
      //           / (r^2-s^2)
      acc[IndexBlock{blk.a + 2, blk.b, blk.u - 1, 0}] +=
          c * Scalar::r_power(i, -2 * (blk.u - 1)) * tc.one_over;
      acc[IndexBlock{blk.a, blk.b + 2, blk.u - 1, 0}] -=
          c * Scalar::s_power(i, -2 * (blk.u - 1)) * tc.one_over;
    }
  }
  return collect(std::move(acc));
}

const BlockTerms& block_product(int i, const IndexBlock& p, const IndexBlock& q) {
  thread_local std::map<std::array<long, 9>, BlockTerms> memo;
  std::array<long, 9> key{static_cast<long>(i), p.a, p.b, p.u, p.v,
                          q.a,                  q.b, q.u, q.v};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  BlockTerms cur{{p, Scalar::one()}};
  if (q.a != 0)
    for (auto& [blk, c] : cur) {
      c *= Scalar::r_power(i, (blk.v - blk.u) * q.a);
      blk.a += q.a;
    }
  if (q.b != 0)
    for (auto& [blk, c] : cur) {
      c *= Scalar::s_power(i, (blk.v - blk.u) * q.b);
      blk.b += q.b;
    }
  for (long t = 0; t < q.u; ++t) cur = x_step(i, cur);
  for (long t = 0; t < q.v; ++t) cur = y_step(i, cur);
  return memo.emplace(key, std::move(cur)).first->second;
}

}  // namespace

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [m1, c1] : a.terms()) {
    for (const auto& [m2, c2] : b.terms()) {
      std::vector<int> indices;
      for (const auto& kv : m1.blocks()) indices.push_back(kv.first);
      for (const auto& kv : m2.blocks())
        if (!m1.blocks().count(kv.first)) indices.push_back(kv.first);
      std::sort(indices.begin(), indices.end());

      std::vector<const BlockTerms*> parts;
      parts.reserve(indices.size());
      bool dead = false;
      for (int i : indices) {
        parts.push_back(&block_product(i, m1.block(i), m2.block(i)));
        if (parts.back()->empty()) dead = true;
      }
      if (dead) continue;

      Scalar c12 = c1 * c2;
      std::vector<std::size_t> at(parts.size(), 0);
      while (true) {
        NormalMonomial m;
        Scalar c = c12;
        for (std::size_t k = 0; k < parts.size(); ++k) {
          m.set_block(indices[k], (*parts[k])[at[k]].first);
          c *= (*parts[k])[at[k]].second;
        }
        out.add_term(m, c);
        std::size_t k = 0;
        for (; k < at.size(); ++k) {
          if (++at[k] < parts[k]->size()) break;
          at[k] = 0;
        }
        if (k == at.size()) break;
      }
    }
  }
  return out;
}

AlgebraElement conjugate(int index, ConjKind kind, const AlgebraElement& e,
                         long power) {
  if (index < 1) throw IndexOutOfRange("generator index must be >= 1");
  AlgebraElement out;
  for (const auto& [m, c] : e.terms()) {
    IndexBlock blk = m.block(index);
    long d = power * (blk.u - blk.v);
    Scalar f = (kind == ConjKind::Rho) ? Scalar::r_power(index, d)
                                       : Scalar::s_power(index, d);
    out.add_term(m, c * f);
  }
  return out;
}

AlgebraElement t_element(int index) {
  if (index < 1) throw IndexOutOfRange("generator index must be >= 1");
  const TCoeffs& tc = t_coeffs(index);
  AlgebraElement out;
  out.add_term(NormalMonomial::single(index, IndexBlock{2, 0, 0, 0}), tc.r2_over);
  out.add_term(NormalMonomial::single(index, IndexBlock{0, 2, 0, 0}), -tc.s2_over);
  return out;
}

AlgebraElement phi_of_t_element(int index) {
  if (index < 1) throw IndexOutOfRange("generator index must be >= 1");
  const TCoeffs& tc = t_coeffs(index);
  AlgebraElement out;
  out.add_term(NormalMonomial::single(index, IndexBlock{2, 0, 0, 0}), tc.one_over);
  out.add_term(NormalMonomial::single(index, IndexBlock{0, 2, 0, 0}), -tc.one_over);
  return out;
}

// ---------------------------------------------------------------------------
// Presentation checks.
// ---------------------------------------------------------------------------

std::vector<RelationCheck> verify_presentation(int n) {
  if (n < 1) throw InvalidParameter("rank must be >= 1");
  std::vector<RelationCheck> out;
  auto add = [&out](std::string name, AlgebraElement residual) {
    bool ok = residual.is_zero();
    out.push_back(RelationCheck{std::move(name), ok, std::move(residual)});
  };
  AlgebraElement one = AlgebraElement::one();

  for (int i = 1; i <= n; ++i) {
    std::string R = "rho" + std::to_string(i);
    std::string S = "sigma" + std::to_string(i);
    std::string X = "x" + std::to_string(i);
    std::string Y = "y" + std::to_string(i);
    std::string ri = "r" + std::to_string(i);
    std::string si = "s" + std::to_string(i);
    Scalar rv = Scalar::param_r(i), sv = Scalar::param_s(i);
    Scalar rr = Scalar::r_power(i, 2), ss = Scalar::s_power(i, 2);
    AlgebraElement xe = AlgebraElement::generator(GenKind::X, i);
    AlgebraElement ye = AlgebraElement::generator(GenKind::Y, i);

    add(R + " " + R + "^-1 - 1", normalize({rho(i), rho(i, -1)}) - one);
    add(S + " " + S + "^-1 - 1", normalize({sigma(i), sigma(i, -1)}) - one);
    add(R + " " + S + " - " + S + " " + R,
        normalize({rho(i), sigma(i)}) - normalize({sigma(i), rho(i)}));

    add(R + " " + X + " - " + ri + " " + X + " " + R,
        normalize({rho(i), xgen(i)}) - rv * normalize({xgen(i), rho(i)}));
    add(R + " " + Y + " - " + ri + "^-1 " + Y + " " + R,
        normalize({rho(i), ygen(i)}) -
            Scalar::r_power(i, -1) * normalize({ygen(i), rho(i)}));
    add(S + " " + X + " - " + si + " " + X + " " + S,
        normalize({sigma(i), xgen(i)}) - sv * normalize({xgen(i), sigma(i)}));
    add(S + " " + Y + " - " + si + "^-1 " + Y + " " + S,
        normalize({sigma(i), ygen(i)}) -
            Scalar::s_power(i, -1) * normalize({ygen(i), sigma(i)}));

    add(Y + " " + X + " - " + ri + "^2 " + X + " " + Y + " - " + S + "^2",
        normalize({ygen(i), xgen(i)}) - rr * normalize({xgen(i), ygen(i)}) -
            AlgebraElement::generator(GenKind::Sigma, i, 2));
    add(Y + " " + X + " - " + si + "^2 " + X + " " + Y + " - " + R + "^2",
        normalize({ygen(i), xgen(i)}) - ss * normalize({xgen(i), ygen(i)}) -
            AlgebraElement::generator(GenKind::Rho, i, 2));

    add(Y + " " + X + " - t" + std::to_string(i),
        normalize({ygen(i), xgen(i)}) - t_element(i));
    add(X + " " + Y + " - phi" + std::to_string(i) + "(t" + std::to_string(i) +
            ")",
        normalize({xgen(i), ygen(i)}) - phi_of_t_element(i));

    add(R + " " + X + " " + R + "^-1 - " + ri + " " + X,
        normalize({rho(i), xgen(i), rho(i, -1)}) - rv * xe);
    add(R + " " + Y + " " + R + "^-1 - " + ri + "^-1 " + Y,
        normalize({rho(i), ygen(i), rho(i, -1)}) - Scalar::r_power(i, -1) * ye);
    add(S + " " + X + " " + S + "^-1 - " + si + " " + X,
        normalize({sigma(i), xgen(i), sigma(i, -1)}) - sv * xe);
    add(S + " " + Y + " " + S + "^-1 - " + si + "^-1 " + Y,
        normalize({sigma(i), ygen(i), sigma(i, -1)}) -
            Scalar::s_power(i, -1) * ye);

    add(Y + "^2 " + X + " - (" + ri + "^2+" + si + "^2) " + Y + " " + X + " " +
            Y + " + " + ri + "^2 " + si + "^2 " + X + " " + Y + "^2",
        normalize({ygen(i, 2), xgen(i)}) -
            (rr + ss) * normalize({ygen(i), xgen(i), ygen(i)}) +
            (rr * ss) * normalize({xgen(i), ygen(i, 2)}));
    add(Y + " " + X + "^2 - (" + ri + "^2+" + si + "^2) " + X + " " + Y + " " +
            X + " + " + ri + "^2 " + si + "^2 " + X + "^2 " + Y,
        normalize({ygen(i), xgen(i, 2)}) -
            (rr + ss) * normalize({xgen(i), ygen(i), xgen(i)}) +
            (rr * ss) * normalize({xgen(i, 2), ygen(i)}));
  }

  auto commutator = [](const Word& ab, const Word& ba) {
    return normalize(ab) - normalize(ba);
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      std::string I = std::to_string(i), J = std::to_string(j);
      if (i < j) {
        add("rho" + I + " rho" + J + " - rho" + J + " rho" + I,
            commutator({rho(i), rho(j)}, {rho(j), rho(i)}));
        add("sigma" + I + " sigma" + J + " - sigma" + J + " sigma" + I,
            commutator({sigma(i), sigma(j)}, {sigma(j), sigma(i)}));
        add("x" + I + " x" + J + " - x" + J + " x" + I,
            commutator({xgen(i), xgen(j)}, {xgen(j), xgen(i)}));
        add("y" + I + " y" + J + " - y" + J + " y" + I,
            commutator({ygen(i), ygen(j)}, {ygen(j), ygen(i)}));
      }
      add("rho" + I + " sigma" + J + " - sigma" + J + " rho" + I,
          commutator({rho(i), sigma(j)}, {sigma(j), rho(i)}));
      add("rho" + I + " x" + J + " - x" + J + " rho" + I,
          commutator({rho(i), xgen(j)}, {xgen(j), rho(i)}));
      add("rho" + I + " y" + J + " - y" + J + " rho" + I,
          commutator({rho(i), ygen(j)}, {ygen(j), rho(i)}));
      add("sigma" + I + " x" + J + " - x" + J + " sigma" + I,
          commutator({sigma(i), xgen(j)}, {xgen(j), sigma(i)}));
      add("sigma" + I + " y" + J + " - y" + J + " sigma" + I,
          commutator({sigma(i), ygen(j)}, {ygen(j), sigma(i)}));
      add("y" + I + " x" + J + " - x" + J + " y" + I,
          commutator({ygen(i), xgen(j)}, {xgen(j), ygen(i)}));
    }
  }
  return out;
}

}  // namespace mpweyl
