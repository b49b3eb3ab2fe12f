#include "mpweyl/gwa.hpp"

#include <algorithm>

#include "mpweyl/errors.hpp"

namespace mpweyl::gwa {

// ---------------------------------------------------------------------------
// TorusMonomial.
// ---------------------------------------------------------------------------

TorusMonomial TorusMonomial::rho(int i, long e) {
  TorusMonomial m;
  m.set(i, e, 0);
  return m;
}

TorusMonomial TorusMonomial::sigma(int i, long e) {
  TorusMonomial m;
  m.set(i, 0, e);
  return m;
}

long TorusMonomial::a(int i) const {
  auto it = exps.find(i);
  return it == exps.end() ? 0 : it->second.first;
}

long TorusMonomial::b(int i) const {
  auto it = exps.find(i);
  return it == exps.end() ? 0 : it->second.second;
}

void TorusMonomial::set(int i, long a, long b) {
  if (i < 1) throw IndexOutOfRange("torus index must be >= 1");
  if (a == 0 && b == 0)
    exps.erase(i);
  else
    exps[i] = {a, b};
}

TorusMonomial TorusMonomial::operator*(const TorusMonomial& o) const {
  TorusMonomial out = *this;
  for (const auto& [i, ab] : o.exps)
    out.set(i, out.a(i) + ab.first, out.b(i) + ab.second);
  return out;
}

std::string TorusMonomial::to_string() const {
  if (exps.empty()) return "1";
  std::string out;
  auto piece = [&out](const char* name, int i, long e) {
    if (e == 0) return;
    if (!out.empty()) out += " ";
    out += name + std::to_string(i);
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (const auto& [i, ab] : exps) {
    piece("rho", i, ab.first);
    piece("sigma", i, ab.second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// BaseRingElement.
// ---------------------------------------------------------------------------

BaseRingElement BaseRingElement::one() {
  return monomial(TorusMonomial::one(), Scalar::one());
}

BaseRingElement BaseRingElement::monomial(const TorusMonomial& m, const Scalar& c) {
  BaseRingElement e;
  e.add_term(m, c);
  return e;
}

void BaseRingElement::add_term(const TorusMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BaseRingElement BaseRingElement::operator+(const BaseRingElement& o) const {
  BaseRingElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

BaseRingElement BaseRingElement::operator-(const BaseRingElement& o) const {
  BaseRingElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

BaseRingElement BaseRingElement::operator-() const {
  BaseRingElement out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

BaseRingElement BaseRingElement::operator*(const BaseRingElement& o) const {
  BaseRingElement out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

BaseRingElement BaseRingElement::operator*(const Scalar& c) const {
  BaseRingElement out;
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

std::string BaseRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    if (c.is_one())
      out += m.to_string();
    else if (m.is_one())
      out += c.to_string();
    else
      out += c.to_string() + " * " + m.to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// GWAElement.
// ---------------------------------------------------------------------------

GWAElement GWAElement::one() { return from_base(BaseRingElement::one()); }

GWAElement GWAElement::from_base(const BaseRingElement& c) {
  GWAElement e;
  e.add_term(DegreeVector{}, c);
  return e;
}

GWAElement GWAElement::X(int i, long u) {
  if (i < 1) throw IndexOutOfRange("generator index must be >= 1");
  if (u < 0) throw InvalidParameter("X powers must be nonnegative");
  DegreeVector d;
  if (u != 0) d[i] = u;
  GWAElement e;
  e.add_term(d, BaseRingElement::one());
  return e;
}

GWAElement GWAElement::Y(int i, long v) {
  if (i < 1) throw IndexOutOfRange("generator index must be >= 1");
  if (v < 0) throw InvalidParameter("Y powers must be nonnegative");
  DegreeVector d;
  if (v != 0) d[i] = -v;
  GWAElement e;
  e.add_term(d, BaseRingElement::one());
  return e;
}

void GWAElement::add_term(const DegreeVector& d, const BaseRingElement& c) {
  if (c.is_zero()) return;
  for (const auto& [i, e] : d) {
    if (i < 1) throw IndexOutOfRange("generator index must be >= 1");
    if (e == 0) throw std::logic_error("degree vectors must be pruned");
  }
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

GWAElement GWAElement::operator+(const GWAElement& o) const {
  GWAElement out = *this;
  for (const auto& [d, c] : o.terms_) out.add_term(d, c);
  return out;
}

GWAElement GWAElement::operator-(const GWAElement& o) const {
  GWAElement out = *this;
  for (const auto& [d, c] : o.terms_) out.add_term(d, -c);
  return out;
}

std::string GWAElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "[" + c.to_string() + "]";
    for (const auto& [i, e] : d) {
      out += e > 0 ? " X" : " Y";
      out += std::to_string(i);
      long p = e > 0 ? e : -e;
      if (p != 1) out += "^" + std::to_string(p);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operations.
// ---------------------------------------------------------------------------

BaseRingElement phi_apply(int i, const BaseRingElement& e, long power) {
  if (i < 1) throw IndexOutOfRange("automorphism index must be >= 1");
  BaseRingElement out;
  for (const auto& [m, c] : e.terms()) {
    Scalar f = Scalar::r_power(i, -power * m.a(i)) *
               Scalar::s_power(i, -power * m.b(i));
    out.add_term(m, c * f);
  }
  return out;
}

BaseRingElement t_element(int i) {
  if (i < 1) throw IndexOutOfRange("index must be >= 1");
  thread_local std::map<int, BaseRingElement> cache;
  auto it = cache.find(i);
  if (it == cache.end()) {
    Scalar inv = (Scalar::r_power(i, 2) - Scalar::s_power(i, 2)).inverse();
    BaseRingElement t;
    t.add_term(TorusMonomial::rho(i, 2), Scalar::r_power(i, 2) * inv);
    t.add_term(TorusMonomial::sigma(i, 2), -(Scalar::s_power(i, 2) * inv));
    it = cache.emplace(i, std::move(t)).first;
  }
  return it->second;
}

namespace {

BaseRingElement phi_vector(const DegreeVector& d, BaseRingElement e) {
  for (const auto& [i, power] : d) e = phi_apply(i, e, power);
  return e;
}

}  // namespace

GWAElement gwa_multiply(const GWAElement& a, const GWAElement& b) {
  GWAElement out;
  for (const auto& [d1, c1] : a.terms()) {
    for (const auto& [d2, c2] : b.terms()) {
      // (c1 Z^{d1})(c2 Z^{d2}) = c1 phi^{d1}(c2) (Z^{d1} Z^{d2}), and
      // Z^{d1} Z^{d2} contributes per-index t-corrections whenever the two
      // degrees have opposite signs.
      BaseRingElement c = c1 * phi_vector(d1, c2);
      DegreeVector d = d1;
      for (const auto& [i, e2] : d2) d[i] += e2;
      for (auto it = d.begin(); it != d.end();)
        it = (it->second == 0) ? d.erase(it) : std::next(it);

      for (const auto& [i, e2] : d2) {
        auto it1 = d1.find(i);
        if (it1 == d1.end()) continue;
        long e1 = it1->second;
        if (e1 > 0 && e2 < 0) {
          // X^{e1} Y^{-e2} = phi^{e1}(t) phi^{e1-1}(t) ... X^{..} Y^{..}
          long m = std::min(e1, -e2);
          for (long k = 1; k <= m; ++k)
            c = c * phi_apply(i, t_element(i), e1 - k + 1);
        } else if (e1 < 0 && e2 > 0) {
          // Y^{v} X^{e2} = phi^{-(v-1)}(t) phi^{-(v-2)}(t) ... Y^{..} X^{..}
          long v = -e1;
          long m = std::min(v, e2);
          for (long k = 1; k <= m; ++k)
            c = c * phi_apply(i, t_element(i), -(v - k));
        }
      }
      out.add_term(d, c);
    }
  }
  return out;
}

GWAElement to_gwa(const AlgebraElement& e) {
  GWAElement out;
  for (const auto& [m, c] : e.terms()) {
    DegreeVector d;
    TorusMonomial tm;
    for (const auto& [i, blk] : m.blocks()) {
      if (blk.u - blk.v != 0) d[i] = blk.u - blk.v;
      tm.set(i, blk.a, blk.b);
    }
    out.add_term(d, BaseRingElement::monomial(tm, c));
  }
  return out;
}

AlgebraElement from_gwa(const GWAElement& g) {
  AlgebraElement out;
  for (const auto& [d, base] : g.terms()) {
    for (const auto& [tm, c] : base.terms()) {
      NormalMonomial m;
      for (const auto& [i, e] : d) {
        IndexBlock blk = m.block(i);
        blk.u = e > 0 ? e : 0;
        blk.v = e < 0 ? -e : 0;
        m.set_block(i, blk);
      }
      for (const auto& [i, ab] : tm.exps) {
        IndexBlock blk = m.block(i);
        blk.a = ab.first;
        blk.b = ab.second;
        m.set_block(i, blk);
      }
      out.add_term(m, c);
    }
  }
  return out;
}

}  // namespace mpweyl::gwa
