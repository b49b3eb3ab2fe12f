#include "mpweyl/scalars.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <random>
#include <sstream>

namespace mpweyl {

// ---------------------------------------------------------------------------
// Named parameter registry.
// ---------------------------------------------------------------------------

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, VarId>& registry_by_name() {
  static std::map<std::string, VarId> byname;
  return byname;
}

std::vector<std::string>& registry_names() {
  static std::vector<std::string> names;
  return names;
}

}  // namespace

VarId register_parameter(const std::string& name) {
  if (name.empty()) throw InvalidParameter("empty parameter name");
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& byname = registry_by_name();
  auto it = byname.find(name);
  if (it != byname.end()) return it->second;
  VarId id = kNamedParamBase + static_cast<VarId>(registry_names().size());
  registry_names().push_back(name);
  byname.emplace(name, id);
  return id;
}

std::string variable_name(VarId v) {
  if (is_named_param(v)) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    return registry_names().at(static_cast<std::size_t>(v - kNamedParamBase));
  }
  int index = static_cast<int>(v / 2) + 1;
  return (v % 2 == 0 ? "r" : "s") + std::to_string(index);
}

// ---------------------------------------------------------------------------
// Monomial.
// ---------------------------------------------------------------------------

Monomial Monomial::var(VarId v, std::int32_t exp) {
  Monomial m;
  if (exp != 0) m.entries_.emplace_back(v, exp);
  return m;
}

std::int32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), v,
      [](const Entry& e, VarId id) { return e.first < id; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

long Monomial::total_degree() const {
  long d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

bool Monomial::all_nonnegative() const {
  for (const auto& [v, e] : entries_)
    if (e < 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin(), b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      std::int32_t e = a->second + b->second;
      if (e != 0) out.entries_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out;
  out.entries_.reserve(entries_.size());
  for (const auto& [v, e] : entries_) out.entries_.emplace_back(v, -e);
  return out;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  // Missing entries count as exponent 0.
  Monomial out;
  auto x = a.entries_.begin(), y = b.entries_.begin();
  while (x != a.entries_.end() || y != b.entries_.end()) {
    if (y == b.entries_.end() || (x != a.entries_.end() && x->first < y->first)) {
      if (x->second < 0) out.entries_.push_back(*x);
      ++x;
    } else if (x == a.entries_.end() || y->first < x->first) {
      if (y->second < 0) out.entries_.push_back(*y);
      ++y;
    } else {
      std::int32_t e = std::min(x->second, y->second);
      if (e != 0) out.entries_.emplace_back(x->first, e);
      ++x;
      ++y;
    }
  }
  return out;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (const auto& [v, e] : o.entries_)
    if (exponent(v) < e) return false;
  return true;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  auto x = a.entries_.begin(), y = b.entries_.begin();
  while (x != a.entries_.end() || y != b.entries_.end()) {
    // The next variable in significance order present in either monomial.
    if (y == b.entries_.end() || (x != a.entries_.end() && x->first < y->first)) {
      if (x->second != 0) return x->second > 0 ? 1 : -1;
      ++x;
    } else if (x == a.entries_.end() || y->first < x->first) {
      if (y->second != 0) return y->second > 0 ? -1 : 1;
      ++y;
    } else {
      if (x->second != y->second) return x->second < y->second ? -1 : 1;
      ++x;
      ++y;
    }
  }
  return 0;
}

std::string Monomial::to_string() const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : entries_) {
    if (!out.empty()) out += "*";
    out += variable_name(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// LaurentPoly.
// ---------------------------------------------------------------------------

void LaurentPoly::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::integer(long v) {
  LaurentPoly p;
  p.add_term(Monomial::one(), mpq_class(v));
  return p;
}

LaurentPoly LaurentPoly::rational(const mpq_class& v) {
  LaurentPoly p;
  p.add_term(Monomial::one(), v);
  return p;
}

LaurentPoly LaurentPoly::variable(VarId v, std::int32_t exp) {
  LaurentPoly p;
  p.add_term(Monomial::var(v, exp), 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const mpq_class& c) {
  LaurentPoly p;
  p.add_term(m, c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const {
  if (c == 0) return zero();
  LaurentPoly out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  if (m.is_one()) return *this;
  LaurentPoly out;
  for (const auto& [mm, c] : terms_) out.terms_.emplace(mm * m, c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
  LaurentPoly acc = one();
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1UL) acc = acc * base;
    base = base * base;
    k >>= 1UL;
  }
  return acc;
}

bool LaurentPoly::all_exponents_nonnegative() const {
  for (const auto& [m, c] : terms_)
    if (!m.all_nonnegative()) return false;
  return true;
}

Monomial LaurentPoly::min_exponents() const {
  if (terms_.empty()) return Monomial::one();
  Monomial acc = terms_.begin()->first;
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    acc = Monomial::min(acc, it->first);
  return acc;
}

mpq_class LaurentPoly::content() const {
  if (terms_.empty()) return 0;
  mpz_class g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  mpq_class out(g, l);
  out.canonicalize();
  if (out < 0) out = -out;
  return out;
}

long LaurentPoly::degree_in(VarId v) const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, (long)m.exponent(v));
  return d;
}

LaurentPoly LaurentPoly::coeff_of(VarId v, std::int32_t d) const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) == d) out.add_term(m * Monomial::var(v, -d), c);
  }
  return out;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::logic_error("exact_div by zero polynomial");
  if (b.is_one()) return a;
  LaurentPoly q;
  LaurentPoly r = a;
  const Monomial& lb = b.leading_monomial();
  const mpq_class& cb = b.leading_coeff();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lr.divisible_by(lb))
      throw std::logic_error("exact_div: not divisible");
    Monomial mq = lr / lb;
    mpq_class cq = r.leading_coeff() / cb;
    q.add_term(mq, cq);
    r = r - b.shifted(mq).scaled(cq);
  }
  return q;
}

LaurentPoly LaurentPoly::normalized_primitive() const {
  if (is_zero()) return *this;
  mpq_class c = content();
  if (leading_coeff() < 0) c = -c;
  return scaled(1 / c);
}

namespace {

using u64 = std::uint64_t;

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 acc = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1UL) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1UL;
  }
  return acc;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

// q mod p as an element of Z_p; false if the denominator vanishes mod p.
bool mpq_mod(const mpq_class& q, u64 p, u64& out) {
  u64 dm = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  if (dm == 0) return false;
  u64 nm = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
  out = nm * inv_mod(dm, p) % p;
  return true;
}

// Dense coefficient vector of f seen as a univariate polynomial in v, with all
// other variables specialized at `point`, over Z_p. False on bad primes.
bool univariate_image(const LaurentPoly& f, VarId v,
                      const std::map<VarId, u64>& point, u64 p,
                      std::vector<u64>& out) {
  out.assign(static_cast<std::size_t>(f.degree_in(v)) + 1, 0);
  for (const auto& [m, q] : f.terms()) {
    u64 val;
    if (!mpq_mod(q, p, val)) return false;
    std::int32_t e = 0;
    for (const auto& [var, exp] : m.entries()) {
      if (var == v) {
        e = exp;
      } else {
        val = val * pow_mod(point.at(var), static_cast<u64>(exp), p) % p;
      }
    }
    out[static_cast<std::size_t>(e)] = (out[static_cast<std::size_t>(e)] + val) % p;
  }
  return true;
}

int degree_of(const std::vector<u64>& c) {
  for (std::size_t k = c.size(); k-- > 0;)
    if (c[k] != 0) return static_cast<int>(k);
  return -1;
}

// Euclidean gcd degree of two univariate polys over Z_p.
int univariate_gcd_degree(std::vector<u64> a, std::vector<u64> b, u64 p) {
  while (true) {
    int db = degree_of(b);
    if (db < 0) return degree_of(a);
    int da = degree_of(a);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    u64 lb_inv = inv_mod(b[static_cast<std::size_t>(db)], p);
    while (da >= db) {
      u64 f = a[static_cast<std::size_t>(da)] * lb_inv % p;
      for (int k = 0; k <= db; ++k) {
        std::size_t ak = static_cast<std::size_t>(da - db + k);
        a[ak] = (a[ak] + p - f * b[static_cast<std::size_t>(k)] % p) % p;
      }
      da = degree_of(a);
    }
    std::swap(a, b);
  }
}

// Sound fast path: returns true only when gcd(a, b) is provably constant.
// For each variable v occurring in both operands, specialize the remaining
// variables at a random point mod p. If both leading v-coefficients survive
// and the univariate images are coprime, any common factor of positive
// v-degree is ruled out (its leading coefficient divides the surviving ones,
// so its image keeps positive degree and would divide both images). A failed
// certificate just means the caller falls back to the exact computation.
bool certified_coprime(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<VarId> vars_a, common;
  for (const auto& [m, c] : a.terms())
    for (const auto& [v, e] : m.entries()) vars_a.push_back(v);
  std::sort(vars_a.begin(), vars_a.end());
  vars_a.erase(std::unique(vars_a.begin(), vars_a.end()), vars_a.end());
  for (VarId v : vars_a)
    if (b.degree_in(v) > 0) common.push_back(v);
  if (common.empty()) return true;

  static thread_local std::mt19937_64 rng(0x5eed5eedULL);
  constexpr u64 kPrimes[] = {2147483647ULL, 1000000007ULL};
  for (VarId v : common) {
    bool certified = false;
    for (u64 p : kPrimes) {
      std::map<VarId, u64> point;
      for (VarId w : vars_a)
        if (w != v) point[w] = rng() % (p - 1) + 1;
      for (const auto& [m, c] : b.terms())
        for (const auto& [w, e] : m.entries())
          if (w != v && !point.count(w)) point[w] = rng() % (p - 1) + 1;
      std::vector<u64> ia, ib;
      if (!univariate_image(a, v, point, p, ia)) continue;
      if (!univariate_image(b, v, point, p, ib)) continue;
      if (degree_of(ia) != a.degree_in(v)) continue;  // leading coeff vanished
      if (degree_of(ib) != b.degree_in(v)) continue;
      if (univariate_gcd_degree(ia, ib, p) == 0) {
        certified = true;
        break;
      }
    }
    if (!certified) return false;
  }
  return true;
}

// Highest-significance bookkeeping for the PRS gcd. The "main" variable is the
// largest id occurring, so recursive contents live in strictly smaller id sets.
VarId top_variable(const LaurentPoly& a, const LaurentPoly& b) {
  VarId best = -1;
  for (const LaurentPoly* p : {&a, &b})
    for (const auto& [m, c] : p->terms())
      for (const auto& [v, e] : m.entries())
        if (e != 0) best = std::max(best, v);
  return best;
}

// gcd of all coefficients of powers of v (each coefficient is v-free).
LaurentPoly content_in(const LaurentPoly& p, VarId v) {
  LaurentPoly g = LaurentPoly::zero();
  long d = p.degree_in(v);
  for (long k = 0; k <= d; ++k) {
    LaurentPoly c = p.coeff_of(v, static_cast<std::int32_t>(k));
    if (c.is_zero()) continue;
    g = LaurentPoly::gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Sparse pseudo-remainder of a by b in the variable v; deg_v(a) >= deg_v(b) >= 1.
LaurentPoly prem(LaurentPoly a, const LaurentPoly& b, VarId v) {
  long db = b.degree_in(v);
  LaurentPoly lb = b.coeff_of(v, static_cast<std::int32_t>(db));
  while (!a.is_zero()) {
    long da = a.degree_in(v);
    if (da < db) break;
    LaurentPoly la = a.coeff_of(v, static_cast<std::int32_t>(da));
    // a := lb*a - la*v^(da-db)*b cancels the leading v-term.
    a = a * lb - (la * b).shifted(Monomial::var(v, static_cast<std::int32_t>(da - db)));
  }
  return a;
}

}  // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.normalized_primitive();
  if (b.is_zero()) return a.normalized_primitive();
  if (!a.all_exponents_nonnegative() || !b.all_exponents_nonnegative())
    throw std::logic_error("poly gcd requires nonnegative exponents");
  if (a.is_constant() || b.is_constant()) return one();
  if (a.is_monomial() || b.is_monomial())
    return monomial(Monomial::min(a.min_exponents(), b.min_exponents()), 1);
  if (certified_coprime(a, b)) return one();

  VarId v = top_variable(a, b);
  long da = a.degree_in(v);
  long db = b.degree_in(v);
  if (da == 0) return gcd(a, content_in(b, v));
  if (db == 0) return gcd(content_in(a, v), b);

  LaurentPoly ca = content_in(a, v);
  LaurentPoly cb = content_in(b, v);
  LaurentPoly cg = gcd(ca, cb);
  LaurentPoly pa = exact_div(a, ca);
  LaurentPoly pb = exact_div(b, cb);
  if (da < db) std::swap(pa, pb);

  // Primitive PRS in v.
  LaurentPoly g;
  while (true) {
    if (pb.is_zero()) {
      g = pa;
      break;
    }
    if (pb.degree_in(v) == 0) {
      // v-free nonzero remainder: the v-primitive inputs have trivial gcd in v.
      g = one();
      break;
    }
    LaurentPoly r = prem(pa, pb, v);
    pa = pb;
    if (r.is_zero()) {
      pb = zero();
    } else {
      pb = exact_div(r, content_in(r, v));
    }
  }
  return (cg * g).normalized_primitive();
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    mpq_class c = it->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (m.is_one()) {
      out << c.get_str();
    } else if (c == 1) {
      out << m.to_string();
    } else {
      out << c.get_str() << "*" << m.to_string();
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Scalar.
// ---------------------------------------------------------------------------

Scalar Scalar::r_power(int i, long e) {
  return monomial(Monomial::var(var_r(i), static_cast<std::int32_t>(e)));
}

Scalar Scalar::s_power(int i, long e) {
  return monomial(Monomial::var(var_s(i), static_cast<std::int32_t>(e)));
}

Scalar Scalar::from_poly(const LaurentPoly& p) {
  return reduced(p, LaurentPoly::one());
}

Scalar Scalar::monomial(const Monomial& m, const mpq_class& c) {
  return Scalar(LaurentPoly::monomial(m, c), LaurentPoly::one());
}

Scalar Scalar::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  return reduced(num, den);
}

Scalar Scalar::normalized_coprime(const LaurentPoly& num, const LaurentPoly& den) {
  if (num.is_zero()) return Scalar();
  if (den.is_one()) return Scalar(num, den);
  Monomial m2 = den.min_exponents();
  LaurentPoly p2 = den.shifted(m2.inverse());
  mpq_class c = p2.content();
  if (p2.leading_coeff() < 0) c = -c;
  if (p2.is_constant()) {
    return Scalar(num.shifted(m2.inverse()).scaled(1 / c), LaurentPoly::one());
  }
  return Scalar(num.shifted(m2.inverse()).scaled(1 / c), p2.scaled(1 / c));
}

Scalar Scalar::reduced(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return Scalar();
  if (den.is_one()) return Scalar(num, den);

  // Split the common monomial factor, leaving genuine polynomials whose
  // componentwise-min exponent is 0 in every variable.
  Monomial m1 = num.min_exponents();
  Monomial m2 = den.min_exponents();
  LaurentPoly p1 = num.shifted(m1.inverse());
  LaurentPoly p2 = den.shifted(m2.inverse());
  Monomial shift = m1 / m2;

  if (!p2.is_constant() && !p1.is_constant()) {
    LaurentPoly g = LaurentPoly::gcd(p1, p2);
    if (!g.is_one()) {
      p1 = LaurentPoly::exact_div(p1, g);
      p2 = LaurentPoly::exact_div(p2, g);
    }
  }

  // Normalize the denominator: coprime integer coefficients, positive leading
  // coefficient; the numerator absorbs the reciprocal scaling and the shift.
  mpq_class c = p2.content();
  if (p2.leading_coeff() < 0) c = -c;
  p2 = p2.scaled(1 / c);
  p1 = p1.scaled(1 / c).shifted(shift);
  return Scalar(std::move(p1), std::move(p2));
}

bool Scalar::is_one() const { return den_.is_one() && num_.is_one(); }

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) return Scalar(num_ + o.num_, den_);
  if (den_ == o.den_) {
    // Common factors of the summed numerator can only come from the shared
    // denominator, so one gcd against it finishes the reduction.
    LaurentPoly t = num_ + o.num_;
    if (t.is_zero()) return Scalar();
    Monomial mt = t.min_exponents();
    LaurentPoly pt = t.shifted(mt.inverse());
    LaurentPoly g = LaurentPoly::gcd(pt, den_);
    if (g.is_one()) return Scalar(std::move(t), den_);
    return normalized_coprime(LaurentPoly::exact_div(pt, g).shifted(mt),
                              LaurentPoly::exact_div(den_, g));
  }
  // Split off the common denominator part first; the reduction gcd then runs
  // against that part only, never against the full product.
  LaurentPoly g0 = LaurentPoly::gcd(den_, o.den_);
  if (g0.is_one()) {
    LaurentPoly t = num_ * o.den_ + o.num_ * den_;
    if (t.is_zero()) return Scalar();
    // Coprime canonical denominators: the result is already canonical.
    return Scalar(std::move(t), den_ * o.den_);
  }
  LaurentPoly a = LaurentPoly::exact_div(den_, g0);
  LaurentPoly b = LaurentPoly::exact_div(o.den_, g0);
  LaurentPoly t = num_ * b + o.num_ * a;
  if (t.is_zero()) return Scalar();
  Monomial mt = t.min_exponents();
  LaurentPoly pt = t.shifted(mt.inverse());
  LaurentPoly g1 = LaurentPoly::gcd(pt, g0);
  if (!g1.is_one()) {
    pt = LaurentPoly::exact_div(pt, g1);
    g0 = LaurentPoly::exact_div(g0, g1);
  }
  return normalized_coprime(pt.shifted(mt), g0 * a * b);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const { return Scalar(-num_, den_); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  // A monomial factor can't disturb the other operand's canonical form.
  if (is_monomial()) {
    return Scalar(o.num_.shifted(num_.sole_monomial()).scaled(num_.sole_coeff()),
                  o.den_);
  }
  if (o.is_monomial()) {
    return Scalar(num_.shifted(o.num_.sole_monomial()).scaled(o.num_.sole_coeff()),
                  den_);
  }
  if (den_.is_one() && o.den_.is_one()) return Scalar(num_ * o.num_, den_);
  // Cross-reduce each numerator against the other denominator; afterwards the
  // four pieces are pairwise coprime and the product needs no further gcd.
  Monomial m1 = num_.min_exponents();
  LaurentPoly p1 = num_.shifted(m1.inverse());
  Monomial m2 = o.num_.min_exponents();
  LaurentPoly p2 = o.num_.shifted(m2.inverse());
  LaurentPoly d1 = den_;
  LaurentPoly d2 = o.den_;
  if (!d2.is_one() && !p1.is_constant()) {
    LaurentPoly g = LaurentPoly::gcd(p1, d2);
    if (!g.is_one()) {
      p1 = LaurentPoly::exact_div(p1, g);
      d2 = LaurentPoly::exact_div(d2, g);
    }
  }
  if (!d1.is_one() && !p2.is_constant()) {
    LaurentPoly g = LaurentPoly::gcd(p2, d1);
    if (!g.is_one()) {
      p2 = LaurentPoly::exact_div(p2, g);
      d1 = LaurentPoly::exact_div(d1, g);
    }
  }
  return normalized_coprime((p1 * p2).shifted(m1 * m2), d1 * d2);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Canonical fractions are already in lowest terms, so swapping needs only
  // the monomial/content renormalization, no gcd.
  Monomial m = num_.min_exponents();
  return normalized_coprime(den_.shifted(m.inverse()),
                            num_.shifted(m.inverse()));
}

Scalar Scalar::pow(long k) const {
  if (k == 0) return one();
  Scalar base = k < 0 ? inverse() : *this;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1UL
                          : static_cast<unsigned long>(k);
  Scalar acc = one();
  while (n > 0) {
    if (n & 1UL) acc = acc * base;
    base = base * base;
    n >>= 1UL;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Derived quantities.
// ---------------------------------------------------------------------------

Scalar quantum_integer(int i, long k) {
  if (i < 1) throw IndexOutOfRange("quantum_integer: index must be >= 1");
  if (k == 0) return Scalar::zero();
  LaurentPoly num =
      LaurentPoly::variable(var_r(i), static_cast<std::int32_t>(2 * k)) -
      LaurentPoly::variable(var_s(i), static_cast<std::int32_t>(2 * k));
  LaurentPoly den = LaurentPoly::variable(var_r(i), 2) -
                    LaurentPoly::variable(var_s(i), 2);
  return Scalar::fraction(num, den);
}

std::optional<SignedPower> ratio_as_signed_power(const Scalar& x, int j) {
  if (x.is_zero()) throw ZeroInput("ratio_as_signed_power: zero input");
  if (!x.is_monomial()) return std::nullopt;
  const mpq_class& c = x.num().sole_coeff();
  int sign;
  if (c == 1) {
    sign = 1;
  } else if (c == -1) {
    sign = -1;
  } else {
    return std::nullopt;
  }
  const Monomial& m = x.num().sole_monomial();
  long p = 0;
  for (const auto& [v, e] : m.entries()) {
    if (v == var_r(j)) {
      p = e;
    } else if (v != var_s(j)) {
      return std::nullopt;
    }
  }
  if (m.exponent(var_r(j)) != -m.exponent(var_s(j))) return std::nullopt;
  return SignedPower{sign, p};
}

}  // namespace mpweyl
