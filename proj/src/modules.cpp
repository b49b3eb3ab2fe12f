#include "mpweyl/modules.hpp"

#include <deque>
#include <sstream>

#include "mpweyl/errors.hpp"

namespace mpweyl {

namespace {

const Scalar& weyl_denominator_inverse(int i) {
  thread_local std::map<int, Scalar> cache;
  auto it = cache.find(i);
  if (it == cache.end()) {
    Scalar d = Scalar::r_power(i, 2) - Scalar::s_power(i, 2);
    it = cache.emplace(i, d.inverse()).first;
  }
  return it->second;
}

void require_signs(const std::vector<int>& z, const char* what) {
  for (int v : z) {
    if (v != 1 && v != -1) {
      throw InvalidParameter(std::string(what) + " entries must be +1 or -1");
    }
  }
}

void require_nonzero(const std::vector<Scalar>& v, const char* what) {
  for (const Scalar& c : v) {
    if (c.is_zero()) {
      throw ZeroCoordinate(std::string(what) + " coordinates must be nonzero");
    }
  }
}

}  // namespace

std::string BasisIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) os << ", ";
    os << k[i];
  }
  if (!l.empty()) {
    os << " | ";
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (i) os << ", ";
      os << l[i];
    }
  }
  os << ')';
  return os.str();
}

BasisIndex lattice_index(std::vector<long> k) {
  BasisIndex idx;
  idx.k = std::move(k);
  return idx;
}

BasisIndex whittaker_index(std::vector<long> k, std::vector<long> l) {
  if (k.size() != l.size()) {
    throw InvalidParameter("whittaker index needs both blocks of equal length");
  }
  BasisIndex idx;
  idx.k = std::move(k);
  idx.l = std::move(l);
  return idx;
}

ModuleVector ModuleVector::unit(const BasisIndex& idx) {
  ModuleVector v;
  v.terms_.emplace(idx, Scalar::one());
  return v;
}

Scalar ModuleVector::coefficient(const BasisIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

void ModuleVector::add_term(const BasisIndex& idx, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  ModuleVector out = *this;
  for (const auto& [idx, c] : o.terms_) out.add_term(idx, c);
  return out;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
  ModuleVector out = *this;
  for (const auto& [idx, c] : o.terms_) out.add_term(idx, -c);
  return out;
}

ModuleVector ModuleVector::operator-() const {
  ModuleVector out;
  for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, -c);
  return out;
}

ModuleVector ModuleVector::operator*(const Scalar& c) const {
  ModuleVector out;
  if (c.is_zero()) return out;
  for (const auto& [idx, t] : terms_) out.terms_.emplace(idx, t * c);
  return out;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [idx, c] : o.terms_) add_term(idx, c);
  return *this;
}

std::string ModuleVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.is_one()) {
      os << idx.to_string();
    } else {
      os << c.to_string() << " * " << idx.to_string();
    }
  }
  return os.str();
}

ModuleVector operator*(const Scalar& c, const ModuleVector& v) { return v * c; }

std::string family_name(Family f) {
  switch (f) {
    case Family::Polynomial:
      return "polynomial";
    case Family::Verma:
      return "verma";
    case Family::WeightNoBreak:
      return "weight";
    case Family::WeightBroken:
      return "weight-broken";
    case Family::Whittaker:
      return "whittaker";
  }
  return "?";
}

ModuleSpec ModuleSpec::polynomial(int n) {
  if (n < 1) throw InvalidParameter("rank must be at least 1");
  ModuleSpec spec;
  spec.family_ = Family::Polynomial;
  spec.n_ = n;
  spec.act_mu_.assign(n, Scalar::one());
  spec.act_nu_.assign(n, Scalar::one());
  return spec;
}

ModuleSpec ModuleSpec::verma(std::vector<Scalar> lambda,
                             std::vector<int> zeta_rho,
                             std::vector<int> zeta_sigma) {
  int n = static_cast<int>(lambda.size());
  if (n < 1) throw InvalidParameter("rank must be at least 1");
  if (zeta_rho.size() != lambda.size() || zeta_sigma.size() != lambda.size()) {
    throw InvalidParameter("verma data needs n scalars and two n-vectors of signs");
  }
  require_signs(zeta_rho, "zeta");
  require_signs(zeta_sigma, "zeta");
  require_nonzero(lambda, "verma highest weight");
  ModuleSpec spec;
  spec.family_ = Family::Verma;
  spec.n_ = n;
  spec.lambda_ = std::move(lambda);
  spec.zeta_rho_ = std::move(zeta_rho);
  spec.zeta_sigma_ = std::move(zeta_sigma);
  for (int i = 0; i < n; ++i) {
    spec.act_mu_.push_back(spec.lambda_[i] * Scalar(spec.zeta_rho_[i]));
    spec.act_nu_.push_back(spec.lambda_[i] * Scalar(spec.zeta_sigma_[i]));
  }
  return spec;
}

ModuleSpec ModuleSpec::weight_no_break(std::vector<Scalar> mu,
                                       std::vector<Scalar> nu) {
  int n = static_cast<int>(mu.size());
  if (n < 1 || nu.size() != mu.size()) {
    throw InvalidParameter("weight data needs two coordinate vectors of equal length");
  }
  require_nonzero(mu, "weight");
  require_nonzero(nu, "weight");
  for (int i = 1; i <= n; ++i) {
    if (ratio_as_signed_power(nu[i - 1] / mu[i - 1], i)) {
      throw InvalidParameter(
          "coordinate ratio at index " + std::to_string(i) +
          " is a break; use weight_broken");
    }
  }
  ModuleSpec spec;
  spec.family_ = Family::WeightNoBreak;
  spec.n_ = n;
  spec.mu_ = mu;
  spec.nu_ = nu;
  spec.act_mu_ = std::move(mu);
  spec.act_nu_ = std::move(nu);
  return spec;
}

ModuleSpec ModuleSpec::weight_broken(std::vector<Scalar> mu,
                                     std::vector<Scalar> nu,
                                     std::map<int, int> alpha) {
  int n = static_cast<int>(mu.size());
  if (n < 1 || nu.size() != mu.size()) {
    throw InvalidParameter("weight data needs two coordinate vectors of equal length");
  }
  require_nonzero(mu, "weight");
  require_nonzero(nu, "weight");
  for (const auto& [j, a] : alpha) {
    if (j < 1 || j > n) throw IndexOutOfRange("corner index out of range");
    if (a != 0 && a != 1) throw InvalidParameter("corner entries must be 0 or 1");
  }
  ModuleSpec spec;
  spec.family_ = Family::WeightBroken;
  spec.n_ = n;
  spec.mu_ = std::move(mu);
  spec.nu_ = std::move(nu);
  spec.alpha_ = std::move(alpha);
  for (int i = 1; i <= n; ++i) {
    auto sp = ratio_as_signed_power(spec.nu_[i - 1] / spec.mu_[i - 1], i);
    bool listed = spec.alpha_.count(i) != 0;
    if (sp && !listed) {
      throw InvalidParameter("index " + std::to_string(i) +
                             " is a break but is missing from the corner map");
    }
    if (!sp && listed) {
      throw InvalidParameter("index " + std::to_string(i) +
                             " is not a break and cannot carry a corner entry");
    }
    if (sp) {
      spec.breaks_.insert(i);
      // Normalize to the designated ideal: shift so that the break sits one
      // step above the stored coordinates.
      long p = sp->power - 1;
      spec.mu_[i - 1] *= Scalar::r_power(i, p);
      spec.nu_[i - 1] *= Scalar::s_power(i, p);
      if (spec.alpha_.at(i) == 1) {
        spec.act_mu_.push_back(Scalar::param_r(i) * spec.mu_[i - 1]);
        spec.act_nu_.push_back(Scalar::param_s(i) * spec.nu_[i - 1]);
      } else {
        spec.act_mu_.push_back(spec.mu_[i - 1]);
        spec.act_nu_.push_back(spec.nu_[i - 1]);
      }
    } else {
      spec.act_mu_.push_back(spec.mu_[i - 1]);
      spec.act_nu_.push_back(spec.nu_[i - 1]);
    }
  }
  return spec;
}

ModuleSpec ModuleSpec::whittaker(std::vector<Scalar> xi) {
  int n = static_cast<int>(xi.size());
  if (n < 1) throw InvalidParameter("rank must be at least 1");
  require_nonzero(xi, "whittaker");
  ModuleSpec spec;
  spec.family_ = Family::Whittaker;
  spec.n_ = n;
  spec.xi_ = std::move(xi);
  return spec;
}

bool ModuleSpec::in_support(const BasisIndex& idx) const {
  if (family_ == Family::Whittaker) {
    return idx.k.size() == static_cast<std::size_t>(n_) &&
           idx.l.size() == static_cast<std::size_t>(n_);
  }
  if (idx.k.size() != static_cast<std::size_t>(n_) || !idx.l.empty()) {
    return false;
  }
  switch (family_) {
    case Family::Polynomial:
    case Family::Verma:
      for (long v : idx.k) {
        if (v < 0) return false;
      }
      return true;
    case Family::WeightNoBreak:
      return true;
    case Family::WeightBroken:
      for (const auto& [j, a] : alpha_) {
        long v = idx.k[j - 1];
        if (a == 1 ? v < 0 : v > 0) return false;
      }
      return true;
    default:
      return false;
  }
}

namespace {

void check_index(const ModuleSpec& spec, int i) {
  if (i < 1 || i > spec.rank()) {
    throw IndexOutOfRange("module index " + std::to_string(i) +
                          " out of range for rank " + std::to_string(spec.rank()));
  }
}

void check_family(const ModuleSpec& spec, std::initializer_list<Family> fams,
                  const char* what) {
  for (Family f : fams) {
    if (spec.family() == f) return;
  }
  throw InvalidParameter(std::string(what) + " is not defined for a " +
                         family_name(spec.family()) + " module");
}

}  // namespace

const Scalar& ModuleSpec::lambda(int i) const {
  check_family(*this, {Family::Verma}, "lambda");
  check_index(*this, i);
  return lambda_[i - 1];
}

int ModuleSpec::zeta_rho(int i) const {
  check_family(*this, {Family::Verma}, "zeta");
  check_index(*this, i);
  return zeta_rho_[i - 1];
}

int ModuleSpec::zeta_sigma(int i) const {
  check_family(*this, {Family::Verma}, "zeta");
  check_index(*this, i);
  return zeta_sigma_[i - 1];
}

const Scalar& ModuleSpec::mu(int i) const {
  check_family(*this, {Family::WeightNoBreak, Family::WeightBroken}, "mu");
  check_index(*this, i);
  return mu_[i - 1];
}

const Scalar& ModuleSpec::nu(int i) const {
  check_family(*this, {Family::WeightNoBreak, Family::WeightBroken}, "nu");
  check_index(*this, i);
  return nu_[i - 1];
}

const Scalar& ModuleSpec::xi(int i) const {
  check_family(*this, {Family::Whittaker}, "xi");
  check_index(*this, i);
  return xi_[i - 1];
}

const std::set<int>& ModuleSpec::breaks() const {
  check_family(*this, {Family::WeightBroken}, "breaks");
  return breaks_;
}

const std::map<int, int>& ModuleSpec::corner() const {
  check_family(*this, {Family::WeightBroken}, "corner");
  return alpha_;
}

const Scalar& ModuleSpec::action_mu(int i) const {
  check_family(*this,
               {Family::Polynomial, Family::Verma, Family::WeightNoBreak,
                Family::WeightBroken},
               "action_mu");
  check_index(*this, i);
  return act_mu_[i - 1];
}

const Scalar& ModuleSpec::action_nu(int i) const {
  check_family(*this,
               {Family::Polynomial, Family::Verma, Family::WeightNoBreak,
                Family::WeightBroken},
               "action_nu");
  check_index(*this, i);
  return act_nu_[i - 1];
}

namespace {

Scalar lattice_y_coefficient(const ModuleSpec& spec, int i, long ki) {
  const Scalar& m = spec.action_mu(i);
  const Scalar& u = spec.action_nu(i);
  return (Scalar::r_power(i, 2 * ki) * m * m -
          Scalar::s_power(i, 2 * ki) * u * u) *
         weyl_denominator_inverse(i);
}

ModuleVector act_lattice(const ModuleSpec& spec, const GeneratorSymbol& g,
                         const ModuleVector& v) {
  ModuleVector out;
  int i = g.index;
  for (const auto& [idx, c] : v.terms()) {
    long ki = idx.k[i - 1];
    switch (g.kind) {
      case GenKind::Rho:
        out.add_term(idx, c * Scalar::r_power(i, ki * g.power) *
                              spec.action_mu(i).pow(g.power));
        break;
      case GenKind::Sigma:
        out.add_term(idx, c * Scalar::s_power(i, ki * g.power) *
                              spec.action_nu(i).pow(g.power));
        break;
      case GenKind::X: {
        BasisIndex tgt = idx;
        tgt.k[i - 1] += g.power;
        if (spec.in_support(tgt)) out.add_term(tgt, c);
        break;
      }
      case GenKind::Y: {
        BasisIndex tgt = idx;
        tgt.k[i - 1] -= g.power;
        if (!spec.in_support(tgt)) break;
        Scalar coef = c;
        for (long t = 0; t < g.power && !coef.is_zero(); ++t) {
          coef *= lattice_y_coefficient(spec, i, ki - t);
        }
        out.add_term(tgt, coef);
        break;
      }
    }
  }
  return out;
}

ModuleVector whittaker_y_once(const ModuleSpec& spec, int i,
                              const ModuleVector& v) {
  ModuleVector out;
  const Scalar& dinv = weyl_denominator_inverse(i);
  for (const auto& [idx, c] : v.terms()) {
    Scalar front = c * spec.xi(i).inverse() *
                   Scalar::r_power(i, idx.k[i - 1]) *
                   Scalar::s_power(i, idx.l[i - 1]) * dinv;
    BasisIndex up_k = idx;
    up_k.k[i - 1] += 2;
    BasisIndex up_l = idx;
    up_l.l[i - 1] += 2;
    out.add_term(up_k, front * Scalar::r_power(i, 2));
    out.add_term(up_l, -(front * Scalar::s_power(i, 2)));
  }
  return out;
}

ModuleVector act_whittaker(const ModuleSpec& spec, const GeneratorSymbol& g,
                           const ModuleVector& v) {
  int i = g.index;
  if (g.kind == GenKind::Y) {
    ModuleVector cur = v;
    for (long t = 0; t < g.power; ++t) cur = whittaker_y_once(spec, i, cur);
    return cur;
  }
  ModuleVector out;
  for (const auto& [idx, c] : v.terms()) {
    switch (g.kind) {
      case GenKind::Rho: {
        BasisIndex tgt = idx;
        tgt.k[i - 1] += g.power;
        out.add_term(tgt, c);
        break;
      }
      case GenKind::Sigma: {
        BasisIndex tgt = idx;
        tgt.l[i - 1] += g.power;
        out.add_term(tgt, c);
        break;
      }
      case GenKind::X: {
        Scalar eig = spec.xi(i).pow(g.power) *
                     Scalar::r_power(i, -idx.k[i - 1] * g.power) *
                     Scalar::s_power(i, -idx.l[i - 1] * g.power);
        out.add_term(idx, c * eig);
        break;
      }
      default:
        break;
    }
  }
  return out;
}

}  // namespace

ModuleVector act_generator(const ModuleSpec& spec, const GeneratorSymbol& g,
                           const ModuleVector& v) {
  check_index(spec, g.index);
  if ((g.kind == GenKind::X || g.kind == GenKind::Y) && g.power < 0) {
    throw InvalidParameter("x and y do not admit negative powers");
  }
  for (const auto& [idx, c] : v.terms()) {
    (void)c;
    if (!spec.in_support(idx)) {
      throw UnsupportedIndex("basis vector " + idx.to_string() +
                             " lies outside the module support");
    }
  }
  if (g.power == 0) return v;
  if (spec.family() == Family::Whittaker) return act_whittaker(spec, g, v);
  return act_lattice(spec, g, v);
}

ModuleVector act_element(const ModuleSpec& spec, const AlgebraElement& e,
                         const ModuleVector& v) {
  ModuleVector out;
  for (const auto& [mono, c] : e.terms()) {
    Word w = mono.to_word();
    ModuleVector cur = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      cur = act_generator(spec, *it, cur);
      if (cur.is_zero()) break;
    }
    out += cur * c;
  }
  return out;
}

namespace {

struct RelationTerms {
  std::string name;
  std::vector<std::pair<Scalar, Word>> terms;
};

std::vector<RelationTerms> relation_catalog(int n) {
  std::vector<RelationTerms> out;
  auto add = [&out](std::string name, std::vector<std::pair<Scalar, Word>> t) {
    out.push_back({std::move(name), std::move(t)});
  };
  Scalar one = Scalar::one();
  for (int i = 1; i <= n; ++i) {
    std::string I = std::to_string(i);
    Scalar r2 = Scalar::r_power(i, 2);
    Scalar s2 = Scalar::s_power(i, 2);
    Scalar dinv = (r2 - s2).inverse();
    add("rho" + I + " rho" + I + "^-1 - 1",
        {{one, {rho(i), rho(i, -1)}}, {-one, {}}});
    add("sigma" + I + " sigma" + I + "^-1 - 1",
        {{one, {sigma(i), sigma(i, -1)}}, {-one, {}}});
    add("rho" + I + " sigma" + I + " - sigma" + I + " rho" + I,
        {{one, {rho(i), sigma(i)}}, {-one, {sigma(i), rho(i)}}});
    add("rho" + I + " x" + I + " - r" + I + " x" + I + " rho" + I,
        {{one, {rho(i), xgen(i)}},
         {-Scalar::param_r(i), {xgen(i), rho(i)}}});
    add("rho" + I + " y" + I + " - r" + I + "^-1 y" + I + " rho" + I,
        {{one, {rho(i), ygen(i)}},
         {-Scalar::r_power(i, -1), {ygen(i), rho(i)}}});
    add("sigma" + I + " x" + I + " - s" + I + " x" + I + " sigma" + I,
        {{one, {sigma(i), xgen(i)}},
         {-Scalar::param_s(i), {xgen(i), sigma(i)}}});
    add("sigma" + I + " y" + I + " - s" + I + "^-1 y" + I + " sigma" + I,
        {{one, {sigma(i), ygen(i)}},
         {-Scalar::s_power(i, -1), {ygen(i), sigma(i)}}});
    add("y" + I + " x" + I + " - r" + I + "^2 x" + I + " y" + I + " - sigma" +
            I + "^2",
        {{one, {ygen(i), xgen(i)}},
         {-r2, {xgen(i), ygen(i)}},
         {-one, {sigma(i, 2)}}});
    add("y" + I + " x" + I + " - s" + I + "^2 x" + I + " y" + I + " - rho" +
            I + "^2",
        {{one, {ygen(i), xgen(i)}},
         {-s2, {xgen(i), ygen(i)}},
         {-one, {rho(i, 2)}}});
    add("y" + I + " x" + I + " - t" + I,
        {{one, {ygen(i), xgen(i)}},
         {-(r2 * dinv), {rho(i, 2)}},
         {s2 * dinv, {sigma(i, 2)}}});
    add("x" + I + " y" + I + " - phi" + I + "(t" + I + ")",
        {{one, {xgen(i), ygen(i)}},
         {-dinv, {rho(i, 2)}},
         {dinv, {sigma(i, 2)}}});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      std::string I = std::to_string(i), J = std::to_string(j);
      add("rho" + I + " x" + J + " - x" + J + " rho" + I,
          {{one, {rho(i), xgen(j)}}, {-one, {xgen(j), rho(i)}}});
      add("rho" + I + " y" + J + " - y" + J + " rho" + I,
          {{one, {rho(i), ygen(j)}}, {-one, {ygen(j), rho(i)}}});
      add("sigma" + I + " x" + J + " - x" + J + " sigma" + I,
          {{one, {sigma(i), xgen(j)}}, {-one, {xgen(j), sigma(i)}}});
      add("sigma" + I + " y" + J + " - y" + J + " sigma" + I,
          {{one, {sigma(i), ygen(j)}}, {-one, {ygen(j), sigma(i)}}});
      add("rho" + I + " sigma" + J + " - sigma" + J + " rho" + I,
          {{one, {rho(i), sigma(j)}}, {-one, {sigma(j), rho(i)}}});
      add("y" + I + " x" + J + " - x" + J + " y" + I,
          {{one, {ygen(i), xgen(j)}}, {-one, {xgen(j), ygen(i)}}});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::string I = std::to_string(i), J = std::to_string(j);
      add("rho" + I + " rho" + J + " - rho" + J + " rho" + I,
          {{one, {rho(i), rho(j)}}, {-one, {rho(j), rho(i)}}});
      add("sigma" + I + " sigma" + J + " - sigma" + J + " sigma" + I,
          {{one, {sigma(i), sigma(j)}}, {-one, {sigma(j), sigma(i)}}});
      add("x" + I + " x" + J + " - x" + J + " x" + I,
          {{one, {xgen(i), xgen(j)}}, {-one, {xgen(j), xgen(i)}}});
      add("y" + I + " y" + J + " - y" + J + " y" + I,
          {{one, {ygen(i), ygen(j)}}, {-one, {ygen(j), ygen(i)}}});
    }
  }
  return out;
}

std::vector<BasisIndex> support_box(const ModuleSpec& spec, long radius) {
  int n = spec.rank();
  int dim = spec.family() == Family::Whittaker ? 2 * n : n;
  std::vector<long> c(dim, -radius);
  std::vector<BasisIndex> out;
  while (true) {
    BasisIndex idx;
    idx.k.assign(c.begin(), c.begin() + n);
    if (dim == 2 * n) idx.l.assign(c.begin() + n, c.end());
    if (spec.in_support(idx)) out.push_back(idx);
    int pos = 0;
    while (pos < dim && c[pos] == radius) c[pos++] = -radius;
    if (pos == dim) break;
    ++c[pos];
  }
  return out;
}

ModuleVector act_word_steps(const ModuleSpec& spec, const Word& w,
                            ModuleVector v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    v = act_generator(spec, *it, v);
  }
  return v;
}

}  // namespace

std::vector<ModuleRelationCheck> check_module_relations(const ModuleSpec& spec,
                                                        long box_radius) {
  if (box_radius < 0) throw InvalidParameter("box radius must be nonnegative");
  std::vector<BasisIndex> box = support_box(spec, box_radius);
  std::vector<ModuleRelationCheck> out;
  for (const auto& rel : relation_catalog(spec.rank())) {
    ModuleRelationCheck check;
    check.name = rel.name;
    check.ok = true;
    for (const BasisIndex& idx : box) {
      ModuleVector residual;
      for (const auto& [coef, w] : rel.terms) {
        residual += act_word_steps(spec, w, ModuleVector::unit(idx)) * coef;
      }
      if (!residual.is_zero()) {
        check.ok = false;
        check.detail = "residual " + residual.to_string() + " on " +
                       idx.to_string();
        break;
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

CyclicityReport cyclicity_probe(const ModuleSpec& spec, const BasisIndex& start,
                                long box_radius) {
  if (!spec.in_support(start)) {
    throw UnsupportedIndex("start vector " + start.to_string() +
                           " lies outside the module support");
  }
  std::set<BasisIndex> box;
  for (const BasisIndex& idx : support_box(spec, box_radius)) box.insert(idx);
  if (!box.count(start)) {
    throw InvalidParameter("start vector lies outside the sampled box");
  }

  std::vector<GeneratorSymbol> gens;
  for (int i = 1; i <= spec.rank(); ++i) {
    gens.push_back(xgen(i));
    gens.push_back(ygen(i));
    gens.push_back(rho(i));
    gens.push_back(rho(i, -1));
    gens.push_back(sigma(i));
    gens.push_back(sigma(i, -1));
  }

  std::set<BasisIndex> reached{start};
  std::deque<BasisIndex> queue{start};
  while (!queue.empty()) {
    BasisIndex idx = queue.front();
    queue.pop_front();
    for (const GeneratorSymbol& g : gens) {
      ModuleVector img = act_generator(spec, g, ModuleVector::unit(idx));
      for (const auto& [tgt, c] : img.terms()) {
        (void)c;
        if (box.count(tgt) && reached.insert(tgt).second) {
          queue.push_back(tgt);
        }
      }
    }
  }

  CyclicityReport rep;
  rep.reached = reached.size();
  rep.box_points = box.size();
  rep.complete = rep.reached == rep.box_points;
  return rep;
}

IsoCheckReport verma_weight_iso_check(const std::vector<Scalar>& lambda,
                                      const std::vector<int>& zeta_rho,
                                      const std::vector<int>& zeta_sigma,
                                      long box_radius) {
  ModuleSpec verma = ModuleSpec::verma(lambda, zeta_rho, zeta_sigma);
  int n = verma.rank();
  std::vector<Scalar> mu, nu;
  std::map<int, int> alpha;
  for (int i = 1; i <= n; ++i) {
    mu.push_back(lambda[i - 1] * Scalar(zeta_rho[i - 1]));
    nu.push_back(lambda[i - 1] * Scalar(zeta_sigma[i - 1]));
    alpha[i] = 1;
  }
  ModuleSpec broken = ModuleSpec::weight_broken(mu, nu, alpha);

  std::vector<GeneratorSymbol> gens;
  for (int i = 1; i <= n; ++i) {
    gens.push_back(rho(i));
    gens.push_back(rho(i, -1));
    gens.push_back(sigma(i));
    gens.push_back(sigma(i, -1));
    gens.push_back(xgen(i));
    gens.push_back(ygen(i));
  }

  IsoCheckReport rep;
  rep.ok = true;
  std::vector<long> k(n, 0);
  while (true) {
    BasisIndex idx = lattice_index(k);
    ++rep.points_checked;
    for (const GeneratorSymbol& g : gens) {
      ModuleVector a = act_generator(verma, g, ModuleVector::unit(idx));
      ModuleVector b = act_generator(broken, g, ModuleVector::unit(idx));
      if (a != b) {
        rep.ok = false;
        rep.detail = "actions differ on " + idx.to_string() + ": " +
                     a.to_string() + " vs " + b.to_string();
        return rep;
      }
    }
    int pos = 0;
    while (pos < n && k[pos] == box_radius) k[pos++] = 0;
    if (pos == n) break;
    ++k[pos];
  }
  return rep;
}

}  // namespace mpweyl
