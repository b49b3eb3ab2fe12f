#include "mpweyl/uqrs.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "mpweyl/errors.hpp"

namespace mpweyl {

namespace {

std::string power_name(const std::string& base, long e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

// "r1 s2^-1" for the conjugation coefficient r_i^re s_j^se; empty when both
// exponents vanish.
std::string coefficient_name(int ri, long re, int si, long se) {
  std::string out;
  if (re != 0) out += power_name("r" + std::to_string(ri), re);
  if (se != 0) {
    if (!out.empty()) out += " ";
    out += power_name("s" + std::to_string(si), se);
  }
  return out;
}

void require_rank(int n) {
  if (n < 2) {
    throw InvalidParameter("quantum group realization needs rank at least 2");
  }
}

void require_index(const UGenerator& g, int n) {
  if (g.index < 1 || g.index >= n) {
    throw IndexOutOfRange("u-generator index " + std::to_string(g.index) +
                          " is outside 1.." + std::to_string(n - 1));
  }
  if ((g.kind == UKind::E || g.kind == UKind::F) && g.exponent != 1) {
    throw InvalidParameter("e and f generators carry no exponent");
  }
}

void require_polynomial_index(const BasisIndex& idx, int n) {
  if (!idx.l.empty() || idx.k.size() != static_cast<std::size_t>(n)) {
    throw UnsupportedIndex("basis index " + idx.to_string() +
                           " does not belong to the rank-" + std::to_string(n) +
                           " polynomial module");
  }
  for (long e : idx.k) {
    if (e < 0) {
      throw UnsupportedIndex("basis index " + idx.to_string() +
                             " has a negative entry");
    }
  }
}

// Pairing of the weight-lattice unit vectors against the simple roots:
// (eps_k, alpha_j) = delta_{kj} - delta_{k,j+1}.
long root_pairing(int k, int j) {
  long out = 0;
  if (k == j) out += 1;
  if (k == j + 1) out -= 1;
  return out;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return a * b - b * a;
}

AlgebraElement q_commutator(const AlgebraElement& a, const AlgebraElement& b,
                            const Scalar& q) {
  return a * b - q * (b * a);
}

}  // namespace

std::string u_generator_name(const UGenerator& g) {
  std::string base;
  switch (g.kind) {
    case UKind::E: return "e" + std::to_string(g.index);
    case UKind::F: return "f" + std::to_string(g.index);
    case UKind::Omega: base = "w" + std::to_string(g.index); break;
    case UKind::OmegaPrime: base = "wp" + std::to_string(g.index); break;
  }
  return power_name(base, g.exponent);
}

AlgebraElement u_image(const UGenerator& g, int n) {
  require_rank(n);
  require_index(g, n);
  int i = g.index;
  switch (g.kind) {
    case UKind::E:
      return normalize({ygen(i + 1), xgen(i)});
    case UKind::F:
      return normalize({ygen(i), xgen(i + 1)});
    case UKind::Omega:
      if (g.exponent == 0) return AlgebraElement::one();
      return normalize({rho(i, g.exponent), sigma(i + 1, g.exponent)});
    case UKind::OmegaPrime:
      if (g.exponent == 0) return AlgebraElement::one();
      return normalize({rho(i + 1, g.exponent), sigma(i, g.exponent)});
  }
  throw InvalidParameter("unknown u-generator kind");
}

std::vector<RelationCheck> verify_u_relations(int n) {
  require_rank(n);
  std::vector<RelationCheck> out;
  auto push = [&out](std::string name, AlgebraElement residual) {
    bool ok = residual.is_zero();
    out.push_back({std::move(name), ok, std::move(residual)});
  };

  std::vector<AlgebraElement> W(n), Wp(n), Winv(n), Wpinv(n), E(n), F(n);
  for (int i = 1; i < n; ++i) {
    W[i] = u_image(uomega(i), n);
    Wp[i] = u_image(uomega_prime(i), n);
    Winv[i] = u_image(uomega(i, -1), n);
    Wpinv[i] = u_image(uomega_prime(i, -1), n);
    E[i] = u_image(ue(i), n);
    F[i] = u_image(uf(i), n);
  }

  // Torus generators are invertible and commute among themselves.
  for (int i = 1; i < n; ++i) {
    std::string si = std::to_string(i);
    push("w" + si + " w" + si + "^-1 - 1", W[i] * Winv[i] - AlgebraElement::one());
    push("wp" + si + " wp" + si + "^-1 - 1",
         Wp[i] * Wpinv[i] - AlgebraElement::one());
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::string si = std::to_string(i), sj = std::to_string(j);
      push("w" + si + " w" + sj + " - w" + sj + " w" + si,
           commutator(W[i], W[j]));
      push("wp" + si + " wp" + sj + " - wp" + sj + " wp" + si,
           commutator(Wp[i], Wp[j]));
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      std::string si = std::to_string(i), sj = std::to_string(j);
      push("w" + si + " wp" + sj + " - wp" + sj + " w" + si,
           commutator(W[i], Wp[j]));
    }
  }

  // Conjugating the ladder generators by the torus rescales them through the
  // root pairing; omega reads (r_i, s_{i+1}), omega' reads (r_{i+1}, s_i).
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      std::string si = std::to_string(i), sj = std::to_string(j);
      long pe = root_pairing(i, j);
      long ps = root_pairing(i + 1, j);

      auto conj = [&push, &si, &sj](const std::string& torus,
                                    const AlgebraElement& t,
                                    const std::string& ladder,
                                    const AlgebraElement& g, int ri, long re,
                                    int siidx, long se) {
        Scalar coef = Scalar::r_power(ri, re) * Scalar::s_power(siidx, se);
        std::string cname = coefficient_name(ri, re, siidx, se);
        std::string mid = cname.empty() ? "" : cname + " ";
        push(torus + si + " " + ladder + sj + " - " + mid + ladder + sj + " " +
                 torus + si,
             t * g - coef * (g * t));
      };

      conj("w", W[i], "e", E[j], i, pe, i + 1, ps);
      conj("w", W[i], "f", F[j], i, -pe, i + 1, -ps);
      conj("wp", Wp[i], "e", E[j], i + 1, ps, i, pe);
      conj("wp", Wp[i], "f", F[j], i + 1, -ps, i, -pe);
    }
  }

  // Mixed commutators. At equal indices the target is the torus difference
  // (w_i^2 - wp_i^2)/(r_i^2 - s_i^2); this is the one relation the
  // realization does not satisfy (the residual is a nonzero torus element
  // unless the parameter pairs at i and i+1 coincide).
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      std::string si = std::to_string(i), sj = std::to_string(j);
      AlgebraElement lhs = commutator(E[i], F[j]);
      if (i == j) {
        Scalar dinv =
            (Scalar::r_power(i, 2) - Scalar::s_power(i, 2)).inverse();
        AlgebraElement rhs = (W[i] * W[i] - Wp[i] * Wp[i]) * dinv;
        push("e" + si + " f" + sj + " - f" + sj + " e" + si + " - (w" + si +
                 "^2 - wp" + si + "^2)/(r" + si + "^2 - s" + si + "^2)",
             lhs - rhs);
      } else {
        push("e" + si + " f" + sj + " - f" + sj + " e" + si, lhs);
      }
    }
  }

  // Cubic identities between adjacent ladder generators.
  for (int i = 1; i + 1 < n; ++i) {
    std::string si = std::to_string(i), sj = std::to_string(i + 1);
    Scalar r2 = Scalar::r_power(i + 1, 2);
    Scalar s2 = Scalar::s_power(i + 1, 2);
    AlgebraElement inner_e = q_commutator(E[i], E[i + 1], r2);
    push("[e" + si + ", [e" + si + ", e" + sj + "]_{r" + sj + "^2}]_{s" + sj +
             "^2}",
         q_commutator(E[i], inner_e, s2));
    push("[[e" + si + ", e" + sj + "]_{r" + sj + "^2}, e" + sj + "]_{s" + sj +
             "^2}",
         q_commutator(inner_e, E[i + 1], s2));

    Scalar r2inv = Scalar::r_power(i + 1, -2);
    Scalar s2inv = Scalar::s_power(i + 1, -2);
    AlgebraElement inner_f = q_commutator(F[i], F[i + 1], r2inv);
    push("[f" + si + ", [f" + si + ", f" + sj + "]_{r" + sj + "^-2}]_{s" + sj +
             "^-2}",
         q_commutator(F[i], inner_f, s2inv));
    push("[[f" + si + ", f" + sj + "]_{r" + sj + "^-2}, f" + sj + "]_{s" + sj +
             "^-2}",
         q_commutator(inner_f, F[i + 1], s2inv));
  }

  return out;
}

ModuleVector u_act(const UGenerator& g, const ModuleVector& v, int n) {
  require_rank(n);
  require_index(g, n);
  int i = g.index;

  ModuleVector out = ModuleVector::zero();
  for (const auto& [idx, c] : v.terms()) {
    require_polynomial_index(idx, n);
    switch (g.kind) {
      case UKind::Omega: {
        Scalar eigen = Scalar::r_power(i, idx.k[i - 1] * g.exponent) *
                       Scalar::s_power(i + 1, idx.k[i] * g.exponent);
        out.add_term(idx, c * eigen);
        break;
      }
      case UKind::OmegaPrime: {
        Scalar eigen = Scalar::r_power(i + 1, idx.k[i] * g.exponent) *
                       Scalar::s_power(i, idx.k[i - 1] * g.exponent);
        out.add_term(idx, c * eigen);
        break;
      }
      case UKind::E: {
        if (idx.k[i] == 0) break;
        BasisIndex target = idx;
        target.k[i - 1] += 1;
        target.k[i] -= 1;
        out.add_term(target, c * quantum_integer(i + 1, idx.k[i]));
        break;
      }
      case UKind::F: {
        if (idx.k[i - 1] == 0) break;
        BasisIndex target = idx;
        target.k[i - 1] -= 1;
        target.k[i] += 1;
        out.add_term(target, c * quantum_integer(i, idx.k[i - 1]));
        break;
      }
    }
  }
  return out;
}

UWeight weight_of(const BasisIndex& k) {
  int n = static_cast<int>(k.k.size());
  require_polynomial_index(k, n);
  UWeight w;
  for (int i = 1; i < n; ++i) {
    w.eta.push_back(Scalar::r_power(i, k.k[i - 1]) *
                    Scalar::s_power(i + 1, k.k[i]));
    w.theta.push_back(Scalar::r_power(i + 1, k.k[i]) *
                      Scalar::s_power(i, k.k[i - 1]));
  }
  return w;
}

GradedComponentReport graded_component_check(long m, int n) {
  require_rank(n);
  if (m < 0) throw InvalidParameter("graded component degree must be >= 0");

  // All lattice points of total degree m.
  std::vector<std::vector<long>> nodes;
  std::vector<long> cur(static_cast<std::size_t>(n), 0);
  auto emit = [&](auto&& self, int pos, long left) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      nodes.push_back(cur);
      return;
    }
    for (long e = 0; e <= left; ++e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, left - e);
    }
  };
  emit(emit, 0, m);

  GradedComponentReport rep;
  rep.component_size = nodes.size();
  rep.degree_preserved = true;
  rep.highest_weight_killed = true;

  std::map<std::vector<long>, std::size_t> node_id;
  for (std::size_t a = 0; a < nodes.size(); ++a) node_id[nodes[a]] = a;

  std::vector<std::set<std::size_t>> adjacency(nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    ModuleVector v = ModuleVector::unit(lattice_index(nodes[a]));
    for (int i = 1; i < n; ++i) {
      for (UGenerator g : {ue(i), uf(i)}) {
        ModuleVector w = u_act(g, v, n);
        for (const auto& [idx, c] : w.terms()) {
          long total = 0;
          for (long e : idx.k) total += e;
          if (total != m) {
            rep.degree_preserved = false;
            rep.detail = u_generator_name(g) + " moved " +
                         lattice_index(nodes[a]).to_string() +
                         " off the degree-" + std::to_string(m) + " slice";
            continue;
          }
          auto it = node_id.find(idx.k);
          if (it != node_id.end() && !c.is_zero()) {
            adjacency[a].insert(it->second);
            adjacency[it->second].insert(a);
          }
        }
      }
    }
  }

  // Breadth-first sweep for connectivity of the slice.
  std::vector<bool> seen(nodes.size(), false);
  std::deque<std::size_t> queue;
  if (!nodes.empty()) {
    queue.push_back(0);
    seen[0] = true;
  }
  std::size_t visited = 0;
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    ++visited;
    for (std::size_t b : adjacency[a]) {
      if (!seen[b]) {
        seen[b] = true;
        queue.push_back(b);
      }
    }
  }
  rep.connected = visited == nodes.size();
  if (!rep.connected && rep.detail.empty()) {
    rep.detail = "degree-" + std::to_string(m) + " slice splits under the ladder action";
  }

  std::vector<long> top(static_cast<std::size_t>(n), 0);
  top[0] = m;
  ModuleVector highest = ModuleVector::unit(lattice_index(top));
  for (int i = 1; i < n; ++i) {
    if (!u_act(ue(i), highest, n).is_zero()) {
      rep.highest_weight_killed = false;
      rep.detail = "e" + std::to_string(i) + " does not kill z(m e_1)";
    }
  }

  return rep;
}

}  // namespace mpweyl
