#include "mpweyl/serialize.hpp"

#include <vector>

#include "mpweyl/errors.hpp"

namespace mpweyl {

namespace {

// Renders a polynomial so that it reparses exactly under the expression
// grammar. Binary " - " is safe, but a leading negative monomial must be
// wrapped ("-(s1^2)"), because a bare "-s1^2" would reparse as (-s1)^2: the
// unary minus binds to the atom before the exponent does.
std::string poly_grammar_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Monomial& m = it->first;
    mpq_class c = it->second;
    bool negative = c < 0;
    if (negative) c = -c;
    std::string piece;
    if (m.is_one()) {
      piece = c.get_str();
    } else if (c == 1) {
      piece = m.to_string();
    } else {
      piece = c.get_str() + "*" + m.to_string();
    }
    if (first) {
      out = negative ? "-(" + piece + ")" : piece;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + piece;
    }
  }
  return out;
}

// A coefficient used as a product factor needs parentheses when it prints
// with a top-level sum or a leading minus.
std::string coefficient_factor(const Scalar& c) {
  std::string num = poly_grammar_text(c.num());
  if (!c.den().is_one()) {
    return "(" + num + ")/(" + poly_grammar_text(c.den()) + ")";
  }
  if (num.find(" + ") != std::string::npos ||
      num.find(" - ") != std::string::npos || num[0] == '-') {
    return "(" + num + ")";
  }
  return num;
}

void append_factor(std::string& out, const char* base, int index, long e) {
  if (e == 0) return;
  if (!out.empty()) out += " * ";
  out += base + std::to_string(index);
  if (e != 1) out += "^" + std::to_string(e);
}

}  // namespace

std::string element_to_text(const AlgebraElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string factors;
    for (const auto& [i, blk] : m.blocks()) {
      append_factor(factors, "rho", i, blk.a);
      append_factor(factors, "sigma", i, blk.b);
      append_factor(factors, "x", i, blk.u);
      append_factor(factors, "y", i, blk.v);
    }
    if (factors.empty()) {
      out += coefficient_factor(c);
    } else if (c.is_one()) {
      out += factors;
    } else {
      out += coefficient_factor(c) + " * " + factors;
    }
  }
  return out;
}

nlohmann::ordered_json scalar_to_json(const Scalar& c) {
  nlohmann::ordered_json out;
  out["num"] = c.num().to_string();
  out["den"] = c.den().to_string();
  return out;
}

nlohmann::ordered_json element_to_json(const AlgebraElement& e, int n) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : e.terms()) {
    std::vector<long> a(static_cast<std::size_t>(n), 0), b = a, u = a, v = a;
    for (const auto& [i, blk] : m.blocks()) {
      if (i < 1 || i > n) {
        throw InvalidParameter("element mentions index " + std::to_string(i) +
                               " beyond rank " + std::to_string(n));
      }
      a[static_cast<std::size_t>(i - 1)] = blk.a;
      b[static_cast<std::size_t>(i - 1)] = blk.b;
      u[static_cast<std::size_t>(i - 1)] = blk.u;
      v[static_cast<std::size_t>(i - 1)] = blk.v;
    }
    nlohmann::ordered_json monomial;
    monomial["rho"] = a;
    monomial["sigma"] = b;
    monomial["x"] = u;
    monomial["y"] = v;
    nlohmann::ordered_json term;
    term["monomial"] = std::move(monomial);
    term["coeff"] = scalar_to_json(c);
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json out;
  out["terms"] = std::move(terms);
  return out;
}

nlohmann::ordered_json vector_to_json(const ModuleVector& v) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [idx, c] : v.terms()) {
    nlohmann::ordered_json term;
    if (idx.l.empty()) {
      term["index"] = idx.k;
    } else {
      nlohmann::ordered_json pair;
      pair["k"] = idx.k;
      pair["l"] = idx.l;
      term["index"] = std::move(pair);
    }
    term["coeff"] = scalar_to_json(c);
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json out;
  out["terms"] = std::move(terms);
  return out;
}

std::string vector_to_text(const ModuleVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : v.terms()) {
    if (!first) out += "\n";
    first = false;
    out += idx.to_string() + "  " + c.to_string();
  }
  return out;
}

}  // namespace mpweyl
