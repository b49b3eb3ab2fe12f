#include "mpweyl/classify.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "mpweyl/errors.hpp"

namespace mpweyl {

namespace {

void validate_coordinates(const IdealCoordinates& c) {
  if (c.rank() < 1 || c.nu.size() != c.mu.size()) {
    throw InvalidParameter("ideal coordinates need two vectors of equal length");
  }
  for (const Scalar& v : c.mu) {
    if (v.is_zero()) throw ZeroCoordinate("ideal coordinates must be nonzero");
  }
  for (const Scalar& v : c.nu) {
    if (v.is_zero()) throw ZeroCoordinate("ideal coordinates must be nonzero");
  }
}

std::string bits_to_string(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

// Exponent e with x = v^e exactly (coefficient 1, no other variables).
std::optional<long> pure_power(const Scalar& x, VarId v) {
  if (!x.is_monomial()) return std::nullopt;
  if (x.num().leading_coeff() != 1) return std::nullopt;
  const auto& entries = x.num().leading_monomial().entries();
  if (entries.empty()) return 0;
  if (entries.size() != 1 || entries[0].first != v) return std::nullopt;
  return entries[0].second;
}

}  // namespace

BreakReport detect_breaks(const IdealCoordinates& c) {
  validate_coordinates(c);
  BreakReport br;
  br.designated = c;
  for (int j = 1; j <= c.rank(); ++j) {
    auto sp = ratio_as_signed_power(c.nu[j - 1] / c.mu[j - 1], j);
    if (!sp) continue;
    long pj = sp->power - 1;
    br.J.insert(j);
    br.p[j] = pj;
    br.sign[j] = sp->sign;
    br.designated.mu[j - 1] = c.mu[j - 1] * Scalar::r_power(j, pj);
    br.designated.nu[j - 1] = c.nu[j - 1] * Scalar::s_power(j, pj);
  }
  return br;
}

bool SimpleModuleDescriptor::contains_shift(const std::vector<long>& k) const {
  if (k.size() != static_cast<std::size_t>(spec.rank())) {
    throw InvalidParameter("shift vector has the wrong length");
  }
  for (const auto& [j, a] : alpha) {
    long w = wall.at(j);
    if (a == 1 ? k[j - 1] <= w : k[j - 1] > w) return false;
  }
  return true;
}

std::vector<SimpleModuleDescriptor> enumerate_simples(const BreakReport& br) {
  int n = br.designated.rank();
  validate_coordinates(br.designated);

  auto rule_for = [&](const std::map<int, int>& alpha) {
    std::ostringstream os;
    for (int i = 1; i <= n; ++i) {
      if (i > 1) os << ", ";
      os << 'k' << i;
      auto it = alpha.find(i);
      if (it == alpha.end()) {
        os << " free";
      } else if (it->second == 1) {
        os << " >= " << br.p.at(i) + 1;
      } else {
        os << " <= " << br.p.at(i);
      }
    }
    return os.str();
  };

  std::vector<SimpleModuleDescriptor> out;
  if (br.J.empty()) {
    out.push_back(SimpleModuleDescriptor{
        {},
        {},
        ModuleSpec::weight_no_break(br.designated.mu, br.designated.nu),
        rule_for({})});
    return out;
  }

  std::vector<int> idx(br.J.begin(), br.J.end());
  std::size_t q = idx.size();
  std::vector<int> bits(q, 0);
  while (true) {
    std::map<int, int> alpha;
    for (std::size_t t = 0; t < q; ++t) alpha[idx[t]] = bits[t];
    out.push_back(SimpleModuleDescriptor{
        alpha,
        br.p,
        ModuleSpec::weight_broken(br.designated.mu, br.designated.nu, alpha),
        rule_for(alpha)});
    std::size_t pos = q;
    while (pos > 0 && bits[pos - 1] == 1) bits[--pos] = 0;
    if (pos == 0) break;
    ++bits[pos - 1];
  }
  return out;
}

std::string QuiverArrow::name() const {
  return std::string(1, kind) + std::to_string(index) + "[" +
         bits_to_string(from) + "]";
}

QuiverPresentation::QuiverPresentation(std::set<int> J) {
  for (int j : J) {
    if (j < 1) throw IndexOutOfRange("break indices start at 1");
  }
  indices_.assign(J.begin(), J.end());
}

std::size_t QuiverPresentation::object_count() const {
  return std::size_t{1} << indices_.size();
}

std::size_t QuiverPresentation::arrow_count() const {
  return indices_.empty()
             ? 0
             : 2 * indices_.size() * (std::size_t{1} << (indices_.size() - 1));
}

std::size_t QuiverPresentation::dimension() const {
  std::size_t d = 1;
  for (std::size_t t = 0; t < indices_.size(); ++t) d *= 4;
  return d;
}

std::vector<std::vector<int>> QuiverPresentation::objects() const {
  std::size_t q = indices_.size();
  std::vector<std::vector<int>> out;
  std::vector<int> bits(q, 0);
  while (true) {
    out.push_back(bits);
    std::size_t pos = q;
    while (pos > 0 && bits[pos - 1] == 1) bits[--pos] = 0;
    if (pos == 0) break;
    ++bits[pos - 1];
  }
  return out;
}

std::vector<QuiverArrow> QuiverPresentation::arrows() const {
  std::vector<QuiverArrow> out;
  for (const auto& obj : objects()) {
    for (std::size_t t = 0; t < indices_.size(); ++t) {
      QuiverArrow arrow;
      arrow.index = indices_[t];
      arrow.from = obj;
      arrow.to = obj;
      if (obj[t] == 0) {
        arrow.kind = 'a';
        arrow.to[t] = 1;
      } else {
        arrow.kind = 'b';
        arrow.to[t] = 0;
      }
      out.push_back(std::move(arrow));
    }
  }
  return out;
}

std::vector<std::vector<int>> QuiverPresentation::basis() const {
  std::size_t q = indices_.size();
  std::vector<std::vector<int>> out;
  std::vector<int> codes(q, 0);
  while (true) {
    out.push_back(codes);
    std::size_t pos = q;
    while (pos > 0 && codes[pos - 1] == 3) codes[--pos] = 0;
    if (pos == 0) break;
    ++codes[pos - 1];
  }
  return out;
}

std::optional<std::vector<int>> QuiverPresentation::multiply(
    const std::vector<int>& x, const std::vector<int>& y) const {
  if (x.size() != indices_.size() || y.size() != indices_.size()) {
    throw InvalidParameter("basis element has the wrong number of factors");
  }
  // Composition table per factor, -1 meaning zero. Codes: 0 = e_0, 1 = e_1,
  // 2 = a (corner bit 0 -> 1), 3 = b (bit 1 -> 0); two-step products at one
  // index vanish.
  static constexpr int table[4][4] = {
      {0, -1, -1, 3},
      {-1, 1, 2, -1},
      {2, -1, -1, -1},
      {-1, 3, -1, -1},
  };
  std::vector<int> out(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) {
    int v = table[x[t]][y[t]];
    if (v < 0) return std::nullopt;
    out[t] = v;
  }
  return out;
}

std::vector<std::vector<int>> QuiverPresentation::arrow_matrix(
    const QuiverArrow& arrow) const {
  auto pos = std::find(indices_.begin(), indices_.end(), arrow.index);
  if (pos == indices_.end() ||
      arrow.from.size() != indices_.size()) {
    throw InvalidParameter("arrow does not belong to this quiver");
  }
  std::size_t slot = static_cast<std::size_t>(pos - indices_.begin());
  std::vector<int> element = arrow.from;
  element[slot] = arrow.kind == 'a' ? 2 : 3;

  std::vector<std::vector<int>> all = basis();
  std::map<std::vector<int>, std::size_t> id;
  for (std::size_t i = 0; i < all.size(); ++i) id[all[i]] = i;

  std::vector<std::vector<int>> m(all.size(), std::vector<int>(all.size(), 0));
  for (std::size_t col = 0; col < all.size(); ++col) {
    if (auto prod = multiply(element, all[col])) {
      m[id.at(*prod)][col] = 1;
    }
  }
  return m;
}

std::string QuiverPresentation::to_dot() const {
  std::ostringstream os;
  os << "digraph skeleton {\n";
  if (indices_.empty()) {
    os << "  \"omega\";\n";
  } else {
    for (const auto& obj : objects()) {
      os << "  \"" << bits_to_string(obj) << "\";\n";
    }
    for (const auto& arrow : arrows()) {
      os << "  \"" << bits_to_string(arrow.from) << "\" -> \""
         << bits_to_string(arrow.to) << "\" [label=\"" << arrow.kind
         << arrow.index << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string QuiverPresentation::to_json() const {
  nlohmann::ordered_json doc;
  doc["objects"] = nlohmann::ordered_json::array();
  for (const auto& obj : objects()) {
    doc["objects"].push_back(indices_.empty() ? "omega" : bits_to_string(obj));
  }
  doc["arrows"] = nlohmann::ordered_json::array();
  for (const auto& arrow : arrows()) {
    nlohmann::ordered_json a;
    a["name"] = arrow.name();
    a["kind"] = std::string(1, arrow.kind);
    a["index"] = arrow.index;
    a["from"] = bits_to_string(arrow.from);
    a["to"] = bits_to_string(arrow.to);
    doc["arrows"].push_back(std::move(a));
  }
  doc["relations"] = nlohmann::ordered_json::array();
  for (int j : indices_) {
    doc["relations"].push_back("a" + std::to_string(j) + " b" +
                               std::to_string(j) + " = 0");
    doc["relations"].push_back("b" + std::to_string(j) + " a" +
                               std::to_string(j) + " = 0");
  }
  for (std::size_t s = 0; s < indices_.size(); ++s) {
    for (std::size_t t = s + 1; t < indices_.size(); ++t) {
      doc["relations"].push_back("arrows at " + std::to_string(indices_[s]) +
                                 " and " + std::to_string(indices_[t]) +
                                 " commute");
    }
  }
  doc["dimension"] = dimension();
  return doc.dump(2);
}

QuiverPresentation skeleton(const std::set<int>& J) {
  return QuiverPresentation(J);
}

std::vector<QuiverSimple> quiver_simples(std::size_t q) {
  std::vector<QuiverSimple> out;
  std::vector<int> bits(q, 0);
  while (true) {
    out.push_back(QuiverSimple{bits, "S[" + bits_to_string(bits) + "]"});
    std::size_t pos = q;
    while (pos > 0 && bits[pos - 1] == 1) bits[--pos] = 0;
    if (pos == 0) break;
    ++bits[pos - 1];
  }
  return out;
}

bool equivalence_check(const IdealCoordinates& c1, const IdealCoordinates& c2) {
  validate_coordinates(c1);
  validate_coordinates(c2);
  if (c1.rank() != c2.rank()) {
    throw InvalidParameter("coordinate vectors have different ranks");
  }
  int n = c1.rank();

  std::vector<long> k(n);
  for (int i = 1; i <= n; ++i) {
    auto kr = pure_power(c2.mu[i - 1] / c1.mu[i - 1], var_r(i));
    auto ks = pure_power(c2.nu[i - 1] / c1.nu[i - 1], var_s(i));
    if (!kr || !ks || *kr != *ks) {
      throw NotSameOrbit("coordinates are not related by a shift at index " +
                         std::to_string(i));
    }
    k[i - 1] = *kr;
  }

  BreakReport br = detect_breaks(c1);
  for (int j : br.J) {
    long wall = br.p.at(j);
    bool side1 = 0 > wall;
    bool side2 = k[j - 1] > wall;
    if (side1 != side2) return false;
  }
  return true;
}

}  // namespace mpweyl
