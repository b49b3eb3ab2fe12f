#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mpweyl/algebra.hpp"
#include "mpweyl/classify.hpp"
#include "mpweyl/errors.hpp"
#include "mpweyl/modules.hpp"
#include "mpweyl/parse.hpp"
#include "mpweyl/serialize.hpp"
#include "mpweyl/uqrs.hpp"

using nlohmann::ordered_json;

namespace {

enum class OutputMode { Json, Text };

OutputMode g_mode = OutputMode::Json;

void emit(const ordered_json& payload, const std::string& text) {
  if (g_mode == OutputMode::Text) {
    std::cout << text << "\n";
  } else {
    std::cout << payload.dump(2) << "\n";
  }
}

std::string error_type_name(const mpweyl::DomainError& e) {
  using namespace mpweyl;
  if (dynamic_cast<const SyntaxError*>(&e)) return "SyntaxError";
  if (dynamic_cast<const UnknownSymbol*>(&e)) return "UnknownSymbol";
  if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
  if (dynamic_cast<const UnsupportedIndex*>(&e)) return "UnsupportedIndex";
  if (dynamic_cast<const IndexOutOfRange*>(&e)) return "IndexOutOfRange";
  if (dynamic_cast<const NotSameOrbit*>(&e)) return "NotSameOrbit";
  if (dynamic_cast<const ZeroCoordinate*>(&e)) return "ZeroCoordinate";
  if (dynamic_cast<const ExpressionError*>(&e)) return "ExpressionError";
  if (dynamic_cast<const ZeroInput*>(&e)) return "ZeroInput";
  if (dynamic_cast<const InvalidParameter*>(&e)) return "InvalidParameter";
  return "DomainError";
}

int report_error(const std::string& type, const std::string& message,
                 int code) {
  if (g_mode == OutputMode::Text) {
    std::cerr << "error: " << message << "\n";
  } else {
    ordered_json out;
    out["error"]["type"] = type;
    out["error"]["message"] = message;
    std::cout << out.dump(2) << "\n";
  }
  return code;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<mpweyl::Scalar> parse_scalar_list(const std::string& text, int n,
                                              const std::string& what) {
  std::vector<mpweyl::Scalar> out;
  for (const auto& piece : split(text, ',')) {
    if (piece.empty()) {
      throw mpweyl::InvalidParameter("empty entry in " + what + " list");
    }
    out.push_back(
        mpweyl::scalar_value(mpweyl::parse_expression(piece, n), n));
  }
  return out;
}

std::vector<long> parse_int_list(const std::string& text,
                                 const std::string& what) {
  std::vector<long> out;
  for (const auto& piece : split(text, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::exception&) {
      throw mpweyl::InvalidParameter("bad integer '" + piece + "' in " + what +
                                     " list");
    }
  }
  return out;
}

mpweyl::BasisIndex parse_vector_arg(const std::string& text, bool whittaker) {
  auto halves = split(text, ';');
  if (whittaker) {
    if (halves.size() != 2) {
      throw mpweyl::InvalidParameter(
          "a whittaker vector needs the form k1,..,kn;l1,..,ln");
    }
    return mpweyl::whittaker_index(parse_int_list(halves[0], "vector"),
                                   parse_int_list(halves[1], "vector"));
  }
  if (halves.size() != 1) {
    throw mpweyl::InvalidParameter("this module family indexes by k1,..,kn");
  }
  return mpweyl::lattice_index(parse_int_list(halves[0], "vector"));
}

// ---------------------------------------------------------------------------
// Subcommand payload builders.
// ---------------------------------------------------------------------------

void run_normalize(int n, const std::string& expr) {
  mpweyl::AlgebraElement e =
      mpweyl::element_value(mpweyl::parse_expression(expr, n), n);
  emit(mpweyl::element_to_json(e, n), mpweyl::element_to_text(e));
}

void run_parse_check(int n, const std::string& expr) {
  mpweyl::Expression ast = mpweyl::parse_expression(expr, n);
  std::string formatted = mpweyl::format_expression(ast);
  mpweyl::Expression again = mpweyl::parse_expression(formatted, n);
  ordered_json out;
  out["ok"] = ast == again;
  out["formatted"] = formatted;
  emit(out, formatted);
}

struct ActArgs {
  int n = 0;
  std::string module;
  std::string vector_text;
  std::string expr;
  std::string lambda, zeta_rho, zeta_sigma, mu, nu, alpha, xi;
};

mpweyl::ModuleSpec build_module(const ActArgs& a) {
  using namespace mpweyl;
  if (a.module == "poly") {
    return ModuleSpec::polynomial(a.n);
  }
  if (a.module == "verma") {
    if (a.lambda.empty()) {
      throw InvalidParameter("verma needs --lambda");
    }
    std::vector<Scalar> lambda = parse_scalar_list(a.lambda, a.n, "lambda");
    auto signs = [&](const std::string& text) {
      std::vector<int> out(static_cast<std::size_t>(a.n), 1);
      if (text.empty()) return out;
      out.clear();
      for (long v : parse_int_list(text, "zeta")) {
        out.push_back(static_cast<int>(v));
      }
      return out;
    };
    return ModuleSpec::verma(lambda, signs(a.zeta_rho), signs(a.zeta_sigma));
  }
  if (a.module == "weight") {
    if (a.mu.empty() || a.nu.empty()) {
      throw InvalidParameter("weight needs --mu and --nu");
    }
    std::vector<Scalar> mu = parse_scalar_list(a.mu, a.n, "mu");
    std::vector<Scalar> nu = parse_scalar_list(a.nu, a.n, "nu");
    BreakReport br = detect_breaks(IdealCoordinates{mu, nu});
    if (br.J.empty()) {
      if (!a.alpha.empty()) {
        throw InvalidParameter(
            "--alpha only applies when the coordinates have breaks");
      }
      return ModuleSpec::weight_no_break(mu, nu);
    }
    if (a.alpha.empty()) {
      std::string js;
      for (int j : br.J) js += (js.empty() ? "" : ",") + std::to_string(j);
      throw InvalidParameter("coordinates break at J = {" + js +
                             "}; pass --alpha with one 0/1 per break index");
    }
    std::vector<long> bits = parse_int_list(a.alpha, "alpha");
    if (bits.size() != br.J.size()) {
      throw InvalidParameter("--alpha needs exactly " +
                             std::to_string(br.J.size()) + " entries");
    }
    std::map<int, int> alpha;
    std::size_t at = 0;
    for (int j : br.J) alpha[j] = static_cast<int>(bits[at++]);
    return ModuleSpec::weight_broken(mu, nu, alpha);
  }
  if (a.module == "whittaker") {
    if (a.xi.empty()) {
      throw InvalidParameter("whittaker needs --xi");
    }
    return ModuleSpec::whittaker(parse_scalar_list(a.xi, a.n, "xi"));
  }
  throw InvalidParameter("unknown module family '" + a.module + "'");
}

void run_act(const ActArgs& a) {
  using namespace mpweyl;
  ModuleSpec spec = build_module(a);
  BasisIndex start =
      parse_vector_arg(a.vector_text, spec.family() == Family::Whittaker);
  ModuleVector v = ModuleVector::unit(start);
  AlgebraElement e = element_value(parse_expression(a.expr, a.n), a.n);
  ModuleVector result = act_element(spec, e, v);
  emit(vector_to_json(result), vector_to_text(result));
}

void run_classify(int n, const std::string& mu_text,
                  const std::string& nu_text) {
  using namespace mpweyl;
  IdealCoordinates c{parse_scalar_list(mu_text, n, "mu"),
                     parse_scalar_list(nu_text, n, "nu")};
  BreakReport br = detect_breaks(c);
  std::vector<SimpleModuleDescriptor> simples = enumerate_simples(br);

  ordered_json out;
  out["J"] = ordered_json::array();
  for (int j : br.J) out["J"].push_back(j);
  ordered_json p = ordered_json::object(), sign = ordered_json::object();
  for (int j : br.J) {
    p[std::to_string(j)] = br.p.at(j);
    sign[std::to_string(j)] = br.sign.at(j);
  }
  out["p"] = std::move(p);
  out["sign"] = std::move(sign);
  ordered_json designated;
  designated["mu"] = ordered_json::array();
  designated["nu"] = ordered_json::array();
  for (const auto& v : br.designated.mu) {
    designated["mu"].push_back(v.to_string());
  }
  for (const auto& v : br.designated.nu) {
    designated["nu"].push_back(v.to_string());
  }
  out["designated"] = std::move(designated);
  out["simples"] = ordered_json::array();
  for (const auto& s : simples) {
    ordered_json d;
    d["alpha"] = ordered_json::object();
    for (const auto& [j, bit] : s.alpha) d["alpha"][std::to_string(j)] = bit;
    d["support"] = s.support_rule;
    out["simples"].push_back(std::move(d));
  }
  out["count"] = simples.size();

  std::string text;
  {
    std::string js;
    for (int j : br.J) js += (js.empty() ? "" : " ") + std::to_string(j);
    text += "J: " + (js.empty() ? "(none)" : js) + "\n";
    for (int j : br.J) {
      text += "p[" + std::to_string(j) + "] = " + std::to_string(br.p.at(j)) +
              "  sign[" + std::to_string(j) + "] = " +
              std::to_string(br.sign.at(j)) + "\n";
    }
    for (std::size_t i = 0; i < br.designated.mu.size(); ++i) {
      text += "designated[" + std::to_string(i + 1) + "]: mu = " +
              br.designated.mu[i].to_string() + "  nu = " +
              br.designated.nu[i].to_string() + "\n";
    }
    text += "simples: " + std::to_string(simples.size());
    for (const auto& s : simples) {
      std::string bits;
      for (const auto& [j, bit] : s.alpha) bits += std::to_string(bit);
      text += "\n  alpha=(" + bits + ")  support: " + s.support_rule;
    }
  }
  emit(out, text);
}

void run_skeleton(const std::set<int>& J, bool dot, bool json) {
  mpweyl::QuiverPresentation q = mpweyl::skeleton(J);
  if (dot) {
    std::cout << q.to_dot();
    return;
  }
  if (json || g_mode == OutputMode::Json) {
    std::cout << q.to_json() << "\n";
    return;
  }
  std::cout << q.to_dot();
}

void run_whittaker(int n, const std::string& xi_text, long box) {
  using namespace mpweyl;
  ModuleSpec spec = ModuleSpec::whittaker(parse_scalar_list(xi_text, n, "xi"));
  auto checks = check_module_relations(spec, box);
  CyclicityReport cyc = cyclicity_probe(
      spec,
      whittaker_index(std::vector<long>(static_cast<std::size_t>(n), 0),
                      std::vector<long>(static_cast<std::size_t>(n), 0)),
      box);

  bool relations_ok = true;
  ordered_json jchecks = ordered_json::array();
  std::string text;
  for (const auto& c : checks) {
    relations_ok = relations_ok && c.ok;
    ordered_json jc;
    jc["name"] = c.name;
    jc["ok"] = c.ok;
    if (!c.ok) jc["detail"] = c.detail;
    jchecks.push_back(std::move(jc));
    text += std::string(c.ok ? "ok    " : "FAIL  ") + c.name + "\n";
  }
  ordered_json out;
  out["relations"] = std::move(jchecks);
  out["relations_ok"] = relations_ok;
  out["cyclicity"]["reached"] = cyc.reached;
  out["cyclicity"]["box_points"] = cyc.box_points;
  out["cyclicity"]["complete"] = cyc.complete;
  text += "cyclicity: " + std::to_string(cyc.reached) + "/" +
          std::to_string(cyc.box_points) +
          (cyc.complete ? " complete" : " incomplete");
  emit(out, text);
  if (!relations_ok || !cyc.complete) {
    std::exit(1);
  }
}

void run_verify(int n) {
  using namespace mpweyl;
  auto presentation = verify_presentation(n);
  ordered_json jpres = ordered_json::array();
  bool all_ok = true;
  std::string text;
  for (const auto& c : presentation) {
    all_ok = all_ok && c.ok;
    ordered_json jc;
    jc["name"] = c.name;
    jc["ok"] = c.ok;
    jpres.push_back(std::move(jc));
    text += std::string(c.ok ? "ok    " : "FAIL  ") + c.name + "\n";
  }

  ordered_json jmods = ordered_json::array();
  auto run_family = [&](const std::string& label, const ModuleSpec& spec,
                        long box) {
    bool family_ok = true;
    for (const auto& c : check_module_relations(spec, box)) {
      family_ok = family_ok && c.ok;
    }
    all_ok = all_ok && family_ok;
    ordered_json jm;
    jm["module"] = label;
    jm["ok"] = family_ok;
    jmods.push_back(std::move(jm));
    text += std::string(family_ok ? "ok    " : "FAIL  ") + "module " + label +
            "\n";
  };
  run_family("polynomial", ModuleSpec::polynomial(n), 2);
  std::vector<Scalar> lambda;
  for (int i = 1; i <= n; ++i) {
    lambda.push_back(Scalar::parameter("lambda" + std::to_string(i)));
  }
  run_family("verma", ModuleSpec::verma(lambda,
                                        std::vector<int>(
                                            static_cast<std::size_t>(n), 1),
                                        std::vector<int>(
                                            static_cast<std::size_t>(n), 1)),
             2);
  std::vector<Scalar> xi;
  for (int i = 1; i <= n; ++i) {
    xi.push_back(Scalar::parameter("xi" + std::to_string(i)));
  }
  run_family("whittaker", ModuleSpec::whittaker(xi), 1);

  ordered_json out;
  out["presentation"] = std::move(jpres);
  out["modules"] = std::move(jmods);
  out["ok"] = all_ok;
  text += all_ok ? "all checks passed" : "some checks failed";
  emit(out, text);
  if (!all_ok) std::exit(1);
}

void run_uqrs_verify(int n) {
  using namespace mpweyl;
  auto checks = verify_u_relations(n);
  bool all_ok = true;
  ordered_json jchecks = ordered_json::array();
  std::string text;
  for (const auto& c : checks) {
    all_ok = all_ok && c.ok;
    ordered_json jc;
    jc["name"] = c.name;
    jc["ok"] = c.ok;
    if (!c.ok) jc["residual"] = element_to_text(c.residual);
    jchecks.push_back(std::move(jc));
    text += std::string(c.ok ? "ok    " : "FAIL  ") + c.name + "\n";
  }
  ordered_json out;
  out["checks"] = std::move(jchecks);
  out["ok"] = all_ok;
  text += all_ok ? "all relations hold" : "some relations fail";
  emit(out, text);
  if (!all_ok) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* fmt = std::getenv("MPWEYL_FORMAT")) {
    std::string value(fmt);
    if (value == "text") {
      g_mode = OutputMode::Text;
    } else if (value == "json") {
      g_mode = OutputMode::Json;
    } else {
      return report_error("UsageError",
                          "MPWEYL_FORMAT must be 'json' or 'text'", 2);
    }
  }

  CLI::App app{"Exact computation in a multiparameter quantized Weyl algebra"};
  app.require_subcommand(1);

  int norm_n = 0;
  std::string norm_expr;
  auto* norm = app.add_subcommand("normalize",
                                  "Rewrite an expression into the normal "
                                  "monomial basis");
  norm->add_option("-n", norm_n, "rank")->required();
  norm->add_option("expr", norm_expr, "expression")->required();
  norm->callback([&] { run_normalize(norm_n, norm_expr); });

  ActArgs act_args;
  auto* act = app.add_subcommand("act", "Act by an element on a module vector");
  act->add_option("-n", act_args.n, "rank")->required();
  act->add_option("--module", act_args.module, "module family")
      ->required()
      ->check(CLI::IsMember({"poly", "verma", "weight", "whittaker"}));
  act->add_option("--vector", act_args.vector_text,
                  "basis vector k1,..,kn (whittaker: k1,..;l1,..)")
      ->required();
  act->add_option("--lambda", act_args.lambda, "verma highest weight");
  act->add_option("--zeta-rho", act_args.zeta_rho, "verma rho signs");
  act->add_option("--zeta-sigma", act_args.zeta_sigma, "verma sigma signs");
  act->add_option("--mu", act_args.mu, "weight coordinates for rho");
  act->add_option("--nu", act_args.nu, "weight coordinates for sigma");
  act->add_option("--alpha", act_args.alpha, "corner bits at break indices");
  act->add_option("--xi", act_args.xi, "whittaker type");
  act->add_option("expr", act_args.expr, "expression")->required();
  act->callback([&] { run_act(act_args); });

  int cls_n = 0;
  std::string cls_mu, cls_nu;
  auto* cls = app.add_subcommand(
      "classify", "Break analysis and simple modules of a weight orbit");
  cls->add_option("-n", cls_n, "rank")->required();
  cls->add_option("--mu", cls_mu, "rho coordinates")->required();
  cls->add_option("--nu", cls_nu, "sigma coordinates")->required();
  cls->callback([&] { run_classify(cls_n, cls_mu, cls_nu); });

  std::string skel_J;
  int skel_n = 0;
  bool skel_dot = false, skel_json = false;
  auto* skel = app.add_subcommand("skeleton",
                                  "Quiver presentation of a break pattern");
  skel->add_option("-J", skel_J, "break indices, comma separated")->required();
  skel->add_option("-n", skel_n, "rank (optional, bounds the indices)");
  skel->add_flag("--dot", skel_dot, "emit DOT");
  skel->add_flag("--json", skel_json, "emit JSON");
  skel->callback([&] {
    if (skel_dot && skel_json) {
      throw mpweyl::InvalidParameter("choose one of --dot and --json");
    }
    std::set<int> J;
    if (!skel_J.empty()) {
      for (long v : parse_int_list(skel_J, "J")) {
        if (v < 1 || (skel_n > 0 && v > skel_n)) {
          throw mpweyl::InvalidParameter("break index " + std::to_string(v) +
                                         " out of range");
        }
        J.insert(static_cast<int>(v));
      }
    }
    run_skeleton(J, skel_dot, skel_json);
  });

  int whit_n = 0;
  std::string whit_xi;
  long whit_box = 2;
  auto* whit = app.add_subcommand(
      "whittaker", "Relation and cyclicity report for a whittaker module");
  whit->add_option("-n", whit_n, "rank")->required();
  whit->add_option("--xi", whit_xi, "type scalars")->required();
  whit->add_option("--box", whit_box, "box radius (default 2)");
  whit->callback([&] { run_whittaker(whit_n, whit_xi, whit_box); });

  int ver_n = 0;
  auto* ver = app.add_subcommand(
      "verify", "Presentation and module relation suites");
  ver->add_option("-n", ver_n, "rank")->required();
  ver->callback([&] { run_verify(ver_n); });

  int uq_n = 0;
  auto* uq = app.add_subcommand("uqrs-verify",
                                "Quantum group relations through the "
                                "realization");
  uq->add_option("-n", uq_n, "rank")->required();
  uq->callback([&] { run_uqrs_verify(uq_n); });

  int pc_n = 0;
  std::string pc_expr;
  auto* pc = app.add_subcommand("parse-check",
                                "Parse an expression and print its canonical "
                                "form");
  pc->add_option("-n", pc_n, "rank")->required();
  pc->add_option("expr", pc_expr, "expression")->required();
  pc->callback([&] { run_parse_check(pc_n, pc_expr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return report_error("UsageError", e.what(), 2);
  } catch (const mpweyl::DomainError& e) {
    return report_error(error_type_name(e), e.what(), 1);
  } catch (const std::exception& e) {
    return report_error("InternalError", e.what(), 1);
  }
  return 0;
}
