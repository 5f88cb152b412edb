#include "snc/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <span>
#include <sstream>

#include "sn/serialize.hpp"
#include "sn/sn.hpp"
#include "snc/eval.hpp"
#include "snc/parser.hpp"
#include "snc/verify_suite.hpp"

namespace snc {

using sn::CoordSet;

namespace {

/// Malformed JSON or automorphism text; reported with the parse exit code.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "@path" reads a file, "-" reads stdin, anything else is literal.
std::string read_argument(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  if (arg.size() > 1 && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw sn::ArgumentError("cannot read " + arg.substr(1));
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  return arg;
}

Value eval_arg(const std::string& arg, int n) { return evaluate_text(read_argument(arg), n); }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad integer list '" + text + "'");
    }
  }
  return out;
}

CoordSet coord_set(const std::string& text, int n) {
  const std::vector<int> v = parse_int_list(text);
  for (int i : v)
    if (i < 1 || i > n) throw InputError("coordinate " + std::to_string(i) + " outside 1.." + std::to_string(n));
  return CoordSet(std::span<const int>(v));
}

sn::IdealSpec ideal_spec(const std::string& text, int n) {
  sn::IdealSpec spec;
  if (text == "F") {
    spec = sn::IdealSpec::matrix_ideal();
  } else if (text.rfind("p:", 0) == 0) {
    spec = sn::IdealSpec::prime_set(coord_set(text.substr(2), n));
  } else if (text.rfind("a:", 0) == 0) {
    const std::vector<int> s = parse_int_list(text.substr(2));
    if (s.size() != 1) throw InputError("ideal a:s takes one level");
    spec = sn::IdealSpec::level_sum(s[0]);
  } else {
    throw InputError("ideal must be p:I, a:s or F, got '" + text + "'");
  }
  spec.validate(n);
  return spec;
}

sn::Json parse_json(const std::string& text) {
  try {
    return sn::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

/// Automorphism JSON; "u" may also be an expression string, and a missing
/// "u_inv" is searched for.
sn::Automorphism automorphism_arg(const std::string& arg, int n) {
  sn::Json j = parse_json(read_argument(arg));
  if (!j.is_object()) throw InputError("automorphism must be a JSON object");
  if (!j.contains("n")) j["n"] = n;
  if (!j.at("n").is_number_integer()) throw InputError("automorphism \"n\" must be an integer");
  sn::require_same_n(n, j.at("n").get<int>());
  if (!j.contains("perm")) {
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i + 1;
    j["perm"] = id;
  }
  if (!j.contains("lambda")) j["lambda"] = std::vector<int>(static_cast<std::size_t>(n), 1);
  std::optional<Value> u;
  if (j.contains("u") && j["u"].is_string()) {
    u = evaluate_text(j["u"].get<std::string>(), n);
    j["u"] = sn::to_json(u->element);
  }
  if (j.contains("u_inv") && j["u_inv"].is_string())
    j["u_inv"] = sn::to_json(evaluate_text(j["u_inv"].get<std::string>(), n).element);
  if (j.contains("u") && !j.contains("u_inv")) {
    if (!u) u = Value{sn::element_from_json(j["u"]), std::nullopt};
    j["u_inv"] = sn::to_json(require_inverse(*u));
  }
  return sn::automorphism_from_json(j);
}

sn::Stabilization stabilization(int window, int cap) {
  sn::Stabilization s;
  s.window = window;
  s.cap = cap;
  return s;
}

sn::PolyElement as_polynomial(const sn::Element& a) {
  sn::PolyElement p(a.n());
  for (const auto& [m, q] : a.terms()) {
    if (!m.beta.is_zero()) throw sn::ArgumentError("polynomial argument must not contain y variables");
    p.add_term(m.alpha, q);
  }
  return p;
}

sn::Json strings_json(const std::vector<sn::Element>& v) {
  sn::Json arr = sn::Json::array();
  for (const auto& e : v) arr.push_back(sn::to_string(e));
  return arr;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the algebra of one-sided inverses S_n", "sn-calc"};
  app.require_subcommand(1);
  int n = 0;
  app.add_option("--n", n, "number of variable pairs")->envname("SN_CALC_N")->required()->check(CLI::Range(1, sn::kMaxVars));

  std::string expr;
  std::string second;
  bool json = false;
  std::string ideal;
  int window = 3;
  int cap = -1;
  std::optional<int> coord;
  bool det_path = false;
  int level = 1;
  std::string J;
  std::optional<int> chi_level;
  bool exotic = false;
  std::vector<std::string> filter;
  std::optional<int> suite_n;
  std::uint64_t seed = 1;
  bool full = false;
  bool list = false;

  auto expr_command = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("expr", expr, "expression, @file or -")->required();
    return c;
  };
  auto stab_options = [&](CLI::App* c) {
    c->add_option("--window", window, "consecutive equal dimensions required")->check(CLI::PositiveNumber);
    c->add_option("--cap", cap, "largest truncation degree (default 4*deg+8)");
  };

  CLI::App* eval_cmd = expr_command("eval", "canonical monomial form");
  eval_cmd->add_flag("--json", json, "element JSON");
  CLI::App* mixed_cmd = expr_command("mixed", "mixed-basis form");
  CLI::App* act_cmd = expr_command("act", "apply to a polynomial in x1..xn");
  act_cmd->add_option("poly", second, "polynomial expression")->required();
  CLI::App* member_cmd = expr_command("member", "ideal membership (p:I, a:s or F)");
  member_cmd->add_option("--ideal", ideal, "p:1,2 | a:2 | F")->required();
  CLI::App* index_cmd = expr_command("index", "kernel, cokernel and index on P_n");
  stab_options(index_cmd);
  CLI::App* indi_cmd = expr_command("ind-i", "componentwise indices of a unit of 1 + a_{n,n-1}");
  indi_cmd->add_option("--i", coord, "single coordinate");
  indi_cmd->add_flag("--det", det_path, "use the determinant degree");
  stab_options(indi_cmd);
  CLI::App* psi_cmd = expr_command("psi-prime", "lattice image of a unit of 1 + a_{n,s}");
  psi_cmd->add_option("--s", level, "level s")->required();
  psi_cmd->add_flag("--json", json, "lattice JSON");
  CLI::App* chi_cmd = app.add_subcommand("chi", "chi_J of a lattice vector (JSON) or of psi_prime(expr)");
  chi_cmd->add_option("arg", expr, "lattice JSON or expression")->required();
  chi_cmd->add_option("--J", J, "coordinates, e.g. 1,2")->required();
  chi_cmd->add_option("--s", chi_level, "level for expressions (default |J| - 1)");
  CLI::App* invert_cmd = expr_command("invert", "two-sided inverse");
  invert_cmd->add_flag("--json", json, "element JSON");
  CLI::App* factor_cmd = expr_command("factor-nn1", "theta word times factors from 1 + p_{C{k}}");
  stab_options(factor_cmd);
  CLI::App* compose_cmd = app.add_subcommand("aut-compose", "compose two automorphisms (JSON)");
  compose_cmd->add_option("first", expr, "automorphism JSON or @file")->required();
  compose_cmd->add_option("second", second, "automorphism JSON or @file")->required();
  CLI::App* jac_cmd = app.add_subcommand("jacobian", "Jacobian of an automorphism (JSON)");
  jac_cmd->add_option("aut", expr, "automorphism JSON or @file")->required();
  jac_cmd->add_flag("--exotic", exotic, "exotic Jacobian (n <= 2)");
  CLI::App* abel_cmd = app.add_subcommand("abelian-class", "image in the abelianization");
  abel_cmd->add_option("aut", expr, "automorphism JSON or @file")->required();
  abel_cmd->add_flag("--json", json, "JSON output");
  CLI::App* suite_cmd = app.add_subcommand("verify-suite", "check every identity family");
  std::vector<std::string> suite_ids;
  for (const auto& e : suite_entries()) suite_ids.push_back(e.id);
  suite_cmd->add_option("--filter", filter, "identity id (repeatable)")->check(CLI::IsMember(suite_ids));
  suite_cmd->add_option("--n", suite_n, "only this ambient dimension")->check(CLI::Range(1, sn::kMaxVars));
  suite_cmd->add_option("--seed", seed, "sampler seed");
  suite_cmd->add_flag("--full", full, "full sample counts");
  suite_cmd->add_flag("--list", list, "list ids and exit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (eval_cmd->parsed()) {
      const Value v = eval_arg(expr, n);
      out << (json ? sn::to_json(v.element).dump() : sn::to_string(v.element)) << "\n";
    } else if (mixed_cmd->parsed()) {
      out << sn::to_string(sn::to_mixed(eval_arg(expr, n).element)) << "\n";
    } else if (act_cmd->parsed()) {
      const Value a = eval_arg(expr, n);
      out << sn::to_string(sn::apply(a.element, as_polynomial(eval_arg(second, n).element))) << "\n";
    } else if (member_cmd->parsed()) {
      const sn::IdealSpec spec = ideal_spec(ideal, n);
      out << (sn::ideal_member(eval_arg(expr, n).element, spec) ? "true" : "false") << "\n";
    } else if (index_cmd->parsed()) {
      out << sn::to_json(sn::index(eval_arg(expr, n).element, stabilization(window, cap))).dump() << "\n";
    } else if (indi_cmd->parsed()) {
      const sn::Element u = eval_arg(expr, n).element;
      const auto one = [&](int i) {
        return det_path ? sn::ind_i_det(u, i) : sn::ind_i(u, i, stabilization(window, cap));
      };
      if (coord) {
        if (*coord < 1 || *coord > n) throw sn::ArgumentError("--i outside 1..n");
        out << one(*coord) << "\n";
      } else {
        std::vector<int> v;
        for (int i = 1; i <= n; ++i) v.push_back(one(i));
        out << sn::Json{{"ind", v}}.dump() << "\n";
      }
    } else if (psi_cmd->parsed()) {
      const sn::LatticeVector v = sn::psi_prime(eval_arg(expr, n).element, level);
      out << (json ? sn::to_json(v).dump() : sn::to_string(v)) << "\n";
    } else if (chi_cmd->parsed()) {
      const CoordSet set = coord_set(J, n);
      const std::string text = read_argument(expr);
      const auto first = text.find_first_not_of(" \t\r\n");
      sn::LatticeVector v;
      if (first != std::string::npos && text[first] == '[') {
        v = sn::lattice_from_json(parse_json(text));
      } else {
        v = sn::psi_prime(evaluate_text(text, n).element, chi_level.value_or(set.size() - 1));
      }
      out << sn::chi(set, v) << "\n";
    } else if (invert_cmd->parsed()) {
      Value v = eval_arg(expr, n);
      const sn::Element inv = require_inverse(v);
      out << (json ? sn::to_json(inv).dump() : sn::to_string(inv)) << "\n";
    } else if (factor_cmd->parsed()) {
      Value v = eval_arg(expr, n);
      const sn::Element inv = require_inverse(v);
      const sn::CorankOneFactorization f = sn::factor_ann1(v.element, inv, stabilization(window, cap));
      sn::Json j = {{"exponents", f.exponents},
                    {"theta_word", sn::to_string(sn::word_to_element(f.theta_word))},
                    {"factors", strings_json(f.factors)},
                    {"factor_inverses", strings_json(f.factor_inverses)}};
      out << j.dump() << "\n";
    } else if (compose_cmd->parsed()) {
      const sn::Automorphism a = automorphism_arg(expr, n);
      const sn::Automorphism b = automorphism_arg(second, n);
      out << sn::to_json(sn::aut_compose(a, b)).dump() << "\n";
    } else if (jac_cmd->parsed()) {
      const sn::Automorphism a = automorphism_arg(expr, n);
      out << sn::format_scalar(exotic ? sn::jacobian_exotic(a) : sn::jacobian(a)) << "\n";
    } else if (abel_cmd->parsed()) {
      const sn::AbelianClass c = sn::abelianization_class(automorphism_arg(expr, n));
      out << (json ? sn::to_json(c).dump() : sn::to_string(c)) << "\n";
    } else if (suite_cmd->parsed()) {
      if (list) {
        for (const auto& e : suite_entries()) out << e.id << "\n";
        return kOk;
      }
      SuiteOptions opts;
      opts.n = suite_n;
      opts.seed = seed;
      opts.filter = filter;
      opts.full = full;
      int failed = 0;
      int passed = 0;
      run_suite(opts, [&](const SuiteResult& r) {
        out << result_line(r) << std::endl;
        if (!r.skipped) (r.check.passed() ? passed : failed)++;
      });
      out << passed << " passed, " << failed << " failed\n";
      return failed == 0 ? kOk : kVerification;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InputError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const sn::FactorizationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerification;
  } catch (const sn::Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}

}  // namespace snc
