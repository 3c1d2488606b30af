// Command-line interface for the deformed diagram algebra: products,
// codings, expansions, factorizations and verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ldiag/coalg.hpp"
#include "ldiag/diagram.hpp"
#include "ldiag/errors.hpp"
#include "ldiag/law.hpp"
#include "ldiag/structure.hpp"
#include "ldiag/text.hpp"
#include "ldiag/verify.hpp"

namespace {

using nlohmann::json;
using namespace ldiag;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;

struct Params {
  std::string qc = "sym";
  std::string qs = "sym";
  std::string format = "text";

  LawParams law() const { return {parse_param(qc, "--qc"), parse_param(qs, "--qs")}; }
  bool json_output() const { return format == "json"; }

  static std::optional<long long> parse_param(const std::string& s, const char* flag) {
    if (s == "sym") return std::nullopt;
    try {
      std::size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw Error(std::string(flag) + " expects an integer or \"sym\", got \"" + s + "\"");
    }
  }
};

void add_param_flags(CLI::App* cmd, Params& p) {
  cmd->add_option("--qc", p.qc, "value for qc: integer or \"sym\"")->capture_default_str();
  cmd->add_option("--qs", p.qs, "value for qs: integer or \"sym\"")->capture_default_str();
  cmd->add_option("--format", p.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

Lin apply_params(const Lin& l, const Params& p) { return p.law().apply(l); }

DiagLin apply_params(const DiagLin& l, const Params& p) {
  const LawParams law = p.law();
  if (law.symbolic()) return l;
  DiagLin r;
  for (const auto& [d, c] : l.terms()) r.add(d, law.apply(c));
  return r;
}

// Diagram argument: inline JSON (starting with '{') or a file path.
Diagram read_diagram_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '{') return diagram_from_json(arg);
  std::ifstream in(arg);
  if (!in) throw Error("cannot open diagram file \"" + arg + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return diagram_from_json(buf.str());
}

json lin_terms_json(const Lin& l) {
  json terms = json::array();
  for (const auto& [w, c] : l.terms())
    terms.push_back({{"coeff", render_coeff(c)}, {"word", render_word(w)}});
  return terms;
}

json profile_json(const std::map<int, int>& m) {
  json o = json::object();
  for (const auto& [deg, count] : m) o[std::to_string(deg)] = count;
  return o;
}

std::string profile_text(const std::map<int, int>& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [deg, count] : m) {
    if (!first) os << ',';
    first = false;
    os << deg << ':' << count;
  }
  os << '}';
  return os.str();
}

int cmd_product(const std::string& u_text, const std::string& v_text, const Params& p,
                bool no_shift) {
  Word u = parse_word(u_text), v = parse_word(v_text);
  Lin result = apply_params(no_shift ? infil(u, v) : infil_shifted(u, v), p);
  if (p.json_output()) {
    json out = {{"command", "product"},
                {"left", render_word(u)},
                {"right", render_word(v)},
                {"shifted", !no_shift},
                {"qc", p.qc},
                {"qs", p.qs},
                {"result", render_lin(result)},
                {"terms", lin_terms_json(result)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render_lin(result) << "\n";
  }
  return kExitOk;
}

int cmd_diagram_product(const std::string& a1, const std::string& a2, const Params& p) {
  Diagram d1 = read_diagram_arg(a1), d2 = read_diagram_arg(a2);
  DiagLin result = apply_params(shs_product(d1, d2), p);
  if (p.json_output()) {
    json terms = json::array();
    for (const auto& [d, c] : result.terms())
      terms.push_back({{"coeff", render_coeff(c)},
                       {"code", render_word(code(d))},
                       {"diagram", json::parse(diagram_to_json(d))}});
    json out = {{"command", "diagram-product"},
                {"qc", p.qc},
                {"qs", p.qs},
                {"terms", terms}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [d, c] : result.terms())
      std::cout << render_coeff(c) << " :: " << render_word(code(d)) << " :: "
                << diagram_to_json(d) << "\n";
  }
  return kExitOk;
}

int cmd_code(const std::string& arg, const Params& p) {
  Diagram d = read_diagram_arg(arg);
  if (p.json_output())
    std::cout << json{{"command", "code"}, {"word", render_word(code(d))}}.dump(2) << "\n";
  else
    std::cout << render_word(code(d)) << "\n";
  return kExitOk;
}

int cmd_decode(const std::string& w_text, const Params& p) {
  Diagram d = decode(parse_word(w_text));
  if (p.json_output()) {
    json out = {{"command", "decode"},
                {"diagram", json::parse(diagram_to_json(d))},
                {"p", d.black_count()},
                {"q", d.white_count()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << diagram_to_json(d) << "\n";
  }
  return kExitOk;
}

int cmd_expand(int n, int bound, const Params& p) {
  auto rows = expand(n, bound);
  long long total = 0;
  for (const auto& r : rows) total += r.mult;
  const long long expected = fubini(n) * fubini(n);
  if (p.json_output()) {
    json jrows = json::array();
    for (const auto& r : rows)
      jrows.push_back({{"code", render_word(code(r.diagram))},
                       {"diagram", json::parse(diagram_to_json(r.diagram))},
                       {"mult", r.mult},
                       {"alpha", profile_json(r.profile.alpha)},
                       {"beta", profile_json(r.profile.beta)}});
    json out = {{"command", "expand"},
                {"n", n},
                {"rows", jrows},
                {"total", total},
                {"fubini_squared", expected}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n=" << n << "\n";
    for (const auto& r : rows)
      std::cout << render_word(code(r.diagram)) << "\t" << r.mult << "\talpha="
                << profile_text(r.profile.alpha) << "\tbeta=" << profile_text(r.profile.beta)
                << "\n";
    std::cout << "total = " << total << " ; fubini(" << n << ")^2 = " << expected << "\n";
  }
  return total == expected ? kExitOk : kExitVerifyFailure;
}

int cmd_factor(const std::string& w_text, const Params& p) {
  Word w = parse_word(w_text);
  Factorization f = factorize(w);
  std::vector<bool> is_code;
  for (const Word& factor : f.factors) {
    bool ok = true;
    try {
      decode(factor);
    } catch (const NotACodeError&) {
      ok = false;
    }
    is_code.push_back(ok);
  }
  if (p.json_output()) {
    json jf = json::array();
    for (std::size_t i = 0; i < f.factors.size(); ++i)
      jf.push_back({{"word", render_word(f.factors[i])}, {"is_code", bool(is_code[i])}});
    json out = {{"command", "factor"},
                {"word", render_word(w)},
                {"factors", jf},
                {"length", f.length()}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < f.factors.size(); ++i)
      std::cout << render_word(f.factors[i]) << (is_code[i] ? "" : "  (not a diagram code)")
                << "\n";
    std::cout << "l(w) = " << f.length() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, unsigned long long seed, int max_degree,
               const Params& p) {
  auto reports = run_verify(suite, seed, max_degree);
  bool all_ok = true;
  if (p.json_output()) {
    json jr = json::array();
    for (const auto& r : reports) {
      jr.push_back({{"suite", r.suite},
                    {"passed", r.passed},
                    {"checks", r.checks},
                    {"detail", r.detail}});
      all_ok = all_ok && r.passed;
    }
    std::cout << json{{"command", "verify"}, {"seed", seed}, {"reports", jr}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << " (" << r.checks
                << " checks)";
      if (!r.detail.empty()) std::cout << " -- " << r.detail;
      std::cout << "\n";
      all_ok = all_ok && r.passed;
    }
  }
  return all_ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact deformed algebra of labelled bipartite diagrams"};
  app.require_subcommand(1);

  Params params;
  std::string arg_u, arg_v, suite;
  bool no_shift = false;
  int expand_n = 0, expand_bound = 5, max_degree = 0;
  unsigned long long seed = 0;

  CLI::App* product = app.add_subcommand("product", "deformed product of two words");
  product->add_option("u", arg_u, "left word")->required();
  product->add_option("v", arg_v, "right word")->required();
  product->add_flag("--no-shift", no_shift, "use the unshifted law");
  add_param_flags(product, params);

  CLI::App* dproduct =
      app.add_subcommand("diagram-product", "deformed product of two diagrams");
  dproduct->add_option("d1", arg_u, "left diagram (JSON or file)")->required();
  dproduct->add_option("d2", arg_v, "right diagram (JSON or file)")->required();
  add_param_flags(dproduct, params);

  CLI::App* code_cmd = app.add_subcommand("code", "word of monomials encoding a diagram");
  code_cmd->add_option("diagram", arg_u, "diagram (JSON or file)")->required();
  add_param_flags(code_cmd, params);

  CLI::App* decode_cmd = app.add_subcommand("decode", "diagram encoded by a word");
  decode_cmd->add_option("word", arg_u, "code word")->required();
  add_param_flags(decode_cmd, params);

  CLI::App* expand_cmd =
      app.add_subcommand("expand", "diagrams of a given order with multiplicities");
  expand_cmd->add_option("n", expand_n, "number of edges")->required();
  expand_cmd->add_option("--bound", expand_bound, "enumeration bound")->capture_default_str();
  add_param_flags(expand_cmd, params);

  CLI::App* factor_cmd = app.add_subcommand("factor", "irreducible factorization of a word");
  factor_cmd->add_option("word", arg_u, "word to factor")->required();
  add_param_flags(factor_cmd, params);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suites_help = "suite: all";
  for (const auto& name : suite_names()) suites_help += ", " + name;
  verify_cmd->add_option("suite", suite, suites_help)->required();
  verify_cmd->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
  verify_cmd->add_option("--max-degree", max_degree, "size bound (0 = suite default)")
      ->capture_default_str();
  add_param_flags(verify_cmd, params);

  CLI11_PARSE(app, argc, argv);

  try {
    if (product->parsed()) return cmd_product(arg_u, arg_v, params, no_shift);
    if (dproduct->parsed()) return cmd_diagram_product(arg_u, arg_v, params);
    if (code_cmd->parsed()) return cmd_code(arg_u, params);
    if (decode_cmd->parsed()) return cmd_decode(arg_u, params);
    if (expand_cmd->parsed()) return cmd_expand(expand_n, expand_bound, params);
    if (factor_cmd->parsed()) return cmd_factor(arg_u, params);
    if (verify_cmd->parsed()) return cmd_verify(suite, seed, max_degree, params);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
