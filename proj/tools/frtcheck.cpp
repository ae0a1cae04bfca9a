#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "onsager/suites.hpp"

using namespace onsager;

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Scalar parse_rational(const std::string& text) {
  Expr e = parse_expr(text);
  LaurentPoly p = eval_scalar(e);
  if (!p.is_constant()) throw InputError("'" + text + "' is not a rational number");
  return p.constant_term();
}

void bind(Bindings_& b, const std::string& kv) {
  auto eq = kv.find('=');
  if (eq == std::string::npos) throw InputError("parameter '" + kv + "' must have the form name=value");
  std::string name = trim(kv.substr(0, eq));
  if (name.empty()) throw InputError("empty parameter name in '" + kv + "'");
  b[name] = parse_rational(trim(kv.substr(eq + 1)));
}

std::vector<Scalar> parse_list(const std::string& s) {
  std::vector<Scalar> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(trim(item)));
  return out;
}

struct Config {
  std::optional<int> N;
  std::optional<int> trunc;
  std::string format, interpretation, w;
  Bindings_ params;
  std::vector<Scalar> alphas;
};

int to_int(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::logic_error&) {
    throw InputError("config key '" + key + "' needs an integer, got '" + v + "'");
  }
}

Config read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  Config c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (k == "N") c.N = to_int(v, k);
    else if (k == "trunc") c.trunc = to_int(v, k);
    else if (k == "format") c.format = v;
    else if (k == "interpretation") c.interpretation = v;
    else if (k == "w") c.w = v;
    else if (k == "alphas") c.alphas = parse_list(v);
    else if (k.rfind("param.", 0) == 0) bind(c.params, k.substr(6) + "=" + v);
    else throw InputError(path + ":" + std::to_string(lineno) + ": unknown key '" + k + "'");
  }
  return c;
}

// alphas=a0,a1,... fills the quotient parameter names for the chosen N.
void bind_alphas(Bindings_& b, const std::vector<Scalar>& a, int n) {
  if (a.empty()) return;
  if (static_cast<int>(a.size()) == n + 1 && a[n] != Scalar(1)) throw InputError("alphas must end with alpha_N = 1");
  if (static_cast<int>(a.size()) != n && static_cast<int>(a.size()) != n + 1)
    throw InputError("alphas needs N values (alpha_0..alpha_{N-1})");
  QuotientO s = QuotientO::symbolic(n);
  for (int k = 0; k < n; ++k) {
    const LaurentPoly& name = s.alphas()[k];
    for (const auto& v : name.variables()) b.emplace(v.name(), a[k]);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of FRT presentations of the Onsager algebra and its quotients"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string suite, format = "text", interpretation, wlist, config, expr, presentation = "onsager", dir;
  std::vector<std::string> params;
  int n = 0, p = 0, j = 0, trunc = 0;
  bool no_timing = false;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required();
  auto* optN = verify->add_option("--N", n, "quotient order");
  verify->add_option("--param", params, "bind a symbolic parameter, name=value")->take_all();
  auto* optF = verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  auto* optT = verify->add_option("--trunc", trunc, "series truncation degree");
  auto* optW = verify->add_option("--w", wlist, "comma-separated evaluation points");
  auto* optI = verify->add_option("--interpretation", interpretation);
  verify->add_option("--config", config, "key=value defaults file");
  verify->add_flag("--no-timing", no_timing, "report 0 for every timing");

  auto* reduce = app.add_subcommand("reduce", "normal form in a quotient");
  reduce->add_option("--N", n)->required();
  reduce->add_option("--expr", expr)->required();
  reduce->add_option("--presentation", presentation)->check(CLI::IsMember({"onsager", "alt"}));
  reduce->add_option("--param", params)->take_all();

  auto* up = app.add_subcommand("upoly", "U-polynomial coefficient U_{p,j}");
  up->add_option("--N", n)->required();
  up->add_option("--p", p)->required();
  up->add_option("--j", j)->required();
  up->add_option("--param", params)->take_all();

  auto* conv = app.add_subcommand("convert", "change of presentation");
  conv->add_option("--dir", dir)->required()->check(CLI::IsMember({"to-alt", "to-ons"}));
  conv->add_option("--expr", expr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Bindings_ b;
    if (verify->parsed()) {
      SuiteOptions o;
      if (!config.empty()) {
        Config c = read_config(config);
        o.N = c.N;
        o.trunc = c.trunc;
        o.params = c.params;
        if (!c.format.empty() && !*optF) format = c.format;
        if (!c.interpretation.empty()) o.interpretation = c.interpretation;
        if (!c.w.empty()) o.w = parse_list(c.w);
        if (!c.alphas.empty()) bind_alphas(o.params, c.alphas, o.N.value_or(static_cast<int>(c.alphas.size())));
        if (format != "json" && format != "text") throw InputError("format must be json or text");
      }
      if (*optN) o.N = n;
      if (*optT) o.trunc = trunc;
      if (*optW) o.w = parse_list(wlist);
      if (*optI) o.interpretation = interpretation;
      for (const auto& kv : params) bind(o.params, kv);
      Report r = run_suite(suite, o);
      if (format == "json") std::cout << r.to_json(!no_timing).dump(2) << "\n";
      else std::cout << r.to_text(!no_timing);
      return r.passed() ? 0 : 1;
    }
    for (const auto& kv : params) bind(b, kv);
    if (reduce->parsed()) {
      if (n < 1) throw InputError("N must be >= 1");
      Expr e = parse_expr(expr);
      if (presentation == "alt") {
        QuotientA qa = make_quotient_a(n, b);
        std::cout << qa.reduce(eval_alt(e, b)).to_string() << "\n";
      } else {
        QuotientO q = make_quotient(n, b);
        std::cout << q.reduce(eval_onsager(e, b)).to_string() << "\n";
      }
      return 0;
    }
    if (up->parsed()) {
      if (n < 1) throw InputError("N must be >= 1");
      if (p < 0) throw InputError("p must be >= 0");
      if (j < -n + 1 || j > n) throw InputError("j must lie in [-N+1, N]");
      std::cout << upoly(make_quotient(n, b), p, j).to_string() << "\n";
      return 0;
    }
    if (conv->parsed()) {
      Expr e = parse_expr(expr);
      if (dir == "to-alt") std::cout << convert_to_alt(eval_onsager(e)).to_string() << "\n";
      else std::cout << convert_to_ons(eval_alt(e)).to_string() << "\n";
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
