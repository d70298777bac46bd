#include "commands.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "codec.hpp"
#include "monadica/error.hpp"
#include "monadica/expr.hpp"
#include "monadica/sequence.hpp"

namespace monadica::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GeneralizedReal value_arg(const std::string& text) { return decode_value(parse_json(text)); }

sets::GeneralizedSet set_arg(const std::string& text) { return decode_set(parse_json(text)); }

// A GenFn whose domain holds both lo and hi.
calc::GenFn covering(const calc::Expr& e, double lo, double hi) {
  const double span = std::max(1.0, hi - lo);
  std::optional<Error> last;
  for (int k = 0; k <= 40; ++k) {
    const double r = std::ldexp(span, -k);
    try {
      return calc::GenFn(e, calc::OpenInterval{lo - r, hi + r});
    } catch (const Error& err) {
      if (err.code() != ErrorCode::OutOfDomain && err.code() != ErrorCode::NotDifferentiable) throw;
      last = err;
    }
  }
  throw *last;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("MONADICA_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(env, &pos);
    if (env[pos] != '\0') throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("MONADICA_SEED is not an unsigned integer: ") + env);
  }
}

void print_table(std::ostream& out, const verify::SuiteReport& r) {
  out << r.suite << " (seed " << r.seed << ")\n";
  for (const auto& p : r.results) {
    out << "  " << (p.pass ? "PASS " : "FAIL ") << std::left << std::setw(58) << p.property
        << std::right << std::setw(6) << p.cases << "\n";
    if (!p.pass) out << "       " << p.detail << "\n";
  }
}

calc::PiecewiseGenFn ode_solution(const std::string& name) {
  const calc::Expr t = calc::Expr::variable();
  if (name == "kink") return {{0.0}, {-t, t}, {{0.0, 1.0}}};
  if (name == "step") return {{0.0}, {calc::Expr::constant(0.0), calc::Expr::constant(1.0)}, {{1.0, 1.0}}};
  return {{0.0}, {t, t}, {{0.0, 1.0}}};  // "wrong": x(t) = t against kink
}

calc::PiecewiseGenFn ode_rhs(const std::string& name) {
  const double left = name == "step" ? 0.0 : -1.0;
  const double right = name == "step" ? 0.0 : 1.0;
  return {{0.0}, {calc::Expr::constant(left), calc::Expr::constant(right)}, {{1.0, 0.0}}};
}

const std::vector<std::string>& set_ops() {
  static const std::vector<std::string> ops = {
      "monad",     "shadow",   "union",    "intersect", "difference", "interior", "exterior",
      "boundary",  "closure",  "is_open",  "is_closed", "is_compact", "is_connected", "length",
      "sup",       "inf",      "max",      "min",       "member",     "upper_bound", "lower_bound"};
  return ops;
}

json run_sets(const std::string& op, const std::string& a_text, const std::string& b_text) {
  const bool binary = op == "union" || op == "intersect" || op == "difference" || op == "member" ||
                      op == "upper_bound" || op == "lower_bound";
  if (binary && b_text.empty()) throw UsageError("sets " + op + " needs two arguments");
  if (!binary && !b_text.empty()) throw UsageError("sets " + op + " takes one argument");
  const sets::GeneralizedSet a = set_arg(a_text);
  auto opt = [](const std::optional<double>& v) { return v ? number(*v) : json(); };
  if (op == "monad") return encode(sets::monad(sets::shadow(a)));
  if (op == "shadow") return encode(sets::shadow(a));
  if (op == "union") return encode(sets::set_union(a, set_arg(b_text)));
  if (op == "intersect") return encode(sets::set_intersect(a, set_arg(b_text)));
  if (op == "difference") return encode(sets::set_difference(a, set_arg(b_text)));
  if (op == "interior") return encode(sets::topo(sets::TopoOp::Interior, a));
  if (op == "exterior") return encode(sets::topo(sets::TopoOp::Exterior, a));
  if (op == "boundary") return encode(sets::topo(sets::TopoOp::Boundary, a));
  if (op == "closure") return encode(sets::topo(sets::TopoOp::Closure, a));
  if (op == "is_open") return sets::is_open(a);
  if (op == "is_closed") return sets::is_closed(a);
  if (op == "is_compact") return sets::is_compact(a);
  if (op == "is_connected") return sets::is_connected(a);
  if (op == "length") return number(sets::length(a));
  if (op == "sup") return number(sets::sup_r(a));
  if (op == "inf") return number(sets::inf_r(a));
  if (op == "max") return opt(sets::max_r(a));
  if (op == "min") return opt(sets::min_r(a));
  // The remaining ops take a set and a value, in that order.
  const GeneralizedReal x = value_arg(b_text);
  if (op == "member") return sets::member(x, a);
  if (op == "upper_bound") return sets::is_upper_bound(x, a);
  return sets::is_lower_bound(x, a);
}

}  // namespace

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> words;
  std::string cur;
  bool in_word = false;
  char quote = 0;
  for (char c : line) {
    if (quote != 0) {
      if (c == quote) {
        quote = 0;
      } else {
        cur += c;
      }
    } else if (c == '\'' || c == '"') {
      quote = c;
      in_word = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (in_word) words.push_back(std::move(cur));
      cur.clear();
      in_word = false;
    } else {
      cur += c;
      in_word = true;
    }
  }
  if (quote != 0) throw Error(ErrorCode::ParseError, "unterminated quote");
  if (in_word) words.push_back(std::move(cur));
  return words;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Generalized reals with nilpotent infinitesimals: evaluation, derivatives, sets, checks",
               "monadica"};
  app.require_subcommand(1);

  std::string expr_text, at_text, a_text, b_text, op, suite, example;
  std::uint32_t order = 1;
  std::uint32_t taylor_order = 0;
  double center = 0.0;
  std::size_t terms = 8;
  std::uint64_t seed = 0;
  bool pretty = false;

  auto* eval = app.add_subcommand("eval", "Natural extension of an expression at a generalized real");
  eval->add_option("expr", expr_text, "Expression in x, e.g. \"exp(x)\"")->required();
  eval->add_option("--at", at_text, "Value JSON")->required();

  auto* diff = app.add_subcommand("diff", "m-th derivative at a generalized real");
  diff->add_option("expr", expr_text, "Expression in x")->required();
  diff->add_option("--at", at_text, "Value JSON")->required();
  diff->add_option("--order", order, "Derivative order")->check(CLI::Range(0u, 64u));

  auto* taylor = app.add_subcommand("taylor", "Taylor expansion with a Lagrange remainder point");
  taylor->add_option("expr", expr_text, "Expression in x")->required();
  taylor->add_option("--center", center, "Expansion point")->required();
  taylor->add_option("--order", taylor_order, "Degree")->required()->check(CLI::Range(0u, 32u));
  taylor->add_option("--at", at_text, "Value JSON")->required();

  auto* seqcmd = app.add_subcommand("seq", "Sequence view of generalized reals");
  seqcmd->require_subcommand(1);
  auto* print = seqcmd->add_subcommand("print", "First terms of the sequence behind a value");
  print->add_option("value", at_text, "Value JSON")->required();
  print->add_option("--terms", terms, "Number of terms")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));

  auto* setscmd = app.add_subcommand("sets", "Set algebra on monads");
  setscmd->add_option("op", op, "Operation")->required()->check(CLI::IsMember(set_ops()));
  setscmd->add_option("a", a_text, "Set JSON")->required();
  setscmd->add_option("b", b_text, "Second set JSON, or a value JSON for member/upper_bound/lower_bound");

  auto* verifycmd = app.add_subcommand("verify", "Run the randomized property suites");
  verifycmd->add_option("--suite", suite, "Suite name (default: all)")->check(CLI::IsMember(verify::suite_names()));
  auto* seed_opt = verifycmd->add_option("--seed", seed, "Random seed (default: $MONADICA_SEED or 0)");
  verifycmd->add_flag("--pretty", pretty, "Human-readable table instead of JSON");

  auto* odecmd = app.add_subcommand("ode", "Check a singular ODE example region by region");
  odecmd->add_option("example", example, "kink, step or wrong")->required()->check(CLI::IsMember({"kink", "step", "wrong"}));

  auto* repl = app.add_subcommand("repl", "Read commands line by line from standard input");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("monadica");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      const calc::Expr e = calc::parse(expr_text);
      const GeneralizedReal x = value_arg(at_text);
      GeneralizedReal y;
      try {
        y = calc::nat_ext_eval(calc::GenFn::local(e, x.shadow()), x);
      } catch (const Error& ex) {
        if (ex.code() != ErrorCode::OutOfDomain && ex.code() != ErrorCode::NotDifferentiable) throw;
        y = e.gen_eval(x);
      }
      out << encode(y).dump() << "\n";
    } else if (diff->parsed()) {
      const calc::Expr e = calc::parse(expr_text);
      const GeneralizedReal x = value_arg(at_text);
      out << number(calc::mth_derivative(calc::GenFn::local(e, x.shadow()), order, x)).dump() << "\n";
    } else if (taylor->parsed()) {
      const calc::Expr e = calc::parse(expr_text);
      const GeneralizedReal x = value_arg(at_text);
      const calc::GenFn f = covering(e, std::min(center, x.shadow()), std::max(center, x.shadow()));
      out << encode(calc::taylor(f, center, taylor_order, x)).dump() << "\n";
    } else if (print->parsed()) {
      json arr = json::array();
      for (double v : seq::prefix(value_arg(at_text), terms)) arr.push_back(number(v));
      out << arr.dump() << "\n";
    } else if (setscmd->parsed()) {
      out << run_sets(op, a_text, b_text).dump() << "\n";
    } else if (verifycmd->parsed()) {
      const std::uint64_t s = seed_opt->count() > 0 ? seed : default_seed();
      std::vector<std::string> names = suite.empty() ? verify::suite_names() : std::vector<std::string>{suite};
      bool ok = true;
      json reports = json::array();
      for (const auto& name : names) {
        const verify::SuiteReport r = verify::run_suite(name, s);
        ok = ok && r.all_pass();
        if (pretty) {
          print_table(out, r);
        } else {
          reports.push_back(encode(r));
        }
      }
      if (pretty) {
        out << (ok ? "all properties pass" : "some properties FAIL") << "\n";
      } else {
        out << json{{"status", ok ? "pass" : "fail"}, {"seed", s}, {"suites", reports}}.dump() << "\n";
      }
      return ok ? kExitOk : kExitVerifyFailed;
    } else if (odecmd->parsed()) {
      const calc::PiecewiseGenFn sol = ode_solution(example);
      const calc::OdeReport rep = calc::ode_verify(sol, ode_rhs(example == "wrong" ? "kink" : example));
      json points = json::array();
      for (int i = -8; i <= 8; ++i) {
        const double t = i * 0.25;
        points.push_back({number(t), number(calc::pw_eval(sol, GeneralizedReal(t)).shadow())});
      }
      json j = encode(rep);
      j["example"] = example;
      j["points"] = points;
      out << j.dump() << "\n";
      return rep.all_pass() ? kExitOk : kExitVerifyFailed;
    } else if (repl->parsed()) {
      std::string line;
      while (std::getline(in, line)) {
        std::vector<std::string> words;
        try {
          words = split_line(line);
        } catch (const Error& e) {
          err << "usage error: " << e.what() << "\n";
          continue;
        }
        if (words.empty()) continue;
        if (words.front() == "quit" || words.front() == "exit") break;
        if (words.front() == "repl") {
          err << "usage error: already in the repl\n";
          continue;
        }
        run(words, out, err, in);
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) {
      err << "usage error: " << e.what() << "\n";
      return kExitUsage;
    }
    out << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace monadica::cli
