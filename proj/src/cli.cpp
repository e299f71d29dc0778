#include "starpoly/cli.hpp"

#include "starpoly/deformation.hpp"
#include "starpoly/laguerre.hpp"
#include "starpoly/mathieu.hpp"
#include "starpoly/poly_io.hpp"
#include "starpoly/record.hpp"
#include "starpoly/suites.hpp"
#include "starpoly/weyl.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace starpoly {

namespace {

/// Bad flag values detected after CLI11 has accepted the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_expression(const std::string& value, std::istream& in) {
  if (value != "-") return value;
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (all.empty()) throw UsageError("expected an expression on standard input");
  return all;
}

Rat parse_t(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--t: ") + e.what());
  }
}

MultiIndex parse_index_list(const std::string& text, std::size_t n, const char* flag) {
  std::vector<MultiIndex::value_type> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6)
      throw UsageError(std::string(flag) + ": expected comma-separated non-negative integers, got '" + text + "'");
    v.push_back(static_cast<MultiIndex::value_type>(std::stoul(item)));
  }
  if (v.size() == 1 && n > 1) v.assign(n, v[0]);
  if (v.size() != n)
    throw UsageError(std::string(flag) + ": expected " + std::to_string(n) + " entries, got '" + text + "'");
  return MultiIndex(std::move(v));
}

std::string taylor_label(const MultiIndex& alpha) { return "a_" + to_string(alpha); }

struct Options {
  std::size_t n = 1;
  std::string t = "1";
  std::string f, g, input, op, poly, b = "1";
  bool inverse = false;
  std::string dir = "right";
  std::string alpha, k = "0", via = "explicit";
  std::string suite, oracle = "image", power;
  SuiteBounds bounds;
  std::vector<std::string> ts;
  unsigned mmax = 8;
  int cap = 40;
};

int emit_report(const CheckReport& report, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& c : report.cases()) {
    if (!c.passed) ++failed;
    out << OutputRecord{"check", {{"suite", report.suite()}, {"case", c.label}}, c.passed ? "pass" : "fail", c.detail}
               .to_line()
        << '\n';
  }
  out << OutputRecord{"check-summary",
                      {{"suite", report.suite()},
                       {"cases", std::to_string(report.cases().size())},
                       {"failed", std::to_string(failed)}},
                      failed ? "fail" : "pass",
                      ""}
             .to_line()
      << '\n';
  return failed ? kExitCheckFailed : kExitOk;
}

int run_mathieu(const Options& o, std::istream& in, std::ostream& out) {
  const Poly f = parse_poly(read_expression(o.f, in), o.n);
  const Poly b = parse_poly(read_expression(o.b, in), o.n);
  std::optional<MembershipOracle> oracle;
  if (o.oracle == "image") oracle = MembershipOracle::image_Et(parse_t(o.t));
  else if (o.oracle == "image-linear") oracle = MembershipOracle::image_linear(parse_t(o.t));
  else oracle = MembershipOracle::laguerre_span(parse_index_list(o.k, o.n, "--k"));

  std::string power = o.power;
  if (power.empty()) power = oracle->is_image() ? "star" : "ordinary";
  const PowerRule rule = power == "star" ? PowerRule::star(oracle->t) : PowerRule::ordinary();
  if (rule.kind == PowerRule::Kind::Star && !oracle->is_image())
    throw UsageError("--power star needs --oracle image or image-linear");
  if (!oracle->is_image() && (!f.is_z_only() || !b.is_z_only()))
    throw UsageError("--oracle laguerre takes --f and --b in z1..zn only");

  std::vector<std::pair<std::string, std::string>> common{{"oracle", to_string(oracle->kind)}};
  if (oracle->is_image())
    common.emplace_back("t", to_string(oracle->t));
  else
    common.emplace_back("k", to_string(oracle->k));
  common.emplace_back("power", power);

  try {
    const ExperimentReport report = power_experiment(*oracle, f, b, o.mmax, rule, o.cap);
    for (const auto& v : report.verdicts) {
      auto params = common;
      params.emplace_back("m", std::to_string(v.m));
      params.emplace_back("power_member", v.power_member ? "true" : "false");
      out << OutputRecord{"mathieu", params, v.product_member ? "member" : "non-member", print_poly(v.power)}.to_line()
          << '\n';
    }
    auto params = common;
    params.emplace_back("mmax", std::to_string(o.mmax));
    params.emplace_back("all_powers_member", report.all_powers_member() ? "true" : "false");
    params.emplace_back("first_stable_N", report.first_stable_N ? std::to_string(*report.first_stable_N) : "none");
    out << OutputRecord{"mathieu-summary", params, "evidence", print_poly(b)}.to_line() << '\n';
    return kExitOk;
  } catch (const DegreeCapExceeded& e) {
    auto params = common;
    params.emplace_back("cap", std::to_string(o.cap));
    out << OutputRecord{"mathieu-error", params, "degree-cap-exceeded", e.what()}.to_line() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact algebra of the deformed product *_t on Q[xi, z]. xi is written x1..xn."};
  app.require_subcommand(1);

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Dimension n")->check(CLI::Range(1, 64)); };

  auto* star_cmd = app.add_subcommand("star", "Print f *_t g");
  add_n(star_cmd);
  star_cmd->add_option("--t", o.t, "Deformation parameter (rational)");
  star_cmd->add_option("--f", o.f, "First factor")->required();
  star_cmd->add_option("--g", o.g, "Second factor")->required();

  auto* phi_cmd = app.add_subcommand("phi", "Print Phi_t f (or Phi_{-t} f with --inverse)");
  add_n(phi_cmd);
  phi_cmd->add_option("--t", o.t, "Deformation parameter (rational)");
  phi_cmd->add_option("--f", o.f, "Polynomial")->required();
  phi_cmd->add_flag("--inverse", o.inverse, "Apply Phi_{-t}");

  auto* taylor_cmd = app.add_subcommand("taylor", "Print the star-Taylor coefficients a_alpha of f");
  add_n(taylor_cmd);
  taylor_cmd->add_option("--t", o.t, "Deformation parameter (rational)");
  taylor_cmd->add_option("--f", o.f, "Polynomial")->required();

  auto* symbol_cmd = app.add_subcommand("symbol", "Total symbols of differential operators");
  add_n(symbol_cmd);
  symbol_cmd->add_option("--dir", o.dir, "left|right: symbol of an operator; l2r|r2l: interchange symbols")
      ->check(CLI::IsMember({"left", "right", "l2r", "r2l"}));
  symbol_cmd->add_option("--input", o.input, "Operator (left/right) or symbol (l2r/r2l)")->required();

  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to a polynomial in z");
  add_n(apply_cmd);
  apply_cmd->add_option("--op", o.op, "Operator expression, e.g. z1^2*d1^3")->required();
  apply_cmd->add_option("--poly", o.poly, "Polynomial in z")->required();

  auto* lag_cmd = app.add_subcommand("laguerre", "Print the generalized Laguerre polynomial L_alpha^[k](z)");
  add_n(lag_cmd);
  lag_cmd->add_option("--alpha", o.alpha, "Degree index, comma separated")->required();
  lag_cmd->add_option("--k", o.k, "Parameter, comma separated");
  lag_cmd->add_option("--via", o.via, "Construction route")->check(CLI::IsMember({"explicit", "star", "genfun"}));

  auto* check_cmd = app.add_subcommand("check", "Run a verification suite; exit 0 iff every case passes");
  check_cmd->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  check_cmd->add_option("--degmax", o.bounds.degmax, "Index / degree bound")->capture_default_str();
  check_cmd->add_option("--mmax", o.bounds.mmax, "Largest m for recur/ode")->capture_default_str();
  check_cmd->add_option("--kmax", o.bounds.kmax, "Largest k")->capture_default_str();
  check_cmd->add_option("--N", o.bounds.order, "Series truncation order")->capture_default_str();
  check_cmd->add_option("--t", o.ts, "Deformation parameters for the oracle scan (repeatable)");

  auto* mathieu_cmd = app.add_subcommand("mathieu", "Bounded power experiment for the Mathieu tail condition");
  add_n(mathieu_cmd);
  mathieu_cmd->add_option("--oracle", o.oracle, "Membership oracle")
      ->check(CLI::IsMember({"image", "image-linear", "laguerre"}));
  mathieu_cmd->add_option("--t", o.t, "Deformation parameter for image oracles");
  mathieu_cmd->add_option("--k", o.k, "Laguerre parameter, comma separated");
  mathieu_cmd->add_option("--f", o.f, "Candidate f")->required();
  mathieu_cmd->add_option("--b", o.b, "Witness b")->capture_default_str();
  mathieu_cmd->add_option("--mmax", o.mmax, "Largest power")->capture_default_str()->check(CLI::PositiveNumber);
  mathieu_cmd->add_option("--power", o.power, "star (default for image) or ordinary (default for laguerre)")
      ->check(CLI::IsMember({"star", "ordinary"}));
  mathieu_cmd->add_option("--cap", o.cap, "Abort when a power exceeds this total degree")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (star_cmd->parsed()) {
      const StarContext ctx(o.n, parse_t(o.t));
      out << print_poly(star(ctx, parse_poly(read_expression(o.f, in), o.n), parse_poly(read_expression(o.g, in), o.n)))
          << '\n';
    } else if (phi_cmd->parsed()) {
      const Rat t = parse_t(o.t);
      const StarContext ctx(o.n, o.inverse ? Rat(-t) : t);
      out << print_poly(phi(ctx, parse_poly(read_expression(o.f, in), o.n))) << '\n';
    } else if (taylor_cmd->parsed()) {
      const StarContext ctx(o.n, parse_t(o.t));
      const StarTaylor st = star_taylor(ctx, parse_poly(read_expression(o.f, in), o.n));
      if (st.coefficients.empty()) out << "0\n";
      for (const auto& [alpha, a] : st.coefficients) out << taylor_label(alpha) << " = " << print_poly(a) << '\n';
    } else if (symbol_cmd->parsed()) {
      const std::string text = read_expression(o.input, in);
      if (o.dir == "right") {
        out << print_poly(right_symbol(parse_weyl(text, o.n))) << '\n';
      } else if (o.dir == "left") {
        out << print_poly(left_symbol(parse_weyl(text, o.n))) << '\n';
      } else if (o.dir == "l2r") {
        out << print_poly(right_symbol(from_left_symbol(parse_poly(text, o.n)))) << '\n';
      } else {
        out << print_poly(left_symbol(from_right_symbol(parse_poly(text, o.n)))) << '\n';
      }
    } else if (apply_cmd->parsed()) {
      const WeylOp op = parse_weyl(read_expression(o.op, in), o.n);
      const Poly p = parse_poly(read_expression(o.poly, in), o.n);
      if (!p.is_z_only()) throw UsageError("--poly must be a polynomial in z1..zn");
      out << print_poly(weyl_apply(op, ZPoly(p))) << '\n';
    } else if (lag_cmd->parsed()) {
      const LaguerreSpec spec(parse_index_list(o.alpha, o.n, "--alpha"), parse_index_list(o.k, o.n, "--k"));
      const ZPoly p = o.via == "star"     ? laguerre_from_star_at_one(spec)
                      : o.via == "genfun" ? laguerre_from_generating(spec)
                                          : laguerre(spec);
      out << print_poly(p) << '\n';
    } else if (check_cmd->parsed()) {
      if (!o.ts.empty()) {
        o.bounds.ts.clear();
        for (const auto& t : o.ts) o.bounds.ts.push_back(parse_t(t));
      }
      return emit_report(run_suite(o.suite, o.bounds), out);
    } else if (mathieu_cmd->parsed()) {
      return run_mathieu(o, in, out);
    }
  } catch (const ParseError& e) {
    err << "error: expression " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace starpoly
