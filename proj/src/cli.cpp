#include "skewpieri/cli.hpp"

#include <CLI11.hpp>

#include "skewpieri/errors.hpp"
#include "skewpieri/format.hpp"
#include "skewpieri/involution.hpp"
#include "skewpieri/rules.hpp"
#include "skewpieri/verify.hpp"

namespace skewpieri {

namespace {

struct Options {
  std::string format = "text";

  std::string shape;
  std::string shape_b;
  int n = 0;
  bool dual = false;
  std::string rule;
  bool pairs = false;

  std::string check;
  int max_outer = -1;
  int max_outer_b = -1;
  int max_n = -1;
  int max_entry = -1;
  int max_deg = -1;
  int max_rho = -1;
  int monomial_max_outer = -1;

  std::string base;
  std::string tableau;
  std::string op = "phi";
};

int or_default(int value, int fallback) { return value < 0 ? fallback : value; }

bool json(const Options& o) { return o.format == "json"; }

int run_expand(const Options& o, std::ostream& out) {
  const SkewShape s = parse_shape(o.shape);
  if (o.rule == "schur") {
    const auto product = schur_product(skew_to_schur(s), o.dual ? e(o.n) : h(o.n));
    out << (json(o) ? to_json(product).dump() : format_text(product)) << "\n";
  } else {
    const auto expansion = skew_pieri(s, o.n, o.dual);
    out << (json(o) ? to_json(expansion).dump() : format_text(expansion)) << "\n";
  }
  return 0;
}

int run_product(const Options& o, std::ostream& out) {
  const SkewShape a = parse_shape(o.shape);
  const SkewShape b = parse_shape(o.shape_b);
  if (o.rule == "schur") {
    const auto product = schur_product(skew_to_schur(a), skew_to_schur(b));
    out << (json(o) ? to_json(product).dump() : format_text(product)) << "\n";
    return 0;
  }
  const auto pairs = skew_lr_pairs(a, b);
  SkewExpansion expansion;
  for (const auto& p : pairs) expansion.add(p.shape, p.sign);
  if (json(o)) {
    auto j = to_json(expansion);
    if (o.pairs) {
      auto list = nlohmann::json::array();
      for (const auto& p : pairs)
        list.push_back({{"sign", p.sign},
                        {"shape", format_shape(p.shape)},
                        {"minus", format_tableau(p.minus)},
                        {"plus", format_tableau(p.plus)},
                        {"reading_word", reverse_reading_word(p.minus, p.plus)}});
      j["pairs"] = list;
    }
    out << j.dump() << "\n";
    return 0;
  }
  if (o.pairs)
    for (const auto& p : pairs)
      out << (p.sign < 0 ? "- " : "+ ") << "s[" << format_shape(p.shape) << "]  T- " << format_tableau(p.minus)
          << "  T+ " << format_tableau(p.plus) << "\n";
  out << format_text(expansion) << "\n";
  return 0;
}

int run_verify(const Options& o, std::ostream& out) {
  Report report;
  if (o.check == "skew-pieri") {
    SkewPieriOptions opt;
    opt.max_outer = or_default(o.max_outer, 5);
    opt.max_n = or_default(o.max_n, 2);
    opt.monomial_max_outer = o.monomial_max_outer;
    opt.max_entry = or_default(o.max_entry, 0);
    report = verify_skew_pieri(opt);
  } else if (o.check == "involution") {
    report = verify_involution(or_default(o.max_outer, 5), or_default(o.max_n, 2), or_default(o.max_entry, 3));
  } else if (o.check == "appendix") {
    report = verify_appendix_sweep(or_default(o.max_deg, 4), or_default(o.max_n, 3));
  } else if (o.check == "skew-lr") {
    report = verify_skew_lr(or_default(o.max_outer, 5), or_default(o.max_outer_b, 4));
  } else if (o.check == "h-rho") {
    report = verify_h_rho(or_default(o.max_outer, 5), or_default(o.max_rho, 3));
  } else {
    report = verify_oracles(or_default(o.max_deg, 6), or_default(o.max_outer, 7));
  }
  if (json(o)) out << to_json(report).dump() << "\n";
  else out << format_text(report);
  return report.passed() ? 0 : 1;
}

const char* step_name(SlideStep::Kind k) {
  switch (k) {
    case SlideStep::Kind::reverse: return "reverse";
    case SlideStep::Kind::external: return "external";
    case SlideStep::Kind::internal: return "internal";
  }
  return "";
}

int run_trace(const Options& o, std::ostream& out) {
  const SlideContext ctx{parse_shape(o.base), parse_tableau(o.tableau)};
  try {
    check_context(ctx);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(o.tableau, ex.what());
  }
  SlideLog log;
  SlideContext result;
  if (o.op == "D") result = downward_slide(ctx, &log);
  else if (o.op == "U") result = upward_slide(ctx, &log);
  else result = phi(ctx, &log);

  if (json(o)) {
    auto steps = nlohmann::json::array();
    for (const auto& s : log) {
      auto path = nlohmann::json::array();
      for (const auto& c : s.record.path) path.push_back({c.row, c.col});
      steps.push_back({{"kind", step_name(s.kind)},
                       {"path", path},
                       {"final_entry", s.record.final_entry},
                       {"landing_row", s.record.landing_row},
                       {"tableau", format_tableau(s.after)}});
    }
    out << nlohmann::json{{"op", o.op},
                          {"base", format_shape(ctx.base)},
                          {"start", format_tableau(ctx.tableau)},
                          {"steps", steps},
                          {"result", format_tableau(result.tableau)},
                          {"fixed", result == ctx}}
               .dump()
        << "\n";
    return 0;
  }
  out << "base   " << format_shape(ctx.base) << "\n";
  out << "start  " << format_tableau(ctx.tableau) << "\n";
  for (const auto& s : log) {
    out << step_name(s.kind) << "  entry " << s.record.final_entry << "  landing " << s.record.landing_row
        << "  path " << format_path(s.record.path) << "\n";
    out << "       " << format_tableau(s.after) << "\n";
  }
  out << "result " << format_tableau(result.tableau) << (result == ctx ? "  (fixed)" : "") << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact skew Pieri and Littlewood-Richardson computations", "skewpieri"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* expand = app.add_subcommand("expand", "Expand s_{shape} h_n (or e_n) as a signed sum");
  expand->set_help_flag("--help", "Print this help message and exit");
  expand->add_option("shape", o.shape, "Skew shape, e.g. 322/11 or 3,2,2/1,1")->required();
  expand->add_option("--h,-n", o.n, "Degree n")->required()->check(CLI::NonNegativeNumber);
  expand->add_flag("--dual", o.dual, "Multiply by e_n instead of h_n");
  o.rule = "skew-pieri";
  expand->add_option("--rule", o.rule, "skew-pieri or schur")->check(CLI::IsMember({"skew-pieri", "schur"}));

  auto* product = app.add_subcommand("product", "Expand s_A s_B");
  product->add_option("A", o.shape, "First skew shape")->required();
  product->add_option("B", o.shape_b, "Second skew shape")->required();
  auto* product_rule =
      product->add_option("--rule", o.rule, "skew-lr or schur")->check(CLI::IsMember({"skew-lr", "schur"}));
  product->add_flag("--pairs", o.pairs, "List every (T-, T+) pair");

  auto* verify = app.add_subcommand("verify", "Exhaustively check an identity on small instances");
  verify->add_option("check", o.check, "skew-pieri, involution, appendix, skew-lr, h-rho or oracles")
      ->required()
      ->check(CLI::IsMember({"skew-pieri", "involution", "appendix", "skew-lr", "h-rho", "oracles"}));
  verify->add_option("--max-outer", o.max_outer, "Bound on |outer|")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-outer-b", o.max_outer_b, "Bound on |outer| of the second factor")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--max-n", o.max_n, "Bound on n")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-entry", o.max_entry, "Bound on tableau entries")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-deg", o.max_deg, "Bound on degrees")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-rho", o.max_rho, "Bound on |rho|")->check(CLI::NonNegativeNumber);
  verify->add_option("--monomial-max-outer", o.monomial_max_outer, "Bound on |outer| for monomial checks")
      ->check(CLI::NonNegativeNumber);

  auto* trace = app.add_subcommand("trace", "Print step logs");
  trace->require_subcommand(1);
  auto* slide = trace->add_subcommand("slide", "Run D, U or phi on a tableau over a base shape");
  slide->add_option("base", o.base, "Base skew shape")->required();
  slide->add_option("tableau", o.tableau, "Tableau, e.g. '431/1: [1,2,7][3,3,5][5]'")->required();
  slide->add_option("--op", o.op, "D, U or phi")->check(CLI::IsMember({"D", "U", "phi"}));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : 2;
  }
  if (product->parsed() && product_rule->count() == 0) o.rule = "skew-lr";

  try {
    if (expand->parsed()) return run_expand(o, out);
    if (product->parsed()) return run_product(o, out);
    if (verify->parsed()) return run_verify(o, out);
    return run_trace(o, out);
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
}

}  // namespace skewpieri
