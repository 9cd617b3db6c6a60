#include "spmet/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spmet/expr.hpp"
#include "spmet/serialize.hpp"
#include "spmet/verify.hpp"

namespace spmet {

namespace {

struct Globals {
  long p = 3;
  int n = 2;
  long precision = 6;
  int cap = 2;
  int window = 12;
  std::string format = "text";
  unsigned long seed = 12345;
  bool timing = false;

  PrimeContext context() const { return PrimeContext(p, n); }
};

Json read_json_arg(const std::string& src) {
  if (src == "-") return Json::parse(std::cin);
  std::ifstream in(src);
  if (!in) throw std::runtime_error("cannot open " + src);
  return Json::parse(in);
}

void emit_value(const Globals& g, std::ostream& out, const std::string& command,
                const std::string& sort, const std::string& value) {
  if (g.format == "json") {
    Json j{{"command", command}, {"sort", sort}, {"result", value}};
    out << j.dump(2) << "\n";
  } else {
    out << value << "\n";
  }
}

int emit_report(const Globals& g, std::ostream& out, const std::string& suite,
                const std::vector<CheckReport>& checks) {
  bool all_pass = true;
  for (const CheckReport& c : checks) all_pass = all_pass && c.pass;
  if (g.format == "json") {
    Json j{{"command", "verify"}, {"suite", suite},   {"n", g.n},
           {"p", g.p},            {"precision", g.precision},
           {"cap", g.cap},        {"window", g.window}, {"seed", g.seed}};
    j["checks"] = report_to_json(checks, g.timing);
    j["all_pass"] = all_pass;
    out << j.dump(2) << "\n";
  } else {
    for (const CheckReport& c : checks) {
      out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.details.empty()) out << "  (" << c.details << ")";
      out << "\n";
      for (const std::string& w : c.witnesses) out << "       witness: " << w << "\n";
    }
    out << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "spmet: exact computations in sp_2n, the Weyl algebra and its "
      "metaplectic module at finite truncation"};
  app.fallthrough();
  Globals g;
  app.add_option("--n", g.n, "rank of sp_2n (n >= 2)")->envname("SPMET_N");
  app.add_option("--p", g.p, "odd prime")->envname("SPMET_P");
  app.add_option("--precision", g.precision, "certified valuation floor N")
      ->envname("SPMET_PRECISION");
  app.add_option("--cap", g.cap, "iwasawa exponent cap")->envname("SPMET_CAP");
  app.add_option("--window", g.window, "module window degree")
      ->envname("SPMET_WINDOW");
  app.add_option("--format", g.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("SPMET_FORMAT");
  app.add_option("--seed", g.seed, "seed for randomized suites")
      ->envname("SPMET_SEED");
  app.add_flag("--timing", g.timing, "include per-check timing in JSON output")
      ->envname("SPMET_TIMING");

  std::string e1, e2, sort_name_arg, json_src, suite = "all";
  int index = 1;

  CLI::App* cmd_bracket = app.add_subcommand("bracket", "Lie bracket [e1, e2]");
  cmd_bracket->add_option("e1", e1)->required();
  cmd_bracket->add_option("e2", e2)->required();

  CLI::App* cmd_rho = app.add_subcommand("rho", "metaplectic image of a Lie element");
  cmd_rho->add_option("e", e1)->required();

  CLI::App* cmd_mul = app.add_subcommand("mul", "product in weyl|poly|laurent");
  cmd_mul->add_option("sort", sort_name_arg)
      ->required()
      ->check(CLI::IsMember({"weyl", "poly", "laurent"}));
  cmd_mul->add_option("e1", e1)->required();
  cmd_mul->add_option("e2", e2)->required();

  CLI::App* cmd_act = app.add_subcommand("act", "apply a Weyl element to a (Laurent) polynomial");
  cmd_act->add_option("w", e1)->required();
  cmd_act->add_option("f", e2)->required();

  CLI::App* cmd_tau = app.add_subcommand("tau", "Fourier automorphism tau_i");
  cmd_tau->add_option("i", index)->required();
  cmd_tau->add_option("e", e1)->required();

  CLI::App* cmd_sigma = app.add_subcommand("sigma", "automorphism sigma_i");
  cmd_sigma->add_option("i", index)->required();
  cmd_sigma->add_option("e", e1)->required();

  CLI::App* cmd_exp = app.add_subcommand("exp", "truncated e^{pg} at --precision");
  cmd_exp->add_option("e", e1)->required();

  CLI::App* cmd_expand =
      app.add_subcommand("expand", "Weyl image of an Iwasawa element (JSON file or -)");
  cmd_expand->add_option("json", json_src)->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("--suite", suite, "suite name or 'all'")
      ->check(CLI::IsMember(suite_names()))
      ->envname("SPMET_SUITE");

  CLI::App* cmd_check = app.add_subcommand("check", "run a verification suite (alias)");
  cmd_check->add_option("suite", suite)->required()->check(
      CLI::IsMember(suite_names()));

  CLI::App* cmd_rank = app.add_subcommand("rank", "exact rank of an action matrix (JSON config file or -)");
  cmd_rank->add_option("json", json_src)->required();

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("spmet");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    const PrimeContext ctx = g.context();

    if (cmd_bracket->parsed()) {
      SpElement r = bracket_structure(parse_lie(e1, ctx), parse_lie(e2, ctx));
      emit_value(g, out, "bracket", "lie", format_sp(r));
      return 0;
    }
    if (cmd_rho->parsed()) {
      emit_value(g, out, "rho", "weyl", format_weyl(rho(parse_lie(e1, ctx), ctx)));
      return 0;
    }
    if (cmd_mul->parsed()) {
      Sort s = sort_from_name(sort_name_arg);
      if (s == Sort::weyl) {
        WeylElement r = weyl_multiply(parse_weyl(e1, ctx), parse_weyl(e2, ctx));
        emit_value(g, out, "mul", "weyl", format_weyl(r));
      } else {
        const bool laurent = s == Sort::laurent;
        Poly a = laurent ? parse_laurent(e1, ctx) : parse_poly(e1, ctx);
        Poly b = laurent ? parse_laurent(e2, ctx) : parse_poly(e2, ctx);
        emit_value(g, out, "mul", sort_name_arg, format_poly(poly_multiply(a, b)));
      }
      return 0;
    }
    if (cmd_act->parsed()) {
      Poly r = act(parse_weyl(e1, ctx), parse_laurent(e2, ctx));
      emit_value(g, out, "act", "laurent", format_poly(r));
      return 0;
    }
    if (cmd_tau->parsed()) {
      emit_value(g, out, "tau", "weyl",
                 format_weyl(tau(index, parse_weyl(e1, ctx))));
      return 0;
    }
    if (cmd_sigma->parsed()) {
      if (index < 1 || index > ctx.n)
        throw std::out_of_range("sigma: index out of range 1..n");
      emit_value(g, out, "sigma", "lie",
                 format_sp(sigma(index, parse_lie(e1, ctx))));
      return 0;
    }
    if (cmd_exp->parsed()) {
      TruncatedEnvelope te = exp_p(parse_lie(e1, ctx), g.precision, ctx);
      if (g.format == "json") {
        Json j{{"command", "exp"},
               {"body", format_pbw(te.body, ctx)},
               {"tail_floor", te.tail_floor.str()}};
        out << j.dump(2) << "\n";
      } else {
        out << format_pbw(te.body, ctx) << "  (tail_floor >= "
            << te.tail_floor.str() << ")\n";
      }
      return 0;
    }
    if (cmd_expand->parsed()) {
      IwasawaElement zeta = iwasawa_from_json(read_json_arg(json_src), ctx);
      TruncatedWeyl tw = iwasawa_to_weyl(zeta, g.precision, ctx);
      if (g.format == "json") {
        Json j{{"command", "expand"},
               {"body", format_weyl(tw.body)},
               {"tail_floor", tw.tail_floor.str()}};
        out << j.dump(2) << "\n";
      } else {
        out << format_weyl(tw.body) << "  (tail_floor >= "
            << tw.tail_floor.str() << ")\n";
      }
      return 0;
    }
    if (cmd_verify->parsed() || cmd_check->parsed()) {
      ExperimentConfig cfg(ctx);
      cfg.precision = g.precision;
      cfg.iwasawa_cap = g.cap;
      cfg.probe_degree = g.window;
      cfg.window_degree = std::max(g.window, 16);
      cfg.seed = g.seed;
      return emit_report(g, out, suite, run_suite(suite, cfg));
    }
    if (cmd_rank->parsed()) {
      Json cfg = read_json_arg(json_src);
      std::vector<WeylElement> ops;
      for (const auto& s : cfg.at("ops"))
        ops.push_back(parse_weyl(s.get<std::string>(), ctx));
      const bool laurent = cfg.value("laurent", false);
      std::vector<Poly> domain;
      for (const auto& s : cfg.at("domain"))
        domain.push_back(laurent ? parse_laurent(s.get<std::string>(), ctx)
                                 : parse_poly(s.get<std::string>(), ctx));
      Window window{cfg.value("window", g.window), laurent, std::nullopt};
      WindowPolicy policy = cfg.value("policy", std::string("strict")) ==
                                    "project"
                                ? WindowPolicy::project
                                : WindowPolicy::strict;
      ActionMatrix m = action_matrix(ops, domain, window, policy);
      std::size_t r = exact_rank(m);
      if (g.format == "json") {
        Json j{{"command", "rank"},
               {"rank", r},
               {"rows", m.entries.rows()},
               {"cols", m.entries.cols()}};
        out << j.dump(2) << "\n";
      } else {
        out << "rank " << r << " (" << m.entries.rows() << " x "
            << m.entries.cols() << ")\n";
      }
      return 0;
    }
    err << "no subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace spmet
