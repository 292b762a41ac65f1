// Command-line front end for the Bour surface toolkit.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bour/cli/commands.hpp"

namespace {

using bour::cli::RunConfig;

std::vector<long> parse_m_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw bour::InputError("empty entry in --m-list");
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw bour::InputError("bad entry '" + item + "' in --m-list");
    out.push_back(v);
  }
  if (out.empty()) throw bour::InputError("--m-list is empty");
  return out;
}

void add_budget(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--budget-seconds", c.budget_seconds, "wall-clock budget for the elimination (0 = none)");
  cmd->add_option("--max-pairs", c.max_pairs, "S-pair budget per prime (0 = none)");
  cmd->add_flag("--exact", c.exact_rationals, "run Buchberger over Q instead of the multi-modular route");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bour minimal surfaces: exact construction, certificates and implicitization"};
  app.require_subcommand(1);
  RunConfig c;
  std::string method = "groebner", m_list;

  auto* gen = app.add_subcommand("generate", "sample the surface on an (r, theta) grid as OBJ or CSV");
  gen->add_option("--m", c.m, "exponent: integer, p/q or real")->required();
  gen->add_option("--alpha", c.alpha, "associated-family phase in radians");
  gen->add_option("--r0", c.r0, "first radius");
  gen->add_option("--r1", c.r1, "last radius");
  gen->add_option("--nr", c.nr, "radial samples");
  gen->add_option("--ntheta", c.ntheta, "angular samples");
  gen->add_flag("--paper-domain", c.paper_domain, "use r in [-1,1], theta in [0,pi]");
  gen->add_option("-o,--output", c.output, "output file (.obj or .csv)")->required();

  auto* imp = app.add_subcommand("implicitize", "implicit Cartesian equation and degree");
  imp->add_option("--m", c.m, "integer m >= 2")->required();
  imp->add_option("--method", method, "groebner or resultant");
  imp->add_flag("--allow-long", c.allow_long, "permit the long m = 4 run");
  imp->add_option("-o,--output", c.output, ".poly output (a .meta sidecar is written next to it)");
  add_budget(imp, c);

  auto* cls = app.add_subcommand("class", "implicit tangential equation and class");
  cls->add_option("--m", c.m, "integer m >= 2")->required();
  cls->add_flag("--allow-long", c.allow_long, "permit m > 4");
  cls->add_option("-o,--output", c.output, ".poly output");
  add_budget(cls, c);

  auto* ver = app.add_subcommand("verify", "run the exact certificate suite");
  ver->add_option("--m-list", m_list, "comma-separated m values (default 2,3,4,5,6)");
  ver->add_flag("--inject-quadric-fault", c.inject_quadric_fault, "flip the quadric coefficient sign")
      ->group("");  // test hook, hidden from help

  auto* cur = app.add_subcommand("curve", "plane-section curves");
  cur->add_option("--m", c.m, "integer m >= 2");
  cur->add_option("--mode", c.mode, "profile or deltoid")->check(CLI::IsMember({"profile", "deltoid"}));
  cur->add_option("-o,--output", c.output, ".poly output");
  add_budget(cur, c);

  auto* inf = app.add_subcommand("integral-free", "integral-free form of the Weierstrass data");
  inf->add_option("--m", c.m, "integer m >= 2")->required();

  auto* frm = app.add_subcommand("formulas", "class and degree formulas");
  frm->add_option("--m", c.m, "integer or p/q")->required();

  auto* ben = app.add_subcommand("bench", "time the elimination jobs");
  ben->add_option("--suite", c.suite, "benchmark suite");
  ben->add_option("--repeat", c.repeat, "repetitions per job (best time is reported)");
  ben->add_flag("--allow-long", c.allow_long, "include the m = 4 degree job");
  add_budget(ben, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? bour::cli::kOk : bour::cli::kInvalidInput;
  }

  try {
    c.method = bour::elim::parse_method(method);
    if (!m_list.empty()) c.m_list = parse_m_list(m_list);
    if (*gen) return bour::cli::cmd_generate(c, std::cout);
    if (*imp) return bour::cli::cmd_implicitize(c, std::cout);
    if (*cls) return bour::cli::cmd_class(c, std::cout);
    if (*ver) return bour::cli::cmd_verify(c, std::cout);
    if (*cur) return bour::cli::cmd_curve(c, std::cout);
    if (*inf) return bour::cli::cmd_integral_free(c, std::cout);
    if (*frm) return bour::cli::cmd_formulas(c, std::cout);
    if (*ben) return bour::cli::cmd_bench(c, std::cout);
  } catch (const bour::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return bour::cli::kBudgetExceeded;
  } catch (const bour::InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return bour::cli::kInvalidInput;
  } catch (const bour::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bour::cli::kCheckFailed;
  }
  return bour::cli::kInvalidInput;
}
