#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

std::optional<std::string> read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace aluffi::cli;
  CLI::App app{"Exact ideal computations for blowup and Aluffi algebras"};
  app.require_subcommand(1);

  Options o;
  std::string format = "human";
  std::string input_path;
  std::size_t work_limit = 0;
  int degree_cap = 0;
  std::string order;

  app.add_option("--order", order, "Monomial order: lex, grevlex, weighted(w1,...)");
  app.add_option("--bound,-B", o.bound, "Degree bound B for torsion, Artin-Rees and relation type")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for sampled family members")->capture_default_str();
  app.add_option("--work-limit", work_limit, "Maximum S-pair reductions per Groebner basis");
  app.add_option("--degree-cap", degree_cap, "Internal degree cap for graded torsion dimensions");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine"}))->capture_default_str();

  auto group = [&](const std::string& name, const std::string& desc) {
    auto* s = app.add_subcommand(name, desc);
    s->fallthrough();
    s->require_subcommand(1);
    return s;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, bool input = true) {
    auto* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    if (input) s->add_option("input", input_path, "Input file, - for stdin")->required();
    return s;
  };

  leaf(&app, "gb", "Reduced Groebner basis of the first ideal");

  auto* ideal = group("ideal", "Ideal operations on the input's 'ideal:' lines");
  for (const char* op : {"sum", "product", "intersect", "quotient", "saturate", "contains", "equal", "dim", "mingens"})
    leaf(ideal, op, std::string("Ideal ") + op);
  leaf(ideal, "power", "t-th power")->add_option("--power,-t", o.power, "Exponent")->capture_default_str();
  auto* elim = leaf(ideal, "eliminate", "Eliminate variables");
  elim->add_option("--vars", o.vars, "Variables to eliminate")->delimiter(',');
  elim->add_option("--block", o.block, "Block to eliminate (geom, param)");
  leaf(ideal, "member", "Membership and radical membership")->add_option("--poly", o.poly, "Polynomial")->required();

  leaf(&app, "syz", "First syzygies of the first ideal's generators")
      ->add_flag("--full", o.full, "Keep redundant columns");
  leaf(&app, "minors", "Ideal of r x r minors of the input matrix")
      ->add_option("--size,-r", o.size, "Minor size")
      ->capture_default_str();

  auto* al = group("aluffi", "Rees, symmetric and Aluffi algebras of a pair J in I");
  for (const char* sub : {"present", "torsion", "linear-type", "ar-number", "reltype", "spread", "dim",
                          "verify-components"})
    leaf(al, sub, std::string("Aluffi algebra: ") + sub);

  leaf(&app, "curve-cert", "Linear-type certificate of a plane curve's gradient ideal");
  leaf(group("curve", "Plane curves"), "cert", "Linear-type certificate of the gradient ideal");

  auto* fam = group("family", "Parametric families of curves");
  auto* analyze = leaf(fam, "analyze", "Degeneration analysis");
  analyze->add_option("--samples", o.samples, "Random members to certify")->capture_default_str();
  analyze->add_option("--member", o.members, "Extra member parameter values, comma separated");
  analyze->add_option("--avoid", o.avoid, "Parameter polynomial sampled members must avoid");
  leaf(fam, "member", "Certify members")->add_option("--alpha", o.alpha, "Parameter values, comma separated")->required();

  auto* fx = group("fixtures", "Built-in fixtures");
  leaf(fx, "list", "List fixtures", false);
  auto* fxrun = leaf(fx, "run", "Run fixtures", false);
  fxrun->add_option("names", o.names, "Fixture names or catalog keys");
  fxrun->add_flag("--all", o.all, "Run every fixture");
  fxrun->add_option("--samples", o.samples, "Random members per family")->capture_default_str();

  auto* acc = leaf(&app, "acceptance", "Run the acceptance criteria", false);
  acc->add_option("--only", o.only, "Criterion number or tag");
  acc->add_option("--inject", o.inject, "Criteria to run on sign-flipped fixture data")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  Job job;
  for (const CLI::App* cur = &app; !cur->get_subcommands().empty();) {
    cur = cur->get_subcommands().front();
    job.command.push_back(cur->get_name());
  }
  if (!order.empty()) o.order = order;
  if (work_limit > 0) o.work_limit = work_limit;
  if (degree_cap > 0) o.degree_cap = degree_cap;
  job.options = o;
  if (!input_path.empty()) {
    auto text = read_input(input_path);
    if (!text) {
      std::cerr << "aluffi: cannot read '" << input_path << "'\n";
      return kInputError;
    }
    job.input = std::move(*text);
  }

  auto start = std::chrono::steady_clock::now();
  Outcome out = run(job);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (format == "machine") {
    std::cout << render_machine(out.report);
  } else {
    std::cout << render_human(out.report, seconds);
    if (out.report.contains("error")) std::cerr << "aluffi: " << out.report["error"].get<std::string>() << "\n";
  }
  return out.exit_code;
}
