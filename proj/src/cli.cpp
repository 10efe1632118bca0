#include "spiralcover/cli.hpp"

#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "spiralcover/bench.hpp"
#include "spiralcover/exact.hpp"
#include "spiralcover/io.hpp"

namespace spiralcover {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolveArgs {
  std::string algo;
  std::string input;
  std::optional<double> radius;
  std::uint64_t seed = 0;
  std::optional<std::size_t> trials;
  bool deterministic_start = false;
  std::string output;
  std::string svg;
  std::uint64_t oracle_nodes = 10'000'000;
};

struct GenArgs {
  std::size_t k = 0;
  double side = 0.0;
  double radius = 0.0;
  std::uint64_t seed = 0;
  std::string output;
};

struct BenchArgs {
  std::size_t k = 0;
  std::vector<double> ratios;
  std::size_t topologies = 5;
  std::vector<std::string> algos;
  std::uint64_t seed = 1;
  std::string report = "csv";
  std::string output;
  double side = std::sqrt(10.0);
  std::size_t trials = 100;
  std::uint64_t oracle_nodes = 1'000'000;
  bool deterministic_start = false;
  bool serial = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Algorithm algo = parse_algorithm(a.algo);
  if (a.trials && algo != Algorithm::kmeans && algo != Algorithm::random)
    throw UsageError("--trials applies only to kmeans and random");
  if (a.deterministic_start && algo != Algorithm::spiral)
    throw UsageError("--deterministic-start applies only to spiral");
  if (a.radius && !(*a.radius > 0.0)) throw UsageError("--radius must be positive");

  const Instance inst = read_instance_file(a.input, a.radius);
  SolveOptions opts;
  opts.seed = a.seed;
  opts.deterministic_start = a.deterministic_start;
  opts.trials.seed = a.seed;
  if (a.trials) opts.trials.trials = *a.trials;
  opts.trials.validate();
  opts.oracle_node_limit = a.oracle_nodes;

  const Solution sol = run_algorithm(algo, inst, opts);
  const std::string doc = solution_to_json(inst, sol).dump(2) + "\n";
  if (a.output.empty()) out << doc;
  else write_text_file(a.output, doc);
  if (!a.svg.empty()) write_text_file(a.svg, render_svg(inst, sol));
  return kOk;
}

int cmd_gen(const GenArgs& a) {
  if (a.k < 1) throw UsageError("--k must be at least 1");
  if (!(a.side > 0.0) || !std::isfinite(a.side)) throw UsageError("--side must be positive");
  if (!(a.radius > 0.0) || !std::isfinite(a.radius)) throw UsageError("--radius must be positive");
  Instance inst = generate_topology(a.k, a.side, a.seed);
  inst.radius = a.radius;
  write_text_file(a.output, instance_to_json(inst).dump(2) + "\n");
  return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  Campaign c;
  c.k = a.k;
  c.side = a.side;
  c.ratios = a.ratios;
  c.topologies = a.topologies;
  c.seed = a.seed;
  for (const auto& label : a.algos) c.algorithms.push_back(parse_algorithm(label));
  c.trials.trials = a.trials;
  c.spiral_deterministic_start = a.deterministic_start;
  c.oracle_node_limit = a.oracle_nodes;
  c.execution = a.serial ? Execution::serial : Execution::parallel;
  c.validate();

  const BenchReport report = run_campaign(c);
  const std::filesystem::path dir(a.output);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());

  if (a.report == "json") {
    write_text_file(dir / "report.json", report_to_json(report));
  } else {
    std::ostringstream raw, agg;
    write_raw_csv(raw, report);
    write_aggregate_csv(agg, report);
    write_text_file(dir / "raw.csv", raw.str());
    write_text_file(dir / "aggregate.csv", agg.str());
    out << agg.str();
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disk-cover placement of UAV base stations"};
  app.require_subcommand(1);
  const std::vector<std::string> algos{"spiral", "strip", "kmeans", "random", "oracle"};

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Cover an instance file with one algorithm");
  solve->add_option("--algo", sa.algo, "Algorithm")->required()->check(CLI::IsMember(algos));
  solve->add_option("--input", sa.input, "Instance JSON")->required();
  solve->add_option("--radius", sa.radius, "Coverage radius (km), overrides the file");
  solve->add_option("--seed", sa.seed, "Random seed");
  solve->add_option("--trials", sa.trials, "Trials for kmeans/random")->check(CLI::PositiveNumber);
  solve->add_flag("--deterministic-start", sa.deterministic_start,
                  "Start spiral at the bottom-left boundary GT");
  solve->add_option("--output", sa.output, "Solution JSON (default: stdout)");
  solve->add_option("--svg", sa.svg, "Write an SVG drawing");
  solve->add_option("--oracle-nodes", sa.oracle_nodes, "Node budget of the exact oracle");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a uniform random instance");
  gen->add_option("--k", ga.k, "Number of GTs")->required();
  gen->add_option("--side", ga.side, "Square side (km)")->required();
  gen->add_option("--radius", ga.radius, "Coverage radius (km)")->required();
  gen->add_option("--seed", ga.seed, "Random seed")->required();
  gen->add_option("--output", ga.output, "Instance JSON")->required();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Run a seeded comparison campaign");
  bench->add_option("--k", ba.k, "Number of GTs")->required();
  bench->add_option("--ratios", ba.ratios, "D/r values, comma separated")->required()->delimiter(',');
  bench->add_option("--topologies", ba.topologies, "Topologies per ratio")->required();
  bench->add_option("--algos", ba.algos, "Algorithms, comma separated")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember(algos));
  bench->add_option("--seed", ba.seed, "Base seed")->required();
  bench->add_option("--report", ba.report, "Report format")->required()->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--output", ba.output, "Output directory")->required();
  bench->add_option("--side", ba.side, "Square side D (km)");
  bench->add_option("--trials", ba.trials, "Trials for kmeans/random")->check(CLI::PositiveNumber);
  bench->add_option("--oracle-nodes", ba.oracle_nodes, "Node budget of the exact oracle");
  bench->add_flag("--deterministic-start", ba.deterministic_start, "Deterministic spiral start");
  bench->add_flag("--serial", ba.serial, "Run cells on one thread");

  std::vector<const char*> argv{"spiralcover"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(sa, out);
    if (*gen) return cmd_gen(ga);
    return cmd_bench(ba, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return kIoOrSchema;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoOrSchema;
  } catch (const BudgetExceeded& e) {
    err << "oracle: " << e.what() << '\n';
    return kBudget;
  }
}

}  // namespace spiralcover
