#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "anonykit/bin_cover.hpp"
#include "anonykit/io.hpp"
#include "anonykit/rect_partition.hpp"
#include "anonykit/rng.hpp"
#include "anonykit/sweep.hpp"
#include "anonykit/tree_partition.hpp"

namespace {

using nlohmann::json;
using namespace anonykit;

std::pair<Size, Size> parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      std::size_t used_n = 0, used_d = 0;
      const std::string ns = text.substr(0, slash);
      const std::string ds = text.substr(slash + 1);
      const long long n = std::stoll(ns, &used_n);
      const long long d = std::stoll(ds, &used_d);
      if (used_n == ns.size() && used_d == ds.size()) return {n, d};
    } catch (const std::exception&) {
    }
  }
  fail(errc::parse_error, "expected a fraction like 1/2, got '" + text + "'");
}

std::vector<int> make_order(const ValidatedInstance& inst,
                            const std::string& mode, std::uint64_t seed) {
  std::vector<int> order(inst.n());
  std::iota(order.begin(), order.end(), 0);
  if (mode == "sorted") {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return inst.size(a) > inst.size(b); });
  } else if (mode == "random") {
    fisher_yates(order, seed);
  }
  return order;
}

void print_packing(json& out, const Packing& packing, Size k) {
  out["cost"] = packing.cost();
  out["min_level"] = packing.min_level();
  out["feasible"] = packing.feasible();
  out["ratio"] = format_ratio(packing.cost(), k);
  out["bins"] = packing.bins();
  out["bin_levels"] = packing.levels();
}

void bincover_solve(const std::string& file, const std::string& algo, Size k,
                    const std::string& eps_text, const std::string& order_mode,
                    std::uint64_t seed, std::uint64_t budget) {
  const auto inst = validate_instance({load_sizes(file), k});
  const auto order = make_order(inst, order_mode, seed);

  json out;
  out["input"] = file;
  out["n"] = inst.n();
  out["k"] = k;
  out["algorithm"] = algo;
  out["order"] = order_mode;
  if (order_mode == "random") out["seed"] = seed;

  std::optional<Packing> packing;
  if (algo == "fold") {
    packing = fold(inst, order);
  } else if (algo == "spread") {
    packing = spread(inst);
  } else if (algo == "spread-exp") {
    packing = spread_experimental(inst, order);
  } else {
    if (eps_text.empty()) {
      fail(errc::precondition_violated,
           "--epsilon p/q is required for --algo " + algo);
    }
    const auto [p, q] = parse_fraction(eps_text);
    out["epsilon"] = format_ratio(p, q);
    PtasOptions opts;
    opts.budget = budget;
    if (algo == "ptas") {
      packing = approx_two_eps(inst, p, q, opts);
    } else {
      const RelaxedPacking relaxed = relaxed_one_eps(inst, p, q, opts);
      packing = relaxed.packing;
    }
  }
  print_packing(out, *packing, k);
  std::cout << out.dump(2) << "\n";
}

void graph_partition(const std::string& file, std::optional<Size> k_override) {
  const GraphInstance gi = load_graph_instance(file);
  const WeightedGraph g(gi.n, gi.edges, gi.weights);
  const Size k = k_override.value_or(gi.k);
  std::optional<SpanningTree> supplied;
  if (gi.tree_edges) supplied = validate_supplied_tree(g, *gi.tree_edges);

  const GraphPartition part =
      partition_graph(g, k, supplied ? &*supplied : nullptr);
  json out;
  out["input"] = file;
  out["n"] = gi.n;
  out["k"] = k;
  out["kappa"] = part.kappa;
  out["tree_degree"] = part.tree_degree;
  out["bound"] = part.bound();
  out["cost"] = part.cost();
  out["parts"] = part.parts;
  out["part_weights"] = part.part_weights;
  out["supplied_tree"] = gi.tree_edges.has_value();
  std::cout << out.dump(2) << "\n";
}

void warn_merged(const WeightedPointSet& pts) {
  if (pts.merged_duplicates() > 0) {
    std::cerr << "warning: merged " << pts.merged_duplicates()
              << " duplicate locations by summing weights\n";
  }
}

void rect_partition_cmd(const std::string& file, Size k) {
  const WeightedPointSet pts = load_point_csv(file);
  warn_merged(pts);
  const RectTree tree = kd_partition(pts, k);
  std::cout << "x_lo,x_hi,y_lo,y_hi,weight\n";
  for (int idx : tree.leaves()) {
    const RectNode& nd = tree.nodes()[idx];
    std::cout << nd.rect.x_lo << ',' << nd.rect.x_hi << ',' << nd.rect.y_lo
              << ',' << nd.rect.y_hi << ',' << nd.weight << "\n";
  }
}

void oracle_bincover(const std::string& file, Size k) {
  const auto inst = validate_instance({load_sizes(file), k});
  const ExactResult res = exact_min_max(inst);
  json out;
  out["input"] = file;
  out["k"] = k;
  out["cost"] = res.cost;
  out["ratio"] = format_ratio(res.cost, k);
  out["bins"] = res.packing.bins();
  std::cout << out.dump(2) << "\n";
}

void oracle_graph(const std::string& file, std::optional<Size> k_override) {
  const GraphInstance gi = load_graph_instance(file);
  const WeightedGraph g(gi.n, gi.edges, gi.weights);
  const Size k = k_override.value_or(gi.k);
  const ExactGraphResult res = exact_connected_partition(g, k);
  json out;
  out["input"] = file;
  out["k"] = k;
  out["cost"] = res.cost;
  out["parts"] = res.parts;
  std::cout << out.dump(2) << "\n";
}

void oracle_rect(const std::string& file, Size k) {
  const WeightedPointSet pts = load_point_csv(file);
  warn_merged(pts);
  const GuillotineResult res = guillotine_optimal(pts, k);
  json out;
  out["input"] = file;
  out["k"] = k;
  out["cost"] = res.cost;
  json leaves = json::array();
  for (int idx : res.tree.leaves()) {
    const RectNode& nd = res.tree.nodes()[idx];
    leaves.push_back({{"x_lo", nd.rect.x_lo},
                      {"x_hi", nd.rect.x_hi},
                      {"y_lo", nd.rect.y_lo},
                      {"y_hi", nd.rect.y_hi},
                      {"weight", nd.weight}});
  }
  out["leaves"] = leaves;
  std::cout << out.dump(2) << "\n";
}

void sweep_cmd(const std::string& file, const std::vector<std::string>& algos,
               int samples, std::uint64_t seed, Size scale,
               const std::string& csv, const std::string& svg, bool linear) {
  const FrequencyTable table = load_frequency_table(file, scale);
  std::vector<SweepVariant> variants;
  if (algos.empty()) {
    for (const char* name :
         {"random-fold", "sorted-fold", "random-spread", "sorted-spread"}) {
      variants.push_back(parse_variant(name));
    }
  } else {
    for (const auto& name : algos) variants.push_back(parse_variant(name));
  }
  const KGrid grid = linear ? linear_k_grid(table, samples)
                            : default_k_grid(table, samples);
  if (grid.degenerate) {
    std::cerr << "warning: total count is below twice the largest count; "
                 "sweeping the single point k=" << grid.values[0] << "\n";
  }
  const SweepReport report = run_sweep(table, variants, grid.values, seed);
  emit_report(report, csv,
              svg.empty() ? std::nullopt : std::optional<std::string>(svg));
  std::cerr << "wrote " << report.rows.size() << " rows over "
            << grid.values.size() << " k values to " << csv
            << (svg.empty() ? "" : " and " + svg) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "k-anonymization solvers: bin covering over group sizes, connected "
      "graph partition, and rectangular point-set partition"};
  app.require_subcommand(1);

  // bincover solve
  std::string bc_file, bc_algo, bc_eps, bc_order = "given";
  Size bc_k = 0;
  std::uint64_t bc_seed = 0, bc_budget = 10'000'000;
  auto* bincover = app.add_subcommand("bincover", "bin covering solvers");
  bincover->require_subcommand(1);
  auto* solve = bincover->add_subcommand(
      "solve", "partition group sizes into bins of level >= k");
  solve->add_option("--algo", bc_algo, "solver")
      ->required()
      ->check(CLI::IsMember({"fold", "spread", "spread-exp", "ptas", "relaxed"}));
  solve->add_option("--k", bc_k, "anonymity parameter")->required();
  solve->add_option("--epsilon", bc_eps,
                    "accuracy p/q for ptas/relaxed (e.g. 1/4)");
  solve->add_option("--order", bc_order, "item presentation order")
      ->check(CLI::IsMember({"given", "sorted", "random"}));
  solve->add_option("--seed", bc_seed, "shuffle seed for --order random");
  solve->add_option("--budget", bc_budget,
                    "enumeration budget for ptas/relaxed");
  solve->add_option("file", bc_file, "whitespace-separated group sizes")
      ->required();
  solve->callback([&] {
    bincover_solve(bc_file, bc_algo, bc_k, bc_eps, bc_order, bc_seed,
                   bc_budget);
  });

  // sweep
  std::string sw_file, sw_csv, sw_svg;
  std::vector<std::string> sw_algos;
  int sw_samples = 200;
  std::uint64_t sw_seed = 0;
  Size sw_scale = 1000;
  bool sw_linear = false;
  auto* sweep = app.add_subcommand(
      "sweep", "run solver variants over a grid of k values");
  sweep->add_option("--algos", sw_algos,
                    "variants: {random,sorted}-{fold,spread} (default: all)")
      ->delimiter(',');
  sweep->add_option("--samples", sw_samples, "grid size (default 200)");
  sweep->add_option("--seed", sw_seed, "master shuffle seed");
  sweep->add_option("--scale", sw_scale,
                    "percent-to-count scale factor (default 1000)");
  sweep->add_option("--csv", sw_csv, "output CSV path")->required();
  sweep->add_option("--svg", sw_svg, "optional SVG chart path");
  sweep->add_flag("--linear", sw_linear, "linear k grid instead of log-spaced");
  sweep->add_option("file", sw_file, "NAME FREQ CUMFREQ RANK frequency file")
      ->required();
  sweep->callback([&] {
    sweep_cmd(sw_file, sw_algos, sw_samples, sw_seed, sw_scale, sw_csv, sw_svg,
              sw_linear);
  });

  // graph partition
  std::string gp_file;
  Size gp_k = 0;
  auto* graph = app.add_subcommand("graph", "graph partition solvers");
  graph->require_subcommand(1);
  auto* gpart = graph->add_subcommand(
      "partition", "split a vertex-weighted graph into connected parts");
  auto* gp_kopt =
      gpart->add_option("--k", gp_k, "override the k from the file header");
  gpart->add_option("file", gp_file, "graph instance file")->required();
  gpart->callback([&] {
    graph_partition(gp_file, gp_kopt->count()
                                 ? std::optional<Size>(gp_k)
                                 : std::nullopt);
  });

  // rect partition
  std::string rp_file;
  Size rp_k = 0;
  auto* rect = app.add_subcommand("rect", "rectangle partition solvers");
  rect->require_subcommand(1);
  auto* rpart = rect->add_subcommand(
      "partition", "cut the plane into rectangles of weight >= k");
  rpart->add_option("--k", rp_k, "anonymity parameter")->required();
  rpart->add_option("file", rp_file, "point CSV with header x,y,weight")
      ->required();
  rpart->callback([&] { rect_partition_cmd(rp_file, rp_k); });

  // oracle
  std::string ob_file, og_file, or_file;
  Size ob_k = 0, og_k = 0, or_k = 0;
  auto* oracle = app.add_subcommand("oracle", "small-instance exact solvers");
  oracle->require_subcommand(1);
  auto* ob = oracle->add_subcommand("bincover", "exact min-max bin covering");
  ob->add_option("--k", ob_k, "anonymity parameter")->required();
  ob->add_option("file", ob_file, "whitespace-separated group sizes")
      ->required();
  ob->callback([&] { oracle_bincover(ob_file, ob_k); });
  auto* og = oracle->add_subcommand("graph", "exact connected partition");
  auto* og_kopt =
      og->add_option("--k", og_k, "override the k from the file header");
  og->add_option("file", og_file, "graph instance file")->required();
  og->callback([&] {
    oracle_graph(og_file, og_kopt->count() ? std::optional<Size>(og_k)
                                           : std::nullopt);
  });
  auto* orr = oracle->add_subcommand("rect", "exact guillotine partition");
  orr->add_option("--k", or_k, "anonymity parameter")->required();
  orr->add_option("file", or_file, "point CSV with header x,y,weight")
      ->required();
  orr->callback([&] { oracle_rect(or_file, or_k); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.infeasible() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
