// Command-line front end: dip testing, seed-driven local clustering,
// synthetic instance generation, and cluster evaluation.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "loclu/dip.hpp"
#include "loclu/errors.hpp"
#include "loclu/graph.hpp"
#include "loclu/io.hpp"
#include "loclu/loclu.hpp"
#include "loclu/matrix.hpp"
#include "loclu/measures.hpp"
#include "loclu/synthetic.hpp"

namespace {

using loclu::InvalidInput;
using json = nlohmann::ordered_json;

void emit(const json& j, const std::string& output_path) {
  const std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!output_path.empty()) {
    std::ofstream out(output_path);
    if (!out) throw InvalidInput("cannot open " + output_path + " for writing");
    out << text << "\n";
  }
}

std::vector<std::size_t> parse_designated(const std::string& spec, std::size_t d) {
  std::vector<std::size_t> cols;
  if (spec == "none" || spec.empty()) return cols;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    const std::string tok = spec.substr(pos, end - pos);
    try {
      cols.push_back(std::stoul(tok));
    } catch (const std::exception&) {
      throw InvalidInput("bad designated attribute '" + tok + "'");
    }
    if (cols.back() >= d)
      throw InvalidInput("designated attribute " + tok + " out of range (d = " +
                         std::to_string(d) + ")");
    pos = end + 1;
  }
  return cols;
}

int cmd_dip(const std::string& input, std::size_t column, const loclu::DipConfig& cfg) {
  const loclu::AttributeMatrix attrs = loclu::load_attributes(input, SIZE_MAX);
  if (column >= attrs.cols)
    throw InvalidInput("column " + std::to_string(column) + " out of range (file has " +
                       std::to_string(attrs.cols) + ")");
  const loclu::DipResult r = loclu::dip_test(attrs.column(column), cfg);
  json j;
  j["command"] = "dip";
  j["input"] = input;
  j["column"] = column;
  j["n"] = attrs.rows;
  j["dip"] = r.dip;
  j["p_value"] = *r.p_value;
  j["unimodal"] = r.unimodal(cfg.alpha);
  j["alpha"] = cfg.alpha;
  j["modal_low"] = r.modal_low;
  j["modal_high"] = r.modal_high;
  j["modal_index_low"] = r.modal_index_low;
  j["modal_index_high"] = r.modal_index_high;
  emit(j, "");
  return 0;
}

struct ClusterArgs {
  std::string graph_path, attrs_path, labels_path, output_path, members_path;
  std::uint32_t seed_vertex = 0;
  std::string designated = "auto";
  loclu::DipConfig dip_cfg;
  loclu::PowerIterConfig pi_cfg;
};

int cmd_cluster(const ClusterArgs& args) {
  loclu::LoadStats stats;
  const loclu::Graph graph = loclu::load_graph(args.graph_path, &stats);
  if (stats.self_loops_dropped || stats.duplicate_edges_merged)
    std::cerr << "warning: dropped " << stats.self_loops_dropped << " self-loop(s), merged "
              << stats.duplicate_edges_merged << " duplicate edge(s)\n";
  const loclu::AttributeMatrix attrs =
      loclu::load_attributes(args.attrs_path, graph.vertex_count());

  loclu::Preference pref;
  pref.seed_id = args.seed_vertex;
  bool auto_mode = false;
  if (args.designated == "auto") {
    auto_mode = true;
    pref.designated = {loclu::auto_designate(attrs)};
  } else {
    pref.designated = parse_designated(args.designated, attrs.cols);
  }

  args.pi_cfg.validate();
  const loclu::ClusterResult result =
      loclu::run_loclu(graph, attrs, pref, args.pi_cfg, args.dip_cfg);

  json j;
  j["command"] = "cluster";
  j["config"] = {{"graph", args.graph_path},
                 {"attributes", args.attrs_path},
                 {"seed_vertex", args.seed_vertex},
                 {"designated", pref.designated},
                 {"designated_mode", auto_mode ? "auto" : "explicit"},
                 {"alpha", args.dip_cfg.alpha},
                 {"bootstrap_b", args.dip_cfg.bootstrap_b},
                 {"epsilon_hat", args.pi_cfg.epsilon_hat},
                 {"max_iter", args.pi_cfg.max_iter},
                 {"rng_seed", args.dip_cfg.rng_seed}};
  j["embedding_iterations"] = result.embedding.iterations;
  json dips = json::array();
  for (const auto& info : result.per_attribute_dips) {
    dips.push_back({{"attribute", info.attribute},
                    {"is_embedding", info.attribute == attrs.cols},
                    {"dip", info.dip},
                    {"p_value", info.p_value}});
  }
  j["per_attribute_dips"] = dips;
  j["member_count"] = result.members.size();
  j["members"] = result.members;
  j["gu"] = result.gu;
  j["au"] = result.au;
  j["compactness"] = result.compactness;

  if (!args.labels_path.empty()) {
    const auto labels = loclu::load_labels(args.labels_path, graph.vertex_count());
    const auto truth = loclu::truth_cluster_of(labels, args.seed_vertex);
    j["f1"] = loclu::f1_score(result.members, truth);
    j["nmi"] = loclu::nmi(result.members, truth, graph.vertex_count());
  }

  emit(j, args.output_path);
  if (!args.members_path.empty()) loclu::save_member_list(args.members_path, result.members);
  return 0;
}

struct GenerateArgs {
  std::string out_prefix;
  std::string sizes = "500,500";
  std::string variable;  // "lo:hi:k" alternative
  loclu::SyntheticSpec spec;
};

int cmd_generate(GenerateArgs& args) {
  if (!args.variable.empty()) {
    std::size_t lo = 0, hi = 0, k = 0;
    if (std::sscanf(args.variable.c_str(), "%zu:%zu:%zu", &lo, &hi, &k) != 3)
      throw InvalidInput("--variable-sizes expects lo:hi:k");
    const auto base = loclu::variable_size_spec(lo, hi, k, args.spec.rng_seed);
    args.spec.cluster_sizes = base.cluster_sizes;
  } else {
    args.spec.cluster_sizes.clear();
    for (std::size_t s : parse_designated(args.sizes, SIZE_MAX))
      args.spec.cluster_sizes.push_back(s);
  }
  const loclu::SyntheticInstance inst = loclu::generate(args.spec);

  const std::string graph_path = args.out_prefix + ".edges";
  const std::string attrs_path = args.out_prefix + ".attrs.csv";
  const std::string labels_path = args.out_prefix + ".labels";
  loclu::save_graph(graph_path, inst.graph);
  loclu::save_attributes(attrs_path, inst.attributes);
  loclu::save_labels(labels_path, inst.truth_labels);

  json j;
  j["command"] = "generate";
  j["graph"] = graph_path;
  j["attributes"] = attrs_path;
  j["labels"] = labels_path;
  j["n"] = inst.graph.vertex_count();
  j["edges"] = inst.graph.edge_count();
  j["d"] = inst.attributes.cols;
  j["clusters"] = 2 * args.spec.cluster_sizes.size();
  j["rng_seed"] = args.spec.rng_seed;
  emit(j, "");
  return 0;
}

int cmd_eval(const std::string& detected_path, const std::string& truth_path, std::size_t n) {
  const auto detected = loclu::load_member_list(detected_path, n);
  const auto truth = loclu::load_member_list(truth_path, n);
  json j;
  j["command"] = "eval";
  j["n"] = n;
  j["detected_size"] = detected.size();
  j["truth_size"] = truth.size();
  j["nmi"] = loclu::nmi(detected, truth, n);
  j["f1"] = loclu::f1_score(detected, truth);
  emit(j, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seed-driven local clustering on attributed graphs"};
  app.require_subcommand(1);

  // dip
  auto* dip = app.add_subcommand("dip", "Dip test one CSV column");
  std::string dip_input;
  std::size_t dip_column = 0;
  loclu::DipConfig dip_cfg;
  dip->add_option("--input", dip_input, "attribute CSV")->required();
  dip->add_option("--column", dip_column, "0-based column index");
  dip->add_option("--alpha", dip_cfg.alpha, "significance level");
  dip->add_option("--bootstrap", dip_cfg.bootstrap_b, "bootstrap replicates");
  dip->add_option("--seed", dip_cfg.rng_seed, "RNG seed");

  // cluster
  auto* cluster = app.add_subcommand("cluster", "Local cluster around a seed vertex");
  ClusterArgs cargs;
  cluster->add_option("--graph", cargs.graph_path, "edge list file")->required();
  cluster->add_option("--attrs", cargs.attrs_path, "attribute CSV")->required();
  cluster->add_option("--labels", cargs.labels_path, "ground-truth labels (optional)");
  cluster->add_option("--seed-vertex", cargs.seed_vertex, "seed vertex id")->required();
  cluster->add_option("--designated", cargs.designated,
                      "comma-separated attribute columns, 'auto', or 'none'");
  cluster->add_option("--alpha", cargs.dip_cfg.alpha, "significance level");
  cluster->add_option("--bootstrap", cargs.dip_cfg.bootstrap_b, "bootstrap replicates");
  cluster->add_option("--epsilon", cargs.pi_cfg.epsilon_hat, "power iteration stop threshold");
  cluster->add_option("--max-iter", cargs.pi_cfg.max_iter, "power iteration cap");
  cluster->add_option("--seed", cargs.dip_cfg.rng_seed, "RNG seed");
  cluster->add_option("--output", cargs.output_path, "also write the JSON report here");
  cluster->add_option("--members-out", cargs.members_path, "write member ids, one per line");

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a planted-partition instance");
  GenerateArgs gargs;
  gen->add_option("--out", gargs.out_prefix, "output path prefix")->required();
  gen->add_option("--sizes", gargs.sizes, "comma-separated block sizes");
  gen->add_option("--variable-sizes", gargs.variable, "lo:hi:k random block sizes");
  gen->add_option("--attrs", gargs.spec.d, "attribute columns");
  gen->add_option("--relevant-ratio", gargs.spec.relevant_ratio, "share of relevant columns");
  gen->add_option("--p-in", gargs.spec.p_in, "within-block edge probability");
  gen->add_option("--p-out", gargs.spec.p_out, "between-block edge probability");
  gen->add_option("--min-separation", gargs.spec.min_mean_separation,
                  "minimum pairwise distance of relevant cluster means");
  gen->add_option("--seed", gargs.spec.rng_seed, "RNG seed");

  // eval
  auto* eval = app.add_subcommand("eval", "Score a detected member list against truth");
  std::string eval_detected, eval_truth;
  std::size_t eval_n = 0;
  eval->add_option("--detected", eval_detected, "detected member list")->required();
  eval->add_option("--truth", eval_truth, "truth member list")->required();
  eval->add_option("--n", eval_n, "total vertex count")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (dip->parsed()) return cmd_dip(dip_input, dip_column, dip_cfg);
    if (cluster->parsed()) {
      cargs.pi_cfg.rng_seed = cargs.dip_cfg.rng_seed;
      return cmd_cluster(cargs);
    }
    if (gen->parsed()) return cmd_generate(gargs);
    if (eval->parsed()) return cmd_eval(eval_detected, eval_truth, eval_n);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
