// Command-line front end for the mhg library.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mhg/json_io.hpp"
#include "mhg/mhg.hpp"

namespace {

using nlohmann::json;
using namespace mhg;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

/// Input error reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::optional<int> m;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;
};

RawParams raw_from(const std::vector<int>& v) {
  if (v.size() != 5) throw UsageError("expected 5 parameters: delta K1 K2 C0 C1");
  return {v[0], v[1], v[2], v[3], v[4]};
}

ParameterSequence admissible_from(const std::vector<int>& v) {
  const RawParams raw = raw_from(v);
  const auto c = classify(raw);
  if (!is_admissible(c))
    throw UsageError("parameters " + ParameterSequence::describe(raw) + " are not admissible (" +
                     std::string(to_string(c)) + ")");
  return ParameterSequence(raw);
}

MagicContext context_for(const ParameterSequence& p, const Globals& g) {
  try {
    return MagicContext(p, g.m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

EdgeLabelledGraph load_graph(const std::string& path, const ParameterSequence& p) {
  auto g = read_graph_file(path);
  if (g.max_label() > p.delta())
    throw UsageError(path + ": label " + std::to_string(g.max_label()) + " exceeds delta " +
                     std::to_string(p.delta()));
  return g;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> parse_cycle(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("--cycle: '" + item + "' is not an integer");
    }
  }
  if (out.size() < 3) throw UsageError("--cycle: a cycle needs at least 3 labels");
  return out;
}

json params_json(const RawParams& raw) {
  const auto c = classify(raw);
  json j = {{"params", to_json(raw)},
            {"acceptable", c != AdmissibilityCase::NotAcceptable},
            {"admissible", is_admissible(c)},
            {"case", std::string(to_string(c))}};
  j["C"] = std::min(raw.c0, raw.c1);
  j["C_prime"] = std::max(raw.c0, raw.c1);
  return j;
}

int cmd_params_check(const std::vector<int>& v) {
  print_json(params_json(raw_from(v)));
  return 0;
}

int cmd_params_list(int delta, const Globals& g) {
  if (delta < 3) throw UsageError("delta must be at least 3");
  const auto all = enumerate_admissible(delta);
  if (g.json) {
    json arr = json::array();
    for (const auto& p : all) arr.push_back(params_json(p.raw()));
    print_json(arr);
  } else {
    for (const auto& p : all) std::cout << p.to_string() << ' ' << to_string(p.admissibility()) << '\n';
  }
  return 0;
}

int cmd_magic_show(const std::vector<int>& v, const Globals& g) {
  const auto p = admissible_from(v);
  const auto ctx = context_for(p, g);
  const int d = p.delta();
  if (g.json) {
    json table = json::array(), kinds = json::array(), times = json::object();
    for (int x = 1; x <= d; ++x) {
      json row = json::array(), krow = json::array();
      for (int y = 1; y <= d; ++y) {
        row.push_back(ctx.oplus(x, y));
        krow.push_back(std::string(to_string(ctx.fork_kind(x, y))));
      }
      table.push_back(row);
      kinds.push_back(krow);
      const int t = ctx.time(x);
      times[std::to_string(x)] = t == kInfiniteTime ? json("inf") : json(t);
    }
    print_json({{"params", to_json(p.raw())},
                {"candidates", magic_distances(p)},
                {"m", ctx.m()},
                {"permutation", ctx.permutation()},
                {"time", times},
                {"oplus", table},
                {"fork_kind", kinds}});
    return 0;
  }
  std::cout << "params      " << p.to_string() << " case " << to_string(p.admissibility()) << '\n';
  std::cout << "candidates  " << join(magic_distances(p), " ") << '\n';
  std::cout << "M           " << ctx.m() << '\n';
  std::cout << "permutation " << join(ctx.permutation(), " ") << '\n';
  std::cout << "time       ";
  for (int x = 1; x <= d; ++x) {
    const int t = ctx.time(x);
    std::cout << ' ' << x << ':' << (t == kInfiniteTime ? std::string("inf") : std::to_string(t));
  }
  std::cout << "\n\n  (+)";
  for (int y = 1; y <= d; ++y) std::cout << std::setw(4) << y;
  std::cout << '\n';
  for (int x = 1; x <= d; ++x) {
    std::cout << std::setw(5) << x;
    for (int y = 1; y <= d; ++y) std::cout << std::setw(4) << ctx.oplus(x, y);
    std::cout << '\n';
  }
  return 0;
}

int cmd_graph_check(const std::string& path, const std::vector<int>& v, const Globals& g) {
  const auto p = admissible_from(v);
  const auto graph = load_graph(path, p);
  const auto bad = first_forbidden_triangle(p, graph);
  const bool member = is_member_A(p, graph);
  json tri = nullptr;
  if (bad) {
    const auto [u, w, x] = *bad;
    const auto verdict = triangle_verdict(p, graph.label(u, w), graph.label(u, x), graph.label(w, x));
    std::vector<std::string> names;
    for (auto n : verdict.names()) names.emplace_back(n);
    tri = {{"vertices", {u, w, x}},
           {"labels", {graph.label(u, w), graph.label(u, x), graph.label(w, x)}},
           {"violations", names}};
  }
  if (g.json) {
    print_json({{"member", member}, {"complete", graph.is_complete()}, {"forbidden_triangle", tri}});
    return 0;
  }
  std::cout << "member    " << (member ? "yes" : "no") << '\n';
  std::cout << "complete  " << (graph.is_complete() ? "yes" : "no") << '\n';
  if (bad) {
    std::cout << "triangle  " << join(tri["vertices"].get<std::vector<int>>()) << " labels "
              << join(tri["labels"].get<std::vector<int>>()) << " violates";
    for (const auto& n : tri["violations"]) std::cout << ' ' << n.get<std::string>();
    std::cout << '\n';
  } else {
    std::cout << "triangle  none\n";
  }
  return 0;
}

int cmd_complete(const std::string& path, const std::vector<int>& v, bool trace, const Globals& g) {
  const auto p = admissible_from(v);
  const auto ctx = context_for(p, g);
  const auto graph = load_graph(path, p);
  const auto result = magic_complete(ctx, graph);
  json out = {{"m", ctx.m()}, {"graph", to_json(result.graph)}, {"in_A", is_member_A(p, result.graph)}};
  if (trace) out["trace"] = to_json(result.trace);
  print_json(out);
  return 0;
}

json witness_list(const ParameterSequence& p, const std::vector<int>& labels) {
  json arr = json::array();
  for (const auto& w : classify_cycle(p, LabelledCycle(labels))) arr.push_back(to_json(w));
  return arr;
}

int cmd_family_classify(const std::vector<int>& v, const std::string& cycle_text, const Globals& g) {
  const auto p = admissible_from(v);
  const auto labels = parse_cycle(cycle_text);
  for (int l : labels)
    if (l < 1 || l > p.delta()) throw UsageError("--cycle: label " + std::to_string(l) + " out of range");
  const LabelledCycle c(labels);
  const bool forbidden = in_F(p, c);
  const auto all = classify_cycle(p, c);
  if (g.json) {
    print_json({{"cycle", labels}, {"in_F", forbidden}, {"decompositions", witness_list(p, labels)}});
    return 0;
  }
  std::cout << c.to_string() << (forbidden ? " is in F" : " is not in F") << '\n';
  for (const auto& w : all) {
    std::cout << "  " << to_string(w.tag) << " n=" << w.n << " d=[" << join(w.d_edges) << "] x=["
              << join(w.x_edges) << "]\n";
  }
  return 0;
}

int cmd_family_enumerate(const std::vector<int>& v, const Globals& g) {
  const auto p = admissible_from(v);
  const auto tags = detail::forbidden_tags(p);
  const auto members = enumerate_F(p);
  json arr = json::array();
  for (const auto& c : members) {
    std::vector<std::string> names;
    for (auto t : tags)
      if (in_family(p, t, c.labels())) names.emplace_back(to_string(t));
    if (g.json) {
      arr.push_back({{"cycle", c.labels()}, {"families", names}});
    } else {
      std::cout << c.to_string();
      for (const auto& n : names) std::cout << ' ' << n;
      std::cout << '\n';
    }
  }
  if (g.json) print_json({{"params", to_json(p.raw())}, {"bound", length_bound(p)}, {"members", arr}});
  return 0;
}

int cmd_family_witness(const std::string& path, const std::vector<int>& v, const Globals& g) {
  const auto p = admissible_from(v);
  const auto graph = load_graph(path, p);
  const auto w = find_forbidden_witness(p, graph);
  if (g.json) {
    print_json({{"witness", w ? to_json(*w) : json(nullptr)}});
  } else if (w) {
    std::cout << "walk " << join(w->walk) << " labels " << w->cycle.to_string() << ' '
              << to_string(w->witness.tag) << '\n';
  } else {
    std::cout << "none\n";
  }
  return w ? kExitMismatch : 0;
}

int cmd_verify(const std::vector<int>& v, int n_max, std::optional<std::uint64_t> sample,
               std::uint64_t seed, const Globals& g) {
  const auto p = admissible_from(v);
  if (n_max < 1 || n_max > 8) throw UsageError("--n-max must be between 1 and 8");
  if (sample && *sample == 0) throw UsageError("--sample must be positive");
  VerifyOptions opt;
  opt.n_max = n_max;
  opt.sample_count = sample;
  opt.seed = seed;
  opt.threads = g.threads;
  opt.budget = g.budget;
  opt.magic = g.m;
  context_for(p, g);
  EquivalenceReport r;
  try {
    r = verify_equivalence(p, opt);
  } catch (const BudgetExceeded& e) {
    throw UsageError(e.what());
  }
  if (g.json) {
    print_json(to_json(r));
  } else {
    std::cout << "params                  " << p.to_string() << " M=" << r.magic << '\n';
    std::cout << "mode                    " << (r.sampled ? "sample" : "exhaustive");
    if (r.sampled) std::cout << " seed=" << r.seed;
    if (r.iso_reduced) std::cout << " iso-reduced";
    std::cout << '\n';
    std::cout << "graphs enumerated       " << r.graphs_enumerated << '\n';
    std::cout << "graphs checked          " << r.graphs_checked << '\n';
    std::cout << "completable             " << r.completable << '\n';
    std::cout << "mismatches              " << r.mismatches.size() << '\n';
    std::cout << "magic mismatches        " << r.magic_mismatches.size() << '\n';
    std::cout << "fallback events         " << r.fallback_events << '\n';
    std::cout << "fallback disagreements  " << r.fallback_disagreements << '\n';
    for (const auto& m : r.mismatches) std::cout << "mismatch " << to_json(m).dump() << '\n';
  }
  return r.mismatches.empty() ? 0 : kExitMismatch;
}

json cells_json(const OneDeltaTable& t) {
  json arr = json::array();
  for (const auto& [cell, tag] : t.cells) arr.push_back({cell.first, cell.second});
  return arr;
}

int cmd_table(const std::vector<int>& v, const Globals& g) {
  const auto t = build_table(admissible_from(v));
  if (g.json) {
    print_json(to_json(t));
  } else {
    std::cout << render_table_text(t);
  }
  return 0;
}

int cmd_twisted(const std::vector<int>& v1, const std::vector<int>& v2, const Globals& g) {
  const auto a = admissible_from(v1), b = admissible_from(v2);
  const auto ta = build_table(a), tb = build_table(b);
  const bool twisted = is_twisted_pair(a, b);
  if (g.json) {
    print_json({{"twisted", twisted},
                {"first", {{"params", to_json(a.raw())}, {"cells", cells_json(ta)}}},
                {"second", {{"params", to_json(b.raw())}, {"cells", cells_json(tb)}}}});
    return 0;
  }
  std::cout << "twisted " << (twisted ? "yes" : "no") << '\n';
  for (const auto* t : {&ta, &tb}) {
    std::cout << ParameterSequence::describe(t->params);
    for (const auto& [cell, tag] : t->cells) std::cout << " (" << cell.first << ',' << cell.second << ')';
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forbidden cycles of 3-constrained metrically homogeneous graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  int m_value = 0;
  app.add_flag("--json", g.json, "Machine-readable output");
  auto* m_opt = app.add_option("--m", m_value, "Magic distance override");
  app.add_option("--budget", g.budget, "Oracle assignment cap")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads for sweeps (0 = hardware)");

  std::vector<int> params, params2;
  std::string path, cycle_text;
  bool trace = false;
  int delta = 0, n_max = 4;
  std::uint64_t sample = 0, seed = 1;

  auto* params_cmd = app.add_subcommand("params", "Parameter admissibility");
  params_cmd->require_subcommand(1);
  auto* params_check = params_cmd->add_subcommand("check", "Classify a parameter tuple");
  params_check->add_option("values", params, "delta K1 K2 C0 C1")->expected(5)->required();
  auto* params_list = params_cmd->add_subcommand("list", "List admissible tuples");
  params_list->add_option("delta", delta)->required();

  auto* magic_cmd = app.add_subcommand("magic", "Magic distances and the oplus table");
  magic_cmd->require_subcommand(1);
  auto* magic_show = magic_cmd->add_subcommand("show", "Show M candidates, permutation and table");
  magic_show->add_option("values", params, "delta K1 K2 C0 C1")->expected(5)->required();

  const auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--params", params, "delta K1 K2 C0 C1")->expected(5)->required();
  };

  auto* graph_cmd = app.add_subcommand("graph", "Graph checks");
  graph_cmd->require_subcommand(1);
  auto* graph_check = graph_cmd->add_subcommand("check", "Membership and first forbidden triangle");
  graph_check->add_option("file", path)->required();
  add_params(graph_check);

  auto* complete_cmd = app.add_subcommand("complete", "Magic completion of a graph");
  complete_cmd->add_option("file", path)->required();
  add_params(complete_cmd);
  complete_cmd->add_flag("--trace", trace, "Include the per-stage fill log");

  auto* family_cmd = app.add_subcommand("family", "Forbidden cycle families");
  family_cmd->require_subcommand(1);
  auto* family_classify = family_cmd->add_subcommand("classify", "Decompose a cycle");
  add_params(family_classify);
  family_classify->add_option("--cycle", cycle_text, "Comma-separated labels")->required();
  auto* family_enumerate = family_cmd->add_subcommand("enumerate", "List F");
  add_params(family_enumerate);
  auto* family_witness = family_cmd->add_subcommand("witness", "Find a forbidden closed walk");
  family_witness->add_option("file", path)->required();
  add_params(family_witness);

  auto* verify_cmd = app.add_subcommand("verify", "Compare the witness search with brute force");
  add_params(verify_cmd);
  verify_cmd->add_option("--n-max", n_max, "Largest vertex count")->required();
  auto* sample_opt = verify_cmd->add_option("--sample", sample, "Random graphs on n-max vertices");
  verify_cmd->add_option("--seed", seed, "Sampling seed");

  auto* table_cmd = app.add_subcommand("table", "(1,delta)-cycle table");
  add_params(table_cmd);

  auto* twisted_cmd = app.add_subcommand("twisted", "Twisted-pair test for two tuples");
  twisted_cmd->add_option("--params1", params, "delta K1 K2 C0 C1")->expected(5)->required();
  twisted_cmd->add_option("--params2", params2, "delta K1 K2 C0 C1")->expected(5)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (m_opt->count() > 0) g.m = m_value;

  try {
    if (params_check->parsed()) return cmd_params_check(params);
    if (params_list->parsed()) return cmd_params_list(delta, g);
    if (magic_show->parsed()) return cmd_magic_show(params, g);
    if (graph_check->parsed()) return cmd_graph_check(path, params, g);
    if (complete_cmd->parsed()) return cmd_complete(path, params, trace, g);
    if (family_classify->parsed()) return cmd_family_classify(params, cycle_text, g);
    if (family_enumerate->parsed()) return cmd_family_enumerate(params, g);
    if (family_witness->parsed()) return cmd_family_witness(path, params, g);
    if (verify_cmd->parsed()) {
      std::optional<std::uint64_t> s;
      if (sample_opt->count() > 0) s = sample;
      return cmd_verify(params, n_max, s, seed, g);
    }
    if (table_cmd->parsed()) return cmd_table(params, g);
    if (twisted_cmd->parsed()) return cmd_twisted(params, params2, g);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
