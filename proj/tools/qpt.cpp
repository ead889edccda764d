// Command-line front end for the quasi-planarity toolkit.

#include "qpt/bounds.h"
#include "qpt/budget.h"
#include "qpt/crossing_analysis.h"
#include "qpt/drawing.h"
#include "qpt/error.h"
#include "qpt/generators.h"
#include "qpt/pipeline.h"
#include "qpt/render.h"
#include "qpt/sequences.h"

#include <CLI11.hpp>
#include <array>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace qpt;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Common {
  std::size_t budget_clique = 64;
  std::size_t budget_chi = 32;
  std::vector<std::string> profile;
  std::string format = "text";

  Budget budget() const {
    Budget b = Budget::from_env();
    b.clique_nodes = budget_clique;
    b.chi_nodes = budget_chi;
    return b;
  }

  BoundProfile bound_profile() const {
    BoundProfile p;
    for (const auto& kv : profile) p.set(kv);
    return p;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget-clique", c.budget_clique, "Node limit for exact clique search")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--budget-chi", c.budget_chi, "Node limit for exact chromatic search")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--profile", c.profile, "Bound constant override key=value (repeatable)");
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}));
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i];
  return out;
}

std::string format_violation(const Violation& v) {
  std::ostringstream o;
  o << to_string(v.rule);
  for (const auto& id : v.ids) o << " " << id;
  if (v.witness) o << " at " << *v.witness;
  if (!v.detail.empty()) o << ": " << v.detail;
  return o.str();
}

// --- validate ---------------------------------------------------------------

int cmd_validate(const std::string& path, std::optional<std::size_t> t) {
  const Drawing d = read_drawing_file(path);
  const auto report = validate_drawing(d, t);
  if (report.ok()) {
    std::cout << "OK " << d.vertices().size() << " vertices, " << d.edges().size() << " edges\n";
    return kOk;
  }
  for (const auto& v : report.violations) std::cout << format_violation(v) << "\n";
  return kNegative;
}

// --- analyze ----------------------------------------------------------------

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

int cmd_analyze(const std::string& path, int k, const Common& common) {
  const Drawing d = read_drawing_file(path);
  const auto report = validate_drawing(d);
  if (!report.ok()) {
    for (const auto& v : report.violations) std::cout << format_violation(v) << "\n";
    std::cout << "invalid drawing\n";
    return kNegative;
  }
  const Budget budget = common.budget();
  const CrossingGraph g = crossing_graph(d);
  const std::size_t n = d.vertices().size();
  const std::size_t m = d.edges().size();
  int status = kOk;

  // (csv key, text label, value)
  std::vector<std::array<std::string, 3>> rows;
  auto add = [&](const std::string& key, const std::string& label, const std::string& value) {
    rows.push_back({key, label, value});
  };
  add("vertices", "vertices", std::to_string(n));
  add("edges", "edges", std::to_string(m));
  add("crossing_pairs", "crossing pairs", std::to_string(g.crossing_pair_count()));
  add("max_pair_multiplicity", "max pair multiplicity", std::to_string(g.max_multiplicity()));
  add("simple_drawing", "simple drawing", is_simple_drawing(d, g) ? "yes" : "no");

  try {
    const auto clique = max_pairwise_crossing(g, budget);
    std::string value = std::to_string(clique.size());
    if (!clique.empty()) value += " (" + join(clique) + ")";
    add("max_crossing_set", "max crossing set", value);
    add("quasi_planar", "quasi-planar",
        std::string(static_cast<int>(clique.size()) < k ? "yes" : "no") + " (k=" +
            std::to_string(k) + ")");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    add("max_crossing_set", "max crossing set", std::string("not computed (") + e.what() + ")");
  }
  try {
    add("chromatic_number", "chromatic number",
        std::to_string(chromatic_number(g.graph(), budget)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    add("chromatic_number", "chromatic number", std::string("not computed (") + e.what() + ")");
  }

  const BigInt planar = planar_bound(n);
  if (g.crossing_pair_count() == 0) {
    const bool ok = BigInt(m) <= planar;
    add("planar_bound", std::string("planar drawing, |E| <= 3n-6 ") + (ok ? "verified" : "VIOLATED"),
        std::to_string(m) + " <= " + planar.get_str());
    if (!ok) status = kNegative;
  }
  BoundProfile profile = common.bound_profile();
  profile.n = n;
  profile.k = static_cast<unsigned long>(k);
  profile.t = std::max<std::size_t>(1, g.max_multiplicity());
  if (n >= 2) {
    const BigInt b1 = theorem1_bound(profile);
    const bool ok = BigInt(m) <= b1;
    add("edge_bound", "edge bound",
        "|E|=" + std::to_string(m) + " <= " + b1.get_str() + " " + (ok ? "holds" : "VIOLATED") +
            " [" + profile.describe() + "]");
    if (!ok) status = kNegative;
  }

  if (common.format == "csv") {
    std::cout << "# qpt-analyze v1\nkey,value\n";
    for (const auto& r : rows) std::cout << r[0] << "," << csv_field(r[2]) << "\n";
  } else {
    for (const auto& r : rows) std::cout << r[1] << ": " << r[2] << "\n";
  }
  return status;
}

// --- pipeline ---------------------------------------------------------------

int cmd_pipeline(const std::string& path, const std::string& e0, int k, int l, int m,
                 std::uint64_t seed, bool no_filter, const Common& common) {
  const Drawing d = read_drawing_file(path);
  PipelineOptions options;
  options.k = k;
  options.seed = seed;
  options.filter = !no_filter;
  options.budget = common.budget();
  const PipelineReport r = run_pipeline(d, e0, options, l, m);
  std::cout << (common.format == "csv" ? format_report_csv(r) : format_report_text(r));
  for (const auto& c : r.checks) {
    if (!c.holds) return kNegative;
  }
  return kOk;
}

// --- sequences --------------------------------------------------------------

std::vector<SymbolSequence> sequence_inputs(const std::vector<std::string>& symbols,
                                            const std::string& file) {
  if (!file.empty()) return read_sequence_file(file);
  return {symbols};
}

BigInt parse_big(const std::string& s) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "not an integer: " + s);
  }
  return v;
}

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
  int n = 6;
  int edges = 6;
  int bends = 1;
  int m = 6;
  std::uint64_t seed = 1;
  std::string out;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-planarity toolkit: drawings, crossing analysis, sequences, bounds"};
  app.require_subcommand(1);
  int status = kOk;

  Common common;

  // validate
  auto* validate = app.add_subcommand("validate", "Check a drawing against the drawing model");
  std::string validate_path;
  std::size_t validate_t = 0;
  validate->add_option("path", validate_path, "Drawing file")->required();
  auto* t_opt = validate->add_option("--t", validate_t, "Maximum crossings per edge pair")
                    ->check(CLI::PositiveNumber);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Crossing statistics and quasi-planarity");
  std::string analyze_path;
  int analyze_k = 3;
  analyze->add_option("path", analyze_path, "Drawing file")->required();
  analyze->add_option("--k", analyze_k, "Quasi-planarity parameter")->check(CLI::Range(2, 64));
  add_common(analyze, common);

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "Edge filtering and S1/S2 sequences");
  std::string pipeline_path, pipeline_e0 = "e0";
  int pipeline_k = 3, pipeline_l = 1, pipeline_m = 2;
  std::uint64_t pipeline_seed = 1;
  bool no_filter = false;
  pipeline->add_option("path", pipeline_path, "Drawing file")->required();
  pipeline->add_option("--e0", pipeline_e0, "Edge crossing all others");
  pipeline->add_option("--k", pipeline_k, "Quasi-planarity parameter")->check(CLI::Range(2, 64));
  pipeline->add_option("--l", pipeline_l, "Regularity / pattern width")->check(CLI::Range(1, 16));
  pipeline->add_option("--m", pipeline_m, "Pattern repetitions")->check(CLI::Range(1, 64));
  pipeline->add_option("--seed", pipeline_seed, "Bipartition seed");
  pipeline->add_flag("--no-filter", no_filter, "Keep E' = E0 (skip bipartition and fan filtering)");
  add_common(pipeline, common);

  // sequences
  auto* sequences = app.add_subcommand("sequences", "Sequence tools");
  sequences->alias("seq");
  sequences->require_subcommand(1);
  std::vector<std::string> symbols;
  std::string seq_file;
  int seq_l = 2, seq_m = 2;

  auto* regular = sequences->add_subcommand("regular", "Is the sequence l-regular");
  regular->add_option("l", seq_l)->required()->check(CLI::PositiveNumber);
  regular->add_option("symbols", symbols);
  regular->add_option("--file", seq_file, "Read sequences from a file");

  auto* greedy = sequences->add_subcommand("greedy", "Greedy l-regular subsequence");
  greedy->add_option("l", seq_l)->required()->check(CLI::PositiveNumber);
  greedy->add_option("symbols", symbols);
  greedy->add_option("--file", seq_file, "Read sequences from a file");

  auto* upcheck = sequences->add_subcommand("upcheck", "Search for an up(l,m) subsequence");
  upcheck->add_option("l", seq_l)->required()->check(CLI::PositiveNumber);
  upcheck->add_option("m", seq_m)->required()->check(CLI::PositiveNumber);
  upcheck->add_option("symbols", symbols);
  upcheck->add_option("--file", seq_file, "Read sequences from a file");

  std::string alpha_n;
  auto* alpha = sequences->add_subcommand("alpha", "Inverse Ackermann function");
  alpha->add_option("n", alpha_n)->required();

  std::string ack_k, ack_n, ack_ceiling = "1" + std::string(100, '0');
  auto* ack = sequences->add_subcommand("ackermann", "A_k(n) with a ceiling");
  ack->add_option("k", ack_k)->required();
  ack->add_option("n", ack_n)->required();
  ack->add_option("--ceiling", ack_ceiling, "Largest value to materialize");

  std::string klazar_n;
  auto* klazar = sequences->add_subcommand("klazar", "Upper bound on l-regular up(l,m)-free length");
  klazar->add_option("n", klazar_n)->required();
  klazar->add_option("l", seq_l)->required();
  klazar->add_option("m", seq_m)->required();

  int ext_alphabet = 2, ext_max_len = 14;
  auto* extremal = sequences->add_subcommand("extremal", "Exhaustive extremal length");
  extremal->add_option("alphabet", ext_alphabet)->required();
  extremal->add_option("l", seq_l)->required();
  extremal->add_option("m", seq_m)->required();
  extremal->add_option("--max-len", ext_max_len, "Length cap");

  auto* table = sequences->add_subcommand("table", "Exhaustive extremal lengths against the bound");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate the closed-form bounds");
  unsigned long bound_n = 16, bound_k = 3, bound_t = 1;
  auto* bound_n_opt = bounds->add_option("--n", bound_n, "Vertices")->check(CLI::PositiveNumber);
  auto* bound_k_opt =
      bounds->add_option("--k", bound_k, "Quasi-planarity parameter")->check(CLI::PositiveNumber);
  auto* bound_t_opt =
      bounds->add_option("--t", bound_t, "Crossings per pair")->check(CLI::PositiveNumber);
  add_common(bounds, common);

  // generate
  auto* generate = app.add_subcommand("generate", "Generate drawings");
  generate->require_subcommand(1);
  GenerateArgs gen;
  auto* gen_convex = generate->add_subcommand("convex", "Convex complete graph");
  gen_convex->add_option("--n", gen.n, "Vertices")->required();
  auto* gen_random = generate->add_subcommand("random", "Random valid drawing");
  gen_random->add_option("--n", gen.n, "Vertices");
  gen_random->add_option("--edges", gen.edges, "Edges");
  gen_random->add_option("--bends", gen.bends, "Maximum bends per edge");
  gen_random->add_option("--seed", gen.seed, "Seed");
  auto* gen_all = generate->add_subcommand("all-crossing", "Drawing with an edge e0 crossing all others");
  gen_all->add_option("--n", gen.n, "Vertices including p and q");
  gen_all->add_option("--edges", gen.edges, "Edges besides e0");
  gen_all->add_option("--bends", gen.bends, "Maximum bends per edge");
  gen_all->add_option("--seed", gen.seed, "Seed");
  auto* gen_fan = generate->add_subcommand("fan", "Fan between an apex and the x-axis");
  gen_fan->add_option("--m", gen.m, "Curves");
  gen_fan->add_option("--bends", gen.bends, "Maximum bends per curve");
  gen_fan->add_option("--seed", gen.seed, "Seed");
  for (auto* g : {gen_convex, gen_random, gen_all, gen_fan}) {
    g->add_option("-o,--output", gen.out, "Output file (default stdout)");
  }

  // render
  auto* render = app.add_subcommand("render", "Write an SVG picture of a drawing");
  std::string render_path, render_out;
  bool highlight = false;
  render->add_option("path", render_path, "Drawing file")->required();
  render->add_option("output", render_out, "SVG file")->required();
  render->add_flag("--highlight-clique", highlight, "Stroke a maximum crossing set distinctly");
  add_common(render, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) {
      status = cmd_validate(validate_path, *t_opt ? std::optional<std::size_t>(validate_t)
                                                  : std::nullopt);
    } else if (*analyze) {
      status = cmd_analyze(analyze_path, analyze_k, common);
    } else if (*pipeline) {
      status = cmd_pipeline(pipeline_path, pipeline_e0, pipeline_k, pipeline_l, pipeline_m,
                            pipeline_seed, no_filter, common);
    } else if (*sequences) {
      if (*regular) {
        for (const auto& s : sequence_inputs(symbols, seq_file)) {
          const bool ok = is_l_regular(s, seq_l);
          std::cout << (ok ? "yes" : "no") << "\n";
          if (!ok) status = kNegative;
        }
      } else if (*greedy) {
        for (const auto& s : sequence_inputs(symbols, seq_file)) {
          std::vector<std::string> kept;
          for (auto i : greedy_regular_subsequence(s, seq_l)) kept.push_back(s[i]);
          std::cout << join(kept) << "\n";
        }
      } else if (*upcheck) {
        for (const auto& s : sequence_inputs(symbols, seq_file)) {
          const auto w = contains_up_type(s, seq_l, seq_m);
          if (!w) {
            std::cout << "none\n";
            status = kNegative;
            continue;
          }
          std::vector<std::string> pos, sym;
          for (auto i : w->indices) {
            pos.push_back(std::to_string(i + 1));
            sym.push_back(s[i]);
          }
          std::cout << "witness " << join(pos) << " (" << join(sym) << ")\n";
        }
      } else if (*alpha) {
        std::cout << inverse_ackermann(parse_big(alpha_n)) << "\n";
      } else if (*ack) {
        const auto k = parse_big(ack_k);
        if (!k.fits_ulong_p()) throw Error(ErrorCode::kInvalidArgument, "k too large");
        const auto v = ackermann(k.get_ui(), parse_big(ack_n), parse_big(ack_ceiling));
        std::cout << (v ? v->get_str() : std::string("exceeds ceiling")) << "\n";
      } else if (*klazar) {
        std::cout << klazar_bound(parse_big(klazar_n), seq_l, seq_m).get_str() << "\n";
      } else if (*extremal) {
        std::cout << brute_force_extremal(ext_alphabet, seq_l, seq_m, ext_max_len) << "\n";
      } else if (*table) {
        std::cout << "alphabet,l,m,extremal(max_len=14),klazar_bound_digits\n";
        for (int a = 1; a <= 3; ++a) {
          for (int l = 2; l <= 3; ++l) {
            const int ext = brute_force_extremal(a, l, 3, 14);
            const BigInt kb = klazar_bound(BigInt(a), l, 3);
            std::cout << a << "," << l << ",3," << ext << "," << kb.get_str().size() << "\n";
            if (BigInt(ext) > kb) status = kNegative;
          }
        }
      }
    } else if (*bounds) {
      BoundProfile p;
      p.n = bound_n;
      p.k = bound_k;
      p.t = bound_t;
      for (const auto& kv : common.profile) p.set(kv);
      if (bound_n_opt->count()) p.n = bound_n;
      if (bound_k_opt->count()) p.k = bound_k;
      if (bound_t_opt->count()) p.t = bound_t;
      const auto rows = bound_table(p);
      if (common.format == "csv") {
        std::cout << format_bound_csv(p, rows);
      } else {
        std::cout << "n=" << p.n << " k=" << p.k << " t=" << p.t << " profile " << p.describe()
                  << "\n";
        for (const auto& r : rows) std::cout << r.name << ": " << r.value << "\n";
      }
    } else if (*generate) {
      Drawing d;
      if (*gen_convex) {
        d = generate_convex_complete(gen.n);
      } else if (*gen_random) {
        d = generate_random_drawing(gen.n, gen.edges, gen.bends, gen.seed);
      } else if (*gen_all) {
        d = generate_all_crossing_drawing(gen.n, gen.edges, gen.bends, gen.seed);
      } else {
        d = generate_two_boundary_fan(gen.m, gen.bends, gen.seed);
      }
      write_output(gen.out, serialize_drawing(d));
    } else if (*render) {
      const Drawing d = read_drawing_file(render_path);
      std::vector<std::string> marked;
      if (highlight) marked = max_pairwise_crossing(crossing_graph(d), common.budget());
      write_output(render_out, render_svg(d, marked));
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kIoError:
      case ErrorCode::kParseError:
      case ErrorCode::kDuplicateId:
      case ErrorCode::kUnknownVertex:
      case ErrorCode::kInvalidArgument:
      case ErrorCode::kSizeOutOfRange:
        return kUsage;
      default:
        return kNegative;
    }
  }
  return status;
}
