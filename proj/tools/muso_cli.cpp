// muso: build, check and realize Matoušek-type unique sink orientations.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "muso/cube.hpp"
#include "muso/enumerate.hpp"
#include "muso/errors.hpp"
#include "muso/io.hpp"
#include "muso/matousek.hpp"
#include "muso/matroid.hpp"
#include "muso/plcp.hpp"
#include "muso/random_facet.hpp"
#include "muso/realizability.hpp"

#ifndef MUSO_VERSION
#define MUSO_VERSION "dev"
#endif

using namespace muso;

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2 };

struct Options {
  std::string input;
  std::string out;
  std::string format = "json";
  std::string family;
  std::string n_spec;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(arg);
  if (!in) throw InputError("cannot open '" + arg + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

// "4", "4,8,12" or "4..12".
std::vector<int> parse_n_list(const std::string& spec) {
  std::vector<int> out;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || v < 1 || v > kMaxDim) throw InputError("bad --n value '" + s + "'");
    return v;
  };
  if (auto dots = spec.find(".."); dots != std::string::npos) {
    const int lo = number(spec.substr(0, dots));
    const int hi = number(spec.substr(dots + 2));
    if (lo > hi) throw InputError("empty --n range '" + spec + "'");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(number(item));
  if (out.empty()) throw InputError("empty --n list");
  return out;
}

std::string edge_list(const InfluenceGraph& g) {
  std::string s;
  for (auto [u, v] : g.edges()) s += (s.empty() ? "" : ", ") + std::to_string(u + 1) + "->" + std::to_string(v + 1);
  return s.empty() ? "(loops only)" : s;
}

InfluenceGraph input_graph(const Options& opt) {
  if (!opt.input.empty()) return graph_from_json(parse_json(read_input(opt.input)));
  if (opt.family.empty() || opt.n_spec.empty()) throw InputError("need an input graph or --family with --n");
  const auto ns = parse_n_list(opt.n_spec);
  if (ns.size() != 1) throw InputError("--n must be a single value here");
  return family_graph(opt.family, ns[0], opt.seed);
}

int cmd_build(const Options& opt) {
  const InfluenceGraph g = input_graph(opt);
  const Orientation o = build_matousek(g);
  if (auto w = find_forbidden(g)) {
    std::cerr << "warning: not realizable (" << describe(*w) << ") " << to_json(*w).dump() << "\n";
  }
  if (opt.format == "dot") {
    write_output(opt.out, to_dot(g));
  } else {
    write_output(opt.out, to_json(o).dump() + "\n");
  }
  return kOk;
}

int cmd_check(const Options& opt) {
  const Orientation o = orientation_from_json(parse_json(read_input(opt.input)));
  if (!check_orientation(o)) {
    std::cout << "USO: no (edge directions disagree)\n";
    return kOk;
  }
  if (!is_uso(o)) {
    std::cout << "USO: no\n";
    return kOk;
  }
  InfluenceGraph g(o.dim());
  try {
    g = extract_influence_graph(o);
  } catch (const NotMatousekType&) {
    std::cout << "USO: yes; Matoušek: no\n";
    std::cout << "sink: " << format_subset(global_sink(o)) << "\n";
    return kOk;
  }
  const auto w = find_forbidden(g);
  std::cout << "USO: yes; Matoušek: yes; realizable: " << (w ? "no (" + describe(*w) + ")" : std::string("yes")) << "\n";
  std::cout << "sink: " << format_subset(global_sink(o)) << "\n";
  std::cout << "influence graph: " << edge_list(g) << "\n";
  if (opt.format == "dot") std::cout << to_dot(g);
  if (w) std::cout << "witness: " << to_json(*w).dump() << "\n";
  return kOk;
}

int cmd_realize(const Options& opt) {
  const InfluenceGraph g = input_graph(opt);
  if (!g.is_acyclic()) throw CyclicInfluence("influence graph has a directed cycle");
  if (auto w = find_forbidden(g)) {
    std::cerr << "error: not realizable (" << describe(*w) << ")\n";
    std::cout << to_json(*w).dump() << "\n";
    return kFailed;
  }
  const auto branching = is_branching_closure(g);
  const CyclicExtension ext = synthesize_extension(*branching);
  const PLCPInstance inst = translate_to_plcp(realization_matrix(ext), ext);
  if (canonicalize(plcp_to_uso(inst)) != build_matousek(g)) {
    std::cerr << "error: round-trip mismatch, nothing written\n";
    return kFailed;
  }
  std::cerr << "round-trip: exact match\n";

  if (opt.format == "text") {
    std::string q;
    for (const Rational& x : inst.q) q += x.get_str() + "\n";
    write_output(opt.out, "M\n" + to_text(inst.M) + "q\n" + q);
  } else if (opt.out.empty() || opt.out == "-") {
    std::cout << Json{{"extension", to_json(ext)}, {"plcp", to_json(inst)}}.dump(2) << "\n";
  } else {
    write_output(opt.out + ".extension.json", to_json(ext).dump(2) + "\n");
    write_output(opt.out + ".plcp.json", to_json(inst).dump(2) + "\n");
    std::cerr << "wrote " << opt.out << ".extension.json, " << opt.out << ".plcp.json\n";
  }
  return kOk;
}

int cmd_bench(const Options& opt) {
  const auto ns = parse_n_list(opt.n_spec.empty() ? "4..12" : opt.n_spec);
  std::vector<std::string> families;
  if (opt.family == "all") {
    families = family_names();
  } else {
    families.push_back(opt.family.empty() ? "path" : opt.family);
  }
  std::vector<TrialStats> all;
  for (const auto& f : families) {
    for (auto& s : run_trials(f, ns, opt.trials, opt.seed)) all.push_back(std::move(s));
  }
  write_output(opt.out, to_csv(all));
  for (const auto& s : all) {
    if (s.correct != s.trials) {
      std::cerr << "error: " << s.family << " n=" << s.n << " wrong sink in " << s.trials - s.correct << " trials\n";
      return kFailed;
    }
  }
  return kOk;
}

int cmd_enumerate(const Options& opt) {
  const auto ns = parse_n_list(opt.n_spec.empty() ? "1..4" : opt.n_spec);
  std::printf("%3s %8s %8s %10s %11s %11s %9s\n", "n", "dags", "uso", "realizable", "branchings", "extensions",
              "pipeline");
  int bad = 0;
  for (int n : ns) {
    if (n > 5) throw InputError("enumerate supports n <= 5");
    long dags = 0, usos = 0, realizable = 0;
    for (const auto& g : all_dags(n)) {
      ++dags;
      usos += is_uso(build_matousek(g));
      const bool forbidden = find_forbidden(g).has_value();
      realizable += !forbidden;
      bad += forbidden == is_branching_closure(g).has_value();
    }
    long branchings = 0, agree = 0;
    for (const auto& b : all_branchings(n)) {
      ++branchings;
      const CyclicExtension ext = synthesize_extension(b);
      const Orientation m = build_matousek(b.closure());
      agree += canonicalize(extension_to_uso(ext)) == m &&
               (n > 4 || canonicalize(plcp_to_uso(translate_to_plcp(realization_matrix(ext), ext))) == m);
    }
    long extensions = 0;
    if (n <= 4) for_each_valid_extension(n, [&](const CyclicExtension&) { ++extensions; });
    bad += (usos != dags) + (agree != branchings) + (realizable != branchings);
    std::printf("%3d %8ld %8ld %10ld %11ld %11s %4ld/%-4ld\n", n, dags, usos, realizable, branchings,
                n <= 4 ? std::to_string(extensions).c_str() : "-", agree, branchings);
  }
  std::printf("%s\n", bad == 0 ? "all suites consistent" : "INCONSISTENT");
  return bad == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matoušek-type unique sink orientations: construction, realizability, Random Facet"};
  app.set_version_flag("--version", MUSO_VERSION);
  app.require_subcommand(1);

  Options opt;
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  auto with_input = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("input", opt.input, "JSON file, '-' for stdin, or inline JSON");
    if (required) o->required();
  };
  auto with_out = [&](CLI::App* sub) { sub->add_option("-o,--out", opt.out, "output path (default stdout)"); };

  auto* build = app.add_subcommand("build", "influence graph -> orientation");
  with_input(build, false);
  with_out(build);
  build->add_option("--family", opt.family, "generate the graph instead of reading it");
  build->add_option("--n", opt.n_spec, "dimension for --family");
  build->add_option("--format", opt.format)->check(CLI::IsMember({"json", "dot"}));

  auto* check = app.add_subcommand("check", "report USO, Matoušek and realizability status");
  with_input(check, true);
  check->add_option("--format", opt.format)->check(CLI::IsMember({"json", "dot"}));

  auto* realize = app.add_subcommand("realize", "influence graph -> cyclic extension and P-LCP");
  with_input(realize, false);
  realize->add_option("-o,--out", opt.out, "output prefix, writes PREFIX.extension.json and PREFIX.plcp.json");
  realize->add_option("--family", opt.family, "generate the graph instead of reading it");
  realize->add_option("--n", opt.n_spec, "dimension for --family");
  realize->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));

  auto* bench = app.add_subcommand("bench", "Random Facet trials, CSV output");
  with_out(bench);
  bench->add_option("--family", opt.family, "family name or 'all' (default path)");
  bench->add_option("--n", opt.n_spec, "dimensions: 8, 4,8,12 or 4..12 (default 4..12)");
  bench->add_option("--trials", opt.trials, "trials per dimension")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--seed", opt.seed, "random seed");
  bench->add_option("--format", opt.format)->check(CLI::IsMember({"csv"}));

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive consistency suites for small n");
  enumerate->add_option("--n", opt.n_spec, "dimensions, at most 5 (default 1..4)");

  for (auto* sub : {build, realize}) sub->add_option("--seed", opt.seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  std::cerr << "muso " << MUSO_VERSION << " seed=" << opt.seed << "\n";
  try {
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "build") return cmd_build(opt);
    if (name == "check") return cmd_check(opt);
    if (name == "realize") return cmd_realize(opt);
    if (name == "bench") return cmd_bench(opt);
    return cmd_enumerate(opt);
  } catch (const CyclicInfluence& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kBadInput;
}
