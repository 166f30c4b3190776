#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperinfect/designs.hpp"
#include "hyperinfect/error.hpp"
#include "hyperinfect/families.hpp"
#include "hyperinfect/infection.hpp"
#include "hyperinfect/io.hpp"
#include "hyperinfect/products.hpp"
#include "hyperinfect/solver.hpp"
#include "hyperinfect/verify.hpp"

using namespace hyperinfect;
using nlohmann::json;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerify = 3;

const char* kFamilyHelp =
    "Families and parameters:\n"
    "  complete N K                  all K-subsets of N vertices\n"
    "  multipartite N1 N2 ...        one vertex from each part\n"
    "  flower CORE E1 E2 ...         core size, then each petal's extra vertices\n"
    "  interval N S:L S:L ...        intervals by 1-based start and length\n"
    "  hypercycle SIZES OVERLAPS     comma lists, e.g. 3,3,3 1,1,1\n"
    "  tight-cycle N K T             arcs of length K stepping by K-T\n"
    "  augmented-complete N K        (K-1)-subsets of N-1 vertices plus vertex N\n"
    "  trivial N                     N vertices, no edges\n"
    "  pg N Q                        lines of PG(N,Q), Q prime\n"
    "  extension FILE                k-uniform supergraph of FILE with I = 1\n";

std::size_t to_count(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw InvalidInput("not a non-negative integer: '" + s + "'");
  }
  if (pos != s.size() || s.empty() || s[0] == '-') {
    throw InvalidInput("not a non-negative integer: '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<std::size_t> count_list(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& x : split(s, ',')) out.push_back(to_count(x));
  return out;
}

void need(const std::vector<std::string>& p, std::size_t n, const std::string& family) {
  if (p.size() != n) {
    throw InvalidInput(family + " takes " + std::to_string(n) + " parameter(s), got " +
                       std::to_string(p.size()));
  }
}

Hypergraph generate_family(const std::string& family, const std::vector<std::string>& p) {
  if (family == "complete") {
    need(p, 2, family);
    return generate(Complete{to_count(p[0]), to_count(p[1])});
  }
  if (family == "multipartite") {
    if (p.empty()) throw InvalidInput("multipartite needs at least one part size");
    std::vector<std::size_t> parts;
    for (const auto& x : p) parts.push_back(to_count(x));
    return generate(Multipartite{parts});
  }
  if (family == "flower") {
    if (p.size() < 3) throw InvalidInput("flower needs a core size and at least two petals");
    std::vector<std::size_t> extras;
    for (std::size_t i = 1; i < p.size(); ++i) extras.push_back(to_count(p[i]));
    return generate(Flower{to_count(p[0]), extras});
  }
  if (family == "interval") {
    if (p.empty()) throw InvalidInput("interval needs N");
    std::vector<std::pair<std::size_t, std::size_t>> iv;
    for (std::size_t i = 1; i < p.size(); ++i) {
      const auto parts = split(p[i], ':');
      if (parts.size() != 2) throw InvalidInput("interval expects START:LENGTH, got '" + p[i] + "'");
      iv.emplace_back(to_count(parts[0]), to_count(parts[1]));
    }
    return generate(Interval{to_count(p[0]), iv});
  }
  if (family == "hypercycle") {
    need(p, 2, family);
    return generate(Hypercycle{count_list(p[0]), count_list(p[1])});
  }
  if (family == "tight-cycle") {
    need(p, 3, family);
    return generate(TightCycle{to_count(p[0]), to_count(p[1]), to_count(p[2])});
  }
  if (family == "augmented-complete") {
    need(p, 2, family);
    return generate(AugmentedComplete{to_count(p[0]), to_count(p[1])});
  }
  if (family == "trivial") {
    need(p, 1, family);
    return generate(Trivial{to_count(p[0])});
  }
  if (family == "pg") {
    need(p, 2, family);
    return pg_design(to_count(p[0]), to_count(p[1]));
  }
  if (family == "extension") {
    need(p, 1, family);
    return infection_one_extension(io::load(p[0]));
  }
  throw InvalidInput("unknown family '" + family + "'");
}

VertexSet parse_seed(const std::string& text, const Hypergraph& h) {
  VertexSet s;
  if (text.empty()) return s;
  for (const auto& x : split(text, ',')) {
    const std::size_t v = to_count(x);
    if (v < 1 || v > h.vertex_count()) {
      throw InvalidInput("seed label " + x + " outside 1.." + std::to_string(h.vertex_count()));
    }
    s.insert(static_cast<Vertex>(v - 1));
  }
  return s;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string labels(const VertexSet& s) { return s.to_string(); }

void print_report_table(const VerificationReport& r) {
  std::cout << std::left << std::setw(32) << "case" << std::setw(9) << "status" << std::setw(10)
            << "checked" << std::setw(8) << "failed" << "skipped\n";
  for (const auto& c : r.cases) {
    std::cout << std::setw(32) << c.id << std::setw(9) << to_string(c.status) << std::setw(10)
              << c.checked << std::setw(8) << c.failed << c.skipped << "\n";
    for (const auto& f : c.failures) std::cout << "    " << f.instance << ": " << f.detail << "\n";
  }
  std::cout << r.passed() << " passed, " << r.failed() << " failed, " << r.skipped() << " skipped\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperinfect: infection numbers of hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 1;
  bool pretty = false;
  app.add_option("--threads", threads, "worker threads; output does not depend on it")
      ->check(CLI::Range(1U, 64U));
  app.add_flag("--pretty", pretty, "human-readable tables instead of JSON");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family member as .hg");
  gen->footer(kFamilyHelp);
  std::string family;
  std::vector<std::string> params;
  std::string gen_out = "-";
  gen->add_option("family", family, "family name")->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("-o,--output", gen_out, "output file (.hg or .json), - for stdout");

  // number
  auto* number = app.add_subcommand("number", "exact minimum infection number");
  std::string number_file;
  int number_m = 1;
  bool number_trace = false;
  number->add_option("file", number_file, "hypergraph file, - for stdin")->required();
  number->add_option("--m", number_m, "m-infection")->check(CLI::PositiveNumber);
  number->add_flag("--trace", number_trace, "include the witness trace");

  // infect
  auto* infect = app.add_subcommand("infect", "derived set of a seed");
  std::string infect_file;
  std::string infect_seed;
  int infect_m = 1;
  bool infect_trace = false;
  infect->add_option("file", infect_file, "hypergraph file, - for stdin")->required();
  infect->add_option("--seed", infect_seed, "comma-separated 1-based labels")->required();
  infect->add_option("--m", infect_m, "m-infection")->check(CLI::PositiveNumber);
  infect->add_flag("--trace", infect_trace, "include every firing");

  // reduce / components / linegraph
  auto* reduce_cmd = app.add_subcommand("reduce", "drop edges contained in other edges");
  std::string reduce_file;
  std::string reduce_out = "-";
  reduce_cmd->add_option("file", reduce_file)->required();
  reduce_cmd->add_option("-o,--output", reduce_out);

  auto* comps = app.add_subcommand("components", "connected components");
  std::string comps_file;
  comps->add_option("file", comps_file)->required();

  auto* linegraph = app.add_subcommand("linegraph", "line graph, or adjacency hypergraph of a graph");
  std::string line_file;
  std::string line_out = "-";
  bool adjacency = false;
  linegraph->add_option("file", line_file)->required();
  linegraph->add_option("-o,--output", line_out);
  linegraph->add_flag("--adjacency", adjacency, "build the adjacency hypergraph of a graph instead");

  // product
  auto* product = app.add_subcommand("product", "hypergraph products");
  std::string kind;
  std::string prod_a;
  std::string prod_b;
  std::string prod_out = "-";
  product->add_option("kind", kind, "direct | cartesian | weak-corona | strong-corona | join1")
      ->required()
      ->check(CLI::IsMember({"direct", "cartesian", "weak-corona", "strong-corona", "join1"}));
  product->add_option("a", prod_a, "first factor")->required();
  product->add_option("b", prod_b, "second factor (not for join1)");
  product->add_option("-o,--output", prod_out);

  // check
  auto* check = app.add_subcommand("check", "structural checks");
  check->require_subcommand(1);
  auto* check_design = check->add_subcommand("design", "is every t-subset in the same number of edges");
  std::string design_file;
  std::size_t design_t = 2;
  check_design->add_option("file", design_file)->required();
  check_design->add_option("--t", design_t)->check(CLI::PositiveNumber);
  auto* check_structure = check->add_subcommand("structure", "uniformity, linearity, degrees");
  std::string structure_file;
  check_structure->add_option("file", structure_file)->required();
  auto* check_trace = check->add_subcommand("trace", "replay an infection trace");
  std::string trace_graph;
  std::string trace_file;
  int trace_m = 1;
  check_trace->add_option("file", trace_graph, "hypergraph file")->required();
  check_trace->add_option("trace", trace_file, "trace JSON as printed by infect --trace")->required();
  check_trace->add_option("--m", trace_m)->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "closed-form results and properties");
  std::string filter;
  std::uint64_t seed = 0;
  std::size_t count = 200;
  bool as_json = false;
  bool timings = false;
  std::string suite = "theorems";
  verify->add_option("--filter", filter, "tag, or a prefix of the case id");
  verify->add_option("--seed", seed, "seed for random instances");
  verify->add_option("--count", count, "random instances per property")->check(CLI::PositiveNumber);
  verify->add_option("--suite", suite, "theorems | properties | all")
      ->check(CLI::IsMember({"theorems", "properties", "all"}));
  verify->add_flag("--json", as_json, "JSON report (the default unless --pretty)");
  verify->add_flag("--timings", timings, "include per-case runtimes");

  // conjecture
  auto* conjecture = app.add_subcommand("conjecture", "check the extremal-set conjecture");
  std::string conj_file;
  std::size_t sweep_n = 0;
  std::size_t sweep_k = 3;
  conjecture->add_option("file", conj_file, "k-uniform hypergraph");
  conjecture->add_option("--sweep", sweep_n, "sweep every k-uniform hypergraph up to this many vertices");
  conjecture->add_option("--k", sweep_k, "edge size for --sweep")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    SolverOptions opts;  // reads HYPERINFECT_BUDGET
    opts.threads = threads;

    if (*gen) {
      io::save(generate_family(family, params), gen_out);
      return 0;
    }
    if (*number) {
      const Hypergraph h = io::load(number_file);
      opts.m = number_m;
      const SolverResult r = infection_number(h, opts);
      if (pretty) {
        std::cout << "infection number  " << r.infection_number << "\n"
                  << "witness           " << labels(r.witness) << "\n"
                  << "m                 " << r.m << "\n"
                  << "bounds            " << r.lower_bound_used << ".." << r.upper_bound_used << "\n"
                  << "enumerated        " << r.enumerated_count << "\n";
      } else {
        emit(result_json(h, r, number_trace));
      }
      return 0;
    }
    if (*infect) {
      const Hypergraph h = io::load(infect_file);
      const VertexSet s = parse_seed(infect_seed, h);
      const InfectionTrace t = closure(h, s, infect_m);
      const bool all = t.final == h.vertices();
      if (pretty) {
        std::cout << "seed     " << labels(s) << "\nderived  " << labels(t.final)
                  << "\ninfects all  " << (all ? "yes" : "no") << "\n";
        if (infect_trace) {
          for (const auto& e : t.events) {
            std::cout << "  " << labels(e.witness) << " infects edge " << e.edge_index + 1 << " "
                      << labels(h.edge(e.edge_index)) << " -> " << labels(e.newly_infected) << "\n";
          }
        }
      } else {
        json j = {{"seed", io::labels_json(s)},
                  {"derived", io::labels_json(t.final)},
                  {"infects_all", all},
                  {"m", infect_m}};
        if (infect_trace) j["trace"] = trace_json(h, t);
        emit(j);
      }
      return 0;
    }
    if (*reduce_cmd) {
      io::save(reduce(io::load(reduce_file)), reduce_out);
      return 0;
    }
    if (*comps) {
      const Hypergraph h = io::load(comps_file);
      json arr = json::array();
      for (const auto& c : components(h)) {
        VertexSet vs;
        for (auto v : c.labels) vs.insert(v);
        arr.push_back({{"vertices", io::labels_json(vs)}, {"graph", io::to_json(c.graph)}});
      }
      if (pretty) {
        for (const auto& c : components(h)) {
          VertexSet vs;
          for (auto v : c.labels) vs.insert(v);
          std::cout << labels(vs) << "  " << c.graph.edge_count() << " edge(s)\n";
        }
      } else {
        emit({{"components", arr}});
      }
      return 0;
    }
    if (*linegraph) {
      const Hypergraph h = io::load(line_file);
      io::save(adjacency ? adjacency_hypergraph(h) : line_graph(h), line_out);
      return 0;
    }
    if (*product) {
      const Hypergraph a = io::load(prod_a);
      if (kind == "join1") {
        if (!prod_b.empty()) throw InvalidInput("join1 takes a single hypergraph");
        io::save(join_universal_vertex(a).graph, prod_out);
        return 0;
      }
      if (prod_b.empty()) throw InvalidInput(kind + " needs two hypergraphs");
      const Hypergraph b = io::load(prod_b);
      ProductResult r = kind == "direct"        ? direct_product(a, b)
                        : kind == "cartesian"   ? cartesian_product(a, b)
                        : kind == "weak-corona" ? weak_corona(a, b)
                                                : strong_corona(a, b);
      io::save(r.graph, prod_out);
      return 0;
    }
    if (*check_design) {
      const Hypergraph h = io::load(design_file);
      const DesignCheck d = is_t_design(h, design_t);
      json j = {{"is_design", d.is_design}, {"t", design_t}};
      if (d.is_design) j["lambda"] = d.lambda;
      if (d.witness) {
        j["witness"] = io::labels_json(*d.witness);
        j["witness_multiplicity"] = d.witness_multiplicity;
      }
      if (pretty) {
        std::cout << (d.is_design ? "design, lambda " + std::to_string(d.lambda)
                                  : "not a design, " + labels(*d.witness) + " lies in " +
                                        std::to_string(d.witness_multiplicity) + " edge(s)")
                  << "\n";
      } else {
        emit(j);
      }
      return 0;
    }
    if (*check_structure) {
      const Hypergraph h = io::load(structure_file);
      const StructureReport s = structure(h);
      json j = {{"vertices", h.vertex_count()},
                {"edges", h.edge_count()},
                {"uniform", s.uniform_size ? json(*s.uniform_size) : json(nullptr)},
                {"min_edge_size", s.min_edge_size},
                {"max_edge_size", s.max_edge_size},
                {"linear", s.is_linear},
                {"reduced", s.is_reduced},
                {"singleton_edges", s.has_singleton_edges},
                {"min_degree", s.min_degree},
                {"max_degree", s.max_degree},
                {"components", components(h).size()}};
      if (pretty) {
        for (const auto& [key, value] : j.items()) std::cout << std::left << std::setw(16) << key << value.dump() << "\n";
      } else {
        emit(j);
      }
      return 0;
    }
    if (*check_trace) {
      const Hypergraph h = io::load(trace_graph);
      json tj;
      try {
        tj = json::parse(io::read_input(trace_file));
      } catch (const json::exception& e) {
        throw InvalidInput(std::string("trace JSON: ") + e.what());
      }
      if (tj.contains("trace")) tj = tj["trace"];
      const auto problem = validate_trace(h, trace_from_json(tj), trace_m);
      if (pretty) {
        std::cout << (problem ? "invalid: " + *problem : "valid") << "\n";
      } else {
        json j = {{"valid", !problem}};
        if (problem) j["problem"] = *problem;
        emit(j);
      }
      return problem ? kExitVerify : 0;
    }
    if (*verify) {
      VerifyOptions vo;
      vo.filter = filter;
      vo.budget = opts.budget;
      vo.threads = threads;
      vo.seed = seed;
      vo.count = count;
      VerificationReport r;
      if (suite != "properties") r = run_verification(vo);
      if (suite != "theorems") {
        VerificationReport p = property_suite(seed, count, vo);
        for (auto& c : p.cases) r.cases.push_back(std::move(c));
      }
      if (pretty && !as_json) {
        print_report_table(r);
      } else {
        emit(report_json(r, timings));
      }
      return r.ok() ? 0 : kExitVerify;
    }
    if (*conjecture) {
      if (sweep_n > 0) {
        if (!conj_file.empty()) throw InvalidInput("give either FILE or --sweep, not both");
        const ConjectureSweep s = conjecture_sweep(sweep_n, sweep_k, opts.budget);
        const json j = sweep_json(s);
        if (pretty) {
          std::cout << j["verdict"].get<std::string>() << ": " << s.classes << " classes, " << s.applicable
                    << " with I = n-k+1, " << s.counterexamples.size() << " counterexample(s), "
                    << s.skipped << " skipped\n";
        } else {
          emit(j);
        }
        return 0;
      }
      if (conj_file.empty()) throw InvalidInput("conjecture needs FILE or --sweep N");
      const Hypergraph h = io::load(conj_file);
      const ConjectureReport r = check_conjecture(h, opts);
      if (pretty) {
        std::cout << to_string(r.status) << " (I = " << r.infection_number << ", k = " << r.k << ", "
                  << r.infection_sets_checked << " sets checked)\n";
        if (r.counterexample_seed) {
          std::cout << "seed " << labels(*r.counterexample_seed) << " leaves "
                    << labels(*r.counterexample_uninfected) << " outside every edge\n";
        }
      } else {
        emit(conjecture_json(r));
      }
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
