// SPDX-License-Identifier: Apache-2.0
// Command-line front end. Talks to the toolkit only through the C API.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "scg/scg.h"

namespace {

constexpr int kPass = 0;
constexpr int kAssertionFailed = 1;
constexpr int kUsage = 2;

struct Failure {
  scg_status status;
  std::string message;
};

void check(scg_status s) {
  if (s != SCG_OK) throw Failure{s, scg_last_error()};
}

// Owns a string returned by the library.
class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { scg_string_free(p_); }
  char** out() { return &p_; }
  const char* c_str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

class Graph {
 public:
  Graph() = default;
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;
  Graph(Graph&& o) noexcept : g_(o.g_) { o.g_ = nullptr; }
  ~Graph() { scg_graph_destroy(g_); }
  scg_graph** out() { return &g_; }
  const scg_graph* get() const { return g_; }

 private:
  scg_graph* g_ = nullptr;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{SCG_ERR_IO, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph from_family(const std::string& dsl, int n) {
  Graph g;
  check(scg_graph_from_family(dsl.c_str(), n, g.out()));
  return g;
}

Graph from_file(const std::string& path) {
  Graph g;
  check(scg_graph_from_json(read_file(path).c_str(), g.out()));
  return g;
}

// "family:<dsl>,n:<N>" or a path to a graph document.
Graph from_reference(const std::string& ref) {
  const std::string prefix = "family:";
  if (ref.rfind(prefix, 0) != 0) return from_file(ref);
  const auto cut = ref.rfind(",n:");
  if (cut == std::string::npos || cut < prefix.size())
    throw Failure{SCG_ERR_INVALID_ARGUMENT, "graph reference '" + ref + "' needs the form family:<dsl>,n:<N>"};
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(ref.substr(cut + 3), &used);
    if (used != ref.size() - cut - 3) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Failure{SCG_ERR_INVALID_ARGUMENT, "bad n in graph reference '" + ref + "'"};
  }
  return from_family(ref.substr(prefix.size(), cut - prefix.size()), n);
}

// Mutually exclusive --graph FILE | --family DSL --n N inputs.
struct GraphInput {
  std::string graph;
  std::string family;
  std::optional<int> n;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--graph", graph, "graph document path (or family:<dsl>,n:<N>)");
    auto* f = cmd->add_option("--family", family, "family DSL, e.g. u1:4 or qst:2,1");
    cmd->add_option("--n", n, "order of the ambient complete graph")->check(CLI::PositiveNumber);
    g->excludes(f);
  }

  Graph load() const {
    if (!graph.empty()) return from_reference(graph);
    if (family.empty()) throw Failure{SCG_ERR_INVALID_ARGUMENT, "give --graph or --family with --n"};
    if (!n) throw Failure{SCG_ERR_INVALID_ARGUMENT, "--family needs an explicit --n"};
    return from_family(family, *n);
  }
};

class Cache {
 public:
  explicit Cache(const std::string& path) : path_(path) {
    if (path_.empty()) return;
    size_t rejected = 0;
    check(scg_cache_open(path_.c_str(), &cache_, &rejected));
    if (rejected > 0) std::cerr << "warning: " << rejected << " cache entries rejected\n";
  }
  Cache(const Cache&) = delete;
  Cache& operator=(const Cache&) = delete;
  ~Cache() { scg_cache_destroy(cache_); }

  scg_search_options options(unsigned threads) const { return {cache_, threads}; }
  void save() const {
    if (cache_) check(scg_cache_save(cache_, path_.c_str()));
  }

 private:
  std::string path_;
  scg_cache* cache_ = nullptr;
};

int report(const Text& doc, int passed) {
  std::cout << doc.c_str() << '\n';
  return passed ? kPass : kAssertionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of signed complete graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string cache_path;
  unsigned threads = 0;
  app.add_option("--cache", cache_path, "line-delimited index cache (read, then rewritten)");
  app.add_option("--threads", threads, "worker threads for searches (0 = all cores)");

  std::function<int()> action;

  GraphInput cp_in;
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
  cp_in.attach(charpoly);
  charpoly->callback([&] {
    action = [&] {
      Graph g = cp_in.load();
      Text doc;
      check(scg_charpoly(g.get(), doc.out()));
      return report(doc, 1);
    };
  });

  GraphInput idx_in;
  std::string width;
  auto* index = app.add_subcommand("index", "isolate the largest eigenvalue");
  idx_in.attach(index);
  index->add_option("--width", width, "interval width, e.g. 1e-12 or 1/1024");
  index->callback([&] {
    action = [&] {
      Graph g = idx_in.load();
      Text doc;
      check(scg_index(g.get(), width.empty() ? nullptr : width.c_str(), doc.out()));
      return report(doc, 1);
    };
  });

  std::string ref_a, ref_b;
  bool compare_json = false;
  auto* compare = app.add_subcommand("compare", "exact comparison of two indices");
  compare->add_option("--a", ref_a, "family:<dsl>,n:<N> or graph document")->required();
  compare->add_option("--b", ref_b, "family:<dsl>,n:<N> or graph document")->required();
  compare->add_flag("--json", compare_json, "emit the comparison document");
  compare->callback([&] {
    action = [&] {
      Graph a = from_reference(ref_a), b = from_reference(ref_b);
      scg_comparison c = SCG_EQUAL;
      Text doc;
      check(scg_compare(a.get(), b.get(), &c, doc.out()));
      if (compare_json)
        std::cout << doc.c_str() << '\n';
      else
        std::cout << (c == SCG_LESS ? "Less" : c == SCG_EQUAL ? "Equal" : "Greater") << '\n';
      return kPass;
    };
  });

  std::string partition_path;
  auto* quotient = app.add_subcommand("quotient", "characteristic polynomial through a sign partition");
  quotient->add_option("--partition", partition_path, "graph document with blocks and p")->required();
  quotient->callback([&] {
    action = [&] {
      Text doc;
      check(scg_quotient(read_file(partition_path).c_str(), doc.out()));
      return report(doc, 1);
    };
  });

  std::string formula_name;
  int f_n = 0, f_k = 0, f_s = 0, f_t = 0;
  auto* formula = app.add_subcommand("formula", "closed-form characteristic polynomial");
  formula->add_option("--name", formula_name)->required()->check(CLI::IsMember({"star", "q1", "qst", "u1"}));
  formula->add_option("--n", f_n)->required();
  formula->add_option("--k", f_k)->required();
  formula->add_option("--s", f_s);
  formula->add_option("--t", f_t);
  formula->callback([&] {
    action = [&] {
      Text doc;
      check(scg_formula(formula_name.c_str(), f_n, f_k, f_s, f_t, doc.out()));
      return report(doc, 1);
    };
  });

  std::string lemma;
  int lemma_n_max = 12;
  auto* verify_lemma = app.add_subcommand("verify-lemma", "check a closed form or structural identity");
  verify_lemma->add_option("--name", lemma)
      ->required()
      ->check(CLI::IsMember({"star", "q1", "qst", "u1", "quotient", "switching", "diff-qst", "diff-u1", "diff-star"}));
  verify_lemma->add_option("--n-max", lemma_n_max);
  verify_lemma->callback([&] {
    action = [&] {
      Text doc;
      int passed = 0;
      check(scg_verify_lemma(lemma.c_str(), lemma_n_max, doc.out(), &passed));
      return report(doc, passed);
    };
  });

  int s_n = 0, s_k = 0, s_cycles = 0;
  std::string s_class = "unicyclic";
  auto* search = app.add_subcommand("search-max", "all index maximizers of a graph class");
  search->add_option("--n", s_n)->required();
  search->add_option("--k", s_k)->required();
  search->add_option("--class", s_class)->check(CLI::IsMember({"unicyclic", "cactus"}));
  search->add_option("--cycles", s_cycles, "cycle count for cacti");
  search->callback([&] {
    action = [&] {
      Cache cache(cache_path);
      const scg_search_options opts = cache.options(threads);
      Text doc;
      check(scg_search_max(s_n, s_k, s_class.c_str(), s_cycles, &opts, doc.out()));
      cache.save();
      return report(doc, 1);
    };
  });

  int th_min = 6, th_max = 9;
  auto* theorem = app.add_subcommand("verify-theorem", "U_1 maximizes the index over unicyclic graphs");
  theorem->add_option("--n-min", th_min);
  theorem->add_option("--n-max", th_max);
  theorem->callback([&] {
    action = [&] {
      Cache cache(cache_path);
      const scg_search_options opts = cache.options(threads);
      Text doc;
      int passed = 0;
      check(scg_verify_theorem(th_min, th_max, &opts, doc.out(), &passed));
      cache.save();
      return report(doc, passed);
    };
  });

  std::string which;
  int cor_n_max = 0;
  auto* corollary = app.add_subcommand("verify-corollary", "star or Q(s,t) corollary");
  corollary->add_option("--which", which)->required()->check(CLI::IsMember({"star", "qst"}));
  corollary->add_option("--n-max", cor_n_max)->required();
  corollary->callback([&] {
    action = [&] {
      Cache cache(cache_path);
      const scg_search_options opts = cache.options(threads);
      Text doc;
      int passed = 0;
      check(scg_verify_corollary(which.c_str(), cor_n_max, &opts, doc.out(), &passed));
      cache.save();
      return report(doc, passed);
    };
  });

  int c_n = 0, c_k = 0, c_t = 0;
  bool strict = false;
  auto* conjecture = app.add_subcommand("check-conjecture", "cactus maximizer search with verdict");
  conjecture->add_option("--n", c_n)->required();
  conjecture->add_option("--k", c_k)->required();
  conjecture->add_option("--cycles", c_t)->required();
  conjecture->add_flag("--strict", strict, "exit 1 on a COUNTEREXAMPLE verdict");
  conjecture->callback([&] {
    action = [&] {
      Cache cache(cache_path);
      const scg_search_options opts = cache.options(threads);
      Text doc;
      int consistent = 0;
      check(scg_check_conjecture(c_n, c_k, c_t, &opts, doc.out(), &consistent));
      cache.save();
      return report(doc, consistent || !strict);
    };
  });

  GraphInput rot_in;
  int rot_trials = 50;
  std::uint64_t rot_seed = 1;
  auto* rotation = app.add_subcommand("check-rotation", "relocation never lowers the index");
  rot_in.attach(rotation);
  rotation->add_option("--trials", rot_trials);
  rotation->add_option("--seed", rot_seed);
  rotation->callback([&] {
    action = [&] {
      Graph g = rot_in.load();
      Text doc;
      int passed = 0;
      check(scg_check_rotation(g.get(), rot_trials, rot_seed, doc.out(), &passed));
      return report(doc, passed);
    };
  });

  GraphInput il_in;
  int il_trials = 50;
  std::uint64_t il_seed = 1;
  auto* interlacing = app.add_subcommand("check-interlacing", "induced subgraph eigenvalues interlace");
  il_in.attach(interlacing);
  interlacing->add_option("--trials", il_trials);
  interlacing->add_option("--seed", il_seed);
  interlacing->callback([&] {
    action = [&] {
      Graph g = il_in.load();
      Text doc;
      int passed = 0;
      check(scg_check_interlacing(g.get(), il_trials, il_seed, doc.out(), &passed));
      return report(doc, passed);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  try {
    return action();
  } catch (const Failure& f) {
    std::cerr << "error (" << scg_status_name(f.status) << "): " << f.message << '\n';
    return kUsage;
  }
}
