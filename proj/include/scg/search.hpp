// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scg/graph.hpp"
#include "scg/roots.hpp"

namespace scg {

class IndexCache;

/// One line of a verification run.
struct Check {
  std::string label;
  bool passed = true;
  std::string detail;
};

struct VerificationReport {
  std::string name;
  std::vector<Check> checks;
  /// Reported observations that are not assertions (ties, verdicts).
  std::vector<std::string> findings;

  bool passed() const;
  void add(std::string label, bool ok, std::string detail = {});
};

struct CandidateResult {
  CanonicalForm canonical;
  SimpleGraph graph;  // canonically labeled
  RootInterval index;
};

/// Outcome of an exact extremal search over embedded negative subgraphs.
struct SearchReport {
  std::string class_name;
  int n = 0;
  int k = 0;
  std::optional<int> cycles;
  std::size_t candidates = 0;
  std::vector<CandidateResult> maximizers;  // sorted by canonical form
  std::optional<CandidateResult> runner_up;
  /// compare(maximizer, runner_up); Greater whenever runner_up exists.
  std::optional<Comparison> runner_up_gap;
  std::vector<CandidateResult> table;  // one row per distinct candidate, sorted
  std::optional<std::string> verdict;
  std::optional<CanonicalForm> witness;

  bool is_maximizer(const CanonicalForm& f) const;
};

struct SearchOptions {
  IndexCache* cache = nullptr;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Embeds every candidate as the negative subgraph of K_n on vertices
/// 0..order-1 and returns all index maximizers under exact comparison.
SearchReport find_maximizer(int n, const std::vector<SimpleGraph>& candidates,
                            const SearchOptions& options = {});

/// U_1(k) is among the maximizers over unicyclic graphs of order k, for every
/// n in [n_min, n_max] (6 <= n_min, n_max <= 9) and 3 <= k <= n. Ties and
/// uniqueness are recorded as findings.
VerificationReport verify_theorem_main(int n_min, int n_max, const SearchOptions& options = {});

/// Every unicyclic U of order k < n has strictly smaller index than the star
/// K_{1,k}, for 4 <= n <= n_max.
VerificationReport verify_corollary_star(int n_max, const SearchOptions& options = {});

/// Q(s,t) has strictly smaller index than Q_1 of the same order, 7 <= n <= n_max.
VerificationReport verify_corollary_qst(int n_max);

/// Relocations R(u,v,w) whose hypothesis holds for the numeric top
/// eigenvector with margin 1e-9 never decrease the index (exact check).
/// At most `trials` admissible triples are tested, chosen by `seed`.
VerificationReport check_rotation_lemma(const SignedCompleteGraph& g, int trials, std::uint64_t seed);

/// Eigenvalues of random induced subgraphs interlace those of g (n <= 8).
VerificationReport check_interlacing(const SignedCompleteGraph& g, int trials, std::uint64_t seed);

/// Searches cacti with k edges and t cycles in K_n; the verdict is
/// CONSISTENT when G_t is among the maximizers, COUNTEREXAMPLE otherwise.
SearchReport check_conjecture_cactus(int n, int k, int t, const SearchOptions& options = {});

/// Closed-form and structural identity checks for n <= n_max. Names: star,
/// q1, qst, u1, quotient, switching, diff-qst, diff-u1, diff-star.
VerificationReport verify_lemma(const std::string& name, int n_max);

}  // namespace scg
