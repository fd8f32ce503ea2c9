// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "scg/error.hpp"
#include "scg/families.hpp"
#include "scg/search.hpp"

using namespace scg;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

Outcome from_reports(const std::vector<VerificationReport>& reports) {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& r : reports) {
    checks += r.checks.size();
    for (const auto& c : r.checks)
      if (!c.passed) {
        if (o.ok) o.note = r.name + ": " + c.label + " " + c.detail;
        o.ok = false;
      }
  }
  if (o.ok) o.note = std::to_string(checks) + " checks";
  return o;
}

std::set<CanonicalForm> maximizer_set(const SearchReport& r) {
  std::set<CanonicalForm> out;
  for (const auto& m : r.maximizers) out.insert(m.canonical);
  return out;
}

CanonicalForm form_of(const FamilySpec& s) { return canonical_form(build_family(s)); }

SignedCompleteGraph random_signed(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> neg;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) neg.emplace_back(a, b);
  return SignedCompleteGraph(n, neg);
}

Outcome closed_forms() {
  return from_reports({verify_lemma("star", 12), verify_lemma("q1", 12), verify_lemma("qst", 12),
                       verify_lemma("u1", 12)});
}

Outcome quotient_factorization() { return from_reports({verify_lemma("quotient", 10)}); }

Outcome difference_identities() {
  return from_reports({verify_lemma("diff-qst", 12), verify_lemma("diff-u1", 12), verify_lemma("diff-star", 12)});
}

Outcome main_theorem() {
  const VerificationReport r = verify_theorem_main(6, 9);
  Outcome o = from_reports({r});
  o.note += r.findings.empty() ? ", U_1 unique everywhere" : ", " + std::to_string(r.findings.size()) + " ties";
  return o;
}

Outcome exceptional_cases() {
  const std::set<CanonicalForm> c4{form_of(FamilySpec::cycle(4))};
  const std::set<CanonicalForm> tie{form_of(FamilySpec::q1(5)), form_of(FamilySpec::u1(5))};
  const bool n4 = maximizer_set(find_maximizer(4, enumerate_unicyclic(4))) == c4;
  const bool n5 = maximizer_set(find_maximizer(5, enumerate_unicyclic(4))) == c4;
  const bool n55 = maximizer_set(find_maximizer(5, enumerate_unicyclic(5))) == tie;
  return {n4 && n5 && n55, std::string("n=4,k=4 C_4 ") + (n4 ? "yes" : "no") + "; n=5,k=4 C_4 " + (n5 ? "yes" : "no") +
                               "; n=k=5 Q_1~U_1 tie " + (n55 ? "yes" : "no")};
}

Outcome star_corollary() { return from_reports({verify_corollary_star(9)}); }

Outcome switching_invariance() { return from_reports({verify_lemma("switching", 7)}); }

Outcome interlacing() {
  std::mt19937_64 rng(8);
  std::vector<VerificationReport> reports;
  for (int graph = 0; graph < 50; ++graph) {
    const int n = 2 + graph % 7;
    reports.push_back(check_interlacing(random_signed(rng, n), 10, static_cast<std::uint64_t>(graph)));
  }
  return from_reports(reports);
}

Outcome rotation() {
  std::mt19937_64 rng(9);
  std::vector<VerificationReport> reports;
  int graphs = 0, drawn = 0;
  std::size_t triples = 0;
  while (graphs < 20 && drawn < 2000) {
    ++drawn;
    const int n = 5 + drawn % 4;
    VerificationReport r = check_rotation_lemma(random_signed(rng, n), 10, static_cast<std::uint64_t>(drawn));
    if (r.checks.size() == 10) {
      ++graphs;
      triples += r.checks.size();
      reports.push_back(std::move(r));
    } else if (!r.passed()) {
      reports.push_back(std::move(r));
    }
  }
  Outcome o = from_reports(reports);
  if (triples < 200) o = {false, "only " + std::to_string(triples) + " admissible triples found"};
  else if (o.ok) o.note = std::to_string(triples) + " triples across " + std::to_string(graphs) + " graphs";
  return o;
}

Outcome enumeration_oracle() {
  const std::size_t expected[] = {1, 2, 5, 13, 33};
  Outcome o{true, "counts"};
  for (int k = 3; k <= 7; ++k) {
    const auto oracle_classes = oracle::labeled_unicyclic_classes(k);
    const auto classes = oracle::classes_of(enumerate_unicyclic(k));
    o.ok = o.ok && oracle_classes.size() == expected[k - 3] && classes == oracle_classes;
    o.note += " " + std::to_string(oracle_classes.size());
  }
  return o;
}

Outcome conjecture() {
  Outcome o{true, ""};
  int runs = 0;
  for (int n = 6; n <= 9; ++n)
    for (int k = 3; k <= n; ++k) {
      if (k < n) {
        const SearchReport t0 = check_conjecture_cactus(n, k, 0);
        ++runs;
        o.ok = o.ok && t0.verdict == "CONSISTENT" && maximizer_set(t0) == std::set{form_of(FamilySpec::star(k))};
      }
      const SearchReport t1 = check_conjecture_cactus(n, k, 1);
      ++runs;
      o.ok = o.ok && t1.verdict == "CONSISTENT" && t1.is_maximizer(form_of(FamilySpec::u1(k))) &&
             maximizer_set(t1) == maximizer_set(find_maximizer(n, enumerate_unicyclic(k)));
    }
  std::string t2;
  for (int k = 6; k <= 8; ++k)
    for (int n = k - 1; n <= 9; ++n) {
      const SearchReport r = check_conjecture_cactus(n, k, 2);
      ++runs;
      if (r.verdict != "CONSISTENT") t2 += " n=" + std::to_string(n) + ",k=" + std::to_string(k) + ":" + *r.verdict;
    }
  o.note = std::to_string(runs) + " runs; t=2 finding:" + (t2.empty() ? " all CONSISTENT" : t2);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed-form fidelity", closed_forms},
      {"quotient factorization", quotient_factorization},
      {"difference identities", difference_identities},
      {"main theorem, n = 6..9", main_theorem},
      {"exceptional cases n = 4, 5", exceptional_cases},
      {"star corollary, n = 4..9", star_corollary},
      {"switching invariance", switching_invariance},
      {"interlacing property suite", interlacing},
      {"rotation lemma property suite", rotation},
      {"enumeration oracle agreement", enumeration_oracle},
      {"cactus conjecture exploration", conjecture},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("%s  [%2zu] %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.note.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
