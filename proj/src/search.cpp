// SPDX-License-Identifier: Apache-2.0

#include "scg/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "scg/cache.hpp"
#include "scg/charpoly.hpp"
#include "scg/error.hpp"
#include "scg/families.hpp"
#include "scg/formulas.hpp"
#include "scg/numeric.hpp"
#include "scg/quotient.hpp"

namespace scg {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerificationReport::add(std::string label, bool ok, std::string detail) {
  checks.push_back({std::move(label), ok, std::move(detail)});
}

bool SearchReport::is_maximizer(const CanonicalForm& f) const {
  return std::any_of(maximizers.begin(), maximizers.end(),
                     [&](const CandidateResult& c) { return c.canonical == f; });
}

namespace {

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

RootInterval candidate_index(int n, const CanonicalForm& form, const SimpleGraph& labeled, IndexCache* cache) {
  if (cache) {
    if (auto hit = cache->lookup(form, n)) return RootInterval::verified_largest(hit->charpoly, hit->index_lo, hit->index_hi);
  }
  const IntPolynomial p = char_poly(build_signed_complete(n, labeled));
  RootInterval r = largest_root(p, report_width());
  if (cache) cache->insert({form, n, p, r.lo(), r.hi()});
  return r;
}

SignedCompleteGraph embed(int n, const FamilySpec& spec) { return build_signed_complete(n, build_family(spec)); }

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

// Aggregates many identity checks into a single report line.
class Tally {
 public:
  explicit Tally(std::string label) : label_(std::move(label)) {}

  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && failures_++ == 0) first_ = what;
  }
  void flush(VerificationReport& r) {
    if (cases_ == 0) return;
    if (failures_ == 0)
      r.add(label_, true, std::to_string(cases_) + " cases");
    else
      r.add(label_, false, std::to_string(failures_) + " of " + std::to_string(cases_) + " failed; first: " + first_);
  }

 private:
  std::string label_;
  long cases_ = 0, failures_ = 0;
  std::string first_;
};

SimpleGraph padded(int n, const SimpleGraph& h) { return SimpleGraph(n, h.edges()); }

}  // namespace

SearchReport find_maximizer(int n, const std::vector<SimpleGraph>& candidates, const SearchOptions& options) {
  if (candidates.empty()) fail(ErrorKind::InvalidArgument, "find_maximizer needs at least one candidate");
  for (const SimpleGraph& h : candidates)
    if (h.order() > n)
      fail(ErrorKind::Precondition, "candidate order " + std::to_string(h.order()) + " exceeds n = " + std::to_string(n));

  // Deduplicate up to isomorphism; the canonical labeling fixes the embedding.
  std::map<CanonicalForm, SimpleGraph> distinct;
  for (const SimpleGraph& h : candidates) {
    CanonicalLabeling c = canonical_labeling(h);
    distinct.emplace(c.form, std::move(c.graph));
  }
  std::vector<std::pair<CanonicalForm, SimpleGraph>> rows(distinct.begin(), distinct.end());
  std::vector<std::optional<RootInterval>> indices(rows.size());
  parallel_for(rows.size(), options.threads, [&](std::size_t i) {
    indices[i] = candidate_index(n, rows[i].first, rows[i].second, options.cache);
  });

  SearchReport report;
  report.n = n;
  report.candidates = candidates.size();
  for (std::size_t i = 0; i < rows.size(); ++i) report.table.push_back({rows[i].first, rows[i].second, *indices[i]});

  std::size_t best = 0;
  for (std::size_t i = 1; i < report.table.size(); ++i)
    if (compare_roots(report.table[i].index, report.table[best].index) == Comparison::Greater) best = i;
  std::optional<std::size_t> runner;
  for (std::size_t i = 0; i < report.table.size(); ++i) {
    const Comparison c = compare_roots(report.table[i].index, report.table[best].index);
    if (c == Comparison::Equal) {
      report.maximizers.push_back(report.table[i]);
    } else if (!runner || compare_roots(report.table[i].index, report.table[*runner].index) == Comparison::Greater) {
      runner = i;
    }
  }
  if (runner) {
    report.runner_up = report.table[*runner];
    report.runner_up_gap = compare_roots(report.table[best].index, report.table[*runner].index);
  }
  return report;
}

VerificationReport verify_theorem_main(int n_min, int n_max, const SearchOptions& options) {
  if (n_min < 6 || n_max > 9 || n_min > n_max)
    fail(ErrorKind::Capacity, "verify-theorem covers 6 <= n_min <= n_max <= 9");
  VerificationReport r{"theorem-main", {}, {}};
  for (int n = n_min; n <= n_max; ++n)
    for (int k = 3; k <= n; ++k) {
      SearchReport s = find_maximizer(n, enumerate_unicyclic(k), options);
      const CanonicalForm u1 = canonical_form(build_family(FamilySpec::u1(k)));
      const bool ok = s.is_maximizer(u1);
      std::string detail = std::to_string(s.table.size()) + " candidates, ";
      if (!ok)
        detail += "maximizer " + s.maximizers.front().canonical.to_string();
      else if (s.maximizers.size() == 1)
        detail += "unique";
      else
        detail += "tied with " + std::to_string(s.maximizers.size() - 1) + " other(s)";
      r.add(nk(n, k) + ": U_1 maximizes", ok, detail);
      if (s.maximizers.size() > 1) {
        std::string tie = nk(n, k) + ": tie among";
        for (const auto& m : s.maximizers) tie += " " + m.canonical.to_string();
        r.findings.push_back(tie);
      }
    }
  return r;
}

VerificationReport verify_corollary_star(int n_max, const SearchOptions& options) {
  if (n_max < 4 || n_max > 9) fail(ErrorKind::Capacity, "verify-corollary star covers 4 <= n_max <= 9");
  VerificationReport r{"corollary-star", {}, {}};
  for (int n = 4; n <= n_max; ++n)
    for (int k = 3; k < n; ++k) {
      const RootInterval star = index(embed(n, FamilySpec::star(k)), report_width());
      SearchReport s = find_maximizer(n, enumerate_unicyclic(k), options);
      int strict = 0;
      std::string bad;
      for (const auto& row : s.table) {
        if (compare_roots(row.index, star) == Comparison::Less)
          ++strict;
        else if (bad.empty())
          bad = row.canonical.to_string();
      }
      r.add(nk(n, k) + ": every U below K_{1,k}", bad.empty(),
            bad.empty() ? std::to_string(strict) + " candidates Less" : "not Less: " + bad);
    }
  return r;
}

VerificationReport verify_corollary_qst(int n_max) {
  if (n_max < 7 || n_max > 10) fail(ErrorKind::Capacity, "verify-corollary qst covers 7 <= n_max <= 10");
  VerificationReport r{"corollary-qst", {}, {}};
  for (int n = 7; n <= n_max; ++n)
    for (int s = 1; s + 5 <= n; ++s)
      for (int t = 1; s + t + 4 <= n; ++t) {
        const int k = s + t + 4;
        const Comparison c = compare_indices(embed(n, FamilySpec::qst(s, t)), embed(n, FamilySpec::q1(k)));
        r.add("n=" + std::to_string(n) + " s=" + std::to_string(s) + " t=" + std::to_string(t) + ": Q(s,t) below Q_1",
              c == Comparison::Less, to_string(c));
        if (s < t) {
          const bool same = char_poly(embed(n, FamilySpec::qst(s, t))) == char_poly(embed(n, FamilySpec::qst(t, s)));
          r.add("n=" + std::to_string(n) + " s=" + std::to_string(s) + " t=" + std::to_string(t) + ": symmetric in s,t",
                same);
        }
      }
  return r;
}

VerificationReport check_rotation_lemma(const SignedCompleteGraph& g, int trials, std::uint64_t seed) {
  const int n = g.order();
  if (n > 10) fail(ErrorKind::Capacity, "check-rotation supports n <= 10");
  if (trials < 0) fail(ErrorKind::InvalidArgument, "trials must be nonnegative");
  constexpr double margin = 1e-9;
  VerificationReport r{"rotation-lemma", {}, {}};
  const FloatSpectrum spec = numeric_spectrum(g);
  auto x = [&](Vertex v) { return spec.vector_entry(v, 0); };

  struct Triple {
    Vertex u, v, w;
  };
  std::vector<Triple> hypothesis;
  int admissible = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w) {
        if (u == v || u == w || v == w || g.sign(u, v) != 1 || g.sign(u, w) != -1) continue;
        ++admissible;
        const bool holds = (x(u) > margin && x(v) < x(w) - margin) || (x(u) < -margin && x(v) > x(w) + margin);
        if (holds) hypothesis.push_back({u, v, w});
      }
  std::mt19937_64 rng(seed);
  std::shuffle(hypothesis.begin(), hypothesis.end(), rng);
  if (hypothesis.size() > static_cast<std::size_t>(trials)) hypothesis.resize(static_cast<std::size_t>(trials));
  std::sort(hypothesis.begin(), hypothesis.end(),
            [](const Triple& a, const Triple& b) { return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w); });

  const RootInterval before = index(g, report_width());
  for (const Triple& t : hypothesis) {
    const RootInterval after = index(relocate(g, t.u, t.v, t.w), report_width());
    const Comparison c = compare_roots(before, after);
    r.add("R(" + std::to_string(t.u) + "," + std::to_string(t.v) + "," + std::to_string(t.w) + ")",
          c != Comparison::Greater, std::string("before vs after: ") + to_string(c));
  }
  r.findings.push_back(std::to_string(admissible) + " admissible triples, " + std::to_string(hypothesis.size()) +
                       " tested");
  return r;
}

VerificationReport check_interlacing(const SignedCompleteGraph& g, int trials, std::uint64_t seed) {
  const int n = g.order();
  if (n > 8) fail(ErrorKind::Capacity, "check-interlacing supports n <= 8");
  if (trials < 0) fail(ErrorKind::InvalidArgument, "trials must be nonnegative");
  const Rational width(1, Integer("10000000000"));
  VerificationReport r{"interlacing", {}, {}};
  const std::vector<RootInterval> lambda = all_roots(char_poly(g), width);
  // a <= b fails only when the intervals certify a > b.
  auto certainly_greater = [](const RootInterval& a, const RootInterval& b) { return a.lo() >= b.hi(); };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(1, n);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    std::shuffle(all.begin(), all.end(), rng);
    const int m = size_dist(rng);
    std::vector<Vertex> subset(all.begin(), all.begin() + m);
    std::sort(subset.begin(), subset.end());
    const std::vector<RootInterval> mu = all_roots(char_poly(induced(g, subset)), width);

    std::string label = "X={";
    for (std::size_t i = 0; i < subset.size(); ++i) label += (i ? "," : "") + std::to_string(subset[i]);
    label += "}";
    std::string bad;
    for (int i = 0; i < m && bad.empty(); ++i) {
      const RootInterval& lo_bound = lambda[static_cast<std::size_t>(n - m + i)];
      const RootInterval& up_bound = lambda[static_cast<std::size_t>(i)];
      const RootInterval& mi = mu[static_cast<std::size_t>(i)];
      if (certainly_greater(lo_bound, mi) || certainly_greater(mi, up_bound))
        bad = "mu_" + std::to_string(i + 1) + " escapes [lambda_" + std::to_string(n - m + i + 1) + ", lambda_" +
              std::to_string(i + 1) + "]";
    }
    r.add(label, bad.empty(), bad);
  }
  return r;
}

SearchReport check_conjecture_cactus(int n, int k, int t, const SearchOptions& options) {
  if (n > 10) fail(ErrorKind::Capacity, "check-conjecture supports n <= 10");
  if (k - t >= n) fail(ErrorKind::Precondition, "needs k - t < n");
  if (t < 0 || k < 1 || k < 3 * t) fail(ErrorKind::Precondition, "G_t needs k >= 3t and k >= 1");
  SearchReport s = find_maximizer(n, enumerate_cacti(k, t), options);
  s.class_name = "cactus";
  s.k = k;
  s.cycles = t;
  const CanonicalForm gt = canonical_form(build_family(FamilySpec::gt(k, t)));
  if (s.is_maximizer(gt)) {
    s.verdict = "CONSISTENT";
  } else {
    s.verdict = "COUNTEREXAMPLE";
    s.witness = s.maximizers.front().canonical;
  }
  return s;
}

VerificationReport verify_lemma(const std::string& name, int n_max) {
  if (n_max < 1 || n_max > 16) fail(ErrorKind::Capacity, "verify-lemma supports 1 <= n_max <= 16");
  VerificationReport r{name, {}, {}};
  namespace f = formulas;
  auto cp = [](int n, const FamilySpec& spec) { return char_poly(embed(n, spec)); };

  if (name == "star") {
    Tally tally("star closed form");
    for (int n = 2; n <= n_max; ++n)
      for (int k = 1; k < n; ++k) tally.expect(f::star_charpoly(n, k) == cp(n, FamilySpec::star(k)), nk(n, k));
    tally.flush(r);
  } else if (name == "q1") {
    Tally form("q1 closed form"), full("q1 k = n branch"), sw("q1 switching at v1");
    for (int n = 5; n <= n_max; ++n)
      for (int k = 4; k <= n; ++k) {
        const SignedCompleteGraph g = embed(n, FamilySpec::q1(k));
        const IntPolynomial p = char_poly(g);
        form.expect(f::q1_charpoly(n, k) == p, nk(n, k));
        if (k == n) full.expect(f::q1_charpoly_full_order(n) == p, nk(n, k));
        const SimpleGraph target =
            k == n ? padded(n, build_family(FamilySpec::star(3))) : padded(n, build_family(FamilySpec::double_star(n - k, 2)));
        const SignedCompleteGraph switched = switch_at(g, std::vector<Vertex>{0});
        bool ok = char_poly(switched) == char_poly(build_signed_complete(n, target));
        if (n <= kCanonicalMaxOrder) ok = ok && canonical_form(switched.negative_graph()) == canonical_form(target);
        sw.expect(ok, nk(n, k));
      }
    form.flush(r);
    full.flush(r);
    sw.flush(r);
  } else if (name == "u1") {
    Tally tally("u1 closed form");
    for (int n = 5; n <= n_max; ++n)
      for (int k = 3; k <= n; ++k) tally.expect(f::u1_charpoly(n, k) == cp(n, FamilySpec::u1(k)), nk(n, k));
    tally.flush(r);
  } else if (name == "qst") {
    Tally form("qst closed form"), septic("qst k = n septic"), sextic("qst k = n sextic"),
        quotient("qst quotient factor");
    for (int n = 7; n <= n_max; ++n)
      for (int s = 1; s + 5 <= n; ++s)
        for (int t = 1; s + t + 4 <= n; ++t) {
          const int k = s + t + 4;
          const std::string at = nk(n, k) + " s=" + std::to_string(s) + " t=" + std::to_string(t);
          const SignedCompleteGraph g = embed(n, FamilySpec::qst(s, t));
          const IntPolynomial p = char_poly(g);
          const IntPolynomial closed = f::qst_charpoly(n, k, s, t);
          form.expect(closed == p, at);
          const std::vector<std::vector<Vertex>> blocks = qst_partition_blocks(n, s, t);
          const int m = static_cast<int>(blocks.size());
          const SignPartition part = validate_partition(g, blocks, m);
          const IntPolynomial phi_b = quotient_char_poly(quotient_matrix(part, g));
          quotient.expect(IntPolynomial{1, 1}.pow(static_cast<unsigned>(n - m)) * phi_b == p &&
                              char_poly_via_quotient(part, g) == p,
                          at);
          if (k == n) {
            septic.expect(f::qst_charpoly_full_order(n, s, t) == p, at);
            sextic.expect(f::qst_charpoly_full_order_sextic(n, s, t) == p, at);
          }
        }
    form.flush(r);
    septic.flush(r);
    sextic.flush(r);
    quotient.flush(r);
  } else if (name == "quotient") {
    auto check = [](Tally& tally, const PartitionedGraph& pg) {
      const SignPartition part = validate_partition(pg.graph, pg.blocks, pg.positive_blocks);
      tally.expect(char_poly_via_quotient(part, pg.graph) == char_poly(pg.graph),
                   "n=" + std::to_string(pg.graph.order()) + " blocks=" + std::to_string(pg.blocks.size()));
    };
    Tally exhaustive("exhaustive partitions, up to 4 blocks, n <= " + std::to_string(std::min(n_max, 6)));
    for (int n = 1; n <= std::min(n_max, 6); ++n)
      for_each_partitioned_graph(n, 4, [&](const PartitionedGraph& pg) { check(exhaustive, pg); });
    exhaustive.flush(r);
    Tally random("1000 random partitions, n <= " + std::to_string(n_max));
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> order(1, n_max);
    for (int i = 0; i < 1000; ++i) {
      const int n = order(rng);
      check(random, random_partitioned_graph(rng, n, n));
    }
    random.flush(r);
  } else if (name == "switching") {
    Tally all("all switchings preserve the characteristic polynomial");
    std::mt19937_64 rng(7);
    std::bernoulli_distribution coin(0.5);
    for (int n = 1; n <= std::min(n_max, 7); ++n)
      for (int sample = 0; sample < 20; ++sample) {
        std::vector<Edge> negative;
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            if (coin(rng)) negative.emplace_back(a, b);
        const SignedCompleteGraph g(n, negative);
        const IntPolynomial p = char_poly(g);
        bool ok = true;
        for (unsigned mask = 0; mask < (1u << n) && ok; ++mask) {
          std::vector<Vertex> side;
          for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) side.push_back(v);
          ok = char_poly(switch_at(g, side)) == p;
        }
        all.expect(ok, "n=" + std::to_string(n) + " sample " + std::to_string(sample));
      }
    all.flush(r);
    if (n_max >= 5) {
      const SignedCompleteGraph switched = switch_at(embed(5, FamilySpec::q1(5)), std::vector<Vertex>{2});
      r.add("n=k=5: Q_1 switched at v3 is U_1",
            canonical_form(switched.negative_graph()) == canonical_form(build_family(FamilySpec::u1(5))));
    }
  } else if (name == "diff-qst") {
    Tally tally("q1 - qst product form");
    for (int n = 7; n <= n_max; ++n)
      for (int s = 1; s + 5 <= n; ++s)
        for (int t = 1; s + t + 4 <= n; ++t) {
          const int k = s + t + 4;
          const IntPolynomial d = f::diff_qst_vs_q1(n, k, s, t);
          tally.expect(d == f::diff_qst_vs_q1_product(n, k, s, t) &&
                           d == cp(n, FamilySpec::q1(k)) - cp(n, FamilySpec::qst(s, t)),
                       nk(n, k) + " s=" + std::to_string(s) + " t=" + std::to_string(t));
        }
    tally.flush(r);
  } else if (name == "diff-u1") {
    Tally tally("u1 - q1 product form");
    for (int n = 5; n <= n_max; ++n)
      for (int k = 4; k <= n; ++k) {
        const IntPolynomial d = f::diff_u1_vs_q1(n, k);
        tally.expect(d == f::diff_u1_vs_q1_product(n, k) && d == cp(n, FamilySpec::u1(k)) - cp(n, FamilySpec::q1(k)),
                     nk(n, k));
      }
    tally.flush(r);
  } else if (name == "diff-star") {
    Tally tally("star - u1 product form"), triangle("k = 3 triangle form");
    for (int n = 4; n <= n_max; ++n) {
      const IntPolynomial direct = cp(n, FamilySpec::star(3)) - cp(n, FamilySpec::cycle(3));
      triangle.expect(f::diff_star_vs_u1_triangle(n) == direct, nk(n, 3));
      if (n < 5) continue;
      for (int k = 3; k < n; ++k) {
        const IntPolynomial d = f::diff_star_vs_u1(n, k);
        tally.expect(
            d == f::diff_star_vs_u1_product(n, k) && d == cp(n, FamilySpec::star(k)) - cp(n, FamilySpec::u1(k)),
            nk(n, k));
      }
    }
    tally.flush(r);
    triangle.flush(r);
  } else {
    fail(ErrorKind::InvalidArgument, "unknown lemma '" + name +
                                         "' (expected star, q1, qst, u1, quotient, switching, diff-qst, diff-u1, "
                                         "diff-star)");
  }
  if (r.checks.empty()) fail(ErrorKind::Capacity, "n_max = " + std::to_string(n_max) + " leaves no case to check for " + name);
  return r;
}

}  // namespace scg
