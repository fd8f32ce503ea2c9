// SPDX-License-Identifier: Apache-2.0

#include "scg/scg.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "scg/cache.hpp"
#include "scg/charpoly.hpp"
#include "scg/documents.hpp"
#include "scg/error.hpp"
#include "scg/families.hpp"
#include "scg/formulas.hpp"
#include "scg/quotient.hpp"
#include "scg/search.hpp"

struct scg_graph {
  scg::SignedCompleteGraph g;
};

struct scg_cache {
  scg::IndexCache cache;
};

namespace {

thread_local std::string last_error;

scg_status status_of(scg::ErrorKind kind) {
  switch (kind) {
    case scg::ErrorKind::InvalidArgument: return SCG_ERR_INVALID_ARGUMENT;
    case scg::ErrorKind::OutOfRange: return SCG_ERR_OUT_OF_RANGE;
    case scg::ErrorKind::Precondition: return SCG_ERR_PRECONDITION;
    case scg::ErrorKind::Capacity: return SCG_ERR_CAPACITY;
    case scg::ErrorKind::Numeric: return SCG_ERR_NUMERIC;
    case scg::ErrorKind::Parse: return SCG_ERR_PARSE;
    case scg::ErrorKind::Io: return SCG_ERR_IO;
  }
  return SCG_ERR_INTERNAL;
}

template <class F>
scg_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return SCG_OK;
  } catch (const scg::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return SCG_ERR_INTERNAL;
}

void need(const void* p, const char* name) {
  if (!p) scg::fail(scg::ErrorKind::InvalidArgument, std::string(name) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<scg::Vertex> vertex_list(const int* vertices, size_t count) {
  if (count > 0) need(vertices, "vertices");
  return std::vector<scg::Vertex>(vertices, vertices + count);
}

scg::SearchOptions options_of(const scg_search_options* o) {
  scg::SearchOptions out;
  if (o) {
    out.cache = o->cache ? &o->cache->cache : nullptr;
    out.threads = o->threads;
  }
  return out;
}

void emit(char** out, const std::string& doc) {
  if (out) *out = dup(doc);
}

}  // namespace

extern "C" {

const char* scg_version(void) { return "1.0.0"; }

const char* scg_last_error(void) { return last_error.c_str(); }

const char* scg_status_name(scg_status status) {
  switch (status) {
    case SCG_OK: return "ok";
    case SCG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SCG_ERR_OUT_OF_RANGE: return "out of range";
    case SCG_ERR_PRECONDITION: return "precondition violated";
    case SCG_ERR_CAPACITY: return "capacity exceeded";
    case SCG_ERR_NUMERIC: return "numeric failure";
    case SCG_ERR_PARSE: return "parse error";
    case SCG_ERR_IO: return "i/o error";
    case SCG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void scg_string_free(char* s) { std::free(s); }

scg_status scg_graph_create(int n, const int* edges, size_t edge_count, scg_graph** out) {
  return guarded([&] {
    need(out, "out");
    if (edge_count > 0) need(edges, "edges");
    if (n < 1) scg::fail(scg::ErrorKind::InvalidArgument, "n must be positive");
    std::vector<scg::Edge> list;
    for (size_t i = 0; i < edge_count; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new scg_graph{scg::SignedCompleteGraph(n, std::move(list))};
  });
}

scg_status scg_graph_from_json(const char* document, scg_graph** out) {
  return guarded([&] {
    need(document, "document");
    need(out, "out");
    *out = new scg_graph{scg::parse_graph_document(document)};
  });
}

scg_status scg_graph_from_family(const char* family, int n, scg_graph** out) {
  return guarded([&] {
    need(family, "family");
    need(out, "out");
    const scg::SimpleGraph h = scg::build_family(scg::FamilySpec::parse(family));
    if (h.order() > n)
      scg::fail(scg::ErrorKind::Precondition, std::string(family) + " has order " + std::to_string(h.order()) +
                                                  " > n = " + std::to_string(n));
    *out = new scg_graph{scg::build_signed_complete(n, h)};
  });
}

void scg_graph_destroy(scg_graph* g) { delete g; }

int scg_graph_order(const scg_graph* g) { return g ? g->g.order() : 0; }

scg_status scg_graph_to_json(const scg_graph* g, char** document) {
  return guarded([&] {
    need(g, "graph");
    need(document, "document");
    *document = dup(scg::graph_document(g->g));
  });
}

scg_status scg_graph_switch(const scg_graph* g, const int* vertices, size_t count, scg_graph** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new scg_graph{scg::switch_at(g->g, vertex_list(vertices, count))};
  });
}

scg_status scg_graph_relocate(const scg_graph* g, int u, int v, int w, scg_graph** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new scg_graph{scg::relocate(g->g, u, v, w)};
  });
}

scg_status scg_graph_induced(const scg_graph* g, const int* vertices, size_t count, scg_graph** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new scg_graph{scg::induced(g->g, vertex_list(vertices, count))};
  });
}

scg_status scg_charpoly(const scg_graph* g, char** document) {
  return guarded([&] {
    need(g, "graph");
    need(document, "document");
    *document = dup(scg::polynomial_document(scg::char_poly(g->g)));
  });
}

scg_status scg_index(const scg_graph* g, const char* width, char** document) {
  return guarded([&] {
    need(g, "graph");
    need(document, "document");
    const scg::Rational w = width ? scg::parse_rational(width) : scg::report_width();
    if (w <= 0) scg::fail(scg::ErrorKind::InvalidArgument, "width must be positive");
    const scg::IntPolynomial p = scg::char_poly(g->g);
    *document = dup(scg::index_document(g->g.order(), p, scg::largest_root(p, w)));
  });
}

scg_status scg_compare(const scg_graph* a, const scg_graph* b, scg_comparison* result, char** document) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    const scg::RootInterval ia = scg::index(a->g, scg::report_width());
    const scg::RootInterval ib = scg::index(b->g, scg::report_width());
    const scg::Comparison c = scg::compare_roots(ia, ib);
    if (result) *result = c == scg::Comparison::Less ? SCG_LESS : c == scg::Comparison::Equal ? SCG_EQUAL : SCG_GREATER;
    emit(document, scg::comparison_document(ia, ib, c));
  });
}

scg_status scg_quotient(const char* partition_document, char** document) {
  return guarded([&] {
    need(partition_document, "partition_document");
    need(document, "document");
    scg::PartitionDocument doc = scg::parse_partition_document(partition_document);
    const scg::SignPartition part = scg::validate_partition(doc.graph, std::move(doc.blocks), doc.p);
    const scg::IntPolynomial phi_b = scg::quotient_char_poly(scg::quotient_matrix(part, doc.graph));
    const scg::IntPolynomial expanded = scg::char_poly_via_quotient(part, doc.graph);
    *document = dup(scg::quotient_document(phi_b, expanded, expanded == scg::char_poly(doc.graph)));
  });
}

scg_status scg_formula(const char* name, int n, int k, int s, int t, char** document) {
  return guarded([&] {
    need(name, "name");
    need(document, "document");
    const std::string which = name;
    scg::IntPolynomial p;
    if (which == "star")
      p = scg::formulas::star_charpoly(n, k);
    else if (which == "q1")
      p = scg::formulas::q1_charpoly(n, k);
    else if (which == "qst")
      p = scg::formulas::qst_charpoly(n, k, s, t);
    else if (which == "u1")
      p = scg::formulas::u1_charpoly(n, k);
    else
      scg::fail(scg::ErrorKind::InvalidArgument, "unknown formula '" + which + "' (expected star, q1, qst, u1)");
    *document = dup(scg::polynomial_document(p));
  });
}

scg_status scg_cache_open(const char* path, scg_cache** out, size_t* rejected) {
  return guarded([&] {
    need(out, "out");
    auto c = std::make_unique<scg_cache>();
    size_t dropped = 0;
    if (path) dropped = c->cache.load(path).size();
    if (rejected) *rejected = dropped;
    *out = c.release();
  });
}

scg_status scg_cache_save(const scg_cache* cache, const char* path) {
  return guarded([&] {
    need(cache, "cache");
    need(path, "path");
    cache->cache.save(path);
  });
}

size_t scg_cache_size(const scg_cache* cache) { return cache ? cache->cache.size() : 0; }

size_t scg_cache_hits(const scg_cache* cache) { return cache ? cache->cache.hits() : 0; }

void scg_cache_destroy(scg_cache* cache) { delete cache; }

scg_status scg_verify_lemma(const char* name, int n_max, char** report, int* passed) {
  return guarded([&] {
    need(name, "name");
    const scg::VerificationReport r = scg::verify_lemma(name, n_max);
    if (passed) *passed = r.passed();
    emit(report, scg::verification_document(r));
  });
}

scg_status scg_search_max(int n, int k, const char* klass, int cycles, const scg_search_options* options,
                          char** report) {
  return guarded([&] {
    need(klass, "klass");
    need(report, "report");
    const std::string which = klass;
    std::vector<scg::SimpleGraph> candidates;
    if (which == "unicyclic")
      candidates = scg::enumerate_unicyclic(k);
    else if (which == "cactus")
      candidates = scg::enumerate_cacti(k, cycles);
    else
      scg::fail(scg::ErrorKind::InvalidArgument, "unknown class '" + which + "' (expected unicyclic, cactus)");
    if (candidates.empty()) scg::fail(scg::ErrorKind::Precondition, "the class has no members");
    scg::SearchReport r = scg::find_maximizer(n, candidates, options_of(options));
    r.class_name = which;
    r.k = k;
    if (which == "cactus") r.cycles = cycles;
    *report = dup(scg::search_document(r));
  });
}

scg_status scg_verify_theorem(int n_min, int n_max, const scg_search_options* options, char** report,
                              int* passed) {
  return guarded([&] {
    const scg::VerificationReport r = scg::verify_theorem_main(n_min, n_max, options_of(options));
    if (passed) *passed = r.passed();
    emit(report, scg::verification_document(r));
  });
}

scg_status scg_verify_corollary(const char* which, int n_max, const scg_search_options* options, char** report,
                                int* passed) {
  return guarded([&] {
    need(which, "which");
    const std::string w = which;
    scg::VerificationReport r;
    if (w == "star")
      r = scg::verify_corollary_star(n_max, options_of(options));
    else if (w == "qst")
      r = scg::verify_corollary_qst(n_max);
    else
      scg::fail(scg::ErrorKind::InvalidArgument, "unknown corollary '" + w + "' (expected star, qst)");
    if (passed) *passed = r.passed();
    emit(report, scg::verification_document(r));
  });
}

scg_status scg_check_conjecture(int n, int k, int cycles, const scg_search_options* options, char** report,
                                int* consistent) {
  return guarded([&] {
    const scg::SearchReport r = scg::check_conjecture_cactus(n, k, cycles, options_of(options));
    if (consistent) *consistent = r.verdict == "CONSISTENT";
    emit(report, scg::search_document(r));
  });
}

scg_status scg_check_rotation(const scg_graph* g, int trials, uint64_t seed, char** report, int* passed) {
  return guarded([&] {
    need(g, "graph");
    const scg::VerificationReport r = scg::check_rotation_lemma(g->g, trials, seed);
    if (passed) *passed = r.passed();
    emit(report, scg::verification_document(r));
  });
}

scg_status scg_check_interlacing(const scg_graph* g, int trials, uint64_t seed, char** report, int* passed) {
  return guarded([&] {
    need(g, "graph");
    const scg::VerificationReport r = scg::check_interlacing(g->g, trials, seed);
    if (passed) *passed = r.passed();
    emit(report, scg::verification_document(r));
  });
}

}  // extern "C"
