#include "latpoly/latpoly.h"

#include <cstring>
#include <string>

#include "latpoly/catalog.hpp"
#include "latpoly/classify.hpp"
#include "latpoly/ehrhart.hpp"
#include "latpoly/enumeration.hpp"
#include "latpoly/io.hpp"
#include "latpoly/report.hpp"

struct lp_polytope {
  latpoly::LatticePolytope value;
};

namespace {

using namespace latpoly;

thread_local std::string last_error;

class Infeasible : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

template <class F>
lp_status guarded(F&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const ParseError& e) {
    last_error = e.what();
    return LP_ERR_PARSE;
  } catch (const Json::exception& e) {
    last_error = e.what();
    return LP_ERR_PARSE;
  } catch (const Infeasible& e) {
    last_error = e.what();
    return LP_ERR_INFEASIBLE;
  } catch (const InvalidArgument& e) {
    last_error = e.what();
    return LP_ERR_INVALID_ARGUMENT;
  } catch (const OverflowError& e) {
    last_error = e.what();
    return LP_ERR_OVERFLOW;
  } catch (const BudgetExceeded& e) {
    last_error = e.what();
    return LP_ERR_BUDGET;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LP_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return LP_ERR_INTERNAL;
  }
}

lp_status fail(lp_status s, const std::string& message) {
  last_error = message;
  return s;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lp_polytope* wrap(LatticePolytope p) { return new lp_polytope{std::move(p)}; }

}  // namespace

extern "C" {

void lp_string_free(char* s) { delete[] s; }

const char* lp_status_string(lp_status s) {
  switch (s) {
    case LP_OK: return "ok";
    case LP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LP_ERR_OVERFLOW: return "overflow";
    case LP_ERR_PARSE: return "parse error";
    case LP_ERR_INFEASIBLE: return "infeasible parameters";
    case LP_ERR_OUT_OF_SCOPE: return "volume exceeds 4";
    case LP_ERR_BUDGET: return "search budget exceeded";
    case LP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lp_last_error(void) { return last_error.c_str(); }

const char* lp_version(void) { return "1.0.0"; }

lp_status lp_polytope_create(size_t dim, size_t npoints, const int64_t* coords, lp_polytope** out) {
  if (!out || (!coords && npoints * dim > 0)) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<IntVector> pts(npoints, IntVector(dim));
    for (size_t i = 0; i < npoints; ++i)
      for (size_t j = 0; j < dim; ++j) pts[i][j] = coords[i * dim + j];
    *out = wrap(LatticePolytope(dim, std::move(pts)));
    return LP_OK;
  });
}

lp_status lp_polytope_from_json(const char* text, lp_polytope** out) {
  if (!text || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = wrap(parse_polytope(text));
    return LP_OK;
  });
}

lp_status lp_polytope_to_json(const lp_polytope* p, char** out) {
  if (!p || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(polytope_to_json(p->value).dump());
    return LP_OK;
  });
}

lp_status lp_polytope_dim(const lp_polytope* p, size_t* out) {
  if (!p || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  *out = p->value.dim();
  return LP_OK;
}

lp_status lp_polytope_num_vertices(const lp_polytope* p, size_t* out) {
  if (!p || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  *out = p->value.num_vertices();
  return LP_OK;
}

lp_status lp_polytope_vertices(const lp_polytope* p, int64_t* out, size_t capacity) {
  if (!p || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  const size_t d = p->value.dim();
  if (capacity < d * p->value.num_vertices()) return fail(LP_ERR_INVALID_ARGUMENT, "buffer too small");
  size_t k = 0;
  for (const auto& v : p->value.vertices())
    for (size_t j = 0; j < d; ++j) out[k++] = v[j];
  return LP_OK;
}

void lp_polytope_free(lp_polytope* p) { delete p; }

lp_status lp_delta_vector(const lp_polytope* p, int64_t* out, size_t capacity, size_t* len) {
  if (!p || !len) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto delta = delta_from_counts(p->value);
    *len = delta.entries.size();
    if (!out || capacity < delta.entries.size()) return fail(LP_ERR_INVALID_ARGUMENT, "buffer too small");
    for (size_t i = 0; i < delta.entries.size(); ++i) out[i] = delta.entries[i];
    return LP_OK;
  });
}

lp_status lp_invariants_json(const lp_polytope* p, char** out) {
  if (!p || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(invariants_json(p->value).dump());
    return LP_OK;
  });
}

lp_status lp_generate(const char* family, const int64_t* params, size_t nparams, size_t pyramids, lp_polytope** out) {
  if (!family || !out || (!params && nparams > 0)) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto id = canonical_family_id(family);
    if (!id) throw InvalidArgument(std::string("unknown family: ") + family);
    CatalogEntry e{*id, std::vector<Int>(params, params + nparams), pyramids};
    const auto kind = family_kind(*id);
    const auto names = parameter_names(*id);
    if (e.params.size() != names.size())
      throw InvalidArgument(*id + " takes " + std::to_string(names.size()) + " parameters, got " +
                            std::to_string(e.params.size()));
    try {
      if (kind == FamilyKind::Simplex) simplex_dimension(*id, e.params);
      if (kind == FamilyKind::NonSpanning && e.params[0] < 2) throw InvalidArgument("k must be at least 2");
    } catch (const InvalidArgument& err) {
      throw Infeasible(err.what());
    }
    LatticePolytope p = make_entry(e);
    p.set_name(e.to_string());
    *out = wrap(std::move(p));
    return LP_OK;
  });
}

lp_status lp_feasible(const int64_t* exponents, size_t n, int64_t d, int as_printed, int* out) {
  if (!out || (!exponents && n > 0)) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::vector<Int> e(exponents, exponents + n);
    *out = feasible_delta(static_cast<int>(n) + 1, e, d, as_printed != 0) ? 1 : 0;
    return LP_OK;
  });
}

lp_status lp_classify_json(const lp_polytope* p, size_t budget, char** out) {
  if (!p || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto r = classify(p->value, budget ? budget : kDefaultSearchBudget);
    *out = copy_string(classification_to_json(r).dump());
    return r.in_scope ? LP_OK : fail(LP_ERR_OUT_OF_SCOPE, "volume " + std::to_string(r.volume) + " exceeds 4");
  });
}

lp_status lp_equivalent_json(const lp_polytope* a, const lp_polytope* b, size_t budget, char** out) {
  if (!a || !b || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto r = are_equivalent(a->value, b->value, budget ? budget : kDefaultSearchBudget);
    Json j{{"status", to_string(r.status)}, {"reason", r.reason}, {"nodes", r.nodes}};
    if (r.witness) {
      Json w = map_to_json(r.witness->map);
      w["correspondence"] = r.witness->correspondence;
      j["witness"] = std::move(w);
    }
    *out = copy_string(j.dump());
    return LP_OK;
  });
}

lp_status lp_apply_json(const char* witness_json, const lp_polytope* p, lp_polytope** out) {
  if (!witness_json || !p || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Json j;
    try {
      j = Json::parse(witness_json);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("witness: ") + e.what());
    }
    const auto steps = witness_from_json(j);
    *out = wrap(apply_witness(steps, p->value));
    return LP_OK;
  });
}

lp_status lp_verify_json(const char* suite, const char* options_json, int verbose, char** out) {
  if (!suite || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    SuiteOptions opts;
    if (options_json && *options_json) {
      Json o;
      try {
        o = Json::parse(options_json);
      } catch (const Json::exception& e) {
        throw ParseError(std::string("options: ") + e.what());
      }
      if (!o.is_object()) throw ParseError("options must be an object");
      opts.dmax = o.value("dmax", opts.dmax);
      opts.kmax = o.value("kmax", opts.kmax);
      opts.seed = o.value("seed", opts.seed);
      opts.budget = o.value("budget", opts.budget);
      opts.workers = o.value("workers", opts.workers);
      opts.samples = o.value("samples", opts.samples);
    }
    const auto r = run_suite(suite, opts);
    Json j = r.to_json();
    j["text"] = r.to_text(verbose != 0);
    *out = copy_string(j.dump());
    return LP_OK;
  });
}

lp_status lp_enumerate_json(size_t d, int64_t vmax, size_t workers, char** out) {
  if (!out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    SimplexSweepStats stats;
    const auto classes = enumerate_simplices(d, vmax, &stats, workers);
    Json list = Json::array();
    for (const auto& c : classes) {
      const auto r = classify(c.simplex);
      list.push_back({{"key", c.key},
                      {"volume", c.volume},
                      {"delta", delta_to_json(c.delta)},
                      {"exponents", c.delta.exponents()},
                      {"family", entry_to_json(r.entry)},
                      {"polytope", polytope_to_json(c.simplex)}});
    }
    Json j{{"d", d},
           {"vmax", vmax},
           {"candidates", stats.candidates},
           {"expected_candidates", stats.expected_candidates},
           {"pyramids", stats.pyramids},
           {"classes", std::move(list)}};
    *out = copy_string(j.dump());
    return LP_OK;
  });
}

}  // extern "C"
