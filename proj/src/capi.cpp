// capi.cpp — extern-C surface over the core library.
#include "genuslab/genuslab.h"

#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "genuslab/analytic.hpp"
#include "genuslab/arith.hpp"
#include "genuslab/errors.hpp"
#include "genuslab/quadforms.hpp"
#include "genuslab/report.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
glab_status wrap(Fn&& fn) {
  try {
    fn();
    return GLAB_OK;
  } catch (const genuslab::ScopeError& e) {
    g_last_error = e.what();
    return GLAB_ERR_SCOPE;
  } catch (const genuslab::CacheError& e) {
    g_last_error = e.what();
    return GLAB_ERR_IO;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return GLAB_ERR_USAGE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GLAB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GLAB_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return GLAB_ERR_INTERNAL;
  }
}

genuslab::ReportOptions to_options(const glab_report_options* opt) {
  genuslab::ReportOptions o;
  if (opt) {
    if (opt->limit > 0) o.limit = static_cast<std::size_t>(opt->limit);
    if (opt->grid_density > 0) o.grid_density = opt->grid_density;
    if (opt->cache_dir) o.cache_dir = opt->cache_dir;
    o.timings = opt->timings != 0;
  }
  return o;
}

}  // namespace

struct glab_class_group {
  genuslab::ClassGroup g;
};

struct glab_report {
  genuslab::Report r;
};

extern "C" {

const char* glab_version(void) { return "1.0.0"; }

const char* glab_status_str(glab_status s) {
  switch (s) {
    case GLAB_OK: return "ok";
    case GLAB_ERR_SCOPE: return "out of scope";
    case GLAB_ERR_USAGE: return "invalid argument";
    case GLAB_ERR_IO: return "cache i/o error";
    case GLAB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* glab_last_error(void) { return g_last_error.c_str(); }

glab_status glab_kronecker(long long d, long long n, int* out) {
  if (!out) {
    g_last_error = "null output pointer";
    return GLAB_ERR_USAGE;
  }
  return wrap([&] { *out = genuslab::kronecker(d, n); });
}

glab_status glab_main_term_constant(long long N, double* out) {
  if (!out) {
    g_last_error = "null output pointer";
    return GLAB_ERR_USAGE;
  }
  return wrap([&] { *out = genuslab::main_term_constant(N); });
}

glab_status glab_class_group_new(long long N, glab_class_group** out) {
  if (!out) {
    g_last_error = "null output pointer";
    return GLAB_ERR_USAGE;
  }
  *out = nullptr;
  return wrap([&] {
    genuslab::require_in_scope(N);
    auto* handle = new glab_class_group{genuslab::class_group(-4 * N)};
    *out = handle;
  });
}

void glab_class_group_free(glab_class_group* g) { delete g; }

long long glab_class_group_discriminant(const glab_class_group* g) { return g ? g->g.D : 0; }
long long glab_class_group_h(const glab_class_group* g) { return g ? g->g.h : 0; }
int glab_class_group_k(const glab_class_group* g) { return g ? g->g.k : 0; }
long long glab_class_group_genus_count(const glab_class_group* g) {
  return g ? g->g.genus_count() : 0;
}
int glab_class_group_is_solvable(const glab_class_group* g) {
  return g && g->g.is_solvable() ? 1 : 0;
}
int glab_class_group_form_count(const glab_class_group* g) {
  return g ? static_cast<int>(g->g.forms.size()) : 0;
}

glab_status glab_class_group_form(const glab_class_group* g, int index, long long* a,
                                  long long* b, long long* c) {
  if (!g || !a || !b || !c) {
    g_last_error = "null pointer";
    return GLAB_ERR_USAGE;
  }
  if (index < 0 || index >= static_cast<int>(g->g.forms.size())) {
    g_last_error = "form index out of range";
    return GLAB_ERR_USAGE;
  }
  const genuslab::QuadForm& f = g->g.forms[static_cast<std::size_t>(index)];
  *a = f.a;
  *b = f.b;
  *c = f.c;
  return GLAB_OK;
}

#define GLAB_REPORT_IMPL(expr)                         \
  if (!out) {                                          \
    g_last_error = "null output pointer";              \
    return GLAB_ERR_USAGE;                             \
  }                                                    \
  *out = nullptr;                                      \
  return wrap([&] { *out = new glab_report{(expr)}; })

glab_status glab_report_classgroup(long long N, glab_report** out) {
  GLAB_REPORT_IMPL(genuslab::classgroup_report(N));
}

glab_status glab_report_characters(long long N, glab_report** out) {
  GLAB_REPORT_IMPL(genuslab::characters_report(N));
}

glab_status glab_report_coeffs(long long N, const glab_report_options* opt, glab_report** out) {
  GLAB_REPORT_IMPL(genuslab::coeffs_report(N, to_options(opt)));
}

glab_status glab_report_verify(long long N, const glab_report_options* opt, glab_report** out) {
  GLAB_REPORT_IMPL(genuslab::verify_report(N, to_options(opt)));
}

glab_status glab_report_asymptotic(long long N, const glab_report_options* opt,
                                   glab_report** out) {
  GLAB_REPORT_IMPL(genuslab::asymptotic_report(N, to_options(opt)));
}

glab_status glab_report_scan(long long nmax, glab_report** out) {
  GLAB_REPORT_IMPL(genuslab::scan_report(nmax));
}

glab_status glab_report_constants(long long N, glab_report** out) {
  GLAB_REPORT_IMPL(genuslab::constants_report_json(N));
}

const char* glab_report_json(const glab_report* r) { return r ? r->r.json.c_str() : ""; }
int glab_report_passed(const glab_report* r) { return r && r->r.passed ? 1 : 0; }
void glab_report_free(glab_report* r) { delete r; }

}  // extern "C"
