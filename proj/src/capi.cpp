#include "epz/epz.h"

#include <cstring>
#include <fstream>
#include <new>
#include <string>
#include <vector>

#include "epz/counting.hpp"
#include "epz/epstein.hpp"
#include "epz/error.hpp"
#include "epz/omega.hpp"
#include "epz/quadform.hpp"
#include "epz/special.hpp"
#include "epz/sweep.hpp"

struct epz_form {
  epz::QuadraticForm form;
};

struct epz_value_list {
  epz::ValueList list;
};

namespace {

thread_local std::string lastError;
thread_local std::vector<epz::ReferenceCheck> lastChecks;

epz_status set_error(epz_status status, const char* what) {
  lastError = what;
  return status;
}

template <class Body>
epz_status guard(Body&& body) noexcept {
  try {
    body();
    return EPZ_OK;
  } catch (const epz::Error& e) {
    return set_error(static_cast<epz_status>(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(EPZ_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return set_error(EPZ_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(EPZ_ERR_INTERNAL, "unknown failure");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr)
    epz::fail(epz::ErrorKind::InvalidArgument,
              std::string("null pointer argument: ") + name);
}

epz::EnumerationOptions options(const epz_options* opts) {
  epz::EnumerationOptions o;
  if (opts != nullptr) {
    o.workers = opts->workers;
    if (opts->max_points > 0.0) o.maxPoints = opts->max_points;
  }
  return o;
}

epz::Complex to_cpp(epz_complex z) { return {z.re, z.im}; }
epz_complex to_c(epz::Complex z) { return {z.real(), z.imag()}; }

epz_potter_evaluation to_c(const epz::PotterEvaluation& e) {
  return {to_c(e.s), e.Z, to_c(e.F1), e.F2bound, e.certified ? 1 : 0};
}

epz_bound_report to_c(const epz::BoundReport& r) {
  epz_bound_report out{};
  out.a = r.form.a();
  out.b = r.form.b();
  out.c = r.form.c();
  out.disc = r.form.discriminant();
  out.zero_index = r.zero.index;
  out.gamma = r.zero.gamma;
  out.beta0 = r.zero.beta0;
  out.Z = r.Z;
  out.z0 = to_c(r.z0);
  out.gamma_ratio = r.gammaRatio;
  out.prefactor = r.prefactor;
  out.F1_abs = r.F1abs;
  out.F2_bound = r.F2bound;
  out.margin = r.margin;
  out.K0_lower = r.K0lower;
  out.valid = r.valid ? 1 : 0;
  return out;
}

epz::BoundReport to_cpp(const epz_bound_report& r) {
  epz::BoundReport out;
  out.form = epz::QuadraticForm(r.a, r.b, r.c);
  out.zero = {r.zero_index, r.gamma, r.beta0};
  out.Z = r.Z;
  out.z0 = to_cpp(r.z0);
  out.gammaRatio = r.gamma_ratio;
  out.prefactor = r.prefactor;
  out.F1abs = r.F1_abs;
  out.F2bound = r.F2_bound;
  out.margin = r.margin;
  out.K0lower = r.K0_lower;
  out.valid = r.valid != 0;
  return out;
}

} // namespace

extern "C" {

const char* epz_last_error(void) { return lastError.c_str(); }

const char* epz_version(void) { return "1.0.0"; }

epz_status epz_form_create(double a, double b, double c, epz_form** out) {
  return guard([&] {
    require(out, "out");
    *out = new epz_form{epz::QuadraticForm(a, b, c)};
  });
}

epz_status epz_form_parse(const char* text, epz_form** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new epz_form{epz::parse_form(text)};
  });
}

void epz_form_destroy(epz_form* form) { delete form; }

epz_status epz_form_coefficients(const epz_form* form, double* a, double* b,
                                 double* c, double* disc) {
  return guard([&] {
    require(form, "form");
    if (a) *a = form->form.a();
    if (b) *b = form->form.b();
    if (c) *c = form->form.c();
    if (disc) *disc = form->form.discriminant();
  });
}

epz_status epz_form_evaluate(const epz_form* form, int64_t m, int64_t n,
                             double* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = form->form(m, n);
  });
}

epz_status epz_form_kappa(const epz_form* form, double* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = epz::kappa(form->form);
  });
}

epz_status epz_form_lambda1(const epz_form* form, double* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = epz::lambda1(form->form);
  });
}

epz_status epz_form_is_q0(const epz_form* form, int* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = epz::is_reference_form_q0(form->form) ? 1 : 0;
  });
}

epz_status epz_form_get_constants(const epz_form* form,
                                  epz_form_constants* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    const epz::FormConstants k = epz::form_constants(form->form);
    *out = {k.kappa, k.lambda1, k.mainAll, k.mainPrim};
  });
}

epz_status epz_enumerate(const epz_form* form, double X,
                         const epz_options* opts, epz_value_list** out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = new epz_value_list{epz::enumerate(form->form, X, options(opts))};
  });
}

void epz_value_list_destroy(epz_value_list* list) { delete list; }

size_t epz_value_list_size(const epz_value_list* list) {
  return list == nullptr ? 0 : list->list.size();
}

epz_status epz_value_list_entry(const epz_value_list* list, size_t i,
                                double* value, int64_t* total_mult,
                                int64_t* prim_mult) {
  return guard([&] {
    require(list, "list");
    if (i >= list->list.size())
      epz::fail(epz::ErrorKind::InvalidArgument, "entry index out of range");
    const epz::ValueEntry& e = list->list.entries()[i];
    if (value) *value = e.value;
    if (total_mult) *total_mult = e.totalMult;
    if (prim_mult) *prim_mult = e.primMult;
  });
}

epz_status epz_count(const epz_form* form, double x, const epz_options* opts,
                     epz_count_result* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    const epz::CountResult r = epz::count(form->form, x, options(opts));
    *out = {r.x, r.A, r.B, r.P, r.R};
  });
}

epz_status epz_count_primitive_moebius(const epz_form* form, double x,
                                       const epz_options* opts, int64_t* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = epz::count_primitive_moebius(form->form, x, options(opts));
  });
}

epz_status epz_mean_abs_r(const epz_form* form, double Y,
                          const epz_options* opts, double* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = epz::mean_abs_R(form->form, Y, options(opts));
  });
}

epz_status epz_sweep(const epz_form* form, double y_max, int rows, int log_step,
                     int timestamp, const char* counts_path,
                     const char* mean_path, const epz_options* opts) {
  return guard([&] {
    require(form, "form");
    require(counts_path, "counts_path");
    require(mean_path, "mean_path");
    epz::SweepConfig config;
    config.yMax = y_max;
    config.rows = rows;
    config.logStep = log_step != 0;
    config.timestamp = timestamp != 0;
    // Validate before touching the file system.
    epz::sweep_points(config);
    std::ofstream counts(counts_path, std::ios::binary);
    std::ofstream mean(mean_path, std::ios::binary);
    if (!counts || !mean)
      epz::fail(epz::ErrorKind::InvalidArgument, "cannot open sweep output");
    epz::write_sweep(form->form, config, counts, mean, options(opts));
    if (!counts.flush() || !mean.flush())
      epz::fail(epz::ErrorKind::Resource, "failed writing sweep output");
  });
}

epz_status epz_zeta_real(double s, double* out) {
  return guard([&] {
    require(out, "out");
    *out = epz::zeta_real(s);
  });
}

epz_status epz_dirichlet_l(double s, double* out) {
  return guard([&] {
    require(out, "out");
    *out = epz::dirichlet_L(s);
  });
}

epz_status epz_log_gamma(epz_complex z, epz_complex* out) {
  return guard([&] {
    require(out, "out");
    *out = to_c(epz::log_gamma(to_cpp(z)));
  });
}

size_t epz_zeta_zero_count(void) { return epz::zeta_zero_count(); }

epz_status epz_zeta_zero(int index, double* gamma, double* beta0) {
  return guard([&] {
    const epz::ZetaZero z = epz::zeta_zero(index);
    if (gamma) *gamma = z.gamma;
    if (beta0) *beta0 = z.beta0;
  });
}

epz_status epz_potter_evaluate(const epz_form* form, double Z, epz_complex s,
                               const epz_options* opts,
                               epz_potter_evaluation* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = to_c(epz::potter_evaluate(form->form, Z, to_cpp(s), options(opts)));
  });
}

epz_status epz_potter_reflected(const epz_form* form, double Z, epz_complex s,
                                const epz_options* opts,
                                epz_potter_evaluation* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = to_c(epz::reflected_evaluate(form->form, Z, to_cpp(s), options(opts)));
  });
}

epz_status epz_zeta_q_series(const epz_form* form, epz_complex s, double tol,
                             const epz_options* opts, epz_complex* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = to_c(epz::zeta_q_series(form->form, to_cpp(s), tol, options(opts)));
  });
}

epz_status epz_functional_equation(const epz_form* form, epz_complex s,
                                   epz_complex zq_at_1_minus_s,
                                   epz_complex* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = to_c(epz::functional_equation(form->form, to_cpp(s),
                                         to_cpp(zq_at_1_minus_s)));
  });
}

epz_status epz_weight_constant(double rel_tol, epz_weight_report* out) {
  return guard([&] {
    require(out, "out");
    const epz::WeightConstantReport w =
        epz::weight_constant_check(rel_tol > 0.0 ? rel_tol : 1e-10);
    *out = {w.integralPolynomial, w.integralLorentz, w.integralLorentzAt0,
            w.constant};
  });
}

epz_status epz_k0_lower_bound(const epz_form* form, int zero_index, double Z,
                              const epz_options* opts, epz_bound_report* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = to_c(epz::k0_lower_bound(form->form, zero_index, Z, options(opts)));
  });
}

epz_status epz_k0_search(const epz_form* form, double Z,
                         const epz_options* opts, epz_bound_report* out) {
  return guard([&] {
    require(form, "form");
    require(out, "out");
    *out = to_c(epz::k0_search(form->form, Z, options(opts)));
  });
}

epz_status epz_bound_report_format(const epz_bound_report* report,
                                   epz_report_format format, char* buf,
                                   size_t cap, size_t* needed) {
  return guard([&] {
    require(needed, "needed");
    std::string text;
    switch (format) {
      case EPZ_REPORT_KEY_VALUE:
        require(report, "report");
        text = epz::to_key_value(to_cpp(*report));
        break;
      case EPZ_REPORT_CSV_HEADER:
        text = epz::bound_csv_header();
        break;
      case EPZ_REPORT_CSV_ROW:
        require(report, "report");
        text = epz::to_csv_row(to_cpp(*report));
        break;
      default:
        epz::fail(epz::ErrorKind::InvalidArgument, "unknown report format");
    }
    *needed = text.size();
    if (buf != nullptr && cap > text.size())
      std::memcpy(buf, text.c_str(), text.size() + 1);
  });
}

epz_status epz_finite_y_check(const epz_form* form, double Y,
                              double mean_integral, int* holds) {
  return guard([&] {
    require(form, "form");
    require(holds, "holds");
    *holds = epz::finite_y_check(form->form, Y, mean_integral) ? 1 : 0;
  });
}

epz_status epz_verify_reference(const epz_options* opts,
                                epz_reference_check* checks, size_t cap,
                                size_t* count, int* all_pass) {
  return guard([&] {
    require(count, "count");
    lastChecks = epz::verify_reference_example(options(opts));
    *count = lastChecks.size();
    bool ok = true;
    for (std::size_t i = 0; i < lastChecks.size(); ++i) {
      const epz::ReferenceCheck& c = lastChecks[i];
      ok = ok && c.pass;
      if (checks != nullptr && i < cap)
        checks[i] = {c.name.c_str(), c.computed, c.expected,
                     c.relation.c_str(), c.tolerance, c.pass ? 1 : 0};
    }
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

} // extern "C"
