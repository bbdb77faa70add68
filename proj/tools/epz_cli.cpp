// Command-line front end. Talks to the library only through the C API.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epz/epz.h"

namespace {

constexpr int kExitParse = 2;

struct FormHandle {
  epz_form* ptr = nullptr;
  FormHandle() = default;
  FormHandle(const FormHandle&) = delete;
  FormHandle& operator=(const FormHandle&) = delete;
  ~FormHandle() { epz_form_destroy(ptr); }
};

int report(epz_status status) {
  if (status != EPZ_OK)
    std::fprintf(stderr, "error: %s\n", epz_last_error());
  return static_cast<int>(status);
}

// "re" or "re,im"
bool parse_complex(const std::string& text, epz_complex& out) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    out.re = std::stod(text.substr(0, comma), &used);
    if (used != text.substr(0, comma).size()) return false;
    out.im = 0.0;
    if (comma != std::string::npos) {
      const std::string im = text.substr(comma + 1);
      out.im = std::stod(im, &used);
      if (used != im.size()) return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void print_bound(const epz_bound_report& r, bool csv) {
  size_t needed = 0;
  std::string text;
  if (csv) {
    epz_bound_report_format(&r, EPZ_REPORT_CSV_HEADER, nullptr, 0, &needed);
    text.resize(needed + 1);
    epz_bound_report_format(&r, EPZ_REPORT_CSV_HEADER, text.data(), text.size(), &needed);
    std::printf("%s\n", text.c_str());
  }
  const auto format = csv ? EPZ_REPORT_CSV_ROW : EPZ_REPORT_KEY_VALUE;
  epz_bound_report_format(&r, format, nullptr, 0, &needed);
  text.assign(needed + 1, '\0');
  epz_bound_report_format(&r, format, text.data(), text.size(), &needed);
  std::printf("%s%s", text.c_str(), csv ? "\n" : "");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice points in ellipses, Epstein zeta and explicit Omega bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  epz_options opts{1, 0.0};
  app.add_option("--workers", opts.workers, "enumeration threads (0 = all cores)");
  app.add_option("--max-points", opts.max_points, "enumeration point budget");

  std::string formText;
  double x = 0.0;
  double yMax = 1000.0;
  int rows = 100;
  bool logStep = false;
  bool noTimestamp = false;
  std::string out = "sweep";
  double Z = 1000.0;
  std::string sText = "0.75,0";
  bool reflect = false;
  int zeroIndex = 1;
  bool csv = false;

  auto* count = app.add_subcommand("count", "A(x), B(x), P(x), R(x)");
  count->add_option("--form", formText, "a,b,c")->required();
  count->add_option("--x", x, "threshold")->required();

  auto* sweep = app.add_subcommand("sweep", "CSV tables of counts and mean |R|");
  sweep->add_option("--form", formText, "a,b,c")->required();
  sweep->add_option("--ymax", yMax, "largest threshold");
  sweep->add_option("--rows", rows, "number of rows");
  sweep->add_flag("--log", logStep, "geometric spacing from 1 to ymax");
  sweep->add_option("--out", out,
                    "output prefix; writes <out>_counts.csv and <out>_mean.csv");
  sweep->add_flag("--no-timestamp", noTimestamp, "omit the generated-at line");

  auto* epstein = app.add_subcommand("epstein", "Potter enclosure of zeta_Q(s)");
  epstein->add_option("--form", formText, "a,b,c")->required();
  epstein->add_option("--Z", Z, "Potter cut-off");
  epstein->add_option("--s", sText, "re or re,im");
  epstein->add_flag("--reflect", reflect,
                    "evaluate at 1-s and apply the functional equation");

  auto* kappaCmd = app.add_subcommand("kappa", "form constants");
  kappaCmd->add_option("--form", formText, "a,b,c")->required();

  auto* k0 = app.add_subcommand("k0", "explicit lower bound for K0");
  k0->add_option("--form", formText, "a,b,c")->required();
  k0->add_option("--Z", Z, "Potter cut-off");
  k0->add_option("--zero-index", zeroIndex,
                 "zeta zero to use; 0 searches the table");
  k0->add_flag("--csv", csv, "emit CSV header and row");

  auto* verify = app.add_subcommand("verify-paper",
                                    "rerun the Q0 worked example and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  FormHandle form;
  if (!formText.empty()) {
    if (const epz_status st = epz_form_parse(formText.c_str(), &form.ptr))
      return report(st);
  }

  if (*count) {
    epz_count_result r{};
    if (const epz_status st = epz_count(form.ptr, x, &opts, &r)) return report(st);
    std::printf("x=%.12g A=%lld B=%lld P=%.12g R=%.12g\n", r.x,
                static_cast<long long>(r.A), static_cast<long long>(r.B), r.P, r.R);
    return 0;
  }

  if (*sweep) {
    const std::string countsPath = out + "_counts.csv";
    const std::string meanPath = out + "_mean.csv";
    if (const epz_status st =
            epz_sweep(form.ptr, yMax, rows, logStep ? 1 : 0, noTimestamp ? 0 : 1,
                      countsPath.c_str(), meanPath.c_str(), &opts))
      return report(st);
    std::printf("wrote %s\nwrote %s\n", countsPath.c_str(), meanPath.c_str());
    return 0;
  }

  if (*epstein) {
    epz_complex s{};
    if (!parse_complex(sText, s)) {
      std::fprintf(stderr, "error: cannot parse --s '%s'\n", sText.c_str());
      return kExitParse;
    }
    epz_potter_evaluation e{};
    const epz_status st = reflect ? epz_potter_reflected(form.ptr, Z, s, &opts, &e)
                                  : epz_potter_evaluate(form.ptr, Z, s, &opts, &e);
    if (st != EPZ_OK) return report(st);
    std::printf("s = %.12g%+.12gi\nZ = %.12g\nF1 = %.12g%+.12gi\n|F1| = %.12g\n"
                "F2_bound = %.12g\nradius = %.12g\ncertified = %s\n",
                e.s.re, e.s.im, e.Z, e.F1.re, e.F1.im,
                std::hypot(e.F1.re, e.F1.im), e.F2_bound, e.F2_bound,
                e.certified ? "true" : "false (heuristic: Re s != 3/4)");
    return 0;
  }

  if (*kappaCmd) {
    double a = 0, b = 0, c = 0, d = 0;
    epz_form_coefficients(form.ptr, &a, &b, &c, &d);
    epz_form_constants k{};
    if (const epz_status st = epz_form_get_constants(form.ptr, &k)) return report(st);
    std::printf("a = %.17g\nb = %.17g\nc = %.17g\nD = %.17g\nkappa = %.17g\n"
                "lambda1 = %.17g\nmain_all = %.17g\nmain_prim = %.17g\n",
                a, b, c, d, k.kappa, k.lambda1, k.main_all, k.main_prim);
    return 0;
  }

  if (*k0) {
    epz_bound_report r{};
    const epz_status st = zeroIndex == 0
                              ? epz_k0_search(form.ptr, Z, &opts, &r)
                              : epz_k0_lower_bound(form.ptr, zeroIndex, Z, &opts, &r);
    if (st != EPZ_OK) return report(st);
    print_bound(r, csv);
    return 0;
  }

  if (*verify) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<epz_reference_check> checks(32);
    size_t n = 0;
    int allPass = 0;
    if (const epz_status st =
            epz_verify_reference(&opts, checks.data(), checks.size(), &n, &allPass))
      return report(st);
    for (size_t i = 0; i < n && i < checks.size(); ++i) {
      const epz_reference_check& c = checks[i];
      std::printf("[%s] %-26s computed %.9g  %s %.9g", c.pass ? "PASS" : "FAIL",
                  c.name, c.computed, c.relation, c.expected);
      if (c.tolerance > 0.0) std::printf("  (tol %.1e)", c.tolerance);
      std::printf("\n");
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("%s in %.2f s\n", allPass ? "all checks passed" : "checks FAILED",
                secs);
    return allPass ? 0 : static_cast<int>(EPZ_ERR_VERIFICATION);
  }
  return 0;
}
