// walshnet: command-line front end.
//
// Exit codes: 0 success, 1 a check failed (net verify, verify, sign guarantee),
// 2 usage or configuration error, 3 unreadable or malformed input.

#include "walshnet/counting.hpp"
#include "walshnet/covkernel.hpp"
#include "walshnet/errors.hpp"
#include "walshnet/estimators.hpp"
#include "walshnet/nets.hpp"
#include "walshnet/pointset_io.hpp"
#include "walshnet/scan.hpp"
#include "walshnet/scramble.hpp"
#include "walshnet/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace walshnet;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kInput = 3 };

struct Global {
  std::uint64_t seed = 0;
  int threads = 0;
  std::string format = "csv";
  bool seed_given = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

std::string json_rational(const Rational& v) {
  return nlohmann::json{{"exact", to_string(v)}, {"value", to_double(v)}}.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scrambled-net covariance toolkit: nets, Walsh analysis of the pair pdf, covariance polynomials"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "Master seed for every randomized step")->each([&](const std::string&) {
    g.seed_given = true;
  });
  app.add_option("--threads", g.threads, "OpenMP threads (0 keeps the runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  // net gen | verify
  auto* net = app.add_subcommand("net", "Generate or verify (t,m,s)-nets");
  net->require_subcommand(1);
  int gen_b = 2, gen_m = 2, gen_s = 2, gen_p = 0;
  std::string gen_out;
  auto* gen = net->add_subcommand("gen", "Faure (0,m,s)-net in prime base b >= s");
  gen->add_option("--base", gen_b)->required();
  gen->add_option("--m", gen_m)->required();
  gen->add_option("--s", gen_s)->required();
  gen->add_option("--precision", gen_p, "Digits per coordinate (default m)");
  gen->add_option("--out", gen_out, "Output file (default stdout)");
  int ver_t = 0;
  std::string ver_file;
  auto* ver = net->add_subcommand("verify", "Check every elementary interval of volume b^(t-m)");
  ver->add_option("--t", ver_t)->required();
  ver->add_option("file", ver_file)->required();

  // scramble
  int sc_reps = 1, sc_precision = 0;
  std::string sc_file, sc_prefix;
  auto* scr = app.add_subcommand("scramble", "Owen-scramble a point set");
  scr->add_option("--reps", sc_reps, "Number of independent replications")->check(CLI::PositiveNumber);
  scr->add_option("--precision", sc_precision, "Output digits (default m + 31, capped)");
  scr->add_option("--out-prefix", sc_prefix, "Write PREFIX_<r>.txt per replication instead of stdout");
  scr->add_option("file", sc_file)->required();

  // psi profile | eval
  auto* psi = app.add_subcommand("psi", "Pair counts and the joint pdf of a point set");
  psi->require_subcommand(1);
  std::string ps_file, pe_file, pe_x, pe_y;
  auto* prof = psi->add_subcommand("profile", "N(i) over all ordered pairs, as JSON");
  prof->add_option("file", ps_file)->required();
  auto* peval = psi->add_subcommand("eval", "Joint pdf at (x, y); points given as digit strings");
  peval->add_option("--x", pe_x, "e.g. \"0110 1001\"")->required();
  peval->add_option("--y", pe_y)->required();
  peval->add_option("file", pe_file)->required();

  // covpoly
  int cp_b = 2, cp_m = 1, cp_s = 1;
  std::string cp_a, cp_grid = "0:1:1/100", cp_scale = "none";
  auto* cov = app.add_subcommand("covpoly", "Covariance polynomial under shell decay");
  cov->add_option("--base", cp_b)->required();
  cov->add_option("--m", cp_m)->required();
  cov->add_option("--s", cp_s)->required();
  cov->add_option("--a", cp_a, "Decay parameter p/q (default (b-1)/b)");
  cov->add_option("--x-grid", cp_grid, "lo:hi:step");
  cov->add_option("--scale", cp_scale)->check(CLI::IsMember({"none", "inv-nm1"}));

  // qscan
  int qs_b = 2, qs_m = 1, qs_s = 1;
  std::string qs_grid = "0:1:1/100";
  auto* qsc = app.add_subcommand("qscan", "Incomplete-beta closed form Q_s over an x-grid");
  qsc->add_option("--base", qs_b)->required();
  qsc->add_option("--m", qs_m)->required();
  qsc->add_option("--s", qs_s)->required();
  qsc->add_option("--x-grid", qs_grid, "lo:hi:step");

  // figure-scan
  std::vector<std::string> fs_figures;
  std::string fs_grid = "0:1:1/100", fs_out;
  bool fs_unscaled = false;
  auto* fig = app.add_subcommand("figure-scan", "Parameter sweeps behind the covariance-polynomial figures");
  fig->add_option("--figure", fs_figures, "3a 3b 3c 4 5a 5b 5c, or all")->required();
  fig->add_option("--x-grid", fs_grid, "lo:hi:step");
  fig->add_option("--out", fs_out, "Output file (default stdout)");
  fig->add_flag("--unscaled", fs_unscaled, "Omit the 1/(b^m - 1) factor");

  // simulate
  std::string sim_config, sim_out, sim_trace;
  auto* sim = app.add_subcommand("simulate", "Replicated RQMC experiment against the analytic variance terms");
  sim->add_option("--config", sim_config, "Experiment JSON")->required();
  sim->add_option("--out", sim_out, "Report file (default stdout)");
  sim->add_option("--trace", sim_trace, "CSV of per-replication estimates");

  // verify
  std::vector<std::string> vf_suites;
  std::string vf_fault, vf_what;
  auto* vfy = app.add_subcommand("verify", "Run the exact identity suite");
  vfy->add_option("what", vf_what, "identities (default)")->check(CLI::IsMember({"identities"}));
  vfy->add_option("--suite", vf_suites, "digits, walsh, counting, covkernel");
  vfy->add_option("--inject-fault", vf_fault, "Deliberately break a formula")->check(CLI::IsMember({"psi-sign"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

#ifdef _OPENMP
  if (g.threads > 0) omp_set_num_threads(g.threads);
#endif
  const bool json = g.format == "json";

  try {
    if (*gen) {
      const PointSet points = generate_points(faure_matrices(gen_b, gen_m, gen_s, gen_p), gen_b, gen_m);
      write_output(gen_out, format_point_set(points));
      return kOk;
    }
    if (*ver) {
      const NetReport report = verify_net(load_point_set(ver_file), ver_t);
      std::cout << report.to_json() << "\n";
      return report.passed ? kOk : kCheckFailed;
    }
    if (*scr) {
      const PointSet points = load_point_set(sc_file);
      const int precision = sc_precision > 0 ? sc_precision : default_scramble_precision(points.base(), points.m());
      const auto sets = replicate(points, g.seed, sc_reps, precision);
      for (std::size_t r = 0; r < sets.size(); ++r) {
        if (sc_prefix.empty()) {
          std::cout << "# replication " << r << "\n" << format_point_set(sets[r]);
        } else {
          write_output(sc_prefix + "_" + std::to_string(r) + ".txt", format_point_set(sets[r]));
        }
      }
      return kOk;
    }
    if (*prof) {
      std::cout << profile_bruteforce(load_point_set(ps_file)).to_json() << "\n";
      return kOk;
    }
    if (*peval) {
      const PointSet points = load_point_set(pe_file);
      const PairProfile profile = profile_bruteforce(points);
      const Rational v = joint_pdf(profile, parse_digit_point(points.base(), pe_x), parse_digit_point(points.base(), pe_y));
      std::cout << (json ? json_rational(v) : to_string(v)) << "\n";
      return kOk;
    }
    if (*cov) {
      const Rational a = cp_a.empty() ? Rational(cp_b - 1, cp_b) : parse_rational(cp_a);
      if (json) {
        const CovPolynomial p = cov_polynomial(cp_b, cp_m, cp_s, a);
        nlohmann::json j{{"b", cp_b}, {"m", cp_m}, {"s", cp_s}, {"a", to_string(a)}};
        std::vector<std::string> in_u, in_x;
        for (const auto& c : p.coefficients()) in_u.push_back(to_string(c));
        for (const auto& c : p.in_x().coefficients()) in_x.push_back(to_string(c));
        j["coefficients_bx"] = in_u;
        j["coefficients_x"] = in_x;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << covpoly_csv(cp_b, cp_m, cp_s, a, XGrid::parse(cp_grid), cp_scale == "inv-nm1");
      }
      return kOk;
    }
    if (*qsc) {
      std::cout << qscan_csv(qs_b, qs_m, qs_s, XGrid::parse(qs_grid));
      return kOk;
    }
    if (*fig) {
      std::vector<std::string> names;
      for (const auto& f : fs_figures) {
        if (f == "all") {
          for (const auto& n : figure_names()) names.push_back(n);
        } else {
          names.push_back(f);
        }
      }
      std::string csv;
      bool signs_ok = true;
      for (const auto& name : names) {
        ScanSpec spec = figure_spec(name);
        spec.grid = XGrid::parse(fs_grid);
        spec.scale = !fs_unscaled;
        const auto rows = figure_scan(spec);
        if (sign_guaranteed(spec)) {
          for (const auto& r : rows) {
            if (r.value > 0) {
              std::cerr << "figure " << name << ": positive value " << to_string(r.value) << " at b=" << r.b
                        << " m=" << r.m << " s=" << r.s << " x=" << to_string(r.x) << "\n";
              signs_ok = false;
              break;
            }
          }
        }
        csv += scan_csv(spec, rows);
      }
      write_output(fs_out, csv);
      return signs_ok ? kOk : kCheckFailed;
    }
    if (*sim) {
      ExperimentConfig cfg = ExperimentConfig::from_json(read_file(sim_config));
      if (g.seed_given) cfg.seed = g.seed;
      const ExperimentReport report = run_experiment(cfg);
      write_output(sim_out, report.to_json() + "\n");
      if (!sim_trace.empty()) write_output(sim_trace, report.trace_csv());
      return kOk;
    }
    if (*vfy) {
      VerifyOptions opt = default_verify_options();
      opt.suites = vf_suites;
      if (vf_fault == "psi-sign") opt.psi = [](int b, int s, int r, int c) { return -Psi(b, s, r, c); };
      const VerifyReport report = verify_all(opt);
      std::cout << report.to_json() << "\n";
      for (const auto& suite : report.suites)
        for (const auto& f : suite.failures)
          std::cerr << "FAILED [" << suite.name << "] " << f.identity << (f.detail.empty() ? "" : ": " + f.detail) << "\n";
      return report.passed() ? kOk : kCheckFailed;
    }
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const PrecisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
