// Command line front end: eval, scan, zeros, verify.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zetaphase/errors.hpp"
#include "zetaphase/kappa.hpp"
#include "zetaphase/phase.hpp"
#include "zetaphase/theta.hpp"
#include "zetaphase/verify.hpp"
#include "zetaphase/zeros.hpp"
#include "zetaphase/zeta.hpp"
#include "zetaphase/zeta_prime.hpp"

namespace {

using nlohmann::ordered_json;
using namespace zetaphase;

struct Options {
  int precision = 12;
  double t_max = 100.0;
  int threads = 1;
  std::string format;  // resolved per subcommand when empty
  std::string output;
};

std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

// Rounds through the textual representation so JSON output carries the
// requested precision.
double jround(double v, int precision) {
  return std::strtod(fmt(v, precision).c_str(), nullptr);
}

std::ostream& open_sink(const Options& opt, std::ofstream& file) {
  if (opt.output.empty()) return std::cout;
  file.open(opt.output);
  if (!file) throw std::runtime_error("cannot open output file: " + opt.output);
  return file;
}

void check_t(double t, const Options& opt) {
  if (std::abs(t) > opt.t_max)
    throw box_error("t outside configured --t-max range");
}

// Zero ordinates up to height plus one, for the counting integrals.
std::vector<double> ordinates_to(KappaAccumulator& acc, double height) {
  std::vector<double> out;
  const double a_theta = find_a_theta().value;
  if (height <= a_theta) return out;
  const long count = count_zeros_to(acc, height, nullptr);
  for (long n = 1; n <= count + 1; ++n) {
    try {
      out.push_back(find_xi(acc, n).ordinate);
    } catch (const box_error&) {
      break;
    }
    if (out.back() > height + 1.0) break;
  }
  return out;
}

struct PhaseCells {
  bool have = false;
  PhaseReport rep{};
};

PhaseCells phase_cells(KappaAccumulator& acc, double t,
                       const std::vector<double>& ords, double a_theta) {
  PhaseCells cells;
  if (t <= a_theta) return cells;
  try {
    cells.rep = phase_report(acc, t, ords);
    cells.have = true;
  } catch (const near_zero_error&) {
    // leave the counting cells empty on top of an ordinate
  }
  return cells;
}

int run_eval(const Options& opt, double t) {
  check_t(t, opt);
  const std::string format = opt.format.empty() ? "json" : opt.format;

  KappaAccumulator acc;
  const ThetaTriple th = theta_series(t);
  const ZTriple z = z_triple(t);
  const KappaSample ks = acc.kappa_of(t);
  const double kd1 = kappa_d1(t);
  const double e = e_of(acc, t);
  const double a_theta = find_a_theta().value;
  const auto ords = ordinates_to(acc, t);
  const PhaseCells pc = phase_cells(acc, t, ords, a_theta);

  std::ofstream file;
  std::ostream& os = open_sink(opt, file);
  const int p = opt.precision;

  if (format == "json") {
    ordered_json j;
    j["t"] = jround(t, p);
    j["theta"] = jround(th.theta, p);
    j["theta_d1"] = jround(th.d1, p);
    j["theta_d2"] = jround(th.d2, p);
    j["z"] = jround(z.z, p);
    j["z_d1"] = jround(z.d1, p);
    j["z_d2"] = jround(z.d2, p);
    j["kappa"] = jround(ks.kappa, p);
    j["kappa_d1"] = jround(kd1, p);
    j["kappa_route"] =
        ks.route == KappaRoute::integrated ? "integrated" : "phase_formula";
    j["circle_residual"] = jround(ks.circle_residual, p);
    j["e"] = jround(e, p);
    if (pc.have) {
      j["s"] = jround(pc.rep.s, p);
      j["n"] = pc.rep.n;
      j["n00"] = pc.rep.n00;
      j["rh"] = pc.rep.rh;
      j["band"] = jround(pc.rep.band, p);
    } else {
      j["s"] = nullptr;
      j["n"] = nullptr;
      j["n00"] = nullptr;
      j["rh"] = nullptr;
      j["band"] = nullptr;
    }
    os << j.dump(2) << "\n";
  } else {
    os << "t,theta,theta_d1,theta_d2,z,z_d1,z_d2,kappa,kappa_d1,kappa_route,"
          "circle_residual,e,s,n,n00,rh,band\n";
    os << fmt(t, p) << ',' << fmt(th.theta, p) << ',' << fmt(th.d1, p) << ','
       << fmt(th.d2, p) << ',' << fmt(z.z, p) << ',' << fmt(z.d1, p) << ','
       << fmt(z.d2, p) << ',' << fmt(ks.kappa, p) << ',' << fmt(kd1, p) << ','
       << (ks.route == KappaRoute::integrated ? "integrated" : "phase_formula")
       << ',' << fmt(ks.circle_residual, p) << ',' << fmt(e, p) << ',';
    if (pc.have) {
      os << fmt(pc.rep.s, p) << ',' << pc.rep.n << ',' << pc.rep.n00 << ','
         << pc.rep.rh << ',' << fmt(pc.rep.band, p) << "\n";
    } else {
      os << ",,,,\n";
    }
  }
  return 0;
}

struct ScanRow {
  double t;
  double theta;
  double z;
  double kappa;
  double kappa1;
  double e;
  bool have_s = false;
  double s = 0.0;
};

int run_scan(const Options& opt, double from, double to, double step) {
  if (!(step > 0.0)) throw box_error("--step must be positive");
  if (to < from) throw box_error("--to must not be below --from");
  check_t(from, opt);
  check_t(to, opt);
  const long rows = static_cast<long>(std::floor((to - from) / step + 1e-9)) + 1;
  if (rows > 2000001) throw box_error("scan grid too fine; raise --step");

  KappaAccumulator acc;
  // Lay the anchors and locate every needed zero serially, then freeze the
  // accumulator so worker threads only read.
  acc.kappa_of(from);
  acc.kappa_of(to);
  const double a_theta = find_a_theta().value;
  const auto ords = ordinates_to(acc, to);
  acc.freeze(true);

  std::vector<ScanRow> out(rows);
  const int workers =
      std::max(1, std::min<int>(opt.threads, static_cast<int>(rows)));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);

  auto body = [&](int w) {
    try {
      for (long i = w; i < rows; i += workers) {
        const double t = from + step * static_cast<double>(i);
        ScanRow& r = out[i];
        r.t = t;
        r.theta = theta_series(t).theta;
        r.z = z_triple(t).z;
        const KappaSample ks = acc.kappa_of(t);
        r.kappa = ks.kappa;
        r.kappa1 = kappa_d1(t);
        r.e = e_of(acc, t);
        if (t > a_theta) {
          try {
            r.s = s_of(t, ords);
            r.have_s = true;
          } catch (const near_zero_error&) {
          }
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
  for (auto& th : pool) th.join();
  acc.freeze(false);
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  std::ofstream file;
  std::ostream& os = open_sink(opt, file);
  const int p = opt.precision;
  const std::string format = opt.format.empty() ? "csv" : opt.format;

  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const ScanRow& r : out) {
      ordered_json j;
      j["t"] = jround(r.t, p);
      j["theta"] = jround(r.theta, p);
      j["z"] = jround(r.z, p);
      j["kappa"] = jround(r.kappa, p);
      j["kappa1"] = jround(r.kappa1, p);
      j["e"] = jround(r.e, p);
      if (r.have_s)
        j["s"] = jround(r.s, p);
      else
        j["s"] = nullptr;
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << "\n";
  } else {
    os << "t,theta,z,kappa,kappa1,e,s\n";
    for (const ScanRow& r : out) {
      os << fmt(r.t, p) << ',' << fmt(r.theta, p) << ',' << fmt(r.z, p) << ','
         << fmt(r.kappa, p) << ',' << fmt(r.kappa1, p) << ',' << fmt(r.e, p)
         << ',';
      if (r.have_s) os << fmt(r.s, p);
      os << "\n";
    }
  }
  return 0;
}

int run_zeros(const Options& opt, const std::string& kind, long count,
              double height) {
  std::ofstream file;
  std::ostream& os = open_sink(opt, file);
  const int p = opt.precision;
  const std::string format = opt.format.empty() ? "csv" : opt.format;

  if (kind == "xi" || kind == "eta") {
    if (count < 1) throw box_error("--count must be at least 1");
    KappaAccumulator acc;
    if (kind == "xi") {
      std::vector<CriticalZero> zs;
      for (long n = 1; n <= count; ++n) zs.push_back(find_xi(acc, n));
      if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& z : zs) {
          ordered_json j;
          j["index"] = z.index;
          j["ordinate"] = jround(z.ordinate, p);
          j["multiplicity"] = z.multiplicity;
          j["kappa_residual"] = jround(z.kappa_residual, p);
          j["z_residual"] = jround(z.z_residual, p);
          arr.push_back(std::move(j));
        }
        os << arr.dump(2) << "\n";
      } else {
        os << "index,ordinate,multiplicity,kappa_residual,z_residual\n";
        for (const auto& z : zs)
          os << z.index << ',' << fmt(z.ordinate, p) << ',' << z.multiplicity
             << ',' << fmt(z.kappa_residual, p) << ',' << fmt(z.z_residual, p)
             << "\n";
      }
    } else {
      std::vector<EtaPoint> es;
      for (long n = -1; n <= count - 2; ++n) es.push_back(find_eta(acc, n));
      if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& e : es) {
          ordered_json j;
          j["index"] = e.index;
          j["ordinate"] = jround(e.ordinate, p);
          j["half_value"] = jround(e.half_value, p);
          j["zprime_residual"] = jround(e.zprime_residual, p);
          arr.push_back(std::move(j));
        }
        os << arr.dump(2) << "\n";
      } else {
        os << "index,ordinate,half_value,zprime_residual\n";
        for (const auto& e : es)
          os << e.index << ',' << fmt(e.ordinate, p) << ','
             << fmt(e.half_value, p) << ',' << fmt(e.zprime_residual, p)
             << "\n";
      }
    }
    return 0;
  }

  if (kind == "zprime-trivial" || kind == "zprime-complex") {
    std::vector<ZetaPrimeZero> zs;
    if (kind == "zprime-trivial") {
      if (count < 1) throw box_error("--count must be at least 1");
      zs = find_trivial_zeros(static_cast<int>(count));
    } else {
      zs = find_complex_zeros(height);
    }
    if (format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& z : zs) {
        ordered_json j;
        j["index"] = z.index;
        j["kind"] =
            z.kind == ZpZeroKind::trivial_zero ? "trivial" : "complex";
        j["beta"] = jround(z.beta, p);
        j["gamma"] = jround(z.gamma, p);
        j["residual"] = jround(z.residual, p);
        arr.push_back(std::move(j));
      }
      os << arr.dump(2) << "\n";
    } else {
      os << "index,kind,beta,gamma,residual\n";
      for (const auto& z : zs)
        os << z.index << ','
           << (z.kind == ZpZeroKind::trivial_zero ? "trivial" : "complex")
           << ',' << fmt(z.beta, p) << ',' << fmt(z.gamma, p) << ','
           << fmt(z.residual, p) << "\n";
    }
    return 0;
  }

  throw box_error("unknown --kind: " + kind);
}

int run_verify(const Options& opt, const std::string& suite) {
  std::vector<SuiteReport> reps;
  if (suite == "all") {
    reps = run_all();
  } else {
    reps.push_back(run_suite(suite));
  }

  std::ofstream file;
  std::ostream& os = open_sink(opt, file);
  const int p = opt.precision;
  const std::string format = opt.format.empty() ? "json" : opt.format;

  bool pass = true;
  for (const auto& r : reps) pass = pass && r.pass;

  if (format == "json") {
    auto one = [&](const SuiteReport& r) {
      ordered_json j;
      j["suite"] = r.suite;
      j["checks"] = ordered_json::array();
      for (const auto& ck : r.checks) {
        ordered_json c;
        c["name"] = ck.name;
        c["residual"] = jround(ck.residual, p);
        c["tolerance"] = jround(ck.tolerance, p);
        c["pass"] = ck.pass;
        j["checks"].push_back(std::move(c));
      }
      j["pass"] = r.pass;
      return j;
    };
    if (reps.size() == 1) {
      os << one(reps[0]).dump(2) << "\n";
    } else {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reps) arr.push_back(one(r));
      os << arr.dump(2) << "\n";
    }
  } else {
    os << "suite,check,residual,tolerance,pass\n";
    for (const auto& r : reps)
      for (const auto& ck : r.checks)
        os << r.suite << ',' << ck.name << ',' << fmt(ck.residual, p) << ','
           << fmt(ck.tolerance, p) << ',' << (ck.pass ? "true" : "false")
           << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (const char* env = std::getenv("ZETAPHASE_TMAX")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && std::isfinite(v) && v > 0.0) opt.t_max = v;
  }

  CLI::App app{"phase function of the Riemann zeta function on the critical line"};
  app.require_subcommand(1);
  app.add_option("--precision", opt.precision, "significant digits in output")
      ->check(CLI::Range(6, 17));
  app.add_option("--t-max", opt.t_max,
                 "largest |t| accepted (env ZETAPHASE_TMAX, default 100)");
  app.add_option("--threads", opt.threads, "worker threads for scan")
      ->check(CLI::Range(1, 64));
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", opt.output, "write to a file instead of stdout");

  double eval_t = 0.0;
  CLI::App* eval = app.add_subcommand("eval", "full report at a single t");
  eval->add_option("--t", eval_t, "evaluation point")->required();

  double scan_from = 0.0, scan_to = 0.0, scan_step = 0.25;
  CLI::App* scan = app.add_subcommand("scan", "tabulate over a t grid");
  scan->add_option("--from", scan_from, "grid start")->required();
  scan->add_option("--to", scan_to, "grid end")->required();
  scan->add_option("--step", scan_step, "grid spacing");

  std::string zeros_kind = "xi";
  long zeros_count = 10;
  double zeros_height = -1.0;
  CLI::App* zeros = app.add_subcommand("zeros", "locate zero catalogs");
  zeros->add_option("--kind", zeros_kind, "xi, eta, zprime-trivial, zprime-complex")
      ->check(CLI::IsMember({"xi", "eta", "zprime-trivial", "zprime-complex"}));
  zeros->add_option("--count", zeros_count, "how many entries (xi, eta, trivial)");
  zeros->add_option("--height", zeros_height,
                    "search height for zprime-complex (default --t-max)");

  std::string verify_suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "run the check suites");
  verify->add_option("--suite", verify_suite, "suite name or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (opt.t_max > 1000.0 + 1e-9)
      throw box_error("--t-max exceeds the supported range of 1000");
    if (zeros_height < 0.0) zeros_height = std::min(opt.t_max, 500.0);

    if (app.got_subcommand(eval)) return run_eval(opt, eval_t);
    if (app.got_subcommand(scan))
      return run_scan(opt, scan_from, scan_to, scan_step);
    if (app.got_subcommand(zeros))
      return run_zeros(opt, zeros_kind, zeros_count, zeros_height);
    if (app.got_subcommand(verify)) return run_verify(opt, verify_suite);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const domain_violation& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const search_failure& e) {
    std::cerr << "search failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
