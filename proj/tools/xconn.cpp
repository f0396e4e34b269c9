// xconn: batch verifications over GF(p)^n with stable exit codes.
//   0  every check passed
//   1  some check failed (the report says which)
//   2  invalid input

#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "xconn/commands.hpp"
#include "xconn/parallel.hpp"

namespace {

constexpr int kInvalidInput = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-connections of Sing(V) over finite prime fields"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  xconn::Options opt;
  std::string theta;
  bool json = false;
  bool timing = false;
  std::size_t threads = 0;
  app.add_option("--p", opt.p, "prime modulus (2..7)");
  app.add_option("--n", opt.n, "dimension (1..5)");
  app.add_option("--theta", theta, "matrix \"r1c1,r1c2;r2c1,r2c2\"");
  app.add_flag("--json", json, "emit a JSON report");
  app.add_flag("--classify", opt.classify, "crossconn: classify all functors");
  app.add_flag("--census", opt.census, "cones/variant: exhaustive cone census");
  app.add_flag("--reg", opt.reg, "variant: regular part");
  app.add_flag("--cxn", opt.cxn, "variant: cross-connection checks");
  app.add_option("--threads", threads, "worker threads, 0 = all cores");
  app.add_flag("--timing", timing, "report elapsed time (not reproducible)");

  auto* lattice = app.add_subcommand("lattice", "subspace lattice of GF(p)^n");
  auto* semigroup = app.add_subcommand("semigroup", "T_V, Sing(V), Green");
  auto* cones = app.add_subcommand("cones", "normal cones of S(V)");
  auto* dual = app.add_subcommand("dual", "normal dual and annihilators");
  auto* crossconn = app.add_subcommand("crossconn", "cross-connections");
  auto* variant = app.add_subcommand("variant", "the variant T_V^theta");
  auto* verify = app.add_subcommand("verify-all", "the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kInvalidInput;
  }

  xconn::Report report;
  auto const start = std::chrono::steady_clock::now();
  try {
    xconn::check_modulus(opt.p);
    if (opt.n == 0 || opt.n > xconn::kMaxAmbient) {
      throw xconn::Error(xconn::ErrorCode::invalid_argument,
                         "n must be between 1 and "
                             + std::to_string(xconn::kMaxAmbient));
    }
    if (!theta.empty()) {
      opt.theta = xconn::parse_theta(theta, opt.p, opt.n);
    }
    xconn::set_thread_count(threads);
    if (*lattice) {
      report = xconn::run_lattice(opt);
    } else if (*semigroup) {
      report = xconn::run_semigroup(opt);
    } else if (*cones) {
      report = xconn::run_cones(opt);
    } else if (*dual) {
      report = xconn::run_dual(opt);
    } else if (*crossconn) {
      report = xconn::run_crossconn(opt);
    } else if (*variant) {
      report = xconn::run_variant(opt);
    } else if (*verify) {
      std::optional<unsigned> p;
      std::optional<std::size_t> n;
      if (app.count("--p") > 0) {
        p = opt.p;
      }
      if (app.count("--n") > 0) {
        n = opt.n;
      }
      report = xconn::run_acceptance(p, n);
    }
  } catch (xconn::Error const& e) {
    std::cerr << "xconn: " << e.what() << '\n';
    return kInvalidInput;
  }
  if (timing) {
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  }
  if (json) {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    std::cout << report.to_text();
  }
  return report.ok() ? 0 : 1;
}
