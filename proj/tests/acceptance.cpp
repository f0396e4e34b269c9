// One line per acceptance criterion.  Usage: acceptance [--criterion N]

#include <chrono>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "xconn/commands.hpp"
#include "xconn/parallel.hpp"

namespace {

// Every criterion is exact: counts, set equalities and table identities.
// These are the only numeric knobs.
constexpr double kSuiteBudgetSeconds = 300.0;
constexpr std::size_t kDeterminismThreads = 4;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome summarize(xconn::Report const& r) {
  Outcome o;
  std::size_t passed = 0;
  std::string failures;
  for (auto const& c : r.checks) {
    if (c.pass) {
      ++passed;
    } else {
      o.pass = false;
      failures += "; " + c.name + " (" + c.witness + ")";
    }
  }
  o.detail = std::to_string(passed) + "/" + std::to_string(r.checks.size())
             + " checks" + failures;
  if (r.checks.empty()) {
    o.pass = false;
    o.detail = "no checks ran";
  }
  return o;
}

Outcome determinism() {
  auto const start = std::chrono::steady_clock::now();
  xconn::set_thread_count(1);
  std::string const first = xconn::run_acceptance().to_json().dump();
  std::string const second = xconn::run_acceptance().to_json().dump();
  xconn::set_thread_count(kDeterminismThreads);
  std::string const threaded = xconn::run_acceptance().to_json().dump();
  xconn::set_thread_count(1);
  double const seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count() / 3.0;
  Outcome o;
  o.pass = first == second && first == threaded
           && seconds <= kSuiteBudgetSeconds;
  o.detail = std::string(first == second ? "repeat identical" : "repeat differs")
             + ", "
             + (first == threaded ? "threads identical" : "threads differ")
             + ", suite " + std::to_string(seconds) + " s";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "run one criterion (1-8)")
      ->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  std::map<int, std::string> titles;
  for (auto const& c : xconn::acceptance_criteria()) {
    titles[c.id] = c.title;
  }
  titles[8] = "verify-all output is byte-identical across runs and threads";

  bool all = true;
  for (auto const& [id, title] : titles) {
    if (only != 0 && id != only) {
      continue;
    }
    Outcome const o =
        id == 8 ? determinism() : summarize(xconn::run_acceptance(
                                      std::nullopt, std::nullopt, id));
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": "
              << title << " [" << o.detail << "]\n";
  }
  return all ? 0 : 1;
}
