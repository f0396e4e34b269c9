#pragma once

// Batch verifications behind each subcommand of the xconn tool, and the
// fixed acceptance suite.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xconn/gf.hpp"
#include "xconn/report.hpp"

namespace xconn {

struct Options {
  unsigned p = 2;
  std::size_t n = 2;
  std::optional<Mat> theta;
  bool classify = false;
  bool census = false;
  bool reg = false;
  bool cxn = false;
};

// Parses "r1c1,r1c2;r2c1,r2c2" and checks it is n x n over GF(p).
Mat parse_theta(std::string const& text, unsigned p, std::size_t n);

Report run_lattice(Options const& opt);
Report run_semigroup(Options const& opt);
Report run_cones(Options const& opt);
Report run_dual(Options const& opt);
Report run_crossconn(Options const& opt);
Report run_variant(Options const& opt);

struct SuiteCheck {
  int criterion = 0;
  std::string name;
  unsigned p = 0;
  std::size_t n = 0;
  std::function<Check()> run;
};

struct Criterion {
  int id = 0;
  std::string title;
};

// Criteria 1-7; determinism (8) is a property of running these.
std::vector<Criterion> const& acceptance_criteria();
std::vector<SuiteCheck> acceptance_checks();

// Runs the suite checks, optionally only those at the given p and n.  Check
// names are "c<criterion>.<name>/p<p>n<n>".
Report run_acceptance(std::optional<unsigned> p = std::nullopt,
                      std::optional<std::size_t> n = std::nullopt,
                      std::optional<int> criterion = std::nullopt);

}  // namespace xconn
