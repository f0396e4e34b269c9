#pragma once

// Check lists shared by the command-line front end and the acceptance
// binary.  Output is deterministic unless a timing is attached.

#include <optional>
#include <string>
#include <vector>

#include "xconn/io.hpp"

namespace xconn {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // summary on success, counterexample on failure
};

struct Report {
  std::string command;
  Json params = Json::object();
  std::vector<Check> checks;
  Json results = Json::object();
  std::optional<double> elapsed_ms;

  void check(std::string name, bool pass, std::string witness = {});
  // Appends the checks of `other` with their names prefixed.
  void absorb(Report const& other, std::string const& prefix);
  bool ok() const;

  Json to_json() const;
  // One line per check: "PASS name: witness" or "FAIL name: witness".
  std::string to_text() const;
};

}  // namespace xconn
