#include "xconn/report.hpp"

#include <algorithm>
#include <sstream>

namespace xconn {

void Report::check(std::string name, bool pass, std::string witness) {
  checks.push_back({std::move(name), pass, std::move(witness)});
}

void Report::absorb(Report const& other, std::string const& prefix) {
  for (auto const& c : other.checks) {
    checks.push_back({prefix + c.name, c.pass, c.witness});
  }
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](Check const& c) { return c.pass; });
}

Json Report::to_json() const {
  Json list = Json::array();
  for (auto const& c : checks) {
    list.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  }
  Json out = {{"command", command},
              {"params", params},
              {"checks", list},
              {"results", results}};
  out["elapsed_ms"] = elapsed_ms ? Json(*elapsed_ms) : Json(nullptr);
  return out;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (auto const& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.witness.empty()) {
      out << ": " << c.witness;
    }
    out << '\n';
  }
  if (elapsed_ms) {
    out << "elapsed_ms " << *elapsed_ms << '\n';
  }
  return out.str();
}

}  // namespace xconn
