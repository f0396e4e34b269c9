#include "helpers.hpp"
#include "xconn/commands.hpp"
#include "xconn/parallel.hpp"

using namespace xconn;

TEST_SUITE("commands") {

TEST_CASE("empty report") {
  Report r;
  r.command = "x";
  Json const j = r.to_json();
  CHECK(j.at("checks") == Json::array());
  CHECK(j.at("elapsed_ms").is_null());
  CHECK(r.ok());
  CHECK(r.to_text().empty());
}

TEST_CASE("text and json formats") {
  Report r;
  r.check("a", true, "fine");
  r.check("b", false, "1,0;0,0");
  r.check("c", true);
  CHECK(r.to_text() == "PASS a: fine\nFAIL b: 1,0;0,0\nPASS c\n");
  CHECK_FALSE(r.ok());
  Json const j = r.to_json();
  CHECK(j.at("checks").size() == 3);
  CHECK(j.at("checks")[1].at("witness") == "1,0;0,0");
  CHECK(j.at("checks")[1].at("pass") == false);
  std::vector<std::string> keys;
  for (auto const& [k, v] : j.items()) {
    keys.push_back(k);
  }
  CHECK(keys == std::vector<std::string>{"command", "params", "checks",
                                         "results", "elapsed_ms"});
}

TEST_CASE("theta parsing") {
  CHECK(parse_theta("1,0;0,0", 2, 2) == Mat::parse("1,0;0,0", 2));
  CHECK_ERROR(parse_theta("1,0;0,0", 2, 3), shape_error);
  CHECK_ERROR(parse_theta("1,0;0,2", 2, 2), parse_error);
}

TEST_CASE("lattice lists every subspace") {
  Options opt;
  opt.n = 3;
  Report const r = run_lattice(opt);
  CHECK(r.ok());
  CHECK(r.results.at("count") == 16);
  CHECK(r.results.at("subspaces").size() == 16);
}

TEST_CASE("variant reports the regular part") {
  Options opt;
  opt.theta = Mat::parse("1,0;0,0", 2);
  opt.reg = true;
  Report const r = run_variant(opt);
  CHECK(r.ok());
  CHECK(r.results.at("reg_size") == 5);
  opt.reg = false;
  Report const all = run_variant(opt);
  // TR and TB are not regular for singular nonzero theta.
  for (auto const& c : all.checks) {
    CHECK_MESSAGE(c.pass == (c.name != "carriers_regular"), c.name);
  }
  CHECK(all.results.at("excess_count") == 1);
}

TEST_CASE("subcommands pass at small sizes") {
  Options opt;
  CHECK(run_semigroup(opt).ok());
  CHECK(run_cones(opt).ok());
  CHECK(run_dual(opt).ok());
  opt.theta = Mat::parse("0,1;1,0", 2);
  opt.classify = true;
  CHECK(run_crossconn(opt).ok());
}

TEST_CASE("cone census is reported") {
  Options opt;
  opt.census = true;
  Report const r = run_cones(opt);
  CHECK(r.results.at("census_cones") == 22);
  CHECK(r.results.at("census_principal") == 10);
  CHECK_FALSE(r.ok());
  opt.n = 3;
  Report const r3 = run_cones(opt);
  CHECK(r3.results.at("census_cones") == 344);
  CHECK(r3.ok());
}

TEST_CASE("input errors") {
  Options opt;
  opt.theta = Mat::parse("1,1;1,1", 2);
  CHECK_ERROR(run_crossconn(opt), not_invertible);
  Options none;
  CHECK_ERROR(run_crossconn(none), invalid_argument);
  CHECK_ERROR(run_variant(none), invalid_argument);
  Options big;
  big.p = 5;
  big.n = 3;
  CHECK_ERROR(run_semigroup(big), too_large);
}

TEST_CASE("acceptance output does not depend on the thread count") {
  set_thread_count(1);
  std::string const one = run_acceptance(2u, 2u).to_json().dump();
  set_thread_count(4);
  std::string const four = run_acceptance(2u, 2u).to_json().dump();
  set_thread_count(1);
  CHECK(one == four);
}

}
