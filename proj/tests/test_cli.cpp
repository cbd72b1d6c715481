#include <stdexcept>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "horizon/cli.hpp"
#include "horizon/correlations.hpp"
#include "horizon/sweep.hpp"
#include "json.hpp"

using namespace horizon;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream stream(text);
  for (std::string line; std::getline(stream, line);) result.push_back(line);
  return result;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("horizon_test_" + name);
}

}  // namespace

TEST_CASE("number formatting is locale independent and marks non-finite values") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(format_number(NAN) == "nan");
  CHECK(format_number(0.110317800076325796, 12) == "0.110317800076");
}

TEST_CASE("sweep axis values and validation") {
  const std::vector<double> lin = SweepAxis{Parameter::xi, 0.0, 3.0, 4}.values();
  CHECK(lin == std::vector<double>{0.0, 1.0, 2.0, 3.0});
  const std::vector<double> geo = SweepAxis{Parameter::mass, 0.01, 1.0, 3, Spacing::log}.values();
  CHECK(geo[1] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(geo.back() == 1.0);

  SweepSpec spec;
  spec.axes = {SweepAxis{Parameter::xi, 0.0, 1.0, 1}};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.axes = {SweepAxis{Parameter::mass, 0.0, 1.0, 3}};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.axes = {SweepAxis{Parameter::mass, 1.0, 0.5, 3}};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.axes = {SweepAxis{Parameter::xi, 0.0, 1.0, 3}, SweepAxis{Parameter::xi, 0.0, 1.0, 3}};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.axes = {SweepAxis{Parameter::xi, 0.0, 1.0, 3}};
  spec.xi_infinite = true;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("sweep order and worker independence") {
  SweepSpec spec;
  spec.axes = {SweepAxis{Parameter::xi, 0.5, 1.5, 3}, SweepAxis{Parameter::mass, 0.1, 0.3, 3}};
  const std::vector<SweepRow> rows = run_sweep(spec, 1);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0].point.xi == 0.5);
  CHECK(rows[0].point.mass == 0.1);
  CHECK(rows[1].point.xi == 0.5);
  CHECK(rows[1].point.mass == doctest::Approx(0.2));
  CHECK(rows[3].point.xi == 1.0);

  std::ostringstream serial, parallel;
  write_sweep_csv(serial, rows, "#");
  write_sweep_csv(parallel, run_sweep(spec, 7), "#");
  CHECK(serial.str() == parallel.str());
}

TEST_CASE("measure") {
  SUBCASE("l = n = 0 passes the Kruskal values through") {
    const Result r = run({"measure", "--xi", "1", "--l", "0", "--n", "0"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["tau_out"].get<double>() == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(j["i_out"].get<double>() == doctest::Approx(2.0 * entropy_f(std::cosh(2.0))).epsilon(1e-12));
    CHECK(j["entangled_out"].get<bool>());
    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"s_kruskal", "i_kruskal", "tau_out", "i_out",
                                           "tau_in_out_lambda", "tau_in_out_nu", "tau_1v3",
                                           "tau_residual", "tau_tri_upper", "entangled_out"});
  }
  SUBCASE("xi = 0 carries no correlations") {
    const Result r = run({"measure", "--xi", "0", "--mass", "0.3", "--lambda", "1", "--nu", "2"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"s_kruskal", "i_kruskal", "tau_out", "tau_residual", "tau_tri_upper"}) {
      CHECK(j[key].get<double>() == 0.0);
    }
    CHECK(std::abs(j["i_out"].get<double>()) < 1e-12);
    CHECK_FALSE(j["entangled_out"].get<bool>());
  }
  SUBCASE("below the critical mass nothing survives at infinite squeezing") {
    const Result r = run({"measure", "--xi", "inf", "--mass", "0.05", "--lambda", "1", "--nu", "2"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["tau_out"].get<double>() == 0.0);
    CHECK(j["s_kruskal"].get<std::string>() == "inf");
    CHECK(j["tau_tri_upper"].get<std::string>() == "nan");
  }
  SUBCASE("physical and direct parameters give identical output") {
    const double l = squeezing_parameter({0.2, 1.0});
    const double n = squeezing_parameter({0.2, 2.0});
    const Result physical =
        run({"measure", "--xi", "1.3", "--mass", "0.2", "--lambda", "1", "--nu", "2"});
    const Result direct = run({"measure", "--xi", "1.3", "--l", format_number(l, 17), "--n",
                               format_number(n, 17)});
    CHECK(physical.out == direct.out);
  }
  SUBCASE("csv output") {
    const Result r = run({"measure", "--xi", "1", "--l", "0.5", "--n", "0.5", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto text = lines(r.out);
    REQUIRE(text.size() == 3);
    CHECK(text[0].rfind("# horizon", 0) == 0);
    CHECK(text[1].rfind("s_kruskal,", 0) == 0);
  }
  SUBCASE("usage errors") {
    CHECK(run({"measure", "--xi", "1", "--l", "0.5", "--n", "0.5", "--mass", "1"}).code == 2);
    CHECK(run({"measure", "--xi", "1"}).code == 2);
    CHECK(run({"measure", "--xi", "1", "--mass", "1", "--lambda", "1"}).code == 2);
    CHECK(run({"measure", "--xi", "-1", "--l", "0", "--n", "0"}).code == 2);
    CHECK(run({"measure", "--xi", "1", "--mass", "-1", "--lambda", "1", "--nu", "1"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
  }
  SUBCASE("numerical domain error") {
    const Result r = run({"measure", "--xi", "inf", "--l", "0.881373587019543", "--n",
                          "0.881373587019543"});
    CHECK(r.code == 3);
  }
}

TEST_CASE("sweep command") {
  const Result r = run({"sweep", "--axis", "xi:0:2:3", "--axis", "mass:0.1:0.5:3", "--lambda",
                        "1", "--nu", "2"});
  REQUIRE(r.code == 0);
  const auto text = lines(r.out);
  REQUIRE(text.size() == 11);
  CHECK(text[0].rfind("# horizon", 0) == 0);
  CHECK(text[1] ==
        "xi,mass,lambda,nu,l,n,s_kruskal,i_kruskal,tau_kruskal,tau_out,i_out,tau_1v3,"
        "tau_residual,tau_tri_upper,entangled_out");
  CHECK(run({"sweep", "--axis", "xi:0:2:3", "--axis", "mass:0.1:0.5:3", "--lambda", "1", "--nu",
             "2"})
            .out == r.out);

  const Result infinite =
      run({"sweep", "--axis", "mass:0.05:0.5:4", "--xi", "inf", "--lambda", "1", "--nu", "2"});
  REQUIRE(infinite.code == 0);
  CHECK(lines(infinite.out)[2].rfind("inf,", 0) == 0);

  CHECK(run({"sweep", "--axis", "xi:2:0:3"}).code == 2);
  CHECK(run({"sweep", "--axis", "spin:0:1:3"}).code == 2);
  CHECK(run({"sweep", "--axis", "xi:0:1"}).code == 2);
  CHECK(run({"sweep", "--axis", "xi:0:1:3", "--out", "/nonexistent-dir/x.csv"}).code == 4);
}

TEST_CASE("config file precedence: flags over file over defaults") {
  const auto path = temp_path("config.txt");
  {
    std::ofstream file(path);
    file << "# figure recipe\naxis = xi:0:1:2\nlambda = 3\nnu=4\n";
  }
  const Result from_file = run({"sweep", "--config", path.string()});
  REQUIRE(from_file.code == 0);
  const auto rows = lines(from_file.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[2].find(",3,4,") != std::string::npos);

  const Result overridden = run({"sweep", "--config", path.string(), "--nu", "5"});
  REQUIRE(overridden.code == 0);
  CHECK(lines(overridden.out)[2].find(",3,5,") != std::string::npos);

  CHECK(run({"sweep", "--config", (path.string() + ".missing")}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("critical-mass command") {
  CHECK(run({"critical-mass", "--lambda", "1", "--nu", "1"}).out ==
        "{\"critical_mass\":0.110317800076}\n");
  CHECK(run({"critical-mass", "--lambda", "1", "--nu", "2"}).out ==
        "{\"critical_mass\":0.0765872406325}\n");
  const auto base = nlohmann::json::parse(run({"critical-mass", "--lambda", "1", "--nu", "2"}).out);
  const auto scaled = nlohmann::json::parse(run({"critical-mass", "--lambda", "2", "--nu", "4"}).out);
  CHECK(scaled["critical_mass"].get<double>() ==
        doctest::Approx(base["critical_mass"].get<double>() / 2.0).epsilon(1e-11));
  CHECK(run({"critical-mass", "--lambda", "0", "--nu", "1"}).code == 2);
}

TEST_CASE("figure, oracle and state commands") {
  CHECK(run({"figure", "fig9"}).code == 2);

  const Result inset = run({"figure", "fig1a-inset"});
  REQUIRE(inset.code == 0);
  CHECK(lines(inset.out).size() == 2 + 20 * 20 * 20);

  const auto path = temp_path("fig1b.csv");
  REQUIRE(run({"figure", "fig1b", "--out", path.string()}).code == 0);
  std::ifstream file(path);
  std::stringstream contents;
  contents << file.rdbuf();
  CHECK(lines(contents.str()).size() == 2 + 60 * 60);
  std::filesystem::remove(path);

  const Result oracle = run({"oracle", "--r", "0.5", "--truncations", "10,20"});
  REQUIRE(oracle.code == 0);
  CHECK(lines(oracle.out).size() == 4);

  const Result product = run({"state", "--xi", "1", "--l", "0.5", "--n", "0.8"});
  const Result blocks = run({"state", "--xi", "1", "--l", "0.5", "--n", "0.8", "--route", "blocks"});
  REQUIRE(product.code == 0);
  const auto rows = lines(product.out);
  REQUIRE(rows.size() == 8);
  CHECK(std::count(rows[0].begin(), rows[0].end(), ',') == 7);
  CHECK(lines(blocks.out).size() == 8);
}
