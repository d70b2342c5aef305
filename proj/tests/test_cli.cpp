#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = zl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> data_rows(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& l : lines(text)) {
    if (!l.empty() && l[0] != '#') out.push_back(l);
  }
  out.erase(out.begin());  // header
  return out;
}

std::string value_of(const std::string& row) { return row.substr(row.find(',') + 1); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("stieltjes") {
    const Outcome r = run({"stieltjes", "--n-max", "8", "--prec", "192"});
    REQUIRE(r.code == 0);
    const auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0].rfind("0,0.5772156649015328606065120900824024310421593359399235988", 0) == 0);

    const Outcome single = run({"stieltjes", "--n-max", "0"});
    CHECK(single.code == 0);
    CHECK(data_rows(single.out).size() == 1);
  }

  TEST_CASE("argument errors") {
    const Outcome bad_prec = run({"stieltjes", "--prec", "0"});
    CHECK(bad_prec.code == 1);
    CHECK(!bad_prec.err.empty());
    CHECK(run({"stieltjes", "--guard", "lots"}).code == 1);
    CHECK(run({"stieltjes", "--format", "xml"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"eta", "--method", "limit", "--n-max", "0"}).code == 1);
    CHECK(run({"stieltjes", "--table", "/nonexistent/table.json"}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("precision-infeasible exit code") {
    CHECK(run({"stieltjes", "--n-max", "30", "--guard", "2"}).code == 2);
  }

  TEST_CASE("eta") {
    const Outcome gamma = run({"stieltjes", "--n-max", "5"});
    const Outcome rec = run({"eta", "--n-max", "5", "--method", "recurrence"});
    const Outcome expl = run({"eta", "--n-max", "5", "--method", "explicit"});
    const Outcome series = run({"eta", "--n-max", "5", "--method", "series"});
    REQUIRE(rec.code == 0);
    REQUIRE(expl.code == 0);
    REQUIRE(series.code == 0);
    const auto g_rows = data_rows(gamma.out);
    const auto r_rows = data_rows(rec.out);
    CHECK(value_of(r_rows[0]) == "-" + value_of(g_rows[0]));
    // Values are printed at target precision, so agreement shows up digit for digit.
    CHECK(data_rows(expl.out) == r_rows);
    CHECK(data_rows(series.out) == r_rows);
  }

  TEST_CASE("eta limit definition") {
    const Outcome r = run({"eta", "--method", "limit", "--n-max", "0", "--x-max", "1000000", "--prec", "64"});
    REQUIRE(r.code == 0);
    const double v = std::stod(value_of(data_rows(r.out)[0]));
    CHECK(std::abs(v + 0.5772156649015329) < 1e-2);
  }

  TEST_CASE("gamma-invert round trip through a file") {
    const auto dir = std::filesystem::temp_directory_path() / "zetalaurent_cli_test";
    std::filesystem::create_directories(dir);
    const std::string eta_path = (dir / "eta.json").string();
    REQUIRE(run({"eta", "--n-max", "12", "--format", "json", "--guard", "96", "--out", eta_path}).code == 0);
    const Outcome inv = run({"gamma-invert", "--n-max", "12", "--eta-table", eta_path});
    REQUIRE(inv.code == 0);
    const auto direct = data_rows(run({"stieltjes", "--n-max", "12"}).out);
    const auto back = data_rows(inv.out);
    REQUIRE(back.size() == direct.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
      const double a = std::stod(value_of(back[i]));
      const double b = std::stod(value_of(direct[i]));
      CHECK(a == doctest::Approx(b).epsilon(1e-15));
    }
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("table input and output file") {
    const auto dir = std::filesystem::temp_directory_path() / "zetalaurent_cli_table";
    std::filesystem::create_directories(dir);
    const std::string table = (dir / "g.csv").string();
    const Outcome saved = run({"stieltjes", "--n-max", "6", "--guard", "64", "--out", table});
    REQUIRE(saved.code == 0);
    std::ifstream in(table);
    std::stringstream file;
    file << in.rdbuf();
    CHECK(file.str() == saved.out);

    const Outcome from_table = run({"li", "--n-max", "5", "--table", table});
    const Outcome computed = run({"li", "--n-max", "5"});
    REQUIRE(from_table.code == 0);
    REQUIRE(computed.code == 0);
    const auto a = data_rows(from_table.out);
    const auto b = data_rows(computed.out);
    REQUIRE(a.size() == 5);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(std::stod(value_of(a[i])) == doctest::Approx(std::stod(value_of(b[i]))).epsilon(1e-15));
    }
    CHECK(run({"li", "--n", "8", "--table", table}).code == 1);  // table too short
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("li") {
    const Outcome b = run({"li", "--n-max", "12", "--method", "binomial"});
    const Outcome e = run({"li", "--n-max", "12", "--method", "explicit"});
    REQUIRE(b.code == 0);
    REQUIRE(e.code == 0);
    CHECK(data_rows(b.out) == data_rows(e.out));

    const Outcome t = run({"li", "--n", "3", "--with-trend", "--format", "json"});
    REQUIRE(t.code == 0);
    const auto doc = nlohmann::json::parse(t.out);
    CHECK(doc["estimate_is_asymptotic"] == true);
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["n"] == 3);
    CHECK(doc["rows"][0].contains("trend"));
  }

  TEST_CASE("histogram") {
    const Outcome r = run({"histogram", "--n", "10", "--bins", "40"});
    REQUIRE(r.code == 0);
    const auto rows = data_rows(r.out);
    CHECK(rows.size() == 40);
    long total = 0;
    for (const auto& row : rows) total += std::stol(row.substr(row.rfind(',') + 1));
    CHECK(total == 138);

    const Outcome raw = run({"histogram", "--n", "10", "--raw", "--format", "json"});
    const auto doc = nlohmann::json::parse(raw.out);
    CHECK(doc["n"] == 10);
    CHECK(doc["count"] == 138);
    CHECK(doc["values"].size() == 138);
  }

  TEST_CASE("expand") {
    const Outcome r = run({"expand", "--target", "lambda", "--n", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["target"] == "lambda");
    std::map<std::vector<int>, std::string> terms;
    for (const auto& t : doc["terms"]) terms[t["k"].get<std::vector<int>>()] = t["coeff"];
    const std::map<std::vector<int>, std::string> expected{
        {{1, 0, 0}, "2/1"}, {{2, 0, 0}, "-1/1"}, {{0, 1, 0}, "2/1"}};
    CHECK(terms == expected);

    const Outcome csv = run({"expand", "--target", "gamma", "--n", "3"});
    CHECK(csv.code == 0);
    CHECK(lines(csv.out).size() == 6);
  }

  TEST_CASE("verify") {
    const Outcome r = run({"verify", "--n-max", "20", "--prec", "192"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    CHECK(ls.size() >= 10);
    for (const auto& l : ls) {
      CHECK(l.find("status=pass") != std::string::npos);
      const auto start = l.find("max_discrepancy=") + 16;
      const double d = std::stod(l.substr(start, l.find(' ', start) - start));
      CHECK(d < 1e-38);
    }
    CHECK(run({"verify", "--n-max", "20"}).out == r.out);
  }
}
