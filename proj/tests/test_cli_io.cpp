#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "depolar/table_io.hpp"
#include "depolar/verify.hpp"

using namespace depolar;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += c;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("rational and float strings") {
  CHECK(rational_string(ExactScalar(3, 4)) == "3/4");
  CHECK(rational_string(ExactScalar(2)) == "2/1");
  CHECK(rational_string(ExactScalar(0)) == "0/1");
  CHECK(float_string(0.5) == "0.5");
}

TEST_CASE("CSV and JSON carry the same rationals") {
  const auto table = channel_output_spectrum(YoungFrame({4, 0}, 2), ExactScalar(1, 2), 2);
  std::ostringstream csv;
  write_csv(csv, table);
  const auto rows = csv_rows(csv.str());
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"frame", "weight_numerator", "weight_denominator", "weight_float"});
  CHECK(csv.str().find("\"4,0\"") != std::string::npos);
  const auto json = to_json(table);
  REQUIRE(json["entries"].size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& e = json["entries"][i];
    CHECK(e["frame"] == rows[i + 1][0]);
    CHECK(e["weight"] == rows[i + 1][1] + "/" + rows[i + 1][2]);
  }
}

TEST_CASE("probability parsing") {
  CHECK(cli::parse_probability("1/4") == ExactScalar(1, 4));
  CHECK(cli::parse_probability("0.25") == ExactScalar(1, 4));
  CHECK(cli::parse_probability("1") == 1);
  CHECK(cli::parse_probability(".5") == ExactScalar(1, 2));
  CHECK_THROWS(cli::parse_probability("1.5"));
  CHECK_THROWS(cli::parse_probability("abc"));
  CHECK_THROWS(cli::parse_probability("1/0"));
  CHECK_THROWS(cli::parse_probability("-0.1"));
}

TEST_CASE("cli dims") {
  auto r = run({"dims", "2,1", "--d", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "frame=2,1 dimF=2 dimU=2 trace=4\n");
  r = run({"--d", "2", "dims", "3"});
  CHECK(r.out.find("dimF=1 dimU=4") != std::string::npos);
  r = run({"dims", "2,1,1", "--d", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("row budget") != std::string::npos);
  r = run({"dims", "2,x"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position 2") != std::string::npos);
  r = run({"dims", "2,1", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["trace"] == 4);
}

TEST_CASE("cli lr") {
  auto r = run({"lr", "2", "1", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("c=1 oracle=1 agree=yes", 0) == 0);
  r = run({"lr", "2,2", "2", "1,1"});
  CHECK(r.out.rfind("c=0", 0) == 0);
  r = run({"lr", "3,1", "2", "1,1", "--witness", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coefficient"] == 1);
  CHECK(j["agree"] == true);
  CHECK(j["witnesses"].size() == 1);
  r = run({"lr", "3", "2", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("size mismatch") != std::string::npos);
}

TEST_CASE("cli char and horn") {
  CHECK(run({"char", "2,1", "3"}).out == "chi=-1\n");
  CHECK(run({"char", "2,1", "1,1,1"}).out == "chi=2\n");
  CHECK(run({"char", "2,1", "2"}).code == 2);
  CHECK(run({"horn", "2,2", "2", "1,1"}).out == "basic=false\nfeasible=false\n");
  CHECK(run({"horn", "2,1", "1", "1,1", "--feasible"}).out == "feasible=true\n");
  CHECK(run({"horn", "2", "1", "1", "--basic"}).out == "basic=true\n");
  CHECK(run({"horn", "2", "1", "1", "--basic", "--feasible"}).code == 2);
}

TEST_CASE("cli spectrum") {
  auto r = run({"spectrum", "4,0", "--q", "0"});
  CHECK(r.code == 0);
  auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1][0] == "4,0");
  CHECK(rows[1][1] == "1");
  CHECK(rows[2][1] == "0");

  r = run({"spectrum", "4,0", "--k", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  std::vector<std::string> support;
  for (const auto& e : j["entries"])
    if (e["weight"] != "0/1") support.push_back(e["frame"]);
  CHECK(support == std::vector<std::string>{"4,0", "3,1"});

  r = run({"spectrum", "6,0", "--q", "1/3"});
  ExactScalar total = 0;
  for (std::size_t i = 1; i < csv_rows(r.out).size(); ++i) {
    const auto row = csv_rows(r.out)[i];
    total += ExactScalar(row[1] + "/" + row[2]);
  }
  CHECK(total == 1);

  CHECK(run({"spectrum", "4,0"}).code == 2);
  CHECK(run({"spectrum", "4,0", "--q", "1/2", "--k", "1"}).code == 2);
  r = run({"spectrum", "13", "--q", "1/2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--cap-n 13") != std::string::npos);
  CHECK(run({"spectrum", "13", "--q", "1/2", "--cap-n", "13"}).code == 0);
  CHECK(run({"spectrum", "4", "--q", "2"}).code == 2);
  CHECK(run({"spectrum", "2,1", "--q", "1/2", "--d", "9"}).code == 2);
}

TEST_CASE("cli sweep") {
  auto r = run({"sweep", "4", "--grid", "0", "--exact"});
  auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"frame", "q=0/1"});
  CHECK(rows[1][1] == "1/1");
  CHECK(rows[2][1] == "0/1");

  r = run({"sweep", "4", "--grid", "1", "--exact"});
  rows = csv_rows(r.out);
  CHECK(rows[1][1] == "5/16");
  CHECK(rows[2][1] == "9/16");
  CHECK(rows[3][1] == "1/8");

  r = run({"sweep", "6", "--grid", "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9", "--exact"});
  rows = csv_rows(r.out);
  REQUIRE(rows.size() == 5);
  int previous = 7;
  for (std::size_t col = 1; col < rows[0].size(); ++col) {
    ExactScalar best = -1;
    int argmax = -1;
    for (std::size_t row = 1; row < rows.size(); ++row) {
      const ExactScalar w(rows[row][col]);
      if (w > best) {
        best = w;
        argmax = YoungFrame::parse(rows[row][0])[0];
      }
    }
    CHECK(argmax <= previous);
    previous = argmax;
  }
  CHECK(run({"sweep", "4", "--grid", ""}).code == 2);
}

TEST_CASE("cli xy") {
  const auto r = run({"xy", "4,0", "3,1", "--l", "2", "--k", "2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["X"] == 1);
  CHECK(run({"xy", "4,0", "3,1", "--l", "1", "--k", "2"}).code == 2);
}

TEST_CASE("cli verify") {
  auto r = run({"verify", "thm1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["config"]["cap_n"] == 6);
  r = run({"verify", "oracle"});
  CHECK(r.code == 0);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"verify", "all", "--cap-n", "11"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli output file and determinism") {
  const std::string path = "cli_io_test_output.json";
  CHECK(run({"verify", "lemma", "--out", path}).code == 0);
  std::ifstream first(path);
  std::stringstream a;
  a << first.rdbuf();
  CHECK(run({"verify", "lemma", "--out", path}).code == 0);
  std::ifstream second(path);
  std::stringstream b;
  b << second.rdbuf();
  CHECK(!a.str().empty());
  CHECK(a.str() == b.str());
  std::remove(path.c_str());
  CHECK(run({"dims", "2", "--out", "/nonexistent/dir/file"}).code == 2);
}
