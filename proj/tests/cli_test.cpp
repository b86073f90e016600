#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracle.hpp"
#include "softdm/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = softdm::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SOFTDM_DATA_DIR) + "/" + name; }

struct TempFile {
  explicit TempFile(const std::string& contents, const char* name) {
    path = (fs::temp_directory_path() / (std::string("softdm_cli_test_") + name)).string();
    std::ofstream(path, std::ios::binary) << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
  std::string path;
};

}  // namespace

TEST_CASE("neutrosophic decision names P3") {
  auto r = run({"decide", "--input", data("table4.csv"), "--method", "neutrosophic",
                "--criterion", "combined"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("winners: P3\n") != std::string::npos);
  CHECK(r.out.find("exceeds i(P5) = 0.1") != std::string::npos);
  CHECK(r.out.find("criterion: combined") != std::string::npos);
}

TEST_CASE("grey method on a binary table equals the binary scores") {
  auto grey = run({"decide", "--input", data("table2.csv"), "--method", "grey", "--format", "json"});
  auto binary = run({"decide", "--input", data("table2.csv"), "--method", "binary", "--format", "json"});
  REQUIRE(grey.code == 0);
  REQUIRE(binary.code == 0);
  auto g = nlohmann::json::parse(grey.out);
  auto b = nlohmann::json::parse(binary.out);
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(g["scores"][k]["score"].get<double>() == b["scores"][k]["score"].get<double>());
  }
  CHECK(g["winners"] == b["winners"]);
}

TEST_CASE("grade cells are a mismatch for the neutrosophic method") {
  auto r = run({"decide", "--input", data("table3.csv"), "--method", "neutrosophic"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  CHECK(r.err.find("error") != std::string::npos);
  CHECK(r.err.find("table3.csv:2") != std::string::npos);
  CHECK(r.err.find("(P1, e4)") != std::string::npos);
  CHECK(r.err.find("grade") != std::string::npos);
}

TEST_CASE("json report mirrors the text report") {
  auto r = run({"decide", "--input", data("table4.csv"), "--method", "neutrosophic", "--format",
                "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    keys.push_back(it.key());
  }
  // nlohmann::json sorts keys; the emitted document keeps report order.
  CHECK(r.out.find("\"method\"") < r.out.find("\"scores\""));
  CHECK(r.out.find("\"scores\"") < r.out.find("\"winners\""));
  CHECK(doc["winners"] == nlohmann::json::array({"P3"}));
  CHECK(doc["scores"][2]["score"]["t"].get<double>() == doctest::Approx(0.775));
  CHECK(doc["risk"][0]["comparisons"][0]["relation"] == "higher");
  CHECK(doc["flags"].size() == 1);
}

TEST_CASE("output file and determinism") {
  TempFile target("", "report.txt");
  auto first = run({"decide", "--input", data("table3.csv"), "--method", "grey", "--output",
                    target.path});
  CHECK(first.code == 0);
  CHECK(first.out.empty());
  std::ifstream in(target.path, std::ios::binary);
  std::stringstream written;
  written << in.rdbuf();
  auto second = run({"decide", "--input", data("table3.csv"), "--method", "grey"});
  CHECK(written.str() == second.out);
  CHECK(second.out.find("P3: 3.34") != std::string::npos);
}

TEST_CASE("custom scale file") {
  auto r = run({"decide", "--input", data("table3.csv"), "--method", "grey", "--scale",
                data("alternative_scale.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.find("P1: 1.745") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"decide", "--method", "binary"}).code == 1);
  CHECK(run({"decide", "--input", data("table2.csv")}).code == 1);
  CHECK(run({"decide", "--input", data("table2.csv"), "--method", "fuzzy"}).code == 1);
  CHECK(run({"decide", "--input", data("table2.csv"), "--method", "binary", "--scale",
             data("default_scale.txt")})
            .code == 1);
  CHECK(run({"decide", "--input", data("table3.csv"), "--method", "grey", "--criterion",
             "optimistic"})
            .code == 1);
  CHECK(run({"decide", "--input", data("table2.csv"), "--method", "binary", "--epsilon", "0"})
            .code == 1);
  CHECK(run({"decide", "--input", data("table2.csv"), "--method", "binary", "--format", "xml"})
            .code == 1);
  auto r = run({"bogus"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error") != std::string::npos);
  CHECK(run({"decide", "--help"}).code == 0);
}

TEST_CASE("input errors exit 2 with a location") {
  SUBCASE("malformed token") {
    TempFile bad(",e1,e2\nP1,1,(0.6;0.3)\n", "bad.csv");
    auto r = run({"decide", "--input", bad.path, "--method", "neutrosophic"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("error: " + bad.path + ":2:6:") != std::string::npos);
  }
  SUBCASE("missing file") {
    auto r = run({"decide", "--input", data("nope.csv"), "--method", "binary"});
    CHECK(r.code == 2);
    CHECK(r.err.find("nope.csv") != std::string::npos);
  }
  SUBCASE("invalid scale") {
    TempFile scale("A=[0.9;1]\nB=[0.85;0.95]\n", "scale.txt");
    auto r = run({"decide", "--input", data("table3.csv"), "--method", "grey", "--scale",
                  scale.path});
    CHECK(r.code == 2);
    CHECK(r.err.find("overlap") != std::string::npos);
  }
  SUBCASE("grade missing from the scale") {
    TempFile scale("A=[0.9;1]\nB=[0.8;0.89]\n", "short_scale.txt");
    auto r = run({"decide", "--input", data("table3.csv"), "--method", "grey", "--scale",
                  scale.path});
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown grade 'C' in cell (P1, e4)") != std::string::npos);
    CHECK(r.err.find("table3.csv:2") != std::string::npos);
  }
}

TEST_CASE("binary method rejects grey tables with exit 3") {
  auto r = run({"decide", "--input", data("table3.csv"), "--method", "binary"});
  CHECK(r.code == 3);
  CHECK(r.err.find("(P1, e4)") != std::string::npos);
}
