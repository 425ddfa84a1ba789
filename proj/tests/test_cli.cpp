#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qpr/cli.hpp"
#include "qpr/corpus.hpp"
#include "qpr/io.hpp"

using namespace qpr;
using namespace qpr::cli;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() / ("qpr_cli_" + name)) {}
  ~TempFile() { std::filesystem::remove(path); }
  void write(const std::string& text) const { std::ofstream(path, std::ios::binary) << text; }
  std::string read() const {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

TempFile write_rep(const std::string& name, const WeakProjectiveRep& rep) {
  TempFile f(name);
  f.write(serialize_rep_file({name, rep, {}}));
  return f;
}

}  // namespace

TEST_CASE("generate then validate and classify") {
  for (int c : {1, 2, 3}) {
    CAPTURE(c);
    TempFile f("gen" + std::to_string(c) + ".json");
    std::ostringstream out, err;
    CHECK(cmd_generate({.structure_case = c, .out = f.path}, out, err) == kOk);
    CHECK(out.str().empty());
    CHECK(cmd_validate(f.path, 1e-9, out, err) == kOk);
    CHECK(out.str().find("valid\n") != std::string::npos);
    std::ostringstream report;
    CHECK(cmd_classify(f.path, {}, report, err) == kOk);
    const std::string tag = "\"Case" + std::to_string(c) + "\"";
    CHECK(report.str().find(tag) != std::string::npos);
  }
}

TEST_CASE("generate options") {
  std::ostringstream out, err;
  CHECK(cmd_generate({.structure_case = 2, .n = 5}, out, err) == kOk);
  CHECK(parse_rep_file(out.str()).rep.dim() == 5);
  CHECK(cmd_generate({.structure_case = 2, .n = 2}, out, err) == kUsage);
  CHECK(cmd_generate({.structure_case = 4}, out, err) == kUsage);
  CHECK(cmd_generate({.structure_case = 3, .sigma = {Quaternion::j()}}, out, err) == kUsage);
}

TEST_CASE("validate reports the failing piece") {
  std::ostringstream out, err;
  SUBCASE("not weak projective") {
    std::vector<QMatrix> m;
    for (int a = 0; a < 3; ++a) {
      const double c = std::cos(0.3 * a), s = std::sin(0.3 * a);
      m.push_back(QMatrix{{c, -s}, {s, c}});
    }
    const auto f = write_rep("rot.json", WeakProjectiveRep(cyclic_group(3), 2, m));
    CHECK(cmd_validate(f.path, 1e-9, out, err) == kValidationFailure);
    CHECK(err.str().find("(b, a) = (1, 2)") != std::string::npos);
  }
  SUBCASE("non-unitary") {
    auto m = make_real_sign_rep().matrices();
    m[3] = scale_left(Quaternion(1.5), m[3]);
    const auto f = write_rep("nonunit.json", WeakProjectiveRep(cyclic_product_group(2, 2), 2, m));
    CHECK(cmd_validate(f.path, 1e-9, out, err) == kValidationFailure);
    CHECK(err.str().find("element (1,1)") != std::string::npos);
  }
  SUBCASE("non-associative table") {
    const std::vector<std::vector<Element>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    const auto f = write_rep(
        "loop.json", make_trivial_rep(FiniteGroup({}, loop)));
    CHECK(cmd_validate(f.path, 1e-9, out, err) == kValidationFailure);
    CHECK(err.str().find("failing triple") != std::string::npos);
  }
  SUBCASE("malformed") {
    TempFile f("bad.json");
    f.write("{\"version\": 1,,}");
    CHECK(cmd_validate(f.path, 1e-9, out, err) == kValidationFailure);
    CHECK(err.str().find(":1:") != std::string::npos);
  }
}

TEST_CASE("classify exit code for unclassified input") {
  for (const auto& e : corpus()) {
    if (e.expected_case != StructureCase::Unclassified) continue;
    const auto f = write_rep(e.name + ".json", e.rep);
    std::ostringstream out, err;
    CHECK(cmd_classify(f.path, {}, out, err) == kUnclassified);
    CHECK(out.str().find("\"reason\"") != std::string::npos);
  }
}

TEST_CASE("classify writes to --out") {
  const auto in = write_rep("cs.json", make_clock_shift(3));
  TempFile report("cs_report.json");
  std::ostringstream out, err;
  CHECK(cmd_classify(in.path, {.out = report.path}, out, err) == kOk);
  CHECK(out.str().empty());
  CHECK(report.read().find("\"Case2\"") != std::string::npos);
}

TEST_CASE("corollary scan") {
  std::ostringstream a, b, err;
  CHECK(cmd_corollary_scan({.seed = 9, .trials = 120}, a, err) == kOk);
  CHECK(cmd_corollary_scan({.seed = 9, .trials = 120}, b, err) == kOk);
  CHECK(a.str() == b.str());
  std::ostringstream c;
  CHECK(cmd_corollary_scan({.seed = 10, .trials = 120}, c, err) == kOk);
  CHECK(a.str() != c.str());

  std::ostringstream empty;
  CHECK(cmd_corollary_scan({.seed = 1, .trials = 0}, empty, err) == kOk);
  CHECK(empty.str().find("\"total\": 0") != std::string::npos);
  CHECK(empty.str().find("\"violations\": []") != std::string::npos);

  std::ostringstream bad;
  CHECK(cmd_corollary_scan({.trials = 5, .max_order = 0}, bad, err) == kUsage);
}

TEST_CASE("quaternion arguments") {
  CHECK(parse_quaternion("j") == Quaternion::j());
  CHECK(parse_quaternion("-k") == -Quaternion::k());
  CHECK(parse_quaternion("1") == Quaternion(1.0));
  CHECK(parse_quaternion("0.5,0.5,0.5,0.5") == Quaternion{0.5, 0.5, 0.5, 0.5});
  CHECK_FALSE(parse_quaternion("q"));
  CHECK_FALSE(parse_quaternion("1,2,3"));
  CHECK_FALSE(parse_quaternion("1,2,3,4,5"));
}
