#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "sympcausal/cli.hpp"
#include "sympcausal/linalg_core.hpp"
#include "test_support.hpp"

using namespace sympcausal;
using namespace sympcausal::testing;
using Json = nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

struct Result {
  int code;
  std::string out;
  std::string err;
  Json doc() const { return Json::parse(out); }
};

Result invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string document(const Matrix& m) {
  std::ostringstream os;
  os << "{\"n\": " << m.rows() / 2 << ", \"matrix\": [";
  char buf[40];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      os << (j ? ", " : "") << buf;
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

Matrix matrix_of(const Json& doc) {
  const int n = doc["n"].get<int>();
  Matrix m(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) m(i, j) = doc["matrix"][i][j].get<double>();
  return m;
}

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("sympcausal_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("check examples") {
  const auto ell = invoke({"check", "--elliptic"}, document(rotation(kPi / 3)));
  CHECK(ell.code == 0);
  CHECK(ell.doc()["result"]["elliptic"] == true);

  Matrix stretch(2, 2);
  stretch << 2, 0, 0, 0.5;
  const auto off = invoke({"check", "--elliptic"}, document(stretch));
  CHECK(off.code == 0);
  CHECK(off.doc()["result"]["elliptic"] == false);
  CHECK(off.doc()["result"]["reason"] == "off-circle eigenvalue");

  Matrix bad(2, 2);
  bad << 1, 1, 1, 1;
  const auto sym = invoke({"check", "--symplectic"}, document(bad));
  CHECK(sym.code == 0);
  CHECK(sym.doc()["result"]["symplectic"] == false);

  const auto ham = invoke({"check", "--hamiltonian"}, document(standard_j(1).matrix()));
  CHECK(ham.doc()["result"]["hamiltonian"] == true);

  const auto cone = invoke({"check", "--cone"}, document(-standard_j(2).matrix()));
  CHECK(cone.code == 0);
  CHECK(cone.doc()["result"]["cone_status"] == "negative-interior");
  CHECK(cone.doc()["result"]["causal"] == false);

  CHECK(invoke({"check"}, document(standard_j(1).matrix())).code == 2);
  CHECK(invoke({"check", "--cone", "--elliptic"}, document(standard_j(1).matrix())).code == 2);
  CHECK(invoke({"check", "--cone"}, document(stretch)).code == 1);  // not Hamiltonian
}

TEST_CASE("dist prints 17 significant digits") {
  const auto r = invoke({"dist"}, document(rotation(kPi / 2)));
  CHECK(r.code == 0);
  CHECK(r.out.find("\"dist\": 1.5707963267948966") != std::string::npos);
  CHECK(r.doc()["provenance"]["subcommand"] == "dist");
  CHECK(r.doc()["provenance"]["version"].is_string());
  CHECK(r.doc()["tolerances"]["symplectic"].get<double>() == 1e-9);
}

TEST_CASE("scalar invariants") {
  const Matrix w = block_rotation({0.5, 2.0});
  CHECK(invoke({"tau"}, document(w)).doc()["result"]["tau"].get<double>() ==
        doctest::Approx(std::log(0.5 / (kPi - 0.5)) + std::log(2.0 / (kPi - 2.0))));
  CHECK(invoke({"mu"}, document(w)).doc()["result"]["mu"].get<double>() ==
        doctest::Approx(2.5 / (2 * kPi)));
  const Json nu = invoke({"nu"}, document(w)).doc()["result"]["nu"];
  CHECK(nu["re"].get<double>() == doctest::Approx(std::cos(2.5)));
  CHECK(nu["im"].get<double>() == doctest::Approx(std::sin(2.5)));

  const Json spec = invoke({"spectrum"}, document(w)).doc()["result"];
  REQUIRE(spec["clusters"].size() == 4);
  for (const auto& c : spec["clusters"]) {
    CHECK(c["location"] == "unit-circle");
    const bool upper = c["value"]["im"].get<double>() > 0;
    CHECK(c["krein_signature"]["p"] == (upper ? 1 : 0));
  }

  const Json split = invoke({"splitting"}, document(w)).doc();
  CHECK(split["result"]["angles"][0].get<double>() == doctest::Approx(0.5));
  CHECK(split["diagnostics"]["normal_form_residual"].get<double>() < 1e-10);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"tau"}, "{not json").code == 2);
  CHECK(invoke({"tau"}, R"({"n": 0, "matrix": []})").code == 2);
  CHECK(invoke({"tau"}, R"({"n": 1, "matrix": [[1, 0], [0]]})").code == 2);
  CHECK(invoke({"tau"}, R"({"n": 1, "matrix": [[1, 0], [0, "x"]]})").code == 2);
  CHECK(invoke({"tau"}, R"({"n": 1.5, "matrix": [[1, 0], [0, 1]]})").code == 2);
  CHECK(invoke({"tau", "/nonexistent/file.json"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--tol", "0", "tau"}, document(rotation(1.0))).code == 2);
  CHECK(invoke({"suite", "--trials", "0"}).code == 2);

  Matrix bad(2, 2);
  bad << 1, 1, 1, 1;
  const auto ns = invoke({"tau"}, document(bad));
  CHECK(ns.code == 1);
  CHECK(ns.doc()["error"]["kind"] == "NotSymplectic");
  CHECK(ns.err.find("symplectic") != std::string::npos);

  const auto ne = invoke({"log"}, document(Matrix::Identity(2, 2)));
  CHECK(ne.code == 1);
  CHECK(ne.doc()["error"]["kind"] == "NotElliptic");

  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("--tol is applied uniformly") {
  Matrix near = rotation(1.0);
  near(0, 0) += 1e-7;
  CHECK(invoke({"check", "--symplectic"}, document(near)).doc()["result"]["symplectic"] == false);
  const auto loose = invoke({"--tol", "1e-5", "check", "--symplectic"}, document(near)).doc();
  CHECK(loose["result"]["symplectic"] == true);
  CHECK(loose["tolerances"]["signature"].get<double>() == 1e-5);
  // Flags may also follow the subcommand.
  CHECK(invoke({"check", "--symplectic", "--tol", "1e-5"}, document(near)).doc()["result"]["symplectic"] ==
        true);
}

TEST_CASE("log then geodesic reproduces the input") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const Matrix w = random_elliptic(rng, n).w;
    const auto lg = invoke({"log"}, document(w));
    REQUIRE(lg.code == 0);
    const std::string x = lg.doc()["result"]["x"].dump();
    const auto g = invoke({"geodesic"}, x);
    REQUIRE(g.code == 0);
    const Matrix back = matrix_of(g.doc()["result"]["w"]);
    CHECK((back - w).norm() <= 1e-9 * w.norm());
  }
}

TEST_CASE("geodesic, connect and exit-times read several documents") {
  const TempFile j(document(standard_j(1).matrix()));
  const TempFile w0(document(rotation(kPi / 4)));

  const auto g = invoke({"geodesic", "--t", "0.5", j.path(), w0.path()});
  REQUIRE(g.code == 0);
  CHECK((matrix_of(g.doc()["result"]["w"]) - rotation(kPi / 4 + 0.5)).norm() < 1e-13);

  const auto c = invoke({"connect"}, "[" + document(rotation(0.3)) + ", " + document(rotation(1.0)) + "]");
  REQUIRE(c.code == 0);
  CHECK((matrix_of(c.doc()["result"]["x"]) - 0.7 * standard_j(1).matrix()).norm() < 1e-12);
  CHECK(c.doc()["result"]["cone_status"] == "interior");
  CHECK(c.doc()["result"]["length"].get<double>() == doctest::Approx(0.7));

  const auto nc = invoke({"connect", w0.path(), w0.path()});
  CHECK(nc.code == 1);
  CHECK(nc.doc()["error"]["kind"] == "NotConnectable");

  const auto e = invoke({"exit-times", w0.path(), j.path()});
  REQUIRE(e.code == 0);
  CHECK(std::abs(e.doc()["result"]["c1"].get<double>() - kPi / 4) < 1e-8);
  CHECK(std::abs(e.doc()["result"]["c2"].get<double>() - 3 * kPi / 4) < 1e-8);
  CHECK(e.doc()["result"]["forward_reason"] == "eigenvalue -1");

  const auto capped = invoke({"exit-times", "--t-max", "0.1", w0.path(), j.path()});
  CHECK(capped.code == 0);
  CHECK(capped.doc()["result"]["forward_finite"] == false);
  CHECK(capped.doc()["diagnostics"].contains("warning"));

  CHECK(invoke({"connect", j.path()}).code == 2);
  const TempFile big(document(Matrix::Identity(4, 4)));
  CHECK(invoke({"connect", w0.path(), big.path()}).code == 2);
}

TEST_CASE("path-verify") {
  const auto a = invoke({"path-verify", "--seed", "9", "--steps", "40", "--n", "2"});
  REQUIRE(a.code == 0);
  const auto b = invoke({"path-verify", "--seed", "9", "--steps", "40", "--n", "2"});
  CHECK(a.out == b.out);
  const Json r = a.doc()["result"];
  CHECK(r["steps"] == 40);
  CHECK(r["tau_monotone"] == true);
  CHECK(r["mu"].size() == 41);
  CHECK(a.doc()["provenance"]["seed"] == 9);

  // Explicit path: J for time pi/2 from the identity, in two steps.
  std::ostringstream path;
  path << R"({"n": 1, "start": [[1, 0], [0, 1]], "times": [0, 0.78539816339744828, 1.5707963267948966], )"
       << R"("tangents": [[[0, -1], [1, 0]], [[0, -1], [1, 0]]]})";
  const auto p = invoke({"path-verify"}, path.str());
  REQUIRE(p.code == 0);
  CHECK(p.doc()["result"]["length"].get<double>() == doctest::Approx(kPi / 2));
  CHECK(p.doc()["result"]["mu"][2].get<double>() == doctest::Approx(0.25));
  CHECK(p.doc()["result"]["tau"][0].is_null());  // identity is outside the region

  const std::string backwards =
      R"({"n": 1, "start": [[1, 0], [0, 1]], "times": [0, 1], "tangents": [[[0, 1], [-1, 0]]]})";
  const auto bad = invoke({"path-verify"}, backwards);
  CHECK(bad.code == 1);
  CHECK(bad.doc()["error"]["kind"] == "OutsideCone");
  CHECK(invoke({"path-verify"}, R"({"n": 1, "start": [[1, 0], [0, 1]], "times": [0], "tangents": []})")
            .code == 2);
}

TEST_CASE("suite is deterministic") {
  const auto a = invoke({"suite", "--seed", "3", "--trials", "2"});
  const auto b = invoke({"suite", "--seed", "3", "--trials", "2"});
  CHECK(a.out == b.out);
  const Json d = a.doc();
  CHECK(d["result"]["properties"].size() == 15);
  CHECK(a.code == (d["result"]["all_passed"] == true ? 0 : 1));
  CHECK(d["provenance"]["seed"] == 3);
}
