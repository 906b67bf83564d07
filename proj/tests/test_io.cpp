#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "gcx/io.hpp"

using namespace gcx;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("gcx-io-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("builtin specs resolve") {
  CHECK(io::load_group("c4").order == 4);
  CHECK(io::load_group("klein4").order == 4);
  CHECK(io::load_group("s3").order == 6);
  CHECK(io::load_group("d4").order == 8);
  CHECK_THROWS_AS(io::load_group("frobnitz"), error);

  CHECK(io::load_base("c1").dim() == 1);
  CHECK(io::load_base("toric").dim() == 4);
  CHECK(io::load_base("fib").dim() == 2);
  CHECK_THROWS_AS(io::load_base("nope"), error);
}

TEST_CASE("group file round trip") {
  TempDir tmp;
  FiniteGroup G = symmetric3();
  io::save_group(tmp.file("g.json"), G);
  FiniteGroup H = io::load_group(tmp.file("g.json"));
  CHECK(H.order == 6);
  CHECK(H.table == G.table);
}

TEST_CASE("base file round trip keeps fusion data") {
  TempDir tmp;
  FrobeniusBase B = io::load_base("toric");
  io::save_base(tmp.file("b.json"), B);
  FrobeniusBase C = io::load_base(tmp.file("b.json"));
  CHECK(C.dim() == 4);
  REQUIRE(C.fusion.has_value());
  for (int chi = 0; chi < 4; ++chi)
    CHECK(C.codegrees[chi] == doctest::Approx(B.codegrees[chi]));
}

TEST_CASE("cochain file round trip") {
  TempDir tmp;
  FiniteGroup K = klein_four();
  FrobeniusBase B = build_base({1.0});
  GAction A = io::load_action("trivial", B, K);
  Cochain phi = io::load_cochain("twist", A);
  io::save_cochain(tmp.file("phi.json"), phi);
  Cochain psi = io::load_cochain(tmp.file("phi.json"), A);
  REQUIRE(psi.values.size() == phi.values.size());
  for (size_t i = 0; i < phi.values.size(); ++i)
    CHECK(std::abs(psi.values[i] - phi.values[i]) < 1e-12);
  CHECK(psi.normalized);
}

TEST_CASE("algebra file round trip") {
  TempDir tmp;
  FiniteGroup K = klein_four();
  GAction act = io::load_action("trivial", build_base({1.0}), K);
  CrossedAlgebra A = construct_extension(act, io::load_cochain("twist", act));
  io::save_algebra(tmp.file("a.json"), A);
  CrossedAlgebra B = io::load_algebra(tmp.file("a.json"));
  CHECK(B.dim() == A.dim());
  CHECK(verify_crossed_axioms(B).all_pass());
  for (size_t i = 0; i < A.phi.values.size(); ++i)
    CHECK(std::abs(A.phi.values[i] - B.phi.values[i]) < 1e-12);
}

TEST_CASE("instance and element parsing") {
  TempDir tmp;
  GAction act = io::load_action("trivial", build_base({1.0}), klein_four());
  CrossedAlgebra A = construct_extension(act, io::load_cochain("twist", act));
  {
    std::ofstream f(tmp.file("inst.json"));
    f << R"({"pairs": [[1,2]], "elems": [[3, {"coeffs": [[3, 0, [0.5, -1.0]]]}]]})";
  }
  io::Instance I = io::load_instance(tmp.file("inst.json"), A);
  REQUIRE(I.pairs.size() == 1);
  CHECK(I.pairs[0] == std::pair<int, int>(1, 2));
  REQUIRE(I.elems.size() == 1);
  CHECK(I.elems[0].first == 3);
  CHECK(std::abs(I.elems[0].second.coeffs.at({3, 0}) - cplx(0.5, -1.0)) < 1e-12);

  io::Instance J = io::load_instance("abab", A);
  CHECK(J.elems.size() == 4);

  {
    std::ofstream f(tmp.file("bad.json"));
    f << R"({"elems": [[9, {"coeffs": []}]]})";
  }
  CHECK_THROWS_AS(io::load_instance(tmp.file("bad.json"), A), error);
  {
    std::ofstream f(tmp.file("notjson.json"));
    f << "{nope";
  }
  CHECK_THROWS_AS(io::load_instance(tmp.file("notjson.json"), A), error);
}

TEST_CASE("malformed files raise BadInput") {
  TempDir tmp;
  {
    std::ofstream f(tmp.file("g.json"));
    f << R"({"order": 3, "table": [[0,1],[1,0]]})";
  }
  try {
    io::load_group(tmp.file("g.json"));
    FAIL("expected an error");
  } catch (const error& e) {
    CHECK(e.code() == errc::BadInput);
  }
  CHECK_THROWS_AS(io::load_group(tmp.file("missing.json")), error);
}
