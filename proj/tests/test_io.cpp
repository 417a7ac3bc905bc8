#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "phasespace/phase_io.hpp"

using namespace phasespace;

namespace {
PhaseFunction random_phase(const GridSpec& g, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N01;
  PhaseFunction A = PhaseFunction::zeros(g);
  for (int s = 0; s < g.nq(); ++s)
    for (int k = 0; k < g.n; ++k) A.values(s, k) = {N01(rng), N01(rng)};
  return A;
}
}  // namespace

TEST_SUITE("io") {
  TEST_CASE("csv round trip is bit exact") {
    const GridSpec g = make_grid(8, 0.3);
    const PhaseFunction A = random_phase(g, 1);
    std::stringstream ss;
    write_csv(ss, A);
    CHECK(ss.str().rfind("# axes q:16:", 0) == 0);
    const PhaseFunction B = read_phase_csv(ss);
    CHECK(B.grid.n == 8);
    CHECK(B.grid.dx == g.dx);
    CHECK(B.values == A.values);

    KernelMatrix K{g, Eigen::MatrixXcd::Random(8, 8)};
    std::stringstream sk;
    write_csv(sk, K);
    CHECK(read_kernel_csv(sk).entries == K.entries);
  }

  TEST_CASE("json round trip is bit exact") {
    const GridSpec g = make_grid(6, 0.7);
    const PhaseFunction A = random_phase(g, 2);
    const nlohmann::json j = to_json(A);
    CHECK(j["kind"] == "phase");
    const PhaseFunction B = phase_from_json(nlohmann::json::parse(j.dump()));
    CHECK(B.values == A.values);
    KernelMatrix K{g, Eigen::MatrixXcd::Random(6, 6)};
    CHECK(kernel_from_json(nlohmann::json::parse(to_json(K).dump())).entries == K.entries);
  }

  TEST_CASE("malformed input is rejected") {
    std::stringstream bad("# axes q:4:0.5 p:2:1\n1,0\n");
    CHECK_THROWS(read_phase_csv(bad));
    std::stringstream nohdr("1,0\n");
    CHECK_THROWS(read_phase_csv(nohdr));
    CHECK_THROWS(phase_from_json(nlohmann::json{{"kind", "kernel"}}));
  }

  TEST_CASE("save_phase picks the extension") {
    const auto dir = std::filesystem::temp_directory_path() / "phasespace_io_test";
    std::filesystem::create_directories(dir);
    const PhaseFunction A = random_phase(make_grid(4, 1.0), 3);
    const std::string pc = save_phase(A, (dir / "a").string(), "csv");
    const std::string pj = save_phase(A, (dir / "a").string(), "json");
    CHECK(pc.ends_with(".csv"));
    CHECK(pj.ends_with(".json"));
    std::ifstream in(pc);
    CHECK(read_phase_csv(in).values == A.values);
    CHECK_THROWS_AS(save_phase(A, (dir / "a").string(), "xml"), std::invalid_argument);
  }
}
