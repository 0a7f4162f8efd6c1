#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "kreweras/cli/pipeline.hpp"
#include "kreweras/core/textio.hpp"

using namespace kreweras;

namespace {

PipelineConfig small_config(const std::string& dir) {
  return parse_config(
      "# reduced sizes\n"
      "enumerate_n = 6\nkernel_n = 8\ntheta_n = 40\noracle_n = 10\nguess_n = 40\n"
      "guess_max_order = 2\nguess_max_degree = 4\nh_order = 40\nout_dir = " + dir + "\n");
}

}  // namespace

TEST_CASE("config parsing and validation") {
  const PipelineConfig c = parse_config("theta_n=70  # comment\n\nprime = 65521\n");
  CHECK(c.theta_n == 70);
  CHECK(c.prime == 65521u);
  CHECK(c.guess_n == 90);
  CHECK_THROWS_AS(parse_config("bogus = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("theta_n = ten\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("theta_n\n"), std::invalid_argument);
  PipelineConfig bad;
  bad.theta_n = 20;
  bad.guess_n = 20;
  try {
    bad.validate();
    FAIL("expected a validation error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("theta_n >= margin + 7") != std::string::npos);
  }
  PipelineConfig greedy;
  greedy.guess_n = greedy.theta_n + 1;
  CHECK_THROWS_WITH_AS(greedy.validate(), doctest::Contains("guess_n <= theta_n"), std::invalid_argument);
  CHECK(parse_config("", c).theta_n == 70);
}

TEST_CASE("pipeline is deterministic and file based") {
  const auto dir = std::filesystem::temp_directory_path() / "kreweras-pipeline-test";
  std::filesystem::remove_all(dir);
  std::ostringstream log;
  const Certificate a = run_pipeline(small_config(dir.string()), log);
  CHECK(a.holds());
  for (const char* f : {"Q.txt", "theta.txt", "cert.json"}) CHECK(std::filesystem::exists(dir / f));
  // too few coefficients for the order-4 operator: no guess, no L_g file
  CHECK_FALSE(std::filesystem::exists(dir / "L_g.txt"));
  const std::string first = read_text_file((dir / "cert.json").string());
  CHECK(first == a.to_json());
  const Certificate b = run_pipeline(small_config(dir.string()), log);
  CHECK(read_text_file((dir / "cert.json").string()) == first);
  CHECK(read_text_file((dir / "theta.txt").string()).find("# command: kreweras theta --n 40") != std::string::npos);
  std::filesystem::remove_all(dir);
}
