#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cusick/harness.hpp"

using cusick::BitWord;
using cusick::CheckSet;
using cusick::Dyadic;

namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("cusick_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

cusick::SweepOptions options(const fs::path& out, std::uint64_t from, std::uint64_t to,
                             unsigned jobs) {
  cusick::SweepOptions o;
  o.from = BitWord(from);
  o.to = BitWord(to);
  o.jobs = jobs;
  o.out = out;
  o.block_size = 100;
  return o;
}

}  // namespace

TEST_CASE("check names") {
  CHECK(CheckSet::parse("all") == CheckSet::all());
  const CheckSet s = CheckSet::parse("cusick,floor");
  CHECK(s.contains(cusick::Check::kFloor));
  CHECK(s.contains(cusick::Check::kCusick));
  CHECK_FALSE(s.contains(cusick::Check::kPair));
  CHECK(s.to_string() == "floor,cusick");
  CHECK(CheckSet::all().to_string() == "floor,mass,symmetry,cusick,pair,sufficient");
  CHECK_THROWS_AS(CheckSet::parse("floor,bogus"), std::invalid_argument);
  CHECK_THROWS_AS(CheckSet::parse("floor,"), std::invalid_argument);
}

TEST_CASE("record for t = 149") {
  const auto r = cusick::make_record(BitWord(149), CheckSet::all());
  CHECK(r.lambda == 7);
  CHECK(r.t_prime == BitWord(235));
  CHECK(r.blocks == 4);
  CHECK(r.c_t == Dyadic::parse("77/2^7"));
  CHECK(r.pair_sum == Dyadic::parse("37/2^5"));
  CHECK(r.pair_sum_ge_15_16);
  CHECK(r.cusick_holds);
  CHECK(r.pair_conjecture_holds);
  CHECK(std::find(r.argmax_set.begin(), r.argmax_set.end(), 2) != r.argmax_set.end());
  CHECK(r.support_min == -5);
  CHECK(r.support_max == 3);
  CHECK(r.mass_ok);
  CHECK(r.symmetry_ok);
  const std::string line = cusick::to_json_line(r);
  CHECK(line.rfind("{\"schema\":1,\"t\":\"149\",\"lambda\":7,", 0) == 0);
  CHECK(line.find("\"c_t\":{\"dyadic\":\"77/2^7\",\"decimal\":\"0.601562500000\"}") !=
        std::string::npos);
  CHECK(line.find('\n') == std::string::npos);
}

TEST_CASE("records round-trip and stay consistent") {
  for (std::uint64_t t = 1; t < 3000; t += 7) {
    const auto r = cusick::make_record(BitWord(t), CheckSet::all());
    const auto back = cusick::parse_record(cusick::to_json_line(r));
    CHECK(back == r);
    CHECK(back.pair_sum == back.c_t + back.c_t_prime);
  }
  CHECK_THROWS_AS(cusick::parse_record("{"), std::invalid_argument);
  CHECK_THROWS_AS(cusick::parse_record("{\"schema\":2}"), std::invalid_argument);
  CHECK_THROWS_AS(cusick::parse_record("{\"schema\":1,\"t\":\"5\"}"), std::invalid_argument);
}

TEST_CASE("csv line") {
  const auto r = cusick::make_record(BitWord(3), CheckSet::all());
  CHECK(cusick::to_csv_line(r) == "3,1,3,1,0.687500000000,0.687500000000,1.375000000000,1,1,1,1");
  CHECK(cusick::csv_header().rfind("t,lambda,t_prime", 0) == 0);
}

TEST_CASE("summary round-trip") {
  cusick::SweepSummary s;
  for (std::uint64_t t = 1; t < 200; ++t) {
    s.add(cusick::make_record(BitWord(t), CheckSet::all()), CheckSet::all());
  }
  s.complete = true;
  const auto back = cusick::SweepSummary::from_json(s.to_json());
  CHECK(back.to_json() == s.to_json());
  CHECK(s.records == 199);
  CHECK(s.hard_failures() == 0);
}

TEST_CASE("sweep output is independent of worker count") {
  const fs::path dir = scratch_dir("jobs");
  const auto a = cusick::sweep(options(dir / "a.jsonl", 1, 2000, 1));
  const auto b = cusick::sweep(options(dir / "b.jsonl", 1, 2000, 4));
  CHECK(slurp(dir / "a.jsonl") == slurp(dir / "b.jsonl"));
  CHECK(a.to_json() == b.to_json());
  CHECK(a.records == 2000);
  CHECK(a.complete);
  CHECK(a.hard_failures() == 0);
  std::istringstream lines(slurp(dir / "a.jsonl"));
  std::string line;
  std::uint64_t expected = 1;
  while (std::getline(lines, line)) {
    CHECK(cusick::parse_record(line).t == BitWord(expected++));
  }
  CHECK(expected == 2001);
}

TEST_CASE("interrupted sweep resumes to identical output") {
  const fs::path dir = scratch_dir("resume");
  cusick::sweep(options(dir / "full.jsonl", 5, 1234, 2));

  auto o = options(dir / "part.jsonl", 5, 1234, 2);
  o.checkpoint = dir / "part.ckpt";
  o.stop_after_blocks = 4;
  const auto first = cusick::sweep(o);
  CHECK_FALSE(first.complete);
  CHECK(first.records == 400);
  // a killed writer may leave a torn line after the checkpointed prefix
  {
    std::ofstream torn(dir / "part.jsonl", std::ios::binary | std::ios::app);
    torn << "{\"schema\":1,\"t\":\"40";
  }
  o.stop_after_blocks.reset();
  o.jobs = 3;
  const auto second = cusick::sweep(o);
  CHECK(second.complete);
  CHECK(second.records == 1230);
  CHECK(slurp(dir / "part.jsonl") == slurp(dir / "full.jsonl"));

  // rerunning a finished sweep writes nothing new
  cusick::sweep(o);
  CHECK(slurp(dir / "part.jsonl") == slurp(dir / "full.jsonl"));
}

TEST_CASE("corrupt and mismatched checkpoints are rejected") {
  const fs::path dir = scratch_dir("corrupt");
  auto o = options(dir / "out.jsonl", 1, 500, 1);
  o.checkpoint = dir / "out.ckpt";
  o.stop_after_blocks = 2;
  cusick::sweep(o);
  {
    std::fstream f(dir / "out.jsonl", std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(20);
    f.put('#');
  }
  CHECK_THROWS_AS(cusick::sweep(o), std::runtime_error);

  const fs::path dir2 = scratch_dir("mismatch");
  auto o2 = options(dir2 / "out.jsonl", 1, 500, 1);
  o2.checkpoint = dir2 / "out.ckpt";
  o2.stop_after_blocks = 1;
  cusick::sweep(o2);
  o2.to = BitWord(600);
  CHECK_THROWS_AS(cusick::sweep(o2), std::runtime_error);

  {
    std::ofstream garbage(dir2 / "bad.ckpt");
    garbage << "not a checkpoint\n";
  }
  auto o3 = options(dir2 / "x.jsonl", 1, 10, 1);
  o3.checkpoint = dir2 / "bad.ckpt";
  CHECK_THROWS_AS(cusick::sweep(o3), std::runtime_error);
}

TEST_CASE("sweep argument errors") {
  const fs::path dir = scratch_dir("errors");
  CHECK_THROWS_AS(cusick::sweep(options(dir / "a", 0, 10, 1)), std::invalid_argument);
  CHECK_THROWS_AS(cusick::sweep(options(dir / "a", 10, 9, 1)), std::invalid_argument);
  CHECK_THROWS_AS(cusick::sweep(options(dir / "missing" / "a", 1, 10, 1)), std::runtime_error);
}

TEST_CASE("worker cap from the environment") {
  setenv("CUSICK_MAX_JOBS", "2", 1);
  CHECK(cusick::effective_jobs(8) == 2);
  CHECK(cusick::effective_jobs(1) == 1);
  unsetenv("CUSICK_MAX_JOBS");
  CHECK(cusick::effective_jobs(8) == 8);
  CHECK(cusick::effective_jobs(0) >= 1);
}

TEST_CASE("sha256") {
  CHECK(cusick::sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
