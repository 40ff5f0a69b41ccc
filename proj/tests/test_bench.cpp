#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <initializer_list>
#include <sstream>
#include <vector>

#include "bench/bench.hpp"
#include "doctest.h"

using bench::BenchRow;

namespace {

int run_cli(std::initializer_list<const char*> args) {
  std::vector<char*> argv;
  argv.push_back(const_cast<char*>("ringbench"));
  for (const char* a : args) argv.push_back(const_cast<char*>(a));
  return bench::cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("csv output: exact header and one line per row") {
  std::ostringstream out;
  bench::write_csv(out, {BenchRow{"actors", 4, 9, 0, 1234, 20, true},
                         BenchRow{"control", 4, 9, 1, 99, 0, false}});
  CHECK(out.str() ==
        "mode,ring_size,seed,rep,wall_ns,messages,winner_ok\n"
        "actors,4,9,0,1234,20,true\n"
        "control,4,9,1,99,0,false\n");
}

TEST_CASE("actor benchmark run asserts the winner and counts messages") {
  BenchRow first = bench::run_actor_election(4, 5);
  BenchRow second = bench::run_actor_election(4, 5);
  CHECK(first.winner_ok);
  CHECK(first.mode == "actors");
  CHECK(first.messages > 0);
  CHECK(first.wall_ns > 0);
  CHECK(first.messages == second.messages);
}

TEST_CASE("channel benchmark run asserts the winner and counts writes") {
  BenchRow first = bench::run_channel_election(4, 5);
  BenchRow second = bench::run_channel_election(4, 5);
  CHECK(first.winner_ok);
  CHECK(first.mode == "channels");
  CHECK(first.messages > 0);
  CHECK(first.messages == second.messages);
}

TEST_CASE("control run works for any size, including zero") {
  CHECK(bench::run_control(0, 1).winner_ok);
  BenchRow row = bench::run_control(1000, 1);
  CHECK(row.winner_ok);
  CHECK(row.messages == 0);
}

TEST_CASE("heat produces three groups times reps, in mode order") {
  auto rows = bench::run_heat(4, 3, 2);
  REQUIRE(rows.size() == 6);
  const std::array<const char*, 6> expected{"control", "control", "actors",
                                            "actors", "channels", "channels"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].mode == expected[i]);
    CHECK(rows[i].rep == static_cast<int>(i % 2));
    CHECK(rows[i].winner_ok);
  }
}

TEST_CASE("cli: unknown flags exit with usage code") {
  CHECK(run_cli({"--nonsense"}) == 2);
  CHECK(run_cli({"--mode", "frobnicate"}) == 2);
  CHECK(run_cli({"--mode", "actors", "--ring-size", "1"}) == 2);
}

TEST_CASE("cli: control mode succeeds at ring size zero") {
  CHECK(run_cli({"--mode", "control", "--ring-size", "0"}) == 0);
}

TEST_CASE("cli: single actor run succeeds") {
  CHECK(run_cli({"--mode", "actors", "--ring-size", "4", "--seed", "8"}) == 0);
}
