#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bench {

enum class Mode { Actors, Channels, Control, Heat };

struct BenchConfig {
  Mode mode = Mode::Heat;
  std::size_t ring_size = 64;
  std::uint64_t seed = 1;
  int repetitions = 0;  // 0 = mode default (1 single, 5 heat)
  bool trace = false;
  std::optional<std::string> csv_path;
};

struct BenchRow {
  std::string mode;
  std::size_t ring_size = 0;
  std::uint64_t seed = 0;
  int rep = 0;
  std::uint64_t wall_ns = 0;
  std::uint64_t messages = 0;
  bool winner_ok = false;
};

// One timed election on a fresh runtime; the clock covers runtime
// construction through shutdown. messages = envelopes sent. Tracing is
// meant for inspection, not timing.
BenchRow run_actor_election(std::size_t n, std::uint64_t seed,
                            bool trace = false);

// Channel-thread twin of run_actor_election; messages = channel writes.
BenchRow run_channel_election(std::size_t n, std::uint64_t seed,
                              bool trace = false);

// Lower bound: spawn n no-op actors and tear everything down again.
BenchRow run_control(std::size_t n, std::uint64_t seed);

// control/actors/channels back to back, one warmup run per mode, the same
// seed for every repetition.
std::vector<BenchRow> run_heat(std::size_t n, std::uint64_t seed, int reps);

// Header: mode,ring_size,seed,rep,wall_ns,messages,winner_ok
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

void write_table(std::ostream& out, const std::vector<BenchRow>& rows);

// Exit codes: 0 success, 1 assertion/timeout, 2 usage.
int cli_main(int argc, char** argv);

}  // namespace bench
