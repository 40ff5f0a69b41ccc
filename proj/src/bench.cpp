#include "bench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "actors/runtime.hpp"
#include "chanring/chan_ring.hpp"
#include "ring/election.hpp"

namespace bench {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)
          .count());
}

}  // namespace

BenchRow run_actor_election(std::size_t n, std::uint64_t seed, bool trace) {
  BenchRow row{"actors", n, seed, 0, 0, 0, false};
  const auto start = Clock::now();
  {
    actors::Runtime::Options options;
    if (trace) options.trace = std::make_shared<actors::StdoutTraceSink>();
    actors::Runtime rt(options);
    ring::Rng rng(seed);
    ring::ElectionOutcome outcome = ring::extended_election(rt, n, rng);
    row.winner_ok =
        outcome.winner ==
        *std::max_element(outcome.ring.begin(), outcome.ring.end());
    row.messages = rt.envelopes_sent();
    ring::stop_ring(rt, outcome.ring);
    rt.shutdown();
  }
  row.wall_ns = elapsed_ns(start);
  return row;
}

BenchRow run_channel_election(std::size_t n, std::uint64_t seed, bool trace) {
  BenchRow row{"channels", n, seed, 0, 0, 0, false};
  const auto start = Clock::now();
  {
    std::shared_ptr<actors::TraceSink> sink;
    if (trace) sink = std::make_shared<actors::StdoutTraceSink>();
    ring::Rng rng(seed);
    chanring::ChanOutcome outcome = chanring::run_channel_election(
        n, rng, std::chrono::milliseconds(30000), std::move(sink));
    row.winner_ok =
        outcome.winner ==
        *std::max_element(outcome.ring.begin(), outcome.ring.end());
    row.messages = outcome.writes;
  }
  row.wall_ns = elapsed_ns(start);
  return row;
}

BenchRow run_control(std::size_t n, std::uint64_t seed) {
  BenchRow row{"control", n, seed, 0, 0, 0, true};
  const auto start = Clock::now();
  {
    actors::Runtime rt;
    std::vector<actors::ActorId> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      ids.push_back(rt.spawn_erased(
          [](std::any&, const actors::Envelope&, actors::Context&) {},
          std::any(0)));
    }
    for (const auto& id : ids) rt.stop(id);
    rt.shutdown();
  }
  row.wall_ns = elapsed_ns(start);
  return row;
}

std::vector<BenchRow> run_heat(std::size_t n, std::uint64_t seed, int reps) {
  std::vector<BenchRow> rows;
  rows.reserve(static_cast<std::size_t>(reps) * 3);
  const auto record = [&](auto&& run) {
    run();  // warmup, discarded
    for (int rep = 0; rep < reps; ++rep) {
      BenchRow row = run();
      row.rep = rep;
      rows.push_back(std::move(row));
    }
  };
  record([&] { return run_control(n, seed); });
  record([&] { return run_actor_election(n, seed, false); });
  record([&] { return run_channel_election(n, seed, false); });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "mode,ring_size,seed,rep,wall_ns,messages,winner_ok\n";
  for (const BenchRow& r : rows) {
    out << r.mode << ',' << r.ring_size << ',' << r.seed << ',' << r.rep << ','
        << r.wall_ns << ',' << r.messages << ','
        << (r.winner_ok ? "true" : "false") << '\n';
  }
}

void write_table(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << std::left << std::setw(10) << "mode" << std::right << std::setw(10)
      << "ring_size" << std::setw(5) << "rep" << std::setw(14) << "wall_ms"
      << std::setw(10) << "messages" << std::setw(11) << "winner_ok" << '\n';
  for (const BenchRow& r : rows) {
    out << std::left << std::setw(10) << r.mode << std::right << std::setw(10)
        << r.ring_size << std::setw(5) << r.rep << std::setw(14) << std::fixed
        << std::setprecision(3) << (static_cast<double>(r.wall_ns) / 1e6)
        << std::setw(10) << r.messages << std::setw(11)
        << (r.winner_ok ? "true" : "false") << '\n';
  }
}

int cli_main(int argc, char** argv) {
  BenchConfig cfg;
  std::string mode_str = "heat";
  if (const char* env_mode = std::getenv("MODE")) mode_str = env_mode;
  if (const char* env_size = std::getenv("RING_SIZE")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env_size, &end, 10);
    if (end == env_size || *end != '\0') {
      std::cerr << "invalid RING_SIZE: " << env_size << '\n';
      return 2;
    }
    cfg.ring_size = static_cast<std::size_t>(v);
  }

  CLI::App app{"ring leader-election benchmark"};
  std::string csv_path;
  app.add_option("--mode", mode_str, "actors | channels | control | heat")
      ->check(CLI::IsMember({"actors", "channels", "control", "heat"}));
  app.add_option("--ring-size", cfg.ring_size, "number of ring nodes");
  app.add_option("--seed", cfg.seed, "permutation seed");
  app.add_option("--reps", cfg.repetitions,
                 "timed repetitions (default: 1, heat: 5)");
  app.add_flag("--trace", cfg.trace, "print election traces (not for timing)");
  app.add_option("--csv", csv_path, "also write rows as CSV to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << app.help();
    return 2;
  }

  Mode mode = Mode::Heat;
  if (mode_str == "actors") mode = Mode::Actors;
  else if (mode_str == "channels") mode = Mode::Channels;
  else if (mode_str == "control") mode = Mode::Control;
  else if (mode_str != "heat") {
    std::cerr << "invalid mode: " << mode_str << '\n';
    return 2;
  }

  if (mode != Mode::Control && cfg.ring_size < 2) {
    std::cerr << "ring size must be at least 2 for mode " << mode_str << '\n';
    return 2;
  }
  if (cfg.repetitions < 0) {
    std::cerr << "reps must be nonnegative\n";
    return 2;
  }
  const int reps =
      cfg.repetitions > 0 ? cfg.repetitions : (mode == Mode::Heat ? 5 : 1);

  std::vector<BenchRow> rows;
  try {
    switch (mode) {
      case Mode::Actors:
        for (int rep = 0; rep < reps; ++rep) {
          BenchRow row = run_actor_election(cfg.ring_size, cfg.seed, cfg.trace);
          row.rep = rep;
          rows.push_back(std::move(row));
        }
        break;
      case Mode::Channels:
        for (int rep = 0; rep < reps; ++rep) {
          BenchRow row =
              run_channel_election(cfg.ring_size, cfg.seed, cfg.trace);
          row.rep = rep;
          rows.push_back(std::move(row));
        }
        break;
      case Mode::Control:
        for (int rep = 0; rep < reps; ++rep) {
          BenchRow row = run_control(cfg.ring_size, cfg.seed);
          row.rep = rep;
          rows.push_back(std::move(row));
        }
        break;
      case Mode::Heat:
        rows = run_heat(cfg.ring_size, cfg.seed, reps);
        break;
    }
  } catch (const std::exception& e) {
    std::cerr << "benchmark failed: " << e.what() << '\n';
    return 1;
  }

  write_table(std::cout, rows);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) {
      std::cerr << "cannot open " << csv_path << '\n';
      return 1;
    }
    write_csv(out, rows);
  }

  const bool all_ok = std::all_of(rows.begin(), rows.end(),
                                  [](const BenchRow& r) { return r.winner_ok; });
  if (!all_ok) {
    std::cerr << "winner assertion failed\n";
    return 1;
  }
  return 0;
}

}  // namespace bench
