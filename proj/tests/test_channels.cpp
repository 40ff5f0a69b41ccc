#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "actors/runtime.hpp"
#include "chanring/chan_ring.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "ring/election.hpp"

using namespace std::chrono_literals;
using chanring::ChanOutcome;
using ring::ActorId;
using ring::Rng;

TEST_CASE("channel election rejects rings smaller than two") {
  Rng rng(1);
  CHECK_THROWS_AS(chanring::run_channel_election(0, rng),
                  actors::InvalidRingSize);
  CHECK_THROWS_AS(chanring::run_channel_election(1, rng),
                  actors::InvalidRingSize);
}

TEST_CASE("channel election: greatest token wins, write count is exact") {
  for (std::uint64_t seed : {1, 9, 33}) {
    for (std::size_t n : {2, 4, 8}) {
      auto capture = std::make_shared<actors::CaptureTraceSink>();
      Rng rng(seed);
      ChanOutcome outcome =
          chanring::run_channel_election(n, rng, 30000ms, capture);
      CHECK(outcome.winner ==
            *std::max_element(outcome.ring.begin(), outcome.ring.end()));
      CHECK(capture->count_containing(": nominate self") == n);
      CHECK(capture->count_containing(": I win") == 1);
      CHECK(capture->count_containing(": Confirmed") == 1);
      CHECK(capture->count_containing("Unexpected winner") == 0);
      // Start injections + nominations + one full winner lap.
      CHECK(outcome.writes ==
            n + oracles::nominate_count(outcome.ring) + n);
    }
  }
}

TEST_CASE("channel election is deterministic per seed") {
  Rng a(123), b(123);
  ChanOutcome first = chanring::run_channel_election(16, a);
  ChanOutcome second = chanring::run_channel_election(16, b);
  CHECK(first.ring == second.ring);
  CHECK(first.winner == second.winner);
  CHECK(first.writes == second.writes);
}

TEST_CASE("actors and channels put the winner at the same ring position") {
  for (std::uint64_t seed : {2, 11, 77}) {
    const std::size_t n = 12;

    actors::Runtime rt;
    Rng actor_rng(seed);
    ring::ElectionOutcome actors_run =
        ring::extended_election(rt, n, actor_rng);
    const auto actor_pos =
        std::find(actors_run.ring.begin(), actors_run.ring.end(),
                  actors_run.winner) -
        actors_run.ring.begin();
    ring::stop_ring(rt, actors_run.ring);

    Rng chan_rng(seed);
    ChanOutcome channels_run = chanring::run_channel_election(n, chan_rng);
    const auto chan_pos =
        std::find(channels_run.ring.begin(), channels_run.ring.end(),
                  channels_run.winner) -
        channels_run.ring.begin();

    CHECK(actor_pos == chan_pos);
  }
}
