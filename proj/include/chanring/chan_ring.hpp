#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "actors/trace.hpp"
#include "ring/messages.hpp"
#include "ring/permute.hpp"

namespace chanring {

using ring::ActorId;

struct ChanOutcome {
  ActorId winner;
  std::vector<ActorId> ring;  // node identities in successor order
  std::uint64_t writes = 0;   // total channel writes, Start injection included
  std::vector<std::string> events;
};

// Channel-and-thread twin of the extended ring election: one thread per node,
// one channel per edge, identities drawn from the same shuffle so a given
// seed produces the same ring layout as the actor version. Blocks until the
// winner confirms and in-flight traffic drains, then closes the channels and
// joins the threads. Throws InvalidRingSize / ElectionTimeout.
ChanOutcome run_channel_election(
    std::size_t n, ring::Rng& rng,
    std::chrono::milliseconds timeout = std::chrono::milliseconds(30000),
    std::shared_ptr<actors::TraceSink> sink = nullptr);

}  // namespace chanring
