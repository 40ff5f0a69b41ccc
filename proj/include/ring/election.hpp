#pragma once

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "actors/runtime.hpp"
#include "ring/exnode.hpp"
#include "ring/node.hpp"
#include "ring/permute.hpp"

namespace ring {

// One-shot synchronization cell used to learn the election winner from the
// outside. A second put is a protocol violation and throws.
class CompletionCell {
 public:
  void put(ActorId id) {
    std::lock_guard lock(mu_);
    ++puts_;
    if (value_.has_value()) throw std::logic_error("completion cell: second put");
    value_ = id;
    cv_.notify_all();
  }

  std::optional<ActorId> await(std::chrono::milliseconds timeout) {
    std::unique_lock lock(mu_);
    cv_.wait_for(lock, timeout, [&] { return value_.has_value(); });
    return value_;
  }

  int puts() const {
    std::lock_guard lock(mu_);
    return puts_;
  }

 private:
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::optional<ActorId> value_;
  int puts_ = 0;
};

// Spawns one ring node and returns its id.
using ActorFactory = std::function<ActorId(actors::Runtime&)>;

// Spawns n nodes with the given factory, shuffles them, and wires them into a
// ring: every node gets Init with its successor, then Start. Returns the node
// ids in successor order. Throws InvalidRingSize for n < 2.
std::vector<ActorId> ring_election(actors::Runtime& rt, ActorId coordinator,
                                   std::size_t n, const ActorFactory& factory,
                                   Rng& rng);

struct ElectionOutcome {
  ActorId winner;
  std::vector<ActorId> ring;  // successor order
  std::vector<std::string> events;
};

// Runs the extended election with the winner-declaration round on n nodes and
// blocks until the winner confirms and all traffic has drained. Nodes are
// left running; callers stop them (see stop_ring) or shut the runtime down.
// Throws ElectionTimeout if no confirmation arrives in time.
ElectionOutcome extended_election(
    actors::Runtime& rt, std::size_t n, Rng& rng,
    std::chrono::milliseconds timeout = std::chrono::milliseconds(30000));

void stop_ring(actors::Runtime& rt, const std::vector<ActorId>& ring);

}  // namespace ring
