#include "chanring/chan_ring.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <variant>

#include "actors/errors.hpp"
#include "chanring/channel.hpp"
#include "ring/election.hpp"

namespace chanring {
namespace {

using ring::Init;
using ring::Msg;
using ring::Nominate;
using ring::Start;
using ring::Winner;

using ChMsg = std::variant<Msg, Winner>;
using Chan = Channel<ChMsg>;

// Shared election state: counters for draining, the completion cell, and the
// optional trace sink.
struct Election {
  std::atomic<std::uint64_t> writes{0};
  std::atomic<std::uint64_t> in_flight{0};
  std::mutex quiet_mu;
  std::condition_variable quiet_cv;
  ring::CompletionCell done;
  std::shared_ptr<actors::TraceSink> sink;

  void emit(std::string line) {
    if (sink) sink->line(std::move(line));
  }

  void push(Chan& chan, ChMsg msg) {
    writes.fetch_add(1, std::memory_order_relaxed);
    in_flight.fetch_add(1, std::memory_order_relaxed);
    chan.push(std::move(msg));
  }

  void consumed() {
    if (in_flight.fetch_sub(1, std::memory_order_acq_rel) == 1) {
      std::lock_guard lock(quiet_mu);
      quiet_cv.notify_all();
    }
  }

  bool await_quiet(std::chrono::milliseconds timeout) {
    std::unique_lock lock(quiet_mu);
    return quiet_cv.wait_for(lock, timeout, [&] {
      return in_flight.load(std::memory_order_acquire) == 0;
    });
  }

  // Basic node behavior, minus Init: the topology is fixed by the channels.
  void node_part(ActorId self, const Msg& msg, Chan& out) {
    if (std::holds_alternative<Start>(msg)) {
      emit(self.str() + ": nominate self");
      push(out, Msg{Nominate{self}});
      return;
    }
    if (const auto* nom = std::get_if<Nominate>(&msg)) {
      if (self == nom->nominee) {
        emit(self.str() + ": I win");
      } else if (self < nom->nominee) {
        emit(self.str() + ": nominate " + nom->nominee.str());
        push(out, Msg{Nominate{nom->nominee}});
      } else {
        emit("Ignored nominee");
      }
      return;
    }
    throw std::logic_error("nodePart: unhandled");
  }

  // Winner-round behavior layered on node_part; returns the updated greatest.
  ActorId exnode_part(ActorId self, ActorId great, const ChMsg& msg,
                      Chan& out) {
    if (const Msg* m = std::get_if<Msg>(&msg)) {
      node_part(self, *m, out);
      if (const auto* nom = std::get_if<Nominate>(m)) {
        if (nom->nominee == self) {
          push(out, ChMsg{Winner{self}});
        } else {
          great = std::max(great, nom->nominee);
        }
      }
      return great;
    }
    const Winner& w = std::get<Winner>(msg);
    if (w.declared == self) {
      emit(self.str() + ": Confirmed");
      done.put(self);
    } else if (w.declared == great) {
      push(out, ChMsg{Winner{w.declared}});
    } else {
      emit("Unexpected winner");
    }
    return great;
  }

  void node_loop(ActorId self, Chan& in, Chan& out) {
    ActorId great = self;
    while (auto msg = in.pop()) {
      great = exnode_part(self, great, *msg, out);
      consumed();
    }
  }
};

}  // namespace

ChanOutcome run_channel_election(std::size_t n, ring::Rng& rng,
                                 std::chrono::milliseconds timeout,
                                 std::shared_ptr<actors::TraceSink> sink) {
  if (n < 2) throw actors::InvalidRingSize(n);

  // Same shuffle discipline as the actor version: identities are drawn in
  // ascending order and permuted, so a given seed lays out both rings alike.
  std::vector<ActorId> tokens;
  tokens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tokens.push_back(ActorId{i + 1});
  std::vector<ActorId> order = ring::permute(std::move(tokens), rng);

  Election election;
  election.sink = std::move(sink);

  std::vector<std::unique_ptr<Chan>> chans;
  chans.reserve(n);
  for (std::size_t i = 0; i < n; ++i) chans.push_back(std::make_unique<Chan>());

  std::vector<std::thread> threads;
  threads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    threads.emplace_back([&election, self = order[i], in = chans[i].get(),
                          out = chans[(i + 1) % n].get()] {
      election.node_loop(self, *in, *out);
    });
  }

  const auto shut_down = [&] {
    for (auto& chan : chans) chan->close();
    for (auto& thread : threads) thread.join();
  };

  for (auto& chan : chans) election.push(*chan, ChMsg{Msg{Start{}}});

  std::optional<ActorId> winner = election.done.await(timeout);
  // Stragglers (dying nominations behind the winner round) must drain before
  // the write counter is meaningful.
  if (!winner.has_value() || !election.await_quiet(timeout)) {
    shut_down();
    throw actors::ElectionTimeout();
  }
  shut_down();

  ChanOutcome outcome{*winner, std::move(order),
                      election.writes.load(std::memory_order_relaxed), {}};
  if (auto capture = std::dynamic_pointer_cast<actors::CaptureTraceSink>(
          election.sink)) {
    outcome.events = capture->lines();
  }
  return outcome;
}

}  // namespace chanring
