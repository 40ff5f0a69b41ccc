#pragma once

#include <any>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>

#include "actors/envelope.hpp"
#include "actors/errors.hpp"
#include "actors/fault.hpp"
#include "actors/intent.hpp"
#include "actors/trace.hpp"

namespace actors {

struct ActorCell;
struct RuntimeState;

// External handle into a runtime: a mailbox the caller reads synchronously.
// Used by coordinators and tests; its id is a valid `from` for send and a
// valid observer for on_halt.
class Client {
 public:
  ActorId id() const;

  // Blocks until an envelope is available or the timeout elapses.
  std::optional<Envelope> receive(std::chrono::milliseconds timeout);

 private:
  friend struct RuntimeState;
  friend class Runtime;
  std::shared_ptr<ActorCell> cell_;
};

// The actor runtime. Actors are lightweight tasks multiplexed over a fixed
// worker pool; an actor with pending envelopes is scheduled, processes them
// strictly sequentially, and otherwise costs nothing. The handle is safe to
// share across threads.
class Runtime {
 public:
  struct Options {
    std::size_t workers = 0;  // 0 = hardware concurrency
    std::shared_ptr<TraceSink> trace;
  };

  Runtime();
  explicit Runtime(Options options);
  ~Runtime();

  Runtime(const Runtime&) = delete;
  Runtime& operator=(const Runtime&) = delete;

  // The returned id's mailbox is installed before spawn returns: any send
  // issued afterwards is guaranteed enqueued, never lost to an
  // initialization race.
  ActorId spawn_erased(ErasedStep step, std::any initial_state);

  // Variant whose initial state may depend on the actor's own id.
  ActorId spawn_erased_with(ErasedStep step,
                            std::function<std::any(ActorId)> make_state);

  template <class S, class M>
  ActorId spawn(Intent<S, M> intent, S initial_state) {
    return spawn_erased(make_step<S, M>(std::move(intent)),
                        std::any(std::move(initial_state)));
  }

  template <class S, class M>
  ActorId spawn_with(Intent<S, M> intent, std::function<S(ActorId)> make_state) {
    return spawn_erased_with(
        make_step<S, M>(std::move(intent)),
        [make_state = std::move(make_state)](ActorId id) {
          return std::any(make_state(id));
        });
  }

  // Fire-and-forget: enqueues and returns without waiting for processing.
  // Sends to a halted-but-known actor succeed silently and are discarded.
  void send_any(ActorId from, ActorId to, AnyMessage message);

  template <class T>
  void send(ActorId from, ActorId to, T message) {
    send_any(from, to, AnyMessage::of(std::move(message)));
  }

  // Control signal with priority over pending envelopes; idempotent.
  void stop(ActorId target);

  // When target halts, observer receives a Fault::Halted envelope. Late
  // registration (target already halted) fires immediately, exactly once.
  void on_halt(ActorId target, ActorId observer);

  Client make_client();

  // Stops every live actor, waits for quiescence, rejects further
  // spawns/sends. Idempotent; also run by the destructor.
  void shutdown();

  // Waits until no envelope is queued or being processed.
  bool await_quiescence(std::chrono::milliseconds timeout);

  std::uint64_t envelopes_sent() const;
  std::size_t live_actors() const;
  std::shared_ptr<TraceSink> trace_sink() const;

 private:
  std::unique_ptr<RuntimeState> state_;
};

}  // namespace actors
