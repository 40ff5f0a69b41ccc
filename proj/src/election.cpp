#include "ring/election.hpp"

#include "actors/errors.hpp"

namespace ring {

std::vector<ActorId> ring_election(actors::Runtime& rt, ActorId coordinator,
                                   std::size_t n, const ActorFactory& factory,
                                   Rng& rng) {
  if (n < 2) throw actors::InvalidRingSize(n);
  register_message_types();

  std::vector<ActorId> nodes;
  nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(factory(rt));

  std::vector<ActorId> order = permute(std::move(nodes), rng);
  for (std::size_t i = 0; i < n; ++i) {
    rt.send(coordinator, order[i], Msg{Init{order[(i + 1) % n]}});
  }
  for (const ActorId& id : order) {
    rt.send(coordinator, id, Msg{Start{}});
  }
  return order;
}

ElectionOutcome extended_election(actors::Runtime& rt, std::size_t n, Rng& rng,
                                  std::chrono::milliseconds timeout) {
  register_message_types();
  auto done = std::make_shared<CompletionCell>();

  // Exnode behavior plus a completion signal once the winner confirms.
  actors::ErasedStep base = actors::make_step<ExnodeState, actors::AnyMessage>(
      actors::Intent<ExnodeState, actors::AnyMessage>(exnode_intent));
  actors::ErasedStep step = [base = std::move(base), done](
                                std::any& state, const actors::Envelope& env,
                                actors::Context& ctx) {
    base(state, env, ctx);
    if (const Winner* w = env.payload.as<Winner>();
        w != nullptr && w->declared == ctx.self()) {
      done->put(ctx.self());
    }
  };

  ActorFactory factory = [&step](actors::Runtime& runtime) {
    return runtime.spawn_erased_with(step, [](ActorId id) {
      return std::any(ExnodeState{Uninitialized{}, id});
    });
  };

  actors::Client coordinator = rt.make_client();
  std::vector<ActorId> order =
      ring_election(rt, coordinator.id(), n, factory, rng);

  std::optional<ActorId> winner = done->await(timeout);
  if (!winner.has_value()) throw actors::ElectionTimeout();
  // Confirmation can race with the tail of the nomination round; wait for the
  // wires to go quiet before reporting.
  if (!rt.await_quiescence(timeout)) throw actors::ElectionTimeout();

  ElectionOutcome outcome{*winner, std::move(order), {}};
  if (auto capture = std::dynamic_pointer_cast<actors::CaptureTraceSink>(
          rt.trace_sink())) {
    outcome.events = capture->lines();
  }
  return outcome;
}

void stop_ring(actors::Runtime& rt, const std::vector<ActorId>& ring) {
  for (const ActorId& id : ring) rt.stop(id);
}

}  // namespace ring
