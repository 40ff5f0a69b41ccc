#include "ring/exnode.hpp"

#include <algorithm>
#include <stdexcept>

#include "actors/fault.hpp"

namespace ring {

ExnodeState exnode_intent(ExnodeState state,
                          const actors::TypedEnvelope<actors::AnyMessage>& env,
                          actors::Context& ctx) {
  const actors::AnyMessage& payload = env.message;

  if (const Msg* msg = payload.as<Msg>()) {
    state.node = node_intent(state.node, {env.sender, *msg}, ctx);
    if (const auto* nom = std::get_if<Nominate>(msg)) {
      const ActorId self = ctx.self();
      if (nom->nominee == self) {
        // Election settled on us; start the declaration round.
        ctx.send(std::get<Member>(state.node).next, Winner{self});
      } else {
        state.greatest = std::max(state.greatest, nom->nominee);
      }
    }
    return state;
  }

  if (const Winner* winner = payload.as<Winner>()) {
    const auto* member = std::get_if<Member>(&state.node);
    if (member == nullptr) throw std::logic_error("exnode: unhandled");
    const ActorId self = ctx.self();
    if (winner->declared == self) {
      ctx.emit(self.str() + ": Confirmed");
    } else if (winner->declared == state.greatest) {
      ctx.send(member->next, *winner);
    } else {
      ctx.emit("Unexpected winner");
    }
    return state;
  }

  if (const actors::Fault* fault = payload.as<actors::Fault>()) {
    // Never answer a fault with a fault.
    ctx.emit(ctx.self().str() + ": dropped " + debug(*fault));
    return state;
  }

  ctx.send(env.sender, actors::Fault{actors::Fault::TypeMismatch{
                           payload.type_name(), ctx.self()}});
  return state;
}

}  // namespace ring
