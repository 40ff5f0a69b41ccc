#pragma once

#include <any>
#include <functional>
#include <type_traits>
#include <utility>

#include "actors/context.hpp"
#include "actors/fault.hpp"

namespace actors {

// User behavior: a state transition over envelopes of message type M.
// With M = AnyMessage the intent receives every payload and performs its
// own downcasts.
template <class S, class M>
using Intent = std::function<S(S state, const TypedEnvelope<M>& env, Context& ctx)>;

// Lifts a typed intent into the runtime's erased step. For M != AnyMessage
// the step downcasts the payload first; on failure the recipient's state is
// untouched and a TypeMismatch fault goes back to the sender. Faults never
// provoke further faults: an unhandled Fault payload is logged and dropped.
template <class S, class M>
ErasedStep make_step(Intent<S, M> intent) {
  return [intent = std::move(intent)](std::any& state, const Envelope& env,
                                      Context& ctx) {
    S& s = std::any_cast<S&>(state);
    if constexpr (std::is_same_v<M, AnyMessage>) {
      s = intent(std::move(s), TypedEnvelope<AnyMessage>{env.sender, env.payload},
                 ctx);
    } else {
      if (const M* m = env.payload.as<M>()) {
        s = intent(std::move(s), TypedEnvelope<M>{env.sender, *m}, ctx);
      } else if (env.payload.is<Fault>()) {
        ctx.emit(ctx.self().str() + ": dropped " + env.payload.debug());
      } else {
        ctx.send(env.sender,
                 Fault{Fault::TypeMismatch{env.payload.type_name(), ctx.self()}});
      }
    }
  };
}

}  // namespace actors
