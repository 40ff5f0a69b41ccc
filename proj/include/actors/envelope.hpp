#pragma once

#include "actors/actor_id.hpp"
#include "actors/message.hpp"

namespace actors {

// Self-addressed message container: the runtime stamps every send with the
// sender's identity so the recipient can reply (or be faulted back to).
struct Envelope {
  ActorId sender;
  AnyMessage payload;
};

// View of an envelope whose payload has been downcast to M. With
// M = AnyMessage the intent sees every payload and downcasts itself.
template <class M>
struct TypedEnvelope {
  ActorId sender;
  const M& message;
};

}  // namespace actors
