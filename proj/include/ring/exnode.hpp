#pragma once

#include "actors/context.hpp"
#include "actors/message.hpp"
#include "ring/node.hpp"

namespace ring {

// Extended node: wraps the basic node state with the greatest nominee seen so
// far, which lets a node sanity-check the winner declaration round.
struct ExnodeState {
  NodeState node;
  ActorId greatest;
};

// Handles both Msg and Winner, so it takes the type-erased payload.
// Msg traffic is delegated to node_intent while the greatest-seen nominee is
// tracked; a self-nomination additionally kicks off the Winner round.
// Winner declarations are confirmed by the winner itself, forwarded when they
// match the local greatest, and flagged otherwise.
ExnodeState exnode_intent(ExnodeState state,
                          const actors::TypedEnvelope<actors::AnyMessage>& env,
                          actors::Context& ctx);

}  // namespace ring
