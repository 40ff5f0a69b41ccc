#pragma once

#include <variant>

#include "actors/context.hpp"
#include "actors/envelope.hpp"
#include "ring/messages.hpp"

namespace ring {

// A node is uninitialized until it learns its successor; the successor never
// changes afterwards.
struct Uninitialized {};
struct Member {
  ActorId next;
};
using NodeState = std::variant<Uninitialized, Member>;

inline bool operator==(const Uninitialized&, const Uninitialized&) {
  return true;
}
inline bool operator==(const Member& a, const Member& b) {
  return a.next == b.next;
}

// Ring election node behavior:
//   Uninitialized + Init{next}  -> Member{next}
//   Member + Start              -> nominate self to successor
//   Member + Nominate{nom}      -> win / forward / ignore by id comparison
// Any other combination crashes the actor.
NodeState node_intent(NodeState state,
                      const actors::TypedEnvelope<Msg>& env,
                      actors::Context& ctx);

}  // namespace ring
