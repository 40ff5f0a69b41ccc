#pragma once

#include <string>
#include <variant>

#include "actors/actor_id.hpp"

namespace ring {

using actors::ActorId;

// The three election messages: the coordinator wires the ring with Init,
// kicks it off with Start, and the nodes run the election with Nominate.
struct Init {
  ActorId next;
};
struct Start {};
struct Nominate {
  ActorId nominee;
};
using Msg = std::variant<Init, Start, Nominate>;

// Winner declaration circulated in the extra round of the extended election.
struct Winner {
  ActorId declared;
};

std::string debug(const Msg& msg);
std::string debug(const Winner& winner);

// Registers Msg and Winner with the message-type registry. Idempotent.
void register_message_types();

}  // namespace ring
