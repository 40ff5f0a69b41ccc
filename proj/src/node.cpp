#include "ring/node.hpp"

#include <stdexcept>

namespace ring {

NodeState node_intent(NodeState state, const actors::TypedEnvelope<Msg>& env,
                      actors::Context& ctx) {
  const Msg& msg = env.message;
  if (std::holds_alternative<Uninitialized>(state)) {
    if (const auto* init = std::get_if<Init>(&msg)) {
      return Member{init->next};
    }
  } else {
    const auto& member = std::get<Member>(state);
    if (std::holds_alternative<Start>(msg)) {
      ctx.send(member.next, Msg{Nominate{ctx.self()}});
      return state;
    }
    if (const auto* nom = std::get_if<Nominate>(&msg)) {
      const ActorId self = ctx.self();
      if (self == nom->nominee) {
        ctx.emit(self.str() + ": I win");
      } else if (self < nom->nominee) {
        ctx.send(member.next, Msg{Nominate{nom->nominee}});
      } else {
        ctx.emit("Ignored nomination");
      }
      return state;
    }
  }
  throw std::logic_error("node: unhandled");
}

}  // namespace ring
