#include "ring/messages.hpp"

#include "actors/message.hpp"

namespace ring {

std::string debug(const Msg& msg) {
  if (const auto* init = std::get_if<Init>(&msg)) {
    return "Init {next = " + init->next.str() + "}";
  }
  if (std::holds_alternative<Start>(msg)) return "Start";
  const auto& nom = std::get<Nominate>(msg);
  return "Nominate {nominee = " + nom.nominee.str() + "}";
}

std::string debug(const Winner& winner) {
  return "Winner (" + winner.declared.str() + ")";
}

void register_message_types() {
  actors::register_message_type<Msg>(
      "Msg", [](const Msg& m) { return debug(m); });
  actors::register_message_type<Winner>(
      "Winner", [](const Winner& w) { return debug(w); });
}

}  // namespace ring
