#pragma once

#include <string>
#include <variant>

#include "actors/actor_id.hpp"

namespace actors {

enum class HaltReason { Normal, Stopped, Crashed };

std::string to_string(HaltReason reason);

// Runtime-generated notifications delivered as ordinary envelopes.
//
// TypeMismatch is the "return to sender": a recipient that cannot decode a
// payload stays alive and the sender gets this instead. Halted is the halt
// notification delivered to observers registered via on_halt.
struct Fault {
  struct TypeMismatch {
    std::string offending_type_name;
    ActorId recipient;
  };
  struct Halted {
    ActorId actor;
    HaltReason reason = HaltReason::Normal;
    std::string detail;  // crash message when reason == Crashed
  };

  std::variant<TypeMismatch, Halted> detail;

  bool is_type_mismatch() const {
    return std::holds_alternative<TypeMismatch>(detail);
  }
  bool is_halted() const { return std::holds_alternative<Halted>(detail); }

  const TypeMismatch* type_mismatch() const {
    return std::get_if<TypeMismatch>(&detail);
  }
  const Halted* halted() const { return std::get_if<Halted>(&detail); }
};

std::string debug(const Fault& fault);

// Idempotent; called by the runtime constructor.
void register_fault_message_type();

}  // namespace actors
