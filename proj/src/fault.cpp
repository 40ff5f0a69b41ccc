#include "actors/fault.hpp"

#include "actors/message.hpp"

namespace actors {

std::string to_string(HaltReason reason) {
  switch (reason) {
    case HaltReason::Normal:
      return "Normal";
    case HaltReason::Stopped:
      return "Stopped";
    case HaltReason::Crashed:
      return "Crashed";
  }
  return "?";
}

std::string debug(const Fault& fault) {
  if (const auto* tm = fault.type_mismatch()) {
    return "TypeMismatch {type = " + tm->offending_type_name +
           ", recipient = " + tm->recipient.str() + "}";
  }
  const auto* h = fault.halted();
  std::string s = "Halted {actor = " + h->actor.str() +
                  ", reason = " + to_string(h->reason);
  if (h->reason == HaltReason::Crashed) s += " (" + h->detail + ")";
  return s + "}";
}

void register_fault_message_type() {
  register_message_type<Fault>("Fault",
                               [](const Fault& f) { return debug(f); });
}

}  // namespace actors
