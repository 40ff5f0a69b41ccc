#pragma once

#include <any>
#include <functional>
#include <string>
#include <utility>

#include "actors/envelope.hpp"

namespace actors {

class Context;

// Type-erased actor behavior: mutates the state cell in response to one
// envelope. Throwing crashes the actor.
using ErasedStep =
    std::function<void(std::any& state, const Envelope& env, Context& ctx)>;

// Effects available to an intent while it processes an envelope. Obtainable
// only inside an intent invocation, which makes self() well-defined by
// construction.
class Context {
 public:
  virtual ~Context() = default;

  virtual ActorId self() const = 0;
  virtual void send_any(ActorId to, AnyMessage message) = 0;
  virtual ActorId spawn_erased(ErasedStep step, std::any initial_state) = 0;
  virtual void stop(ActorId target) = 0;

  // Emit an event line to the runtime's trace sink, if one is attached.
  virtual void emit(std::string line) = 0;

  template <class T>
  void send(ActorId to, T message) {
    send_any(to, AnyMessage::of(std::move(message)));
  }
};

}  // namespace actors
