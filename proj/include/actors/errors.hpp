#pragma once

#include <stdexcept>
#include <string>

#include "actors/actor_id.hpp"

namespace actors {

struct RuntimeShutDown : std::runtime_error {
  RuntimeShutDown() : std::runtime_error("runtime is shut down") {}
};

struct UnknownRecipient : std::runtime_error {
  explicit UnknownRecipient(ActorId id)
      : std::runtime_error("unknown recipient: " + id.str()), id(id) {}
  ActorId id;
};

struct InvalidRingSize : std::invalid_argument {
  explicit InvalidRingSize(std::size_t n)
      : std::invalid_argument("ring size must be >= 2, got " +
                              std::to_string(n)) {}
};

struct ElectionTimeout : std::runtime_error {
  ElectionTimeout() : std::runtime_error("election timed out") {}
};

}  // namespace actors
