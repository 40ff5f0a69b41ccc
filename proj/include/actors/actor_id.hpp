#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace actors {

// Runtime-assigned actor identity. Monotone per runtime instance, never
// reused, obtainable only from spawn / Context::self / an envelope.
struct ActorId {
  std::uint64_t value = 0;

  auto operator<=>(const ActorId&) const = default;

  std::string str() const { return "ActorId " + std::to_string(value); }
};

inline std::ostream& operator<<(std::ostream& os, const ActorId& id) {
  return os << id.str();
}

}  // namespace actors

template <>
struct std::hash<actors::ActorId> {
  std::size_t operator()(const actors::ActorId& id) const noexcept {
    return std::hash<std::uint64_t>{}(id.value);
  }
};
