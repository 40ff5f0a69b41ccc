#include "actors/message.hpp"

#include <mutex>
#include <unordered_map>

namespace actors {
namespace detail {

namespace {
std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}
std::unordered_map<std::type_index, MessageTypeInfo>& registry() {
  static std::unordered_map<std::type_index, MessageTypeInfo> r;
  return r;
}
}  // namespace

void register_type(std::type_index type, MessageTypeInfo info) {
  std::lock_guard lock(registry_mutex());
  registry().insert_or_assign(type, std::move(info));
}

const MessageTypeInfo* find_type(std::type_index type) {
  std::lock_guard lock(registry_mutex());
  auto it = registry().find(type);
  return it == registry().end() ? nullptr : &it->second;
}

}  // namespace detail

std::string AnyMessage::type_name() const {
  if (const auto* info = detail::find_type(type_)) return info->name;
  return type_.name();
}

std::string AnyMessage::debug() const {
  if (!valid()) return "<empty>";
  if (const auto* info = detail::find_type(type_)) return info->render(data_.get());
  return type_name();
}

}  // namespace actors
