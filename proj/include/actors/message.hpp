#pragma once

#include <functional>
#include <memory>
#include <string>
#include <typeindex>
#include <utility>

namespace actors {

// Debug metadata for a message type: a stable human-readable name plus a
// renderer used for trace lines and type-fault reports.
struct MessageTypeInfo {
  std::string name;
  std::function<std::string(const void*)> render;
};

namespace detail {
void register_type(std::type_index type, MessageTypeInfo info);
const MessageTypeInfo* find_type(std::type_index type);
}  // namespace detail

template <class T>
void register_message_type(std::string name,
                           std::function<std::string(const T&)> render = nullptr) {
  MessageTypeInfo info;
  if (render) {
    info.render = [render = std::move(render)](const void* p) {
      return render(*static_cast<const T*>(p));
    };
  } else {
    info.render = [name](const void*) { return name; };
  }
  info.name = std::move(name);
  detail::register_type(std::type_index(typeid(T)), std::move(info));
}

// Type-erased message payload. A downcast to the exact type it was created
// from always succeeds; everything else yields nullptr.
class AnyMessage {
 public:
  AnyMessage() = default;

  template <class T>
  static AnyMessage of(T value) {
    AnyMessage m;
    m.data_ = std::make_shared<const T>(std::move(value));
    m.type_ = std::type_index(typeid(T));
    return m;
  }

  template <class T>
  bool is() const {
    return type_ == std::type_index(typeid(T));
  }

  template <class T>
  const T* as() const {
    return is<T>() ? static_cast<const T*>(data_.get()) : nullptr;
  }

  bool valid() const { return data_ != nullptr; }
  std::type_index type() const { return type_; }

  // Registered name, or the mangled typeid name as a fallback.
  std::string type_name() const;

  // Trace rendering for this payload.
  std::string debug() const;

 private:
  std::shared_ptr<const void> data_;
  std::type_index type_ = std::type_index(typeid(void));
};

}  // namespace actors
