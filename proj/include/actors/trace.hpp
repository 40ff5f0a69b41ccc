#pragma once

#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace actors {

// Pluggable trace sink. When enabled, every send emits one line
//   `ActorId <sender> send <message-debug> to ActorId <recipient>`
// and intents may emit event lines (e.g. "ActorId 50: I win").
class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void line(std::string text) = 0;
};

// Line-buffered stdout sink.
class StdoutTraceSink final : public TraceSink {
 public:
  void line(std::string text) override;
};

// In-memory capture for tests.
class CaptureTraceSink final : public TraceSink {
 public:
  void line(std::string text) override;

  std::vector<std::string> lines() const;
  std::size_t count_containing(std::string_view needle) const;
  void clear();

 private:
  mutable std::mutex mu_;
  std::vector<std::string> lines_;
};

}  // namespace actors
