#include "actors/trace.hpp"

#include <iostream>

namespace actors {

void StdoutTraceSink::line(std::string text) {
  static std::mutex mu;
  std::lock_guard lock(mu);
  std::cout << text << '\n';
  std::cout.flush();
}

void CaptureTraceSink::line(std::string text) {
  std::lock_guard lock(mu_);
  lines_.push_back(std::move(text));
}

std::vector<std::string> CaptureTraceSink::lines() const {
  std::lock_guard lock(mu_);
  return lines_;
}

std::size_t CaptureTraceSink::count_containing(std::string_view needle) const {
  std::lock_guard lock(mu_);
  std::size_t n = 0;
  for (const auto& l : lines_) {
    if (l.find(needle) != std::string::npos) ++n;
  }
  return n;
}

void CaptureTraceSink::clear() {
  std::lock_guard lock(mu_);
  lines_.clear();
}

}  // namespace actors
