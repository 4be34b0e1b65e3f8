#pragma once

#include <stdexcept>
#include <string>

namespace baf {

// An enumeration or search would exceed its configured cap. The message
// carries the offending count so callers can report it.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::string count)
      : std::runtime_error(what), count_(std::move(count)) {}

  const std::string& count() const { return count_; }

 private:
  std::string count_;
};

}  // namespace baf
