#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace otoc {

inline constexpr const char* kVersion = "0.1.0";

// Units: hbar = omega = M = 1 throughout. The quartic coupling g is the only
// free parameter of the model H = a'a + 1/2 + (g/4)(a' + a)^4.
struct ModelParams {
  double g = 0.0;
  int order = 3;  // highest power of g retained, in {0,1,2,3}
  double enhancement_warn_threshold = 0.1;

  void validate() const {
    if (!(g >= 0.0)) throw std::invalid_argument("ModelParams: g must be >= 0");
    if (order < 0 || order > 3)
      throw std::invalid_argument("ModelParams: order must be in {0,1,2,3}");
    if (!(enhancement_warn_threshold > 0.0))
      throw std::invalid_argument("ModelParams: enhancement_warn_threshold must be > 0");
  }
};

// Validity warnings (enhancement breaches, clipped band sums). Operations stay
// pure: callers that care pass a log, everyone else passes nullptr.
class WarningLog {
 public:
  void add(std::string msg) { messages_.push_back(std::move(msg)); }
  const std::vector<std::string>& messages() const { return messages_; }
  bool empty() const { return messages_.empty(); }

 private:
  std::vector<std::string> messages_;
};

inline void warn(WarningLog* log, std::string msg) {
  if (log) log->add(std::move(msg));
}

}  // namespace otoc
