#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace umlsem {

enum class ErrorCode {
  kInvalidArgument,
  kUnknownClassifier,
  kIllFormedModel,
  kUnknownName,
  kSideConditionViolated,
  kResultIllFormed,
  kScopeTooLarge,
};

std::string_view error_code_name(ErrorCode code);

// Raised by kernel operations. Parse failures are not exceptions; the
// frontend returns SourceError lists instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string subject = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        subject_(std::move(subject)) {}

  ErrorCode code() const { return code_; }
  const std::string & subject() const { return subject_; }

  // Proof replay attaches the failing step (0-based).
  std::optional<std::size_t> step() const { return step_; }
  void set_step(std::size_t step) { step_ = step; }

 private:
  ErrorCode code_;
  std::string subject_;
  std::optional<std::size_t> step_;
};

}  // namespace umlsem
