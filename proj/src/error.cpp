#include "umlsem/error.h"

namespace umlsem {

std::string_view error_code_name(ErrorCode code)
{
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kUnknownClassifier: return "UNKNOWN_CLASSIFIER";
    case ErrorCode::kIllFormedModel: return "ILL_FORMED_MODEL";
    case ErrorCode::kUnknownName: return "UNKNOWN_NAME";
    case ErrorCode::kSideConditionViolated: return "SIDE_CONDITION_VIOLATED";
    case ErrorCode::kResultIllFormed: return "RESULT_ILL_FORMED";
    case ErrorCode::kScopeTooLarge: return "SCOPE_TOO_LARGE";
  }
  return "UNKNOWN";
}

}  // namespace umlsem
