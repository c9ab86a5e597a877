#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umlsem/enumerate.h"
#include "umlsem/semantics.h"
#include "umlsem/transform.h"

namespace umlsem::cli {

enum class Command { kCheck, kEnumerate, kSatisfy, kDeduce, kRefine, kProve, kVerifyRule, kApply };
enum class Format { kText, kJson };

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitGuard = 3;

std::optional<Command> parse_command(std::string_view word);
std::string_view command_name(Command c);
// Number of input paths the command takes.
std::size_t command_arity(Command c);

struct RunConfig {
  Command command = Command::kCheck;
  std::vector<std::string> inputs;
  Scope scope;
  Mode mode = Mode::kStrictPaper;
  Format format = Format::kText;
  Strategy strategy = Strategy::kMeta;
  EnumerationOptions enumeration;
};

// Runs one command. The report goes to `out`, diagnostics to `err`.
// Returns kExitHolds, kExitFails, kExitInputError or kExitGuard.
int run(const RunConfig & config, std::ostream & out, std::ostream & err);

}  // namespace umlsem::cli
