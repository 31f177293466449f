#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicat {

enum class Errc {
  InvalidArgument,
  IndexOutOfRange,
  DuplicateEdge,
  ParseError,
  InvalidPermutation,
  NotConnected,
  BudgetExceeded,
  NotAPath,
  NoStraightShortestPath,
  IsolatedVertex,
  ObservationViolated,
  ReplacementBreaksPath,
  OrderingNotStraight,
  InternalProofViolation,
  NotATree,
  ExceedsKMax,
  FallbackExhausted,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bicat
