#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace antimagic {

enum class ErrorCode {
    SelfLoop,
    DuplicateEdge,
    VertexOutOfRange,
    InfeasibleParameters,
    RetryBudgetExhausted,
    OddDegreeVertex,
    Disconnected,
    NoOddVertices,
    NotRegular,
    EvenDegree,
    OddDegree,
    InvalidCycleSet,
    ConditionViolated,
    G2HasIsolatedVertex,
    G1NotRegular,
    UnsupportedConstructiveCase,
    BudgetExceeded,
    SizeMismatch,
    ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports carries one of the codes above; callers
// (the CLI in particular) switch on code() rather than on the message text.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace antimagic
