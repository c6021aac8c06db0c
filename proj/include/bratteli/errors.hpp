#pragma once

#include <stdexcept>
#include <string>

namespace bratteli {

enum class ErrorKind {
    ZeroRow,
    DimensionMismatch,
    SchemaError,
    RankMismatch,
    NegativeCoefficient,
    MemoryBudgetExceeded,
    TimeBudgetExceeded,
    UnboundedTail,
    SupportUnstable,
    NotSimple,
    NotPrimitive,
    NotTwoBlock,
    ConnectorsUnbounded,
    SpecNotProper,
    ZeroRowInduced,
    BrokenPath,
    MultipleMeasures,
    DegenerateColumn,
    NonPositiveEntry,
    OrderMultisetMismatch,
    CapTooSmall,
    BlockMissingSymbol,
    BlockTooShort,
    EmptyAlphabet,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    /// True for errors caused by malformed input rather than exhausted budgets.
    bool is_input_error() const {
        return kind_ != ErrorKind::MemoryBudgetExceeded &&
               kind_ != ErrorKind::TimeBudgetExceeded;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace bratteli
