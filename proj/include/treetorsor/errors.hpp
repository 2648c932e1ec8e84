#ifndef TREETORSOR_ERRORS_HPP
#define TREETORSOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace treetorsor {

enum class ErrorKind {
    // graph construction
    LoopEdge,
    Disconnected,
    BadInvolution,
    DuplicateHalfEdge,
    DuplicateVertex,
    DuplicateEdge,
    // lookups / preconditions
    UnknownHalfEdge,
    UnknownVertex,
    UnknownEdge,
    UnknownName,
    NotIncident,
    NotOnCycle,
    EdgeInCycle,
    WouldDisconnect,
    // tree / search failures
    Infeasible,
    NotFound,
    NonUnique,
    // rotor dynamics
    AtSink,
    StepBudgetExceeded,
    // witness constructions
    PrecedenceFails,
    ComponentDisjoint,
    NotApplicable,
    // io / catalog
    SyntaxError,
    CalibrationFailed,
    InternalError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace treetorsor

#endif
