#include <arrowing/error.hpp>

namespace arrowing {

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::invalid_graph: return "INVALID_GRAPH";
    case ErrorCode::missing_edge: return "MISSING_EDGE";
    case ErrorCode::size_out_of_range: return "SIZE_OUT_OF_RANGE";
    case ErrorCode::identical_vertices: return "IDENTICAL_VERTEX";
    case ErrorCode::empty_edge_set: return "EMPTY_EDGE_SET";
    case ErrorCode::syntax: return "SYNTAX";
    case ErrorCode::constraint_violation: return "CONSTRAINT_VIOLATION";
    case ErrorCode::not_2_connected: return "NOT_2_CONNECTED";
    case ErrorCode::precondition: return "PRECONDITION";
    case ErrorCode::construction_failed: return "CONSTRUCTION_FAILED";
    case ErrorCode::missing_gadget: return "MISSING_GADGET";
    case ErrorCode::template_gap: return "TEMPLATE_GAP";
    case ErrorCode::inconsistent_signals: return "INCONSISTENT_SIGNALS";
    case ErrorCode::no_good_coloring: return "NO_GOOD_COLORING";
    case ErrorCode::budget_exceeded: return "BUDGET_EXCEEDED";
    }
    return "UNKNOWN";
}

ArrowingError::ArrowingError(ErrorCode code, const std::string& message) :
    std::runtime_error(std::string(error_code_name(code)) + ": " + message),
    code_(code)
{
}

void fail(ErrorCode code, const std::string& message)
{
    throw ArrowingError(code, message);
}

} // namespace arrowing
