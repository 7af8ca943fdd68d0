#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrowing {

enum class ErrorCode {
    invalid_graph,
    missing_edge,
    size_out_of_range,
    identical_vertices,
    empty_edge_set,
    syntax,
    constraint_violation,
    not_2_connected,
    precondition,
    construction_failed,
    missing_gadget,
    template_gap,
    inconsistent_signals,
    no_good_coloring,
    budget_exceeded,
};

std::string_view error_code_name(ErrorCode code);

class ArrowingError : public std::runtime_error {
  public:
    ArrowingError(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

} // namespace arrowing
