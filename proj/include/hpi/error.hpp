#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hpi {

enum class ErrorCode {
    schema,
    precondition,
    dimension_mismatch,
    division_by_zero,
    order_mismatch,
    field_too_small,
    resource_cap,
    not_completely_reducible,
    not_unital,
    decomposition_failure,
    validation,
    internal,
};

inline std::string_view error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::schema: return "schema";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::division_by_zero: return "division-by-zero";
    case ErrorCode::order_mismatch: return "order-mismatch";
    case ErrorCode::field_too_small: return "field-too-small";
    case ErrorCode::resource_cap: return "resource-cap";
    case ErrorCode::not_completely_reducible: return "not-completely-reducible";
    case ErrorCode::not_unital: return "not-unital";
    case ErrorCode::decomposition_failure: return "decomposition-failure";
    case ErrorCode::validation: return "validation";
    case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

/// Process exit status used by the command-line front end for each code.
inline int error_exit_status(ErrorCode c) {
    switch (c) {
    case ErrorCode::schema: return 2;
    case ErrorCode::precondition: return 3;
    case ErrorCode::not_unital: return 3;
    case ErrorCode::field_too_small: return 4;
    case ErrorCode::resource_cap: return 5;
    case ErrorCode::validation: return 6;
    case ErrorCode::decomposition_failure: return 7;
    case ErrorCode::dimension_mismatch: return 8;
    case ErrorCode::division_by_zero: return 8;
    case ErrorCode::order_mismatch: return 8;
    case ErrorCode::not_completely_reducible: return 70;
    case ErrorCode::internal: return 70;
    }
    return 70;
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace hpi
