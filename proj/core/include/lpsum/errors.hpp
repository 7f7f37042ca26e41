#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpsum {

enum class Errc {
    precondition_violated,
    invalid_params,
    out_of_region,
    dimension_mismatch,
    index_out_of_range,
    not_vector_valued,
    too_large,
    degenerate,
    parse_error,
};

constexpr std::string_view to_string(Errc c) {
    switch (c) {
        case Errc::precondition_violated: return "PRECONDITION_VIOLATED";
        case Errc::invalid_params: return "INVALID_PARAMS";
        case Errc::out_of_region: return "OUT_OF_REGION";
        case Errc::dimension_mismatch: return "DIMENSION_MISMATCH";
        case Errc::index_out_of_range: return "INDEX_OUT_OF_RANGE";
        case Errc::not_vector_valued: return "NOT_VECTOR_VALUED";
        case Errc::too_large: return "TOO_LARGE";
        case Errc::degenerate: return "DEGENERATE";
        case Errc::parse_error: return "PARSE_ERROR";
    }
    return "UNKNOWN";
}

/// Domain error carrying a stable error code; the CLI maps codes to exit status.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace lpsum
