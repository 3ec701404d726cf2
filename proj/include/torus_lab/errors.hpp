#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torus_lab {

// Every domain failure carries one of these kinds; the CLI prints the
// kind name and exits with status 1.
enum class ErrorKind {
    truncation_too_small,
    invalid_sequence,
    not_in_normal_form,
    malformed_psi,
    no_psi_form,
    invalid_parameter,
    invalid_input,
    not_a_band,
    not_a_string,
    unsupported,
    not_an_edge,
    not_a_component_gvector,
    search_bound_exceeded,
    unknown_format,
    too_long,
    not_divisible,
    internal_error,
};

inline std::string_view error_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::truncation_too_small: return "truncation-too-small";
    case ErrorKind::invalid_sequence: return "invalid-sequence";
    case ErrorKind::not_in_normal_form: return "not-in-normal-form";
    case ErrorKind::malformed_psi: return "malformed-psi";
    case ErrorKind::no_psi_form: return "no-psi-form";
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::not_a_band: return "not-a-band";
    case ErrorKind::not_a_string: return "not-a-string";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::not_an_edge: return "not-an-edge";
    case ErrorKind::not_a_component_gvector: return "not-a-component-gvector";
    case ErrorKind::search_bound_exceeded: return "search-bound-exceeded";
    case ErrorKind::unknown_format: return "unknown-format";
    case ErrorKind::too_long: return "too-long";
    case ErrorKind::not_divisible: return "not-divisible";
    case ErrorKind::internal_error: return "internal-error";
    }
    return "internal-error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

} // namespace torus_lab
