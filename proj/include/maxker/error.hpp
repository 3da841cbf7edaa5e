// Error type shared by the whole library.  Every throw site attaches a
// stable machine-readable code string; the CLI surfaces it as JSON.

#ifndef MAXKER_ERROR_HPP
#define MAXKER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace maxker {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
// Stable code strings (see CLI docs).
inline constexpr const char* not_prime = "not_prime";
inline constexpr const char* bad_modulus = "bad_modulus";
inline constexpr const char* field_too_large = "field_too_large";
inline constexpr const char* bad_element = "bad_element";
inline constexpr const char* ctx_mismatch = "ctx_mismatch";
inline constexpr const char* bad_grid = "bad_grid";
inline constexpr const char* zero_polynomial = "zero_polynomial";
inline constexpr const char* dependent_basis = "dependent_basis";
inline constexpr const char* not_subfield = "not_subfield";
inline constexpr const char* a0_zero = "a0_zero";
inline constexpr const char* degenerate = "degenerate";
inline constexpr const char* order_cap_exceeded = "order_cap_exceeded";
inline constexpr const char* budget_exceeded = "budget_exceeded";
inline constexpr const char* precondition = "precondition";
inline constexpr const char* not_max_kernel = "not_max_kernel";
inline constexpr const char* bad_spec = "bad_spec";
inline constexpr const char* internal = "internal_error";
}  // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool cond, const char* code, const std::string& message) {
    if (!cond) fail(code, message);
}

}  // namespace maxker

#endif
