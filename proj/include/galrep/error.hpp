#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace galrep {

enum class ErrorKind {
    InvalidModulus,
    InvalidParams,
    DimensionMismatch,
    CapExceeded,
    BudgetExceeded,
    NotPrimeToP,
    NotNormal,
    SingularCurve,
    SmallPrimeUnsupported,
    BadReduction,
    InvalidCase,
    InvalidJ,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Enumeration budget used by the exhaustive methods. GALREP_BUDGET overrides
/// the default of 10^7.
std::uint64_t enumeration_budget();

inline constexpr std::size_t default_closure_cap = 100000;

}  // namespace galrep
