#include "galrep/error.hpp"

#include <cstdlib>
#include <string_view>

namespace galrep {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotPrimeToP: return "NotPrimeToP";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::SmallPrimeUnsupported: return "SmallPrimeUnsupported";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::InvalidCase: return "InvalidCase";
    case ErrorKind::InvalidJ: return "InvalidJ";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

std::uint64_t enumeration_budget() {
    constexpr std::uint64_t fallback = 10'000'000;
    const char* env = std::getenv("GALREP_BUDGET");
    if (env == nullptr || *env == '\0') return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return fallback;
    return v;
}

}  // namespace galrep
