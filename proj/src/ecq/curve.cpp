#include "galrep/ecq/curve.hpp"

#include "galrep/error.hpp"

#include <sstream>

namespace galrep::ecq {

Curve Curve::parse(const std::string& text) {
    Curve c;
    std::size_t idx = 0, start = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::InvalidParams, "curve must be five comma-separated integers a1,a2,a3,a4,a6 (" + why + ")");
    };
    while (true) {
        const auto comma = text.find(',', start);
        std::string field = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto b = field.find_first_not_of(" \t"), e = field.find_last_not_of(" \t");
        if (b == std::string::npos) fail("empty field");
        field = field.substr(b, e - b + 1);
        std::size_t digits = (field[0] == '-' || field[0] == '+') ? 1 : 0;
        if (digits == field.size()) fail("bad integer '" + field + "'");
        for (std::size_t k = digits; k < field.size(); ++k)
            if (field[k] < '0' || field[k] > '9') fail("bad integer '" + field + "'");
        if (idx >= 5) fail("too many fields");
        const bool negative = field[0] == '-';
        c.a[idx] = BigInt(field.substr(digits));
        if (negative) c.a[idx] = -c.a[idx];
        ++idx;
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (idx != 5) fail("expected 5 fields, got " + std::to_string(idx));
    return c;
}

std::string Curve::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < 5; ++i) os << (i ? "," : "") << a[i];
    os << ']';
    return os.str();
}

StandardInvariants invariants(const Curve& c) {
    const auto& [a1, a2, a3, a4, a6] = c.a;
    StandardInvariants s;
    s.b2 = a1 * a1 + 4 * a2;
    s.b4 = 2 * a4 + a1 * a3;
    s.b6 = a3 * a3 + 4 * a6;
    s.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    s.c4 = s.b2 * s.b2 - 24 * s.b4;
    s.c6 = -s.b2 * s.b2 * s.b2 + 36 * s.b2 * s.b4 - 216 * s.b6;
    s.disc = -s.b2 * s.b2 * s.b8 - 8 * s.b4 * s.b4 * s.b4 - 27 * s.b6 * s.b6 + 9 * s.b2 * s.b4 * s.b6;
    if (s.disc == 0) throw Error(ErrorKind::SingularCurve, "discriminant of " + c.to_string() + " is zero");
    s.j = Rational(s.c4 * s.c4 * s.c4) / Rational(s.disc);
    return s;
}

int valuation(const BigInt& x, std::uint64_t l) {
    if (x == 0) return infinite_valuation;
    BigInt y = abs(x);
    int v = 0;
    while (y % l == 0) {
        y /= l;
        ++v;
    }
    return v;
}

int valuation(const Rational& x, std::uint64_t l) {
    if (x == 0) return infinite_valuation;
    return valuation(numerator(x), l) - valuation(denominator(x), l);
}

std::uint64_t mod_u64(const BigInt& x, std::uint64_t m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

bool is_cm_j_invariant(const Rational& j) {
    static const BigInt table[] = {
        BigInt(0),
        BigInt(1728),
        BigInt(-3375),
        BigInt(8000),
        BigInt(-32768),
        BigInt(54000),
        BigInt(287496),
        BigInt(-884736),
        BigInt(-12288000),
        BigInt(16581375),
        BigInt(-884736000),
        BigInt("-147197952000"),
        BigInt("-262537412640768000"),
    };
    if (denominator(j) != 1) return false;
    for (const auto& t : table)
        if (numerator(j) == t) return true;
    return false;
}

}  // namespace galrep::ecq
