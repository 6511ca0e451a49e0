#include "bilag/rational.hpp"

namespace bilag {

std::string to_string(const Rational& r) {
    const Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            // reject anything cpp_int would not: sign then digits only
            std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (i == s.size()) return std::nullopt;
            for (; i < s.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
            return Rational(Int(s));
        }
        const std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (p.empty() || q.empty() || q.find('/') != std::string::npos) return std::nullopt;
        auto pr = parse_rational(p), qr = parse_rational(q);
        if (!pr || !qr || *qr == 0) return std::nullopt;
        return *pr / *qr;
    } catch (...) {
        return std::nullopt;
    }
}

Int height(const Rational& r) {
    Int num = numerator(r);
    if (num < 0) num = -num;
    const Int den = denominator(r);
    return num > den ? num : den;
}

} // namespace bilag
