#include "tqs/rational.hpp"

#include "tqs/errors.hpp"

#include <cctype>
#include <functional>

namespace tqs {

std::string to_wire(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_text(num)) throw ParseError("", "malformed rational \"" + std::string(text) + "\"");
    if (slash == std::string_view::npos) return Rational(parse_integer(num));
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("", "malformed rational \"" + std::string(text) + "\"");
    Integer d = parse_integer(den);
    if (d == 0) throw ParseError("", "zero denominator in \"" + std::string(text) + "\"");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

std::size_t hash_value(const Rational& q) noexcept {
    auto limb = [](const Integer& z) -> std::size_t {
        const mpz_srcptr p = z.get_mpz_t();
        std::size_t h = static_cast<std::size_t>(mpz_size(p)) * 31u + static_cast<std::size_t>(mpz_sgn(p) + 1);
        if (mpz_size(p) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(p, 0)) * 0x9e3779b97f4a7c15ull;
        return h;
    };
    return limb(q.get_num()) * 1000003u ^ limb(q.get_den());
}

} // namespace tqs
