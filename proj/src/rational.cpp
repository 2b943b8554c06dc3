#include "innc/rational.hpp"

#include "innc/errors.hpp"

#include <cctype>

namespace innc {

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0)
        throw DomainError("zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        i = 1;
    if (i == text.size())
        throw InputError("malformed rational '" + std::string(whole) + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw InputError("malformed rational '" + std::string(whole) + "'");
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q) { return q.get_str(10); }
std::string to_string(const Integer &z) { return z.get_str(10); }

Integer floor(const Rational &q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Rational mod_one(const Rational &q) { return q - Rational(floor(q)); }

Integer lcm(const Integer &a, const Integer &b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Integer denominator_lcm(const std::vector<Rational> &values) {
    Integer out = 1;
    for (const auto &v : values)
        out = lcm(out, v.get_den());
    return out;
}

long to_long(const Integer &z) {
    if (!z.fits_slong_p())
        throw DomainError("integer " + z.get_str() + " does not fit in a machine word");
    return z.get_si();
}

} // namespace innc
