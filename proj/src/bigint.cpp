#include "ptower/bigint.hpp"

#include <cctype>
#include <string>

#include "ptower/error.hpp"

namespace ptower {

static bool is_decimal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

BigInt parse_bigint(std::string_view text)
{
    if (!is_decimal(text))
        fail(ErrorKind::InvalidArgument, "not a decimal integer: '" + std::string(text) + "'");
    std::string s(text);
    if (s.front() == '+')
        s.erase(0, 1);
    return BigInt(s, 10);
}

std::optional<std::int64_t> to_int64(BigInt const & v)
{
    if (!v.fits_slong_p())
        return std::nullopt;
    return static_cast<std::int64_t>(v.get_si());
}

std::string to_string(Rational const & q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0)
        fail(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace ptower
