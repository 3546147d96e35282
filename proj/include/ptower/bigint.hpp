#ifndef PTOWER_BIGINT_HPP
#define PTOWER_BIGINT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ptower {

using BigInt = mpz_class;
using Rational = mpq_class;

/* Decimal with optional sign; raises InvalidArgument on anything else. */
BigInt parse_bigint(std::string_view text);

std::optional<std::int64_t> to_int64(BigInt const & v);

inline std::string to_string(BigInt const & v) { return v.get_str(); }

/* "num/den", integers included ("4/1"). */
std::string to_string(Rational const & q);

Rational parse_rational(std::string_view text);

} // namespace ptower

#endif /* PTOWER_BIGINT_HPP */
