#ifndef PDET_SCALAR_HPP
#define PDET_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pdet {

/// Exact rational number, always held in canonical form (reduced, positive
/// denominator). Expression templates are off so `auto` behaves.
using Scalar = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "p/q" or "p"; denominators are never written as 1.
inline std::string to_string(const Scalar& x) { return x.str(); }

inline bool is_integer(const Scalar& x) {
  return boost::multiprecision::denominator(x) == 1;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses an integer or a fraction "p/q" (optional leading sign on p).
inline Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  if (negative) p = -p;
  return Scalar(p, q);
}

/// (-1)^k as a scalar.
inline Scalar sign_power(std::size_t k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

}  // namespace pdet

#endif  // PDET_SCALAR_HPP
