#include "fold9/rational.hpp"

#include "fold9/error.hpp"

namespace fold9 {

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto integer = [&](std::string_view part) {
    const std::size_t sign = !part.empty() && part.front() == '-';
    if (part.size() == sign || part.find_first_not_of("0123456789", sign) != std::string_view::npos)
      throw Error(Errc::ParseError, "not a rational: " + std::string(text));
    return boost::multiprecision::cpp_int(std::string(part));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(integer(text));
  const auto den = integer(text.substr(slash + 1));
  if (den <= 0) throw Error(Errc::ParseError, "denominator must be positive: " + std::string(text));
  return Rational(integer(text.substr(0, slash)), den);
}

}  // namespace fold9
