#include "milnor/numeric.hpp"

#include <cctype>

namespace milnor {

Rat parse_rational(const std::string& token) {
  if (token.empty()) fail(Errc::syntax_error, "empty rational token");
  // mpq_class accepts a superset (whitespace, hex); insist on plain decimal.
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < token.size() && std::isdigit(static_cast<unsigned char>(token[j]))) ++j;
    return j;
  };
  if (token[i] == '+' || token[i] == '-') ++i;
  std::size_t after_num = digits(i);
  if (after_num == i) fail(Errc::syntax_error, "bad rational token '" + token + "'");
  if (after_num < token.size()) {
    if (token[after_num] != '/') fail(Errc::syntax_error, "bad rational token '" + token + "'");
    std::size_t den_start = after_num + 1;
    std::size_t j = den_start;
    if (j < token.size() && (token[j] == '+' || token[j] == '-'))
      fail(Errc::syntax_error, "signed denominator in '" + token + "'");
    std::size_t after_den = digits(den_start);
    if (after_den == den_start || after_den != token.size())
      fail(Errc::syntax_error, "bad rational token '" + token + "'");
  }
  Rat q;
  try {
    q = Rat(token);
  } catch (const std::invalid_argument&) {
    fail(Errc::syntax_error, "bad rational token '" + token + "'");
  }
  if (sgn(q.get_den()) == 0) fail(Errc::syntax_error, "zero denominator in '" + token + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Cyc3& x) {
  if (sgn(x.b) == 0) return x.a.get_str();
  std::string s;
  bool have_a = sgn(x.a) != 0;
  if (have_a) s += x.a.get_str();
  std::string babs = Rat(abs(x.b)).get_str();
  if (sgn(x.b) > 0)
    s += have_a ? "+" : "";
  else
    s += "-";
  if (babs != "1") s += babs + "*";
  s += "w";
  return s;
}

}  // namespace milnor
