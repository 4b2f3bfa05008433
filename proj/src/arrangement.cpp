#include "milnor/arrangement.hpp"

#include <fstream>
#include <sstream>

namespace milnor {

void canonicalize_coeffs(std::vector<Rat>& c) {
  // common denominator
  Int den(1);
  for (const Rat& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> z;
  z.reserve(c.size());
  for (const Rat& q : c) z.push_back(Int(q.get_num() * (den / q.get_den())));
  // content and sign
  Int g(0);
  for (const Int& v : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  int lead_sign = 0;
  for (const Int& v : z) {
    if (v != 0) {
      lead_sign = sgn(v);
      break;
    }
  }
  if (g == 0 || lead_sign == 0) return;  // zero vector left untouched
  if (lead_sign < 0) g = -g;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(z[i] / g);
}

void canonicalize_coeffs(std::vector<Cyc3>& c) {
  for (const Cyc3& v : c) {
    if (!is_zero(v)) {
      Cyc3 inv = v.inverse();
      for (Cyc3& x : c) x *= inv;
      return;
    }
  }
}

namespace {

// Strip comments, return significant lines with their 1-based numbers.
std::vector<std::pair<int, std::string>> significant_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int num = 0;
  while (std::getline(in, line)) {
    ++num;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) out.emplace_back(num, line);
  }
  return out;
}

}  // namespace

Arrangement parse_arrangement(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) fail(Errc::syntax_error, "empty input: expected a 'dim n' header");

  Arrangement a;
  {
    std::istringstream hdr(lines[0].second);
    std::string kw;
    long n = 0;
    if (!(hdr >> kw) || kw != "dim" || !(hdr >> n))
      fail(Errc::syntax_error, "line " + std::to_string(lines[0].first) +
                                   ": expected 'dim n', got '" + lines[0].second + "'");
    std::string extra;
    if (hdr >> extra)
      fail(Errc::syntax_error,
           "line " + std::to_string(lines[0].first) + ": trailing tokens after 'dim n'");
    if (n < 1) fail(Errc::invalid_dimension, "ambient dimension must be >= 1");
    a.dim = static_cast<int>(n);
  }

  for (std::size_t li = 1; li < lines.size(); ++li) {
    std::istringstream row(lines[li].second);
    LinearForm<Rat> f;
    std::string tok;
    while (row >> tok) {
      try {
        f.coeffs.push_back(parse_rational(tok));
      } catch (const Error& e) {
        fail(Errc::syntax_error, "line " + std::to_string(lines[li].first) + ": " + e.what());
      }
    }
    if (static_cast<int>(f.coeffs.size()) != a.dim + 1)
      fail(Errc::dimension_mismatch, "line " + std::to_string(lines[li].first) + ": expected " +
                                         std::to_string(a.dim + 1) + " coefficients, got " +
                                         std::to_string(f.coeffs.size()));
    a.hyperplanes.push_back(std::move(f));
  }
  if (a.hyperplanes.empty())
    fail(Errc::syntax_error, "expected at least one hyperplane after the 'dim n' header");

  canonicalize_and_validate(a);
  return a;
}

Arrangement parse_arrangement(const std::string& text) {
  std::istringstream in(text);
  return parse_arrangement(in);
}

Arrangement load_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  return parse_arrangement(in);
}

std::string serialize_arrangement(const Arrangement& a) {
  std::ostringstream out;
  out << "dim " << a.dim << "\n";
  for (const auto& h : a.hyperplanes) {
    for (std::size_t i = 0; i < h.coeffs.size(); ++i) {
      if (i) out << " ";
      out << h.coeffs[i].get_str();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace milnor
