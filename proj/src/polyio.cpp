#include "fzeta/polyio.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fzeta {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

long parse_exponent(const std::string& s) {
  const std::string t = strip(s);
  try {
    std::size_t used = 0;
    long v = std::stol(t, &used);
    if (used != t.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("bad exponent '" + t + "' in polynomial");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::map<long, Int> parse_terms(const std::string& text) {
  const std::string t = strip(text);
  if (t.empty()) throw std::invalid_argument("empty polynomial text");
  std::map<long, Int> terms;
  if (t.find(':') != std::string::npos) {
    for (const auto& piece : split(t, ';')) {
      const std::string p = strip(piece);
      if (p.empty()) continue;  // tolerate a trailing ';'
      const auto colon = p.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("expected 'exponent:coefficient' in '" + p +
                                    "'");
      long k = parse_exponent(p.substr(0, colon));
      terms[k] += parse_int(strip(p.substr(colon + 1)));
    }
  } else {
    long k = 0;
    for (const auto& piece : split(t, ','))
      terms[k++] = parse_int(strip(piece));
  }
  return terms;
}

}  // namespace

LaurentPoly parse_laurent(const std::string& text) {
  auto terms = parse_terms(text);
  LaurentPoly acc;
  for (const auto& [k, c] : terms) acc = acc + LaurentPoly::monomial(k, c);
  return acc;
}

IntPoly parse_poly(const std::string& text) {
  LaurentPoly l = parse_laurent(text);
  if (!l.is_polynomial())
    throw std::invalid_argument(
        "negative exponent not allowed here (got exponent " +
        std::to_string(l.min_exp()) + ")");
  return l.as_polynomial();
}

std::string format_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return "0:0";
  std::string out;
  for (const auto& [k, c] : p.terms()) {
    if (!out.empty()) out += ';';
    out += std::to_string(k) + ':' + to_dec(c);
  }
  return out;
}

std::string format_poly(const IntPoly& p) {
  return format_laurent(LaurentPoly(p));
}

namespace {

std::string pretty_terms(const std::map<long, Int>& terms,
                         const std::string& var) {
  if (terms.empty()) return "0";
  std::string out;
  // Highest degree first.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const long k = it->first;
    const Int& c = it->second;
    const bool neg = c < 0;
    Int a = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = (a == 1);
    if (k == 0) {
      out += to_dec(a);
    } else {
      if (!unit) out += to_dec(a) + "*";
      out += var;
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace

std::string pretty_laurent(const LaurentPoly& p, const std::string& var) {
  return pretty_terms(p.terms(), var);
}

std::string pretty_poly(const IntPoly& p, const std::string& var) {
  return pretty_laurent(LaurentPoly(p), var);
}

}  // namespace fzeta
