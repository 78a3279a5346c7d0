#include "ffsieve/poly_io.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace ffsieve {

std::string to_string(const Field& F, Elem c) {
  if (F.in_prime_field(c)) return std::to_string(c);
  const auto r = F.residues(c);
  std::string s = "[";
  for (std::size_t i = r.size(); i-- > 0;) {
    s += std::to_string(r[i]);
    if (i) s += ",";
  }
  return s + "]";
}

std::string to_string(const Field& F, const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += to_string(F, c[i]);
      continue;
    }
    if (c[i] != 1) out += to_string(F, c[i]) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const Field& F, std::string_view s) : F_(F), s_(s) {}

  Poly parse() {
    std::map<int, Elem> terms;
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      auto [deg, coef] = term();
      if (negate) coef = F_.neg(coef);
      terms[deg] = F_.add(terms[deg], coef);
      skip_ws();
      if (pos_ == s_.size()) break;
      const char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negate = op == '-';
      ++pos_;
    }
    if (terms.empty()) return Poly();
    std::vector<Elem> c(static_cast<std::size_t>(terms.rbegin()->first) + 1, 0);
    for (auto [d, v] : terms) c[d] = v;
    return Poly(std::move(c));
  }

  Elem elem_only() {
    skip_ws();
    Elem c = coefficient();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return c;
  }

 private:
  std::pair<int, Elem> term() {
    skip_ws();
    Elem coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '[') {
      coef = coefficient();
      have_coef = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 't') fail("expected 't' after '*'");
      }
    }
    if (peek() == 't') {
      ++pos_;
      skip_ws();
      int deg = 1;
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        deg = static_cast<int>(integer());
      }
      return {deg, coef};
    }
    if (!have_coef) fail("expected coefficient or 't'");
    return {0, coef};
  }

  Elem coefficient() {
    if (peek() == '[') {
      ++pos_;
      std::vector<long long> digits;  // highest power first
      for (;;) {
        skip_ws();
        digits.push_back(integer());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ']') {
          ++pos_;
          break;
        }
        fail("expected ',' or ']' in coefficient tuple");
      }
      if (digits.size() != F_.degree()) fail("coefficient tuple length must equal the extension degree");
      std::vector<std::uint32_t> r(digits.size());
      for (std::size_t i = 0; i < digits.size(); ++i)
        r[digits.size() - 1 - i] = F_.from_int(digits[i]);
      return F_.from_residues(r);
    }
    return F_.from_int(integer());
  }

  long long integer() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1LL << 40)) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  const Field& F_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const Field& F, std::string_view text) { return Parser(F, text).parse(); }

Elem parse_elem(const Field& F, std::string_view text) { return Parser(F, text).elem_only(); }

std::vector<Poly> parse_poly_list(const Field& F, std::string_view text) {
  std::vector<Poly> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char ch = i < text.size() ? text[i] : ',';
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(parse_poly(F, text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace ffsieve
