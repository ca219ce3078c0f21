#include "maedalab/polyparse.hpp"

#include <cctype>
#include <map>
#include <string>

#include "maedalab/error.hpp"

namespace maedalab {

namespace {

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
  fail(ErrorCode::kParse, "cannot parse polynomial '" + std::string(text) + "': " + why);
}

BigInt parse_integer(std::string_view token, std::string_view text) {
  std::string s(token);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) parse_error(text, "empty coefficient");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) parse_error(text, "bad integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

IntPolynomial parse_list(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::string token;
  auto flush = [&] {
    coeffs.push_back(parse_integer(token, text));
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return IntPolynomial(std::move(coeffs));
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }
  }

  IntPolynomial parse() {
    if (s_.empty()) parse_error(text_, "empty input");
    std::map<unsigned, BigInt> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        parse_error(text_, "expected '+' or '-' at position " + std::to_string(pos_));
      }
      first = false;
      auto [coef, exponent] = term();
      terms[exponent] += sign * coef;
    }
    unsigned top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<BigInt> coeffs(top + 1, BigInt(0));
    for (const auto& [e, c] : terms) coeffs[e] = c;
    return IntPolynomial(std::move(coeffs));
  }

 private:
  std::pair<BigInt, unsigned> term() {
    BigInt coef(1);
    const std::size_t digits_start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const bool has_coef = pos_ > digits_start;
    if (has_coef) coef = BigInt(s_.substr(digits_start, pos_ - digits_start), 10);
    if (pos_ < s_.size() && s_[pos_] == '*') {
      if (!has_coef) parse_error(text_, "'*' without coefficient");
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] != 'x') parse_error(text_, "expected x after '*'");
    }
    if (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      unsigned exponent = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        const std::size_t e_start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == e_start) parse_error(text_, "missing exponent after '^'");
        const std::string digits = s_.substr(e_start, pos_ - e_start);
        if (digits.size() > 6) parse_error(text_, "exponent too large");
        exponent = static_cast<unsigned>(std::stoul(digits));
      }
      return {coef, exponent};
    }
    if (!has_coef) {
      parse_error(text_, pos_ < s_.size() ? "unexpected character '" + std::string(1, s_[pos_]) + "'"
                                          : "dangling sign");
    }
    return {coef, 0};
  }

  std::string_view text_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
  IntPolynomial f = text.find(',') != std::string_view::npos ? parse_list(text)
                                                             : TermParser(text).parse();
  require(!f.is_zero(), ErrorCode::kParse, "polynomial '" + std::string(text) + "' is zero");
  return f;
}

}  // namespace maedalab
