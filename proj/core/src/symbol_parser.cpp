// Copyright 2026 The fockop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>

#include "fockop/symbol.hpp"

namespace fockop {

namespace {

// Exponents above this would only ever come from typos and can blow up
// expansion of parenthesized powers.
constexpr unsigned long kMaxExponent = 256;

class SymbolParser {
public:
  SymbolParser(std::string_view text, std::size_t dimension) : text_(text), n_(dimension) {}

  SymbolPolynomial parse() {
    SymbolPolynomial out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const { throw ParseError(pos, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < text_.size() ? "expected '" + std::string(1, c) + "' but found '" + text_[pos_] + "'"
                               : "expected '" + std::string(1, c) + "' at end of input");
    }
  }

  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  std::string uint_digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  SymbolPolynomial expr() {
    skip_space();
    const bool negate_head = accept('-');
    SymbolPolynomial acc = term();
    if (negate_head) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  SymbolPolynomial term() {
    SymbolPolynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  SymbolPolynomial factor() {
    SymbolPolynomial b = base();
    if (!accept('^')) return b;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    const std::size_t at = pos_;
    const std::string digits = uint_digits();
    if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
      fail_at(at, "exponent exceeds " + std::to_string(kMaxExponent));
    }
    return b.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  // Returns the 0-based variable index after having consumed "z".
  std::size_t variable_suffix(std::size_t start) {
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t digits_at = pos_;
      const std::string digits = uint_digits();
      const unsigned long j = digits.size() > 9 ? 0 : std::stoul(digits);
      if (j < 1 || j > n_) {
        fail_at(digits_at, "variable z" + digits + " out of range 1.." + std::to_string(n_));
      }
      return j - 1;
    }
    if (n_ != 1) fail_at(start, "bare 'z' is only allowed when n = 1; use z1..z" + std::to_string(n_));
    return 0;
  }

  SymbolPolynomial base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (accept_word("conj")) {
      expect('(');
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != 'z') fail("conj() takes a single variable");
      ++pos_;
      const std::size_t j = variable_suffix(start);
      expect(')');
      return SymbolPolynomial::conj_variable(n_, j + 1);
    }
    if (c == 'z') {
      ++pos_;
      const std::size_t j = variable_suffix(start);
      return SymbolPolynomial::variable(n_, j + 1);
    }
    if (c == 'i') {
      ++pos_;
      return SymbolPolynomial::constant(n_, GaussianRational::i());
    }
    if (c == '(') {
      ++pos_;
      SymbolPolynomial inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = uint_digits();
      BigInt numerator(num, 10);
      BigInt denominator = 1;
      if (accept('/')) {
        const std::size_t den_at = pos_;
        denominator = BigInt(uint_digits(), 10);
        if (denominator == 0) fail_at(den_at, "zero denominator");
      }
      return SymbolPolynomial::constant(n_, GaussianRational(BigRational(numerator, denominator)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + message),
      position_(position),
      detail_(message) {}

SymbolPolynomial parse_symbol(std::string_view text, std::size_t dimension) {
  return SymbolParser(text, dimension).parse();
}

}  // namespace fockop
