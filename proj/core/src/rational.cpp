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

#include "fockop/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace fockop {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("invalid rational literal '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (negative) n = -n;
  return BigRational(n, d);
}

BigRational& BigRational::operator+=(const BigRational& o) {
  value_ += o.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  value_ -= o.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  value_ *= o.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

double log_of(const BigInt& x) {
  if (sgn(x) <= 0) throw std::domain_error("log of non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

double BigRational::log() const {
  if (sign() <= 0) throw std::domain_error("log of non-positive rational");
  return log_of(value_.get_num()) - log_of(value_.get_den());
}

std::string BigRational::to_string() const { return value_.get_str(10); }

std::string BigRational::to_fraction_string() const {
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

BigRational abs(const BigRational& x) { return x.sign() < 0 ? -x : x; }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  BigRational r = re * o.re - im * o.im;
  BigRational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const BigRational d = o.norm2();
  if (d.is_zero()) throw std::domain_error("gaussian rational division by zero");
  *this *= o.conj();
  re /= d;
  im /= d;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im.is_zero()) return re.to_string();
  std::string imag;
  const BigRational mag = abs(im);
  imag = mag == BigRational(1) ? "i" : mag.to_string() + "*i";
  if (re.is_zero()) return im.sign() < 0 ? "-" + imag : imag;
  return "(" + re.to_string() + (im.sign() < 0 ? "-" : "+") + imag + ")";
}

}  // namespace fockop
