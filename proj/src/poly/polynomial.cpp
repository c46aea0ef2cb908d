#include "qbid/poly/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace qbid {

Polynomial::Polynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<BigRational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial(std::vector<BigRational>{c}); }

Polynomial Polynomial::monomial(const BigRational& c, std::size_t power) {
  std::vector<BigRational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::x() { return monomial(BigRational(1), 1); }

BigRational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial pow(const Polynomial& a, std::uint64_t e) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = a;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial derive(const Polynomial& a, std::uint64_t order) {
  const auto coeffs = a.coefficients();
  if (order >= coeffs.size()) return {};
  std::vector<BigRational> out(coeffs.size() - order);
  for (std::size_t i = order; i < coeffs.size(); ++i) {
    // falling factorial i (i-1) ... (i-order+1)
    BigInt factor = 1;
    for (std::uint64_t j = 0; j < order; ++j) factor *= static_cast<unsigned long>(i - j);
    out[i - order] = coeffs[i] * BigRational(factor);
  }
  return Polynomial(std::move(out));
}

BigRational eval_rational(const Polynomial& a, const BigRational& x0) {
  BigRational acc;
  const auto coeffs = a.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x0;
    acc += *it;
  }
  return acc;
}

double eval_double(const Polynomial& a, double x0) {
  double acc = 0.0;
  const auto coeffs = a.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x0 + it->to_double();
  return acc;
}

DivMod divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("divmod: zero divisor");
  const auto dcoeffs = divisor.coefficients();
  const BigRational lead_inv = dcoeffs.back().inverse();
  const std::size_t dsize = dcoeffs.size();

  std::vector<BigRational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  if (rem.size() < dsize) return {Polynomial{}, dividend};

  std::vector<BigRational> quot(rem.size() - dsize + 1);
  for (std::size_t top = rem.size(); top-- >= dsize;) {
    if (rem[top].is_zero()) continue;
    const BigRational factor = rem[top] * lead_inv;
    const std::size_t shift = top - (dsize - 1);
    quot[shift] = factor;
    for (std::size_t j = 0; j < dsize; ++j) rem[shift + j] -= factor * dcoeffs[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string to_text(const Polynomial& a) {
  const auto coeffs = a.coefficients();
  if (coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const BigRational& c = coeffs[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const BigRational magnitude = c.abs();
    if (i == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (magnitude != BigRational(1)) {
      out += magnitude.to_string();
      out += '*';
    }
    out += 'X';
    if (i > 1) {
      out += '^';
      out += std::to_string(i);
    }
  }
  return out;
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view text) : text_(text) {}

  Polynomial run() {
    skip_blanks();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Polynomial result = term(/*sign=*/1);
    for (;;) {
      skip_blanks();
      if (at_end()) break;
      const char op = text_[pos_];
      if (op != '+' && op != '-') throw ParseError(std::string("expected '+' or '-', found '") + op + "'", pos_);
      ++pos_;
      skip_blanks();
      result += term(op == '-' ? -1 : 1);
    }
    return result;
  }

 private:
  Polynomial term(int sign) {
    if (peek('-')) {
      sign = -sign;
      ++pos_;
    }
    if (peek('X')) {
      ++pos_;
      return Polynomial::monomial(BigRational(sign), exponent());
    }
    BigRational c = coefficient();
    if (sign < 0) c = -c;
    skip_blanks();
    if (!peek('*')) return Polynomial::constant(c);
    ++pos_;
    skip_blanks();
    if (!peek('X')) throw ParseError("expected 'X' after '*'", pos_);
    ++pos_;
    return Polynomial::monomial(c, exponent());
  }

  std::size_t exponent() {
    const std::size_t save = pos_;
    skip_blanks();
    if (!peek('^')) {
      pos_ = save;
      return 1;
    }
    ++pos_;
    skip_blanks();
    const std::size_t start = pos_;
    const std::string digits = unsigned_digits();
    try {
      const unsigned long long e = std::stoull(digits);
      if (e > 1'000'000) throw ParseError("exponent too large", start);
      return static_cast<std::size_t>(e);
    } catch (const std::out_of_range&) {
      throw ParseError("exponent too large", start);
    }
  }

  BigRational coefficient() {
    const std::string num = unsigned_digits();
    std::string den = "1";
    if (peek('/')) {
      ++pos_;
      const std::size_t den_pos = pos_;
      den = unsigned_digits();
      if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", den_pos);
    }
    return BigRational(BigInt(num, 10), BigInt(den, 10));
  }

  std::string unsigned_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) {
      if (at_end()) throw ParseError("unexpected end of input", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_blanks() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool peek(char c) const { return !at_end() && text_[pos_] == c; }
  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text) { return TextParser(text).run(); }

}  // namespace qbid
