#include "gms/bivariate.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gms {

BivariatePoly::BivariatePoly(const Rat& constant) {
  add_term(0, 0, constant);
}

BivariatePoly BivariatePoly::monomial(long a, long b, const Rat& c) {
  if (a < 0 || b < 0) {
    throw std::invalid_argument("BivariatePoly::monomial: negative exponent");
  }
  BivariatePoly p;
  p.add_term(a, b, c);
  return p;
}

void BivariatePoly::add_term(long a, long b, const Rat& c) {
  if (c == 0) return;
  auto key = Exponents{a, b};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::pair<BivariatePoly::Exponents, Rat> BivariatePoly::leading() const {
  if (terms_.empty()) {
    throw std::logic_error("BivariatePoly::leading: zero polynomial");
  }
  return *terms_.begin();
}

Rat BivariatePoly::coeff(long a, long b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rat(0) : it->second;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
  BivariatePoly r = *this;
  r += o;
  return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
  BivariatePoly r = *this;
  r -= o;
  return r;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
  BivariatePoly r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    }
  }
  return r;
}

BivariatePoly BivariatePoly::operator*(const Rat& c) const {
  BivariatePoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

BivariatePoly BivariatePoly::shifted(long a, long b) const {
  if (a < 0 || b < 0) {
    throw std::invalid_argument("BivariatePoly::shifted: negative shift");
  }
  BivariatePoly r;
  for (const auto& [e, c] : terms_) {
    r.terms_.emplace(Exponents{e.first + a, e.second + b}, c);
  }
  return r;
}

BivariatePoly BivariatePoly::pow(long e) const {
  if (e < 0) throw std::invalid_argument("BivariatePoly::pow: negative power");
  BivariatePoly r(Rat(1));
  BivariatePoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

BivariatePoly BivariatePoly::divide_exact(const BivariatePoly& d) const {
  if (d.is_zero()) {
    throw std::domain_error("BivariatePoly::divide_exact: division by zero");
  }
  BivariatePoly q;
  BivariatePoly rem = *this;
  const auto [de, dc] = d.leading();
  while (!rem.is_zero()) {
    const auto [re, rc] = rem.leading();
    const long qa = re.first - de.first;
    const long qb = re.second - de.second;
    if (qa < 0 || qb < 0) {
      throw std::domain_error(
          "BivariatePoly::divide_exact: division is not exact");
    }
    const Rat qc = rc / dc;
    q.add_term(qa, qb, qc);
    rem -= d.shifted(qa, qb) * qc;
  }
  return q;
}

std::optional<long> BivariatePoly::quasihomogeneous_weight(long p1,
                                                           long p2) const {
  std::optional<long> w;
  for (const auto& [e, c] : terms_) {
    (void)c;
    const long tw = e.first * p1 + e.second * p2;
    if (!w) {
      w = tw;
    } else if (*w != tw) {
      return std::nullopt;
    }
  }
  return w;
}

BivariatePoly::Exponents BivariatePoly::monomial_content() const {
  if (terms_.empty()) return {0, 0};
  long a = terms_.begin()->first.first;
  long b = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) {
    (void)c;
    a = std::min(a, e.first);
    b = std::min(b, e.second);
  }
  return {a, b};
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = c;
    const bool neg = c < 0;
    if (neg) mag = -mag;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    std::string vars;
    if (e.first > 0) {
      vars += "s1";
      if (e.first > 1) vars += "^" + std::to_string(e.first);
    }
    if (e.second > 0) {
      if (!vars.empty()) vars += " ";
      vars += "s2";
      if (e.second > 1) vars += "^" + std::to_string(e.second);
    }
    if (vars.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << vars;
    } else {
      out << mag.get_str() << " * " << vars;
    }
  }
  return out.str();
}

namespace {

// Recursive-descent parser for products/sums of powers of s1, s2 and
// rational constants.
class BivariateParser {
 public:
  explicit BivariateParser(const std::string& text) : text_(text) {}

  BivariatePoly parse() {
    BivariatePoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_bivariate: " + what + " at position " +
                                std::to_string(pos_) + " in \"" + text_ +
                                "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  // A factor is a number (optionally ^power, optionally /denominator), a
  // variable s1/s2 (optionally ^power), or a parenthesised expression
  // (optionally ^power).
  bool try_factor(BivariatePoly* out) {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BivariatePoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      long e = accept('^') ? integer() : 1;
      *out = inner.pow(e);
      return true;
    }
    if (c == 's') {
      if (pos_ + 1 >= text_.size()) fail("dangling 's'");
      const char which = text_[pos_ + 1];
      if (which != '1' && which != '2') fail("expected s1 or s2");
      pos_ += 2;
      long e = accept('^') ? integer() : 1;
      if (e < 0) fail("negative exponent");
      *out = which == '1' ? BivariatePoly::monomial(e, 0, Rat(1))
                          : BivariatePoly::monomial(0, e, Rat(1));
      return true;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long base = integer();
      Rat value(base);
      if (accept('^')) {
        long e = integer();
        Rat acc(1);
        for (long i = 0; i < e; ++i) acc *= Rat(base);
        value = acc;
      }
      if (accept('/')) {
        long den = integer();
        if (den == 0) fail("zero denominator");
        value /= Rat(den);
      }
      *out = BivariatePoly(value);
      return true;
    }
    return false;
  }

  // Product of adjacent factors, with optional '*' separators.
  BivariatePoly term() {
    BivariatePoly first;
    if (!try_factor(&first)) fail("expected a factor");
    for (;;) {
      size_t save = pos_;
      bool starred = accept('*');
      BivariatePoly next;
      if (try_factor(&next)) {
        first = first * next;
      } else {
        if (starred) fail("expected a factor after '*'");
        pos_ = save;
        break;
      }
    }
    return first;
  }

  BivariatePoly expr() {
    BivariatePoly acc;
    bool negate = false;
    skip_ws();
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = negate ? -term() : term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

BivariatePoly parse_bivariate(const std::string& text) {
  return BivariateParser(text).parse();
}

BivariatePoly det_bareiss(const std::vector<std::vector<BivariatePoly>>& m) {
  const size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) {
      throw std::invalid_argument("det_bareiss: matrix is not square");
    }
  }
  if (n == 0) return BivariatePoly(Rat(1));

  std::vector<std::vector<BivariatePoly>> a = m;
  bool negate = false;
  BivariatePoly prev(Rat(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    // Pivot: first row at or below k with a nonzero entry in column k.
    size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return BivariatePoly();  // singular: a zero column
    if (piv != k) {
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        BivariatePoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num.divide_exact(prev);
      }
      a[i][k] = BivariatePoly();
    }
    prev = a[k][k];
  }
  BivariatePoly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

namespace {

BivariatePoly cofactor_rec(
    const std::vector<std::vector<BivariatePoly>>& m, size_t row,
    uint64_t used_cols,
    std::unordered_map<uint64_t, BivariatePoly>& memo) {
  const size_t n = m.size();
  if (row == n) return BivariatePoly(Rat(1));
  auto it = memo.find(used_cols);
  if (it != memo.end()) return it->second;

  BivariatePoly acc;
  int sign = 1;
  for (size_t col = 0; col < n; ++col) {
    if (used_cols & (uint64_t{1} << col)) continue;
    if (!m[row][col].is_zero()) {
      BivariatePoly sub =
          cofactor_rec(m, row + 1, used_cols | (uint64_t{1} << col), memo);
      BivariatePoly contrib = m[row][col] * sub;
      if (sign < 0) contrib = -contrib;
      acc += contrib;
    }
    sign = -sign;
  }
  memo.emplace(used_cols, acc);
  return acc;
}

}  // namespace

BivariatePoly det_cofactor(const std::vector<std::vector<BivariatePoly>>& m) {
  const size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) {
      throw std::invalid_argument("det_cofactor: matrix is not square");
    }
  }
  if (n > 63) throw std::invalid_argument("det_cofactor: matrix too large");
  std::unordered_map<uint64_t, BivariatePoly> memo;
  return cofactor_rec(m, 0, 0, memo);
}

std::optional<Rat> proportional_scalar(const BivariatePoly& a,
                                       const BivariatePoly& b) {
  if (a.is_zero() && b.is_zero()) return Rat(1);
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  if (a.term_count() != b.term_count()) return std::nullopt;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  Rat ratio = ia->second / ib->second;
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return std::nullopt;
    if (ia->second != ratio * ib->second) return std::nullopt;
  }
  return ratio;
}

}  // namespace gms
