#include "arrowpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdlib>
#include <numeric>

namespace arrowpoly {

IndexVector::IndexVector(std::vector<int> entries) : entries_(std::move(entries)) {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
  auto first = std::find_if(entries_.begin(), entries_.end(), [](int e) { return e != 0; });
  if (first != entries_.end() && *first < 0)
    for (int& e : entries_) e = -e;
}

int IndexVector::entry_sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int IndexVector::abs_sum() const {
  int s = 0;
  for (int e : entries_) s += std::abs(e);
  return s;
}

Monomial::Monomial(std::vector<IndexVector> factors) {
  for (auto& f : factors)
    if (!f.is_zero()) factors_.push_back(std::move(f));
  std::sort(factors_.begin(), factors_.end());
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  std::merge(factors_.begin(), factors_.end(), o.factors_.begin(), o.factors_.end(), std::back_inserter(r.factors_));
  return r;
}

namespace {

void check_even(const Monomial& m) {
  for (const auto& f : m.factors())
    if (f.entry_sum() % 2 != 0) throw InvariantError("index vector with odd entry sum");
}

}  // namespace

HArrowPoly::HArrowPoly(LaurentZ constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

HArrowPoly HArrowPoly::term(const LaurentZ& c, const Monomial& m) {
  HArrowPoly r;
  r.add_term(m, c);
  return r;
}

HArrowPoly HArrowPoly::x(std::vector<int> v) {
  return term(LaurentZ(1), Monomial({IndexVector(std::move(v))}));
}

void HArrowPoly::add_term(const Monomial& m, const LaurentZ& c) {
  if (c.is_zero()) return;
  check_even(m);
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool HArrowPoly::is_scalar() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_unit(); });
}

LaurentZ HArrowPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentZ{} : it->second;
}

HArrowPoly& HArrowPoly::operator+=(const HArrowPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HArrowPoly& HArrowPoly::operator-=(const HArrowPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

HArrowPoly HArrowPoly::operator-() const {
  HArrowPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

HArrowPoly operator*(const HArrowPoly& a, const HArrowPoly& b) {
  HArrowPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

HArrowPoly HArrowPoly::scaled(const LaurentZ& c) const {
  HArrowPoly r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

int breadth_a(const HArrowPoly& p) {
  if (p.is_zero()) throw std::domain_error("breadth of the zero polynomial");
  int lo = INT_MAX;
  int hi = INT_MIN;
  for (const auto& [m, c] : p.terms()) {
    lo = std::min(lo, c.min_degree());
    hi = std::max(hi, c.max_degree());
  }
  return hi - lo;
}

HArrowPoly mirror_subst(const HArrowPoly& p) {
  HArrowPoly r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, c.mirrored());
  return r;
}

HArrowPoly writhe_normalize(const HArrowPoly& p, int w) {
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  const LaurentZ factor = LaurentZ::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
  return p.scaled(factor);
}

HArrowPoly pushforward(const HArrowPoly& p, const IntMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("pushforward: ragged matrix");
  HArrowPoly r;
  for (const auto& [mono, c] : p.terms()) {
    std::vector<IndexVector> image;
    for (const auto& f : mono.factors()) {
      if (f.size() > cols)
        throw std::invalid_argument("pushforward: index vector of length " + std::to_string(f.size()) +
                                    " exceeds matrix width " + std::to_string(cols));
      std::vector<int> out(m.size(), 0);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) out[i] += m[i][j] * f.entries()[j];
      image.emplace_back(std::move(out));
    }
    r.add_term(Monomial(std::move(image)), c);
  }
  return r;
}

HArrowPoly negate_slot(const HArrowPoly& p, int slot) {
  if (slot < 1) throw std::invalid_argument("negate_slot: slots are 1-based");
  HArrowPoly r;
  for (const auto& [mono, c] : p.terms()) {
    std::vector<IndexVector> image;
    for (const auto& f : mono.factors()) {
      std::vector<int> e = f.entries();
      if (static_cast<std::size_t>(slot) <= e.size()) e[static_cast<std::size_t>(slot - 1)] *= -1;
      image.emplace_back(std::move(e));
    }
    r.add_term(Monomial(std::move(image)), c);
  }
  return r;
}

LaurentZ specialize_bracket(const HArrowPoly& p) {
  LaurentZ sum;
  for (const auto& [m, c] : p.terms()) sum += c;
  return sum;
}

LaurentZ specialize_jones_t(const HArrowPoly& p) { return specialize_bracket(p).mirrored(); }

bool is_arrow_form(const HArrowPoly& p) {
  for (const auto& [m, c] : p.terms())
    for (const auto& f : m.factors())
      if (f.size() != 1 || f.entries()[0] % 2 != 0) return false;
  return true;
}

KPoly specialize_arrow_k(const HArrowPoly& p) {
  KPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> ks;
    for (const auto& f : m.factors()) {
      if (f.size() != 1) throw InvariantError("arrow form requires single-slot indices");
      if (f.entries()[0] % 2 != 0) throw InvariantError("arrow form requires even indices");
      ks.push_back(f.entries()[0] / 2);
    }
    out.emplace(std::move(ks), c);
  }
  return out;
}

// ---- rendering ----------------------------------------------------------

namespace {

std::string factor_string(const IndexVector& f, VarStyle style) {
  std::string s;
  if (style == VarStyle::K) {
    if (f.size() != 1 || f.entries()[0] % 2 != 0) throw InvariantError("K-style rendering requires arrow form");
    return "K[" + std::to_string(f.entries()[0] / 2) + "]";
  }
  s = "X[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f.entries()[i]);
  }
  return s + "]";
}

}  // namespace

std::string monomial_string(const Monomial& m, VarStyle style) {
  if (m.is_unit()) return "1";
  std::string out;
  const auto& fs = m.factors();
  for (std::size_t i = 0; i < fs.size();) {
    std::size_t j = i;
    while (j < fs.size() && fs[j] == fs[i]) ++j;
    if (!out.empty()) out += '*';
    out += factor_string(fs[i], style);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string canonical_string(const HArrowPoly& p, VarStyle style) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (m.is_unit()) {
      std::string s = c.to_string();
      if (out.empty()) {
        out = s;
      } else if (s[0] == '-') {
        out += " - " + s.substr(1);
      } else {
        out += " + " + s;
      }
      continue;
    }
    const std::string var = monomial_string(m, style);
    std::string piece;
    bool negative = false;
    if (c.term_count() == 1) {
      const auto [e, k] = c.terms().front();
      negative = k < 0;
      const uint64_t mag = negative ? 0 - static_cast<uint64_t>(k) : static_cast<uint64_t>(k);
      if (mag != 1) piece += std::to_string(mag) + "*";
      if (e != 0) piece += (e == 1 ? std::string("A") : "A^" + std::to_string(e)) + "*";
      piece += var;
    } else {
      piece = "(" + c.to_string() + ")*" + var;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + piece;
    } else {
      out += (negative ? " - " : " + ") + piece;
    }
  }
  return out;
}

nlohmann::json to_json(const HArrowPoly& p, VarStyle style) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [e, k] : c.terms()) coeffs[std::to_string(e)] = k;
    j[monomial_string(m, style)] = std::move(coeffs);
  }
  return j;
}

// ---- parsing ------------------------------------------------------------

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  HArrowPoly parse() {
    HArrowPoly p = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    errno = 0;
    const long v = std::strtol(std::string(s_.substr(start, pos_ - start)).c_str(), nullptr, 10);
    if (errno == ERANGE) fail("integer out of range");
    return v;
  }

  // An exponent, optionally parenthesized as in A^(-4).
  long exponent() {
    if (!accept('(')) return integer();
    const long e = integer();
    expect(')');
    return e;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == 'A' || c == 'K' || c == 'X' || std::isdigit(static_cast<unsigned char>(c));
  }

  unsigned power() {
    if (!accept('^')) return 1;
    const long e = exponent();
    if (e < 0) fail("negative power of a variable");
    return static_cast<unsigned>(e);
  }

  HArrowPoly sum() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    HArrowPoly acc = product();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  HArrowPoly product() {
    HArrowPoly acc = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        // Only division by powers of A, as in 1/A^2.
        acc *= inverse_a_power();
      } else if (starts_factor()) {
        // Juxtaposition, as in A^4 K[1].
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  HArrowPoly inverse_a_power() {
    skip_ws();
    const bool paren = accept('(');
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != 'A') fail("only division by A^k is supported");
    ++pos_;
    long e = 1;
    if (accept('^')) e = exponent();
    if (paren) expect(')');
    return HArrowPoly(LaurentZ::monomial(1, static_cast<int>(-e)));
  }

  static HArrowPoly raise(const HArrowPoly& base, unsigned n) {
    HArrowPoly r(1);
    for (unsigned i = 0; i < n; ++i) r *= base;
    return r;
  }

  HArrowPoly factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      HArrowPoly inner = sum();
      expect(')');
      return raise(inner, power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return HArrowPoly(LaurentZ(integer()));
    if (c == 'A') {
      ++pos_;
      long e = 1;
      if (accept('^')) e = exponent();
      return HArrowPoly(LaurentZ::monomial(1, static_cast<int>(e)));
    }
    if (c == 'K') {
      ++pos_;
      expect('[');
      const long n = integer();
      expect(']');
      return raise(HArrowPoly::k(static_cast<int>(n)), power());
    }
    if (c == 'X') {
      ++pos_;
      expect('[');
      std::vector<int> v{static_cast<int>(integer())};
      while (accept(',')) v.push_back(static_cast<int>(integer()));
      expect(']');
      return raise(HArrowPoly::x(std::move(v)), power());
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

HArrowPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace arrowpoly
