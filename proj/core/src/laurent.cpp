#include "arrowpoly/laurent.hpp"

#include <algorithm>

namespace arrowpoly {

LaurentZ LaurentZ::monomial(int64_t coeff, int exponent) {
  LaurentZ r;
  if (coeff != 0) {
    r.low_ = exponent;
    r.coeffs_.push_back(coeff);
  }
  return r;
}

LaurentZ LaurentZ::delta() {
  LaurentZ r;
  r.low_ = -2;
  r.coeffs_ = {-1, 0, 0, 0, -1};
  return r;
}

LaurentZ LaurentZ::from_terms(const std::vector<std::pair<int, int64_t>>& terms) {
  LaurentZ r;
  for (const auto& [e, c] : terms) r += monomial(c, e);
  return r;
}

int LaurentZ::min_degree() const {
  if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
  return low_;
}

int LaurentZ::max_degree() const {
  if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

int64_t LaurentZ::coeff(int exponent) const {
  const long k = static_cast<long>(exponent) - low_;
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::vector<std::pair<int, int64_t>> LaurentZ::terms() const {
  std::vector<std::pair<int, int64_t>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  return out;
}

std::size_t LaurentZ::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](int64_t c) { return c != 0; }));
}

void LaurentZ::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<int64_t>(coeffs_.begin() + static_cast<long>(first), coeffs_.begin() + static_cast<long>(last));
    low_ += static_cast<int>(first);
  }
}

LaurentZ& LaurentZ::operator+=(const LaurentZ& o) {
  if (o.coeffs_.empty()) return *this;
  if (coeffs_.empty()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(max_degree(), o.max_degree());
  if (lo < low_ || hi > max_degree()) {
    std::vector<int64_t> grown(static_cast<std::size_t>(hi - lo + 1), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), grown.begin() + (low_ - lo));
    coeffs_ = std::move(grown);
    low_ = lo;
  }
  const std::size_t off = static_cast<std::size_t>(o.low_ - low_);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[off + k] = checked::add(coeffs_[off + k], o.coeffs_[k]);
  trim();
  return *this;
}

LaurentZ& LaurentZ::operator-=(const LaurentZ& o) { return *this += -o; }

LaurentZ LaurentZ::operator-() const {
  LaurentZ r = *this;
  for (auto& c : r.coeffs_) c = checked::neg(c);
  return r;
}

LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
  LaurentZ r;
  if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] = checked::add(r.coeffs_[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j]));
  }
  r.trim();
  return r;
}

LaurentZ& LaurentZ::operator*=(const LaurentZ& o) { return *this = *this * o; }

LaurentZ LaurentZ::mirrored() const {
  LaurentZ r;
  if (coeffs_.empty()) return r;
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.low_ = -max_degree();
  return r;
}

LaurentZ LaurentZ::pow(unsigned n) const {
  LaurentZ result(1);
  LaurentZ base = *this;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

bool operator<(const LaurentZ& a, const LaurentZ& b) {
  if (a.low_ != b.low_) return a.low_ < b.low_;
  return a.coeffs_ < b.coeffs_;
}

std::size_t LaurentZ::hash() const {
  std::size_t h = std::hash<int>{}(low_) * 0x9e3779b97f4a7c15ULL;
  for (int64_t c : coeffs_) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
  return h;
}

namespace {

void append_signed(std::string& out, int64_t c, int e, const std::string& var, bool first) {
  const bool negative = c < 0;
  const uint64_t mag = negative ? 0 - static_cast<uint64_t>(c) : static_cast<uint64_t>(c);
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (e == 0) {
    out += std::to_string(mag);
    return;
  }
  if (mag != 1) {
    out += std::to_string(mag);
    out += '*';
  }
  out += var;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace

std::string LaurentZ::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    append_signed(out, c, e, var, first);
    first = false;
  }
  return out;
}

}  // namespace arrowpoly
