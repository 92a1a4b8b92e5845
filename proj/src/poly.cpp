#include "dk/poly.hpp"

#include <algorithm>

namespace dk {

PolyInt PolyInt::operator+(const PolyInt& o) const {
  std::vector<long long> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return PolyInt(std::move(c));
}

PolyInt PolyInt::operator-(const PolyInt& o) const { return *this + (-o); }

PolyInt PolyInt::operator-() const {
  std::vector<long long> c = coeffs_;
  for (auto& v : c) v = -v;
  return PolyInt(std::move(c));
}

PolyInt PolyInt::operator*(const PolyInt& o) const {
  if (is_zero() || o.is_zero()) return PolyInt();
  std::vector<long long> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return PolyInt(std::move(c));
}

Int PolyInt::eval(const Int& t) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string PolyInt::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const long long c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty())
      out += (c > 0) ? "+" : "-";
    else if (c < 0)
      out += "-";
    const long long a = std::abs(c);
    if (k == 0) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += (k == 1) ? "t" : "t^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace dk
