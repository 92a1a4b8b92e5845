#pragma once

#include <string>
#include <vector>

#include "dk/numeric.hpp"

namespace dk {

/// Dense integer polynomial in the formal variable t.
class PolyInt {
public:
  PolyInt() = default;
  PolyInt(long long constant) {  // NOLINT: implicit by design
    if (constant != 0) coeffs_.push_back(constant);
  }
  explicit PolyInt(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static PolyInt t_power(int k) {
    std::vector<long long> c(k + 1, 0);
    c[k] = 1;
    return PolyInt(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long coeff(int k) const {
    return (k >= 0 && k <= degree()) ? coeffs_[k] : 0;
  }
  const std::vector<long long>& coeffs() const { return coeffs_; }

  PolyInt operator+(const PolyInt& o) const;
  PolyInt operator-(const PolyInt& o) const;
  PolyInt operator*(const PolyInt& o) const;
  PolyInt operator-() const;
  bool operator==(const PolyInt&) const = default;

  Int eval(const Int& t) const;
  std::string to_string() const;  // e.g. "t^2-2*t+1"

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<long long> coeffs_;  // coeffs_[k] multiplies t^k
};

}  // namespace dk
