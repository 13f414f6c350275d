#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace percolattice {

// Arbitrary-precision unsigned integer, little-endian 32-bit limbs.
// Just enough for exact rational arithmetic on probabilities raised to
// window-sized exponents.
class BigUint {
  public:
    BigUint() = default;
    BigUint(uint64_t v);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

    static int cmp(const BigUint& a, const BigUint& b);
    bool operator==(const BigUint& b) const { return cmp(*this, b) == 0; }
    bool operator<(const BigUint& b) const { return cmp(*this, b) < 0; }

    BigUint operator+(const BigUint& b) const;
    BigUint operator-(const BigUint& b) const;  // requires *this >= b
    BigUint operator*(const BigUint& b) const;

    void shift_left1();
    void shift_right1();
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    static BigUint gcd(BigUint a, BigUint b);

    // Divides by a small value in place, returns the remainder.
    uint32_t div_small(uint32_t d);

    double to_double() const;
    std::string to_string() const;

  private:
    void trim();
    std::vector<uint32_t> limbs_;
};

// Exact rational with sign. Always stored normalized (coprime, den > 0).
class Rational {
  public:
    Rational() : sign_(0), num_(0), den_(1) {}
    Rational(int64_t v);
    Rational(int64_t num, int64_t den);
    Rational(int sign, BigUint num, BigUint den);

    // Accepts "a/b", integers, and plain decimals such as "0.35".
    static Rational parse(const std::string& text);

    int sign() const { return sign_; }
    const BigUint& num() const { return num_; }
    const BigUint& den() const { return den_; }

    Rational operator+(const Rational& b) const;
    Rational operator-(const Rational& b) const;
    Rational operator*(const Rational& b) const;
    Rational operator/(const Rational& b) const;
    Rational operator-() const;

    bool operator==(const Rational& b) const;
    bool operator!=(const Rational& b) const { return !(*this == b); }
    bool operator<(const Rational& b) const;
    bool operator<=(const Rational& b) const { return *this < b || *this == b; }
    bool operator>(const Rational& b) const { return b < *this; }
    bool operator>=(const Rational& b) const { return b <= *this; }

    Rational pow(uint64_t e) const;

    double to_double() const;
    std::string to_string() const;  // "num/den" or "num" when den == 1

  private:
    void normalize();
    int sign_;
    BigUint num_;
    BigUint den_;
};

}  // namespace percolattice
