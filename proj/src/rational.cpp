#include "percolattice/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace percolattice {

BigUint::BigUint(uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
        if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigUint::cmp(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint BigUint::operator+(const BigUint& b) const {
    BigUint r;
    const size_t n = std::max(limbs_.size(), b.limbs_.size());
    r.limbs_.resize(n, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = carry;
        if (i < limbs_.size()) s += limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        r.limbs_[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
    return r;
}

BigUint BigUint::operator-(const BigUint& b) const {
    if (cmp(*this, b) < 0) throw std::invalid_argument("BigUint underflow");
    BigUint r;
    r.limbs_.resize(limbs_.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        int64_t s = static_cast<int64_t>(limbs_[i]) - borrow -
                    (i < b.limbs_.size() ? static_cast<int64_t>(b.limbs_[i]) : 0);
        borrow = 0;
        if (s < 0) {
            s += (1ll << 32);
            borrow = 1;
        }
        r.limbs_[i] = static_cast<uint32_t>(s);
    }
    r.trim();
    return r;
}

BigUint BigUint::operator*(const BigUint& b) const {
    if (is_zero() || b.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(limbs_[i]) * b.limbs_[j] +
                           r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

void BigUint::shift_left1() {
    uint32_t carry = 0;
    for (auto& l : limbs_) {
        uint32_t next = l >> 31;
        l = (l << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

void BigUint::shift_right1() {
    uint32_t carry = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint32_t next = limbs_[i] & 1u;
        limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
        carry = next;
    }
    trim();
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int shift = 0;
    while (a.is_even() && b.is_even()) {
        a.shift_right1();
        b.shift_right1();
        ++shift;
    }
    while (a.is_even()) a.shift_right1();
    while (!b.is_zero()) {
        while (b.is_even()) b.shift_right1();
        if (cmp(a, b) > 0) std::swap(a, b);
        b = b - a;
    }
    for (int i = 0; i < shift; ++i) a.shift_left1();
    return a;
}

uint32_t BigUint::div_small(uint32_t d) {
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<uint32_t>(rem);
}

double BigUint::to_double() const {
    double r = 0.0;
    for (size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
    return r;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        uint32_t rem = tmp.div_small(1000000000u);
        std::string chunk = std::to_string(rem);
        if (!tmp.is_zero())
            chunk = std::string(9 - chunk.size(), '0') + chunk;
        out = chunk + out;
    }
    return out;
}

Rational::Rational(int64_t v)
    : sign_(v == 0 ? 0 : (v > 0 ? 1 : -1)),
      num_(static_cast<uint64_t>(v >= 0 ? v : -v)),
      den_(1) {}

Rational::Rational(int64_t num, int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    sign_ = (num == 0) ? 0 : ((num > 0) == (den > 0) ? 1 : -1);
    num_ = BigUint(static_cast<uint64_t>(num >= 0 ? num : -num));
    den_ = BigUint(static_cast<uint64_t>(den >= 0 ? den : -den));
    normalize();
}

Rational::Rational(int sign, BigUint num, BigUint den)
    : sign_(sign), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    normalize();
}

namespace {

// Binary long division; both callers divide exactly.
BigUint divide_exact(const BigUint& value, const BigUint& divisor) {
    BigUint q(0), r(0), one(1);
    std::vector<bool> bits;
    BigUint tmp = value;
    while (!tmp.is_zero()) {
        bits.push_back(!tmp.is_even());
        tmp.shift_right1();
    }
    std::reverse(bits.begin(), bits.end());
    for (bool bit : bits) {
        r.shift_left1();
        if (bit) r = r + one;
        q.shift_left1();
        if (BigUint::cmp(r, divisor) >= 0) {
            r = r - divisor;
            q = q + one;
        }
    }
    return q;
}

}  // namespace

void Rational::normalize() {
    if (num_.is_zero()) {
        sign_ = 0;
        den_ = BigUint(1);
        return;
    }
    BigUint g = BigUint::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        int64_t a = std::stoll(text.substr(0, slash));
        int64_t b = std::stoll(text.substr(slash + 1));
        return Rational(a, b);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.size() > 15) frac = frac.substr(0, 15);
        int64_t scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        bool neg = !whole.empty() && whole[0] == '-';
        int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
        int64_t f = frac.empty() ? 0 : std::stoll(frac);
        int64_t num = (w >= 0 ? w : -w) * scale + f;
        return Rational(neg || w < 0 ? -num : num, scale);
    }
    return Rational(std::stoll(text), 1);
}

Rational Rational::operator+(const Rational& b) const {
    BigUint l = num_ * b.den_;
    BigUint r = b.num_ * den_;
    BigUint d = den_ * b.den_;
    if (sign_ >= 0 && b.sign_ >= 0) return Rational(num_.is_zero() && b.num_.is_zero() ? 0 : 1, l + r, d);
    if (sign_ <= 0 && b.sign_ <= 0) {
        BigUint s = l + r;
        return Rational(s.is_zero() ? 0 : -1, s, d);
    }
    int c = BigUint::cmp(l, r);
    if (c == 0) return Rational(0);
    if (c > 0) return Rational(sign_, l - r, d);
    return Rational(b.sign_, r - l, d);
}

Rational Rational::operator-() const { return Rational(-sign_, num_, den_); }

Rational Rational::operator-(const Rational& b) const { return *this + (-b); }

Rational Rational::operator*(const Rational& b) const {
    return Rational(sign_ * b.sign_, num_ * b.num_, den_ * b.den_);
}

Rational Rational::operator/(const Rational& b) const {
    if (b.sign_ == 0) throw std::invalid_argument("division by zero");
    return Rational(sign_ * b.sign_, num_ * b.den_, den_ * b.num_);
}

bool Rational::operator==(const Rational& b) const {
    return sign_ == b.sign_ && num_ == b.num_ && den_ == b.den_;
}

bool Rational::operator<(const Rational& b) const {
    if (sign_ != b.sign_) return sign_ < b.sign_;
    int c = BigUint::cmp(num_ * b.den_, b.num_ * den_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

Rational Rational::pow(uint64_t e) const {
    Rational result(1);
    Rational base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

double Rational::to_double() const {
    if (sign_ == 0) return 0.0;
    double v = num_.to_double() / den_.to_double();
    if (std::isfinite(v)) return sign_ * v;
    return sign_ * std::exp(std::log(num_.to_double()) - std::log(den_.to_double()));
}

std::string Rational::to_string() const {
    std::string s = sign_ < 0 ? "-" : "";
    s += num_.to_string();
    if (!den_.is_one()) s += "/" + den_.to_string();
    return s;
}

}  // namespace percolattice
