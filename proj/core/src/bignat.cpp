#include "ternary5/bignat.hpp"

#include <limits>
#include <ostream>

namespace ternary5 {

namespace mp = boost::multiprecision;

BigNat BigNat::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigNat: empty decimal string");
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("BigNat: invalid decimal digit");
    }
    BigNat out;
    out.mag_ = mp::cpp_int(std::string(s));
    return out;
}

std::string BigNat::to_decimal() const { return mag_.str(); }

uint64_t BigNat::bit_length() const {
    if (mag_.is_zero()) return 0;
    return static_cast<uint64_t>(mp::msb(mag_)) + 1;
}

bool BigNat::fits_u64() const { return mag_ <= std::numeric_limits<uint64_t>::max(); }

uint64_t BigNat::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigNat: value does not fit in 64 bits");
    return mag_.convert_to<uint64_t>();
}

BigNat& BigNat::operator-=(const BigNat& o) {
    if (mag_ < o.mag_) throw std::invalid_argument("BigNat: subtraction underflow");
    mag_ -= o.mag_;
    return *this;
}

std::pair<BigNat, BigNat> divmod(const BigNat& num, const BigNat& den) {
    if (den.is_zero()) throw std::invalid_argument("BigNat: division by zero");
    BigNat q, r;
    mp::divide_qr(num.mag_, den.mag_, q.mag_, r.mag_);
    return {std::move(q), std::move(r)};
}

uint64_t BigNat::divmod_u64(uint64_t d) {
    if (d == 0) throw std::invalid_argument("BigNat: division by zero");
    mp::cpp_int q, r;
    mp::divide_qr(mag_, mp::cpp_int(d), q, r);
    mag_.swap(q);
    return r.convert_to<uint64_t>();
}

uint64_t BigNat::mod_u64(uint64_t d) const {
    if (d == 0) throw std::invalid_argument("BigNat: division by zero");
    return mp::cpp_int(mag_ % d).convert_to<uint64_t>();
}

BigNat pow(const BigNat& base, uint64_t exponent) {
    BigNat result{1u};
    BigNat square = base;
    for (uint64_t e = exponent; e != 0; e >>= 1) {
        if (e & 1) result *= square;
        if (e > 1) square *= square;
    }
    return result;
}

BigNat integer_root(const BigNat& n, uint64_t k) {
    if (k == 0) throw std::invalid_argument("integer_root: k must be >= 1");
    if (n.is_zero() || k == 1) return n;
    const uint64_t bits = n.bit_length();
    if (k >= bits) return BigNat{1u};  // 1 <= n < 2^bits <= 2^k

    // Seed above the true root: n < 2^bits implies root < 2^ceil(bits/k).
    BigNat x = pow(BigNat{2u}, (bits + k - 1) / k);
    for (;;) {
        BigNat next =
            divmod(x * BigNat{k - 1} + divmod(n, pow(x, k - 1)).first, BigNat{k}).first;
        if (next >= x) break;
        x = std::move(next);
    }
    while (pow(x, k) > n) x -= BigNat{1u};
    while (pow(x + BigNat{1u}, k) <= n) x += BigNat{1u};
    return x;
}

std::ostream& operator<<(std::ostream& os, const BigNat& n) { return os << n.to_decimal(); }

}  // namespace ternary5
