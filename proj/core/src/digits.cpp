#include "ternary5/digits.hpp"

#include <limits>
#include <stdexcept>

namespace ternary5 {

namespace {

void require_radix(uint32_t radix) {
    if (radix < 2) throw std::invalid_argument("radix must be >= 2");
}

// Largest power of radix representable in 64 bits, with its digit count.
struct Chunk {
    uint64_t value;
    uint32_t digits;
};

Chunk chunk_for(uint32_t radix) {
    uint64_t v = radix;
    uint32_t m = 1;
    while (v <= std::numeric_limits<uint64_t>::max() / radix) {
        v *= radix;
        ++m;
    }
    return {v, m};
}

}  // namespace

RadixExpansion to_radix(const BigNat& n, uint32_t radix) {
    require_radix(radix);
    RadixExpansion e{radix, {}};
    BigNat rest = n;
    while (!rest.is_zero()) {
        e.digits.push_back(static_cast<uint32_t>(rest.divmod_u64(radix)));
    }
    return e;
}

RadixExpansion to_radix_blocked(const BigNat& n, uint32_t radix) {
    require_radix(radix);
    const Chunk chunk = chunk_for(radix);
    RadixExpansion e{radix, {}};
    BigNat rest = n;
    while (!rest.is_zero()) {
        if (rest.fits_u64()) {
            // Top block: only the significant digits.
            uint64_t v = rest.to_u64();
            while (v != 0) {
                e.digits.push_back(static_cast<uint32_t>(v % radix));
                v /= radix;
            }
            break;
        }
        // rest > 2^64 - 1 >= chunk, so the quotient stays nonzero and this
        // block contributes exactly chunk.digits digits, zeros included.
        uint64_t block = rest.divmod_u64(chunk.value);
        for (uint32_t i = 0; i < chunk.digits; ++i) {
            e.digits.push_back(static_cast<uint32_t>(block % radix));
            block /= radix;
        }
    }
    return e;
}

BigNat from_digits(const RadixExpansion& e) {
    require_radix(e.radix);
    BigNat acc;
    const BigNat radix{e.radix};
    for (size_t i = e.digits.size(); i-- > 0;) {
        if (e.digits[i] >= e.radix) {
            throw std::invalid_argument("from_digits: digit out of [0, radix)");
        }
        acc *= radix;
        acc += BigNat{e.digits[i]};
    }
    return acc;
}

DigitStats digit_stats(const BigNat& n, uint32_t radix) {
    require_radix(radix);
    const Chunk chunk = chunk_for(radix);
    DigitStats s;
    BigNat rest = n;
    while (!rest.is_zero()) {
        if (rest.fits_u64()) {
            uint64_t v = rest.to_u64();
            while (v != 0) {
                ++s.digit_count;
                if (v % radix != 0) ++s.nonzero_count;
                v /= radix;
            }
            break;
        }
        uint64_t block = rest.divmod_u64(chunk.value);
        for (uint32_t i = 0; i < chunk.digits; ++i) {
            ++s.digit_count;
            if (block % radix != 0) ++s.nonzero_count;
            block /= radix;
        }
    }
    return s;
}

uint64_t gamma(const BigNat& n, uint32_t radix) { return digit_stats(n, radix).nonzero_count; }

uint64_t gamma_reference(const BigNat& n, uint32_t radix) {
    uint64_t count = 0;
    for (uint32_t d : to_radix(n, radix).digits) {
        if (d != 0) ++count;
    }
    return count;
}

}  // namespace ternary5
