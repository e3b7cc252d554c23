#pragma once

/**
 * @file ring.hpp
 * @brief The residue ring Z/mZ: canonical elements, units, and chain-ring structure.
 *
 * A RingSpec describes Z_m for a 64-bit modulus m >= 2. When m = p^e is a
 * prime power the ring is a finite chain ring with maximal ideal <p>; the
 * spec then carries the chain data (p, e, gamma = p) and can produce its
 * residue field Z_p. Elements are always stored as canonical residues in
 * [0, m); intermediate products are widened to 128 bits so any 64-bit
 * modulus is safe.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace zmcodes {

using Int = std::int64_t;

/// Extended gcd: g = gcd(a,b) >= 0 with g = x*a + y*b.
struct XgcdResult {
    Int g;
    Int x;
    Int y;
};

constexpr XgcdResult xgcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x; old_x = x; x = t;
        t = old_y - q * y; old_y = y; y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    return {old_r, old_x, old_y};
}

constexpr Int gcd_ll(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { Int t = a % b; a = b; b = t; }
    return a;
}

/// (a * b) mod m for canonical residues; widened so m up to 2^63 is safe.
inline Int mul_mod(Int a, Int b, Int m) {
    return static_cast<Int>(static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
                            static_cast<unsigned __int128>(m));
}

/// m = p^e decomposition by trial division, or nothing if m is not a prime power.
inline std::optional<std::pair<Int, int>> prime_power_decompose(Int m) {
    if (m < 2) return std::nullopt;
    Int p = 0;
    if (m % 2 == 0) {
        p = 2;
    } else {
        for (Int d = 3; d <= m / d; d += 2) {
            if (m % d == 0) { p = d; break; }
        }
        if (p == 0) p = m;  // m itself is prime
    }
    int e = 0;
    Int q = m;
    while (q % p == 0) { q /= p; ++e; }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, e);
}

/// Chain-ring data for Z_{p^e}: maximal ideal <gamma> with gamma = p mod m.
struct ChainStructure {
    Int p;
    int e;
    Int gamma;

    friend bool operator==(const ChainStructure&, const ChainStructure&) = default;
};

/**
 * The ring Z_m. Immutable after construction; identity is the modulus value,
 * so elements of rings with different moduli never interoperate.
 */
class RingSpec {
public:
    explicit RingSpec(Int modulus) : modulus_(modulus) {
        if (modulus < 2) throw std::invalid_argument("RingSpec: modulus must be at least 2");
        if (auto pe = prime_power_decompose(modulus)) {
            chain_ = ChainStructure{pe->first, pe->second, pe->first % modulus};
        }
    }

    Int modulus() const noexcept { return modulus_; }
    bool has_chain() const noexcept { return chain_.has_value(); }
    bool is_field() const noexcept { return chain_ && chain_->e == 1; }

    const ChainStructure& chain() const {
        if (!chain_) throw std::invalid_argument("RingSpec: Z_" + std::to_string(modulus_) + " is not a chain ring");
        return *chain_;
    }

    /// The residue field Z_p of a chain ring Z_{p^e}.
    RingSpec residue_field() const { return RingSpec(chain().p); }

    /// Canonical residue of an arbitrary integer.
    Int reduce(Int v) const noexcept {
        Int r = v % modulus_;
        return r < 0 ? r + modulus_ : r;
    }

    Int add(Int a, Int b) const noexcept {
        // a + b - m without overflow for canonical inputs and any 64-bit modulus
        const Int s = a - (modulus_ - b);
        return s < 0 ? s + modulus_ : s;
    }
    Int sub(Int a, Int b) const noexcept {
        Int s = a - b;
        if (s < 0) s += modulus_;
        return s;
    }
    Int mul(Int a, Int b) const noexcept { return mul_mod(a, b, modulus_); }
    Int neg(Int a) const noexcept { return a == 0 ? 0 : modulus_ - a; }

    bool is_unit(Int a) const noexcept { return gcd_ll(a, modulus_) == 1; }

    /// Multiplicative inverse of a unit; rejects zero divisors.
    Int inv(Int a) const {
        auto [g, x, y] = xgcd(reduce(a), modulus_);
        if (g != 1) throw std::domain_error(std::to_string(a) + " is not a unit in Z_" + std::to_string(modulus_));
        return reduce(x);
    }

    friend bool operator==(const RingSpec& lhs, const RingSpec& rhs) noexcept {
        return lhs.modulus_ == rhs.modulus_;
    }

private:
    Int modulus_;
    std::optional<ChainStructure> chain_;
};

inline void require_same_ring(const RingSpec& a, const RingSpec& b, const char* what) {
    if (!(a == b))
        throw std::invalid_argument(std::string(what) + ": mixed rings Z_" + std::to_string(a.modulus()) +
                                    " and Z_" + std::to_string(b.modulus()));
}

/// A canonical residue bound to its ring.
class RingElem {
public:
    RingElem(RingSpec ring, Int value) : ring_(std::move(ring)), value_(ring_.reduce(value)) {}

    Int value() const noexcept { return value_; }
    const RingSpec& ring() const noexcept { return ring_; }

    RingElem operator+(const RingElem& rhs) const {
        require_same_ring(ring_, rhs.ring_, "RingElem::operator+");
        return RingElem(ring_, ring_.add(value_, rhs.value_), canonical_tag{});
    }
    RingElem operator-(const RingElem& rhs) const {
        require_same_ring(ring_, rhs.ring_, "RingElem::operator-");
        return RingElem(ring_, ring_.sub(value_, rhs.value_), canonical_tag{});
    }
    RingElem operator*(const RingElem& rhs) const {
        require_same_ring(ring_, rhs.ring_, "RingElem::operator*");
        return RingElem(ring_, ring_.mul(value_, rhs.value_), canonical_tag{});
    }
    RingElem operator-() const { return RingElem(ring_, ring_.neg(value_), canonical_tag{}); }

    friend bool operator==(const RingElem& lhs, const RingElem& rhs) {
        return lhs.ring_ == rhs.ring_ && lhs.value_ == rhs.value_;
    }

private:
    struct canonical_tag {};
    RingElem(RingSpec ring, Int value, canonical_tag) : ring_(std::move(ring)), value_(value) {}

    RingSpec ring_;
    Int value_;
};

inline bool is_unit(const RingElem& r) { return r.ring().is_unit(r.value()); }

inline RingElem inv(const RingElem& r) { return RingElem(r.ring(), r.ring().inv(r.value())); }

/// Reduction modulo <gamma>: the image of r in the residue field Z_p.
inline RingElem reduce_mod_gamma(const RingElem& r) {
    const RingSpec field = r.ring().residue_field();
    return RingElem(field, r.value() % field.modulus());
}

}  // namespace zmcodes
