#pragma once

#include <cstdint>
#include <vector>

namespace aaslab {

/// Arithmetic in GF(q) for small prime powers q. Elements are encoded as
/// integers 0..q-1: the base-p digits of the code are the coefficients of
/// the polynomial representative modulo a fixed irreducible polynomial.
class FiniteField {
public:
    static constexpr unsigned kMaxOrder = 256;

    /// Throws InvalidSpec unless q is a prime power in [2, kMaxOrder].
    explicit FiniteField(unsigned q);

    unsigned order() const noexcept { return q_; }
    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return degree_; }

    unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
    /// Multiplicative inverse; a must be nonzero.
    unsigned inv(unsigned a) const { return inv_[a]; }
    /// A generator of the multiplicative group.
    unsigned primitive() const noexcept { return primitive_; }

private:
    unsigned q_, p_, degree_;
    unsigned primitive_ = 1;
    std::vector<unsigned> add_, mul_, neg_, inv_;
};

/// Returns (p, e) with q = p^e, or (0, 0) when q is not a prime power.
std::pair<unsigned, unsigned> prime_power_decomposition(std::uint64_t q);
bool is_prime(std::uint64_t n);
/// Distinct prime divisors in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

} // namespace aaslab
