#include "aaslab/finite_field.hpp"

#include "aaslab/errors.hpp"

#include <string>

namespace aaslab {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::pair<unsigned, unsigned> prime_power_decomposition(std::uint64_t q)
{
    const auto primes = prime_divisors(q);
    if (primes.size() != 1)
        return {0, 0};
    unsigned e = 0;
    while (q > 1) {
        q /= primes[0];
        ++e;
    }
    return {unsigned(primes[0]), e};
}

namespace {

    using Poly = std::vector<unsigned>; // coefficients, low degree first

    Poly decode(unsigned code, unsigned p, unsigned len)
    {
        Poly out(len);
        for (unsigned i = 0; i < len; ++i) {
            out[i] = code % p;
            code /= p;
        }
        return out;
    }

    unsigned encode(const Poly& poly, unsigned p)
    {
        unsigned code = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it)
            code = code * p + *it;
        return code;
    }

    // Remainder of a modulo the monic polynomial m.
    Poly reduce(Poly a, const Poly& m, unsigned p)
    {
        const std::size_t d = m.size() - 1;
        for (std::size_t i = a.size(); i-- > d;) {
            const unsigned c = a[i] % p;
            if (c == 0)
                continue;
            for (std::size_t j = 0; j <= d; ++j)
                a[i - d + j] = (a[i - d + j] + (p - c) * m[j]) % p;
        }
        a.resize(d);
        return a;
    }

    bool has_monic_divisor(const Poly& f, unsigned p)
    {
        const unsigned e = unsigned(f.size() - 1);
        for (unsigned d = 1; d <= e / 2; ++d) {
            unsigned count = 1;
            for (unsigned i = 0; i < d; ++i)
                count *= p;
            for (unsigned code = 0; code < count; ++code) {
                Poly g = decode(code, p, d);
                g.push_back(1);
                const Poly r = reduce(f, g, p);
                bool zero = true;
                for (unsigned c : r)
                    zero = zero && c == 0;
                if (zero)
                    return true;
            }
        }
        return false;
    }

    Poly find_irreducible(unsigned p, unsigned e)
    {
        unsigned count = 1;
        for (unsigned i = 0; i < e; ++i)
            count *= p;
        for (unsigned code = 0; code < count; ++code) {
            Poly f = decode(code, p, e);
            f.push_back(1);
            if (f[0] != 0 && !has_monic_divisor(f, p))
                return f;
        }
        throw InvalidSpec("no irreducible polynomial found");
    }

} // namespace

FiniteField::FiniteField(unsigned q) : q_(q)
{
    const auto [p, e] = prime_power_decomposition(q);
    if (p == 0 || q > kMaxOrder)
        throw InvalidSpec("field order " + std::to_string(q) + " is not a prime power in [2, 256]");
    p_ = p;
    degree_ = e;
    const Poly modulus = e == 1 ? Poly{0, 1} : find_irreducible(p, e);

    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (unsigned a = 0; a < q; ++a) {
        const Poly pa = decode(a, p, e);
        Poly na(e);
        for (unsigned i = 0; i < e; ++i)
            na[i] = (p - pa[i]) % p;
        neg_[a] = encode(na, p);
        for (unsigned b = 0; b < q; ++b) {
            const Poly pb = decode(b, p, e);
            Poly sum(e);
            for (unsigned i = 0; i < e; ++i)
                sum[i] = (pa[i] + pb[i]) % p;
            add_[a * q + b] = encode(sum, p);
            Poly prod(2 * e - 1, 0);
            for (unsigned i = 0; i < e; ++i)
                for (unsigned j = 0; j < e; ++j)
                    prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
            mul_[a * q + b] = encode(reduce(prod, modulus, p), p);
        }
    }
    for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b)
            if (mul(a, b) == 1)
                inv_[a] = b;

    for (unsigned g = 1; g < q; ++g) {
        unsigned x = g, k = 1;
        while (x != 1) {
            x = mul(x, g);
            ++k;
        }
        if (k == q - 1) {
            primitive_ = g;
            break;
        }
    }
}

} // namespace aaslab
