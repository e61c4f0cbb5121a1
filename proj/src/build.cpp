#include "aaslab/build.hpp"

#include "aaslab/errors.hpp"
#include "aaslab/finite_field.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace aaslab {

namespace {

    constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
    {
        if (a != 0 && b > kSaturated / a)
            return kSaturated;
        return a * b;
    }

    std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e)
    {
        std::uint64_t r = 1;
        for (std::uint64_t i = 0; i < e; ++i)
            r = sat_mul(r, base);
        return r;
    }

    std::uint64_t sat_factorial(std::uint64_t n)
    {
        std::uint64_t r = 1;
        for (std::uint64_t i = 2; i <= n; ++i)
            r = sat_mul(r, i);
        return r;
    }

    using Code = std::vector<int>;

    /// A concrete model of a group: elements are integer vectors with an
    /// explicit product. Only used while building the index tables.
    struct Realization {
        Code identity;
        std::function<Code(const Code&, const Code&)> mul;
        std::function<std::string(const Code&)> name;
    };

    std::string join_ints(const Code& c, char open, char close)
    {
        std::ostringstream os;
        os << open;
        for (std::size_t i = 0; i < c.size(); ++i)
            os << (i ? "," : "") << c[i];
        os << close;
        return os.str();
    }

    std::string cycle_notation(const Code& images)
    {
        std::ostringstream os;
        std::vector<bool> seen(images.size(), false);
        for (std::size_t start = 0; start < images.size(); ++start) {
            if (seen[start] || images[start] == int(start))
                continue;
            os << '(';
            std::size_t x = start;
            bool first = true;
            while (!seen[x]) {
                seen[x] = true;
                os << (first ? "" : ",") << x + 1;
                first = false;
                x = std::size_t(images[x]);
            }
            os << ')';
        }
        const auto s = os.str();
        return s.empty() ? "()" : s;
    }

    Realization permutation_realization(std::size_t degree)
    {
        Code id(degree);
        std::iota(id.begin(), id.end(), 0);
        return {
            id,
            // apply the left factor first
            [](const Code& a, const Code& b) {
                Code r(a.size());
                for (std::size_t i = 0; i < a.size(); ++i)
                    r[i] = b[std::size_t(a[i])];
                return r;
            },
            cycle_notation,
        };
    }

    Code permutation_from_cycles(const GroupSpec::Cycles& cycles, std::size_t degree)
    {
        Code images(degree);
        std::iota(images.begin(), images.end(), 0);
        for (const auto& cycle : cycles)
            for (std::size_t i = 0; i < cycle.size(); ++i)
                images[cycle[i] - 1] = int(cycle[(i + 1) % cycle.size()] - 1);
        return images;
    }

    Code cycle_code(std::size_t degree, std::vector<unsigned> points)
    {
        return permutation_from_cycles({std::move(points)}, degree);
    }

    Realization coordinate_realization(std::vector<int> moduli,
                                       std::function<Code(const Code&, const Code&)> mul)
    {
        return {Code(moduli.size(), 0), std::move(mul), [](const Code& c) { return join_ints(c, '(', ')'); }};
    }

    Realization matrix_realization(const FiniteField& f, bool projective)
    {
        auto canon = [&f, projective](Code m) {
            if (!projective)
                return m;
            Code neg(4);
            for (int i = 0; i < 4; ++i)
                neg[i] = int(f.neg(unsigned(m[i])));
            return std::min(m, neg);
        };
        return {
            Code{0, 0, 0, 0} /* replaced below */,
            [&f, canon](const Code& a, const Code& b) {
                auto dot = [&f](int x, int y, int z, int w) {
                    return int(f.add(f.mul(unsigned(x), unsigned(y)), f.mul(unsigned(z), unsigned(w))));
                };
                return canon(Code{dot(a[0], b[0], a[1], b[2]), dot(a[0], b[1], a[1], b[3]),
                                  dot(a[2], b[0], a[3], b[2]), dot(a[2], b[1], a[3], b[3])});
            },
            [](const Code& m) {
                std::ostringstream os;
                os << "[[" << m[0] << ',' << m[1] << "],[" << m[2] << ',' << m[3] << "]]";
                return os.str();
            },
        };
    }

    /// Breadth-first closure over a concrete realization.
    Group close(const Realization& r, const std::vector<Code>& gens, std::string label, std::size_t cap)
    {
        std::vector<Code> elements{r.identity};
        std::map<Code, Element> index{{r.identity, kIdentity}};
        std::vector<Element> parent{kIdentity};
        std::vector<std::size_t> via{0};
        std::vector<std::vector<Element>> action(gens.size());

        for (std::size_t i = 0; i < elements.size(); ++i) {
            for (std::size_t g = 0; g < gens.size(); ++g) {
                Code y = r.mul(elements[i], gens[g]);
                auto it = index.find(y);
                if (it == index.end()) {
                    if (elements.size() >= cap)
                        throw OrderCapExceeded(label + ": closure exceeds order cap " + std::to_string(cap));
                    it = index.emplace(y, Element(elements.size())).first;
                    elements.push_back(std::move(y));
                    parent.push_back(Element(i));
                    via.push_back(g);
                }
                action[g].push_back(it->second);
            }
        }

        const std::size_t n = elements.size();
        Group::Parts parts;
        parts.label = std::move(label);
        parts.inverse.resize(n);
        parts.element_order.resize(n);
        for (std::size_t x = 0; x < n; ++x) {
            parts.names.push_back(r.name(elements[x]));
            Code previous = r.identity, p = elements[x];
            unsigned k = 1;
            while (p != r.identity) {
                previous = p;
                p = r.mul(p, elements[x]);
                ++k;
            }
            parts.element_order[x] = k;
            // previous = x^(k-1) = x^-1
            parts.inverse[x] = x == 0 ? kIdentity : index.at(previous);
        }
        // generator elements, deduplicated, identity dropped
        for (const auto& gen : gens) {
            const Element e = index.at(gen);
            if (e != kIdentity && std::find(parts.generators.begin(), parts.generators.end(), e) == parts.generators.end())
                parts.generators.push_back(e);
        }
        // Row x of the table from the right Cayley graph: x*y = (x*parent(y))*gen(y).
        parts.rows = [parent = std::move(parent), via = std::move(via), action = std::move(action)](Element x, std::span<Element> out) {
            out[0] = x;
            for (std::size_t y = 1; y < out.size(); ++y)
                out[y] = action[via[y]][out[parent[y]]];
        };
        return Group(std::move(parts));
    }

    unsigned point_count(const GroupSpec& spec)
    {
        unsigned degree = 1;
        for (const auto& gen : spec.permutation_generators)
            for (const auto& cycle : gen)
                for (unsigned pt : cycle)
                    degree = std::max(degree, pt);
        return degree;
    }

    Group build_family(const GroupSpec& spec, std::size_t cap)
    {
        using F = GroupSpec::Family;
        const std::string label = spec.canonical();
        const auto& p = spec.params;
        switch (spec.family) {
        case F::Alternating:
        case F::Symmetric: {
            const unsigned n = unsigned(p[0]);
            const auto real = permutation_realization(n);
            std::vector<Code> gens;
            std::vector<unsigned> all(n);
            std::iota(all.begin(), all.end(), 1u);
            if (spec.family == F::Symmetric) {
                if (n >= 2)
                    gens.push_back(cycle_code(n, {1, 2}));
                if (n >= 3)
                    gens.push_back(cycle_code(n, all));
            } else {
                if (n >= 3)
                    gens.push_back(cycle_code(n, {1, 2, 3}));
                if (n >= 4)
                    gens.push_back(cycle_code(n, n % 2 == 1 ? all : std::vector<unsigned>(all.begin() + 1, all.end())));
            }
            return close(real, gens, label, cap);
        }
        case F::Permutation: {
            const unsigned degree = point_count(spec);
            std::vector<Code> gens;
            for (const auto& cycles : spec.permutation_generators)
                gens.push_back(permutation_from_cycles(cycles, degree));
            return close(permutation_realization(degree), gens, label, cap);
        }
        case F::Cyclic: {
            const int n = int(p[0]);
            auto real = coordinate_realization({n}, [n](const Code& a, const Code& b) { return Code{(a[0] + b[0]) % n}; });
            return close(real, {Code{1 % n}}, label, cap);
        }
        case F::ElementaryAbelian: {
            const int q = int(p[0]);
            const std::size_t k = p[1];
            auto real = coordinate_realization(std::vector<int>(k, q), [q](const Code& a, const Code& b) {
                Code r(a.size());
                for (std::size_t i = 0; i < a.size(); ++i)
                    r[i] = (a[i] + b[i]) % q;
                return r;
            });
            std::vector<Code> gens;
            for (std::size_t i = 0; i < k; ++i) {
                Code g(k, 0);
                g[i] = 1;
                gens.push_back(g);
            }
            return close(real, gens, label, cap);
        }
        case F::Dihedral: {
            const int n = int(p[0]);
            auto real = coordinate_realization({n, 2}, [n](const Code& a, const Code& b) {
                const int turned = a[1] ? (n - b[0]) % n : b[0];
                return Code{(a[0] + turned) % n, (a[1] + b[1]) % 2};
            });
            return close(real, {Code{1 % n, 0}, Code{0, 1}}, label, cap);
        }
        case F::Quaternion: {
            // a^i b^j with a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1
            const int m = int(p[0] / 4), two_m = 2 * m;
            auto real = coordinate_realization({two_m, 2}, [m, two_m](const Code& a, const Code& b) {
                int i = a[0] + (a[1] ? two_m - b[0] : b[0]);
                if (a[1] && b[1])
                    i += m;
                return Code{i % two_m, a[1] ^ b[1]};
            });
            return close(real, {Code{1, 0}, Code{0, 1}}, label, cap);
        }
        case F::Heisenberg: {
            const int q = int(p[0]);
            auto real = coordinate_realization({q, q, q}, [q](const Code& a, const Code& b) {
                return Code{(a[0] + b[0]) % q, (a[1] + b[1]) % q, (a[2] + b[2] + a[0] * b[1]) % q};
            });
            return close(real, {Code{1, 0, 0}, Code{0, 1, 0}}, label, cap);
        }
        case F::Metacyclic: {
            const std::uint64_t pa = sat_pow(p[0], p[1]), pb = sat_pow(p[0], p[2]);
            std::vector<int> twist(pb);
            std::uint64_t acc = 1 % pa;
            for (std::uint64_t j = 0; j < pb; ++j) {
                twist[j] = int(acc);
                acc = acc * (p[3] % pa) % pa;
            }
            const int ma = int(pa), mb = int(pb);
            auto real = coordinate_realization({ma, mb}, [ma, mb, twist](const Code& a, const Code& b) {
                const long long turned = (long long)twist[std::size_t(a[1])] * b[0] % ma;
                return Code{int((a[0] + turned) % ma), (a[1] + b[1]) % mb};
            });
            return close(real, {Code{1 % ma, 0}, Code{0, 1 % mb}}, label, cap);
        }
        case F::SpecialLinear:
        case F::ProjectiveSpecialLinear: {
            const FiniteField field{unsigned(p[0])};
            const bool projective = spec.family == F::ProjectiveSpecialLinear;
            Realization real = matrix_realization(field, projective);
            auto canon = [&](Code m) { return real.mul(Code{1, 0, 0, 1}, m); };
            real.identity = canon(Code{1, 0, 0, 1});
            const int w = int(field.primitive()), w_inv = int(field.inv(field.primitive()));
            std::vector<Code> gens{canon({1, 1, 0, 1}), canon({1, 0, 1, 1})};
            const Code diag = canon({w, 0, 0, w_inv});
            if (diag != real.identity)
                gens.push_back(diag);
            return close(real, gens, label, cap);
        }
        case F::Product:
            break;
        }
        throw InvalidSpec("unsupported family");
    }

} // namespace

std::uint64_t GroupSpec::predicted_order() const
{
    switch (family) {
    case Family::Alternating:
        return params[0] < 2 ? 1 : sat_factorial(params[0]) / 2;
    case Family::Symmetric:
        return sat_factorial(params[0]);
    case Family::Cyclic:
        return params[0];
    case Family::ElementaryAbelian:
        return sat_pow(params[0], params[1]);
    case Family::Dihedral:
        return sat_mul(2, params[0]);
    case Family::Quaternion:
        return params[0];
    case Family::SpecialLinear:
    case Family::ProjectiveSpecialLinear: {
        const std::uint64_t q = params[0];
        const std::uint64_t sl = q * (q * q - 1);
        return family == Family::SpecialLinear || q % 2 == 0 ? sl : sl / 2;
    }
    case Family::Heisenberg:
        return sat_pow(params[0], 3);
    case Family::Metacyclic:
        return sat_pow(params[0], params[1] + params[2]);
    case Family::Permutation:
        return 0;
    case Family::Product: {
        std::uint64_t r = 1;
        for (const auto& f : factors) {
            const auto o = f.predicted_order();
            if (o == 0)
                return 0;
            r = sat_mul(r, o);
        }
        return r;
    }
    }
    return 0;
}

void GroupSpec::validate() const
{
    auto fail = [this](const std::string& why) { throw InvalidSpec(canonical() + ": " + why); };
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            fail("expected " + std::to_string(count) + " parameter(s)");
    };
    switch (family) {
    case Family::Alternating:
    case Family::Symmetric:
        need(1);
        if (params[0] < 1 || params[0] > 255)
            fail("degree must be in [1, 255]");
        break;
    case Family::Cyclic:
    case Family::Dihedral:
        need(1);
        if (params[0] < 1 || params[0] > kMaxOrderCap)
            fail("parameter must be in [1, 65535]");
        break;
    case Family::ElementaryAbelian:
        need(2);
        if (!is_prime(params[0]) || params[1] < 1 || params[1] > 64)
            fail("needs a prime p and 1 <= k <= 64");
        break;
    case Family::Quaternion: {
        need(1);
        const auto [p, k] = prime_power_decomposition(params[0]);
        if (p != 2 || k < 3)
            fail("order must be 2^k with k >= 3");
        break;
    }
    case Family::SpecialLinear:
    case Family::ProjectiveSpecialLinear: {
        need(1);
        const auto [p, k] = prime_power_decomposition(params[0]);
        if (p == 0 || params[0] > FiniteField::kMaxOrder)
            fail("q must be a prime power <= 256");
        break;
    }
    case Family::Heisenberg:
        need(1);
        if (!is_prime(params[0]) || params[0] > 255)
            fail("p must be a prime <= 255");
        break;
    case Family::Metacyclic: {
        need(4);
        const auto p = params[0], a = params[1], b = params[2];
        if (!is_prime(p) || a < 1 || b < 1 || a + b > 16)
            fail("needs a prime p and a, b >= 1");
        const std::uint64_t pa = sat_pow(p, a), pb = sat_pow(p, b);
        if (pa > kMaxOrderCap || pb > kMaxOrderCap)
            fail("cyclic factors too large");
        std::uint64_t acc = 1 % pa;
        for (std::uint64_t j = 0; j < pb; ++j)
            acc = acc * (params[3] % pa) % pa;
        if (acc != 1 % pa)
            fail("twist t must satisfy t^(p^b) = 1 mod p^a");
        break;
    }
    case Family::Permutation:
        for (const auto& gen : permutation_generators) {
            std::vector<unsigned> seen;
            for (const auto& cycle : gen) {
                for (unsigned pt : cycle) {
                    if (pt < 1 || pt > 255)
                        fail("points must be in [1, 255]");
                    if (std::find(seen.begin(), seen.end(), pt) != seen.end())
                        fail("point " + std::to_string(pt) + " repeated within a generator");
                    seen.push_back(pt);
                }
            }
        }
        break;
    case Family::Product:
        if (factors.size() < 2)
            fail("a product needs at least two factors");
        for (const auto& f : factors)
            f.validate();
        break;
    }
}

std::string GroupSpec::canonical() const
{
    auto join = [](const std::vector<std::uint64_t>& ps) {
        std::string out;
        for (std::size_t i = 0; i < ps.size(); ++i)
            out += (i ? "," : "") + std::to_string(ps[i]);
        return out;
    };
    auto first = [this] { return params.empty() ? std::string("?") : std::to_string(params[0]); };
    switch (family) {
    case Family::Alternating: return "A" + first();
    case Family::Symmetric: return "S" + first();
    case Family::Cyclic: return "C" + first();
    case Family::Dihedral: return "D" + first();
    case Family::Quaternion: return "Q" + first();
    case Family::ElementaryAbelian: return "EA(" + join(params) + ")";
    case Family::SpecialLinear: return "SL(2," + first() + ")";
    case Family::ProjectiveSpecialLinear: return "PSL(2," + first() + ")";
    case Family::Heisenberg: return "Heis(" + first() + ")";
    case Family::Metacyclic: return "MC(" + join(params) + ")";
    case Family::Permutation: {
        const unsigned degree = point_count(*this);
        std::string out = "Perm[";
        for (std::size_t i = 0; i < permutation_generators.size(); ++i)
            out += (i ? ";" : "") + cycle_notation(permutation_from_cycles(permutation_generators[i], degree));
        return out + "]";
    }
    case Family::Product: {
        std::string out;
        for (std::size_t i = 0; i < factors.size(); ++i)
            out += (i ? "x" : "") + factors[i].canonical();
        return out;
    }
    }
    return "?";
}

Group build_group(const GroupSpec& spec, std::size_t order_cap)
{
    order_cap = std::min(order_cap, kMaxOrderCap);
    spec.validate();
    const auto predicted = spec.predicted_order();
    if (predicted > order_cap)
        throw OrderCapExceeded(spec.canonical() + ": order " + std::to_string(predicted) + " exceeds cap " + std::to_string(order_cap));
    if (spec.family != GroupSpec::Family::Product)
        return build_family(spec, order_cap);
    Group acc = build_group(spec.factors[0], order_cap);
    for (std::size_t i = 1; i < spec.factors.size(); ++i)
        acc = direct_product(acc, build_group(spec.factors[i], order_cap), order_cap);
    return acc;
}

Group direct_product(const Group& g, const Group& h, std::size_t order_cap)
{
    order_cap = std::min(order_cap, kMaxOrderCap);
    const std::size_t ng = g.order(), nh = h.order();
    if (ng * nh > order_cap)
        throw OrderCapExceeded(g.label() + "x" + h.label() + ": order " + std::to_string(ng * nh) + " exceeds cap " + std::to_string(order_cap));
    Group::Parts parts;
    parts.label = g.label() + "x" + h.label();
    const std::size_t n = ng * nh;
    parts.inverse.resize(n);
    parts.element_order.resize(n);
    parts.names.reserve(n);
    for (std::size_t a = 0; a < ng; ++a) {
        for (std::size_t b = 0; b < nh; ++b) {
            const std::size_t x = a * nh + b;
            parts.names.push_back("(" + g.name(Element(a)) + "," + h.name(Element(b)) + ")");
            parts.inverse[x] = Element(std::size_t(g.inv(Element(a))) * nh + h.inv(Element(b)));
            parts.element_order[x] = std::lcm(g.element_order(Element(a)), h.element_order(Element(b)));
        }
    }
    for (Element a : g.generators())
        parts.generators.push_back(Element(std::size_t(a) * nh));
    for (Element b : h.generators())
        parts.generators.push_back(b);
    parts.rows = [g, h, nh](Element x, std::span<Element> out) {
        const auto rg = g.row(Element(x / nh));
        const auto rh = h.row(Element(x % nh));
        for (std::size_t c = 0; c < rg.size(); ++c)
            for (std::size_t d = 0; d < nh; ++d)
                out[c * nh + d] = Element(std::size_t(rg[c]) * nh + rh[d]);
    };
    return Group(std::move(parts));
}

} // namespace aaslab
