#include "aaslab/families.hpp"

#include "aaslab/errors.hpp"
#include "aaslab/finite_field.hpp"
#include "aaslab/structure.hpp"

#include <algorithm>

namespace aaslab {

namespace {

    std::uint64_t ipow(std::uint64_t b, unsigned e)
    {
        std::uint64_t r = 1;
        while (e--)
            r *= b;
        return r;
    }

    bool is_power_of_two(std::uint64_t n)
    {
        return n != 0 && (n & (n - 1)) == 0;
    }

    bool twist_ok(std::uint64_t t, std::uint64_t pa, std::uint64_t pb)
    {
        std::uint64_t acc = 1 % pa;
        for (std::uint64_t j = 0; j < pb; ++j)
            acc = acc * t % pa;
        return acc == 1 % pa;
    }

} // namespace

std::vector<std::string> scan_families()
{
    return {"metacyclic", "semidihedral", "modular", "heisenberg", "sl2", "psl2",
            "alternating", "dihedral", "quaternion", "cyclic", "ea"};
}

std::vector<GroupSpec> scan_specs(const std::string& family, const ScanRange& range)
{
    std::vector<GroupSpec> out;
    const auto max_order = range.max_order;
    if (family == "metacyclic") {
        for (unsigned p : range.params) {
            if (!is_prime(p))
                throw InvalidSpec("metacyclic scan needs primes, got " + std::to_string(p));
            for (unsigned a = 1; ipow(p, a + 1) <= max_order; ++a)
                for (unsigned b = 1; ipow(p, a + b) <= max_order; ++b) {
                    const std::uint64_t pa = ipow(p, a), pb = ipow(p, b);
                    for (std::uint64_t t = 1; t < std::max<std::uint64_t>(pa, 2); ++t)
                        if (t % p != 0 && twist_ok(t, pa, pb))
                            out.push_back(GroupSpec::metacyclic(p, a, b, unsigned(t)));
                }
        }
    } else if (family == "semidihedral" || family == "modular") {
        for (unsigned a : range.params) {
            if (a < 3)
                throw InvalidSpec(family + " scan needs a >= 3");
            const unsigned half = 1u << (a - 1);
            if (ipow(2, a + 1) <= max_order)
                out.push_back(GroupSpec::metacyclic(2, a, 1, family == "semidihedral" ? half - 1 : half + 1));
        }
    } else if (family == "ea") {
        for (unsigned p : range.params)
            for (unsigned k = 1; ipow(p, k) <= max_order; ++k)
                out.push_back(GroupSpec::elementary_abelian(p, k));
    } else {
        for (unsigned x : range.params) {
            GroupSpec spec;
            if (family == "heisenberg")
                spec = GroupSpec::heisenberg(x);
            else if (family == "sl2")
                spec = GroupSpec::sl2(x);
            else if (family == "psl2")
                spec = GroupSpec::psl2(x);
            else if (family == "alternating")
                spec = GroupSpec::alternating(x);
            else if (family == "dihedral")
                spec = GroupSpec::dihedral(x);
            else if (family == "quaternion")
                spec = GroupSpec::quaternion(x);
            else if (family == "cyclic")
                spec = GroupSpec::cyclic(x);
            else
                throw InvalidSpec("unknown family '" + family + "'");
            if (spec.predicted_order() <= max_order)
                out.push_back(std::move(spec));
        }
    }
    return out;
}

std::optional<std::pair<bool, std::string>> expected_verdict(const GroupSpec& spec)
{
    using F = GroupSpec::Family;
    const auto& ps = spec.params;
    auto yes = [](std::string why) { return std::optional(std::pair(true, std::move(why))); };
    auto no = [](std::string why) { return std::optional(std::pair(false, std::move(why))); };
    switch (spec.family) {
    case F::Metacyclic:
    case F::Quaternion:
        return no("metacyclic p-group");
    case F::Cyclic:
    case F::ElementaryAbelian:
        return no("abelian");
    case F::Dihedral:
        if (ps[0] <= 2)
            return no("abelian");
        if (is_power_of_two(ps[0]))
            return no("metacyclic p-group");
        return no("neither a p-group nor perfect");
    case F::Heisenberg:
        if (ps[0] != 2)
            return yes("non-abelian of exponent p");
        return std::nullopt;
    case F::SpecialLinear:
        if (ps[0] % 2 == 1)
            return no("SL(2,q) with q odd");
        if (ps[0] >= 4)
            return yes("non-abelian simple");
        return std::nullopt;
    case F::ProjectiveSpecialLinear:
        if (ps[0] >= 4)
            return yes("non-abelian simple");
        return std::nullopt;
    case F::Alternating:
        if (ps[0] >= 5)
            return yes("non-abelian simple");
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

std::vector<FamilyScanRow> scan_family(const std::string& family, const ScanRange& range, std::size_t order_cap)
{
    const auto specs = scan_specs(family, range);
    std::vector<FamilyScanRow> rows(specs.size());
    #pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < specs.size(); ++i) {
        FamilyScanRow& row = rows[i];
        row.spec = specs[i];
        row.order = specs[i].predicted_order();
        if (auto e = expected_verdict(specs[i])) {
            row.expected = e->first;
            row.basis = e->second;
        }
        try {
            const Group g = build_group(specs[i], order_cap);
            row.order = g.order();
            const AasReport report = is_aas(g);
            row.verdict = report.verdict;
            row.classification = report.classification;
            row.failures = report.failures;
        } catch (const Error& e) {
            row.error = e.what();
        }
        row.agrees = !row.expected || (row.verdict && *row.verdict == *row.expected);
    }
    return rows;
}

bool ProductCheck::any_hypothesis() const
{
    return std::any_of(hypotheses.begin(), hypotheses.end(), [](const ProductHypothesis& h) { return h.holds; });
}

namespace {

    struct FactorFacts {
        Group group;
        bool aas = false;
        std::vector<std::uint64_t> primes;
        std::uint64_t exponent = 0;

        bool p_group() const { return primes.size() == 1; }
    };

    FactorFacts facts_of(const GroupSpec& spec, std::size_t cap)
    {
        Group g = build_group(spec, cap);
        const bool aas = is_aas(g).verdict;
        auto primes = prime_divisors(g.order());
        const std::uint64_t exponent = g.exponent();
        return FactorFacts{std::move(g), aas, std::move(primes), exponent};
    }

    // G an AAS p-group of exponent p^e; H a p-group of exponent at most p^e
    // generated by its elements of order p.
    std::optional<std::string> extension_holds(const FactorFacts& g, const FactorFacts& h)
    {
        if (!g.aas || !g.p_group())
            return std::nullopt;
        const auto p = g.primes[0];
        if (h.group.order() > 1 && (!h.p_group() || h.primes[0] != p))
            return std::nullopt;
        if (h.exponent > g.exponent)
            return std::nullopt;
        if (!closure_of(h.group, elements_of_order(h.group, unsigned(p))).is_whole(h.group))
            return std::nullopt;
        return g.group.label() + " is an AAS p-group, " + h.group.label() + " is generated by elements of order "
               + std::to_string(p);
    }

} // namespace

ProductCheck check_product_theorems(const GroupSpec& g, const GroupSpec& h, std::size_t order_cap)
{
    const auto predicted = GroupSpec::product({g, h}).predicted_order();
    if (predicted > std::min(order_cap, kMaxOrderCap))
        throw OrderCapExceeded("product order " + std::to_string(predicted) + " exceeds cap "
                               + std::to_string(std::min(order_cap, kMaxOrderCap)));
    ProductCheck out;
    out.left = g;
    out.right = h;
    const FactorFacts fg = facts_of(g, order_cap), fh = facts_of(h, order_cap);
    out.left_aas = fg.aas;
    out.right_aas = fh.aas;

    ProductHypothesis ext{"pgroup_extension", false, "no factor is an AAS p-group absorbing the other"};
    if (auto why = extension_holds(fg, fh))
        ext = {"pgroup_extension", true, *why};
    else if (auto why2 = extension_holds(fh, fg))
        ext = {"pgroup_extension", true, *why2};
    out.hypotheses.push_back(ext);

    const bool both_p = fg.aas && fh.aas && fg.p_group() && fg.primes == fh.primes;
    out.hypotheses.push_back({"aas_pgroups", both_p,
                              both_p ? "both factors are AAS p-groups for the same prime" : "not two AAS p-groups for one prime"});

    const bool same_support = fg.aas && fh.aas && fg.primes == fh.primes;
    out.hypotheses.push_back({"same_prime_support", same_support,
                              same_support ? "both factors are AAS with the same prime divisors"
                                           : "factors are not both AAS with equal prime divisors"});

    const Group product = direct_product(fg.group, fh.group, order_cap);
    out.order = product.order();
    out.report = is_aas(product);
    out.verdict = out.report.verdict;
    return out;
}

} // namespace aaslab
