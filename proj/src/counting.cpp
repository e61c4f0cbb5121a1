#include "aaslab/genvec.hpp"

#include "aaslab/errors.hpp"
#include "aaslab/structure.hpp"

#include <algorithm>

namespace aaslab {

HomCountContext::HomCountContext(Group g, std::optional<SubgroupLattice> lattice)
    : group_(std::move(g)), lattice_(std::move(lattice))
{
    commutator_count_ = kernels::commutator_counts(group_);
    for (unsigned n : order_set(group_)) {
        ElementSet mask(group_.order());
        for (Element x : elements_of_order(group_, n))
            mask.set(x);
        order_indicator_.emplace(n, std::move(mask));
    }
    if (lattice_) {
        locals_.resize(lattice_->size());
        local_flags_ = std::make_unique<std::once_flag[]>(lattice_->size());
    }
}

const ElementSet& HomCountContext::order_indicator(unsigned n) const
{
    const auto it = order_indicator_.find(n);
    if (it == order_indicator_.end())
        throw OrderNotInGroup(n);
    return it->second;
}

const SubgroupLattice& HomCountContext::lattice() const
{
    if (!lattice_)
        throw LatticeUnavailable("no subgroup lattice for " + group_.label());
    return *lattice_;
}

const LocalAlgebra& HomCountContext::local(std::size_t i) const
{
    const auto& lat = lattice();
    std::call_once(local_flags_[i], [&] {
        locals_[i] = std::make_unique<LocalAlgebra>(build_local_algebra(group_, lat.subgroups[i]));
    });
    return *locals_[i];
}

HomCountContext build_context(const Group& g, std::size_t lattice_cap)
{
    std::optional<SubgroupLattice> lattice;
    if (g.order() <= lattice_cap)
        lattice = subgroup_lattice(g, lattice_cap);
    return HomCountContext(g, std::move(lattice));
}

namespace {

    std::vector<std::uint64_t> class_matrix(const Group& g, const LocalAlgebra& la, const std::vector<std::uint64_t>& weight)
    {
        const std::size_t k = la.class_count();
        std::vector<std::uint64_t> t(k * k, 0);
        for (std::size_t c = 0; c < k; ++c) {
            const Element z = la.representatives[c];
            for (Element y : la.elements) {
                if (weight[y] == 0)
                    continue;
                t[c * k + la.class_of[g.mul(z, g.inv(y))]] += weight[y];
            }
        }
        return t;
    }

} // namespace

LocalAlgebra build_local_algebra(const Group& g, const Subgroup& h)
{
    LocalAlgebra la;
    la.elements = h.elements;
    constexpr std::size_t unassigned = std::size_t(-1);
    la.class_of.assign(g.order(), unassigned);

    std::vector<Element> conjugators = h.generators;
    if (conjugators.empty() && h.size() > 1)
        conjugators = closure_of(g, h.elements).generators;
    // h.elements is sorted, so each class is discovered from its minimum
    for (Element start : h.elements) {
        if (la.class_of[start] != unassigned)
            continue;
        const std::size_t id = la.representatives.size();
        la.representatives.push_back(start);
        la.class_of[start] = id;
        std::vector<Element> members{start};
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Element s : conjugators) {
                const Element y = g.conjugate(members[i], s);
                if (la.class_of[y] == unassigned) {
                    la.class_of[y] = id;
                    members.push_back(y);
                }
            }
    }
    la.identity_class = la.class_of[kIdentity];

    const auto k = kernels::commutator_counts(g, h.elements);
    la.commutator_matrix = class_matrix(g, la, k);
    std::map<unsigned, std::vector<std::uint64_t>> indicator;
    for (Element x : h.elements) {
        if (x == kIdentity)
            continue;
        auto& w = indicator[g.element_order(x)];
        if (w.empty())
            w.assign(g.order(), 0);
        w[x] = 1;
    }
    for (const auto& [n, w] : indicator)
        la.order_matrix.emplace(n, class_matrix(g, la, w));
    return la;
}

namespace {

    void apply(const std::vector<std::uint64_t>& t, std::vector<BigInt>& f)
    {
        const std::size_t k = f.size();
        std::vector<BigInt> out(k);
        for (std::size_t c = 0; c < k; ++c) {
            BigInt acc = 0;
            for (std::size_t d = 0; d < k; ++d)
                if (t[c * k + d] != 0 && f[d] != 0)
                    acc += f[d] * t[c * k + d];
            out[c] = std::move(acc);
        }
        f = std::move(out);
    }

    BigInt count_with(const LocalAlgebra& la, const Signature& sig)
    {
        for (unsigned m : sig.tail)
            if (!la.order_matrix.count(m))
                return 0;
        std::vector<BigInt> f(la.class_count());
        f[la.identity_class] = 1;
        for (unsigned i = 0; i < sig.h; ++i)
            apply(la.commutator_matrix, f);
        for (unsigned m : sig.tail)
            apply(la.order_matrix.at(m), f);
        return f[la.identity_class];
    }

    bool has_orders(const Group& g, const Subgroup& h, const Signature& sig)
    {
        std::vector<unsigned> present;
        for (Element x : h.elements)
            present.push_back(g.element_order(x));
        std::sort(present.begin(), present.end());
        for (unsigned m : sig.tail)
            if (!std::binary_search(present.begin(), present.end(), m))
                return false;
        return true;
    }

} // namespace

BigInt count_tuples(const HomCountContext& ctx, const Subgroup& h, const Signature& sig)
{
    const Group& g = ctx.group();
    if (!has_orders(g, h, sig))
        return 0;
    if (ctx.has_lattice()) {
        const std::size_t i = ctx.lattice().find(h.membership);
        if (i < ctx.lattice().size())
            return count_with(ctx.local(i), sig);
    }
    return count_with(build_local_algebra(g, h), sig);
}

BigInt count_tuples_elementwise(const HomCountContext& ctx, const Subgroup& h, const Signature& sig)
{
    const Group& g = ctx.group();
    std::vector<BigInt> f(g.order()), next(g.order());
    f[kIdentity] = 1;
    if (sig.h > 0) {
        const auto k = h.is_whole(g) ? ctx.commutator_count() : kernels::commutator_counts(g, h.elements);
        for (unsigned i = 0; i < sig.h; ++i) {
            kernels::convolve(g, h.elements, f, k, next);
            std::swap(f, next);
        }
    }
    for (unsigned m : sig.tail) {
        std::vector<std::uint64_t> w(g.order(), 0);
        for (Element x : h.elements)
            w[x] = g.element_order(x) == m ? 1 : 0;
        kernels::convolve(g, h.elements, f, w, next);
        std::swap(f, next);
    }
    return f[kIdentity];
}

BigInt count_generating_tuples(const HomCountContext& ctx, const Signature& sig)
{
    const auto& lat = ctx.lattice();
    const Group& g = ctx.group();
    std::vector<std::size_t> terms;
    for (std::size_t i = 0; i < lat.size(); ++i)
        if (lat.moebius[i] != 0 && has_orders(g, lat.subgroups[i], sig))
            terms.push_back(i);

    std::vector<BigInt> parts(terms.size());
    #pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < terms.size(); ++k)
        parts[k] = count_with(ctx.local(terms[k]), sig) * lat.moebius[terms[k]];

    BigInt total = 0;
    for (const auto& p : parts)
        total += p;
    if (total < 0)
        throw std::logic_error("negative generating-vector count for " + sig.to_string());
    return total;
}

} // namespace aaslab
