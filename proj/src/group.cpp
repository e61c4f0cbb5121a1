#include "aaslab/group.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace aaslab {

struct Group::Impl {
    std::size_t order = 0;
    std::string label;
    std::vector<std::string> names;
    std::vector<Element> generators;
    std::vector<Element> inverse;
    std::vector<unsigned> element_order;
    unsigned exponent = 1;
    std::uint64_t two_part = 1;
    RowSource source;

    bool dense = false;
    std::vector<Element> table;

    // Lazy rows for large groups. call_once makes concurrent fills idempotent.
    mutable std::vector<std::vector<Element>> lazy_rows;
    mutable std::unique_ptr<std::once_flag[]> row_flags;

    std::span<const Element> row(Element x) const
    {
        if (dense)
            return {table.data() + std::size_t(x) * order, order};
        std::call_once(row_flags[x], [&] {
            std::vector<Element> r(order);
            source(x, r);
            lazy_rows[x] = std::move(r);
        });
        return lazy_rows[x];
    }
};

Group::Group(Parts parts)
{
    auto impl = std::make_shared<Impl>();
    impl->order = parts.names.size();
    if (impl->order == 0 || impl->order > kMaxOrderCap)
        throw std::invalid_argument("group order out of representable range");
    if (parts.inverse.size() != impl->order || parts.element_order.size() != impl->order)
        throw std::invalid_argument("inconsistent group tables");
    impl->label = std::move(parts.label);
    impl->names = std::move(parts.names);
    impl->generators = std::move(parts.generators);
    impl->inverse = std::move(parts.inverse);
    impl->element_order = std::move(parts.element_order);
    impl->source = std::move(parts.rows);

    for (unsigned o : impl->element_order)
        impl->exponent = std::lcm(impl->exponent, o);
    std::uint64_t n = impl->order;
    while (n % 2 == 0) {
        impl->two_part *= 2;
        n /= 2;
    }

    const std::size_t order = impl->order;
    if (order <= kDenseTableLimit) {
        impl->dense = true;
        impl->table.resize(order * order);
        #pragma omp parallel for schedule(static)
        for (std::size_t x = 0; x < order; ++x)
            impl->source(Element(x), std::span<Element>(impl->table.data() + x * order, order));
    } else {
        impl->lazy_rows.resize(order);
        impl->row_flags = std::make_unique<std::once_flag[]>(order);
    }
    impl_ = std::move(impl);
}

std::size_t Group::order() const noexcept { return impl_->order; }
const std::string& Group::label() const noexcept { return impl_->label; }
const std::string& Group::name(Element x) const { return impl_->names.at(x); }
const std::vector<Element>& Group::generators() const noexcept { return impl_->generators; }
std::span<const Element> Group::row(Element x) const { return impl_->row(x); }
const std::vector<Element>& Group::inverse() const noexcept { return impl_->inverse; }
const std::vector<unsigned>& Group::element_orders() const noexcept { return impl_->element_order; }
unsigned Group::exponent() const noexcept { return impl_->exponent; }
std::uint64_t Group::two_part() const noexcept { return impl_->two_part; }
bool Group::is_dense() const noexcept { return impl_->dense; }

Element Group::power(Element x, std::uint64_t k) const
{
    k %= element_order(x);
    const auto r = row(x);
    Element p = kIdentity;
    for (std::uint64_t i = 0; i < k; ++i)
        p = r[p];
    return p;
}

bool Group::is_abelian() const
{
    for (Element a : generators())
        for (Element b : generators())
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

std::vector<std::string> Group::names_of(std::span<const Element> xs) const
{
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (Element x : xs)
        out.push_back(name(x));
    return out;
}

} // namespace aaslab
