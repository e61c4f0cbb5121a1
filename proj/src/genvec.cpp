#include "aaslab/genvec.hpp"

#include "aaslab/errors.hpp"
#include "aaslab/structure.hpp"

namespace aaslab {

std::vector<Element> GeneratingVector::entries() const
{
    std::vector<Element> out;
    out.reserve(a.size() + b.size() + c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.push_back(a[i]);
        out.push_back(b[i]);
    }
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

std::string VerifyResult::failure() const
{
    if (!generates)
        return "generation";
    if (!orders_match)
        return "orders";
    if (!relation_holds)
        return "relation";
    return "";
}

VerifyResult verify(const Group& g, const Signature& sig, const GeneratingVector& v)
{
    if (v.a.size() != sig.h || v.b.size() != sig.h || v.c.size() != sig.s())
        throw ShapeMismatch("vector shape (" + std::to_string(v.a.size()) + "," + std::to_string(v.b.size()) + ","
                            + std::to_string(v.c.size()) + ") does not fit " + sig.to_string());
    for (Element x : v.entries())
        if (x >= g.order())
            throw ShapeMismatch("entry " + std::to_string(x) + " is not an element of " + g.label());

    VerifyResult r;
    const auto entries = v.entries();
    r.generates = closure_of(g, entries).is_whole(g);
    r.orders_match = true;
    for (std::size_t j = 0; j < v.c.size(); ++j)
        r.orders_match = r.orders_match && g.element_order(v.c[j]) == sig.tail[j];
    Element product = kIdentity;
    for (std::size_t i = 0; i < v.a.size(); ++i)
        product = g.mul(product, g.commutator(v.a[i], v.b[i]));
    for (Element x : v.c)
        product = g.mul(product, x);
    r.relation_holds = product == kIdentity;
    return r;
}

GeneratingVector sort_tail(const Group& g, GeneratingVector v)
{
    auto& c = v.c;
    for (std::size_t pass = 0; pass < c.size(); ++pass) {
        bool moved = false;
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            if (g.element_order(c[i]) > g.element_order(c[i + 1])) {
                const Element x = c[i], y = c[i + 1];
                c[i] = y;
                c[i + 1] = g.conjugate(x, y);
                moved = true;
            }
        }
        if (!moved)
            break;
    }
    return v;
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::ConstructedHighGenus: return "constructed-high-genus";
    case Method::ConstructedLongTail: return "constructed-long-tail";
    case Method::Search: return "search";
    case Method::Counting: return "counting";
    case Method::ExhaustedSearch: return "exhausted-search";
    case Method::CountingZero: return "counting-zero";
    case Method::None: return "none";
    }
    return "none";
}

std::string to_string(DecisionOutcome::Kind k)
{
    switch (k) {
    case DecisionOutcome::Kind::Actual: return "actual";
    case DecisionOutcome::Kind::NonSignature: return "non-signature";
    case DecisionOutcome::Kind::NotPotential: return "not-potential";
    case DecisionOutcome::Kind::Unknown: return "unknown";
    }
    return "unknown";
}

} // namespace aaslab
