#include "aaslab/genvec.hpp"

#include "aaslab/errors.hpp"
#include "aaslab/structure.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>

namespace aaslab {

namespace {

    using Kind = DecisionOutcome::Kind;

    DecisionOutcome actual(const Group& g, const Signature& sig, GeneratingVector v, Method method)
    {
        if (!verify(g, sig, v).valid())
            throw std::logic_error(to_string(method) + " produced an invalid vector for " + sig.to_string());
        DecisionOutcome out;
        out.kind = Kind::Actual;
        out.method = method;
        out.vector = std::move(v);
        return out;
    }

} // namespace

DecisionOutcome decide(const Group& g, const Signature& sig, const DecideOptions& options)
{
    DecisionOutcome out;
    const auto orders = order_set(g);
    for (unsigned m : sig.tail) {
        if (!std::binary_search(orders.begin(), orders.end(), m)) {
            out.kind = Kind::NotPotential;
            out.reason = ExclusionReason{0, {m}, std::to_string(m) + " is not an element order"};
            return out;
        }
    }
    if (!is_potential(g, sig)) {
        out.kind = Kind::NotPotential;
        out.reason = exclusion_reason(orders, g.order(), sig);
        return out;
    }

    std::optional<AasBounds> own_bounds;
    const AasBounds* bounds = options.bounds;
    if (!bounds && is_aas(g).verdict) {
        own_bounds = compute_bounds(g);
        bounds = &*own_bounds;
    }
    if (bounds) {
        if (high_genus_applies(sig, *bounds))
            return actual(g, sig, construct_high_genus(g, sig, *bounds), Method::ConstructedHighGenus);
        if (long_tail_applies(sig, *bounds))
            return actual(g, sig, construct_long_tail(g, sig, *bounds), Method::ConstructedLongTail);
    }

    std::optional<ConjugacyData> own_classes;
    const ConjugacyData* classes = options.classes;
    if (!classes) {
        own_classes = conjugacy_classes(g);
        classes = &*own_classes;
    }

    std::optional<HomCountContext> own_context;
    const HomCountContext* context = options.context;
    if (!context && g.order() <= kDefaultLatticeCap) {
        own_context = build_context(g);
        context = &*own_context;
    }
    if (context && context->has_lattice()) {
        BigInt count = count_generating_tuples(*context, sig);
        if (count == 0) {
            out.kind = Kind::NonSignature;
            out.method = Method::CountingZero;
            out.count = std::move(count);
            return out;
        }
        out.kind = Kind::Actual;
        out.method = Method::Counting;
        out.count = std::move(count);
        if (options.extract_witness) {
            const auto found = search(g, *classes, sig, options.budget.nodes);
            out.nodes_spent = found.nodes;
            if (found.vector) {
                if (!verify(g, sig, *found.vector).valid())
                    throw std::logic_error("search produced an invalid vector for " + sig.to_string());
                out.vector = found.vector;
            }
        }
        return out;
    }

    const auto found = search(g, *classes, sig, options.budget.nodes);
    out.nodes_spent = found.nodes;
    switch (found.status) {
    case SearchStatus::Found: {
        auto result = actual(g, sig, *found.vector, Method::Search);
        result.nodes_spent = found.nodes;
        return result;
    }
    case SearchStatus::Exhausted:
        out.kind = Kind::NonSignature;
        out.method = Method::ExhaustedSearch;
        return out;
    case SearchStatus::BudgetExhausted:
        out.kind = Kind::Unknown;
        return out;
    }
    return out;
}

NonSignatureSet non_signature_set(const Group& g, const Budget& budget, const AasBounds* bounds,
                                  const HomCountContext* context)
{
    const auto start = std::chrono::steady_clock::now();
    std::optional<AasBounds> own_bounds;
    if (!bounds) {
        own_bounds = compute_bounds(g); // throws NotAas
        bounds = &*own_bounds;
    }
    std::optional<HomCountContext> own_context;
    if (!context) {
        own_context = build_context(g);
        context = &*own_context;
    }
    const ConjugacyData classes = conjugacy_classes(g);

    NonSignatureSet result;
    result.genus_threshold = bounds->genus_threshold();
    for (const auto& ob : bounds->per_order)
        result.tail_limits.emplace_back(ob.order, ob.tail_limit());

    // the residual box: h below the genus threshold, every t_i within its limit
    std::vector<Signature> box;
    const std::size_t r = result.tail_limits.size();
    std::vector<unsigned> t(r, 0);
    for (unsigned h = 0; h < result.genus_threshold; ++h) {
        std::fill(t.begin(), t.end(), 0u);
        while (true) {
            ++result.box_size;
            std::vector<unsigned> tail;
            for (std::size_t i = 0; i < r; ++i)
                tail.insert(tail.end(), t[i], result.tail_limits[i].first);
            Signature sig{h, std::move(tail)};
            if (is_potential(g, sig))
                box.push_back(std::move(sig));
            std::size_t i = 0;
            while (i < r && t[i] == result.tail_limits[i].second)
                t[i++] = 0;
            if (i == r)
                break;
            ++t[i];
        }
    }
    result.potential_in_box = box.size();

    DecideOptions options;
    options.budget = budget;
    options.bounds = bounds;
    options.context = context;
    options.classes = &classes;
    options.extract_witness = false;

    std::vector<DecisionOutcome> outcomes(box.size());
    std::atomic<bool> timed_out{false};
    #pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < box.size(); ++k) {
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (timed_out || elapsed > budget.seconds) {
            timed_out = true;
            continue; // left Unknown
        }
        outcomes[k] = decide(g, box[k], options);
    }

    for (std::size_t k = 0; k < box.size(); ++k) {
        switch (outcomes[k].kind) {
        case Kind::Actual: ++result.actual_in_box; break;
        case Kind::NonSignature: {
            const Rational genus = rh_genus(g.order(), box[k]);
            result.non_signatures.push_back(
                {box[k], outcomes[k].method, std::int64_t(numerator(genus))});
            break;
        }
        case Kind::Unknown: result.undecided.push_back(box[k]); break;
        case Kind::NotPotential: throw std::logic_error("box signature lost potentiality");
        }
    }
    result.authoritative = result.undecided.empty();
    std::sort(result.non_signatures.begin(), result.non_signatures.end(),
              [](const NonSignatureSet::Entry& a, const NonSignatureSet::Entry& b) {
                  return std::tie(a.genus, a.signature) < std::tie(b.genus, b.signature);
              });
    return result;
}

} // namespace aaslab
