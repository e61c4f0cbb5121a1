#include "aaslab/report.hpp"

#include "aaslab/errors.hpp"
#include "aaslab/structure.hpp"

namespace aaslab::report {

namespace {

    Json names(const Group& g, const std::vector<Element>& xs)
    {
        return Json(g.names_of(xs));
    }

    std::string rational_text(const Rational& r)
    {
        if (denominator(r) == 1)
            return numerator(r).str();
        return numerator(r).str() + "/" + denominator(r).str();
    }

    Json failures_json(const std::vector<ConditionFailure>& fs)
    {
        Json out = Json::array();
        for (const auto& f : fs)
            out.push_back({{"condition", f.condition}, {"order", f.order}, {"note", f.note}});
        return out;
    }

} // namespace

Json group_json(const GroupSpec& spec, const Group& g)
{
    return {
        {"spec", spec.canonical()},
        {"order", g.order()},
        {"order_set", order_set(g)},
        {"exponent", g.exponent()},
        {"classification", to_string(classify(g))},
    };
}

Json signature_json(const Group& g, const Signature& sig)
{
    Json out{{"signature", sig.to_string()}, {"genus", rational_text(rh_genus(g.order(), sig))}};
    try {
        out["abbreviated"] = abbreviate(g, sig).to_string();
    } catch (const OrderNotInGroup&) {
        out["abbreviated"] = nullptr;
    }
    return out;
}

Json vector_json(const Group& g, const GeneratingVector& v)
{
    return {{"a", names(g, v.a)}, {"b", names(g, v.b)}, {"c", names(g, v.c)}};
}

Json aas_json(const Group& g, const AasReport& r)
{
    Json c1 = Json::object(), c2 = Json::object();
    for (const auto& [n, w] : r.condition1)
        c1[std::to_string(n)] = w ? Json(g.name(*w)) : Json(nullptr);
    for (const auto& [n, gens] : r.condition2)
        c2[std::to_string(n)] = gens ? names(g, *gens) : Json(nullptr);
    return {
        {"verdict", r.verdict},
        {"classification", to_string(r.classification)},
        {"condition1", c1},
        {"condition2", c2},
        {"failures", failures_json(r.failures)},
    };
}

Json bounds_json(const Group& g, const AasBounds& b)
{
    Json per = Json::array();
    for (const auto& ob : b.per_order)
        per.push_back({
            {"order", ob.order},
            {"L", ob.L()},
            {"M", ob.M()},
            {"N", ob.N()},
            {"alpha_M", ob.alpha_even},
            {"alpha_N", ob.alpha_odd},
            {"tail_limit", ob.tail_limit()},
            {"odd_product", names(g, ob.odd_product)},
            {"even_vector", names(g, ob.even_vector)},
        });
    return {
        {"generating_set", names(g, b.generating_set)},
        {"commutator_width", b.width},
        {"genus_threshold", b.genus_threshold()},
        {"N", b.N},
        {"alpha", b.alpha},
        {"coarse_tail_threshold", b.tail_threshold()},
        {"per_order", per},
    };
}

Json outcome_json(const Group& g, const Signature& sig, const DecisionOutcome& d)
{
    Json out = signature_json(g, sig);
    out["outcome"] = to_string(d.kind);
    out["method"] = d.kind == DecisionOutcome::Kind::NotPotential ? Json(nullptr) : Json(to_string(d.method));
    out["vector"] = d.vector ? vector_json(g, *d.vector) : Json(nullptr);
    out["count"] = d.count ? Json(d.count->str()) : Json(nullptr);
    if (d.reason)
        out["reason"] = {{"item", d.reason->item}, {"orders", d.reason->orders}, {"description", d.reason->description}};
    else
        out["reason"] = nullptr;
    out["nodes_spent"] = d.nodes_spent;
    return out;
}

Json nonsig_json(const Group& g, const NonSignatureSet& set)
{
    Json limits = Json::array();
    for (auto [n, t] : set.tail_limits)
        limits.push_back({{"order", n}, {"limit", t}});
    Json list = Json::array();
    for (const auto& e : set.non_signatures)
        list.push_back({
            {"signature", e.signature.to_string()},
            {"abbreviated", abbreviate(g, e.signature).to_string()},
            {"genus", e.genus},
            {"method", to_string(e.method)},
        });
    Json undecided = Json::array();
    for (const auto& s : set.undecided)
        undecided.push_back(s.to_string());
    return {
        {"authoritative", set.authoritative},
        {"genus_threshold", set.genus_threshold},
        {"tail_limits", limits},
        {"box_size", set.box_size},
        {"potential_in_box", set.potential_in_box},
        {"actual_in_box", set.actual_in_box},
        {"non_signatures", list},
        {"undecided", undecided},
    };
}

Json scan_row_json(const FamilyScanRow& row)
{
    return {
        {"spec", row.spec.canonical()},
        {"order", row.order},
        {"verdict", row.verdict ? Json(*row.verdict) : Json(nullptr)},
        {"expected", row.expected ? Json(*row.expected) : Json(nullptr)},
        {"basis", row.basis.empty() ? Json(nullptr) : Json(row.basis)},
        {"agrees", row.agrees},
        {"classification", row.verdict ? Json(to_string(row.classification)) : Json(nullptr)},
        {"failures", failures_json(row.failures)},
        {"error", row.error.empty() ? Json(nullptr) : Json(row.error)},
    };
}

Json product_json(const ProductCheck& check)
{
    Json hyps = Json::array();
    for (const auto& h : check.hypotheses)
        hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
    return {
        {"left", check.left.canonical()},
        {"right", check.right.canonical()},
        {"left_aas", check.left_aas},
        {"right_aas", check.right_aas},
        {"order", check.order},
        {"hypotheses", hyps},
        {"verdict", check.verdict},
        {"consistent", check.consistent()},
        {"failures", failures_json(check.report.failures)},
    };
}

} // namespace aaslab::report
