#include "aaslab/cli.hpp"

#include "aaslab/aas.hpp"
#include "aaslab/cache.hpp"
#include "aaslab/errors.hpp"
#include "aaslab/families.hpp"
#include "aaslab/genvec.hpp"
#include "aaslab/structure.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <omp.h>

namespace aaslab::cli {

using report::Json;

namespace {

    struct Session {
        Options options;
        ResultCache cache = ResultCache::disabled();
        Json cache_status = Json::object();

        std::size_t order_cap() const { return options.max_order.value_or(kDefaultOrderCap); }

        AasBounds bounds(const GroupSpec& spec, const Group& g)
        {
            if (auto hit = cache.load_bounds(spec.canonical(), g)) {
                cache_status["bounds"] = "hit";
                return std::move(*hit);
            }
            cache_status["bounds"] = cache.enabled() ? "miss" : "off";
            AasBounds b = compute_bounds(g);
            cache.store_bounds(spec.canonical(), b);
            return b;
        }

        HomCountContext context(const GroupSpec& spec, const Group& g)
        {
            if (g.order() > options.lattice_cap)
                return HomCountContext(g, std::nullopt);
            if (auto hit = cache.load_lattice(spec.canonical(), g)) {
                cache_status["lattice"] = "hit";
                return HomCountContext(g, std::move(hit));
            }
            cache_status["lattice"] = cache.enabled() ? "miss" : "off";
            SubgroupLattice lattice = subgroup_lattice(g, options.lattice_cap);
            cache.store_lattice(spec.canonical(), lattice);
            return HomCountContext(g, std::move(lattice));
        }
    };

    void need_args(const Command& cmd, std::size_t lo, std::size_t hi)
    {
        if (cmd.args.size() < lo || cmd.args.size() > hi)
            throw Error(cmd.name + ": expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi))
                        + " argument(s), got " + std::to_string(cmd.args.size()));
    }

    std::string join(const std::vector<std::string>& xs, const char* sep = ", ")
    {
        std::string out;
        for (std::size_t i = 0; i < xs.size(); ++i)
            out += (i ? sep : "") + xs[i];
        return out;
    }

    std::string join_orders(const std::vector<unsigned>& xs)
    {
        std::vector<std::string> parts;
        for (unsigned x : xs)
            parts.push_back(std::to_string(x));
        return join(parts, ",");
    }

    std::string group_line(const Json& group)
    {
        std::ostringstream os;
        os << group["spec"].get<std::string>() << "  order " << group["order"] << "  exponent " << group["exponent"]
           << "  orders {" << join_orders(group["order_set"].get<std::vector<unsigned>>()) << "}  "
           << group["classification"].get<std::string>() << '\n';
        return os.str();
    }

    struct Parsed {
        GroupSpec spec;
        Group group;
    };

    Parsed load_group(const Session& s, const std::string& text)
    {
        GroupSpec spec = parse_group_spec(text);
        Group g = build_group(spec, s.order_cap());
        return {std::move(spec), std::move(g)};
    }

    // --- commands ---------------------------------------------------------

    Outcome group_info(Session& s, const Command& cmd, Json& group)
    {
        need_args(cmd, 1, 1);
        const auto [spec, g] = load_group(s, cmd.args[0]);
        group = report::group_json(spec, g);
        const Subgroup derived = derived_subgroup(g);
        const ConjugacyData classes = conjugacy_classes(g);
        std::vector<std::size_t> sizes;
        for (const auto& c : classes.classes)
            sizes.push_back(c.size());
        Outcome out;
        out.report["payload"] = {
            {"generators", g.names_of(g.generators())},
            {"abelian", derived.size() == 1},
            {"perfect", derived.size() == g.order()},
            {"derived_order", derived.size()},
            {"class_count", classes.classes.size()},
            {"class_sizes", sizes},
            {"two_part", g.two_part()},
            {"dense_table", g.is_dense()},
        };
        std::ostringstream os;
        os << group_line(group) << "generators: " << join(g.names_of(g.generators())) << '\n'
           << "[G,G] order " << derived.size() << ", " << classes.classes.size() << " conjugacy classes\n";
        out.text = os.str();
        return out;
    }

    Outcome aas_check(Session& s, const Command& cmd, Json& group)
    {
        need_args(cmd, 1, 1);
        const auto [spec, g] = load_group(s, cmd.args[0]);
        group = report::group_json(spec, g);
        const AasReport r = is_aas(g);
        Outcome out;
        out.report["payload"] = report::aas_json(g, r);
        std::ostringstream os;
        os << group_line(group) << "AAS: " << (r.verdict ? "yes" : "no") << '\n';
        for (const auto& f : r.failures)
            os << "  condition " << f.condition << " fails at order " << f.order << ": " << f.note << '\n';
        if (r.verdict && s.options.bounds) {
            const AasBounds b = s.bounds(spec, g);
            out.report["payload"]["bounds"] = report::bounds_json(g, b);
            os << "genus threshold " << b.genus_threshold() << " (generators " << b.gen_count() << ", commutator width "
               << b.width << ")\n";
            for (const auto& ob : b.per_order)
                os << "  order " << std::setw(3) << ob.order << ": L=" << ob.L() << " M=" << ob.M() << " N=" << ob.N()
                   << " alpha_M=" << ob.alpha_even << " alpha_N=" << ob.alpha_odd << " tail limit " << ob.tail_limit()
                   << '\n';
        }
        out.text = os.str();
        out.exit_code = r.verdict ? kOk : kNegative;
        return out;
    }

    Outcome sig_genus(Session& s, const Command& cmd, Json& group)
    {
        need_args(cmd, 2, 2);
        const auto [spec, g] = load_group(s, cmd.args[0]);
        const Signature sig = parse_signature(cmd.args[1]);
        group = report::group_json(spec, g);
        const Rational genus = rh_genus(g.order(), sig);
        Outcome out;
        out.report["payload"] = report::signature_json(g, sig);
        out.report["payload"]["integral"] = denominator(genus) == 1;
        out.text = group_line(group) + sig.to_string() + "  genus " + out.report["payload"]["genus"].get<std::string>() + '\n';
        return out;
    }

    Outcome sig_potential(Session& s, const Command& cmd, Json& group)
    {
        need_args(cmd, 1, 2);
        const auto [spec, g] = load_group(s, cmd.args[0]);
        group = report::group_json(spec, g);
        Outcome out;
        std::ostringstream os;
        os << group_line(group);
        if (cmd.args.size() == 2) {
            const Signature sig = parse_signature(cmd.args[1]);
            const bool potential = is_potential(g, sig);
            Json payload = report::signature_json(g, sig);
            payload["potential"] = potential;
            payload["reason"] = nullptr;
            if (!potential) {
                try {
                    if (auto r = exclusion_reason(g, sig))
                        payload["reason"] = {{"item", r->item}, {"orders", r->orders}, {"description", r->description}};
                } catch (const OrderNotInGroup& e) {
                    payload["reason"] = {{"item", 0}, {"orders", {e.order()}}, {"description", e.what()}};
                }
            }
            os << sig.to_string() << ": " << (potential ? "potential" : "not potential");
            if (!payload["reason"].is_null())
                os << " (" << payload["reason"]["description"].get<std::string>() << ")";
            os << '\n';
            out.report["payload"] = std::move(payload);
            out.exit_code = potential ? kOk : kNegative;
        } else {
            const unsigned max_genus = s.options.genus_max.value_or(10);
            Json list = Json::array();
            for (unsigned genus = 2; genus <= max_genus; ++genus)
                for (const auto& sig : enumerate_potential_by_genus(g, genus)) {
                    list.push_back({{"signature", sig.to_string()}, {"genus", genus}});
                    os << std::setw(5) << genus << "  " << sig.to_string() << '\n';
                }
            out.report["payload"] = {{"genus_max", max_genus}, {"signatures", std::move(list)}};
        }
        out.text = os.str();
        return out;
    }

    Outcome sig_decide(Session& s, const Command& cmd, Json& group)
    {
        need_args(cmd, 2, 2);
        const auto [spec, g] = load_group(s, cmd.args[0]);
        const Signature sig = parse_signature(cmd.args[1]);
        group = report::group_json(spec, g);

        DecideOptions options;
        options.budget.nodes = s.options.budget;
        std::optional<AasBounds> bounds;
        std::optional<HomCountContext> ctx;
        std::optional<ConjugacyData> classes;
        bool potential = true;
        for (unsigned m : sig.tail)
            potential = potential && g.order() % m == 0;
        potential = potential && is_potential(g, sig);
        if (potential) {
            if (is_aas(g).verdict) {
                bounds = s.bounds(spec, g);
                options.bounds = &*bounds;
            }
            ctx.emplace(s.context(spec, g));
            options.context = &*ctx;
            classes = conjugacy_classes(g);
            options.classes = &*classes;
        }
        const DecisionOutcome d = decide(g, sig, options);
        Outcome out;
        out.report["payload"] = report::outcome_json(g, sig, d);
        out.report["payload"]["budget"] = {{"nodes", s.options.budget}};
        std::ostringstream os;
        os << group_line(group) << sig.to_string() << ": " << to_string(d.kind);
        if (d.kind != DecisionOutcome::Kind::NotPotential)
            os << " (" << to_string(d.method) << ")";
        if (d.reason)
            os << " (" << d.reason->description << ")";
        os << '\n';
        if (d.count)
            os << "generating vectors: " << d.count->str() << '\n';
        if (d.vector) {
            const auto& v = *d.vector;
            for (std::size_t i = 0; i < v.a.size(); ++i)
                os << "  a" << i + 1 << " = " << g.name(v.a[i]) << ", b" << i + 1 << " = " << g.name(v.b[i]) << '\n';
            for (std::size_t j = 0; j < v.c.size(); ++j)
                os << "  c" << j + 1 << " = " << g.name(v.c[j]) << '\n';
        }
        if (d.kind == DecisionOutcome::Kind::Unknown)
            os << "undecided after " << d.nodes_spent << " of " << s.options.budget << " search nodes\n";
        out.text = os.str();
        switch (d.kind) {
        case DecisionOutcome::Kind::Actual: out.exit_code = kOk; break;
        case DecisionOutcome::Kind::NonSignature:
        case DecisionOutcome::Kind::NotPotential: out.exit_code = kNegative; break;
        case DecisionOutcome::Kind::Unknown: out.exit_code = kUnknown; break;
        }
        return out;
    }

    Outcome sig_nonsigs(Session& s, const Command& cmd, Json& group)
    {
        need_args(cmd, 1, 1);
        const auto [spec, g] = load_group(s, cmd.args[0]);
        group = report::group_json(spec, g);
        Outcome out;
        const AasReport r = is_aas(g);
        if (!r.verdict) {
            std::string why;
            try {
                compute_bounds(g);
            } catch (const NotAas& e) {
                why = e.what();
            }
            out.report["payload"] = {{"aas", false}, {"reason", why}};
            out.text = group_line(group) + why + '\n';
            out.exit_code = kNegative;
            return out;
        }
        const AasBounds b = s.bounds(spec, g);
        const HomCountContext ctx = s.context(spec, g);
        const NonSignatureSet set = non_signature_set(g, Budget{s.options.budget, s.options.seconds}, &b, &ctx);
        Json payload = report::nonsig_json(g, set);
        payload["aas"] = true;
        payload["bounds"] = report::bounds_json(g, b);
        payload["budget"] = {{"nodes", s.options.budget}, {"seconds", s.options.seconds}};
        out.report["payload"] = std::move(payload);

        std::ostringstream os;
        os << group_line(group) << "genus threshold " << set.genus_threshold << "; tail limits";
        for (auto [n, t] : set.tail_limits)
            os << " [" << n << "," << t << "]";
        os << "\nbox " << set.box_size << " tuples, " << set.potential_in_box << " potential, " << set.actual_in_box
           << " actual\n"
           << set.non_signatures.size() << " non-signatures" << (set.authoritative ? "" : " (incomplete)") << ":\n";
        for (const auto& e : set.non_signatures)
            os << std::setw(6) << e.genus << "  " << std::left << std::setw(24) << e.signature.to_string() << std::right
               << abbreviate(g, e.signature).to_string() << '\n';
        if (!set.authoritative)
            os << set.undecided.size() << " signatures left undecided within the budget\n";
        out.text = os.str();
        out.exit_code = set.authoritative ? kOk : kUnknown;
        return out;
    }

    std::vector<unsigned> parse_params(const std::string& text)
    {
        std::vector<unsigned> out;
        std::size_t i = 0;
        while (i < text.size()) {
            std::size_t j = text.find(',', i);
            if (j == std::string::npos)
                j = text.size();
            const std::string part = text.substr(i, j - i);
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(part, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != part.size())
                throw ParseError("expected a comma-separated list of numbers", i);
            out.push_back(unsigned(v));
            i = j + 1;
        }
        if (out.empty())
            throw ParseError("expected at least one parameter", 0);
        return out;
    }

    Outcome scan(Session& s, const Command& cmd, Json&)
    {
        need_args(cmd, 2, 2);
        ScanRange range{parse_params(cmd.args[1]), s.options.max_order.value_or(128)};
        const auto rows = scan_family(cmd.args[0], range, std::max<std::size_t>(range.max_order, kDefaultOrderCap));
        Outcome out;
        Json list = Json::array();
        bool all_agree = true, any_error = false;
        std::ostringstream os;
        os << std::left << std::setw(18) << "group" << std::right << std::setw(7) << "order" << std::setw(9) << "verdict"
           << std::setw(10) << "expected" << "  basis\n";
        for (const auto& row : rows) {
            list.push_back(report::scan_row_json(row));
            all_agree = all_agree && row.agrees;
            any_error = any_error || !row.error.empty();
            auto yn = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; };
            os << std::left << std::setw(18) << row.spec.canonical() << std::right << std::setw(7) << row.order
               << std::setw(9) << (row.error.empty() ? yn(row.verdict) : "error") << std::setw(10) << yn(row.expected)
               << "  " << row.basis << (row.agrees ? "" : "  DISAGREES") << '\n';
        }
        out.report["payload"] = {{"family", cmd.args[0]},
                                 {"params", range.params},
                                 {"max_order", range.max_order},
                                 {"all_agree", all_agree},
                                 {"rows", std::move(list)}};
        out.text = os.str();
        out.exit_code = any_error ? kError : all_agree ? kOk : kNegative;
        return out;
    }

    Outcome product_check(Session& s, const Command& cmd, Json& group)
    {
        need_args(cmd, 2, 2);
        const GroupSpec left = parse_group_spec(cmd.args[0]);
        const GroupSpec right = parse_group_spec(cmd.args[1]);
        const ProductCheck check = check_product_theorems(left, right, s.order_cap());
        const GroupSpec product = GroupSpec::product({left, right});
        Outcome out;
        group = {{"spec", product.canonical()}, {"order", check.order}};
        {
            const Group g = build_group(product, s.order_cap());
            group = report::group_json(product, g);
        }
        out.report["payload"] = report::product_json(check);
        std::ostringstream os;
        os << group_line(group);
        for (const auto& h : check.hypotheses)
            os << "  " << std::left << std::setw(20) << h.name << std::right << (h.holds ? "holds   " : "fails   ") << h.detail
               << '\n';
        os << "product AAS: " << (check.verdict ? "yes" : "no") << (check.consistent() ? "" : "  (contradicts a hypothesis set)")
           << '\n';
        out.text = os.str();
        out.exit_code = check.verdict ? kOk : kNegative;
        return out;
    }

    using Handler = Outcome (*)(Session&, const Command&, Json&);

    const std::vector<std::pair<std::string, Handler>>& handlers()
    {
        static const std::vector<std::pair<std::string, Handler>> table{
            {"group-info", group_info},   {"aas-check", aas_check},   {"sig-genus", sig_genus},
            {"sig-potential", sig_potential}, {"sig-decide", sig_decide}, {"sig-nonsigs", sig_nonsigs},
            {"scan", scan},               {"product-check", product_check},
        };
        return table;
    }

} // namespace

std::vector<std::string> command_names()
{
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers())
        out.push_back(name);
    return out;
}

Outcome execute(const Command& cmd)
{
    const auto start = std::chrono::steady_clock::now();
    Session session{cmd.options};
    if (!cmd.options.no_cache)
        session.cache = ResultCache(cmd.options.cache_dir ? std::filesystem::path(*cmd.options.cache_dir)
                                                          : ResultCache::default_directory());
    if (cmd.options.threads > 0)
        omp_set_num_threads(int(cmd.options.threads));

    Outcome out;
    Json group = nullptr;
    try {
        Handler handler = nullptr;
        for (const auto& [name, h] : handlers())
            if (name == cmd.name)
                handler = h;
        if (!handler)
            throw Error("unknown command '" + cmd.name + "'");
        out = handler(session, cmd, group);
    } catch (const std::exception& e) {
        Json error{{"type", "error"}, {"message", e.what()}};
        if (dynamic_cast<const ParseError*>(&e)) {
            error["type"] = "parse";
            error["position"] = static_cast<const ParseError&>(e).position();
        } else if (dynamic_cast<const OrderCapExceeded*>(&e)) {
            error["type"] = "order-cap";
        } else if (dynamic_cast<const InvalidSpec*>(&e)) {
            error["type"] = "invalid-spec";
        } else if (!dynamic_cast<const Error*>(&e)) {
            error["type"] = "internal";
        }
        out = Outcome{};
        out.report["payload"] = nullptr;
        out.report["error"] = std::move(error);
        out.text = std::string("error: ") + e.what() + '\n';
        out.exit_code = kError;
    }

    Json full;
    full["schema_version"] = report::kSchemaVersion;
    Json args = cmd.args;
    full["command"] = {{"name", cmd.name}, {"args", std::move(args)}};
    full["group"] = std::move(group);
    full["payload"] = out.report.contains("payload") ? out.report["payload"] : Json(nullptr);
    if (out.report.contains("error"))
        full["error"] = out.report["error"];
    full["exit_code"] = out.exit_code;
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    full["timing"] = {{"seconds", seconds}, {"threads", omp_get_max_threads()}};
    Json cache = Json::object();
    cache["enabled"] = session.cache.enabled();
    for (const char* kind : {"lattice", "bounds"})
        cache[kind] = session.cache_status.contains(kind) ? session.cache_status[kind] : Json("unused");
    full["cache"] = std::move(cache);
    out.report = std::move(full);
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"aaslab: group actions on surfaces and their signatures"};
    app.require_subcommand(1);
    app.fallthrough();

    Options options;
    std::size_t max_order = 0;
    app.add_flag("--json", options.json, "Print the JSON report instead of a table");
    app.add_option("--threads", options.threads, "Worker threads (default: all cores)");
    app.add_option("--max-order", max_order, "Group order cap; for scan, the largest order scanned");
    app.add_option("--budget", options.budget, "Search nodes per signature")->capture_default_str();
    app.add_option("--seconds", options.seconds, "Wall-clock budget for sig-nonsigs")->capture_default_str();
    app.add_option("--genus-max", options.genus_max, "Largest genus listed by sig-potential");
    app.add_option("--cache-dir", options.cache_dir, "Cache directory (default $AASLAB_CACHE or .aaslab-cache)");
    app.add_flag("--no-cache", options.no_cache, "Neither read nor write the cache");
    app.add_option("--lattice-cap", options.lattice_cap, "Largest order for which subgroup lattices are built")
        ->capture_default_str();
    app.add_flag("--bounds", options.bounds, "aas-check: also compute the effective bounds");

    struct Spec {
        const char* name;
        const char* help;
        std::vector<const char*> positional;
        std::size_t required;
    };
    const std::vector<Spec> specs{
        {"group-info", "Order, order set, classes and derived subgroup", {"group"}, 1},
        {"aas-check", "Test the two AAS conditions", {"group"}, 1},
        {"sig-genus", "Riemann-Hurwitz genus of a signature", {"group", "signature"}, 2},
        {"sig-potential", "Is a signature potential; without one, list potential signatures up to --genus-max",
         {"group", "signature"}, 1},
        {"sig-decide", "Decide whether a signature is actual", {"group", "signature"}, 2},
        {"sig-nonsigs", "The complete list of non-signatures of an AAS group", {"group"}, 1},
        {"scan", "Run the AAS test across a family, e.g. scan metacyclic 2,3", {"family", "params"}, 2},
        {"product-check", "Direct-product closure check for G x H", {"left", "right"}, 2},
    };
    std::vector<std::vector<std::string>> values(specs.size());
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        auto* sub = app.add_subcommand(specs[i].name, specs[i].help);
        values[i].resize(specs[i].positional.size());
        for (std::size_t k = 0; k < specs[i].positional.size(); ++k) {
            auto* opt = sub->add_option(specs[i].positional[k], values[i][k], specs[i].positional[k]);
            if (k < specs[i].required)
                opt->required();
        }
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kOk : kError;
    }

    Command cmd;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (!subs[i]->parsed())
            continue;
        cmd.name = specs[i].name;
        for (std::size_t k = 0; k < values[i].size(); ++k)
            if (subs[i]->get_option(specs[i].positional[k])->count() > 0)
                cmd.args.push_back(values[i][k]);
    }
    if (max_order > 0)
        options.max_order = max_order;
    cmd.options = options;

    const Outcome result = execute(cmd);
    if (options.json)
        out << result.report.dump(2) << '\n';
    else if (result.exit_code == kError)
        err << result.text;
    else
        out << result.text;
    return result.exit_code;
}

} // namespace aaslab::cli
