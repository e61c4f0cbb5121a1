#include "aaslab/cache.hpp"

#include "aaslab/structure.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace aaslab {

namespace fs = std::filesystem;
using report::Json;

namespace {

    std::uint64_t fnv1a(const std::string& text)
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char ch : text) {
            h ^= ch;
            h *= 0x100000001b3ull;
        }
        return h;
    }

    std::string hex(std::uint64_t v)
    {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
        return buf;
    }

    std::vector<Element> elements_from(const Json& j, const Group& g)
    {
        std::vector<Element> out;
        for (const auto& v : j) {
            const auto x = v.get<std::uint64_t>();
            if (x >= g.order())
                throw std::runtime_error("element out of range");
            out.push_back(Element(x));
        }
        return out;
    }

} // namespace

ResultCache ResultCache::disabled()
{
    return ResultCache();
}

fs::path ResultCache::default_directory()
{
    if (const char* env = std::getenv("AASLAB_CACHE"); env && *env)
        return env;
    return ".aaslab-cache";
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)), enabled_(true) {}

fs::path ResultCache::entry_path(const std::string& kind, const std::string& key) const
{
    const std::string id = kind + '\n' + key + '\n' + std::to_string(report::kSchemaVersion);
    return dir_ / (kind + "-" + hex(fnv1a(id)) + ".json");
}

std::optional<Json> ResultCache::load(const std::string& kind, const std::string& key) const
{
    if (!enabled_)
        return std::nullopt;
    std::ifstream in(entry_path(kind, key));
    if (!in)
        return std::nullopt;
    try {
        const Json entry = Json::parse(in);
        if (entry.at("schema_version").get<int>() != report::kSchemaVersion || entry.at("kind") != kind
            || entry.at("key") != key)
            return std::nullopt;
        const Json& payload = entry.at("payload");
        if (entry.at("checksum").get<std::string>() != hex(fnv1a(payload.dump())))
            return std::nullopt;
        return payload;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void ResultCache::store(const std::string& kind, const std::string& key, Json payload) const
{
    if (!enabled_)
        return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec)
        return;
    Json entry;
    entry["schema_version"] = report::kSchemaVersion;
    entry["kind"] = kind;
    entry["key"] = key;
    entry["checksum"] = hex(fnv1a(payload.dump()));
    entry["payload"] = std::move(payload);

    // write then rename, so readers never see a half-written entry
    const fs::path target = entry_path(kind, key);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(std::rand());
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        out << entry.dump();
    }
    fs::rename(tmp, target, ec);
    if (ec)
        fs::remove(tmp, ec);
}

std::optional<SubgroupLattice> ResultCache::load_lattice(const std::string& key, const Group& g) const
{
    const auto payload = load("lattice", key);
    if (!payload)
        return std::nullopt;
    try {
        if (payload->at("order").get<std::size_t>() != g.order())
            return std::nullopt;
        std::vector<Subgroup> subgroups;
        for (const auto& item : payload->at("subgroups")) {
            const auto elements = elements_from(item.at("elements"), g);
            const auto gens = elements_from(item.at("generators"), g);
            Subgroup h = generated_subgroup(g, gens);
            if (h.elements != elements)
                return std::nullopt;
            subgroups.push_back(std::move(h));
        }
        if (subgroups.empty() || subgroups.front().size() != 1 || !subgroups.back().is_whole(g))
            return std::nullopt;
        for (std::size_t i = 1; i < subgroups.size(); ++i)
            if (subgroups[i].membership == subgroups[i - 1].membership)
                return std::nullopt;
        return lattice_from_subgroups(g, std::move(subgroups));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void ResultCache::store_lattice(const std::string& key, const SubgroupLattice& lattice) const
{
    if (!enabled_)
        return;
    Json list = Json::array();
    for (const auto& h : lattice.subgroups)
        list.push_back({{"elements", h.elements}, {"generators", h.generators}});
    store("lattice", key, {{"order", lattice.subgroups.back().size()}, {"subgroups", std::move(list)}});
}

std::optional<AasBounds> ResultCache::load_bounds(const std::string& key, const Group& g) const
{
    const auto payload = load("bounds", key);
    if (!payload)
        return std::nullopt;
    try {
        if (payload->at("order").get<std::size_t>() != g.order())
            return std::nullopt;
        AasBounds b;
        b.generating_set = elements_from(payload->at("generating_set"), g);
        for (const auto& [n, x] : payload->at("derived_witness").items())
            b.derived_witness[unsigned(std::stoul(n))] = elements_from(Json::array({x}), g).front();
        for (const auto& item : payload->at("per_order")) {
            OrderBounds ob;
            ob.order = item.at("order").get<unsigned>();
            ob.generators = elements_from(item.at("generators"), g);
            ob.odd_product = elements_from(item.at("odd_product"), g);
            ob.even_vector = elements_from(item.at("even_vector"), g);
            ob.odd_vector = ob.even_vector;
            ob.odd_vector.insert(ob.odd_vector.end(), ob.odd_product.begin(), ob.odd_product.end());
            ob.alpha_even = item.at("alpha_M").get<unsigned>();
            ob.alpha_odd = item.at("alpha_N").get<unsigned>();
            b.N = std::max({b.N, ob.N(), ob.M()});
            b.alpha = std::max({b.alpha, ob.alpha_odd, ob.alpha_even});
            b.per_order.push_back(std::move(ob));
        }
        if (b.per_order.size() != order_set(g).size())
            return std::nullopt;
        b.commutators = std::make_shared<const CommutatorWidth>(commutator_width(g));
        b.width = b.commutators->width;
        check_bounds(g, b);
        return b;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void ResultCache::store_bounds(const std::string& key, const AasBounds& b) const
{
    if (!enabled_ || b.per_order.empty())
        return;
    Json witness = Json::object();
    for (const auto& [n, x] : b.derived_witness)
        witness[std::to_string(n)] = x;
    Json per = Json::array();
    for (const auto& ob : b.per_order)
        per.push_back({
            {"order", ob.order},
            {"generators", ob.generators},
            {"odd_product", ob.odd_product},
            {"even_vector", ob.even_vector},
            {"alpha_M", ob.alpha_even},
            {"alpha_N", ob.alpha_odd},
        });
    store("bounds", key,
          {{"order", b.commutators->layer_of.size()},
           {"generating_set", b.generating_set},
           {"derived_witness", std::move(witness)},
           {"per_order", std::move(per)}});
}

} // namespace aaslab
