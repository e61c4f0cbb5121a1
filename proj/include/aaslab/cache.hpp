#pragma once

#include "aaslab/aas.hpp"
#include "aaslab/lattice.hpp"
#include "aaslab/report.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace aaslab {

/// On-disk store for subgroup lattices and AAS bounds. Entries are JSON
/// files keyed by canonical spec text and schema version. Anything that
/// fails to parse or to validate is ignored and recomputed.
class ResultCache {
public:
    /// A disabled cache loads nothing and stores nothing.
    static ResultCache disabled();
    /// $AASLAB_CACHE, or .aaslab-cache/ in the working directory.
    static std::filesystem::path default_directory();

    explicit ResultCache(std::filesystem::path dir);

    bool enabled() const noexcept { return enabled_; }
    const std::filesystem::path& directory() const noexcept { return dir_; }

    std::optional<SubgroupLattice> load_lattice(const std::string& key, const Group& g) const;
    void store_lattice(const std::string& key, const SubgroupLattice& lattice) const;

    std::optional<AasBounds> load_bounds(const std::string& key, const Group& g) const;
    void store_bounds(const std::string& key, const AasBounds& bounds) const;

    /// File an entry lives in (FNV-1a of kind, key and schema version).
    std::filesystem::path entry_path(const std::string& kind, const std::string& key) const;

private:
    ResultCache() = default;

    std::optional<report::Json> load(const std::string& kind, const std::string& key) const;
    void store(const std::string& kind, const std::string& key, report::Json payload) const;

    std::filesystem::path dir_;
    bool enabled_ = false;
};

} // namespace aaslab
