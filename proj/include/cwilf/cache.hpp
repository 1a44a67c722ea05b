#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace cwilf {

/// Small content-addressed disk cache for brute-force tables. Entries
/// are keyed by (operation, parameters, code-version tag); the stored
/// payload carries its own hash, so a corrupted or stale file is simply
/// ignored and recomputed, never trusted.
class Cache {
public:
    explicit Cache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<nlohmann::json> try_get(const std::string& key) const;
    void put(const std::string& key, const nlohmann::json& payload) const;

    static uint64_t fnv1a(std::string_view data);

    /// Version tag mixed into every key; bump on any change that affects
    /// cached payloads.
    static constexpr const char* kVersion = "cwilf-v1";

private:
    std::filesystem::path path_for(const std::string& key) const;
    std::filesystem::path dir_;
};

} // namespace cwilf
