#include "cwilf/cache.hpp"

#include <fstream>
#include <sstream>

namespace cwilf {

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

uint64_t Cache::fnv1a(std::string_view data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::filesystem::path Cache::path_for(const std::string& key) const {
    std::ostringstream name;
    name << std::hex << fnv1a(std::string(kVersion) + "|" + key) << ".json";
    return dir_ / name.str();
}

std::optional<nlohmann::json> Cache::try_get(const std::string& key) const {
    const auto path = path_for(key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    if (!j.contains("key") || !j.contains("hash") || !j.contains("payload")) return std::nullopt;
    if (j["key"] != key) return std::nullopt;
    const std::string body = j["payload"].dump();
    std::ostringstream h;
    h << std::hex << fnv1a(body);
    if (j["hash"] != h.str()) return std::nullopt;
    return j["payload"];
}

void Cache::put(const std::string& key, const nlohmann::json& payload) const {
    nlohmann::json j;
    j["key"] = key;
    const std::string body = payload.dump();
    std::ostringstream h;
    h << std::hex << fnv1a(body);
    j["hash"] = h.str();
    j["payload"] = payload;
    const auto path = path_for(key);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump();
    }
    std::filesystem::rename(tmp, path);
}

} // namespace cwilf
