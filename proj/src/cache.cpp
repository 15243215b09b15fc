#include "knotpoly/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "knotpoly/errors.hpp"

namespace knotpoly {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t content_hash(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

json read_manifest(const std::string& dir) {
    const fs::path p = fs::path(dir) / "manifest.json";
    if (!fs::exists(p)) return json::object();
    std::ifstream in(p);
    if (!in) throw IoFailure("cannot read manifest: " + p.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw CorruptCache(std::string("manifest is not valid JSON: ") + e.what());
    }
    return j;
}

void write_manifest(const std::string& dir, const json& j) {
    const fs::path p = fs::path(dir) / "manifest.json";
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoFailure("cannot write manifest: " + p.string());
    out << j.dump(2) << '\n';
}

} // namespace

TutteCache::TutteCache(std::string dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoFailure("cannot create cache directory: " + dir_);
}

std::string TutteCache::file_of(int m) const { return "T_Sm_" + std::to_string(m) + ".poly"; }

void TutteCache::store(int m, const BivarPoly& p) {
    const std::string text = p.to_text() + "\n";
    const fs::path path = fs::path(dir_) / file_of(m);
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoFailure("cannot write cache file: " + path.string());
        out << text;
    }
    json manifest = read_manifest(dir_);
    manifest[file_of(m)] = {{"m", m}, {"ring", "xy"}, {"hash", hex64(content_hash(text))}};
    write_manifest(dir_, manifest);
}

void TutteCache::store(int m, const LaurentPoly& p) {
    const std::string text = p.to_text() + "\n";
    const fs::path path = fs::path(dir_) / file_of(m);
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoFailure("cannot write cache file: " + path.string());
        out << text;
    }
    json manifest = read_manifest(dir_);
    manifest[file_of(m)] = {{"m", m}, {"ring", "t"}, {"hash", hex64(content_hash(text))}};
    write_manifest(dir_, manifest);
}

bool TutteCache::contains(int m) const {
    const json manifest = read_manifest(dir_);
    return manifest.contains(file_of(m)) && fs::exists(fs::path(dir_) / file_of(m));
}

std::string TutteCache::ring_of(int m) const {
    const json manifest = read_manifest(dir_);
    if (!manifest.contains(file_of(m))) throw CorruptCache("no manifest entry for m=" + std::to_string(m));
    return manifest[file_of(m)].value("ring", "");
}

std::string TutteCache::load_checked(int m, const std::string& expect_ring) const {
    const json manifest = read_manifest(dir_);
    const std::string name = file_of(m);
    if (!manifest.contains(name)) throw CorruptCache("no manifest entry for " + name);
    const json& entry = manifest[name];
    if (entry.value("ring", "") != expect_ring)
        throw CorruptCache("ring mismatch for " + name);
    const fs::path path = fs::path(dir_) / name;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorruptCache("missing cache file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (hex64(content_hash(text)) != entry.value("hash", ""))
        throw CorruptCache("content hash mismatch for " + name);
    return text;
}

BivarPoly TutteCache::load_bivar(int m) const { return BivarPoly::parse(load_checked(m, "xy")); }

LaurentPoly TutteCache::load_laurent(int m) const {
    return LaurentPoly::parse(load_checked(m, "t"));
}

} // namespace knotpoly
