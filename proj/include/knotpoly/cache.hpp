#ifndef KNOTPOLY_CACHE_HPP
#define KNOTPOLY_CACHE_HPP

#include <string>

#include "knotpoly/bivar_poly.hpp"
#include "knotpoly/laurent_poly.hpp"

namespace knotpoly {

/// On-disk cache of Tutte values: one `T_Sm_<m>.poly` per m in the canonical
/// text form, with a manifest recording m, the ring, and a content hash.
/// Loads verify the hash and throw CorruptCache on any mismatch.
class TutteCache {
public:
    explicit TutteCache(std::string dir);

    void store(int m, const BivarPoly& p);
    void store(int m, const LaurentPoly& p);

    bool contains(int m) const;
    std::string ring_of(int m) const;  // "xy" or "t"

    BivarPoly load_bivar(int m) const;
    LaurentPoly load_laurent(int m) const;

    const std::string& dir() const { return dir_; }

private:
    std::string file_of(int m) const;
    std::string load_checked(int m, const std::string& expect_ring) const;
    std::string dir_;
};

/// Stable 64-bit FNV-1a content hash used by the manifest.
std::uint64_t content_hash(const std::string& data);

} // namespace knotpoly

#endif
