#ifndef KNOTPOLY_EMIT_HPP
#define KNOTPOLY_EMIT_HPP

#include <string>
#include <vector>

#include "knotpoly/locus.hpp"

namespace knotpoly {

/// CSV with header "re,im", 17 significant digits, LF endings.
void emit_zeros_csv(const ZeroSet& zs, const std::string& path);

/// CSV with header "re,im,gap".
void emit_locus_csv(const std::vector<LocusSample>& samples, const std::string& path);

/// 800x800 SVG scatter of complex points over the region, with the unit
/// circle drawn for reference and points as 2px dots.
void emit_points_svg(const std::vector<std::complex<double>>& points, const Region& region,
                     const std::string& path);

} // namespace knotpoly

#endif
