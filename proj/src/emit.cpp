#include "knotpoly/emit.hpp"

#include <cstdio>
#include <fstream>

#include "knotpoly/errors.hpp"

namespace knotpoly {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open output file: " + path);
    return out;
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string f3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

void emit_zeros_csv(const ZeroSet& zs, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "re,im\n";
    for (const auto& z : zs.zeros) out << g17(z.real()) << ',' << g17(z.imag()) << '\n';
    if (!out) throw IoFailure("write failed: " + path);
}

void emit_locus_csv(const std::vector<LocusSample>& samples, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "re,im,gap\n";
    for (const auto& s : samples)
        out << g17(s.t.real()) << ',' << g17(s.t.imag()) << ',' << g17(s.gap) << '\n';
    if (!out) throw IoFailure("write failed: " + path);
}

void emit_points_svg(const std::vector<std::complex<double>>& points, const Region& region,
                     const std::string& path) {
    std::ofstream out = open_out(path);
    const double w = 800.0, h = 800.0;
    const double sx = w / (region.re_max - region.re_min);
    const double sy = h / (region.im_max - region.im_min);
    auto px = [&](double re) { return (re - region.re_min) * sx; };
    auto py = [&](double im) { return (region.im_max - im) * sy; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\">\n";
    out << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    out << "<ellipse cx=\"" << f3(px(0.0)) << "\" cy=\"" << f3(py(0.0)) << "\" rx=\"" << f3(sx)
        << "\" ry=\"" << f3(sy) << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    for (const auto& z : points) {
        if (z.real() < region.re_min || z.real() > region.re_max || z.imag() < region.im_min ||
            z.imag() > region.im_max)
            continue;
        out << "<circle cx=\"" << f3(px(z.real())) << "\" cy=\"" << f3(py(z.imag()))
            << "\" r=\"2\" fill=\"#1a1a8c\"/>\n";
    }
    out << "</svg>\n";
    if (!out) throw IoFailure("write failed: " + path);
}

} // namespace knotpoly
