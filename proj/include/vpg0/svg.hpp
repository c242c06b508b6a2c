#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "vpg0/layout.hpp"
#include "vpg0/rational.hpp"

namespace vpg0 {

struct SvgOptions {
    double scale = 40.0;   // pixels per grid unit
    bool jitter = false;   // pull collinear overlapping segments visually apart
    double margin = 1.0;   // grid units around the bounding box
};

// Renders the drawing with the y-axis flipped to screen coordinates,
// horizontal segments green and vertical blue, grid lines and axis labels at
// the integer coordinates. The jitter offset is cosmetic only; logical
// coordinates always come from the drawing itself.
inline std::string drawingToSvg(const Drawing& d, const SvgOptions& opt = {}) {
    double loX = 0, hiX = 1, loY = 0, hiY = 1;
    bool first = true;
    for (const Segment& s : d.segments) {
        double x1 = s.minX().toDouble(), x2 = s.maxX().toDouble();
        double y1 = s.minY().toDouble(), y2 = s.maxY().toDouble();
        if (first) {
            loX = x1, hiX = x2, loY = y1, hiY = y2;
            first = false;
        } else {
            loX = std::min(loX, x1);
            hiX = std::max(hiX, x2);
            loY = std::min(loY, y1);
            hiY = std::max(hiY, y2);
        }
    }
    loX -= opt.margin;
    loY -= opt.margin;
    hiX += opt.margin;
    hiY += opt.margin;

    auto px = [&](double x) { return (x - loX) * opt.scale; };
    auto py = [&](double y) { return (hiY - y) * opt.scale; };  // flipped

    // Cosmetic jitter: spread segments sharing a line a little apart.
    std::vector<double> offset(d.size(), 0.0);
    if (opt.jitter) {
        std::map<std::pair<bool, std::string>, std::vector<int>> byLine;
        for (int v = 0; v < d.size(); ++v)
            byLine[{d.segments[v].vertical, d.segments[v].at.str()}].push_back(v);
        for (auto& [line, vs] : byLine) {
            if (vs.size() < 2) continue;
            double step = 2.5;
            double start = -step * (double)(vs.size() - 1) / 2.0;
            for (size_t i = 0; i < vs.size(); ++i) offset[vs[i]] = start + step * (double)i;
        }
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(hiX) << "\" height=\""
        << py(loY) << "\" viewBox=\"0 0 " << px(hiX) << " " << py(loY) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (int gx = (int)std::ceil(loX); gx <= (int)std::floor(hiX); ++gx) {
        out << "  <line x1=\"" << px(gx) << "\" y1=\"" << py(loY) << "\" x2=\"" << px(gx)
            << "\" y2=\"" << py(hiY) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "  <text x=\"" << px(gx) << "\" y=\"" << py(loY) - 4
            << "\" font-size=\"10\" fill=\"#888888\" text-anchor=\"middle\">" << gx
            << "</text>\n";
    }
    for (int gy = (int)std::ceil(loY); gy <= (int)std::floor(hiY); ++gy) {
        out << "  <line x1=\"" << px(loX) << "\" y1=\"" << py(gy) << "\" x2=\"" << px(hiX)
            << "\" y2=\"" << py(gy) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "  <text x=\"" << px(loX) + 4 << "\" y=\"" << py(gy) - 3
            << "\" font-size=\"10\" fill=\"#888888\">" << gy << "</text>\n";
    }

    for (int v = 0; v < d.size(); ++v) {
        const Segment& s = d.segments[v];
        double x1, y1, x2, y2;
        if (s.vertical) {
            x1 = x2 = px(s.at.toDouble()) + offset[v];
            y1 = py(s.span.lo.toDouble());
            y2 = py(s.span.hi.toDouble());
        } else {
            y1 = y2 = py(s.at.toDouble()) + offset[v];
            x1 = px(s.span.lo.toDouble());
            x2 = px(s.span.hi.toDouble());
        }
        const char* color = s.vertical ? "#1f3f9e" : "#228b22";
        out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" stroke=\"" << color << "\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
        out << "  <text x=\"" << x2 + 4 << "\" y=\"" << y2 - 4 << "\" font-size=\"11\" fill=\""
            << color << "\">" << d.labels[v] << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace vpg0
