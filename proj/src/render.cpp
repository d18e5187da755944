#include "ube/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ube {

std::vector<ArcLayout> arc_layout(const Digraph& g, const BookEmbedding& be) {
    auto rep = verify_kube(g, be);
    if (!rep.valid) throw std::invalid_argument("cannot render an invalid embedding: " + rep.message);
    const auto pos = be.positions(g.n);
    std::vector<ArcLayout> arcs;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        arcs.push_back({e, be.page[e], std::min(pos[u], pos[v]), std::max(pos[u], pos[v]), be.page[e] == 1});
    }
    return arcs;
}

namespace {

constexpr double kStep = 40.0;
constexpr double kMargin = 30.0;

const char* page_color(int page) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    return palette[(page - 1) % 6];
}

double fan(int page) { return page <= 2 ? 1.0 : 1.0 + 0.4 * (page - 2); }

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_arc_diagram(const Digraph& g, const BookEmbedding& be, const std::vector<std::string>& labels) {
    const auto arcs = arc_layout(g, be);
    const int n = g.n;
    double reach_left = kStep / 2, reach_right = kStep / 2;
    for (const auto& a : arcs) {
        double rx = (a.high - a.low) * kStep / 2 * fan(a.page);
        (a.left ? reach_left : reach_right) = std::max(a.left ? reach_left : reach_right, rx);
    }
    const double label_room = 60.0;
    const double width = kMargin + reach_left + reach_right + label_room + kMargin;
    const double height = 2 * kMargin + std::max(0, n - 1) * kStep;
    const double x = kMargin + reach_left;
    auto y_of = [&](int p) { return kMargin + (n - 1 - p) * kStep; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
        << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
    out << "<line class=\"spine\" x1=\"" << fmt(x) << "\" y1=\"" << fmt(y_of(0)) << "\" x2=\"" << fmt(x)
        << "\" y2=\"" << fmt(y_of(n - 1)) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    for (const auto& a : arcs) {
        const double y1 = y_of(a.low), y2 = y_of(a.high);
        const double ry = (y1 - y2) / 2, rx = ry * fan(a.page);
        // Bottom to top: clockwise on screen bends left.
        out << "<path class=\"arc page" << a.page << "\" data-edge=\"" << a.edge << "\" d=\"M " << fmt(x) << ' '
            << fmt(y1) << " A " << fmt(rx) << ' ' << fmt(ry) << " 0 0 " << (a.left ? 1 : 0) << ' ' << fmt(x) << ' '
            << fmt(y2) << "\" fill=\"none\" stroke=\"" << page_color(a.page) << "\" stroke-width=\"1.5\""
            << (a.page > 2 ? " stroke-dasharray=\"5 3\"" : "") << "/>\n";
    }
    for (int p = 0; p < n; ++p) {
        const int v = be.order[p];
        const std::string label = v < static_cast<int>(labels.size()) ? labels[v] : std::to_string(v);
        out << "<circle class=\"vertex\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y_of(p)) << "\" r=\"4\" fill=\"#000\"/>\n";
        out << "<text x=\"" << fmt(x + 8) << "\" y=\"" << fmt(y_of(p) - 6) << "\" font-size=\"11\" font-family=\"sans-serif\">"
            << escape(label) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ube
