#include "reinsim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "reinsim/errors.hpp"

namespace reinsim {
namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 500;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 160;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 50;

const char* kPalette[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::string render_svg(const CsvTable& table, const std::string& x_col,
                       const std::vector<std::string>& y_cols) {
    if (table.rows.size() < 2) throw std::invalid_argument("render_svg: need at least 2 rows");
    const int xi = table.column_index(x_col);
    if (xi < 0) throw std::invalid_argument("render_svg: no column named '" + x_col + "'");
    std::vector<int> yis;
    for (const auto& name : y_cols) {
        const int yi = table.column_index(name);
        if (yi < 0) throw std::invalid_argument("render_svg: no column named '" + name + "'");
        yis.push_back(yi);
    }
    if (yis.empty()) throw std::invalid_argument("render_svg: no series selected");

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& row : table.rows) {
        xmin = std::min(xmin, row[static_cast<std::size_t>(xi)]);
        xmax = std::max(xmax, row[static_cast<std::size_t>(xi)]);
        for (int yi : yis) {
            ymin = std::min(ymin, row[static_cast<std::size_t>(yi)]);
            ymax = std::max(ymax, row[static_cast<std::size_t>(yi)]);
        }
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const auto px = [&](double x) { return kMarginLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    const auto py = [&](double y) {
        return kMarginTop + plot_h - (y - ymin) / (ymax - ymin) * plot_h;
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\">\n"
        << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

    // Axes with min/max tick labels.
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
        << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
        << "\" y2=\"" << kMarginTop + plot_h << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kMarginLeft << "\" y=\"" << kHeight - 20
        << "\" font-size=\"12\">" << fmt(xmin) << "</text>\n";
    out << "<text x=\"" << kMarginLeft + plot_w - 30 << "\" y=\"" << kHeight - 20
        << "\" font-size=\"12\">" << fmt(xmax) << "</text>\n";
    out << "<text x=\"8\" y=\"" << kMarginTop + plot_h << "\" font-size=\"12\">" << fmt(ymin)
        << "</text>\n";
    out << "<text x=\"8\" y=\"" << kMarginTop + 12 << "\" font-size=\"12\">" << fmt(ymax)
        << "</text>\n";
    out << "<text x=\"" << kMarginLeft + plot_w / 2 - 20 << "\" y=\"" << kHeight - 8
        << "\" font-size=\"13\">" << x_col << "</text>\n";

    for (std::size_t s = 0; s < yis.size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const auto& row = table.rows[i];
            out << (i ? " " : "") << fmt(px(row[static_cast<std::size_t>(xi)])) << ","
                << fmt(py(row[static_cast<std::size_t>(yis[s])]));
        }
        out << "\"/>\n";
        const double ly = kMarginTop + 16.0 + 18.0 * static_cast<double>(s);
        out << "<line x1=\"" << kMarginLeft + plot_w + 12 << "\" y1=\"" << ly - 4 << "\" x2=\""
            << kMarginLeft + plot_w + 36 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << kMarginLeft + plot_w + 42 << "\" y=\"" << ly
            << "\" font-size=\"12\">" << y_cols[s] << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void emit_svg(const CsvTable& table, const std::string& x_col,
              const std::vector<std::string>& y_cols, const std::string& path) {
    const std::string doc = render_svg(table, x_col, y_cols);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("emit_svg: cannot write '" + path + "'");
    out << doc;
}

} // namespace reinsim
