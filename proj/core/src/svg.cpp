#include "simcore/svg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace simcore {
namespace {

struct Point {
    double x;
    double y;
};

// One panel in lattice coordinates, drawn with y pointing up.
class Panel {
public:
    Panel(long width, long height, const SvgOptions& opts) : w_(width), h_(height), opts_(opts) {}

    double pixel_width() const { return static_cast<double>(w_) * opts_.cell + 2 * opts_.margin; }
    double pixel_height() const { return static_cast<double>(h_) * opts_.cell + 2 * opts_.margin; }

    void draw(std::ostringstream& out, double ox, double oy, const std::vector<Point>& vertices,
              const std::vector<std::pair<Point, std::string>>& cell_text,
              const std::vector<Point>& shaded) const {
        out << "<g transform=\"translate(" << ox << "," << oy << ")\">\n";
        for (const auto& c : shaded) {
            out << "  <rect x=\"" << px(c.x) << "\" y=\"" << py(c.y + 1) << "\" width=\"" << opts_.cell
                << "\" height=\"" << opts_.cell << "\" fill=\"#dde6f5\"/>\n";
        }
        for (long i = 0; i <= w_; ++i) {
            out << "  <line x1=\"" << px(i) << "\" y1=\"" << py(0) << "\" x2=\"" << px(i) << "\" y2=\"" << py(h_)
                << "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
        }
        for (long j = 0; j <= h_; ++j) {
            out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(j) << "\" x2=\"" << px(w_) << "\" y2=\"" << py(j)
                << "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
        }
        out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(w_) << "\" y2=\"" << py(h_)
            << "\" stroke=\"#c33\" stroke-width=\"1\" stroke-dasharray=\"4,3\"/>\n";
        for (const auto& [c, text] : cell_text) {
            out << "  <text x=\"" << px(c.x + 0.5) << "\" y=\"" << py(c.y + 0.5)
                << "\" font-size=\"" << opts_.cell * 0.45
                << "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-family=\"sans-serif\">" << text
                << "</text>\n";
        }
        out << "  <polyline fill=\"none\" stroke=\"#124\" stroke-width=\"3\" points=\"";
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            out << (i ? " " : "") << px(vertices[i].x) << "," << py(vertices[i].y);
        }
        out << "\"/>\n</g>\n";
    }

private:
    double px(double x) const { return opts_.margin + x * opts_.cell; }
    double py(double y) const { return opts_.margin + (static_cast<double>(h_) - y) * opts_.cell; }

    long w_;
    long h_;
    const SvgOptions& opts_;
};

struct PanelData {
    long width;
    long height;
    std::vector<Point> vertices;
    std::vector<std::pair<Point, std::string>> text;
    std::vector<Point> shaded;
};

PanelData rect_panel(const RectPath& path, const SvgOptions& opts) {
    PanelData d{path.s(), path.t(), {{0, 0}}, {}, {}};
    double x = 0;
    double y = 0;
    for (Step st : path.steps()) {
        (st == Step::N ? y : x) += 1;
        d.vertices.push_back({x, y});
    }
    if (opts.labels) {
        const Partition mu = path.partition_above();
        for (std::size_t j = 1; j <= mu.length(); ++j) {
            for (long c = 0; c < mu.part(j); ++c) {
                d.shaded.push_back({static_cast<double>(c), static_cast<double>(path.t() - static_cast<long>(j))});
            }
        }
    }
    return d;
}

PanelData gd_panel(const GeneralizedDyckPath& path, const SvgOptions& opts) {
    PanelData d{path.n(), path.n(), {{0, 0}}, {}, {}};
    double x = 0;
    double y = 0;
    for (const auto& st : path.steps()) {
        const auto len = static_cast<double>(st.length);
        if (st.kind != GdStep::Kind::East) {
            y += len;
        }
        if (st.kind != GdStep::Kind::North) {
            x += len;
        }
        d.vertices.push_back({x, y});
    }
    if (opts.labels) {
        const LowerIdeal ideal = gd_to_ideal(path);
        for (long diag = 1; diag <= path.n() - 1; diag += path.k()) {
            for (long col = 0; col + diag <= path.n() - 1; ++col) {
                const long label = gd_cell_label(path.n(), path.k(), col, diag);
                const Point cell{static_cast<double>(col), static_cast<double>(col + diag)};
                d.text.emplace_back(cell, std::to_string(label));
                if (ideal.contains(label)) {
                    d.shaded.push_back(cell);
                }
            }
        }
    }
    return d;
}

std::string render_grid(const std::vector<PanelData>& panels, int columns, const SvgOptions& opts) {
    columns = std::max(columns, 1);
    double pw = 0;
    double ph = 0;
    for (const auto& p : panels) {
        Panel panel(p.width, p.height, opts);
        pw = std::max(pw, panel.pixel_width());
        ph = std::max(ph, panel.pixel_height());
    }
    const auto count = static_cast<int>(panels.size());
    const int cols = std::min(columns, std::max(count, 1));
    const int rows = (count + cols - 1) / cols;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pw * cols << "\" height=\""
        << ph * std::max(rows, 1) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int i = 0; i < count; ++i) {
        const auto& p = panels[static_cast<std::size_t>(i)];
        Panel panel(p.width, p.height, opts);
        panel.draw(out, pw * (i % cols), ph * (i / cols), p.vertices, p.text, p.shaded);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string rect_path_svg(const RectPath& path, const SvgOptions& opts) {
    return render_grid({rect_panel(path, opts)}, 1, opts);
}

std::string gd_path_svg(const GeneralizedDyckPath& path, const SvgOptions& opts) {
    return render_grid({gd_panel(path, opts)}, 1, opts);
}

std::string rect_paths_grid_svg(std::span<const RectPath> paths, int columns, const SvgOptions& opts) {
    std::vector<PanelData> panels;
    for (const auto& p : paths) {
        panels.push_back(rect_panel(p, opts));
    }
    return render_grid(panels, columns, opts);
}

std::string gd_paths_grid_svg(std::span<const GeneralizedDyckPath> paths, int columns, const SvgOptions& opts) {
    std::vector<PanelData> panels;
    for (const auto& p : paths) {
        panels.push_back(gd_panel(p, opts));
    }
    return render_grid(panels, columns, opts);
}

}  // namespace simcore
