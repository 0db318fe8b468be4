#pragma once

#include <span>
#include <string>

#include "simcore/gd_path.hpp"
#include "simcore/rect_path.hpp"

namespace simcore {

struct SvgOptions {
    double cell = 24.0;     // pixel size of one lattice unit
    double margin = 12.0;
    bool labels = false;    // rect: shade the cells above the path; gd: print diagonal labels
};

/// Standalone SVG: grid, diagonal, and the path.
std::string rect_path_svg(const RectPath& path, const SvgOptions& opts = {});
std::string gd_path_svg(const GeneralizedDyckPath& path, const SvgOptions& opts = {});

/// Every path in its own panel, `columns` panels per row.
std::string rect_paths_grid_svg(std::span<const RectPath> paths, int columns, const SvgOptions& opts = {});
std::string gd_paths_grid_svg(std::span<const GeneralizedDyckPath> paths, int columns, const SvgOptions& opts = {});

}  // namespace simcore
