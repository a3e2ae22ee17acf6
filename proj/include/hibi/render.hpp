#pragma once

#include <optional>
#include <string>

#include "hibi/window.hpp"

namespace hibi {

enum class FigureFormat { kSvg, kAscii };

/// Lattice grid with x = i to the right and y = j upward. With a window:
/// dashed rank lines i + j = p and i + j = q, generator points drawn large,
/// polyomino cells shaded.
std::string render_figure(const PlanarLattice& lattice, std::optional<RankWindow> w,
                          FigureFormat format);

}  // namespace hibi
