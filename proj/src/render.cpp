#include "hibi/render.hpp"

#include <algorithm>
#include <sstream>

namespace hibi {

namespace {

constexpr int kUnit = 40;
constexpr int kMargin = 30;

std::string render_svg(const PlanarLattice& L, std::optional<RankWindow> w) {
  const int width = 2 * kMargin + L.m() * kUnit;
  const int height = 2 * kMargin + L.n() * kUnit;
  auto x = [](int i) { return kMargin + i * kUnit; };
  auto y = [&](int j) { return kMargin + (L.n() - j) * kUnit; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<g class=\"cells\" fill=\"#c8c8c8\" stroke=\"none\">\n";
  if (w)
    for (Point c : polyomino(L, *w).cells())
      os << "<rect x=\"" << x(c.i) << "\" y=\"" << y(c.j + 1) << "\" width=\"" << kUnit
         << "\" height=\"" << kUnit << "\"/>\n";
  os << "</g>\n<g class=\"edges\" stroke=\"black\" stroke-width=\"1\">\n";
  for (Point p : L.points()) {
    if (L.contains({p.i + 1, p.j}))
      os << "<line x1=\"" << x(p.i) << "\" y1=\"" << y(p.j) << "\" x2=\"" << x(p.i + 1)
         << "\" y2=\"" << y(p.j) << "\"/>\n";
    if (L.contains({p.i, p.j + 1}))
      os << "<line x1=\"" << x(p.i) << "\" y1=\"" << y(p.j) << "\" x2=\"" << x(p.i)
         << "\" y2=\"" << y(p.j + 1) << "\"/>\n";
  }
  os << "</g>\n";
  if (w) {
    os << "<g class=\"window\" stroke=\"black\" stroke-dasharray=\"6,4\">\n";
    for (int c : {w->p, w->q}) {
      const int i0 = std::max(0, c - L.n()), j0 = c - i0;
      const int i1 = std::min(c, L.m()), j1 = c - i1;
      os << "<line class=\"rank-" << c << "\" x1=\"" << x(i0) << "\" y1=\"" << y(j0)
         << "\" x2=\"" << x(i1) << "\" y2=\"" << y(j1) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "<g class=\"points\" fill=\"black\">\n";
  for (Point p : L.points()) {
    const bool gen = w && p.rank() >= w->p && p.rank() <= w->q;
    os << "<circle" << (gen ? " class=\"generator\"" : "") << " cx=\"" << x(p.i) << "\" cy=\""
       << y(p.j) << "\" r=\"" << (gen ? 5 : 2) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

// '@' generator, 'o' other lattice point, '#' polyomino cell.
std::string render_ascii(const PlanarLattice& L, std::optional<RankWindow> w) {
  Polyomino poly = w ? polyomino(L, *w) : Polyomino();
  std::ostringstream os;
  for (int j = L.n(); j >= 0; --j) {
    std::string line;
    for (int i = 0; i <= L.m(); ++i) {
      if (!L.contains({i, j}))
        line += ' ';
      else
        line += w && i + j >= w->p && i + j <= w->q ? '@' : 'o';
      if (i < L.m())
        line += L.contains({i, j}) && L.contains({i + 1, j}) ? "---" : "   ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
    if (j == 0) break;
    line.clear();
    for (int i = 0; i <= L.m(); ++i) {
      line += L.contains({i, j}) && L.contains({i, j - 1}) ? '|' : ' ';
      if (i < L.m()) line += poly.has_cell({i, j - 1}) ? "###" : "   ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace

std::string render_figure(const PlanarLattice& lattice, std::optional<RankWindow> w,
                          FigureFormat format) {
  if (w) check_window(lattice, *w);
  return format == FigureFormat::kSvg ? render_svg(lattice, w) : render_ascii(lattice, w);
}

}  // namespace hibi
