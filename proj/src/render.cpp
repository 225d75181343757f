#include "sidon/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <tuple>

namespace sidon {

namespace ck = checked;

namespace {

constexpr Int kCell = 16;
constexpr Int kMaxCells = 1 << 22;
constexpr std::array<const char*, 7> kPalette{"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                              "#59a14f", "#edc948", "#b07aa1"};

struct Translate {
  Int a, b;  // coefficients on the HNF rows
  Int x, y;
};

}  // namespace

std::string render_svg(const PointSet& shape, const Lattice& lattice, const Window& w) {
  if (shape.dim() != 2 || lattice.dim() != 2)
    throw Error(ErrorCode::UnsupportedDimension, "rendering supports n = 2 only");
  if (!w.empty() && ck::mul(w.x_max - w.x_min + 1, w.y_max - w.y_min + 1) > kMaxCells)
    throw Error(ErrorCode::InvalidArgument, "render window too large");

  const Int width = w.empty() ? 0 : (w.x_max - w.x_min + 1) * kCell;
  const Int height = w.empty() ? 0 : (w.y_max - w.y_min + 1) * kCell;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";

  std::vector<Translate> translates;
  if (!w.empty() && shape.size() > 0) {
    Int sx_min = shape.points().front()[0], sx_max = sx_min, sy_min = shape.points().front()[1], sy_max = sy_min;
    for (const auto& p : shape.points()) {
      sx_min = std::min(sx_min, p[0]);
      sx_max = std::max(sx_max, p[0]);
      sy_min = std::min(sy_min, p[1]);
      sy_max = std::max(sy_max, p[1]);
    }
    const IntMatrix& B = lattice.hnf();  // rows (d0, 0) and (c, d1)
    const Int d0 = B(0, 0), c = B(1, 0), d1 = B(1, 1);
    for (Int b = ck::floor_div(w.y_min - sy_max + d1 - 1, d1); b * d1 <= w.y_max - sy_min; ++b) {
      const Int y = b * d1;
      const Int shift = b * c;
      for (Int a = ck::floor_div(w.x_min - sx_max - shift + d0 - 1, d0); a * d0 + shift <= w.x_max - sx_min; ++a) {
        const Int x = a * d0 + shift;
        bool meets = std::any_of(shape.points().begin(), shape.points().end(),
                                 [&](const IntVector& p) { return w.contains(x + p[0], y + p[1]); });
        if (meets) translates.push_back({a, b, x, y});
      }
    }
  }
  std::sort(translates.begin(), translates.end(),
            [](const Translate& l, const Translate& r) { return std::tie(l.y, l.x) < std::tie(r.y, r.x); });

  auto px = [&](Int x) { return (x - w.x_min) * kCell; };
  auto py = [&](Int y) { return (w.y_max - y) * kCell; };  // y axis points up
  for (const auto& t : translates) {
    const char* colour = kPalette[static_cast<std::size_t>(ck::floor_mod(t.a + 3 * t.b, kPalette.size()))];
    os << "<g data-origin=\"" << t.x << ',' << t.y << "\" fill=\"" << colour << "\" stroke=\"#ffffff\">\n";
    for (const auto& p : shape.points()) {
      Int x = t.x + p[0], y = t.y + p[1];
      if (!w.contains(x, y)) continue;
      os << "<rect x=\"" << px(x) << "\" y=\"" << py(y) << "\" width=\"" << kCell << "\" height=\"" << kCell
         << "\"/>\n";
    }
    if (w.contains(t.x, t.y))
      os << "<circle cx=\"" << px(t.x) + kCell / 2 << "\" cy=\"" << py(t.y) + kCell / 2 << "\" r=\"" << kCell / 5
         << "\" fill=\"#000000\"/>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const ShapeSpec& shape, const Lattice& lattice, const Window& window) {
  if (shape.n != 2) throw Error(ErrorCode::UnsupportedDimension, "rendering supports n = 2 only");
  return render_svg(shape_points(shape), lattice, window);
}

}  // namespace sidon
