#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "sidon/render.hpp"
#include "sidon/search.hpp"

using namespace sidon;

#ifndef SIDON_GOLDEN_DIR
#define SIDON_GOLDEN_DIR "tests/golden"
#endif

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

const Lattice kHexLattice = hnf(IntMatrix{{7, 0}, {4, 1}});

}  // namespace

TEST(Render, HexagonGolden) {
  std::string svg = render_svg(ShapeSpec::diff(2, 1, 1), kHexLattice, Window::square(-8, 8));
  EXPECT_EQ(svg, slurp(std::string(SIDON_GOLDEN_DIR) + "/hexagon7.svg"));
  EXPECT_EQ(svg, render_svg(ShapeSpec::diff(2, 1, 1), kHexLattice, Window::square(-8, 8)));
}

// A tiling covers each window cell exactly once.
TEST(Render, TilingCoversWindowOnce) {
  std::string svg = render_svg(ShapeSpec::diff(2, 1, 1), kHexLattice, Window::square(-8, 8));
  EXPECT_EQ(count(svg, "<rect"), 17u * 17u);
  std::regex rect(R"re(<rect x="(\d+)" y="(\d+)")re");
  std::set<std::pair<int, int>> cells;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect); it != std::sregex_iterator(); ++it)
    cells.emplace(std::stoi((*it)[1]), std::stoi((*it)[2]));
  EXPECT_EQ(cells.size(), 17u * 17u);
}

TEST(Render, PackingTranslatesAreDisjoint) {
  Certificate c = search_phi(4, 2, false);
  std::string svg = render_svg(ShapeSpec::simplex(2, 4), c.lattice, Window::square(-10, 10));
  std::regex rect(R"re(<rect x="(\d+)" y="(\d+)")re");
  std::set<std::pair<int, int>> cells;
  std::size_t rects = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect); it != std::sregex_iterator(); ++it, ++rects)
    cells.emplace(std::stoi((*it)[1]), std::stoi((*it)[2]));
  EXPECT_GT(rects, 0u);
  EXPECT_EQ(cells.size(), rects);
}

TEST(Render, EmptyWindowAndDimension) {
  std::string svg = render_svg(ShapeSpec::diff(2, 1, 1), kHexLattice, Window{});
  EXPECT_EQ(count(svg, "<g"), 0u);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  try {
    render_svg(ShapeSpec::simplex(3, 1), hnf(IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), Window::square(0, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedDimension);
  }
}
