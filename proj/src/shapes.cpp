#include "sidon/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace sidon {

ShapeSpec ShapeSpec::simplex(int n, Int h) {
  ShapeSpec s{ShapeKind::Simplex, n, h, 0, 0};
  s.validate();
  return s;
}

ShapeSpec ShapeSpec::diff(int n, Int r, Int t) {
  ShapeSpec s{ShapeKind::DiffBody, n, 0, r, t};
  s.validate();
  return s;
}

ShapeSpec ShapeSpec::cross(int n, Int r) {
  ShapeSpec s{ShapeKind::CrossPolytope, n, 0, r, 0};
  s.validate();
  return s;
}

void ShapeSpec::validate() const {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "shape dimension must be >= 1");
  if (h < 0 || r < 0 || t < 0) throw Error(ErrorCode::InvalidArgument, "shape parameters must be >= 0");
}

Int ShapeSpec::order() const {
  switch (kind) {
    case ShapeKind::Simplex: return h;
    case ShapeKind::DiffBody: return r + t;
    case ShapeKind::CrossPolytope: return r;
  }
  return 0;
}

std::string ShapeSpec::str() const {
  const std::string dim = "n=" + std::to_string(n);
  switch (kind) {
    case ShapeKind::Simplex: return "simplex:" + dim + ",h=" + std::to_string(h);
    case ShapeKind::DiffBody: return "diff:" + dim + ",r=" + std::to_string(r) + ",t=" + std::to_string(t);
    case ShapeKind::CrossPolytope: return "cross:" + dim + ",r=" + std::to_string(r);
  }
  return {};
}

ShapeSpec ShapeSpec::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::ParseError, "bad shape '" + std::string(text) + "': " + why);
  };
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw fail("expected kind:params");
  std::string_view kind = text.substr(0, colon);
  std::map<std::string, Int, std::less<>> params;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw fail("expected key=value");
    std::string_view value = item.substr(eq + 1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) throw fail("non-integer value");
    if (!params.emplace(std::string(item.substr(0, eq)), v).second) throw fail("duplicate key");
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  auto take = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) throw fail(std::string("missing ") + key);
    Int v = it->second;
    params.erase(it);
    return v;
  };
  ShapeSpec spec;
  if (kind == "simplex") {
    spec = {ShapeKind::Simplex, static_cast<int>(take("n")), take("h"), 0, 0};
  } else if (kind == "diff") {
    int n = static_cast<int>(take("n"));
    Int r = take("r");
    spec = {ShapeKind::DiffBody, n, 0, r, take("t")};
  } else if (kind == "cross") {
    int n = static_cast<int>(take("n"));
    spec = {ShapeKind::CrossPolytope, n, 0, take("r"), 0};
  } else {
    throw fail("unknown kind");
  }
  if (!params.empty()) throw fail("unexpected key " + params.begin()->first);
  try {
    spec.validate();
  } catch (const Error& e) {
    throw fail(e.what());
  }
  return spec;
}

PointSet::PointSet(std::size_t n, std::vector<IntVector> points) : n_(n), points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.size() != n_) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from set dimension");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(std::span<const Int> p) const {
  IntVector key(p.begin(), p.end());
  return std::binary_search(points_.begin(), points_.end(), key);
}

bool in_simplex(std::span<const Int> x, Int h) {
  Int sum = 0;
  for (Int v : x) {
    if (v < 0) return false;
    sum += v;
  }
  return sum <= h;
}

bool in_diff_body(std::span<const Int> x, Int r, Int t) {
  // x = p - q with p = max(x, 0), q = max(-x, 0) is the cheapest decomposition.
  Int pos = 0, neg = 0;
  for (Int v : x) {
    if (v > 0)
      pos += v;
    else
      neg -= v;
  }
  return pos <= r && neg <= t;
}

bool in_cross_polytope(std::span<const Int> x, Int r) {
  Int sum = 0;
  for (Int v : x) sum += v < 0 ? -v : v;
  return sum <= r;
}

namespace {

template <typename Pred>
std::vector<IntVector> box_filter(std::size_t n, Int lo, Int hi, Pred pred) {
  std::vector<IntVector> out;
  IntVector x(n, lo);
  for (;;) {
    if (pred(std::span<const Int>(x))) out.push_back(x);
    std::size_t i = n;
    while (i-- > 0) {
      if (x[i] < hi) {
        ++x[i];
        break;
      }
      x[i] = lo;
    }
    if (i == static_cast<std::size_t>(-1)) return out;
  }
}

}  // namespace

PointSet shape_points(const ShapeSpec& spec) {
  spec.validate();
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<IntVector> pts;
  switch (spec.kind) {
    case ShapeKind::Simplex:
      for_each_simplex_point(n, spec.h, [&](std::span<const Int> x) { pts.emplace_back(x.begin(), x.end()); });
      break;
    case ShapeKind::DiffBody:
      pts = box_filter(n, -spec.t, spec.r, [&](std::span<const Int> x) { return in_diff_body(x, spec.r, spec.t); });
      break;
    case ShapeKind::CrossPolytope:
      pts = box_filter(n, -spec.r, spec.r, [&](std::span<const Int> x) { return in_cross_polytope(x, spec.r); });
      break;
  }
  return PointSet(n, std::move(pts));
}

Int shape_cardinality(const ShapeSpec& spec) {
  spec.validate();
  if (spec.kind == ShapeKind::Simplex) return checked::binomial(spec.h + spec.n, spec.n);
  return static_cast<Int>(shape_points(spec).size());
}

}  // namespace sidon
