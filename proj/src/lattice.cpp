#include "sidon/lattice.hpp"

#include <algorithm>

namespace sidon {

using namespace checked;

Lattice Lattice::from_canonical(IntMatrix h) {
  if (!h.square()) throw Error(ErrorCode::NonSquare, "lattice basis must be square");
  const std::size_t n = h.rows();
  Int det = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (h(i, i) <= 0) throw Error(ErrorCode::InvalidArgument, "HNF diagonal must be positive");
    det = mul(det, h(i, i));
    for (std::size_t j = i + 1; j < n; ++j)
      if (h(i, j) != 0) throw Error(ErrorCode::InvalidArgument, "HNF must be lower triangular");
    for (std::size_t j = 0; j < i; ++j)
      if (h(i, j) < 0 || h(i, j) >= h(j, j))
        throw Error(ErrorCode::InvalidArgument, "HNF off-diagonal entry not reduced");
  }
  return Lattice(std::move(h), det);
}

bool Lattice::contains(std::span<const Int> x) const {
  auto r = coset_reduce(x, *this);
  return std::all_of(r.begin(), r.end(), [](Int v) { return v == 0; });
}

bool operator<(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.dim();
  if (n != b.dim()) return n < b.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (a.diagonal(i) != b.diagonal(i)) return a.diagonal(i) < b.diagonal(i);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a.hnf_(i, j) != b.hnf_(i, j)) return a.hnf_(i, j) < b.hnf_(i, j);
  return false;
}

Lattice hnf(const IntMatrix& basis) {
  if (!basis.square()) throw Error(ErrorCode::NonSquare, "basis must be square");
  if (basis.determinant() == 0) throw Error(ErrorCode::SingularBasis, "basis is singular");
  const std::size_t n = basis.rows();
  IntMatrix h = basis;

  // Clear column j above row j, working from the last column backwards, so
  // that row j ends with its pivot.
  for (std::size_t jj = n; jj-- > 0;) {
    for (std::size_t i = 0; i < jj; ++i) {
      Int b = h(i, jj);
      if (b == 0) continue;
      Int a = h(jj, jj);
      Int x, y;
      Int g = xgcd(a, b, x, y);
      Int ag = a / g, bg = b / g;
      for (std::size_t c = 0; c <= jj; ++c) {
        Int rj = h(jj, c), ri = h(i, c);
        h(jj, c) = add(mul(x, rj), mul(y, ri));
        h(i, c) = sub(mul(ag, ri), mul(bg, rj));
      }
    }
    if (h(jj, jj) < 0) h.negate_row(jj);
  }

  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j-- > 0;) {
      Int q = floor_div(h(i, j), h(j, j));
      if (q != 0) h.add_row_multiple(i, j, neg(q));
    }
  return Lattice::from_canonical(std::move(h));
}

SnfResult snf(const IntMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::NonSquare, "SNF input must be square");
  const std::size_t n = a.rows();
  IntMatrix m = a;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(n);

  auto row_op = [&](std::size_t dst, std::size_t src, Int f) {
    m.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, Int f) {
    m.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  };

  // Combine rows (or columns) p and q so that the pivot becomes gcd and the
  // other entry vanishes.
  auto row_gcd = [&](std::size_t p, std::size_t q, std::size_t col) {
    Int a = m(p, col), b = m(q, col);
    Int x, y;
    Int g = xgcd(a, b, x, y);
    Int ag = a / g, bg = b / g;
    for (IntMatrix* mat : {&m, &u})
      for (std::size_t c = 0; c < n; ++c) {
        Int rp = (*mat)(p, c), rq = (*mat)(q, c);
        (*mat)(p, c) = add(mul(x, rp), mul(y, rq));
        (*mat)(q, c) = sub(mul(ag, rq), mul(bg, rp));
      }
  };
  auto col_gcd = [&](std::size_t p, std::size_t q, std::size_t row) {
    Int a = m(row, p), b = m(row, q);
    Int x, y;
    Int g = xgcd(a, b, x, y);
    Int ag = a / g, bg = b / g;
    for (IntMatrix* mat : {&m, &v})
      for (std::size_t r = 0; r < n; ++r) {
        Int cp = (*mat)(r, p), cq = (*mat)(r, q);
        (*mat)(r, p) = add(mul(x, cp), mul(y, cq));
        (*mat)(r, q) = sub(mul(ag, cq), mul(bg, cp));
      }
  };

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pr = n, pc = n;
    for (std::size_t j = t; j < n && pr == n; ++j)
      for (std::size_t i = t; i < n; ++i)
        if (m(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == n) break;  // remaining block is zero
    m.swap_rows(t, pr);
    u.swap_rows(t, pr);
    m.swap_cols(t, pc);
    v.swap_cols(t, pc);

    for (;;) {
      for (std::size_t i = t + 1; i < n; ++i) {
        if (m(i, t) == 0) continue;
        if (m(i, t) % m(t, t) == 0) row_op(i, t, neg(m(i, t) / m(t, t)));
        else row_gcd(t, i, t);
      }
      bool clean = true;
      for (std::size_t j = t + 1; j < n; ++j) {
        if (m(t, j) == 0) continue;
        if (m(t, j) % m(t, t) == 0) {
          col_op(j, t, neg(m(t, j) / m(t, t)));
        } else {
          col_gcd(t, j, t);
          clean = false;  // may have refilled column t
        }
      }
      if (!clean) continue;

      std::size_t bad_row = n;
      for (std::size_t i = t + 1; i < n && bad_row == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (m(i, j) % m(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == n) break;
      row_op(t, bad_row, 1);
    }
    if (m(t, t) < 0) {
      m.negate_row(t);
      u.negate_row(t);
    }
  }

  SnfResult out{IntVector(n), std::move(u), std::move(v)};
  for (std::size_t i = 0; i < n; ++i) out.d[i] = m(i, i);
  return out;
}

IntVector coset_reduce(std::span<const Int> x, const Lattice& lattice) {
  const std::size_t n = lattice.dim();
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "point and lattice dimensions differ");
  IntVector r(x.begin(), x.end());
  const IntMatrix& h = lattice.hnf();
  for (std::size_t i = n; i-- > 0;) {
    Int q = floor_div(r[i], h(i, i));
    if (q == 0) continue;
    for (std::size_t j = 0; j <= i; ++j) r[j] = sub_mul(r[j], q, h(i, j));
  }
  return r;
}

CosetIndexer::CosetIndexer(const Lattice& lattice)
    : n_(lattice.dim()), det_(lattice.det()), hnf_(n_ * n_), radix_(n_, 1) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) hnf_[i * n_ + j] = lattice.hnf()(i, j);
  for (std::size_t i = n_; i-- > 1;) radix_[i - 1] = mul(radix_[i], lattice.diagonal(i));
}

Int CosetIndexer::index(std::span<const Int> x, std::span<Int> r) const {
  if (x.size() != n_ || r.size() < n_) throw Error(ErrorCode::DimensionMismatch, "point and lattice dimensions differ");
  std::copy(x.begin(), x.end(), r.begin());
  Int idx = 0;
  for (std::size_t i = n_; i-- > 0;) {
    const Int* row = hnf_.data() + i * n_;
    Int q = floor_div(r[i], row[i]);
    if (q != 0)
      for (std::size_t j = 0; j < i; ++j) r[j] = sub_mul(r[j], q, row[j]);
    Int ri = r[i] - q * row[i];  // in [0, pivot), cannot overflow
    idx += ri * radix_[i];       // bounded by det
  }
  return idx;
}

Int CosetIndexer::index(std::span<const Int> x) const {
  IntVector scratch(n_);
  return index(x, scratch);
}

IntVector CosetIndexer::representative(Int index) const {
  IntVector r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    r[i] = index / radix_[i];
    index %= radix_[i];
  }
  return r;
}

}  // namespace sidon
