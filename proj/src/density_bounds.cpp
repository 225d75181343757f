#include "sidon/density_bounds.hpp"

#include <functional>

namespace sidon {

namespace ck = checked;

Rational density(const PointSet& shape, const Lattice& lattice) {
  return Rational(static_cast<Int>(shape.size()), lattice.det());
}

Rational discrete_density_ratio(DensityKind, Int h, int n, Int extremal_value) {
  if (extremal_value < 1) throw Error(ErrorCode::InvalidArgument, "extremal value must be positive");
  return Rational(ck::binomial(h + n, n), extremal_value);
}

std::optional<Rational> simplex_packing_density(int n) {
  switch (n) {
    case 1: return Rational(1);
    case 2: return Rational(2, 3);
    case 3: return Rational(18, 49);
    default: return std::nullopt;
  }
}

std::optional<Rational> simplex_covering_density(int n) {
  switch (n) {
    case 1: return Rational(1);
    case 2: return Rational(3, 2);
    default: return std::nullopt;
  }
}

Rational simplex_density_lower_bound(Int h, int n) {
  auto delta = simplex_packing_density(n);
  if (!delta) throw Error(ErrorCode::UnsupportedParameters, "simplex packing density unknown for n > 3");
  return Rational(ck::pow(h, n), ck::factorial(n)) / *delta;
}

const BoundEntry* BoundsTable::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

namespace {

// (2n)! / (2^k (n!)^3)
Rational central_ratio(int n, int two_power) {
  return Rational(ck::factorial(2 * n), ck::mul(ck::pow(2, two_power), ck::pow(ck::factorial(n), 3)));
}

struct Builder {
  BoundsTable& table;

  BoundEntry& add(std::string id, std::string relation, std::string formula,
                  const std::function<std::optional<Rational>()>& value) {
    BoundEntry e;
    e.id = std::move(id);
    e.relation = std::move(relation);
    e.formula = std::move(formula);
    try {
      e.value = value();
    } catch (const Error& err) {
      if (err.code() != ErrorCode::Overflow) throw;
      e.note = "exceeds the exact 64-bit range";
    }
    table.entries.push_back(std::move(e));
    return table.entries.back();
  }

  BoundEntry& symbolic(std::string id, std::string relation, std::string formula, std::string note) {
    BoundEntry& e = add(std::move(id), std::move(relation), std::move(formula), [] { return std::nullopt; });
    e.numeric = false;
    e.asymptotic = true;
    e.note = std::move(note);
    return e;
  }
};

}  // namespace

BoundsTable bounds_report(Int h, int n) {
  if (h < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "bounds need h >= 1 and n >= 1");
  BoundsTable table{h, n, {}};
  Builder b{table};
  const Int half_up = (h + 1) / 2;
  const Int half_down = h / 2;
  const auto delta = simplex_packing_density(n);
  const auto theta = simplex_covering_density(n);

  b.add("phi_lower_pigeonhole", "phi(h,n) >=", "C(h+n,n)", [&] { return Rational(ck::binomial(h + n, n)); });

  auto& classical = b.add("phi_lower_classical", "phi(h,n) >", "(2n)!/(2^n (n!)^3) * (h-2n+2)^n",
                          [&] { return central_ratio(n, n) * Rational(ck::pow(h - 2 * n + 2, n)); });
  classical.applicable = 2 * n - 2 <= h;
  if (!classical.applicable) classical.note = "requires 0 <= 2n-2 <= h";

  b.add("phi_upper_trivial", "phi(h,n) <=", "(h+1)^n", [&] { return Rational(ck::pow(h + 1, n)); });

  auto& fixed_h = b.add("phi_lower_fixed_h", "phi(h,n) >", "(n+1-ceil(h/2))^h / (ceil(h/2)! floor(h/2)!)", [&] {
    return Rational(ck::pow(n + 1 - half_up, h), ck::mul(ck::factorial(half_up), ck::factorial(half_down)));
  });
  fixed_h.applicable = 2 <= h && h <= 2 * n + 2;
  if (!fixed_h.applicable) fixed_h.note = "requires 1 <= h/2 <= n+1";

  auto& dens = b.add("simplex_packing_density", "delta_L(simplex^n) =", "exact value", [&] { return delta; });
  dens.applicable = delta.has_value();
  if (!dens.applicable) dens.note = "known only for n <= 3";

  b.add("simplex_packing_density_lower", "delta_L(simplex^n) >=", "2 (n!)^2/(2n)!",
        [&] { return Rational(ck::mul(2, ck::pow(ck::factorial(n), 2)), ck::factorial(2 * n)); });
  b.add("simplex_packing_density_upper", "delta_L(simplex^n) <", "2^n (n!)^2/(2n)!",
        [&] { return Rational(ck::mul(ck::pow(2, n), ck::pow(ck::factorial(n), 2)), ck::factorial(2 * n)); });
  b.symbolic("simplex_packing_density_large_n", "delta_L(simplex^n) >=", "(log 2 + o(1)) n (n!)^2/(2n)!",
             "n -> infinity; coefficient log 2 only, the o(1) term is not evaluated");

  auto& dl = b.add("phi_lower_density", "phi(h,n) >=", "h^n / (n! delta_L(simplex^n))",
                   [&]() -> std::optional<Rational> {
                     if (!delta) return std::nullopt;
                     return simplex_density_lower_bound(h, n);
                   });
  dl.applicable = delta.has_value();
  if (!dl.applicable) dl.note = "delta_L(simplex^n) unknown for n > 3";

  auto& du = b.add("phi_upper_density", "phi(h,n) <", "(1+eps) h^n / (n! delta_L(simplex^n)), h >= h0(n,eps)",
                   [&]() -> std::optional<Rational> {
                     if (!delta) return std::nullopt;
                     return simplex_density_lower_bound(h, n);
                   });
  du.asymptotic = true;
  du.applicable = delta.has_value();
  du.note = "value shown without the (1+eps) factor; h0 is not constructive";

  b.add("phi_lower_corollary", "phi(h,n) >", "(2n)!/(2^n (n!)^3) h^n",
        [&] { return central_ratio(n, n) * Rational(ck::pow(h, n)); });
  auto& cu = b.add("phi_upper_corollary", "phi(h,n) <", "(1+eps) (2n)!/(2 (n!)^3) h^n, h >= h0(n,eps)",
                   [&] { return central_ratio(n, 1) * Rational(ck::pow(h, n)); });
  cu.asymptotic = true;
  cu.note = "value shown without the (1+eps) factor";

  auto& lim = b.add("phi_limit", "lim phi(h,n)/h^n =", "1/(n! delta_L(simplex^n))", [&]() -> std::optional<Rational> {
    if (!delta) return std::nullopt;
    return Rational(1) / (Rational(ck::factorial(n)) * *delta);
  });
  lim.asymptotic = true;
  lim.applicable = delta.has_value();

  auto& llo = b.add("phi_limit_lower", "lim phi(h,n)/h^n >", "(2n)!/(2^n (n!)^3)", [&] { return central_ratio(n, n); });
  llo.asymptotic = true;
  llo.applicable = n >= 4;
  auto& lhi = b.add("phi_limit_upper", "lim phi(h,n)/h^n <=", "(2n)!/(2 (n!)^3)", [&] { return central_ratio(n, 1); });
  lhi.asymptotic = true;
  lhi.applicable = n >= 4;
  b.symbolic("phi_limit_large_n", "lim phi(h,n)/h^n <=", "(2n)!/((log 2 + o(1)) n (n!)^3)",
             "n -> infinity; coefficient log 2 only, the o(1) term is not evaluated");

  auto& cov = b.add("simplex_covering_density", "theta_L(simplex^n) =", "exact value", [&] { return theta; });
  cov.applicable = theta.has_value();
  if (!cov.applicable) cov.note = "known only for n <= 2";
  auto& clo = b.add("simplex_covering_density_lower", "theta_L(simplex^n) >=", "1 + 2^-(3n+7)",
                    [&] { return Rational(1) + Rational(1, ck::pow(2, 3 * n + 7)); });
  clo.applicable = n >= 3;
  auto& chi = b.symbolic("simplex_covering_density_upper", "theta_L(simplex^n) <=", "n^(log2 log2 n + c)",
                         "c is an unspecified absolute constant");
  chi.asymptotic = false;
  chi.applicable = n >= 3;

  b.add("psi_upper_pigeonhole", "psi(h,n) <=", "C(h+n,n)", [&] { return Rational(ck::binomial(h + n, n)); });
  auto& plim = b.add("psi_limit", "lim psi(h,n)/h^n =", "1/(n! theta_L(simplex^n))", [&]() -> std::optional<Rational> {
    if (!theta) return std::nullopt;
    return Rational(1) / (Rational(ck::factorial(n)) * *theta);
  });
  plim.asymptotic = true;
  plim.applicable = theta.has_value();

  return table;
}

}  // namespace sidon
