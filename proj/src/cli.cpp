#include "sidon/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sidon/constructions.hpp"
#include "sidon/correspondence.hpp"
#include "sidon/density_bounds.hpp"
#include "sidon/io.hpp"
#include "sidon/render.hpp"

namespace sidon::cli {

namespace {

using io::Json;

struct Args {
  std::string group, set, lattice, matrix, basis, shape, catalog, output, eps = "0", format = "table",
      window = "-8,8", expect = "tiling";
  Int h = 0, r = 0, t = 0, h_max = 0, budget = 0;
  int n = 0;
  unsigned threads = 1;
  bool cyclic = false, multiset = false, diff_floor = false, check = false;
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

  // Text to -o when given, else to standard output.
  void emit_text(const std::string& text, const std::string& path) {
    if (path.empty())
      out_ << text;
    else
      io::write_text_file(path, text);
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

std::string need(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing required option ") + flag);
  return value;
}

IntMatrix matrix_from_file(const std::string& path) {
  Json j = io::read_json_file(path);
  const Json& rows = j.contains("matrix") ? j.at("matrix") : j.at("basis");
  std::vector<IntVector> out;
  for (const auto& r : rows) out.push_back(r.get<IntVector>());
  return IntMatrix::from_rows(out);
}

io::GroupSet group_set(const Args& a) {
  Json s = io::read_json_file(need(a.set, "--set"));
  io::GroupSet gs;
  if (!a.group.empty())
    gs.group = io::group_from_json(io::read_json_file(a.group));
  else if (s.is_object() && s.contains("group"))
    gs.group = io::group_from_json(s.at("group"));
  else
    throw Error(ErrorCode::InvalidArgument, "missing required option --group");
  gs.elements = io::elements_from_json(s.is_object() ? s.at("elements") : s);
  for (const auto& e : gs.elements) gs.group.require(e);
  return gs;
}

Lattice lattice_arg(const Args& a) { return io::lattice_from_json(io::read_json_file(need(a.lattice, "--lattice"))); }

SearchOptions search_options(const Args& a) {
  SearchOptions o;
  o.budget = a.budget > 0 ? a.budget : default_search_budget();
  o.threads = std::max(1u, a.threads);
  o.difference_body_floor = a.diff_floor;
  return o;
}

ConstructOptions construct_options(const Args& a) {
  ConstructOptions o;
  o.catalog = a.catalog.empty() ? default_catalog_path() : std::filesystem::path(a.catalog);
  o.search = search_options(a);
  return o;
}

Window parse_window(const std::string& text) {
  std::vector<Int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad window '" + text + "'");
    }
  }
  if (v.size() == 2) return Window::square(v[0], v[1]);
  if (v.size() == 4) return Window{v[0], v[1], v[2], v[3]};
  throw Error(ErrorCode::ParseError, "window must be LO,HI or XMIN,XMAX,YMIN,YMAX");
}

int verdict_exit(Session& s, const Verdict& v) {
  s.emit(io::verdict_to_json(v));
  return v.holds ? kOk : kNegative;
}

int emit_certificate(Session& s, const Certificate& c, const Args& a) {
  if (!a.catalog.empty()) io::append_catalog(a.catalog, c, io::utc_timestamp());
  s.emit(io::certificate_to_json(c));
  return c.verified ? kOk : kNegative;
}

Json group_conversion_json(const GroupConversion& g) {
  Json j = io::set_to_json(g.group, g.set);
  j["distinct"] = g.distinct;
  j["verdict"] = io::verdict_to_json(g.verdict);
  return j;
}

Json lattice_conversion_json(const LatticeConversion& c) {
  Json j = io::lattice_to_json(c.lattice);
  j["det"] = c.lattice.det();
  j["verdict"] = io::verdict_to_json(c.verdict);
  return j;
}

std::string bounds_table(const BoundsTable& t) {
  std::ostringstream os;
  os << "bounds for h=" << t.h << " n=" << t.n << '\n';
  for (const auto& e : t.entries) {
    os << std::left << std::setw(34) << e.id << std::setw(24) << e.relation;
    // Integer rounding only matters where the bound is compared with a group order.
    const bool integral = e.relation.starts_with("phi(") || e.relation.starts_with("psi(");
    os << std::setw(16) << (e.value ? e.value->str() : "-");
    if (e.value && integral)
      os << " ceil " << std::setw(10) << e.value->ceil();
    else
      os << "      " << std::setw(10) << "";
    os << " " << e.formula;
    std::vector<std::string> flags;
    if (!e.applicable) flags.push_back("not applicable");
    if (e.asymptotic) flags.push_back("asymptotic");
    if (!e.numeric) flags.push_back("symbolic");
    if (!e.note.empty()) flags.push_back(e.note);
    for (std::size_t i = 0; i < flags.size(); ++i) os << (i == 0 ? "  [" : "; ") << flags[i];
    if (!flags.empty()) os << ']';
    os << '\n';
  }
  return os.str();
}

bool same_certificate(const Certificate& a, const Certificate& b) {
  return io::certificate_to_json(a) == io::certificate_to_json(b);
}

int catalog_regen(Session& s, const Args& a) {
  const std::filesystem::path path = a.catalog.empty() ? default_catalog_path() : std::filesystem::path(a.catalog);
  std::vector<io::CatalogRecord> old;
  if (std::filesystem::exists(path)) old = io::read_catalog(path);
  const SearchOptions opts = search_options(a);
  std::vector<io::CatalogRecord> fresh;
  int mismatches = 0;
  for (const auto& task : catalog_tasks()) {
    Certificate c = task.compute(opts);
    if (!c.verified) throw Error(ErrorCode::ConstructionInvalid, task.label + ": certificate failed verification");
    std::string stamp = io::utc_timestamp();
    std::string status = "new";
    for (const auto& rec : old) {
      const Certificate& o = rec.certificate;
      if (o.kind != task.kind || o.h != task.h || o.n != task.n || o.shape != task.shape) continue;
      if (same_certificate(o, c)) {
        stamp = rec.timestamp;
        status = "ok";
      } else {
        status = "MISMATCH";
        ++mismatches;
        s.err() << "catalog mismatch for " << task.label << ":\n  stored   " << io::certificate_to_json(o).dump()
                << "\n  computed " << io::certificate_to_json(c).dump() << '\n';
      }
      break;
    }
    s.out() << std::left << std::setw(32) << task.label << " value " << std::setw(6) << c.value << ' ' << status
            << '\n';
    fresh.push_back(io::CatalogRecord{std::move(c), std::move(stamp)});
  }
  if (mismatches > 0)
    throw Error(ErrorCode::CatalogMismatch, std::to_string(mismatches) + " stored certificate(s) differ; " +
                                                path.string() + " left unchanged");
  if (!a.check) io::write_catalog(path, fresh);
  return kOk;
}

int catalog_list(Session& s, const Args& a) {
  const std::filesystem::path path = a.catalog.empty() ? default_catalog_path() : std::filesystem::path(a.catalog);
  int bad = 0;
  for (const auto& rec : io::read_catalog(path)) {
    const Certificate& c = rec.certificate;
    bool ok = verify_certificate(c);
    if (!ok) ++bad;
    s.out() << std::left << std::setw(11) << to_string(c.kind) << " h=" << std::setw(3) << c.h << " n=" << std::setw(2)
            << c.n << " value=" << std::setw(6) << c.value;
    if (c.shape) s.out() << " shape=" << c.shape->str();
    s.out() << (ok ? " verified" : " FAILED") << ' ' << rec.timestamp << '\n';
  }
  return bad == 0 ? kOk : kNegative;
}

int error_exit(Session& s, const Error& e) {
  s.err() << "error: " << e.what() << '\n';
  return e.code() == ErrorCode::BudgetExceeded ? kBudget : kUsage;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Session s(out, err);
  Args a;
  CLI::App app{"Exact tools for B_h sets, h-bases and lattice arrangements of discrete simplices",
               "simplex_sidon"};
  app.set_help_flag("--help", "print this help and exit");  // -h would clash with --h
  app.require_subcommand(1);
  std::function<int()> run;
  auto bind = [&](CLI::App* cmd, std::function<int()> fn) { cmd->callback([&run, fn] { run = fn; }); };

  auto add_h = [&](CLI::App* c) { c->add_option("--h", a.h, "sidelength / order h")->required(); };
  auto add_n = [&](CLI::App* c) { c->add_option("--n", a.n, "dimension n")->required(); };
  auto add_group_set = [&](CLI::App* c) {
    c->add_option("--group", a.group, "group file {\"factors\": [...]}");
    c->add_option("--set", a.set, "set file {\"elements\": [[...], ...]}")->required();
  };
  auto add_search = [&](CLI::App* c) {
    c->add_option("--budget", a.budget, "search budget in point reductions");
    c->add_option("--threads", a.threads, "worker threads");
    c->add_option("--catalog", a.catalog, "append the certificate to this JSONL catalog");
  };

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a square integer matrix");
  snf_cmd->add_option("--matrix,--lattice", a.matrix, "matrix file {\"basis\": [[...]]}")->required();
  bind(snf_cmd, [&] {
    SnfResult r = snf(matrix_from_file(a.matrix));
    s.emit(Json{{"d", r.d},
                {"U", r.U.to_rows()},
                {"V", r.V.to_rows()},
                {"group", io::group_to_json(AbelianGroup::from_invariant_factors(r.d))}});
    return kOk;
  });

  auto* hnf_cmd = app.add_subcommand("hnf", "Hermite normal form of a lattice basis");
  hnf_cmd->add_option("--lattice,--matrix", a.lattice, "lattice file {\"n\": N, \"basis\": [[...]]}")->required();
  bind(hnf_cmd, [&] {
    Lattice l = lattice_arg(a);
    Json j = io::lattice_to_json(l);
    j["det"] = l.det();
    s.emit(j);
    return kOk;
  });

  auto* verify = app.add_subcommand("verify", "Check a set or an arrangement");
  verify->require_subcommand(1);
  auto* v_bh = verify->add_subcommand("bh", "B_h set test");
  add_group_set(v_bh);
  add_h(v_bh);
  v_bh->add_flag("--multiset", a.multiset, "compare h-fold multiset sums instead of coefficient vectors");
  bind(v_bh, [&] {
    auto gs = group_set(a);
    return verdict_exit(s, a.multiset ? is_bh_set_multiset(gs.group, gs.elements, a.h)
                                      : is_bh_set(gs.group, gs.elements, a.h));
  });
  auto* v_basis = verify->add_subcommand("basis", "h-basis test");
  add_group_set(v_basis);
  add_h(v_basis);
  bind(v_basis, [&] {
    auto gs = group_set(a);
    return verdict_exit(s, is_h_basis(gs.group, gs.elements, a.h));
  });
  auto* v_gen = verify->add_subcommand("genbasis", "every element is a sum of r elements minus a sum of t");
  add_group_set(v_gen);
  v_gen->add_option("--r", a.r, "sidelength of the added simplex")->required();
  v_gen->add_option("--t", a.t, "sidelength of the subtracted simplex")->required();
  bind(v_gen, [&] {
    auto gs = group_set(a);
    return verdict_exit(s, is_generalized_basis(gs.group, gs.elements, a.r, a.t));
  });
  auto* v_arr = verify->add_subcommand("arrangement", "classify the translates of a shape by a lattice");
  v_arr->add_option("--shape", a.shape, "e.g. simplex:n=2,h=4 or diff:n=2,r=3,t=2")->required();
  v_arr->add_option("--lattice", a.lattice, "lattice file {\"n\": N, \"basis\": [[...]]}")->required();
  v_arr->add_option("--expect", a.expect, "verdict counted as success")
      ->check(CLI::IsMember({"packing", "covering", "tiling"}));
  bind(v_arr, [&] {
    Verdict v = classify_arrangement(shape_points(ShapeSpec::parse(a.shape)), lattice_arg(a));
    const Arrangement arr = *v.arrangement;
    bool ok = arr == Arrangement::Tiling || (a.expect == "packing" && arr == Arrangement::PackingOnly) ||
              (a.expect == "covering" && arr == Arrangement::CoveringOnly);
    s.emit(io::verdict_to_json(v));
    return ok ? kOk : kNegative;
  });

  auto* convert = app.add_subcommand("convert", "Translate between group sets and lattices");
  convert->require_subcommand(1);
  auto* c_bl = convert->add_subcommand("bh-to-lattice", "B_h set -> packing lattice of the simplex");
  add_group_set(c_bl);
  add_h(c_bl);
  bind(c_bl, [&] {
    auto gs = group_set(a);
    s.emit(lattice_conversion_json(bh_to_packing(gs.group, gs.elements, a.h)));
    return kOk;
  });
  auto* c_lb = convert->add_subcommand("lattice-to-bh", "packing lattice -> B_h set in Z^n/L");
  c_lb->add_option("--lattice", a.lattice, "lattice file {\"n\": N, \"basis\": [[...]]}")->required();
  add_h(c_lb);
  bind(c_lb, [&] {
    s.emit(group_conversion_json(packing_to_bh(lattice_arg(a), a.h)));
    return kOk;
  });
  auto* c_basl = convert->add_subcommand("basis-to-lattice", "h-basis -> covering lattice of the simplex");
  add_group_set(c_basl);
  add_h(c_basl);
  bind(c_basl, [&] {
    auto gs = group_set(a);
    s.emit(lattice_conversion_json(basis_to_covering(gs.group, gs.elements, a.h)));
    return kOk;
  });
  auto* c_lbas = convert->add_subcommand("lattice-to-basis", "covering lattice -> h-basis of Z^n/L");
  c_lbas->add_option("--lattice", a.lattice, "lattice file {\"n\": N, \"basis\": [[...]]}")->required();
  add_h(c_lbas);
  bind(c_lbas, [&] {
    s.emit(group_conversion_json(covering_to_basis(lattice_arg(a), a.h)));
    return kOk;
  });

  auto* disc = app.add_subcommand("discretize", "Round a real lattice basis to the grid (1/h) Z^n");
  disc->add_option("--basis", a.basis, "rational basis file {\"n\": N, \"basis\": [[\"p/q\", ...]]}")->required();
  disc->add_option("--h", a.h, "grid refinement h");
  disc->add_option("--eps", a.eps, "shrink factor as p/q in [0,1)");
  disc->add_option("--h-max", a.h_max, "report the smallest h <= H_MAX giving a packing");
  bind(disc, [&] {
    RationalMatrix basis = io::rational_matrix_from_json(io::read_json_file(a.basis));
    Rational eps = Rational::parse(a.eps);
    auto to_json = [&](const Discretization& d) {
      Json j{{"h", d.h}};
      j.update(io::lattice_to_json(d.lattice));
      j["det"] = d.lattice.det();
      j["sidelength"] = d.sidelength;
      j["points"] = d.points;
      j["density"] = d.density.str();
      j["verdict"] = io::verdict_to_json(d.verdict);
      return j;
    };
    if (a.h_max > 0) {
      auto d = smallest_packing_discretization(basis, eps, a.h_max);
      if (!d) {
        s.emit(Json{{"h_max", a.h_max}, {"packing", nullptr}});
        return kNegative;
      }
      s.emit(to_json(*d));
      return kOk;
    }
    if (a.h < 1) throw Error(ErrorCode::InvalidArgument, "discretize needs --h or --h-max");
    Discretization d = discretize_lattice(basis, a.h, eps);
    s.emit(to_json(d));
    const auto arr = *d.verdict.arrangement;
    return arr == Arrangement::PackingOnly || arr == Arrangement::Tiling ? kOk : kNegative;
  });

  auto* search = app.add_subcommand("search", "Exhaustive search for extremal lattices");
  search->require_subcommand(1);
  auto* s_phi = search->add_subcommand("phi", "smallest group with a B_h set of size n+1");
  add_h(s_phi);
  add_n(s_phi);
  s_phi->add_flag("--cyclic", a.cyclic, "restrict to cyclic groups");
  s_phi->add_flag("--diff-floor", a.diff_floor, "start at the largest difference body size");
  add_search(s_phi);
  bind(s_phi, [&] { return emit_certificate(s, search_phi(a.h, a.n, a.cyclic, search_options(a)), a); });
  auto* s_psi = search->add_subcommand("psi", "largest group with an h-basis of size n+1");
  add_h(s_psi);
  add_n(s_psi);
  add_search(s_psi);
  bind(s_psi, [&] { return emit_certificate(s, search_psi(a.h, a.n, search_options(a)), a); });
  auto* s_til = search->add_subcommand("tiling", "lattice tiling of a shape");
  s_til->add_option("--shape", a.shape, "simplex:n=,h= or diff:n=,r=,t= or cross:n=,r=")->required();
  add_search(s_til);
  bind(s_til, [&] {
    auto c = search_tiling(ShapeSpec::parse(a.shape), search_options(a));
    if (!c) {
      s.emit(Json{{"shape", a.shape}, {"tiling", nullptr}, {"note", "exhaustively none of determinant |shape|"}});
      return kNegative;
    }
    return emit_certificate(s, *c, a);
  });

  auto* construct = app.add_subcommand("construct", "Closed-form and stored certificates");
  construct->require_subcommand(1);
  auto* k_bh = construct->add_subcommand("bh", "optimal B_h set");
  add_n(k_bh);
  add_h(k_bh);
  add_search(k_bh);
  bind(k_bh, [&] {
    Certificate c = construct_bh(a.n, a.h, construct_options(a));
    s.emit(io::certificate_to_json(c));
    return kOk;
  });
  auto* k_til = construct->add_subcommand("tiling", "tiling by simplex(r) - simplex(t)");
  add_n(k_til);
  k_til->add_option("--r", a.r, "sidelength of the added simplex")->required();
  k_til->add_option("--t", a.t, "sidelength of the subtracted simplex")->required();
  add_search(k_til);
  bind(k_til, [&] {
    Certificate c = construct_tiling(a.n, a.r, a.t, construct_options(a));
    s.emit(io::certificate_to_json(c));
    return kOk;
  });

  auto* bounds = app.add_subcommand("bounds", "Evaluate the known bounds on phi and psi");
  add_h(bounds);
  add_n(bounds);
  bounds->add_option("--format", a.format, "output format (default table)")->check(CLI::IsMember({"table", "json"}));
  bind(bounds, [&] {
    BoundsTable t = bounds_report(a.h, a.n);
    if (a.format == "json")
      s.emit(io::bounds_to_json(t));
    else
      s.out() << bounds_table(t);
    return kOk;
  });

  auto* render = app.add_subcommand("render", "SVG picture of a 2-D arrangement");
  render->add_option("--shape", a.shape, "simplex:n=,h= or diff:n=,r=,t= or cross:n=,r=")->required();
  render->add_option("--lattice", a.lattice, "lattice file {\"n\": N, \"basis\": [[...]]}")->required();
  render->add_option("--window", a.window, "LO,HI or XMIN,XMAX,YMIN,YMAX");
  render->add_option("-o,--output", a.output, "output file (default: standard output)");
  bind(render, [&] {
    s.emit_text(render_svg(ShapeSpec::parse(a.shape), lattice_arg(a), parse_window(a.window)), a.output);
    return kOk;
  });

  auto* catalog = app.add_subcommand("catalog", "Stored certificates");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "list and re-verify stored certificates");
  cat_list->add_option("--catalog", a.catalog);
  bind(cat_list, [&] { return catalog_list(s, a); });
  auto* cat_regen = catalog->add_subcommand("regen", "recompute every stored certificate");
  cat_regen->add_option("--catalog", a.catalog);
  cat_regen->add_option("--budget", a.budget);
  cat_regen->add_option("--threads", a.threads);
  cat_regen->add_flag("--check", a.check, "compare only; leave the catalog file untouched");
  bind(cat_regen, [&] { return catalog_regen(s, a); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return run ? run() : kUsage;
  } catch (const VerdictError& e) {
    err << "error: " << e.what() << '\n';
    s.emit(io::verdict_to_json(e.verdict()));
    return kNegative;
  } catch (const Error& e) {
    return error_exit(s, e);
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace sidon::cli
