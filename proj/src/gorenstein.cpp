#include "morita/gorenstein.hpp"

#include "morita/errors.hpp"
#include "morita/parallel.hpp"

namespace morita {

namespace {

Mat zero_map(std::uint32_t p, Module const& from, Module const& to) {
  return Mat(p, to.dim(), from.dim());
}

// Rank of phi -> phi * d for phi in Hom(target of d, test).
std::size_t pullback_rank(Module const& source, Module const& target, Mat const& d,
                          Module const& test) {
  auto basis = hom_basis(target, test);
  if (basis.empty() || source.dim() == 0) return 0;
  std::vector<Mat> cols;
  for (auto const& phi : basis) cols.push_back((phi * d).flatten());
  return rank(hstack(cols, test.prime(), test.dim() * source.dim()));
}

std::vector<NamedModule> named(std::vector<Module> const& ms, std::string const& prefix) {
  std::vector<NamedModule> out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    out.push_back({prefix + " #" + std::to_string(i) + " " + ms[i].describe(), ms[i]});
  }
  return out;
}

ClassOracle const& corner_first(ComponentClasses const& cc, Corner corner) {
  return corner == Corner::a ? cc.c1 : cc.d1;
}

AlgebraPtr corner_algebra(ContextPtr const& ctx, Corner corner) {
  return corner == Corner::a ? ctx->a() : ctx->b();
}

DeltaModule t_of(ContextPtr const& ctx, Corner corner, Module const& x) {
  return corner == Corner::a ? t_a(ctx, x) : t_b(ctx, x);
}

Module u_of(DeltaModule const& dm, Corner corner) {
  return corner == Corner::a ? u_a(dm) : u_b(dm);
}

bool right_projective(ContextPtr const& ctx) {
  return is_projective(ctx->n().as_right()) && is_projective(ctx->m().as_right());
}

// The bimodule tensored onto the other corner: N for B-modules into A, M for
// A-modules into B.
Bimodule const& crossing(ContextPtr const& ctx, Corner from) {
  return from == Corner::a ? ctx->m() : ctx->n();
}

// Hom_A(N, C) as a B-module for C over A, Hom_B(M, D) as an A-module for D over B.
Module hom_across(ContextPtr const& ctx, Corner from, Module const& c) {
  return hom_over_algebra(from == Corner::a ? ctx->n() : ctx->m(), c).module;
}

std::string corner_name(Corner c) { return c == Corner::a ? "A" : "B"; }
std::string other_name(Corner c) { return c == Corner::a ? "B" : "A"; }

}  // namespace

std::string to_string(Corner c) { return c == Corner::a ? "a" : "b"; }

// ---------------------------------------------------------------------------
// Complexes

CheckReport validate_complex(ChainComplex const& c) {
  CheckReport r;
  r.check = "cochain complex";
  if (c.maps.size() + 1 != c.terms.size() && !(c.terms.empty() && c.maps.empty())) {
    r.add("one map between consecutive terms", false);
    r.finalize();
    return r;
  }
  bool maps_ok = true, square_zero = true;
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    if (!is_module_map(c.terms[i], c.terms[i + 1], c.maps[i])) {
      if (maps_ok) r.witness("map leaving degree " + std::to_string(c.lo + static_cast<int>(i)) +
                             " is not a module map");
      maps_ok = false;
    }
    if (i + 1 < c.maps.size()) {
      auto comp = c.maps[i + 1] * c.maps[i];
      if (rank(comp) != 0) {
        if (square_zero) r.witness("d d is nonzero at degree " + std::to_string(c.lo + static_cast<int>(i)));
        square_zero = false;
      }
    }
  }
  r.add("maps are module maps", maps_ok);
  r.add("consecutive maps compose to zero", square_zero);
  r.finalize();
  return r;
}

std::size_t homology_dim(ChainComplex const& c, int degree) {
  auto i = static_cast<std::size_t>(degree - c.lo);
  std::size_t dim = c.terms.at(i).dim();
  std::size_t out = i < c.maps.size() ? rank(c.maps[i]) : 0;
  std::size_t in = i > 0 ? rank(c.maps[i - 1]) : 0;
  return dim - out - in;
}

bool exact_inside(ChainComplex const& c) {
  for (int d = c.lo + 1; d < c.hi(); ++d) {
    if (homology_dim(c, d) != 0) return false;
  }
  return true;
}

ProjectiveResolution projective_resolution(Module const& x, std::size_t max_terms) {
  auto p = x.prime();
  ProjectiveResolution res{x, {}, {}, Mat(p, x.dim(), 0), false};
  Module current = x;
  Mat into_previous = Mat::identity(p, x.dim());
  while (res.terms.size() < max_terms) {
    if (current.dim() == 0) {
      res.finite = true;
      break;
    }
    Module term = current;
    Mat onto = Mat::identity(p, current.dim());
    bool last = is_projective(current);
    if (!last) {
      auto cover = free_cover(current);
      term = cover.free;
      onto = cover.surjection;
    }
    Mat to_previous = into_previous * onto;
    if (res.terms.empty()) {
      res.augmentation = to_previous;
    } else {
      res.maps.push_back(to_previous);
    }
    res.terms.push_back(term);
    if (last) {
      res.finite = true;
      break;
    }
    auto k = kernel_module(term, onto);
    current = k.module;
    into_previous = k.inclusion;
  }
  if (!res.finite && current.dim() == 0) res.finite = true;
  return res;
}

InjectiveCoresolution injective_coresolution(Module const& x, std::size_t max_terms) {
  auto res = projective_resolution(dual_module(x), max_terms);
  InjectiveCoresolution out{x, {}, {}, res.augmentation.transpose(), res.finite};
  for (auto const& t : res.terms) out.terms.push_back(dual_module(t));
  for (auto const& m : res.maps) out.maps.push_back(m.transpose());
  return out;
}

std::optional<std::size_t> injective_dimension(Module const& x, std::size_t cutoff) {
  if (x.dim() == 0) return 0;
  auto res = projective_resolution(dual_module(x), cutoff + 1);
  if (!res.finite) return std::nullopt;
  return res.length();
}

ChainComplex complete_resolution_window(Module const& x, std::size_t w) {
  if (w == 0) throw ValidationError("window width must be positive");
  auto p = x.prime();
  auto alg = x.algebra();
  auto left = projective_resolution(x, w);
  // A projective module splices with itself: ... 0 -> x = x -> 0 ...
  auto right = is_projective(x)
                   ? InjectiveCoresolution{x, {x}, {}, Mat::identity(p, x.dim()), true}
                   : injective_coresolution(x, w);
  for (std::size_t k = 0; k < right.terms.size(); ++k) {
    if (!is_projective(right.terms[k])) {
      throw WindowError("no projective coresolution within window: coresolution term " +
                        std::to_string(k) + " of " + x.describe() + " is not projective");
    }
  }
  auto zero = Module::zero(alg, x.side());
  auto term_at = [&](int degree) -> Module const& {
    if (degree < 0) {
      auto k = static_cast<std::size_t>(-degree - 1);
      return k < left.terms.size() ? left.terms[k] : zero;
    }
    auto k = static_cast<std::size_t>(degree);
    return k < right.terms.size() ? right.terms[k] : zero;
  };
  int lo = -static_cast<int>(w);
  int hi = static_cast<int>(w) - 1;
  ChainComplex c;
  c.lo = lo;
  for (int d = lo; d <= hi; ++d) c.terms.push_back(term_at(d));
  for (int d = lo; d < hi; ++d) {
    auto const& src = term_at(d);
    auto const& dst = term_at(d + 1);
    Mat m = zero_map(p, src, dst);
    if (d < -1) {
      auto k = static_cast<std::size_t>(-d - 1);  // P_k -> P_(k-1)
      if (k - 1 < left.maps.size() && src.dim() > 0) m = left.maps[k - 1];
    } else if (d == -1) {
      if (!left.terms.empty() && !right.terms.empty()) {
        m = right.coaugmentation * left.augmentation;
      }
    } else {
      auto k = static_cast<std::size_t>(d);
      if (k < right.maps.size()) m = right.maps[k];
    }
    c.maps.push_back(std::move(m));
  }
  return c;
}

HomComplex hom_complex(ChainComplex const& c, Module const& test) {
  HomComplex h;
  auto n = c.terms.size();
  std::vector<std::size_t> ranks(c.maps.size());
  for (std::size_t i = 0; i < n; ++i) h.dims.push_back(hom_dim(c.terms[i], test));
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    ranks[i] = pullback_rank(c.terms[i], c.terms[i + 1], c.maps[i], test);
  }
  h.homology.assign(n, 0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    h.homology[i] = h.dims[i] - ranks[i - 1] - ranks[i];
    if (h.homology[i] != 0 && h.exact) {
      h.exact = false;
      h.first_nonexact = c.lo + static_cast<int>(i);
    }
  }
  return h;
}

WindowVerdict window_check(ChainComplex const& c, Module const& x,
                           std::vector<NamedModule> const& tests, std::size_t w,
                           std::string check_name) {
  WindowVerdict v;
  v.window = w;
  auto& r = v.report;
  r.check = std::move(check_name);
  r.parameters["window"] = static_cast<long long>(w);
  r.parameters["test_modules"] = static_cast<long long>(tests.size());
  r.absorb(validate_complex(c), "complex: ");

  v.complex_exact = exact_inside(c);
  std::string dims;
  for (auto const& t : c.terms) dims += (dims.empty() ? "" : " ") + std::to_string(t.dim());
  r.add("complex exact inside the window", v.complex_exact, "term dimensions " + dims);

  auto k = kernel_module(c.term(0), c.map(0));
  v.kernel_matches = find_isomorphism(k.module, x).has_value();
  r.add("kernel of d0 is the module", v.kernel_matches, x.describe());

  v.hom = parallel_map(tests.size(), [&](std::size_t i) { return hom_complex(c, tests[i].module); });
  bool all_exact = true;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    auto const& h = v.hom[i];
    std::string seq;
    for (auto d : h.dims) seq += (seq.empty() ? "" : " ") + std::to_string(d);
    if (!h.exact) {
      auto pos = h.first_nonexact;
      auto hd = h.homology[static_cast<std::size_t>(pos - c.lo)];
      if (all_exact) {
        v.witness = WindowWitness{pos, tests[i].name, hd};
        r.witness("Hom(P, " + tests[i].name + ") has homology of dimension " +
                  std::to_string(hd) + " at degree " + std::to_string(pos));
      }
      all_exact = false;
    }
    r.add("Hom into " + tests[i].name + " exact", h.exact, "Hom dimensions " + seq);
  }
  v.consistent = v.complex_exact && v.kernel_matches && all_exact;
  r.add("window truncation", Verdict::consistent_up_to_bound,
        "degrees " + std::to_string(c.lo) + " to " + std::to_string(c.hi()) +
            "; a consistent verdict is not a proof");
  r.finalize();
  return v;
}

WindowVerdict is_gorenstein_projective_window(Module const& x, ClassOracle const& test_class,
                                              std::size_t w, std::size_t test_bound) {
  auto c = complete_resolution_window(x, w);
  auto v = window_check(c, x, named(test_class.sample(test_bound), test_class.name), w,
                        "Gorenstein projective window for " + x.describe() + " against " +
                            test_class.name);
  bool projective_terms = true;
  for (auto const& t : c.terms) projective_terms &= is_projective(t);
  v.report.add("terms projective", projective_terms);
  v.report.parameters["test_bound"] = static_cast<long long>(test_bound);
  v.report.finalize();
  v.consistent &= projective_terms;
  return v;
}

WindowVerdict is_ding_projective_window(Module const& x, std::size_t w, std::size_t test_bound) {
  auto v = is_gorenstein_projective_window(
      x, builtin_oracle(x.algebra(), x.side(), BuiltinClass::flat), w, test_bound);
  v.report.check = "Ding projective window for " + x.describe();
  return v;
}

// ---------------------------------------------------------------------------
// Transport

DeltaComplex transport(ContextPtr const& ctx, Corner corner, ChainComplex const& c) {
  DeltaComplex out;
  out.lo = c.lo;
  for (auto const& t : c.terms) out.terms.push_back(t_of(ctx, corner, t));
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    auto m = ModuleMap::make(c.terms[i], c.terms[i + 1], c.maps[i]);
    out.maps.push_back(corner == Corner::a ? t_a_map(ctx, m) : t_b_map(ctx, m));
  }
  return out;
}

ChainComplex restrict_to_corner(DeltaComplex const& c, Corner corner) {
  ChainComplex out;
  out.lo = c.lo;
  for (auto const& t : c.terms) out.terms.push_back(u_of(t, corner));
  for (auto const& m : c.maps) out.maps.push_back(corner == Corner::a ? m.a : m.b);
  return out;
}

ChainComplex packed(DeltaComplex const& c) {
  ChainComplex out;
  out.lo = c.lo;
  for (auto const& t : c.terms) out.terms.push_back(pack(t));
  for (auto const& m : c.maps) out.maps.push_back(m.packed());
  return out;
}

std::vector<DeltaModule> monic_test_tuples(ContextPtr const& ctx, ComponentClasses const& cc,
                                           std::size_t bound) {
  std::vector<DeltaModule> out;
  auto cs = cc.c1.sample(bound);
  auto ds = cc.d1.sample(bound);
  for (auto const& c : cs) out.push_back(t_a(ctx, c));
  for (auto const& d : ds) out.push_back(t_b(ctx, d));
  for (auto const& c : cs) {
    for (auto const& d : ds) {
      if (c.dim() > 0 && d.dim() > 0) out.push_back(delta_direct_sum(t_a(ctx, c), t_b(ctx, d)));
    }
  }
  for (auto const& dm : enumerate_delta_modules(ctx, bound)) {
    if (in_monic_class(dm, cc.c1, cc.d1)) out.push_back(dm);
  }
  return out;
}

namespace {

// Terms projective over Delta by both routes.
void projective_terms_clause(CheckReport& r, DeltaComplex const& c) {
  bool ok = true;
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    auto v = is_projective_delta(c.terms[i]);
    if (!v.agree()) {
      throw ConsistencyError("projectivity routes disagree on " + c.terms[i].describe());
    }
    if (!v.packed && ok) {
      r.witness("term at degree " + std::to_string(c.lo + static_cast<int>(i)) +
                " is not projective: " + c.terms[i].describe());
      ok = false;
    }
  }
  r.add("terms projective over Delta", ok);
}

std::vector<NamedModule> packed_tests(std::vector<DeltaModule> const& tuples,
                                      std::string const& prefix) {
  std::vector<NamedModule> out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    out.push_back({prefix + " #" + std::to_string(i) + " " + tuples[i].describe(),
                   pack(tuples[i])});
  }
  return out;
}

// Hom_Delta(T P, V) against Hom(P, U V), level by level.
void adjunction_clause(CheckReport& r, WindowVerdict const& delta_side, ChainComplex const& base,
                       std::vector<DeltaModule> const& tests, Corner corner) {
  auto base_side = parallel_map(tests.size(), [&](std::size_t i) {
    return hom_complex(base, u_of(tests[i], corner));
  });
  std::size_t bad = 0, levels = 0;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    auto const& h = delta_side.hom[i];
    levels += h.dims.size();
    if (h.dims != base_side[i].dims || h.homology != base_side[i].homology) {
      if (bad++ == 0) {
        r.witness("Hom dimensions differ across the adjunction for " + tests[i].describe());
      }
    }
  }
  r.parameters["adjunction_levels_compared"] = static_cast<long long>(levels);
  r.add("Hom over Delta matches Hom over " + corner_name(corner) + " at every level", bad == 0,
        std::to_string(tests.size()) + " test modules");
}

}  // namespace

TransferResult check_gorenstein_transfer_forward(ContextPtr const& ctx, Corner corner,
                                                 Module const& x, ComponentClasses const& cc,
                                                 std::size_t w, std::size_t bound) {
  TransferResult out;
  auto& r = out.report;
  r.check = "Gorenstein projectivity carried by T_" + corner_name(corner) + " over " + ctx->name();
  r.parameters["window"] = static_cast<long long>(w);
  r.parameters["bound"] = static_cast<long long>(bound);
  if (!same_algebra(x.algebra(), corner_algebra(ctx, corner)) || x.side() != Side::left) {
    throw MismatchError("module must be a left module over the " + corner_name(corner) + " corner");
  }

  r.hypothesis("N and M finitely generated projective as right modules", right_projective(ctx));
  auto const& other_first = corner == Corner::a ? cc.d1 : cc.c1;
  auto const& this_first = corner_first(cc, corner);
  bool crossing_ok = true;
  for (auto const& s : other_first.sample(bound)) {
    auto t = tensor_over_algebra(crossing(ctx, corner == Corner::a ? Corner::b : Corner::a), s);
    if (!this_first.contains(t.module)) {
      r.witness("tensor of " + s.describe() + " leaves " + this_first.name);
      crossing_ok = false;
      break;
    }
  }
  r.hypothesis(std::string(corner == Corner::a ? "N" : "M") + " tensor " + other_first.name +
                   " lies in " + this_first.name + " on samples",
               crossing_ok);

  auto base = is_gorenstein_projective_window(x, this_first, w, bound);
  r.absorb(base.report, corner_name(corner) + " side: ", true);
  r.hypothesis("module is window-consistent Gorenstein projective over " + corner_name(corner),
               base.consistent);

  auto complex = complete_resolution_window(x, w);
  auto delta = transport(ctx, corner, complex);
  auto image = t_of(ctx, corner, x);
  projective_terms_clause(r, delta);

  auto tests = monic_test_tuples(ctx, cc, bound);
  bool members = true;
  for (auto const& t : tests) members &= in_monic_class(t, cc.c1, cc.d1);
  r.add("test modules lie in the monic class", members,
        std::to_string(tests.size()) + " test modules");

  auto dv = window_check(packed(delta), pack(image), packed_tests(tests, "tuple"), w,
                         "transported window");
  r.absorb(dv.report, "Delta side: ");
  adjunction_clause(r, dv, complex, tests, corner);
  r.finalize();
  out.complex = std::move(delta);
  out.image = std::move(image);
  return out;
}

CheckReport check_gorenstein_transfer_backward(ContextPtr const& ctx, Corner corner,
                                               DeltaComplex const& c, DeltaModule const& dm,
                                               ComponentClasses const& cc, std::size_t w,
                                               std::size_t bound, std::size_t cutoff) {
  CheckReport r;
  r.check = "Gorenstein projectivity recovered by U_" + corner_name(corner) + " over " + ctx->name();
  r.parameters["window"] = static_cast<long long>(w);
  r.parameters["bound"] = static_cast<long long>(bound);
  r.parameters["injective_dimension_cutoff"] = static_cast<long long>(cutoff);

  r.hypothesis("N and M projective as left modules",
               is_projective(ctx->n().as_left()) && is_projective(ctx->m().as_left()));
  auto const& this_first = corner_first(cc, corner);
  auto const& other_first = corner == Corner::a ? cc.d1 : cc.c1;
  bool crossing_ok = true, finite_id = true;
  std::size_t worst = 0;
  for (auto const& s : this_first.sample(bound)) {
    auto t = tensor_over_algebra(crossing(ctx, corner), s);
    if (crossing_ok && !other_first.contains(t.module)) {
      r.witness("tensor of " + s.describe() + " leaves " + other_first.name);
      crossing_ok = false;
    }
    auto id = injective_dimension(hom_across(ctx, corner, s), cutoff);
    if (!id) {
      if (finite_id) r.witness("Hom into " + s.describe() + " exceeds the injective dimension cutoff");
      finite_id = false;
    } else {
      worst = std::max(worst, *id);
    }
  }
  r.parameters["largest_injective_dimension"] = static_cast<long long>(worst);
  r.hypothesis(std::string(corner == Corner::a ? "M" : "N") + " tensor " + this_first.name +
                   " lies in " + other_first.name + " on samples",
               crossing_ok);
  r.hypothesis("injective dimension over " + other_name(corner) + " of Hom from " +
                   (corner == Corner::a ? "N" : "M") + " is at most " + std::to_string(cutoff) +
                   " on samples",
               finite_id);

  auto tests = monic_test_tuples(ctx, cc, bound);
  auto premise = window_check(packed(c), pack(dm), packed_tests(tests, "tuple"), w,
                              "Delta window");
  bool projective = true;
  for (auto const& t : c.terms) projective &= is_projective_delta(t).packed;
  r.absorb(premise.report, "Delta side: ", true);
  r.hypothesis("tuple is window-consistent Gorenstein projective over Delta",
               premise.consistent && projective);

  auto base = restrict_to_corner(c, corner);
  bool base_projective = true;
  for (auto const& t : base.terms) base_projective &= is_projective(t);
  r.add("restricted terms projective over " + corner_name(corner), base_projective);
  auto v = window_check(base, u_of(dm, corner), named(this_first.sample(bound), this_first.name), w,
                        "restricted window");
  r.absorb(v.report, corner_name(corner) + " side: ");
  r.finalize();
  return r;
}

CheckReport check_ding_transfer(ContextPtr const& ctx, Corner corner, Module const& x,
                                std::size_t w, std::size_t bound) {
  CheckReport r;
  r.check = "Ding projectivity carried by T_" + corner_name(corner) + " over " + ctx->name();
  r.parameters["window"] = static_cast<long long>(w);
  r.parameters["bound"] = static_cast<long long>(bound);
  auto cc = flat_fp_injective_classes(ctx);
  r.hypothesis("N and M finitely generated projective as right modules", right_projective(ctx));
  auto const& this_first = corner_first(cc, corner);
  auto const& other_first = corner == Corner::a ? cc.d1 : cc.c1;
  bool crossing_ok = true;
  for (auto const& s : other_first.sample(bound)) {
    auto t = tensor_over_algebra(crossing(ctx, corner == Corner::a ? Corner::b : Corner::a), s);
    crossing_ok &= this_first.contains(t.module);
  }
  r.hypothesis(std::string(corner == Corner::a ? "N" : "M") + " tensor flat is flat on samples",
               crossing_ok);

  auto base = is_ding_projective_window(x, w, bound);
  r.absorb(base.report, corner_name(corner) + " side: ", true);
  r.hypothesis("module is window-consistent Ding projective over " + corner_name(corner),
               base.consistent);

  auto complex = complete_resolution_window(x, w);
  auto delta = transport(ctx, corner, complex);
  projective_terms_clause(r, delta);

  std::vector<DeltaModule> flats;
  std::size_t structural_agree = 0;
  for (auto const& dm : enumerate_delta_modules(ctx, bound)) {
    bool packed_flat = is_flat(pack(dm));
    if (!packed_flat) continue;
    structural_agree += is_flat_structural(dm);
    flats.push_back(dm);
  }
  r.parameters["flat_test_tuples"] = static_cast<long long>(flats.size());
  r.add("every flat test tuple meets the structural flatness criterion",
        structural_agree == flats.size(),
        std::to_string(structural_agree) + " of " + std::to_string(flats.size()));

  auto dv = window_check(packed(delta), pack(t_of(ctx, corner, x)), packed_tests(flats, "flat"),
                         w, "Ding window over Delta");
  r.absorb(dv.report, "Delta side: ");
  r.parameters["ding_consistent"] = dv.consistent;
  adjunction_clause(r, dv, complex, flats, corner);
  r.finalize();
  return r;
}

}  // namespace morita
