#include "morita/classes.hpp"

#include <algorithm>
#include <array>

#include "morita/errors.hpp"
#include "morita/parallel.hpp"

namespace morita {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Unipotent upper bidiagonal change of basis.
Mat shear(std::uint32_t p, std::size_t n) {
  Mat s = Mat::identity(p, n);
  for (std::size_t i = 0; i + 1 < n; ++i) s(i, i + 1) = 1;
  return s;
}

Module conjugate(Module const& m) {
  auto s = shear(m.prime(), m.dim());
  auto s_inv = *inverse(s);
  std::vector<Mat> acts;
  for (auto const& a : m.actions()) acts.push_back(s * a * s_inv);
  return Module(Module::Trusted{}, m.algebra(), m.side(), m.dim(), std::move(acts));
}

ContextPtr view_of(ContextPtr const& ctx, Side side) {
  return side == Side::left ? ctx : ctx->opposite();
}

DeltaModule conjugate(DeltaModule const& dm) {
  auto view = dm.view();
  return rehome(unpack(view, conjugate(pack_view(dm))).tuple, dm.home(), dm.side());
}

DeltaModule regular_tuple(ContextPtr const& ctx, Side side) {
  auto view = view_of(ctx, side);
  return rehome(unpack(view, Module::regular(view->delta())).tuple, ctx, side);
}

Module regular_module(AlgebraPtr const& alg, Side side) { return Module::regular(alg, side); }

std::string describe(Module const& m) { return m.describe(); }
std::string describe(DeltaModule const& dm) { return dm.describe(); }

Module sum_of(Module const& a, Module const& b) { return direct_sum_module(a, b); }
DeltaModule sum_of(DeltaModule const& a, DeltaModule const& b) { return delta_direct_sum(a, b); }

Module dual_of(Module const& m) { return dual_module(m); }
DeltaModule dual_of(DeltaModule const& dm) { return delta_dual(dm); }

template <class T>
std::vector<bool> memberships(std::vector<T> const& items, std::function<bool(T const&)> const& in) {
  auto flags = parallel_map(items.size(), [&](std::size_t i) { return in(items[i]) ? 1 : 0; });
  return std::vector<bool>(flags.begin(), flags.end());
}

// X in first <=> X+ in second, over every enumerated X.
template <class T>
void dual_membership_clause(CheckReport& r, std::string const& name, std::vector<T> const& firsts,
                            std::function<bool(T const&)> const& in_first,
                            std::function<bool(T const&)> const& in_second) {
  auto mismatch = parallel_map(firsts.size(), [&](std::size_t i) -> int {
    bool a = in_first(firsts[i]);
    bool b = in_second(dual_of(firsts[i]));
    return a == b ? 0 : (a ? 1 : 2);
  });
  std::size_t bad = 0;
  for (std::size_t i = 0; i < firsts.size(); ++i) {
    if (!mismatch[i]) continue;
    if (bad++ == 0) {
      r.witness(describe(firsts[i]) + " is " + (mismatch[i] == 1 ? "" : "not ") +
                "in the first class but its character module is " +
                (mismatch[i] == 1 ? "not " : "") + "in the second");
    }
  }
  r.add(name, bad == 0,
        std::to_string(firsts.size()) + " checked, " + std::to_string(bad) + " mismatches");
}

// Sum of two samples lies in the class exactly when both summands do. Covers
// finite sums and summands of those sums.
template <class T>
void sum_closure_clause(CheckReport& r, std::string const& name, std::vector<T> const& items,
                        std::function<bool(T const&)> const& in) {
  auto flags = memberships(items, in);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i; j < items.size(); ++j) pairs.emplace_back(i, j);
  }
  auto bad_flags = parallel_map(pairs.size(), [&](std::size_t k) -> int {
    auto [i, j] = pairs[k];
    return in(sum_of(items[i], items[j])) != (flags[i] && flags[j]) ? 1 : 0;
  });
  std::size_t bad = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!bad_flags[k]) continue;
    if (bad++ == 0) {
      auto [i, j] = pairs[k];
      r.witness("sum of " + describe(items[i]) + " and " + describe(items[j]) +
                (flags[i] && flags[j] ? " leaves the class" : " lies in the class"));
    }
  }
  r.add(name, bad == 0,
        std::to_string(pairs.size()) + " pairs checked, " + std::to_string(bad) + " failures");
}

template <class T>
void iso_closure_clause(CheckReport& r, std::string const& name, std::vector<T> const& items,
                        std::function<bool(T const&)> const& in) {
  auto bad_flags = parallel_map(items.size(), [&](std::size_t i) -> int {
    return in(items[i]) != in(conjugate(items[i])) ? 1 : 0;
  });
  std::size_t bad = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (bad_flags[i] && bad++ == 0) {
      r.witness(describe(items[i]) + " changes membership under a change of basis");
    }
  }
  r.add(name, bad == 0, std::to_string(items.size()) + " checked");
}

void infinite_note(CheckReport& r, std::size_t bound) {
  r.note("closed under arbitrary direct sums and products",
         "sampled only through finite sums of modules up to dimension " + std::to_string(bound));
}

// Regular module, finite sums and extensions for a class.
template <class T>
void perfect_clauses(CheckReport& r, T const& regular, std::vector<T> const& items,
                     std::vector<std::array<T const*, 3>> const& ses,
                     std::function<bool(T const&)> const& in, std::size_t bound) {
  bool has_regular = in(regular);
  if (!has_regular) r.witness("regular module " + describe(regular) + " is not in the class");
  r.add("contains the regular module", has_regular);

  auto flags = memberships(items, in);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i; j < items.size(); ++j) {
      if (flags[i] && flags[j]) pairs.emplace_back(i, j);
    }
  }
  auto sum_bad = parallel_map(pairs.size(), [&](std::size_t k) -> int {
    return in(sum_of(items[pairs[k].first], items[pairs[k].second])) ? 0 : 1;
  });
  std::size_t bad = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (sum_bad[k] && bad++ == 0) {
      r.witness("sum of members " + describe(items[pairs[k].first]) + " and " +
                describe(items[pairs[k].second]) + " is not a member");
    }
  }
  r.add("closed under finite direct sums", bad == 0,
        std::to_string(pairs.size()) + " pairs of members checked");

  auto ext_bad = parallel_map(ses.size(), [&](std::size_t k) -> int {
    auto const& s = ses[k];
    if (!in(*s[0]) || !in(*s[2])) return -1;
    return in(*s[1]) ? 0 : 1;
  });
  std::size_t relevant = 0;
  bad = 0;
  for (std::size_t k = 0; k < ses.size(); ++k) {
    if (ext_bad[k] < 0) continue;
    ++relevant;
    if (ext_bad[k] && bad++ == 0) {
      r.witness("extension " + describe(*ses[k][1]) + " of members " + describe(*ses[k][0]) +
                " and " + describe(*ses[k][2]) + " is not a member");
    }
  }
  r.add("closed under extensions", bad == 0,
        std::to_string(relevant) + " sequences with outer terms in the class, of " +
            std::to_string(ses.size()));
  r.note("closed under arbitrary direct sums",
         "sampled only through finite sums up to dimension " + std::to_string(bound));
}

std::function<bool(Module const&)> in_oracle(ClassOracle const& o) {
  return [o](Module const& m) { return o.contains(m); };
}

std::function<bool(DeltaModule const&)> in_spec(DeltaClassSpec const& s) {
  return [s](DeltaModule const& dm) { return s.contains(dm); };
}

DeltaClassSpec spec_of(DeltaClass kind, ClassOracle c, ClassOracle d) {
  return DeltaClassSpec{kind, std::move(c), std::move(d)};
}

void require_opposite_sides(Side a, Side b) {
  if (a == b) throw MismatchError("the two classes of a duality pair must sit on opposite sides");
}

bool both_pass(CheckReport const& a, CheckReport const& b) { return a.passed() && b.passed(); }

void equivalence(CheckReport& r, std::string const& name, bool lhs, bool rhs,
                 std::string const& lhs_name, std::string const& rhs_name) {
  r.add(name, lhs == rhs, lhs_name + ": " + yes_no(lhs) + ", " + rhs_name + ": " + yes_no(rhs));
}

}  // namespace

// ---------------------------------------------------------------------------
// Oracles

bool ClassOracle::contains(Module const& m) const {
  if (m.side() == side && same_algebra(m.algebra(), algebra)) return member(m);
  if (m.side() == flip(side) && same_algebra(m.algebra(), algebra->opposite())) {
    return member(m.reinterpret_opposite());
  }
  throw MismatchError("class " + name + " cannot test a " + to_string(m.side()) + " module over " +
                      m.algebra()->name());
}

std::vector<Module> ClassOracle::sample(std::size_t bound) const {
  if (sampler) return sampler(bound);
  std::vector<Module> out;
  for (auto const& m : enumerate_modules(algebra, bound, side)) {
    if (member(m)) out.push_back(m);
  }
  return out;
}

std::optional<BuiltinClass> parse_builtin_class(std::string const& name) {
  if (name == "projective") return BuiltinClass::projective;
  if (name == "injective") return BuiltinClass::injective;
  if (name == "flat") return BuiltinClass::flat;
  if (name == "fp-injective") return BuiltinClass::fp_injective;
  if (name == "all") return BuiltinClass::all;
  return std::nullopt;
}

std::string to_string(BuiltinClass c) {
  switch (c) {
    case BuiltinClass::projective: return "projective";
    case BuiltinClass::injective: return "injective";
    case BuiltinClass::flat: return "flat";
    case BuiltinClass::fp_injective: return "fp-injective";
    case BuiltinClass::all: return "all";
  }
  return "?";
}

ClassOracle builtin_oracle(AlgebraPtr algebra, Side side, BuiltinClass kind) {
  ClassOracle o;
  o.name = to_string(kind) + " " + to_string(side) + " " + algebra->name();
  o.algebra = std::move(algebra);
  o.side = side;
  switch (kind) {
    case BuiltinClass::projective: o.member = [](Module const& m) { return is_projective(m); }; break;
    case BuiltinClass::flat: o.member = [](Module const& m) { return is_flat(m); }; break;
    case BuiltinClass::injective:
    case BuiltinClass::fp_injective: o.member = [](Module const& m) { return is_injective(m); }; break;
    case BuiltinClass::all: o.member = [](Module const&) { return true; }; break;
  }
  return o;
}

std::vector<ClassOracle> builtin_oracles(AlgebraPtr const& algebra, Side side) {
  std::vector<ClassOracle> out;
  for (auto k : {BuiltinClass::projective, BuiltinClass::injective, BuiltinClass::flat,
                 BuiltinClass::fp_injective, BuiltinClass::all}) {
    out.push_back(builtin_oracle(algebra, side, k));
  }
  return out;
}

ClassOracle list_oracle(std::string name, AlgebraPtr algebra, Side side,
                        std::vector<Module> members) {
  for (auto const& m : members) {
    if (m.side() != side || !same_algebra(m.algebra(), algebra)) {
      throw MismatchError("listed module of class " + name + " sits over the wrong algebra or side");
    }
  }
  ClassOracle o;
  o.name = std::move(name);
  o.algebra = algebra;
  o.side = side;
  auto shared = std::make_shared<std::vector<Module>>(std::move(members));
  o.member = [shared](Module const& m) {
    if (m.dim() == 0) return true;
    return std::any_of(shared->begin(), shared->end(),
                       [&](Module const& x) { return find_isomorphism(x, m).has_value(); });
  };
  o.sampler = [shared, algebra, side](std::size_t bound) {
    std::vector<Module> out{Module::zero(algebra, side)};
    for (auto const& m : *shared) {
      if (m.dim() > 0 && m.dim() <= bound) out.push_back(m);
    }
    return out;
  };
  return o;
}

CheckReport check_oracle(ClassOracle const& oracle, std::size_t bound) {
  CheckReport r;
  r.check = "class oracle " + oracle.name;
  r.parameters["bound"] = static_cast<long long>(bound);
  r.add("contains the zero module", oracle.contains(Module::zero(oracle.algebra, oracle.side)));
  iso_closure_clause<Module>(r, "closed under isomorphism",
                             enumerate_modules(oracle.algebra, bound, oracle.side),
                             in_oracle(oracle));
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// Classes of tuples

std::string to_string(DeltaClass k) {
  switch (k) {
    case DeltaClass::componentwise: return "componentwise";
    case DeltaClass::monic: return "monic";
    case DeltaClass::epic: return "epic";
  }
  return "?";
}

std::optional<DeltaClass> parse_delta_class(std::string const& letter) {
  if (letter == "A" || letter == "componentwise") return DeltaClass::componentwise;
  if (letter == "B" || letter == "monic") return DeltaClass::monic;
  if (letter == "J" || letter == "epic") return DeltaClass::epic;
  return std::nullopt;
}

bool in_componentwise_class(DeltaModule const& dm, ClassOracle const& c, ClassOracle const& d) {
  return c.contains(dm.x()) && d.contains(dm.y());
}

bool in_monic_class(DeltaModule const& dm, ClassOracle const& c, ClassOracle const& d) {
  if (!is_injective_map(dm.f()) || !is_injective_map(dm.g())) return false;
  return c.contains(cokernel_of_g(dm).module) && d.contains(cokernel_of_f(dm).module);
}

bool in_epic_class(DeltaModule const& dm, ClassOracle const& c, ClassOracle const& d) {
  if (!is_surjective_map(tilde_f(dm).matrix) || !is_surjective_map(tilde_g(dm).matrix)) {
    return false;
  }
  return c.contains(kernel_of_tilde_f(dm).module) && d.contains(kernel_of_tilde_g(dm).module);
}

bool in_delta_class(DeltaClass kind, DeltaModule const& dm, ClassOracle const& c,
                    ClassOracle const& d) {
  if (c.side != dm.side() || d.side != dm.side()) {
    throw MismatchError("component classes sit on the " + to_string(c.side) + " side but the tuple is a " +
                        to_string(dm.side()) + " tuple");
  }
  switch (kind) {
    case DeltaClass::componentwise: return in_componentwise_class(dm, c, d);
    case DeltaClass::monic: return in_monic_class(dm, c, d);
    case DeltaClass::epic: return in_epic_class(dm, c, d);
  }
  return false;
}

std::string DeltaClassSpec::describe() const {
  return to_string(kind) + "(" + c.name + "; " + d.name + ")";
}

// ---------------------------------------------------------------------------
// Duality pairs of modules

CheckReport verify_duality_pair(DualityPairSpec const& spec) {
  require_opposite_sides(spec.first.side, spec.second.side);
  CheckReport r;
  r.check = "duality pair (" + spec.first.name + ", " + spec.second.name + ")";
  r.parameters["bound"] = static_cast<long long>(spec.bound);
  auto firsts = enumerate_modules(spec.first.algebra, spec.bound, spec.first.side);
  auto seconds = enumerate_modules(spec.second.algebra, spec.bound, spec.second.side);
  r.parameters["first_side_modules"] = static_cast<long long>(firsts.size());
  auto in_first = in_oracle(spec.first);
  auto in_second = in_oracle(spec.second);
  r.add("first class contains zero", in_first(Module::zero(spec.first.algebra, spec.first.side)));
  r.add("second class contains zero",
        in_second(Module::zero(spec.second.algebra, spec.second.side)));
  iso_closure_clause<Module>(r, "first class closed under isomorphism", firsts, in_first);
  iso_closure_clause<Module>(r, "second class closed under isomorphism", seconds, in_second);
  dual_membership_clause<Module>(r, "membership matches on character modules", firsts, in_first,
                                 in_second);
  sum_closure_clause<Module>(r, "second class closed under finite sums and summands", seconds,
                             in_second);
  infinite_note(r, spec.bound);
  r.finalize();
  return r;
}

CheckReport check_symmetric(DualityPairSpec const& spec) {
  CheckReport r;
  r.check = "symmetric duality pair (" + spec.first.name + ", " + spec.second.name + ")";
  r.absorb(verify_duality_pair(spec), "forward: ");
  r.absorb(verify_duality_pair({spec.second, spec.first, spec.bound}), "reverse: ");
  r.finalize();
  return r;
}

CheckReport check_perfect_pair(DualityPairSpec const& spec) {
  CheckReport r;
  r.check = "perfect duality pair (" + spec.first.name + ", " + spec.second.name + ")";
  r.absorb(verify_duality_pair(spec), "duality: ");
  auto items = enumerate_modules(spec.first.algebra, spec.bound, spec.first.side);
  auto seqs = enumerate_short_exact_sequences(spec.first.algebra, spec.bound, spec.first.side);
  std::vector<std::array<Module const*, 3>> ses;
  for (auto const& s : seqs) ses.push_back({&s.sub, &s.middle, &s.quotient});
  CheckReport p;
  perfect_clauses<Module>(p, regular_module(spec.first.algebra, spec.first.side), items, ses,
                          in_oracle(spec.first), spec.bound);
  r.absorb(p, "perfect: ");
  r.finalize();
  return r;
}

CheckReport check_complete(DualityPairSpec const& spec) {
  CheckReport r;
  r.check = "complete duality pair (" + spec.first.name + ", " + spec.second.name + ")";
  r.absorb(check_symmetric(spec), "symmetric: ");
  r.absorb(check_perfect_pair(spec), "perfect: ");
  r.finalize();
  return r;
}

CheckReport check_uniqueness(ClassOracle const& first, ClassOracle const& second_a,
                             ClassOracle const& second_b, std::size_t bound) {
  if (second_a.side != second_b.side || !same_algebra(second_a.algebra, second_b.algebra)) {
    throw MismatchError("candidate second halves sit over different algebras or sides");
  }
  CheckReport r;
  r.check = "uniqueness of the second half (" + second_a.name + " vs " + second_b.name + ")";
  r.parameters["bound"] = static_cast<long long>(bound);
  r.absorb(check_complete({first, second_a, bound}), "first pair complete: ", true);
  r.absorb(check_complete({first, second_b, bound}), "second pair complete: ", true);
  auto items = enumerate_modules(second_a.algebra, bound, second_a.side);
  auto bad_flags = parallel_map(items.size(), [&](std::size_t i) -> int {
    return second_a.contains(items[i]) != second_b.contains(items[i]) ? 1 : 0;
  });
  std::size_t bad = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (bad_flags[i] && bad++ == 0) {
      r.witness(items[i].describe() + " lies in exactly one of the candidate classes");
    }
  }
  r.add("candidate classes agree", bad == 0,
        std::to_string(items.size()) + " checked, " + std::to_string(bad) + " disagreements");
  r.finalize();
  return r;
}

std::size_t tor1_dim(Bimodule const& m, Module const& x) {
  if (!same_algebra(m.right_algebra(), x.algebra()) || x.side() != Side::left) {
    throw MismatchError("Tor_1 needs a left module over the bimodule's right algebra");
  }
  if (x.dim() == 0) return 0;
  auto cover = free_cover(x);
  auto syzygy = kernel_module(cover.free, cover.surjection);
  auto mk = tensor_over_algebra(m, syzygy.module);
  auto mf = tensor_over_algebra(m, cover.free);
  return mk.dim() - rank(tensor_map(m, mk, mf, syzygy.inclusion));
}

// ---------------------------------------------------------------------------
// Duality pairs of tuples

CheckReport verify_delta_duality_pair(DeltaPairSpec const& spec) {
  require_opposite_sides(spec.first.side(), spec.second.side());
  CheckReport r;
  r.check = "duality pair (" + spec.first.describe() + ", " + spec.second.describe() + ") over " +
            spec.ctx->name();
  r.parameters["bound"] = static_cast<long long>(spec.bound);
  auto firsts = enumerate_delta_modules(spec.ctx, spec.bound, spec.first.side());
  auto seconds = enumerate_delta_modules(spec.ctx, spec.bound, spec.second.side());
  r.parameters["first_side_tuples"] = static_cast<long long>(firsts.size());
  r.parameters["second_side_tuples"] = static_cast<long long>(seconds.size());
  auto in_first = in_spec(spec.first);
  auto in_second = in_spec(spec.second);
  r.add("first class contains zero", in_first(DeltaModule::zero(spec.ctx, spec.first.side())));
  r.add("second class contains zero", in_second(DeltaModule::zero(spec.ctx, spec.second.side())));
  iso_closure_clause<DeltaModule>(r, "first class closed under isomorphism", firsts, in_first);
  iso_closure_clause<DeltaModule>(r, "second class closed under isomorphism", seconds, in_second);
  sum_closure_clause<DeltaModule>(r, "first class closed under finite sums and summands", firsts,
                                  in_first);
  dual_membership_clause<DeltaModule>(r, "membership matches on character modules", firsts,
                                      in_first, in_second);
  sum_closure_clause<DeltaModule>(r, "second class closed under finite sums and summands", seconds,
                                  in_second);
  infinite_note(r, spec.bound);
  r.finalize();
  return r;
}

CheckReport check_delta_symmetric(DeltaPairSpec const& spec) {
  CheckReport r;
  r.check = "symmetric duality pair (" + spec.first.describe() + ", " + spec.second.describe() +
            ") over " + spec.ctx->name();
  r.absorb(verify_delta_duality_pair(spec), "forward: ");
  r.absorb(verify_delta_duality_pair({spec.ctx, spec.second, spec.first, spec.bound}), "reverse: ");
  r.finalize();
  return r;
}

CheckReport check_delta_perfect_pair(DeltaPairSpec const& spec) {
  CheckReport r;
  r.check = "perfect duality pair (" + spec.first.describe() + ", " + spec.second.describe() +
            ") over " + spec.ctx->name();
  r.absorb(verify_delta_duality_pair(spec), "duality: ");
  auto side = spec.first.side();
  auto items = enumerate_delta_modules(spec.ctx, spec.bound, side);
  auto seqs = enumerate_delta_short_exact_sequences(spec.ctx, spec.bound, side);
  std::vector<std::array<DeltaModule const*, 3>> ses;
  for (auto const& s : seqs) ses.push_back({&s.sub, &s.middle, &s.quotient});
  CheckReport p;
  perfect_clauses<DeltaModule>(p, regular_tuple(spec.ctx, side), items, ses, in_spec(spec.first),
                               spec.bound);
  r.absorb(p, "perfect: ");
  r.finalize();
  return r;
}

CheckReport check_delta_complete(DeltaPairSpec const& spec) {
  CheckReport r;
  r.check = "complete duality pair (" + spec.first.describe() + ", " + spec.second.describe() +
            ") over " + spec.ctx->name();
  r.absorb(check_delta_symmetric(spec), "symmetric: ");
  r.absorb(check_delta_perfect_pair(spec), "perfect: ");
  r.finalize();
  return r;
}

ComponentClasses flat_fp_injective_classes(ContextPtr const& ctx) {
  return ComponentClasses{builtin_oracle(ctx->a(), Side::left, BuiltinClass::flat),
                          builtin_oracle(ctx->a(), Side::right, BuiltinClass::fp_injective),
                          builtin_oracle(ctx->b(), Side::left, BuiltinClass::flat),
                          builtin_oracle(ctx->b(), Side::right, BuiltinClass::fp_injective)};
}

DeltaPairSpec monic_epic_pair(ContextPtr const& ctx, ComponentClasses const& cc,
                              std::size_t bound) {
  return {ctx, spec_of(DeltaClass::monic, cc.c1, cc.d1), spec_of(DeltaClass::epic, cc.c2, cc.d2),
          bound};
}

DeltaPairSpec componentwise_pair(ContextPtr const& ctx, ComponentClasses const& cc,
                                 std::size_t bound) {
  return {ctx, spec_of(DeltaClass::componentwise, cc.c1, cc.d1),
          spec_of(DeltaClass::componentwise, cc.c2, cc.d2), bound};
}

DeltaPairSpec epic_monic_pair(ContextPtr const& ctx, ComponentClasses const& cc,
                              std::size_t bound) {
  return {ctx, spec_of(DeltaClass::epic, cc.c1, cc.d1), spec_of(DeltaClass::monic, cc.c2, cc.d2),
          bound};
}

// ---------------------------------------------------------------------------
// Transfer checks

CheckReport check_functor_class_correspondence(ContextPtr const& ctx, ComponentClasses const& cc,
                                               std::size_t bound) {
  CheckReport r;
  r.check = "functors carry component classes to tuple classes over " + ctx->name();
  r.parameters["bound"] = static_cast<long long>(bound);
  r.hypothesis("N and M finitely presented over A and B", true);
  auto xs = enumerate_modules(ctx->a(), bound);
  auto ys = enumerate_modules(ctx->b(), bound);
  r.parameters["a_modules"] = static_cast<long long>(xs.size());
  r.parameters["b_modules"] = static_cast<long long>(ys.size());

  struct Item {
    std::string name;
    std::function<bool(Module const&)> component;
    std::function<bool(Module const&)> tuple;
    bool over_a;
  };
  std::vector<Item> items{
      {"X in C1 <=> T_A(X) monic", [&](Module const& x) { return cc.c1.contains(x); },
       [&](Module const& x) { return in_monic_class(t_a(ctx, x), cc.c1, cc.d1); }, true},
      {"Y in D1 <=> T_B(Y) monic", [&](Module const& y) { return cc.d1.contains(y); },
       [&](Module const& y) { return in_monic_class(t_b(ctx, y), cc.c1, cc.d1); }, false},
      {"X+ in C2 <=> T_A(X)+ epic", [&](Module const& x) { return cc.c2.contains(dual_module(x)); },
       [&](Module const& x) { return in_epic_class(delta_dual(t_a(ctx, x)), cc.c2, cc.d2); }, true},
      {"Y+ in D2 <=> T_B(Y)+ epic", [&](Module const& y) { return cc.d2.contains(dual_module(y)); },
       [&](Module const& y) { return in_epic_class(delta_dual(t_b(ctx, y)), cc.c2, cc.d2); },
       false},
      {"X in C1 <=> H_A(X) epic", [&](Module const& x) { return cc.c1.contains(x); },
       [&](Module const& x) { return in_epic_class(h_a(ctx, x), cc.c1, cc.d1); }, true},
      {"Y in D1 <=> H_B(Y) epic", [&](Module const& y) { return cc.d1.contains(y); },
       [&](Module const& y) { return in_epic_class(h_b(ctx, y), cc.c1, cc.d1); }, false},
      {"X+ in C2 <=> H_A(X)+ monic", [&](Module const& x) { return cc.c2.contains(dual_module(x)); },
       [&](Module const& x) { return in_monic_class(delta_dual(h_a(ctx, x)), cc.c2, cc.d2); },
       true},
      {"Y+ in D2 <=> H_B(Y)+ monic", [&](Module const& y) { return cc.d2.contains(dual_module(y)); },
       [&](Module const& y) { return in_monic_class(delta_dual(h_b(ctx, y)), cc.c2, cc.d2); },
       false},
  };
  for (auto const& it : items) {
    auto const& mods = it.over_a ? xs : ys;
    auto bad_flags = parallel_map(mods.size(), [&](std::size_t i) -> int {
      return it.component(mods[i]) != it.tuple(mods[i]) ? 1 : 0;
    });
    std::size_t bad = 0;
    for (std::size_t i = 0; i < mods.size(); ++i) {
      if (bad_flags[i] && bad++ == 0) r.witness(it.name + " fails at " + mods[i].describe());
    }
    r.add(it.name, bad == 0, std::to_string(mods.size()) + " modules checked");
  }
  r.finalize();
  return r;
}

CheckReport check_duality_transfer(ContextPtr const& ctx, ComponentClasses const& cc,
                                   std::size_t bound) {
  CheckReport r;
  r.check = "duality pairs transfer to tuples over " + ctx->name();
  r.parameters["bound"] = static_cast<long long>(bound);
  r.hypothesis("M and N finitely presented as left modules", true);
  auto c_pair = verify_duality_pair({cc.c1, cc.c2, bound});
  auto d_pair = verify_duality_pair({cc.d1, cc.d2, bound});
  auto monic = verify_delta_duality_pair(monic_epic_pair(ctx, cc, bound));
  auto comp = verify_delta_duality_pair(componentwise_pair(ctx, cc, bound));
  auto epic = verify_delta_duality_pair(epic_monic_pair(ctx, cc, bound));
  bool s1 = both_pass(c_pair, d_pair);
  bool s2 = monic.passed();
  bool s3 = comp.passed();
  bool s4 = epic.passed();
  r.parameters["components_are_pairs"] = s1;
  r.parameters["monic_epic_is_pair"] = s2;
  r.parameters["componentwise_is_pair"] = s3;
  r.parameters["epic_monic_is_pair"] = s4;
  r.absorb(c_pair, "A components: ", true);
  r.absorb(d_pair, "B components: ", true);
  r.absorb(monic, "monic/epic: ", true);
  r.absorb(comp, "componentwise: ", true);
  r.absorb(epic, "epic/monic: ", true);
  equivalence(r, "components <=> monic/epic", s1, s2, "components", "monic/epic");
  equivalence(r, "components <=> componentwise", s1, s3, "components", "componentwise");
  equivalence(r, "components <=> epic/monic", s1, s4, "components", "epic/monic");
  r.finalize();
  return r;
}

CheckReport check_symmetric_transfer(ContextPtr const& ctx, ComponentClasses const& cc,
                                     std::size_t bound) {
  CheckReport r;
  r.check = "symmetric duality pairs transfer to tuples over " + ctx->name();
  r.parameters["bound"] = static_cast<long long>(bound);
  r.hypothesis("M and N finitely presented on both sides", true);
  auto c_sym = check_symmetric({cc.c1, cc.c2, bound});
  auto d_sym = check_symmetric({cc.d1, cc.d2, bound});
  bool comps = both_pass(c_sym, d_sym);
  auto comp = check_delta_symmetric(componentwise_pair(ctx, cc, bound));
  auto monic = check_delta_symmetric(monic_epic_pair(ctx, cc, bound));
  auto epic = check_delta_symmetric(epic_monic_pair(ctx, cc, bound));
  r.absorb(c_sym, "A components: ", true);
  r.absorb(d_sym, "B components: ", true);
  r.absorb(comp, "componentwise: ", true);
  r.absorb(monic, "monic/epic: ", true);
  r.absorb(epic, "epic/monic: ", true);
  equivalence(r, "componentwise symmetric <=> components symmetric", comp.passed(), comps,
              "componentwise", "components");
  equivalence(r, "monic/epic symmetric <=> components symmetric", monic.passed(), comps,
              "monic/epic", "components");
  equivalence(r, "epic/monic symmetric <=> components symmetric", epic.passed(), comps,
              "epic/monic", "components");
  r.finalize();
  return r;
}

namespace {

// Tor_1(N, D) = 0 for D in D1 and Tor_1(M, C) = 0 for C in C1, on samples.
bool tor_vanishes(CheckReport& r, ContextPtr const& ctx, ComponentClasses const& cc,
                  std::size_t bound) {
  bool ok = true;
  for (auto const& d : cc.d1.sample(bound)) {
    if (tor1_dim(ctx->n(), d) != 0) {
      r.witness("Tor_1(N, " + d.describe() + ") is nonzero");
      ok = false;
      break;
    }
  }
  for (auto const& c : cc.c1.sample(bound)) {
    if (tor1_dim(ctx->m(), c) != 0) {
      r.witness("Tor_1(M, " + c.describe() + ") is nonzero");
      ok = false;
      break;
    }
  }
  return ok;
}

struct BimoduleMembership {
  bool m_in_d1;
  bool n_in_c1;
};

BimoduleMembership bimodule_membership(CheckReport& r, ContextPtr const& ctx,
                                       ComponentClasses const& cc) {
  BimoduleMembership b{cc.d1.contains(ctx->m().as_left()), cc.c1.contains(ctx->n().as_left())};
  r.parameters["m_in_d1"] = b.m_in_d1;
  r.parameters["n_in_c1"] = b.n_in_c1;
  if (!b.m_in_d1) r.witness("M as a left module is not in " + cc.d1.name);
  if (!b.n_in_c1) r.witness("N as a left module is not in " + cc.c1.name);
  return b;
}

}  // namespace

CheckReport check_perfect_transfer(ContextPtr const& ctx, ComponentClasses const& cc,
                                   std::size_t bound) {
  CheckReport r;
  r.check = "perfect duality pairs transfer to tuples over " + ctx->name();
  r.parameters["bound"] = static_cast<long long>(bound);
  auto c_perf = check_perfect_pair({cc.c1, cc.c2, bound});
  auto d_perf = check_perfect_pair({cc.d1, cc.d2, bound});
  bool comps = both_pass(c_perf, d_perf);
  r.parameters["components_perfect"] = comps;
  r.absorb(c_perf, "A components: ", true);
  r.absorb(d_perf, "B components: ", true);

  bool tor = tor_vanishes(r, ctx, cc, bound);
  r.hypothesis("Tor_1(N, D) = 0 = Tor_1(M, C) on sampled members of D1 and C1", tor);
  auto monic = check_delta_perfect_pair(monic_epic_pair(ctx, cc, bound));
  r.parameters["monic_epic_perfect"] = monic.passed();
  r.absorb(monic, "monic/epic: ", true);
  if (tor) {
    equivalence(r, "monic/epic perfect <=> components perfect", monic.passed(), comps,
                "monic/epic", "components");
  }

  auto comp = check_delta_perfect_pair(componentwise_pair(ctx, cc, bound));
  r.parameters["componentwise_perfect"] = comp.passed();
  r.absorb(comp, "componentwise: ", true);
  auto bm = bimodule_membership(r, ctx, cc);
  equivalence(r, "componentwise perfect <=> M in D1, N in C1, components perfect", comp.passed(),
              bm.m_in_d1 && bm.n_in_c1 && comps, "componentwise", "conditions");
  r.finalize();
  return r;
}

CheckReport check_complete_transfer(ContextPtr const& ctx, ComponentClasses const& cc,
                                    std::size_t bound) {
  CheckReport r;
  r.check = "complete duality pairs transfer to tuples over " + ctx->name();
  r.parameters["bound"] = static_cast<long long>(bound);
  auto c_comp = check_complete({cc.c1, cc.c2, bound});
  auto d_comp = check_complete({cc.d1, cc.d2, bound});
  bool comps = both_pass(c_comp, d_comp);
  r.parameters["components_complete"] = comps;
  r.absorb(c_comp, "A components: ", true);
  r.absorb(d_comp, "B components: ", true);

  bool proj = is_projective(ctx->n().as_right()) && is_projective(ctx->m().as_right());
  r.hypothesis("N and M finitely generated projective as right modules", proj);
  auto monic = check_delta_complete(monic_epic_pair(ctx, cc, bound));
  r.parameters["monic_epic_complete"] = monic.passed();
  r.absorb(monic, "monic/epic: ", true);
  if (proj) {
    equivalence(r, "monic/epic complete <=> components complete", monic.passed(), comps,
                "monic/epic", "components");
  }

  auto comp = check_delta_complete(componentwise_pair(ctx, cc, bound));
  r.parameters["componentwise_complete"] = comp.passed();
  r.absorb(comp, "componentwise: ", true);
  auto bm = bimodule_membership(r, ctx, cc);
  equivalence(r, "componentwise complete <=> M in D1, N in C1, components complete", comp.passed(),
              bm.m_in_d1 && bm.n_in_c1 && comps, "componentwise", "conditions");
  r.finalize();
  return r;
}

CheckReport check_fp_injective_characterization(ContextPtr const& ctx, std::size_t bound) {
  CheckReport r;
  r.check = "FP-injective right tuples over " + ctx->name();
  r.parameters["bound"] = static_cast<long long>(bound);
  r.hypothesis("N and M finitely generated projective as right modules",
               is_projective(ctx->n().as_right()) && is_projective(ctx->m().as_right()));
  auto inj_a = builtin_oracle(ctx->a(), Side::right, BuiltinClass::fp_injective);
  auto inj_b = builtin_oracle(ctx->b(), Side::right, BuiltinClass::fp_injective);
  auto tuples = enumerate_delta_modules(ctx, bound, Side::right);
  tuples.push_back(delta_dual(regular_tuple(ctx, Side::left)));
  r.parameters["right_tuples"] = static_cast<long long>(tuples.size());
  auto verdicts = parallel_map(tuples.size(), [&](std::size_t i) {
    return std::make_pair(is_injective(pack(tuples[i])), in_epic_class(tuples[i], inj_a, inj_b));
  });
  std::size_t bad = 0, injective = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    injective += verdicts[i].first;
    if (verdicts[i].first != verdicts[i].second && bad++ == 0) {
      r.witness(tuples[i].describe() + ": packed injective " + yes_no(verdicts[i].first) +
                ", componentwise characterization " + yes_no(verdicts[i].second));
    }
  }
  r.parameters["fp_injective"] = static_cast<long long>(injective);
  r.add("packed injectivity <=> tilde maps epic with FP-injective kernels", bad == 0,
        std::to_string(tuples.size()) + " right tuples checked (last: dual of the regular module)");
  r.finalize();
  return r;
}

CheckReport check_delta_uniqueness(ContextPtr const& ctx, std::size_t bound) {
  CheckReport r;
  r.check = "uniqueness of the right half over " + ctx->name();
  r.parameters["bound"] = static_cast<long long>(bound);
  auto cc = flat_fp_injective_classes(ctx);

  auto lefts = enumerate_delta_modules(ctx, bound, Side::left);
  auto flat_bad = parallel_map(lefts.size(), [&](std::size_t i) -> int {
    return is_flat(pack(lefts[i])) != in_monic_class(lefts[i], cc.c1, cc.d1) ? 1 : 0;
  });
  std::size_t bad = 0;
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    if (flat_bad[i] && bad++ == 0) {
      r.witness(lefts[i].describe() + " is flat by exactly one of the two routes");
    }
  }
  r.add("flat tuples are the monic class of flat components", bad == 0,
        std::to_string(lefts.size()) + " left tuples checked");

  r.absorb(check_delta_complete(monic_epic_pair(ctx, cc, bound)), "first pair complete: ", true);

  auto rights = enumerate_delta_modules(ctx, bound, Side::right);
  auto right_bad = parallel_map(rights.size(), [&](std::size_t i) -> int {
    return is_injective(pack(rights[i])) != in_epic_class(rights[i], cc.c2, cc.d2) ? 1 : 0;
  });
  bad = 0;
  for (std::size_t i = 0; i < rights.size(); ++i) {
    if (right_bad[i] && bad++ == 0) {
      r.witness(rights[i].describe() + " lies in exactly one candidate right half");
    }
  }
  r.add("epic class of FP-injectives agrees with FP-injective packed modules", bad == 0,
        std::to_string(rights.size()) + " right tuples checked");
  r.finalize();
  return r;
}

}  // namespace morita
