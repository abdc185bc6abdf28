#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "morita/cli.hpp"
#include "morita/gorenstein.hpp"
#include "morita/workspace.hpp"
#include "oracles.hpp"

using namespace morita;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, std::string const& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int cli_exit(std::vector<std::string> args) {
  args.insert(args.begin(), "morita");
  std::vector<char const*> argv;
  for (auto const& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

Module simple(AlgebraPtr const& a) {
  return Module(a, Side::left, 1, {Mat::identity(2, 1), Mat::zero(2, 1, 1)});
}

ComponentClasses flat_injective(ContextPtr const& ctx) {
  return ComponentClasses{builtin_oracle(ctx->a(), Side::left, BuiltinClass::flat),
                          builtin_oracle(ctx->a(), Side::right, BuiltinClass::injective),
                          builtin_oracle(ctx->b(), Side::left, BuiltinClass::flat),
                          builtin_oracle(ctx->b(), Side::right, BuiltinClass::injective)};
}

std::string verdict_of(CheckReport const& r) {
  std::string s = r.check + ": " + to_string(r.verdict);
  if (!r.witnesses.empty()) s += " (" + r.witnesses.front() + ")";
  return s;
}

Outcome character_tuples() {
  Outcome o;
  for (auto const& name : {"E0", "E1", "E2"}) {
    auto r = check_character_tuples(fixture_context(name), 2);
    o.require(r.passed(), std::string(name) + " " + verdict_of(r));
  }
  return o;
}

Outcome detector_agreement() {
  Outcome o;
  for (auto const& name : {"E0", "E1", "E2"}) {
    auto r = check_detector_agreement(fixture_context(name), 2);
    o.require(r.passed(), std::string(name) + " " + verdict_of(r));
  }
  return o;
}

Outcome functor_correspondence() {
  Outcome o;
  for (auto const& name : {"E1", "E2"}) {
    auto ctx = fixture_context(name);
    auto r = check_functor_class_correspondence(ctx, flat_injective(ctx), 2);
    o.require(r.passed(), std::string(name) + " " + verdict_of(r));
  }
  return o;
}

Outcome duality_transfer() {
  Outcome o;
  auto ctx = fixture_context("E1");
  auto r = check_duality_transfer(ctx, flat_injective(ctx), 2);
  o.require(r.passed(), verdict_of(r));
  int code = cli_exit({"theorem", "3.3", "--fixture", "E1", "--bound", "2"});
  o.require(code == 0, "command line exit " + std::to_string(code));
  return o;
}

Outcome perfect_and_complete() {
  Outcome o;
  for (auto const& name : {"E1", "E2"}) {
    auto ctx = fixture_context(name);
    auto cc = flat_fp_injective_classes(ctx);
    auto perfect = check_perfect_transfer(ctx, cc, 2);
    auto complete = check_complete_transfer(ctx, cc, 2);
    o.require(perfect.passed(), std::string(name) + " " + verdict_of(perfect));
    o.require(complete.passed(), std::string(name) + " " + verdict_of(complete));
    o.require(perfect.parameters.at("componentwise_perfect") == 1 &&
                  perfect.parameters.at("m_in_d1") == 1 && perfect.parameters.at("n_in_c1") == 1,
              std::string(name) + " componentwise pair or its conditions fail");
  }
  // The mutated fixture breaks "M in D1"; the componentwise pair must fall with it.
  auto e3 = fixture_context("E3");
  auto cc = flat_fp_injective_classes(e3);
  o.require(!cc.d1.contains(e3->m().as_left()), "E3 bimodule M unexpectedly in D1");
  auto comp = check_delta_perfect_pair(componentwise_pair(e3, cc, 2));
  o.require(comp.refuted() && !comp.witnesses.empty(), "E3 componentwise pair not refuted with witness");
  auto r = check_perfect_transfer(e3, cc, 2);
  o.require(r.passed(), "E3 " + verdict_of(r));
  return o;
}

Outcome window_consistency() {
  Outcome o;
  auto a = Algebra::truncated_polynomial(2, 2, "A");
  auto k = simple(a);
  auto good = is_gorenstein_projective_window(k, builtin_oracle(a, Side::left, BuiltinClass::flat), 4, 2);
  o.require(good.consistent && good.report.verdict == Verdict::consistent_up_to_bound,
            "flat tests: " + verdict_of(good.report));
  auto bad = is_gorenstein_projective_window(k, list_oracle("k", a, Side::left, {k}), 4, 2);
  o.require(bad.report.refuted(), "test module k: " + verdict_of(bad.report));
  o.require(bad.witness && bad.witness->homology > 0, "no nonzero-homology witness");
  auto all = is_gorenstein_projective_window(k, builtin_oracle(a, Side::left, BuiltinClass::all), 4, 2);
  o.require(all.report.refuted() && all.witness, "all modules: " + verdict_of(all.report));
  return o;
}

Outcome gorenstein_transport() {
  Outcome o;
  auto e2 = fixture_context("E2");
  auto cc = flat_fp_injective_classes(e2);
  auto k = simple(e2->a());
  auto fwd = check_gorenstein_transfer_forward(e2, Corner::a, k, cc, 4, 2);
  o.require(fwd.report.verdict == Verdict::consistent_up_to_bound, "forward " + verdict_of(fwd.report));
  bool adjunction = false;
  for (auto const& c : fwd.report.clauses) {
    if (c.name.find("matches Hom over") != std::string::npos) adjunction = c.verdict == Verdict::pass;
  }
  o.require(adjunction && fwd.report.parameters.at("adjunction_levels_compared") > 0,
            "adjunction dimensions differ");
  if (!fwd.complex || !fwd.image) {
    o.require(false, "forward check produced no complex");
    return o;
  }
  auto back = check_gorenstein_transfer_backward(e2, Corner::a, *fwd.complex, *fwd.image, cc, 4, 2);
  o.require(back.verdict == Verdict::consistent_up_to_bound, "backward " + verdict_of(back));
  return o;
}

Outcome ding_and_uniqueness() {
  Outcome o;
  auto e2 = fixture_context("E2");
  auto r = check_ding_transfer(e2, Corner::a, simple(e2->a()), 4, 2);
  o.require(r.verdict == Verdict::consistent_up_to_bound, verdict_of(r));
  o.require(r.parameters.at("flat_test_tuples") > 0, "no flat test tuples");
  std::size_t flats = 0;
  for (auto const& dm : enumerate_delta_modules(e2, 2)) {
    if (!is_flat(pack(dm))) continue;
    ++flats;
    o.require(is_flat_structural(dm), "flat tuple fails the structural criterion: " + dm.describe());
  }
  o.require(flats == static_cast<std::size_t>(r.parameters.at("flat_test_tuples")),
            "flat test tuple count differs from the enumeration");
  auto u = check_delta_uniqueness(e2, 2);
  o.require(u.passed(), verdict_of(u));
  return o;
}

Outcome fp_injective_characterization() {
  Outcome o;
  auto r = check_fp_injective_characterization(fixture_context("E1"), 2);
  o.require(r.passed(), verdict_of(r));
  int code = cli_exit({"theorem", "4.7", "--fixture", "E1", "--bound", "2"});
  o.require(code == 0, "command line exit " + std::to_string(code));
  return o;
}

Outcome infrastructure() {
  Outcome o;
  std::size_t checked = 0;
  for (auto [rows, cols] : {std::pair{2, 2}, std::pair{2, 3}}) {
    auto n = oracle::matrix_count(2, rows, cols);
    for (std::uint64_t i = 0; i < n; ++i) {
      auto m = oracle::matrix(i, 2, rows, cols);
      auto r = morita::rank(m);
      auto k = kernel_basis(m);
      bool ok = r == oracle::rank(m) && k.rows() == oracle::nullity(m) &&
                r + k.rows() == static_cast<std::size_t>(cols);
      o.require(ok, "rank-nullity fails on " + m.to_string());
      ++checked;
    }
  }
  o.require(checked == 16 + 64, "wrong number of matrices");
  for (auto const& name : fixture_names()) {
    auto ws = fixture_workspace(name);
    o.require(same_workspace(ws, parse_workspace(emit_workspace(ws))), name + " round trip differs");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    char const* text;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria = {
      {1, "character tuples match unpacked duals of packed tuples, E0 E1 E2, bound 2",
       character_tuples},
      {2, "structural and packed projective, injective and flat verdicts agree, E0 E1 E2, bound 2",
       detector_agreement},
      {3, "functors carry component classes to tuple classes, E1 E2, bound 2",
       functor_correspondence},
      {4, "duality pairs transfer in all four forms on E1 at bound 2, command line exit 0",
       duality_transfer},
      {5, "perfect and complete pairs transfer on E1 E2; componentwise pair refuted on E3",
       perfect_and_complete},
      {6, "window 4: k over k[x]/(x^2) consistent against flat, refuted against k",
       window_consistency},
      {7, "T_A(k) on E2 consistent at window 4 with equal adjunction dimensions; U_A recovers it",
       gorenstein_transport},
      {8, "Ding window for T_A(k) on E2 consistent with structurally flat tests; uniqueness holds",
       ding_and_uniqueness},
      {9, "injective right tuples match the epic FP-injective class on E1 at bound 2, exit 0",
       fp_injective_characterization},
      {10, "rank-nullity over all 2x2 and 2x3 GF(2) matrices; fixture round trips",
       infrastructure},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.text << "  ["
              << ms << " ms]";
    if (!o.ok) std::cout << "\n      " << o.detail;
    std::cout << "\n";
    if (!o.ok) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass\n";
  return failures == 0 ? 0 : 1;
}
