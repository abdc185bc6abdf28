#include "morita/detectors.hpp"

#include "morita/enumerate.hpp"
#include "morita/errors.hpp"
#include "morita/parallel.hpp"

namespace morita {

QuotientResult cokernel_of_g(DeltaModule const& dm) { return cokernel_module(dm.x(), dm.g()); }
QuotientResult cokernel_of_f(DeltaModule const& dm) { return cokernel_module(dm.y(), dm.f()); }

SubmoduleResult kernel_of_tilde_f(DeltaModule const& dm) {
  return kernel_module(dm.x(), tilde_f(dm).matrix);
}

SubmoduleResult kernel_of_tilde_g(DeltaModule const& dm) {
  return kernel_module(dm.y(), tilde_g(dm).matrix);
}

DeltaVerdict is_projective_delta(DeltaModule const& dm) {
  DeltaVerdict v;
  v.packed = is_projective(pack_view(dm));
  auto p = cokernel_of_g(dm).module;
  auto q = cokernel_of_f(dm).module;
  if (is_projective(p) && is_projective(q)) {
    auto candidate = delta_direct_sum(t_a(dm.view(), p), t_b(dm.view(), q));
    if (delta_isomorphism(dm, candidate)) {
      v.structural = true;
      v.first = std::move(p);
      v.second = std::move(q);
    }
  }
  return v;
}

DeltaVerdict is_injective_delta(DeltaModule const& dm) {
  DeltaVerdict v;
  v.packed = is_injective(pack_view(dm));
  auto i = kernel_of_tilde_f(dm).module;
  auto j = kernel_of_tilde_g(dm).module;
  if (is_injective(i) && is_injective(j)) {
    auto candidate = delta_direct_sum(h_a(dm.view(), i), h_b(dm.view(), j));
    if (delta_isomorphism(dm, candidate)) {
      v.structural = true;
      v.first = std::move(i);
      v.second = std::move(j);
    }
  }
  return v;
}

bool is_flat_structural(DeltaModule const& dm) {
  return is_injective_map(dm.f()) && is_injective_map(dm.g()) &&
         is_flat(cokernel_of_g(dm).module) && is_flat(cokernel_of_f(dm).module);
}

bool is_flat_delta(DeltaModule const& dm) {
  bool structural = is_flat_structural(dm);
  bool packed = is_flat(pack_view(dm));
  if (structural != packed) {
    throw ConsistencyError("flatness routes disagree on " + dm.describe());
  }
  return structural;
}

CheckReport check_character_tuples(ContextPtr const& ctx, std::size_t bound) {
  CheckReport r;
  r.check = "character modules of tuples over " + ctx->name();
  r.parameters["bound"] = static_cast<long long>(bound);
  for (auto side : {Side::left, Side::right}) {
    auto tuples = enumerate_delta_modules(ctx, bound, side);
    auto ok = parallel_map(tuples.size(), [&](std::size_t i) -> int {
      auto const& dm = tuples[i];
      auto oracle = unpack(ctx, dual_module(pack(dm))).tuple;
      return delta_isomorphism(delta_dual(dm), oracle) ? 1 : 0;
    });
    std::size_t bad = 0;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if (!ok[i] && bad++ == 0) {
        r.witness("character module of " + tuples[i].describe() + " differs from the packed route");
      }
    }
    r.parameters[to_string(side) + "_tuples"] = static_cast<long long>(tuples.size());
    r.add(to_string(side) + " tuples: dual tuple matches the packed character module", bad == 0,
          std::to_string(tuples.size()) + " checked");
  }
  r.finalize();
  return r;
}

CheckReport check_detector_agreement(ContextPtr const& ctx, std::size_t bound) {
  CheckReport r;
  r.check = "projective, injective and flat detectors over " + ctx->name();
  r.parameters["bound"] = static_cast<long long>(bound);
  auto tuples = enumerate_delta_modules(ctx, bound);
  r.parameters["tuples"] = static_cast<long long>(tuples.size());
  struct Row {
    bool proj_agree, inj_agree, flat_agree, proj, inj, flat;
  };
  auto rows = parallel_map(tuples.size(), [&](std::size_t i) {
    auto const& dm = tuples[i];
    auto pv = is_projective_delta(dm);
    auto iv = is_injective_delta(dm);
    bool fs = is_flat_structural(dm);
    bool fp = is_flat(pack(dm));
    return Row{pv.agree(), iv.agree(), fs == fp, pv.packed, iv.packed, fp};
  });
  std::size_t bad[3] = {0, 0, 0};
  long long counts[3] = {0, 0, 0};
  char const* names[3] = {"projectivity", "injectivity", "flatness"};
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    bool agree[3] = {rows[i].proj_agree, rows[i].inj_agree, rows[i].flat_agree};
    counts[0] += rows[i].proj;
    counts[1] += rows[i].inj;
    counts[2] += rows[i].flat;
    for (int k = 0; k < 3; ++k) {
      if (!agree[k] && bad[k]++ == 0) {
        r.witness(std::string(names[k]) + " routes disagree on " + tuples[i].describe());
      }
    }
  }
  r.parameters["projective"] = counts[0];
  r.parameters["injective"] = counts[1];
  r.parameters["flat"] = counts[2];
  for (int k = 0; k < 3; ++k) {
    r.add(std::string(names[k]) + ": packed and structural routes agree", bad[k] == 0,
          std::to_string(tuples.size()) + " tuples checked");
  }
  r.finalize();
  return r;
}

}  // namespace morita
