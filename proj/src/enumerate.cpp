#include "morita/enumerate.hpp"

#include <cstdlib>
#include <map>
#include <mutex>

#include "morita/errors.hpp"
#include "morita/parallel.hpp"

namespace morita {

namespace {

// p^e, saturating at UINT64_MAX.
std::uint64_t power(std::uint64_t p, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (out > UINT64_MAX / p) return UINT64_MAX;
    out *= p;
  }
  return out;
}

void check_budget(std::uint64_t candidates, std::string const& what) {
  auto budget = enumeration_budget();
  if (candidates > budget) {
    throw BudgetExceeded(what + ": " + std::to_string(candidates) +
                         " candidates exceed the enumeration budget of " + std::to_string(budget) +
                         " (set " + kBudgetEnvVar + " to raise it)");
  }
}

// Digits of `index` in base p, least significant first.
void decode(std::uint64_t index, std::uint32_t p, std::vector<Elem>& digits) {
  for (auto& d : digits) {
    d = static_cast<Elem>(index % p);
    index /= p;
  }
}

std::vector<std::size_t> fingerprint(Module const& m) {
  std::vector<std::size_t> fp;
  for (auto const& a : m.actions()) fp.push_back(rank(a));
  fp.push_back(hom_dim(m, m));
  return fp;
}

// Keeps the first member of each isomorphism class, in input order.
std::vector<Module> dedupe(std::vector<Module> const& candidates) {
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
  std::vector<Module> out;
  for (auto const& c : candidates) {
    auto& bucket = buckets[fingerprint(c)];
    bool seen = false;
    for (auto idx : bucket) {
      if (find_isomorphism(out[idx], c)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      bucket.push_back(out.size());
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Module> scan_left_modules(AlgebraPtr const& alg, std::size_t d) {
  auto p = alg->prime();
  auto n = alg->dim();
  auto const& gens = alg->generators();
  auto const& words = alg->words();
  auto const& biw = alg->basis_in_words();
  std::size_t cells = d * d * gens.size();
  std::uint64_t total = power(p, cells);
  check_budget(total, "module scan over " + alg->name() + " in dim " + std::to_string(d));

  std::size_t shards = std::min<std::uint64_t>(total, 64);
  auto chunks = parallel_map(shards, [&](std::size_t s) {
    std::uint64_t lo = total / shards * s + std::min<std::uint64_t>(s, total % shards);
    std::uint64_t hi = lo + total / shards + (s < total % shards ? 1 : 0);
    std::vector<Module> found;
    std::vector<Elem> digits(cells);
    std::vector<Mat> word_action(words.size());
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      decode(idx, p, digits);
      std::vector<Mat> gen_action;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        Mat m(p, d, d);
        for (std::size_t c = 0; c < d * d; ++c) m(c / d, c % d) = digits[g * d * d + c];
        gen_action.push_back(std::move(m));
      }
      word_action[0] = Mat::identity(p, d);
      for (std::size_t u = 1; u < words.size(); ++u) {
        word_action[u] = gen_action[words[u].generator] * word_action[words[u].parent];
      }
      std::vector<Mat> acts(n, Mat(p, d, d));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t u = 0; u < words.size(); ++u) {
          if (biw(u, i) != 0) acts[i].add_scaled(word_action[u], biw(u, i));
        }
      }
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) {
          Mat rhs(p, d, d);
          for (std::size_t k = 0; k < n; ++k) {
            if (alg->constant(i, j, k) != 0) rhs.add_scaled(acts[k], alg->constant(i, j, k));
          }
          ok = acts[i] * acts[j] == rhs;
        }
      }
      if (ok) found.emplace_back(Module::Trusted{}, alg, Side::left, d, std::move(acts));
    }
    return dedupe(found);
  });
  std::vector<Module> all;
  for (auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
  return dedupe(all);
}

struct CacheKey {
  AlgebraPtr algebra;
  std::size_t dim;
  bool operator<(CacheKey const& o) const {
    return algebra != o.algebra ? algebra.get() < o.algebra.get() : dim < o.dim;
  }
};

}  // namespace

std::uint64_t enumeration_budget() {
  if (char const* env = std::getenv(kBudgetEnvVar)) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationBudget;
}

std::vector<Module> enumerate_modules_of_dim(AlgebraPtr const& algebra, std::size_t dim,
                                             Side side) {
  if (side == Side::right) {
    std::vector<Module> out;
    for (auto const& m : enumerate_modules_of_dim(algebra->opposite(), dim, Side::left)) {
      out.push_back(m.reinterpret_opposite());
    }
    return out;
  }
  if (dim == 0) return {Module::zero(algebra)};
  static std::mutex mu;
  static std::map<CacheKey, std::vector<Module>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({algebra, dim}); it != cache.end()) return it->second;
  }
  auto found = scan_left_modules(algebra, dim);
  std::lock_guard lock(mu);
  cache.emplace(CacheKey{algebra, dim}, found);
  return found;
}

std::vector<Module> enumerate_modules(AlgebraPtr const& algebra, std::size_t max_dim, Side side) {
  std::vector<Module> out;
  for (std::size_t d = 0; d <= max_dim; ++d) {
    auto part = enumerate_modules_of_dim(algebra, d, side);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<DeltaModule> enumerate_delta_modules(ContextPtr const& ctx, std::size_t max_dim,
                                                 Side side) {
  auto view = side == Side::left ? ctx : ctx->opposite();
  auto p = ctx->prime();
  auto xs = enumerate_modules(view->a(), max_dim);
  auto ys = enumerate_modules(view->b(), max_dim);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) pairs.emplace_back(i, j);
  }
  auto per_pair = parallel_map(pairs.size(), [&](std::size_t k) {
    auto const& x = xs[pairs[k].first];
    auto const& y = ys[pairs[k].second];
    auto mx = tensor_over_algebra(view->m(), x);
    auto ny = tensor_over_algebra(view->n(), y);
    auto hf = hom_basis(mx.module, y);
    auto hg = hom_basis(ny.module, x);
    std::size_t e = hf.size() + hg.size();
    std::uint64_t total = power(p, e);
    check_budget(total, "tuple scan over " + ctx->name());
    std::vector<Elem> digits(e);
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> buckets;
    std::vector<DeltaModule> found;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      decode(idx, p, digits);
      Mat f(p, y.dim(), mx.dim()), g(p, x.dim(), ny.dim());
      for (std::size_t t = 0; t < hf.size(); ++t) {
        if (digits[t]) f.add_scaled(hf[t], digits[t]);
      }
      for (std::size_t t = 0; t < hg.size(); ++t) {
        if (digits[hf.size() + t]) g.add_scaled(hg[t], digits[hf.size() + t]);
      }
      auto key = std::make_pair(rank(f), rank(g));
      auto dm = DeltaModule::make(ctx, side, x, y, std::move(f), std::move(g));
      auto& bucket = buckets[key];
      bool seen = false;
      for (auto b : bucket) {
        if (delta_isomorphism(found[b], dm)) {
          seen = true;
          break;
        }
      }
      if (!seen) {
        bucket.push_back(found.size());
        found.push_back(std::move(dm));
      }
    }
    return found;
  });
  std::vector<DeltaModule> out;
  for (auto& part : per_pair) {
    for (auto& dm : part) out.push_back(std::move(dm));
  }
  return out;
}

std::vector<Mat> invariant_subspaces(Module const& z) {
  auto p = z.prime();
  auto d = z.dim();
  std::vector<Mat> out;
  // Row-reduced echelon bases: choose pivots, then fill the free entries.
  for (std::size_t r = 0; r <= d; ++r) {
    std::vector<bool> choose(d, false);
    std::fill(choose.begin(), choose.begin() + static_cast<long>(r), true);
    do {
      std::vector<std::size_t> pivots;
      for (std::size_t c = 0; c < d; ++c) {
        if (choose[c]) pivots.push_back(c);
      }
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = pivots[i] + 1; c < d; ++c) {
          if (!choose[c]) free.emplace_back(i, c);
        }
      }
      std::uint64_t total = power(p, free.size());
      check_budget(total, "subspace scan");
      std::vector<Elem> digits(free.size());
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        decode(idx, p, digits);
        Mat rows(p, r, d);
        for (std::size_t i = 0; i < r; ++i) rows(i, pivots[i]) = 1;
        for (std::size_t t = 0; t < free.size(); ++t) rows(free[t].first, free[t].second) = digits[t];
        Mat basis = rows.transpose();
        if (is_invariant_subspace(z, basis)) out.push_back(std::move(basis));
      }
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return out;
}

std::vector<ShortExactSequence> enumerate_short_exact_sequences(AlgebraPtr const& algebra,
                                                                std::size_t max_dim, Side side) {
  std::vector<ShortExactSequence> out;
  for (auto const& z : enumerate_modules(algebra, max_dim, side)) {
    for (auto const& s : invariant_subspaces(z)) {
      auto sub = submodule(z, s);
      auto q = quotient_module(z, s);
      out.push_back(ShortExactSequence{std::move(sub.module), z, std::move(q.module), s,
                                       std::move(q.projection)});
    }
  }
  return out;
}

bool is_split(ShortExactSequence const& s) {
  return find_section(s.middle, s.quotient, s.projection).has_value();
}

std::vector<DeltaShortExactSequence> enumerate_delta_short_exact_sequences(
    ContextPtr const& ctx, std::size_t max_dim, Side side) {
  auto view = side == Side::left ? ctx : ctx->opposite();
  std::vector<DeltaShortExactSequence> out;
  for (auto const& dm : enumerate_delta_modules(ctx, max_dim, side)) {
    auto z = pack_view(dm);
    for (auto const& s : invariant_subspaces(z)) {
      auto sub = unpack(view, submodule(z, s).module).tuple;
      auto q = unpack(view, quotient_module(z, s).module).tuple;
      out.push_back(DeltaShortExactSequence{rehome(sub, ctx, side), dm, rehome(q, ctx, side)});
    }
  }
  return out;
}

}  // namespace morita
