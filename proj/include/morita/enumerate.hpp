#ifndef MORITA_ENUMERATE_HPP_
#define MORITA_ENUMERATE_HPP_

#include <cstdint>
#include <vector>

#include "morita/morita.hpp"

namespace morita {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;
inline constexpr char const* kBudgetEnvVar = "MORITA_ENUM_BUDGET";

/// Largest number of raw candidates one scan may visit. Read from the
/// environment variable MORITA_ENUM_BUDGET when set.
std::uint64_t enumeration_budget();

/// One module per isomorphism class, of dimension exactly `dim`. Scans every
/// assignment of action matrices to the algebra's generators. Throws
/// BudgetExceeded when p^(dim^2 * generators) exceeds the budget.
std::vector<Module> enumerate_modules_of_dim(AlgebraPtr const& algebra, std::size_t dim,
                                             Side side = Side::left);
/// All classes of dimension 0..max_dim, in increasing dimension.
std::vector<Module> enumerate_modules(AlgebraPtr const& algebra, std::size_t max_dim,
                                      Side side = Side::left);

/// One tuple per isomorphism class with dim X <= max_dim and dim Y <= max_dim.
/// Right tuples are enumerated through the opposite context.
std::vector<DeltaModule> enumerate_delta_modules(ContextPtr const& ctx, std::size_t max_dim,
                                                 Side side = Side::left);

/// Every subspace of z stable under the action, as column bases.
std::vector<Mat> invariant_subspaces(Module const& z);

struct ShortExactSequence {
  Module sub;
  Module middle;
  Module quotient;
  Mat inclusion;
  Mat projection;
};

/// 0 -> S -> Z -> Z/S -> 0 for every enumerated Z and every submodule S.
std::vector<ShortExactSequence> enumerate_short_exact_sequences(AlgebraPtr const& algebra,
                                                                std::size_t max_dim,
                                                                Side side = Side::left);

bool is_split(ShortExactSequence const& s);

struct DeltaShortExactSequence {
  DeltaModule sub;
  DeltaModule middle;
  DeltaModule quotient;
};

/// Short exact sequences of tuples obtained from the submodules of each
/// packed tuple in the enumeration.
std::vector<DeltaShortExactSequence> enumerate_delta_short_exact_sequences(
    ContextPtr const& ctx, std::size_t max_dim, Side side = Side::left);

}  // namespace morita

#endif  // MORITA_ENUMERATE_HPP_
