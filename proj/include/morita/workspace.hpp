#ifndef MORITA_WORKSPACE_HPP_
#define MORITA_WORKSPACE_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "morita/errors.hpp"
#include "morita/morita.hpp"

namespace morita {

class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, std::string message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

struct ModuleDecl {
  std::string algebra;
  Module module;
};

struct BimoduleDecl {
  std::string left, right;
  Bimodule bimodule;
};

struct ContextDecl {
  std::string a, b, m, n;
  ContextPtr context;
};

struct TupleDecl {
  std::string context, x, y;
  DeltaModule tuple;
};

struct OracleDecl {
  std::string algebra;
  Side side = Side::left;
  /// "builtin" or "list".
  std::string kind;
  std::string builtin;
  std::vector<std::string> members;
};

enum class DeclKind { algebra, bimodule, module, context, tuple, oracle };

struct Workspace {
  std::uint32_t p = 2;
  bool has_field = false;
  std::vector<std::pair<DeclKind, std::string>> order;
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, BimoduleDecl> bimodules;
  std::map<std::string, ModuleDecl> modules;
  std::map<std::string, ContextDecl> contexts;
  std::map<std::string, TupleDecl> tuples;
  std::map<std::string, OracleDecl> oracles;

  /// Declared algebra, or the Delta of a context named "<ctx>.Delta".
  AlgebraPtr find_algebra(std::string const& name) const;
  std::string algebra_name(AlgebraPtr const& a) const;
  bool empty() const noexcept { return order.empty() && !has_field; }
};

/// Parses and validates every declaration. Throws ParseError carrying the
/// line and column of the offending token.
Workspace parse_workspace(std::string_view text, std::string const& source = "<input>");
Workspace load_workspace(std::string const& path);

std::string emit_workspace(Workspace const& ws);

/// Entity-by-entity structural comparison.
bool same_workspace(Workspace const& a, Workspace const& b);

/// Shipped fixtures E0, E1, E2 and the mutated E3, parsed from the embedded
/// copies of fixtures/*.ws.
std::vector<std::string> fixture_names();
std::string fixture_text(std::string const& name);
Workspace fixture_workspace(std::string const& name);
/// The single context declared by a fixture.
ContextPtr fixture_context(std::string const& name);

}  // namespace morita

#endif  // MORITA_WORKSPACE_HPP_
