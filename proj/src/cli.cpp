#include "morita/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "morita/gorenstein.hpp"
#include "morita/parallel.hpp"
#include "morita/workspace.hpp"

namespace morita {

namespace {

class InputError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string workspace_path;
  std::string fixture;
  std::string context;
  std::string report_path;
  std::size_t jobs = 1;
  std::size_t bound = 2;
  std::size_t window = 4;
  std::size_t max_dim = 2;
  std::string module;
  std::string corner = "a";
  std::string c1 = "flat", c2 = "fp-injective", d1 = "flat", d2 = "fp-injective";
  std::string left, right;
  std::string algebra;
  std::string side = "left";
  bool symmetric = false, perfect = false, complete = false;

  std::vector<std::string> args;
};

Side parse_side(std::string const& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw InputError("side must be 'left' or 'right', got '" + s + "'");
}

Corner parse_corner(std::string const& s) {
  if (s == "a" || s == "A") return Corner::a;
  if (s == "b" || s == "B") return Corner::b;
  throw InputError("corner must be 'a' or 'b', got '" + s + "'");
}

class Session {
 public:
  explicit Session(Options const& o) : o_(o) {
    if (!o.workspace_path.empty() && !o.fixture.empty()) {
      throw InputError("--workspace and --fixture are mutually exclusive");
    }
    if (!o.workspace_path.empty()) {
      ws_ = load_workspace(o.workspace_path);
    } else if (!o.fixture.empty()) {
      auto names = fixture_names();
      if (std::find(names.begin(), names.end(), o.fixture) == names.end()) {
        throw InputError("unknown fixture '" + o.fixture + "'");
      }
      ws_ = fixture_workspace(o.fixture);
    } else {
      throw InputError("one of --workspace or --fixture is required");
    }
  }

  Workspace const& ws() const { return ws_; }

  ContextDecl const& context_decl() const {
    if (!o_.context.empty()) {
      auto it = ws_.contexts.find(o_.context);
      if (it == ws_.contexts.end()) throw InputError("unknown context '" + o_.context + "'");
      return it->second;
    }
    if (ws_.contexts.size() != 1) {
      throw InputError("the workspace declares " + std::to_string(ws_.contexts.size()) +
                       " contexts; choose one with --context");
    }
    return ws_.contexts.begin()->second;
  }
  ContextPtr context() const { return context_decl().context; }

  AlgebraPtr algebra(std::string const& name) const {
    if (name == "Delta") return context()->delta();
    auto a = ws_.find_algebra(name);
    if (!a) throw InputError("unknown algebra '" + name + "'");
    return a;
  }

  std::optional<Module> find_module(std::string const& name) const {
    if (auto it = ws_.modules.find(name); it != ws_.modules.end()) return it->second.module;
    if (name == "Delta") return Module::regular(context()->delta());
    if (auto a = ws_.find_algebra(name)) return Module::regular(a);
    return std::nullopt;
  }
  Module module(std::string const& name) const {
    if (auto m = find_module(name)) return *m;
    throw InputError("unknown module '" + name + "'");
  }

  std::optional<DeltaModule> find_tuple(std::string const& name) const {
    if (auto it = ws_.tuples.find(name); it != ws_.tuples.end()) return it->second.tuple;
    return std::nullopt;
  }
  DeltaModule tuple(std::string const& name) const {
    if (auto t = find_tuple(name)) return *t;
    throw InputError("unknown tuple '" + name + "'");
  }

  // A workspace oracle, a builtin class name over (algebra, side), or
  // "class@Algebra" with an optional "@side".
  ClassOracle oracle(std::string const& spec, AlgebraPtr const& algebra, Side side) const {
    if (auto it = ws_.oracles.find(spec); it != ws_.oracles.end()) {
      auto o = declared_oracle(spec, it->second);
      if (algebra && (!same_algebra(o.algebra, algebra) || o.side != side)) {
        throw MismatchError("oracle '" + spec + "' lives over " + ws_.algebra_name(o.algebra) +
                            " (" + to_string(o.side) + "), expected " +
                            ws_.algebra_name(algebra) + " (" + to_string(side) + ")");
      }
      return o;
    }
    auto parts = split(spec);
    auto kind = parse_builtin_class(parts[0]);
    if (!kind) throw InputError("unknown class '" + parts[0] + "'");
    AlgebraPtr alg = parts.size() > 1 ? this->algebra(parts[1]) : algebra;
    if (!alg) throw InputError("class '" + spec + "' needs an algebra, e.g. " + parts[0] + "@A");
    Side s = parts.size() > 2 ? parse_side(parts[2]) : side;
    return builtin_oracle(alg, s, *kind);
  }

  ComponentClasses component_classes() const {
    auto ctx = context();
    return ComponentClasses{oracle(o_.c1, ctx->a(), Side::left),
                            oracle(o_.c2, ctx->a(), Side::right),
                            oracle(o_.d1, ctx->b(), Side::left),
                            oracle(o_.d2, ctx->b(), Side::right)};
  }

  // First declared left module over the corner algebra, or its regular module.
  Module corner_module(Corner corner) const {
    if (!o_.module.empty()) return module(o_.module);
    auto const& decl = context_decl();
    auto const& alg_name = corner == Corner::a ? decl.a : decl.b;
    for (auto const& [kind, name] : ws_.order) {
      if (kind != DeclKind::module) continue;
      auto const& m = ws_.modules.at(name);
      if (m.algebra == alg_name && m.module.side() == Side::left) return m.module;
    }
    return Module::regular(ws_.algebras.at(alg_name));
  }

 private:
  static std::vector<std::string> split(std::string const& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, '@');) parts.push_back(part);
    if (parts.empty() || parts.size() > 3) throw InputError("malformed class '" + spec + "'");
    return parts;
  }

  ClassOracle declared_oracle(std::string const& name, OracleDecl const& d) const {
    auto alg = algebra(d.algebra);
    if (d.kind == "builtin") {
      auto kind = parse_builtin_class(d.builtin);
      if (!kind) throw InputError("oracle '" + name + "' names unknown class '" + d.builtin + "'");
      auto o = builtin_oracle(alg, d.side, *kind);
      o.name = name;
      return o;
    }
    std::vector<Module> members;
    for (auto const& m : d.members) members.push_back(module(m));
    return list_oracle(name, alg, d.side, std::move(members));
  }

  Options const& o_;
  Workspace ws_;
};

void expect_args(Options const& o, std::size_t n, std::string const& usage) {
  if (o.args.size() != n) throw InputError("usage: " + usage);
}

CheckReport cmd_validate(Session const& s, Options const& o) {
  auto const& ws = s.ws();
  CheckReport r;
  r.check = "validate";
  for (auto const& [name, a] : ws.algebras) {
    r.add("algebra " + name, true, "dim " + std::to_string(a->dim()));
  }
  for (auto const& [name, b] : ws.bimodules) {
    r.add("bimodule " + name, true, "dim " + std::to_string(b.bimodule.dim()));
  }
  for (auto const& [name, m] : ws.modules) {
    r.add("module " + name, true, m.module.describe());
  }
  for (auto const& [name, c] : ws.contexts) {
    r.add("context " + name, true,
          "Delta dim " + std::to_string(c.context->delta()->dim()));
  }
  for (auto const& [name, t] : ws.tuples) r.absorb(validate_tuple(t.tuple), "tuple " + name + ": ");
  for (auto const& [name, d] : ws.oracles) {
    auto oracle = s.oracle(name, nullptr, d.side);
    r.absorb(check_oracle(oracle, o.bound), "oracle " + name + ": ");
  }
  r.parameters["bound"] = static_cast<long long>(o.bound);
  r.finalize();
  return r;
}

CheckReport cmd_dual(Session const& s, Options const& o) {
  expect_args(o, 1, "dual <name>");
  auto const& name = o.args[0];
  CheckReport r;
  r.check = "dual";
  if (auto t = s.find_tuple(name)) {
    auto d = delta_dual(*t);
    r.note("dual tuple", d.describe());
    auto via_pack = unpack(t->home(), dual_module(pack(*t))).tuple;
    r.add("matches the unpacked dual of the packed module",
          delta_isomorphism(d, via_pack).has_value());
    r.add("double dual is isomorphic to the tuple",
          delta_isomorphism(delta_dual(d), *t).has_value());
  } else {
    auto m = s.module(name);
    auto d = dual_module(m);
    r.note("dual module", d.describe());
    r.add("double dual is isomorphic to the module",
          find_isomorphism(dual_module(d), m).has_value());
  }
  r.finalize();
  return r;
}

CheckReport cmd_tensor(Session const& s, Options const& o) {
  expect_args(o, 2, "tensor <M> <X>");
  auto x = s.module(o.args[1]);
  CheckReport r;
  r.check = "tensor";
  TensorProduct t = [&] {
    if (auto it = s.ws().bimodules.find(o.args[0]); it != s.ws().bimodules.end()) {
      return tensor_over_algebra(it->second.bimodule, x);
    }
    return tensor_over_algebra(s.module(o.args[0]), x);
  }();
  r.note("tensor product", t.module.describe());
  r.parameters["dim"] = static_cast<long long>(t.dim());
  r.add("section splits the projection", t.projection * t.section == Mat::identity(x.prime(), t.dim()));
  r.finalize();
  return r;
}

CheckReport cmd_functor(Session const& s, Options const& o) {
  expect_args(o, 2, "functor t_A|t_B|h_A|h_B <name>");
  auto ctx = s.context();
  auto const& kind = o.args[0];
  auto x = s.module(o.args[1]);
  CheckReport r;
  r.check = "functor " + kind;
  DeltaModule dm = DeltaModule::zero(ctx);
  if (kind == "t_A" || kind == "t_a") {
    dm = t_a(ctx, x);
    r.absorb(check_adjunction(AdjointPair::t_u, ctx, x, dm), "adjunction: ");
  } else if (kind == "h_A" || kind == "h_a") {
    dm = h_a(ctx, x);
    r.absorb(check_adjunction(AdjointPair::u_h, ctx, x, dm), "adjunction: ");
  } else if (kind == "t_B" || kind == "t_b") {
    dm = t_b(ctx, x);
  } else if (kind == "h_B" || kind == "h_b") {
    dm = h_b(ctx, x);
  } else {
    throw InputError("unknown functor '" + kind + "'; expected t_A, t_B, h_A or h_B");
  }
  r.absorb(validate_tuple(dm), "tuple: ");
  r.note("image", dm.describe());
  r.finalize();
  return r;
}

CheckReport cmd_pack(Session const& s, Options const& o) {
  expect_args(o, 1, "pack <tuple>");
  auto dm = s.tuple(o.args[0]);
  auto z = pack(dm);
  CheckReport r;
  r.check = "pack";
  r.note("packed module", z.describe());
  r.add("unpacking recovers the tuple",
        delta_isomorphism(unpack(dm.home(), z).tuple, dm).has_value());
  r.finalize();
  return r;
}

CheckReport cmd_unpack(Session const& s, Options const& o) {
  expect_args(o, 1, "unpack <module>");
  auto ctx = s.context();
  auto z = s.module(o.args[0]);
  auto u = unpack(ctx, z);
  CheckReport r;
  r.check = "unpack";
  r.note("tuple", u.tuple.describe());
  r.add("witness is an isomorphism onto the module",
        is_module_map(pack(u.tuple), z, u.witness) && rank(u.witness) == z.dim());
  r.finalize();
  return r;
}

CheckReport cmd_classify(Session const& s, Options const& o) {
  expect_args(o, 2, "classify proj|inj|flat <name>");
  auto const& kind = o.args[0];
  auto const& name = o.args[1];
  if (kind != "proj" && kind != "inj" && kind != "flat") {
    throw InputError("unknown property '" + kind + "'; expected proj, inj or flat");
  }
  std::string const property =
      kind == "proj" ? "projective" : kind == "inj" ? "injective" : "flat";
  CheckReport r;
  r.check = "classify " + kind;
  bool member = false;
  if (auto t = s.find_tuple(name)) {
    if (kind == "flat") {
      member = is_flat_delta(*t);
    } else {
      auto v = kind == "proj" ? is_projective_delta(*t) : is_injective_delta(*t);
      if (!v.agree()) {
        throw ConsistencyError("packed and structural " + property + " verdicts disagree on " +
                               name);
      }
      member = v.packed;
    }
  } else {
    auto m = s.module(name);
    member = kind == "proj" ? is_projective(m) : kind == "inj" ? is_injective(m) : is_flat(m);
  }
  r.add(name + " is " + property, member);
  if (!member) r.witness(name + " is not " + property);
  r.finalize();
  return r;
}

CheckReport cmd_class_member(Session const& s, Options const& o) {
  expect_args(o, 2, "class-member A|B|J <tuple>");
  auto kind = parse_delta_class(o.args[0]);
  if (!kind) throw InputError("unknown tuple class '" + o.args[0] + "'; expected A, B or J");
  auto dm = s.tuple(o.args[1]);
  auto cc = s.component_classes();
  bool left = dm.side() == Side::left;
  DeltaClassSpec spec{*kind, left ? cc.c1 : cc.c2, left ? cc.d1 : cc.d2};
  CheckReport r;
  r.check = "class-member";
  bool member = spec.contains(dm);
  r.add(o.args[1] + " in " + spec.describe(), member);
  if (!member) r.witness(o.args[1] + " is not in " + spec.describe());
  r.finalize();
  return r;
}

CheckReport cmd_duality_pair(Session const& s, Options const& o) {
  if (o.left.empty() || o.right.empty()) throw InputError("duality-pair needs --left and --right");
  AlgebraPtr alg = o.algebra.empty() ? nullptr : s.algebra(o.algebra);
  Side side = parse_side(o.side);
  auto first = s.oracle(o.left, alg, side);
  auto second = s.oracle(o.right, first.algebra, flip(first.side));
  DualityPairSpec spec{first, second, o.bound};
  CheckReport r = o.complete    ? check_complete(spec)
                  : o.perfect   ? check_perfect_pair(spec)
                  : o.symmetric ? check_symmetric(spec)
                                : verify_duality_pair(spec);
  r.parameters["bound"] = static_cast<long long>(o.bound);
  return r;
}

CheckReport cmd_enumerate(Session const& s, Options const& o) {
  CheckReport r;
  Side side = parse_side(o.side);
  std::size_t total = 0;
  std::vector<std::string> listing;
  if (!o.algebra.empty()) {
    auto alg = s.algebra(o.algebra);
    r.check = "enumerate modules over " + o.algebra;
    for (std::size_t d = 0; d <= o.max_dim; ++d) {
      auto ms = enumerate_modules_of_dim(alg, d, side);
      r.parameters["dim " + std::to_string(d)] = static_cast<long long>(ms.size());
      total += ms.size();
      for (auto const& m : ms) listing.push_back(m.describe());
    }
  } else {
    auto ctx = s.context();
    r.check = "enumerate tuples over " + ctx->name();
    auto dms = enumerate_delta_modules(ctx, o.max_dim, side);
    std::map<std::size_t, long long> by_dim;
    for (auto const& dm : dms) {
      ++by_dim[dm.dim()];
      listing.push_back(dm.describe());
    }
    for (auto const& [d, n] : by_dim) r.parameters["dim " + std::to_string(d)] = n;
    total = dms.size();
  }
  r.parameters["max_dim"] = static_cast<long long>(o.max_dim);
  r.parameters["count"] = static_cast<long long>(total);
  r.add("isomorphism classes", true, std::to_string(total));
  for (std::size_t i = 0; i < listing.size(); ++i) {
    r.note("class " + std::to_string(i), listing[i]);
  }
  r.finalize();
  return r;
}

CheckReport gorenstein_transfer(Session const& s, Options const& o) {
  auto ctx = s.context();
  auto corner = parse_corner(o.corner);
  auto x = s.corner_module(corner);
  auto cc = s.component_classes();
  CheckReport r;
  r.check = "gorenstein transfer (corner " + to_string(corner) + ")";
  auto fwd = check_gorenstein_transfer_forward(ctx, corner, x, cc, o.window, o.bound);
  r.absorb(fwd.report, "forward: ");
  if (fwd.complex && fwd.image) {
    auto back = check_gorenstein_transfer_backward(ctx, corner, *fwd.complex, *fwd.image, cc,
                                                   o.window, o.bound);
    r.absorb(back, "backward: ");
  }
  r.finalize();
  return r;
}

CheckReport ding_and_uniqueness(Session const& s, Options const& o) {
  auto ctx = s.context();
  auto corner = parse_corner(o.corner);
  CheckReport r;
  r.check = "ding transfer";
  r.absorb(check_ding_transfer(ctx, corner, s.corner_module(corner), o.window, o.bound), "ding: ");
  r.absorb(check_delta_uniqueness(ctx, o.bound), "uniqueness: ");
  r.finalize();
  return r;
}

CheckReport cmd_theorem(Session const& s, Options const& o) {
  expect_args(o, 1, "theorem <key>");
  auto const& key = o.args[0];
  auto ctx = [&] { return s.context(); };
  CheckReport r;
  if (key == "2.2" || key == "detector-agreement") {
    r = check_detector_agreement(ctx(), o.bound);
  } else if (key == "2.3" || key == "character-tuples") {
    r = check_character_tuples(ctx(), o.bound);
  } else if (key == "3.2" || key == "functor-correspondence") {
    r = check_functor_class_correspondence(ctx(), s.component_classes(), o.bound);
  } else if (key == "3.3" || key == "duality-transfer") {
    r = check_duality_transfer(ctx(), s.component_classes(), o.bound);
  } else if (key == "3.5" || key == "symmetric-transfer") {
    r = check_symmetric_transfer(ctx(), s.component_classes(), o.bound);
  } else if (key == "3.6" || key == "perfect-transfer") {
    r = check_perfect_transfer(ctx(), s.component_classes(), o.bound);
  } else if (key == "3.7" || key == "complete-transfer") {
    r = check_complete_transfer(ctx(), s.component_classes(), o.bound);
  } else if (key == "4.3" || key == "gorenstein-transfer") {
    r = gorenstein_transfer(s, o);
  } else if (key == "4.6" || key == "delta-uniqueness") {
    r = check_delta_uniqueness(ctx(), o.bound);
  } else if (key == "4.7" || key == "fp-injective-characterization") {
    r = check_fp_injective_characterization(ctx(), o.bound);
  } else if (key == "4.8" || key == "ding-transfer") {
    r = ding_and_uniqueness(s, o);
  } else {
    throw InputError("unknown theorem key '" + key + "'");
  }
  r.parameters["bound"] = static_cast<long long>(o.bound);
  if (key == "4.3" || key == "4.8" || key == "gorenstein-transfer" || key == "ding-transfer") {
    r.parameters["window"] = static_cast<long long>(o.window);
  }
  return r;
}

void write_report(std::string const& path, nlohmann::json const& j, std::ostream& err) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) {
    err << "error: cannot write report to " << path << "\n";
    return;
  }
  f << j.dump(2) << "\n";
}

int fail_with(Options const& o, std::string const& command, std::string const& kind,
              std::string const& message, int code, std::ostream& err) {
  err << "error: " << message << "\n";
  nlohmann::json j;
  j["command"] = command;
  j["verdict"] = kind;
  j["error"] = message;
  j["exit_code"] = code;
  write_report(o.report_path, j, err);
  return code;
}

}  // namespace

int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Checks for Morita context rings over finite fields"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--workspace,-w", o.workspace_path, "Workspace definition file");
  app.add_option("--fixture,-f", o.fixture, "Shipped fixture (E0, E1, E2, E3)");
  app.add_option("--context", o.context, "Context name when several are declared");
  app.add_option("--report", o.report_path, "Write the JSON report to this path");
  app.add_option("--jobs,-j", o.jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--bound", o.bound, "Enumeration bound on component dimensions");
  app.add_option("--window", o.window, "Window width for complete resolutions")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-dim", o.max_dim, "Largest dimension to enumerate");
  app.add_option("--module", o.module, "Module for the transfer checks");
  app.add_option("--corner", o.corner, "Corner algebra a or b");
  app.add_option("--c1", o.c1, "Class of left A-modules");
  app.add_option("--c2", o.c2, "Class of right A-modules");
  app.add_option("--d1", o.d1, "Class of left B-modules");
  app.add_option("--d2", o.d2, "Class of right B-modules");
  app.add_option("--algebra", o.algebra, "Algebra for enumerate and duality-pair");
  app.add_option("--side", o.side, "left or right");

  struct Command {
    char const* name;
    char const* help;
    CheckReport (*run)(Session const&, Options const&);
  };
  std::vector<Command> const commands = {
      {"validate", "Validate every declaration", cmd_validate},
      {"dual", "Character module of a module or tuple", cmd_dual},
      {"tensor", "Tensor product of a bimodule and a module", cmd_tensor},
      {"functor", "Apply t_A, t_B, h_A or h_B", cmd_functor},
      {"pack", "Tuple to Delta-module", cmd_pack},
      {"unpack", "Delta-module to tuple", cmd_unpack},
      {"classify", "Projectivity, injectivity or flatness", cmd_classify},
      {"class-member", "Membership in a tuple class", cmd_class_member},
      {"duality-pair", "Verify a duality pair of module classes", cmd_duality_pair},
      {"enumerate", "Isomorphism classes up to --max-dim", cmd_enumerate},
      {"theorem", "Run a transfer check by key", cmd_theorem},
  };
  for (auto const& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("args", o.args, "Positional arguments");
    if (std::string(c.name) == "duality-pair") {
      sub->add_option("--left", o.left, "First class");
      sub->add_option("--right", o.right, "Second class");
      sub->add_flag("--symmetric", o.symmetric, "Check both orientations");
      sub->add_flag("--perfect", o.perfect, "Check the perfect pair conditions");
      sub->add_flag("--complete", o.complete, "Symmetric and perfect");
    }
  }

  std::string command = "morita";
  try {
    app.parse(argc, argv);
  } catch (CLI::Success const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return fail_with(o, command, "input-error", e.what(), kInputErrorExit, err);
  }

  auto* chosen = app.get_subcommands().front();
  command = chosen->get_name();
  for (auto const& a : o.args) command += " " + a;
  auto entry = std::find_if(commands.begin(), commands.end(),
                                   [&](Command const& c) { return chosen->get_name() == c.name; });
  set_default_jobs(o.jobs);

  try {
    Session session(o);
    CheckReport report = entry->run(session, o);
    int code = exit_code(report.verdict);
    out << render_table(report);
    auto j = to_json(report);
    j["command"] = command;
    j["exit_code"] = code;
    write_report(o.report_path, j, err);
    return code;
  } catch (WindowError const& e) {
    return fail_with(o, command, "hypothesis-failure", e.what(), 3, err);
  } catch (ConsistencyError const& e) {
    return fail_with(o, command, "fail", e.what(), 1, err);
  } catch (ParseError const& e) {
    return fail_with(o, command, "input-error", e.what(), kInputErrorExit, err);
  } catch (Error const& e) {
    return fail_with(o, command, "input-error", e.what(), kInputErrorExit, err);
  } catch (std::exception const& e) {
    return fail_with(o, command, "input-error", e.what(), kInputErrorExit, err);
  }
}

}  // namespace morita
