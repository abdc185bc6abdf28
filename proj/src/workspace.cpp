#include "morita/workspace.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "morita/fixture_data.hpp"

namespace morita {

ParseError::ParseError(std::string source, std::size_t line, std::size_t column,
                       std::string message)
    : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column) {}

AlgebraPtr Workspace::find_algebra(std::string const& name) const {
  if (auto it = algebras.find(name); it != algebras.end()) return it->second;
  static std::string const suffix = ".Delta";
  if (name.size() > suffix.size() && name.ends_with(suffix)) {
    auto ctx = name.substr(0, name.size() - suffix.size());
    if (auto it = contexts.find(ctx); it != contexts.end()) return it->second.context->delta();
  }
  return nullptr;
}

std::string Workspace::algebra_name(AlgebraPtr const& a) const {
  for (auto const& [name, alg] : algebras) {
    if (alg == a) return name;
  }
  for (auto const& [name, c] : contexts) {
    if (c.context->delta() == a) return name + ".Delta";
  }
  return a->name();
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

// Splits on whitespace; a bracketed matrix is kept as one token.
std::vector<Line> tokenize(std::string_view text, std::string const& source) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      if (raw[i] == '[') {
        auto close = raw.find(']', i);
        if (close == std::string_view::npos) {
          throw ParseError(source, number, start + 1, "unterminated matrix");
        }
        i = close + 1;
      } else {
        while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) {
          if (raw[i] == '[' || raw[i] == ']') {
            throw ParseError(source, number, i + 1, "unexpected bracket");
          }
          ++i;
        }
      }
      line.tokens.push_back(Token{std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

class Parser {
 public:
  Parser(std::string_view text, std::string source)
      : source_(std::move(source)), lines_(tokenize(text, source_)) {}

  Workspace run() {
    while (at_ < lines_.size()) {
      auto const& line = lines_[at_];
      auto const& head = line.tokens[0].text;
      if (head == "field") {
        parse_field(line);
      } else if (head == "algebra") {
        parse_algebra();
      } else if (head == "bimodule") {
        parse_bimodule();
      } else if (head == "module") {
        parse_module();
      } else if (head == "context") {
        parse_context(line);
      } else if (head == "tuple") {
        parse_tuple();
      } else if (head == "oracle") {
        parse_oracle(line);
      } else {
        fail(line, 0, "unknown declaration '" + head + "'");
      }
      ++at_;
    }
    return std::move(ws_);
  }

 private:
  [[noreturn]] void fail(Line const& line, std::size_t token, std::string const& msg) const {
    std::size_t column = token < line.tokens.size() ? line.tokens[token].column : 1;
    throw ParseError(source_, line.number, column, msg);
  }

  void expect_count(Line const& line, std::size_t n, char const* usage) const {
    if (line.tokens.size() != n) fail(line, std::min(n, line.tokens.size()), std::string("usage: ") + usage);
  }

  long long integer(Line const& line, std::size_t token) const {
    auto const& t = line.tokens[token].text;
    try {
      std::size_t used = 0;
      long long v = std::stoll(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (std::exception const&) {
      fail(line, token, "expected an integer, found '" + t + "'");
    }
  }

  std::size_t count(Line const& line, std::size_t token) const {
    long long v = integer(line, token);
    if (v < 0) fail(line, token, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
  }

  Elem element(Line const& line, std::size_t token) const {
    long long v = integer(line, token) % static_cast<long long>(ws_.p);
    if (v < 0) v += ws_.p;
    return static_cast<Elem>(v);
  }

  void require_field(Line const& line) {
    if (!ws_.has_field) fail(line, 0, "declare the field before any other entity");
  }

  void fresh_name(Line const& line, std::size_t token) {
    auto const& name = line.tokens[token].text;
    if (!names_.insert(name).second) fail(line, token, "duplicate name '" + name + "'");
    if (name == "Delta" || name.ends_with(".Delta")) fail(line, token, "reserved name '" + name + "'");
  }

  Mat matrix(Line const& line, std::size_t token, std::size_t rows, std::size_t cols) const {
    auto const& t = line.tokens[token].text;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
      fail(line, token, "expected a matrix in brackets");
    }
    std::vector<std::vector<std::int64_t>> data;
    std::string body = t.substr(1, t.size() - 2);
    std::stringstream rows_in(body);
    std::string row;
    bool any = false;
    while (std::getline(rows_in, row, ';')) {
      std::stringstream cells(row);
      std::vector<std::int64_t> values;
      std::string cell;
      while (cells >> cell) {
        try {
          std::size_t used = 0;
          values.push_back(std::stoll(cell, &used));
          if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (std::exception const&) {
          fail(line, token, "bad matrix entry '" + cell + "'");
        }
      }
      any = any || !values.empty();
      data.push_back(std::move(values));
    }
    if (!any) {
      if (rows * cols != 0) {
        fail(line, token, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                              " matrix, found an empty one");
      }
      return Mat(ws_.p, rows, cols);
    }
    if (data.size() != rows) {
      fail(line, token, "expected " + std::to_string(rows) + " rows, found " +
                            std::to_string(data.size()));
    }
    for (auto const& r : data) {
      if (r.size() != cols) {
        fail(line, token, "expected " + std::to_string(cols) + " columns, found " +
                              std::to_string(r.size()));
      }
    }
    return Mat::from_rows(ws_.p, data);
  }

  // Lines of a block up to its "end"; the cursor is left on "end".
  std::vector<Line const*> block_body(Line const& header) {
    std::vector<Line const*> body;
    while (true) {
      ++at_;
      if (at_ >= lines_.size()) fail(header, 0, "block is missing its 'end'");
      if (lines_[at_].tokens[0].text == "end") {
        if (lines_[at_].tokens.size() != 1) fail(lines_[at_], 1, "unexpected text after 'end'");
        return body;
      }
      body.push_back(&lines_[at_]);
    }
  }

  AlgebraPtr algebra_ref(Line const& line, std::size_t token) const {
    auto a = ws_.find_algebra(line.tokens[token].text);
    if (!a) fail(line, token, "unknown algebra '" + line.tokens[token].text + "'");
    return a;
  }

  Side side_ref(Line const& line, std::size_t token) const {
    auto const& t = line.tokens[token].text;
    if (t == "left") return Side::left;
    if (t == "right") return Side::right;
    fail(line, token, "expected 'left' or 'right'");
  }

  // Declared module, or the regular module of an algebra.
  Module module_ref(Line const& line, std::size_t token) const {
    auto const& name = line.tokens[token].text;
    if (auto it = ws_.modules.find(name); it != ws_.modules.end()) return it->second.module;
    if (auto a = ws_.find_algebra(name)) return Module::regular(a);
    fail(line, token, "unknown module '" + name + "'");
  }

  template <class F>
  auto semantic(Line const& line, std::size_t token, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      fail(line, token, e.what());
    }
  }

  void parse_field(Line const& line) {
    expect_count(line, 2, "field <prime>");
    if (ws_.has_field) fail(line, 0, "field declared twice");
    long long p = integer(line, 1);
    if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p))) {
      fail(line, 1, "field characteristic must be a prime below 65536");
    }
    ws_.p = static_cast<std::uint32_t>(p);
    ws_.has_field = true;
  }

  void parse_algebra() {
    auto const& head = lines_[at_];
    require_field(head);
    expect_count(head, 3, "algebra <name> <dim>");
    fresh_name(head, 1);
    AlgebraTable t;
    t.p = ws_.p;
    t.dim = count(head, 2);
    t.name = head.tokens[1].text;
    if (t.dim == 0) fail(head, 2, "an algebra has positive dimension");
    t.constants.assign(t.dim * t.dim * t.dim, 0);
    bool has_unit = false;
    for (auto const* l : block_body(head)) {
      auto const& kw = l->tokens[0].text;
      if (kw == "basis") {
        expect_count(*l, t.dim + 1, "basis <one label per basis element>");
        t.labels.clear();
        for (std::size_t i = 1; i <= t.dim; ++i) t.labels.push_back(l->tokens[i].text);
      } else if (kw == "unit") {
        expect_count(*l, t.dim + 1, "unit <coordinates>");
        t.unit.clear();
        for (std::size_t i = 1; i <= t.dim; ++i) t.unit.push_back(element(*l, i));
        has_unit = true;
      } else if (kw == "mul") {
        expect_count(*l, t.dim + 3, "mul <i> <j> <coordinates of b_i b_j>");
        auto i = count(*l, 1), j = count(*l, 2);
        if (i >= t.dim) fail(*l, 1, "basis index out of range");
        if (j >= t.dim) fail(*l, 2, "basis index out of range");
        for (std::size_t k = 0; k < t.dim; ++k) t.c(i, j, k) = element(*l, 3 + k);
      } else {
        fail(*l, 0, "expected 'basis', 'unit', 'mul' or 'end'");
      }
    }
    if (!has_unit) fail(head, 1, "algebra has no 'unit' line");
    auto a = semantic(head, 1, [&] { return Algebra::make(std::move(t)); });
    ws_.algebras.emplace(head.tokens[1].text, a);
    ws_.order.emplace_back(DeclKind::algebra, head.tokens[1].text);
  }

  void parse_bimodule() {
    auto const& head = lines_[at_];
    require_field(head);
    expect_count(head, 5, "bimodule <name> <left algebra> <right algebra> <dim>");
    fresh_name(head, 1);
    auto l = algebra_ref(head, 2);
    auto r = algebra_ref(head, 3);
    auto d = count(head, 4);
    std::vector<Mat> la(l->dim(), Mat(ws_.p, d, d)), ra(r->dim(), Mat(ws_.p, d, d));
    for (auto const* line : block_body(head)) {
      auto const& kw = line->tokens[0].text;
      if (kw != "left" && kw != "right") fail(*line, 0, "expected 'left', 'right' or 'end'");
      expect_count(*line, 3, "left|right <basis index> <matrix>");
      auto& acts = kw == "left" ? la : ra;
      auto i = count(*line, 1);
      if (i >= acts.size()) fail(*line, 1, "basis index out of range");
      acts[i] = matrix(*line, 2, d, d);
    }
    auto b = semantic(head, 1, [&] { return Bimodule(l, r, d, la, ra); });
    ws_.bimodules.emplace(head.tokens[1].text,
                          BimoduleDecl{head.tokens[2].text, head.tokens[3].text, std::move(b)});
    ws_.order.emplace_back(DeclKind::bimodule, head.tokens[1].text);
  }

  void parse_module() {
    auto const& head = lines_[at_];
    require_field(head);
    expect_count(head, 5, "module <name> <algebra> left|right <dim>");
    fresh_name(head, 1);
    auto a = algebra_ref(head, 2);
    auto side = side_ref(head, 3);
    auto d = count(head, 4);
    std::vector<Mat> acts(a->dim(), Mat(ws_.p, d, d));
    for (auto const* line : block_body(head)) {
      if (line->tokens[0].text != "act") fail(*line, 0, "expected 'act' or 'end'");
      expect_count(*line, 3, "act <basis index> <matrix>");
      auto i = count(*line, 1);
      if (i >= acts.size()) fail(*line, 1, "basis index out of range");
      acts[i] = matrix(*line, 2, d, d);
    }
    auto m = semantic(head, 1, [&] { return Module(a, side, d, acts); });
    ws_.modules.emplace(head.tokens[1].text, ModuleDecl{head.tokens[2].text, std::move(m)});
    ws_.order.emplace_back(DeclKind::module, head.tokens[1].text);
  }

  Bimodule const& bimodule_ref(Line const& line, std::size_t token) const {
    auto it = ws_.bimodules.find(line.tokens[token].text);
    if (it == ws_.bimodules.end()) fail(line, token, "unknown bimodule '" + line.tokens[token].text + "'");
    return it->second.bimodule;
  }

  void parse_context(Line const& line) {
    require_field(line);
    expect_count(line, 6, "context <name> <A> <B> <M> <N>");
    fresh_name(line, 1);
    auto a = algebra_ref(line, 2);
    auto b = algebra_ref(line, 3);
    auto const& m = bimodule_ref(line, 4);
    auto const& n = bimodule_ref(line, 5);
    auto ctx = semantic(line, 1, [&] { return MoritaContext::make(a, b, m, n, line.tokens[1].text); });
    names_.insert(line.tokens[1].text + ".Delta");
    ws_.contexts.emplace(line.tokens[1].text,
                         ContextDecl{line.tokens[2].text, line.tokens[3].text, line.tokens[4].text,
                                     line.tokens[5].text, std::move(ctx)});
    ws_.order.emplace_back(DeclKind::context, line.tokens[1].text);
  }

  void parse_tuple() {
    auto const& head = lines_[at_];
    require_field(head);
    expect_count(head, 5, "tuple <name> <context> <X> <Y>");
    fresh_name(head, 1);
    auto it = ws_.contexts.find(head.tokens[2].text);
    if (it == ws_.contexts.end()) fail(head, 2, "unknown context '" + head.tokens[2].text + "'");
    auto ctx = it->second.context;
    auto x = module_ref(head, 3);
    auto y = module_ref(head, 4);
    if (x.side() != y.side()) fail(head, 4, "X and Y must be modules on the same side");
    Side side = x.side();
    auto view = side == Side::left ? ctx : ctx->opposite();
    std::vector<Mat> fb(view->m().dim(), Mat(ws_.p, y.dim(), x.dim()));
    std::vector<Mat> gb(view->n().dim(), Mat(ws_.p, x.dim(), y.dim()));
    for (auto const* line : block_body(head)) {
      auto const& kw = line->tokens[0].text;
      if (kw != "f" && kw != "g") fail(*line, 0, "expected 'f', 'g' or 'end'");
      expect_count(*line, 3, "f|g <bimodule basis index> <matrix>");
      auto& blocks = kw == "f" ? fb : gb;
      auto i = count(*line, 1);
      if (i >= blocks.size()) fail(*line, 1, "bimodule basis index out of range");
      blocks[i] = kw == "f" ? matrix(*line, 2, y.dim(), x.dim()) : matrix(*line, 2, x.dim(), y.dim());
    }
    auto dm = semantic(head, 1, [&] {
      return DeltaModule::from_blocks(ctx, side, x, y, fb, gb);
    });
    ws_.tuples.emplace(head.tokens[1].text, TupleDecl{head.tokens[2].text, head.tokens[3].text,
                                                      head.tokens[4].text, std::move(dm)});
    ws_.order.emplace_back(DeclKind::tuple, head.tokens[1].text);
  }

  void parse_oracle(Line const& line) {
    require_field(line);
    if (line.tokens.size() < 6) {
      fail(line, line.tokens.size(),
           "usage: oracle <name> <algebra> left|right builtin <kind> | list <modules>");
    }
    fresh_name(line, 1);
    OracleDecl o;
    auto a = algebra_ref(line, 2);
    o.algebra = line.tokens[2].text;
    o.side = side_ref(line, 3);
    o.kind = line.tokens[4].text;
    static std::set<std::string> const kinds = {"projective", "injective", "flat",
                                               "fp-injective", "all"};
    if (o.kind == "builtin") {
      expect_count(line, 6, "oracle <name> <algebra> <side> builtin <kind>");
      o.builtin = line.tokens[5].text;
      if (!kinds.count(o.builtin)) {
        fail(line, 5, "unknown builtin class '" + o.builtin +
                          "' (projective, injective, flat, fp-injective, all)");
      }
    } else if (o.kind == "list") {
      for (std::size_t i = 5; i < line.tokens.size(); ++i) {
        auto m = module_ref(line, i);
        if (m.side() != o.side || !same_algebra(m.algebra(), a)) {
          fail(line, i, "member does not live over the oracle's algebra and side");
        }
        o.members.push_back(line.tokens[i].text);
      }
    } else {
      fail(line, 4, "expected 'builtin' or 'list'");
    }
    ws_.oracles.emplace(line.tokens[1].text, std::move(o));
    ws_.order.emplace_back(DeclKind::oracle, line.tokens[1].text);
  }

  std::string source_;
  std::vector<Line> lines_;
  std::size_t at_ = 0;
  std::set<std::string> names_;
  Workspace ws_;
};

void emit_matrix_line(std::ostringstream& os, char const* kw, std::size_t i, Mat const& m) {
  os << "  " << kw << ' ' << i << ' ' << m.to_string() << '\n';
}

}  // namespace

Workspace parse_workspace(std::string_view text, std::string const& source) {
  return Parser(text, source).run();
}

Workspace load_workspace(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_workspace(ss.str(), path);
}

std::string emit_workspace(Workspace const& ws) {
  std::ostringstream os;
  if (ws.has_field) os << "field " << ws.p << "\n";
  for (auto const& [kind, name] : ws.order) {
    os << '\n';
    switch (kind) {
      case DeclKind::algebra: {
        auto const& a = *ws.algebras.at(name);
        os << "algebra " << name << ' ' << a.dim() << "\n  basis";
        for (auto const& l : a.labels()) os << ' ' << l;
        os << "\n  unit";
        for (auto u : a.unit()) os << ' ' << u;
        os << '\n';
        for (std::size_t i = 0; i < a.dim(); ++i) {
          for (std::size_t j = 0; j < a.dim(); ++j) {
            bool nonzero = false;
            for (std::size_t k = 0; k < a.dim(); ++k) nonzero |= a.constant(i, j, k) != 0;
            if (!nonzero) continue;
            os << "  mul " << i << ' ' << j;
            for (std::size_t k = 0; k < a.dim(); ++k) os << ' ' << a.constant(i, j, k);
            os << '\n';
          }
        }
        os << "end\n";
        break;
      }
      case DeclKind::bimodule: {
        auto const& d = ws.bimodules.at(name);
        os << "bimodule " << name << ' ' << d.left << ' ' << d.right << ' ' << d.bimodule.dim()
           << '\n';
        if (d.bimodule.dim() > 0) {
          for (std::size_t i = 0; i < d.bimodule.left_actions().size(); ++i) {
            emit_matrix_line(os, "left", i, d.bimodule.left_actions()[i]);
          }
          for (std::size_t i = 0; i < d.bimodule.right_actions().size(); ++i) {
            emit_matrix_line(os, "right", i, d.bimodule.right_actions()[i]);
          }
        }
        os << "end\n";
        break;
      }
      case DeclKind::module: {
        auto const& d = ws.modules.at(name);
        os << "module " << name << ' ' << d.algebra << ' ' << to_string(d.module.side()) << ' '
           << d.module.dim() << '\n';
        if (d.module.dim() > 0) {
          for (std::size_t i = 0; i < d.module.actions().size(); ++i) {
            emit_matrix_line(os, "act", i, d.module.action(i));
          }
        }
        os << "end\n";
        break;
      }
      case DeclKind::context: {
        auto const& d = ws.contexts.at(name);
        os << "context " << name << ' ' << d.a << ' ' << d.b << ' ' << d.m << ' ' << d.n << '\n';
        break;
      }
      case DeclKind::tuple: {
        auto const& d = ws.tuples.at(name);
        os << "tuple " << name << ' ' << d.context << ' ' << d.x << ' ' << d.y << '\n';
        if (d.tuple.dim() > 0) {
          for (std::size_t i = 0; i < d.tuple.f_blocks().size(); ++i) {
            emit_matrix_line(os, "f", i, d.tuple.f_blocks()[i]);
          }
          for (std::size_t i = 0; i < d.tuple.g_blocks().size(); ++i) {
            emit_matrix_line(os, "g", i, d.tuple.g_blocks()[i]);
          }
        }
        os << "end\n";
        break;
      }
      case DeclKind::oracle: {
        auto const& d = ws.oracles.at(name);
        os << "oracle " << name << ' ' << d.algebra << ' ' << to_string(d.side) << ' ' << d.kind;
        if (d.kind == "builtin") os << ' ' << d.builtin;
        for (auto const& m : d.members) os << ' ' << m;
        os << '\n';
        break;
      }
    }
  }
  return os.str();
}

bool same_workspace(Workspace const& a, Workspace const& b) {
  if (a.p != b.p || a.has_field != b.has_field || a.order != b.order) return false;
  for (auto const& [name, alg] : a.algebras) {
    auto const& other = b.algebras.at(name);
    if (!alg->same_structure(*other) || alg->labels() != other->labels()) return false;
  }
  for (auto const& [name, d] : a.bimodules) {
    auto const& o = b.bimodules.at(name);
    if (d.left != o.left || d.right != o.right) return false;
    if (d.bimodule.dim() != o.bimodule.dim() ||
        d.bimodule.left_actions() != o.bimodule.left_actions() ||
        d.bimodule.right_actions() != o.bimodule.right_actions()) {
      return false;
    }
  }
  for (auto const& [name, d] : a.modules) {
    auto const& o = b.modules.at(name);
    if (d.algebra != o.algebra || d.module.side() != o.module.side() ||
        d.module.dim() != o.module.dim() || d.module.actions() != o.module.actions()) {
      return false;
    }
  }
  for (auto const& [name, d] : a.contexts) {
    auto const& o = b.contexts.at(name);
    if (d.a != o.a || d.b != o.b || d.m != o.m || d.n != o.n) return false;
  }
  for (auto const& [name, d] : a.tuples) {
    auto const& o = b.tuples.at(name);
    if (d.context != o.context || d.x != o.x || d.y != o.y || d.tuple.side() != o.tuple.side() ||
        d.tuple.f_blocks() != o.tuple.f_blocks() || d.tuple.g_blocks() != o.tuple.g_blocks()) {
      return false;
    }
  }
  for (auto const& [name, d] : a.oracles) {
    auto const& o = b.oracles.at(name);
    if (d.algebra != o.algebra || d.side != o.side || d.kind != o.kind ||
        d.builtin != o.builtin || d.members != o.members) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> fixture_names() { return {"E0", "E1", "E2", "E3"}; }

std::string fixture_text(std::string const& name) {
  if (name == "E0") return fixture_data::e0;
  if (name == "E1") return fixture_data::e1;
  if (name == "E2") return fixture_data::e2;
  if (name == "E3") return fixture_data::e3;
  throw Error("unknown fixture '" + name + "' (E0, E1, E2, E3)");
}

Workspace fixture_workspace(std::string const& name) {
  return parse_workspace(fixture_text(name), "fixtures/" + name + ".ws");
}

ContextPtr fixture_context(std::string const& name) {
  static std::mutex mu;
  static std::map<std::string, ContextPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  auto ws = fixture_workspace(name);
  auto ctx = ws.contexts.at(name).context;
  cache.emplace(name, ctx);
  return ctx;
}

}  // namespace morita
