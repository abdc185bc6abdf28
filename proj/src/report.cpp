#include "morita/report.hpp"

#include <algorithm>
#include <sstream>

namespace morita {

int exit_code(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::consistent_up_to_bound: return 2;
    case Verdict::hypothesis_failure: return 3;
  }
  return 4;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::consistent_up_to_bound: return "consistent-up-to-bound";
    case Verdict::hypothesis_failure: return "hypothesis-failure";
  }
  return "unknown";
}

Clause& CheckReport::add(std::string name, Verdict v, std::string detail) {
  clauses.push_back(Clause{std::move(name), v, std::move(detail), false});
  finalize();
  return clauses.back();
}

void CheckReport::note(std::string name, std::string detail) {
  clauses.push_back(
      Clause{std::move(name), Verdict::consistent_up_to_bound, std::move(detail), true});
}

void CheckReport::hypothesis(std::string text, bool holds) {
  hypotheses.push_back(text + (holds ? ": holds" : ": FAILS"));
  if (!holds) add("hypothesis: " + text, Verdict::hypothesis_failure);
}

void CheckReport::finalize() {
  bool hyp = false, fail = false, bounded = false;
  for (auto const& c : clauses) {
    if (c.informational) continue;
    hyp |= c.verdict == Verdict::hypothesis_failure;
    fail |= c.verdict == Verdict::fail;
    bounded |= c.verdict == Verdict::consistent_up_to_bound;
  }
  verdict = hyp    ? Verdict::hypothesis_failure
            : fail ? Verdict::fail
            : bounded ? Verdict::consistent_up_to_bound
                      : Verdict::pass;
}

void CheckReport::absorb(CheckReport const& sub, std::string const& prefix, bool informational) {
  for (auto c : sub.clauses) {
    c.name = prefix + c.name;
    c.informational |= informational;
    clauses.push_back(std::move(c));
  }
  for (auto const& w : sub.witnesses) witnesses.push_back(prefix + w);
  for (auto const& h : sub.hypotheses) {
    if (std::find(hypotheses.begin(), hypotheses.end(), h) == hypotheses.end()) {
      hypotheses.push_back(h);
    }
  }
  finalize();
}

nlohmann::json to_json(CheckReport const& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["verdict"] = to_string(r.verdict);
  j["exit_code"] = exit_code(r.verdict);
  j["parameters"] = r.parameters;
  j["clauses"] = nlohmann::json::array();
  for (auto const& c : r.clauses) {
    j["clauses"].push_back({{"name", c.name},
                            {"verdict", to_string(c.verdict)},
                            {"detail", c.detail},
                            {"informational", c.informational}});
  }
  j["witnesses"] = r.witnesses;
  j["hypotheses"] = r.hypotheses;
  return j;
}

std::string render_table(CheckReport const& r) {
  std::size_t width = 6;
  for (auto const& c : r.clauses) width = std::max(width, c.name.size());
  width = std::min<std::size_t>(width, 72);
  std::ostringstream os;
  os << "check: " << r.check;
  for (auto const& [k, v] : r.parameters) os << "  " << k << "=" << v;
  os << "\n";
  os << std::string(width + 28, '-') << "\n";
  for (auto const& c : r.clauses) {
    std::string name = c.name.size() > width ? c.name.substr(0, width) : c.name;
    os << name << std::string(width - name.size() + 2, ' ')
       << (c.informational ? "(" + to_string(c.verdict) + ")" : to_string(c.verdict));
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << std::string(width + 28, '-') << "\n";
  for (auto const& h : r.hypotheses) os << "hypothesis  " << h << "\n";
  for (auto const& w : r.witnesses) os << "witness     " << w << "\n";
  os << "verdict: " << to_string(r.verdict) << " (exit " << exit_code(r.verdict) << ")\n";
  return os.str();
}

}  // namespace morita
