#include "ringx/rules.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ringx {

Dir MoveChoice::only() const {
  if (count() != 1) throw std::logic_error("MoveChoice::only on non-singleton");
  return bits == 1 ? Dir::CW : Dir::CCW;
}

const char* to_string(Action a) {
  switch (a) {
    case Action::TowardPlus: return "->";
    case Action::TowardMinus: return "<-";
    default: return "<-|->";
  }
}

bool Guard::matches(const View& v) const {
  if (slots.size() != v.window.size()) return false;
  for (size_t i = 0; i < slots.size(); ++i)
    if (slots[i] != kWildcard && slots[i] != static_cast<std::int8_t>(v.window[i]))
      return false;
  return true;
}

bool Guard::matches_reversed(const View& v) const {
  size_t len = slots.size();
  if (len != v.window.size()) return false;
  for (size_t i = 0; i < len; ++i)
    if (slots[i] != kWildcard && slots[i] != static_cast<std::int8_t>(v.window[len - 1 - i]))
      return false;
  return true;
}

bool Guard::palindromic() const {
  size_t len = slots.size();
  for (size_t i = 0; i < len / 2; ++i)
    if (slots[i] != slots[len - 1 - i]) return false;
  return true;
}

std::string Guard::str() const {
  std::string s;
  int p = phi();
  for (int i = 0; i < static_cast<int>(slots.size()); ++i) {
    char c = slots[i] == kWildcard ? '?' : static_cast<char>('0' + slots[i]);
    if (i == p) { s += '('; s += c; s += ')'; }
    else s += c;
  }
  return s;
}

RuleConflictError::RuleConflictError(const std::string& a, const std::string& b, const View& v)
    : std::runtime_error("rules " + a + " and " + b + " both match view " + v.str()),
      label_a(a), label_b(b) {}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

Guard parse_guard(const std::string& text, int phi) {
  Guard g;
  int center_at = -1;
  bool in_paren = false;
  for (char c : text) {
    if (c == '(') {
      if (in_paren || center_at >= 0) throw ParseError("bad parentheses in guard: " + text);
      in_paren = true;
      center_at = static_cast<int>(g.slots.size());
    } else if (c == ')') {
      if (!in_paren || center_at != static_cast<int>(g.slots.size()) - 1)
        throw ParseError("bad parentheses in guard: " + text);
      in_paren = false;
    } else if (c == '?') {
      g.slots.push_back(kWildcard);
    } else if (c >= '0' && c <= '9') {
      g.slots.push_back(static_cast<std::int8_t>(c - '0'));
    } else {
      throw ParseError(std::string("bad guard character '") + c + "' in: " + text);
    }
  }
  if (in_paren) throw ParseError("unclosed parenthesis in guard: " + text);
  if (static_cast<int>(g.slots.size()) != 2 * phi + 1)
    throw ParseError("guard " + text + " has wrong length for phi=" + std::to_string(phi));
  if (center_at != phi)
    throw ParseError("guard " + text + " center is not the middle slot");
  if (g.slots[phi] == kWildcard)
    throw ParseError("guard " + text + " has a wildcard center");
  if (g.slots[phi] < 1)
    throw ParseError("guard " + text + " center must be >= 1");
  return g;
}

Action parse_action(const std::string& text) {
  if (text == "->") return Action::TowardPlus;
  if (text == "<-") return Action::TowardMinus;
  if (text == "<-|->") return Action::EitherWay;
  throw ParseError("unknown action token: " + text);
}

// Views pack into 4-bit digits when short and small; larger views skip the memo.
constexpr std::uint32_t kUnpackable = 0xffffffffu;

std::uint32_t pack_view(const View& v) {
  if (v.window.size() > 7) return kUnpackable;
  std::uint32_t key = static_cast<std::uint32_t>(v.window.size()) << 28;
  for (size_t i = 0; i < v.window.size(); ++i) {
    if (v.window[i] > 15) return kUnpackable;
    key |= static_cast<std::uint32_t>(v.window[i]) << (4 * i);
  }
  return key;
}

}  // namespace

Protocol parse_protocol(const std::string& text, const std::string& name) {
  Protocol p;
  p.name = name;
  std::istringstream in(text);
  std::string line;
  bool have_phi = false;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    if (!have_phi) {
      if (line.rfind("phi=", 0) != 0) throw ParseError("expected phi=<int> header, got: " + line);
      p.phi = std::stoi(line.substr(4));
      if (p.phi < 1) throw ParseError("phi must be >= 1");
      have_phi = true;
      continue;
    }
    size_t colon = line.find(':');
    size_t sep = line.find("::");
    if (colon == std::string::npos || sep == std::string::npos || colon == sep)
      throw ParseError("malformed rule line: " + line);
    Rule r;
    r.label = strip(line.substr(0, colon));
    if (r.label.empty()) throw ParseError("empty rule label: " + line);
    r.guard = parse_guard(strip(line.substr(colon + 1, sep - colon - 1)), p.phi);
    r.action = parse_action(strip(line.substr(sep + 2)));
    for (const Rule& prev : p.rules)
      if (prev.label == r.label) throw ParseError("duplicate rule label: " + r.label);
    p.rules.push_back(std::move(r));
  }
  if (!have_phi) throw ParseError("missing phi=<int> header");
  return p;
}

std::string format_protocol(const Protocol& p) {
  std::string out;
  if (!p.name.empty()) out += "# " + p.name + "\n";
  out += "phi=" + std::to_string(p.phi) + "\n";
  for (const Rule& r : p.rules)
    out += r.label + ": " + r.guard.str() + " :: " + to_string(r.action) + "\n";
  return out;
}

MoveChoice match_rule(const Rule& r, const View& v) {
  MoveChoice m;
  if (r.guard.matches(v)) {
    if (r.action == Action::EitherWay) { m.add(Dir::CW); m.add(Dir::CCW); }
    else m.add(r.action == Action::TowardPlus ? Dir::CW : Dir::CCW);
  }
  if (r.guard.matches_reversed(v)) {
    if (r.action == Action::EitherWay) { m.add(Dir::CW); m.add(Dir::CCW); }
    else m.add(r.action == Action::TowardPlus ? Dir::CCW : Dir::CW);
  }
  return m;
}

ProtocolEvaluator::ProtocolEvaluator(Protocol p) : p_(std::move(p)) {
  fires_.assign(p_.rules.size(), 0);
}

Match ProtocolEvaluator::eval_view(const View& v) const {
  std::uint32_t key = pack_view(v);
  if (key != kUnpackable) {
    auto it = memo_.find(key);
    // Cached conflicts (rule == -2) fall through so the error carries labels.
    if (it != memo_.end() && it->second.rule != -2) return it->second;
  }
  Match m;
  for (int i = 0; i < static_cast<int>(p_.rules.size()); ++i) {
    MoveChoice mc = match_rule(p_.rules[i], v);
    if (mc.empty()) continue;
    if (m.rule >= 0) {
      if (key != kUnpackable) memo_[key] = Match{{}, -2};
      throw RuleConflictError(p_.rules[m.rule].label, p_.rules[i].label, v);
    }
    m.moves = mc;
    m.rule = i;
  }
  if (key != kUnpackable) memo_[key] = m;
  return m;
}

std::string ProtocolEvaluator::rule_label(int rule) const {
  if (rule < 0 || rule >= static_cast<int>(p_.rules.size())) return "";
  return p_.rules[rule].label;
}

Match enabled_moves(const Protocol& p, const Configuration& c, int node) {
  ProtocolEvaluator eval(p);
  return eval.at(c, node);
}

std::vector<Diagnostic> validate(const Protocol& p, int max_mult) {
  if (max_mult < 1) throw std::invalid_argument("max_mult must be >= 1");
  int len = 2 * p.phi + 1;
  double total = 1;
  for (int i = 0; i < len; ++i) total *= max_mult + 1;
  if (total > 5e7) throw std::invalid_argument("view space too large to enumerate");

  std::vector<Diagnostic> out;
  View v;
  v.window.assign(len, 0);
  std::function<void(int)> walk = [&](int slot) {
    if (slot == len) {
      if (v.center() < 1) return;
      int first = -1;
      for (int i = 0; i < static_cast<int>(p.rules.size()); ++i) {
        const Rule& r = p.rules[i];
        bool fwd = r.guard.matches(v);
        bool mir = r.guard.matches_reversed(v);
        if (!fwd && !mir) continue;
        if (first >= 0) {
          out.push_back({Diagnostic::Severity::Conflict, v,
                         {p.rules[first].label, r.label},
                         "two rules match the same view"});
        } else {
          first = i;
          if (fwd && mir && r.action != Action::EitherWay && !v.symmetric())
            out.push_back({Diagnostic::Severity::Warning, v, {r.label},
                           "matches both orientations with conflicting directions; "
                           "adversary resolves"});
          if (fwd && mir && r.action != Action::EitherWay && v.symmetric())
            out.push_back({Diagnostic::Severity::Warning, v, {r.label},
                           "symmetric view with a concrete direction; adversary resolves"});
          if (!fwd && mir)
            out.push_back({Diagnostic::Severity::Info, v, {r.label},
                           "matches mirror orientation only"});
        }
      }
      return;
    }
    for (int m = 0; m <= max_mult; ++m) {
      v.window[slot] = static_cast<Mult>(m);
      walk(slot + 1);
    }
  };
  walk(0);
  return out;
}

}  // namespace ringx
