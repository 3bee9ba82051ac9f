#include "ringx/protocols.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ringx {

namespace {

struct BuiltinDef {
  const char* name;
  const char* description;
  const char* text;
};

// Rule tables transcribed verbatim from the published listings.
const BuiltinDef kBuiltins[] = {
    {"fsync-phi1-large",
     "fully-synchronous exploration, visibility 1, k=5, n>=7",
     "phi=1\n"
     "1A1: 0(1)1 :: ->\n"
     "1A2: 2(1)2 :: <-|->\n"
     "1A3: 0(2)1 :: <-\n"
     "2A4: 2(1)0 :: <-\n"},
    {"fsync-phi1-small",
     "fully-synchronous exploration, visibility 1, 3<=n<=6, k=n-1 (k=4 at n=6)",
     "phi=1\n"
     "1A'1: 0(1)1 :: <-\n"
     "1A'2: 0(1)0 :: <-|->\n"},
    {"async-phi2-k9",
     "asynchronous exploration, visibility 2, k=9, any single 2.group start",
     "phi=2\n"
     "2A'1: 00(1)01 :: ->\n"
     "2A'2: 00(1)1? :: ->\n"
     "2A'3: 00(2)01 :: ->\n"
     "2A'4: 02(1)01 :: ->\n"
     "2A'5: 21(1)01 :: ->\n"
     "2A'6: 21(1)1? :: <-\n"
     "2A'7: 20(1)02 :: <-|->\n"
     "2A'8: 00(2)21 :: <-\n"
     "2A'9: 01(1)21 :: <-\n"
     "2A'10: 20(2)10 :: <-\n"
     "2A'11: 20(1)00 :: <-\n"
     "2A'12: 20(2)21 :: <-\n"
     "2A'13: 21(1)21 :: <-\n"
     "2A'14: 02(2)22 :: ->\n"
     "2A'15: 02(1)32 :: ->\n"},
    {"async-phi2-k7",
     "asynchronous exploration, visibility 2, k=7, single 1.block start",
     "phi=2\n"
     "2A1: 01(1)11 :: <-\n"
     "2A2: 20(1)1? :: <-\n"
     "2A3: 10(1)01 :: <-|->\n"
     "2A4: 00(1)20 :: <-\n"
     "2A5: 10(1)02 :: <-\n"
     "2A6: 21(1)10 :: <-\n"
     "2A7: 20(1)00 :: <-\n"
     "2A8: 00(2)21 :: <-\n"
     "2A9: 01(1)21 :: <-\n"
     "2A10: 20(2)10 :: <-\n"
     "2A11: 20(2)21 :: <-\n"
     "2A12: 21(1)21 :: <-\n"
     "2A13: 02(2)21 :: ->\n"
     "2A14: 02(1)32 :: ->\n"},
    {"async-phi3-k7",
     "asynchronous exploration, visibility 3, k=7, any single 3.group start",
     "phi=3\n"
     "3A1: 000(1)001 :: ->\n"
     "3A2: 000(1)01? :: ->\n"
     "3A3: 000(1)1?? :: ->\n"
     "3A4: 000(2)001 :: ->\n"
     "3A5: 000(2)01? :: ->\n"
     "3A6: 002(1)001 :: ->\n"
     "3A7: 002(1)01? :: ->\n"
     "3A8: 021(1)001 :: ->\n"
     "3A9: 021(1)01? :: ->\n"
     "3A10: 021(1)120 :: <-|->\n"
     "3A11: 220(1)200 :: <-\n"
     "3A12: 022(1)020 :: <-\n"
     "3A13: 000(2)300 :: <-\n"
     "3A14: 001(1)300 :: <-\n"
     "3A15: 000(2)030 :: <-\n"
     "3A16: 001(1)030 :: <-\n"
     "3A17: 200(3)000 :: <-\n"
     "3A18: 201(2)00? :: <-\n"
     "3A19: 202(1)00? :: <-\n"
     "3A20: 200(2)030 :: <-\n"
     "3A21: 201(1)030 :: <-\n"
     "3A22: 000(2)020 :: ->\n"
     "3A23: 000(1)120 :: ->\n"},
    {"async-phi3-k5",
     "asynchronous exploration, visibility 3, k=5, single 1.block start",
     "phi=3\n"
     "3A'1: 011(1)110 :: <-|->\n"
     "3A'2: 120(1)100 :: <-\n"
     "3A'3: 012(1)010 :: <-\n"
     "3A'4: 300(1)000 :: ->\n"
     "3A'5: 120(1)101 :: <-\n"
     "3A'6: 300(1)001 :: ->\n"
     "3A'7: 000(1)300 :: <-\n"
     "3A'8: 000(1)030 :: <-\n"
     "3A'9: 100(3)000 :: <-\n"
     "3A'10: 101(2)000 :: <-\n"
     "3A'11: 102(1)000 :: <-\n"
     "3A'12: 100(1)030 :: <-\n"
     "3A'13: 010(1)030 :: <-\n"
     "3A'14: 010(1)300 :: <-\n"},
};

const std::map<std::string, Protocol>& builtin_map() {
  static const std::map<std::string, Protocol> table = [] {
    std::map<std::string, Protocol> m;
    for (const BuiltinDef& def : kBuiltins)
      m.emplace(def.name, parse_protocol(def.text, def.name));
    return m;
  }();
  return table;
}

struct NamedDef {
  NamedConfig which;
  const char* name;
  std::vector<Mult> pattern;
};

const std::vector<NamedDef>& named_defs() {
  static const std::vector<NamedDef> defs = {
      {NamedConfig::Middle, "Middle", {2, 2, 1, 0, 0, 2, 2}},
      {NamedConfig::TerminalPhi2K9, "Terminal", {2, 0, 4, 2, 1}},
      {NamedConfig::Inter, "Inter", {2, 2, 1, 0, 0, 0, 2}},
      {NamedConfig::FinalPhi2K7, "Final", {2, 0, 4, 1}},
      {NamedConfig::Set, "Set", {2, 3, 0, 0, 2}},
      {NamedConfig::FinalPhi3K7, "FinalPhi3", {2, 2, 0, 3}},
      {NamedConfig::Set2, "Set2", {1, 3, 0, 0, 0, 1}},
      {NamedConfig::Done, "Done", {1, 1, 0, 3}},
  };
  return defs;
}

const NamedDef& named_def(NamedConfig which) {
  return named_defs()[static_cast<size_t>(which)];
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const BuiltinDef& def : kBuiltins) v.push_back(def.name);
    return v;
  }();
  return names;
}

bool is_builtin(const std::string& name) {
  return builtin_map().count(name) > 0;
}

const Protocol& builtin(const std::string& name) {
  auto it = builtin_map().find(name);
  if (it == builtin_map().end()) throw ParseError("unknown builtin protocol: " + name);
  return it->second;
}

std::string builtin_description(const std::string& name) {
  for (const BuiltinDef& def : kBuiltins)
    if (name == def.name) return def.description;
  return "";
}

const char* to_string(NamedConfig which) { return named_def(which).name; }

std::optional<NamedConfig> named_from_string(const std::string& s) {
  for (const NamedDef& def : named_defs())
    if (s == def.name) return def.which;
  // Disambiguated aliases for the two patterns the listings both call Final.
  if (s == "FinalPhi2K7") return NamedConfig::FinalPhi2K7;
  if (s == "FinalPhi3K7") return NamedConfig::FinalPhi3K7;
  return std::nullopt;
}

const std::vector<Mult>& named_pattern(NamedConfig which) {
  return named_def(which).pattern;
}

int named_robot_count(NamedConfig which) {
  const auto& p = named_pattern(which);
  return std::accumulate(p.begin(), p.end(), 0);
}

const std::vector<NamedConfig>& all_named() {
  static const std::vector<NamedConfig> v = [] {
    std::vector<NamedConfig> out;
    for (const NamedDef& def : named_defs()) out.push_back(def.which);
    return out;
  }();
  return v;
}

std::optional<NamedHit> detect_named(const Configuration& c, NamedConfig which) {
  const std::vector<Mult>& pat = named_pattern(which);
  int len = static_cast<int>(pat.size());
  if (c.n() < len) return std::nullopt;
  if (c.robots() != named_robot_count(which)) return std::nullopt;
  for (int anchor = 0; anchor < c.n(); ++anchor) {
    for (Dir o : {Dir::CW, Dir::CCW}) {
      bool ok = true;
      for (int j = 0; j < len && ok; ++j)
        ok = c.at(anchor + (o == Dir::CW ? j : -j)) == pat[j];
      if (ok) return NamedHit{anchor, o};
    }
  }
  return std::nullopt;
}

std::vector<NamedConfig> detect_all_named(const Configuration& c) {
  std::vector<NamedConfig> out;
  for (NamedConfig which : all_named())
    if (detect_named(c, which)) out.push_back(which);
  return out;
}

const char* to_string(InitKind kind) {
  switch (kind) {
    case InitKind::SingleOneBlock: return "single-block";
    case InitKind::SinglePhiGroup: return "single-phi-group";
    default: return "any-towerless-single-phi-group";
  }
}

std::vector<Configuration> initial_configs(const InitClass& cls) {
  if (cls.k < 1) throw std::invalid_argument("need at least one robot");
  if (cls.k > cls.n) throw std::invalid_argument("more robots than nodes");

  std::vector<Configuration> out;
  if (cls.kind == InitKind::SingleOneBlock) {
    std::vector<int> m(cls.n, 0);
    for (int i = 0; i < cls.k; ++i) m[i] = 1;
    out.emplace_back(m);
    return out;
  }

  if (cls.phi < 1) throw std::invalid_argument("phi must be >= 1");
  // Gap compositions (g_1..g_{k-1}) in [1..phi]; the outer gap must exceed
  // phi so the chain is one maximal group (cyclic covers excluded).
  std::set<std::string> seen;
  std::vector<int> gaps(std::max(cls.k - 1, 0), 1);
  while (true) {
    int span = std::accumulate(gaps.begin(), gaps.end(), 0);
    if (cls.n - 1 - span >= cls.phi) {  // outer gap = n - span > phi
      std::vector<int> m(cls.n, 0);
      int pos = 0;
      m[0] = 1;
      for (int g : gaps) { pos += g; m[pos] = 1; }
      Configuration c(m);
      if (seen.insert(c.canonical().str()).second) out.push_back(std::move(c));
    }
    int i = static_cast<int>(gaps.size()) - 1;
    while (i >= 0 && gaps[i] == cls.phi) gaps[i--] = 1;
    if (i < 0) break;
    ++gaps[i];
  }
  return out;
}

}  // namespace ringx
