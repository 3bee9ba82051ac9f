#pragma once
// Built-in rule tables for the six shipped exploration protocols, detectors
// for milestone configurations, and initial-configuration class generators.

#include <optional>

#include "ringx/rules.hpp"

namespace ringx {

const std::vector<std::string>& builtin_names();
bool is_builtin(const std::string& name);
const Protocol& builtin(const std::string& name);  // throws ParseError on unknown
std::string builtin_description(const std::string& name);

// Milestone multiplicity patterns marking phase transitions and termination.
enum class NamedConfig : std::uint8_t {
  Middle,          // 2,2,1,0,0,2,2   (phi=2, k=9 organization target)
  TerminalPhi2K9,  // 2,0,4,2,1       (phi=2, k=9 final)
  Inter,           // 2,2,1,0,0,0,2   (phi=2, k=7 preparation target)
  FinalPhi2K7,     // 2,0,4,1         (phi=2, k=7 final)
  Set,             // 2,3,0,0,2       (phi=3, k=7 set-up target)
  FinalPhi3K7,     // 2,2,0,3         (phi=3, k=7 final)
  Set2,            // 1,3,0,0,0,1     (phi=3, k=5 set-up target)
  Done             // 1,1,0,3         (phi=3, k=5 final)
};

const char* to_string(NamedConfig which);
std::optional<NamedConfig> named_from_string(const std::string& s);
const std::vector<Mult>& named_pattern(NamedConfig which);
int named_robot_count(NamedConfig which);
const std::vector<NamedConfig>& all_named();

struct NamedHit {
  int anchor = 0;
  Dir orientation = Dir::CW;
};

// First (anchor, orientation) in scan order (anchor ascending, CW before
// CCW) whose cyclic window matches the pattern; every node outside the
// window must be empty.  nullopt when the pattern is absent.
std::optional<NamedHit> detect_named(const Configuration& c, NamedConfig which);
std::vector<NamedConfig> detect_all_named(const Configuration& c);

enum class InitKind : std::uint8_t {
  SingleOneBlock,             // the unique 1^k 0^(n-k) block
  SinglePhiGroup,             // towerless, all robots in one chain of gaps <= phi
  AnyTowerlessSinglePhiGroup  // alias of SinglePhiGroup
};

const char* to_string(InitKind kind);

struct InitClass {
  InitKind kind = InitKind::SingleOneBlock;
  int n = 0;
  int k = 0;
  int phi = 1;
};

// All configurations of the class, one representative per
// indistinguishability class, anchored with a robot at node 0.
std::vector<Configuration> initial_configs(const InitClass& cls);

}  // namespace ringx
