#pragma once
// Guarded movement rules over sensor views: parsing, mirror-orientation
// matching, wildcard slots, determinism validation, and a memoizing
// per-protocol evaluator.

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ringx/ring.hpp"

namespace ringx {

// Set of global directions a robot may take; {CW, CCW} arises only from
// EitherWay actions or double-orientation matches (adversary resolves).
struct MoveChoice {
  std::uint8_t bits = 0;

  static constexpr std::uint8_t bit(Dir d) { return d == Dir::CW ? 1 : 2; }
  void add(Dir d) { bits |= bit(d); }
  bool contains(Dir d) const { return bits & bit(d); }
  bool empty() const { return bits == 0; }
  bool two_way() const { return bits == 3; }
  int count() const { return (bits & 1) + (bits >> 1); }
  Dir only() const;  // requires exactly one direction

  friend bool operator==(const MoveChoice&, const MoveChoice&) = default;
};

inline constexpr int kWildcard = -1;

struct Guard {
  std::vector<std::int8_t> slots;  // concrete 0..9 or kWildcard; center concrete >= 1

  int phi() const { return (static_cast<int>(slots.size()) - 1) / 2; }
  bool matches(const View& v) const;           // guard slots against v as given
  bool matches_reversed(const View& v) const;  // guard slots against reversed v
  bool palindromic() const;                    // equal to own reversal, wildcards included
  std::string str() const;                     // "21(1)1?"
};

enum class Action : std::uint8_t {
  TowardPlus,   // -> : toward the guard's x_{+1} side as written
  TowardMinus,  // <- : toward the guard's x_{-1} side
  EitherWay     // <-|-> : scheduler resolves
};
const char* to_string(Action a);

struct Rule {
  std::string label;
  Guard guard;
  Action action = Action::TowardPlus;
};

struct Protocol {
  std::string name;
  int phi = 1;
  std::vector<Rule> rules;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two distinct rules matched one view; the paper's protocols are
// case-disjoint, so overlap is an evaluation error, not a priority.
class RuleConflictError : public std::runtime_error {
 public:
  RuleConflictError(const std::string& a, const std::string& b, const View& v);
  std::string label_a, label_b;
};

// File format: header "phi=<int>", then one rule per line
// "LABEL: GUARD :: ACTION" with GUARD like 21(1)1? and ACTION one of
// ->  <-  <-|-> ; '#' starts a comment.
Protocol parse_protocol(const std::string& text, const std::string& name = "");
std::string format_protocol(const Protocol& p);

// Forward match binds TowardPlus->CW / TowardMinus->CCW; a mirror match
// flips both.  EitherWay yields {CW,CCW} on any match.  Result is the
// union over matching orientations.
MoveChoice match_rule(const Rule& r, const View& v);

struct Match {
  MoveChoice moves;
  int rule = -1;  // index of the matching rule, -1 if disabled
};

struct Diagnostic {
  enum class Severity : std::uint8_t { Conflict, Warning, Info };
  Severity severity;
  View view;
  std::vector<std::string> labels;
  std::string message;
};

// Enumerates every view with entries <= max_mult (center >= 1).
// Conflict: view matched by two distinct rules.  Warning: one rule matches
// both orientations with conflicting concrete directions (adversary
// resolves as {CW,CCW}).  Info: a rule matches the view mirror-only.
std::vector<Diagnostic> validate(const Protocol& p, int max_mult);

// View -> MoveChoice evaluation point.  Implementations memoize; use one
// instance per thread.
class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual int phi() const = 0;
  virtual Match eval_view(const View& v) const = 0;
  virtual std::string rule_label(int rule) const = 0;
  virtual int rule_count() const = 0;

  Match at(const Configuration& c, int node) const {
    return eval_view(view_at(c, node, phi()));
  }
  void note_fired(int rule) const {
    if (rule >= 0 && rule < static_cast<int>(fires_.size())) ++fires_[rule];
  }
  const std::vector<std::uint64_t>& fires() const { return fires_; }

 protected:
  mutable std::vector<std::uint64_t> fires_;
};

class ProtocolEvaluator final : public Evaluator {
 public:
  explicit ProtocolEvaluator(Protocol p);
  int phi() const override { return p_.phi; }
  Match eval_view(const View& v) const override;  // throws RuleConflictError
  std::string rule_label(int rule) const override;
  int rule_count() const override { return static_cast<int>(p_.rules.size()); }
  const Protocol& protocol() const { return p_; }

 private:
  Protocol p_;
  mutable std::unordered_map<std::uint32_t, Match> memo_;
};

// Uncached convenience matching the spec operation; throws on conflicts.
Match enabled_moves(const Protocol& p, const Configuration& c, int node);

}  // namespace ringx
