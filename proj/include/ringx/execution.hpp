#pragma once
// Operational semantics of the FSYNC/SSYNC/ASYNC scheduler models over a
// protocol.  Robot identities are tracked internally and are invisible to
// protocols.  ASYNC splits the Look-Compute-Move cycle into an atomic
// LookCompute (snapshot + direction decision) and an atomic Move, so a
// robot can move on an outdated view.

#include <cstdint>
#include <optional>
#include <random>
#include <span>

#include "ringx/protocols.hpp"

namespace ringx {

enum class Model : std::uint8_t { FSYNC, SSYNC, ASYNC };
const char* to_string(Model m);
std::optional<Model> model_from_string(const std::string& s);

enum class Phase : std::uint8_t { Idle, PendingCW, PendingCCW };

struct RobotState {
  std::uint8_t node = 0;
  Phase phase = Phase::Idle;

  bool pending() const { return phase != Phase::Idle; }
  Dir pending_dir() const { return phase == Phase::PendingCW ? Dir::CW : Dir::CCW; }

  friend bool operator==(const RobotState&, const RobotState&) = default;
};

inline Phase pending_phase(Dir d) {
  return d == Dir::CW ? Phase::PendingCW : Phase::PendingCCW;
}

struct ExecutionState {
  Model model = Model::FSYNC;
  int n = 0;
  std::vector<RobotState> robots;
  std::uint64_t visited = 0;  // node bitmask; the verifier needs n <= 64

  int k() const { return static_cast<int>(robots.size()); }
  Configuration config() const;
  bool all_visited() const;
  int visited_count() const;
  bool any_pending() const;

  friend bool operator==(const ExecutionState&, const ExecutionState&) = default;
};

// One Idle robot per unit of multiplicity; visited = occupied set.  Initial
// towers are rejected unless allow_towers is set (research override).
ExecutionState init_state(const Configuration& c, Model model, bool allow_towers = false);

enum class OpKind : std::uint8_t {
  Cycle,  // FSYNC/SSYNC full Look-Compute-Move
  Look,   // ASYNC snapshot + decision
  Move    // ASYNC stored move
};
const char* to_string(OpKind op);

struct RobotOp {
  std::uint8_t robot = 0;
  OpKind op = OpKind::Cycle;
  std::optional<Dir> dir;  // resolved direction; absent for no-op activations
};

// FSYNC: one Cycle op per enabled robot (exactly).  SSYNC: a nonempty
// subset of robots; selected-but-disabled robots carry no direction and
// no-op.  ASYNC: exactly one Look (Idle robot) or Move (pending robot).
struct SchedulerChoice {
  std::vector<RobotOp> ops;
};

struct RobotEnabled {
  MoveChoice moves;
  int rule = -1;        // matching rule, -1 when disabled
  bool pending = false; // pending robots are movable; moves holds the stored dir
};

std::vector<RobotEnabled> enabled_robots(const ExecutionState& s, const Evaluator& eval);
bool is_terminal(const ExecutionState& s, const Evaluator& eval);

class IllegalChoiceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ExecutionState step(const ExecutionState& s, const Evaluator& eval, const SchedulerChoice& ch);

enum class Outcome : std::uint8_t { Terminated, MaxStepsReached };
const char* to_string(Outcome o);

struct StepRecord {
  SchedulerChoice choice;
  Configuration config;            // configuration after the step
  std::vector<int> new_visited;    // nodes first visited by this step
  std::vector<std::string> rules;  // fired rule labels aligned with choice.ops
};

struct Trace {
  std::string protocol;
  int phi = 1;
  int n = 0;
  int k = 0;
  Model model = Model::FSYNC;
  std::uint64_t seed = 0;
  Configuration init;
  std::vector<StepRecord> steps;
  Outcome outcome = Outcome::MaxStepsReached;
  int visited_count = 0;
  // For fair-cycle counterexamples: step index where the lasso's cycle starts.
  std::optional<std::size_t> lasso_start;
};

// Observer for the simulation core; rules[i] is the rule fired by ops[i]
// (-1 for none).
struct StepSink {
  virtual ~StepSink() = default;
  virtual void on_step(const ExecutionState& after, const SchedulerChoice& choice,
                       std::uint64_t newly_visited, std::span<const int> rules) = 0;
};

struct SimResult {
  Outcome outcome = Outcome::MaxStepsReached;
  std::int64_t steps = 0;
  ExecutionState final;
};

// Pseudo-random scheduler, fair by construction: a robot unactivated for
// k*n consecutive choices is forcibly scheduled next.  EitherWay
// resolutions are uniform.  Deterministic in (seed, protocol, start).
SimResult simulate_core(const Evaluator& eval, const Configuration& start, Model model,
                        std::uint64_t seed, std::int64_t max_steps, StepSink* sink,
                        bool allow_towers = false);

Trace simulate(const Protocol& p, const Configuration& start, Model model,
               std::uint64_t seed, std::int64_t max_steps);

// Re-applies the recorded choices from init, checking every configuration;
// throws on divergence.  Returns the final state.
ExecutionState replay(const Trace& t, const Protocol& p);

}  // namespace ringx
