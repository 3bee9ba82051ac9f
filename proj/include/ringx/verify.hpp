#pragma once
// Exhaustive adversarial verification of exploration: reachable state-graph
// construction over all legal scheduler choices, liveness via fair-cycle
// (covering-SCC) analysis, shortest counterexample extraction, and the
// distinguishability monitor.

#include <array>
#include <functional>

#include "ringx/execution.hpp"

namespace ringx {

// Anonymity-respecting state fingerprint: robots are interchangeable within
// a (node, phase) bucket.  Packs per-robot (node, phase) bytes (sorted
// unless identified) plus the visited bitmask.  Needs n <= 64, k <= 16.
struct StateKey {
  std::array<std::uint64_t, 3> w{};
  friend bool operator==(const StateKey&, const StateKey&) = default;
  friend bool operator<(const StateKey& a, const StateKey& b) { return a.w < b.w; }
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : k.w) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h);
  }
};

StateKey encode_state(const ExecutionState& s, bool identified = false);
ExecutionState decode_state(const StateKey& key, int n, int k, Model model);
// Minimum key over all 2n rotations/mirrors of the state (mirror swaps
// pending directions and reflects the visited mask).
StateKey encode_state_canonical(const ExecutionState& s);

struct VerifyOptions {
  std::uint64_t max_states = 10'000'000;
  bool identified = false;       // keep robot identities (exact fairness)
  bool symmetry_reduce = false;  // canonicalize keys under ring symmetry
  bool want_counterexample = true;
  std::uint64_t* cumulative_states = nullptr;  // shared budget across calls
};

enum class VerdictKind : std::uint8_t { Explores, Counterexample, BudgetExceeded };
enum class ViolationKind : std::uint8_t { None, BadTerminal, FairCycle };
const char* to_string(VerdictKind k);
const char* to_string(ViolationKind v);

struct Verdict {
  VerdictKind kind = VerdictKind::BudgetExceeded;
  ViolationKind violation = ViolationKind::None;
  std::uint64_t states = 0;
  std::uint64_t edges = 0;
  std::optional<Trace> counterexample;
  std::vector<Configuration> terminal_configs;  // deduped canonical forms
  std::vector<std::uint64_t> rule_fires;        // per protocol rule
  std::string detail;

  bool explores() const { return kind == VerdictKind::Explores; }
};

// Explores iff every terminal state has a full visited set and no fair
// non-terminating execution exists.  Choice sets per model: FSYNC branches
// only on EitherWay resolutions; SSYNC over all nonempty subsets and
// resolutions (choices inducing identical successors deduplicated); ASYNC
// over all single-robot look/move ops.  Counterexamples are shortest by
// BFS layer.
Verdict verify_exhaustive(const Protocol& p, const std::vector<Configuration>& inits,
                          Model model, const VerifyOptions& opt = {});
Verdict verify_exhaustive(const Evaluator& eval, const std::vector<Configuration>& inits,
                          Model model, const VerifyOptions& opt = {});

// Generic fair-cycle detection: graph states 0..n-1, edges labeled with the
// set of robots activated.  A fair cycle exists iff some SCC reachable from
// the roots carries every robot on its internal edges.  Returns a closed
// walk (sequence of states, first == last) or nullopt.
struct LabeledGraph {
  int states = 0;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> succ;
  std::vector<int> roots;
};
std::optional<std::vector<int>> fair_cycle_witness(const LabeledGraph& g, int num_robots);

// Pairs (i, j), i < j, of indistinguishable configurations over the
// subsequence of configuration-changing steps (init included).
std::vector<std::pair<int, int>> monitor_distinguishability(const Trace& t);

}  // namespace ringx
