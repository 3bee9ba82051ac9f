#include "ringx/execution.hpp"

#include <algorithm>
#include <bit>

namespace ringx {

const char* to_string(Model m) {
  switch (m) {
    case Model::FSYNC: return "fsync";
    case Model::SSYNC: return "ssync";
    default: return "async";
  }
}

std::optional<Model> model_from_string(const std::string& s) {
  if (s == "fsync") return Model::FSYNC;
  if (s == "ssync") return Model::SSYNC;
  if (s == "async") return Model::ASYNC;
  return std::nullopt;
}

const char* to_string(OpKind op) {
  switch (op) {
    case OpKind::Cycle: return "cycle";
    case OpKind::Look: return "look";
    default: return "move";
  }
}

const char* to_string(Outcome o) {
  return o == Outcome::Terminated ? "terminated" : "max_steps";
}

Configuration ExecutionState::config() const {
  std::vector<int> m(n, 0);
  for (const RobotState& r : robots) ++m[r.node];
  return Configuration(m);
}

bool ExecutionState::all_visited() const {
  std::uint64_t full = n >= 64 ? ~0ull : (1ull << n) - 1;
  return (visited & full) == full;
}

int ExecutionState::visited_count() const {
  return std::popcount(visited);
}

bool ExecutionState::any_pending() const {
  return std::any_of(robots.begin(), robots.end(),
                     [](const RobotState& r) { return r.pending(); });
}

ExecutionState init_state(const Configuration& c, Model model, bool allow_towers) {
  if (!allow_towers && !c.towerless())
    throw std::invalid_argument("initial configuration has a tower");
  if (c.n() > 64) throw std::invalid_argument("rings larger than 64 nodes unsupported");
  if (c.robots() < 1) throw std::invalid_argument("no robots");
  ExecutionState s;
  s.model = model;
  s.n = c.n();
  for (int j = 0; j < c.n(); ++j)
    for (int i = 0; i < c.at(j); ++i) {
      s.robots.push_back({static_cast<std::uint8_t>(j), Phase::Idle});
      s.visited |= 1ull << j;
    }
  return s;
}

std::vector<RobotEnabled> enabled_robots(const ExecutionState& s, const Evaluator& eval) {
  std::vector<RobotEnabled> out(s.robots.size());
  Configuration c = s.config();
  for (size_t i = 0; i < s.robots.size(); ++i) {
    const RobotState& r = s.robots[i];
    if (r.pending()) {
      out[i].pending = true;
      out[i].moves.add(r.pending_dir());
    } else {
      Match m = eval.at(c, r.node);
      out[i].moves = m.moves;
      out[i].rule = m.rule;
    }
  }
  return out;
}

bool is_terminal(const ExecutionState& s, const Evaluator& eval) {
  if (s.any_pending()) return false;
  Configuration c = s.config();
  for (const RobotState& r : s.robots)
    if (!eval.at(c, r.node).moves.empty()) return false;
  return true;
}

namespace {

int wrap(int node, int n) {
  int r = node % n;
  return r < 0 ? r + n : r;
}

void apply_move(ExecutionState& s, int robot, Dir d) {
  RobotState& r = s.robots[robot];
  r.node = static_cast<std::uint8_t>(wrap(r.node + dir_delta(d), s.n));
  s.visited |= 1ull << r.node;
}

}  // namespace

ExecutionState step(const ExecutionState& s, const Evaluator& eval, const SchedulerChoice& ch) {
  ExecutionState out = s;
  std::vector<RobotEnabled> en = enabled_robots(s, eval);
  std::vector<bool> selected(s.robots.size(), false);
  for (const RobotOp& op : ch.ops) {
    if (op.robot >= s.robots.size()) throw IllegalChoiceError("robot index out of range");
    if (selected[op.robot]) throw IllegalChoiceError("robot selected twice");
    selected[op.robot] = true;
  }

  switch (s.model) {
    case Model::FSYNC: {
      // Every enabled robot executes the full cycle, simultaneously.
      for (size_t i = 0; i < s.robots.size(); ++i) {
        bool enabled = !en[i].moves.empty();
        if (enabled && !selected[i]) throw IllegalChoiceError("fsync must select all enabled robots");
        if (!enabled && selected[i]) throw IllegalChoiceError("fsync selected a disabled robot");
      }
      for (const RobotOp& op : ch.ops) {
        if (op.op != OpKind::Cycle) throw IllegalChoiceError("fsync ops must be cycles");
        if (!op.dir || !en[op.robot].moves.contains(*op.dir))
          throw IllegalChoiceError("direction not offered by the matched rule");
        apply_move(out, op.robot, *op.dir);
      }
      break;
    }
    case Model::SSYNC: {
      if (ch.ops.empty()) throw IllegalChoiceError("ssync selection must be nonempty");
      for (const RobotOp& op : ch.ops) {
        if (op.op != OpKind::Cycle) throw IllegalChoiceError("ssync ops must be cycles");
        if (en[op.robot].moves.empty()) {
          if (op.dir) throw IllegalChoiceError("disabled robot cannot move");
          // selected but disabled: activation only
        } else {
          if (!op.dir || !en[op.robot].moves.contains(*op.dir))
            throw IllegalChoiceError("direction not offered by the matched rule");
          apply_move(out, op.robot, *op.dir);
        }
      }
      break;
    }
    case Model::ASYNC: {
      if (ch.ops.size() != 1) throw IllegalChoiceError("async steps are single-robot");
      const RobotOp& op = ch.ops[0];
      const RobotState& r = s.robots[op.robot];
      if (op.op == OpKind::Look) {
        if (r.pending()) throw IllegalChoiceError("pending robot owes a move, not a look");
        const MoveChoice& mc = en[op.robot].moves;
        if (mc.empty()) {
          if (op.dir) throw IllegalChoiceError("disabled look cannot carry a direction");
          // no-op activation; the look is still recorded by the caller
        } else {
          Dir d = mc.two_way() ? (op.dir ? *op.dir
                                         : throw IllegalChoiceError("two-way look needs a resolution"))
                               : mc.only();
          if (!mc.contains(d)) throw IllegalChoiceError("direction not offered by the matched rule");
          out.robots[op.robot].phase = pending_phase(d);
        }
      } else if (op.op == OpKind::Move) {
        if (!r.pending()) throw IllegalChoiceError("move on a robot with no pending move");
        apply_move(out, op.robot, r.pending_dir());
        out.robots[op.robot].phase = Phase::Idle;
      } else {
        throw IllegalChoiceError("async ops are look or move");
      }
      break;
    }
  }
  return out;
}

namespace {

class TraceSink final : public StepSink {
 public:
  explicit TraceSink(Trace& t, const Evaluator& eval) : t_(t), eval_(eval) {}
  void on_step(const ExecutionState& after, const SchedulerChoice& choice,
               std::uint64_t newly, std::span<const int> rules) override {
    StepRecord rec;
    rec.choice = choice;
    rec.config = after.config();
    for (int j = 0; j < after.n; ++j)
      if (newly & (1ull << j)) rec.new_visited.push_back(j);
    for (int r : rules) rec.rules.push_back(r < 0 ? "" : eval_.rule_label(r));
    t_.steps.push_back(std::move(rec));
  }

 private:
  Trace& t_;
  const Evaluator& eval_;
};

}  // namespace

SimResult simulate_core(const Evaluator& eval, const Configuration& start, Model model,
                        std::uint64_t seed, std::int64_t max_steps, StepSink* sink,
                        bool allow_towers) {
  ExecutionState s = init_state(start, model, allow_towers);
  std::mt19937_64 rng(seed);
  int k = s.k();
  const int credit_limit = k * s.n;  // forced scheduling threshold
  std::vector<int> starved(k, 0);

  SchedulerChoice ch;
  std::vector<int> fired;
  SimResult res;

  auto rand_dir = [&](const MoveChoice& mc) {
    if (mc.two_way()) return (rng() & 1) ? Dir::CW : Dir::CCW;
    return mc.only();
  };

  for (res.steps = 0; res.steps < max_steps; ++res.steps) {
    std::vector<RobotEnabled> en = enabled_robots(s, eval);
    bool terminal = !s.any_pending() &&
                    std::all_of(en.begin(), en.end(),
                                [](const RobotEnabled& e) { return e.moves.empty(); });
    if (terminal) {
      res.outcome = Outcome::Terminated;
      break;
    }

    ch.ops.clear();
    fired.clear();

    switch (model) {
      case Model::FSYNC: {
        for (int i = 0; i < k; ++i) {
          if (en[i].moves.empty()) continue;
          ch.ops.push_back({static_cast<std::uint8_t>(i), OpKind::Cycle, rand_dir(en[i].moves)});
          fired.push_back(en[i].rule);
        }
        break;
      }
      case Model::SSYNC: {
        std::uint64_t pick = rng();
        for (int i = 0; i < k; ++i) {
          bool take = (pick >> i) & 1 || starved[i] >= credit_limit;
          if (!take) continue;
          if (en[i].moves.empty()) {
            ch.ops.push_back({static_cast<std::uint8_t>(i), OpKind::Cycle, std::nullopt});
            fired.push_back(-1);
          } else {
            ch.ops.push_back({static_cast<std::uint8_t>(i), OpKind::Cycle, rand_dir(en[i].moves)});
            fired.push_back(en[i].rule);
          }
        }
        if (ch.ops.empty()) {
          int i = static_cast<int>(rng() % k);
          if (en[i].moves.empty()) {
            ch.ops.push_back({static_cast<std::uint8_t>(i), OpKind::Cycle, std::nullopt});
            fired.push_back(-1);
          } else {
            ch.ops.push_back({static_cast<std::uint8_t>(i), OpKind::Cycle, rand_dir(en[i].moves)});
            fired.push_back(en[i].rule);
          }
        }
        break;
      }
      case Model::ASYNC: {
        int chosen = -1;
        for (int i = 0; i < k; ++i)
          if (starved[i] >= credit_limit) { chosen = i; break; }
        if (chosen < 0) {
          // Bias toward robots with an effective op; pure uniform choice
          // wastes most activations on no-op looks.
          std::vector<int> useful;
          for (int i = 0; i < k; ++i)
            if (en[i].pending || !en[i].moves.empty()) useful.push_back(i);
          chosen = useful[rng() % useful.size()];
        }
        if (en[chosen].pending) {
          ch.ops.push_back({static_cast<std::uint8_t>(chosen), OpKind::Move, std::nullopt});
          fired.push_back(-1);
        } else if (en[chosen].moves.empty()) {
          ch.ops.push_back({static_cast<std::uint8_t>(chosen), OpKind::Look, std::nullopt});
          fired.push_back(-1);
        } else {
          ch.ops.push_back({static_cast<std::uint8_t>(chosen), OpKind::Look, rand_dir(en[chosen].moves)});
          fired.push_back(en[chosen].rule);
        }
        break;
      }
    }

    std::uint64_t before = s.visited;
    s = step(s, eval, ch);

    if (model != Model::FSYNC) {
      for (int i = 0; i < k; ++i) ++starved[i];
      for (const RobotOp& op : ch.ops) starved[op.robot] = 0;
    }
    for (int r : fired) eval.note_fired(r);
    if (sink) sink->on_step(s, ch, s.visited & ~before, fired);
  }

  res.final = std::move(s);
  return res;
}

Trace simulate(const Protocol& p, const Configuration& start, Model model,
               std::uint64_t seed, std::int64_t max_steps) {
  ProtocolEvaluator eval(p);
  Trace t;
  t.protocol = p.name;
  t.phi = p.phi;
  t.n = start.n();
  t.k = start.robots();
  t.model = model;
  t.seed = seed;
  t.init = start;
  TraceSink sink(t, eval);
  SimResult res = simulate_core(eval, start, model, seed, max_steps, &sink);
  t.outcome = res.outcome;
  t.visited_count = res.final.visited_count();
  return t;
}

ExecutionState replay(const Trace& t, const Protocol& p) {
  ProtocolEvaluator eval(p);
  ExecutionState s = init_state(t.init, t.model, true);
  for (size_t i = 0; i < t.steps.size(); ++i) {
    s = step(s, eval, t.steps[i].choice);
    if (s.config() != t.steps[i].config)
      throw std::runtime_error("trace replay diverged at step " + std::to_string(i));
  }
  return s;
}

}  // namespace ringx
