#include "ringx/verify.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

namespace ringx {

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Explores: return "Explores";
    case VerdictKind::Counterexample: return "Counterexample";
    default: return "BudgetExceeded";
  }
}

const char* to_string(ViolationKind v) {
  switch (v) {
    case ViolationKind::BadTerminal: return "BadTerminal";
    case ViolationKind::FairCycle: return "FairCycle";
    default: return "None";
  }
}

// ---------------------------------------------------------------------------
// State keys

namespace {

std::uint8_t robot_byte(std::uint8_t node, Phase phase) {
  return static_cast<std::uint8_t>(node | (static_cast<std::uint8_t>(phase) << 6));
}

StateKey pack_bytes(const std::uint8_t* bytes, int k, std::uint64_t visited) {
  StateKey key;
  for (int i = 0; i < k; ++i)
    key.w[i / 8] |= static_cast<std::uint64_t>(bytes[i]) << (8 * (i % 8));
  key.w[2] = visited;
  return key;
}

}  // namespace

StateKey encode_state(const ExecutionState& s, bool identified) {
  int k = s.k();
  if (k > 16 || s.n > 64) throw std::invalid_argument("state key needs k <= 16, n <= 64");
  std::array<std::uint8_t, 16> bytes{};
  for (int i = 0; i < k; ++i) bytes[i] = robot_byte(s.robots[i].node, s.robots[i].phase);
  if (!identified) std::sort(bytes.begin(), bytes.begin() + k);
  return pack_bytes(bytes.data(), k, s.visited);
}

ExecutionState decode_state(const StateKey& key, int n, int k, Model model) {
  ExecutionState s;
  s.model = model;
  s.n = n;
  s.visited = key.w[2];
  s.robots.resize(k);
  for (int i = 0; i < k; ++i) {
    std::uint8_t b = static_cast<std::uint8_t>(key.w[i / 8] >> (8 * (i % 8)));
    s.robots[i].node = b & 0x3f;
    s.robots[i].phase = static_cast<Phase>(b >> 6);
  }
  return s;
}

StateKey encode_state_canonical(const ExecutionState& s) {
  int k = s.k();
  int n = s.n;
  if (k > 16 || n > 64) throw std::invalid_argument("state key needs k <= 16, n <= 64");
  StateKey best;
  bool first = true;
  std::array<std::uint8_t, 16> bytes{};
  for (int mirror = 0; mirror < 2; ++mirror) {
    for (int off = 0; off < n; ++off) {
      std::uint64_t vis = 0;
      for (int j = 0; j < n; ++j)
        if (s.visited & (1ull << j)) {
          int jj = mirror ? (off - j) % n : (j + off) % n;
          if (jj < 0) jj += n;
          vis |= 1ull << jj;
        }
      for (int i = 0; i < k; ++i) {
        int node = mirror ? (off - s.robots[i].node) % n : (s.robots[i].node + off) % n;
        if (node < 0) node += n;
        Phase ph = s.robots[i].phase;
        if (mirror && ph != Phase::Idle)
          ph = ph == Phase::PendingCW ? Phase::PendingCCW : Phase::PendingCW;
        bytes[i] = robot_byte(static_cast<std::uint8_t>(node), ph);
      }
      std::sort(bytes.begin(), bytes.begin() + k);
      StateKey cand = pack_bytes(bytes.data(), k, vis);
      if (first || cand < best) { best = cand; first = false; }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Successor enumeration

namespace {

void move_robot(ExecutionState& s, int robot, Dir d) {
  int node = s.robots[robot].node + dir_delta(d);
  if (node < 0) node += s.n;
  if (node >= s.n) node -= s.n;
  s.robots[robot].node = static_cast<std::uint8_t>(node);
  s.visited |= 1ull << node;
}

struct SuccEmit {
  const ExecutionState& state;
  std::uint16_t labels;
  const SchedulerChoice* choice;  // null unless requested
  std::span<const int> rules;
};

// Enumerates all legal one-step successors.  Labels carry the activated
// robots; SSYNC label sets are maximal (all disabled robots co-selected),
// which only strengthens fairness coverage and is always a legal choice.
template <class Cb>
void for_each_successor(const ExecutionState& s, const Evaluator& eval,
                        const std::vector<RobotEnabled>& en, bool with_choice,
                        const Cb& cb) {
  int k = s.k();
  ExecutionState scratch;
  SchedulerChoice choice;
  std::vector<int> rules;

  auto emit = [&](std::uint16_t labels) {
    cb(SuccEmit{scratch, labels, with_choice ? &choice : nullptr,
                std::span<const int>(rules)});
  };

  switch (s.model) {
    case Model::FSYNC: {
      std::vector<int> enabled;
      int two_way = 0;
      for (int i = 0; i < k; ++i)
        if (!en[i].moves.empty()) {
          enabled.push_back(i);
          if (en[i].moves.two_way()) ++two_way;
        }
      if (enabled.empty()) return;
      std::uint16_t full = static_cast<std::uint16_t>((1u << k) - 1);
      for (std::uint32_t res = 0; res < (1u << two_way); ++res) {
        scratch = s;
        choice.ops.clear();
        rules.clear();
        int t = 0;
        for (int i : enabled) {
          Dir d = en[i].moves.two_way()
                      ? (((res >> t++) & 1) ? Dir::CCW : Dir::CW)
                      : en[i].moves.only();
          move_robot(scratch, i, d);
          eval.note_fired(en[i].rule);
          if (with_choice) {
            choice.ops.push_back({static_cast<std::uint8_t>(i), OpKind::Cycle, d});
            rules.push_back(en[i].rule);
          }
        }
        emit(full);
      }
      return;
    }

    case Model::SSYNC: {
      std::vector<int> enabled;
      std::uint16_t disabled_mask = 0;
      for (int i = 0; i < k; ++i) {
        if (en[i].moves.empty()) disabled_mask |= static_cast<std::uint16_t>(1u << i);
        else enabled.push_back(i);
      }
      if (enabled.empty()) return;

      std::vector<std::array<Dir, 2>> dirs(enabled.size());
      std::vector<int> radix(enabled.size());
      for (size_t j = 0; j < enabled.size(); ++j) {
        int cnt = 0;
        for (Dir d : {Dir::CW, Dir::CCW})
          if (en[enabled[j]].moves.contains(d)) dirs[j][cnt++] = d;
        radix[j] = 1 + cnt;  // 0 = stay, 1.. = move
      }

      std::vector<int> digit(enabled.size(), 0);
      while (true) {
        scratch = s;
        choice.ops.clear();
        rules.clear();
        std::uint16_t movers = 0;
        for (size_t j = 0; j < enabled.size(); ++j) {
          if (digit[j] == 0) continue;
          int i = enabled[j];
          Dir d = dirs[j][digit[j] - 1];
          move_robot(scratch, i, d);
          movers |= static_cast<std::uint16_t>(1u << i);
          eval.note_fired(en[i].rule);
          if (with_choice) {
            choice.ops.push_back({static_cast<std::uint8_t>(i), OpKind::Cycle, d});
            rules.push_back(en[i].rule);
          }
        }
        if (movers != 0 || disabled_mask != 0) {
          if (with_choice) {
            for (int i = 0; i < k; ++i)
              if (disabled_mask & (1u << i)) {
                choice.ops.push_back({static_cast<std::uint8_t>(i), OpKind::Cycle, std::nullopt});
                rules.push_back(-1);
              }
          }
          emit(movers | disabled_mask);
        }
        size_t j = 0;
        while (j < digit.size() && ++digit[j] == radix[j]) digit[j++] = 0;
        if (j == digit.size()) break;
      }
      return;
    }

    case Model::ASYNC: {
      for (int i = 0; i < k; ++i) {
        const RobotEnabled& e = en[i];
        std::uint16_t label = static_cast<std::uint16_t>(1u << i);
        if (e.pending) {
          scratch = s;
          move_robot(scratch, i, s.robots[i].pending_dir());
          scratch.robots[i].phase = Phase::Idle;
          if (with_choice) {
            choice.ops.assign(1, {static_cast<std::uint8_t>(i), OpKind::Move, std::nullopt});
            rules.assign(1, -1);
          }
          emit(label);
        } else if (e.moves.empty()) {
          scratch = s;  // no-op look, still an activation
          if (with_choice) {
            choice.ops.assign(1, {static_cast<std::uint8_t>(i), OpKind::Look, std::nullopt});
            rules.assign(1, -1);
          }
          emit(label);
        } else {
          for (Dir d : {Dir::CW, Dir::CCW}) {
            if (!e.moves.contains(d)) continue;
            scratch = s;
            scratch.robots[i].phase = pending_phase(d);
            eval.note_fired(e.rule);
            if (with_choice) {
              choice.ops.assign(1, {static_cast<std::uint8_t>(i), OpKind::Look, d});
              rules.assign(1, e.rule);
            }
            emit(label);
          }
        }
      }
      return;
    }
  }
}

bool state_terminal(const std::vector<RobotEnabled>& en) {
  for (const RobotEnabled& e : en)
    if (e.pending || !e.moves.empty()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// SCC analysis (iterative Tarjan) and covering walks

struct Csr {
  std::uint32_t nstates = 0;
  const std::uint64_t* row = nullptr;  // nstates + 1
  const std::uint32_t* to = nullptr;
  const std::uint32_t* label = nullptr;  // widened to 32 bits
};

struct SccInfo {
  std::vector<std::int32_t> comp;        // -1: unvisited (unreachable)
  std::vector<std::uint32_t> unions;     // per component: label union
  std::vector<std::uint8_t> has_edge;    // per component: any internal edge
  int ncomp = 0;
};

SccInfo scc_decompose(const Csr& g) {
  SccInfo out;
  out.comp.assign(g.nstates, -1);
  std::vector<std::uint32_t> index(g.nstates, 0), low(g.nstates, 0);
  std::vector<std::uint8_t> on_stack(g.nstates, 0);
  std::vector<std::uint32_t> stack;
  std::uint32_t counter = 1;

  struct Frame { std::uint32_t v; std::uint64_t edge; };
  std::vector<Frame> call;

  for (std::uint32_t root = 0; root < g.nstates; ++root) {
    if (index[root]) continue;
    call.push_back({root, g.row[root]});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < g.row[f.v + 1]) {
        std::uint32_t w = g.to[f.edge++];
        if (!index[w]) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, g.row[w]});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        std::uint32_t v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          while (true) {
            std::uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            out.comp[w] = out.ncomp;
            if (w == v) break;
          }
          ++out.ncomp;
        }
      }
    }
  }

  out.unions.assign(out.ncomp, 0);
  out.has_edge.assign(out.ncomp, 0);
  for (std::uint32_t v = 0; v < g.nstates; ++v)
    for (std::uint64_t e = g.row[v]; e < g.row[v + 1]; ++e) {
      std::uint32_t w = g.to[e];
      if (out.comp[v] == out.comp[w]) {
        out.unions[out.comp[v]] |= g.label[e];
        out.has_edge[out.comp[v]] = 1;
      }
    }
  return out;
}

// Shortest path u -> goal restricted to one component; returns the node
// sequence starting after u (empty when u == goal).
std::vector<std::uint32_t> comp_path(const Csr& g, const SccInfo& scc, int comp,
                                     std::uint32_t from, std::uint32_t goal) {
  if (from == goal) return {};
  std::unordered_map<std::uint32_t, std::uint32_t> prev;
  std::vector<std::uint32_t> queue{from};
  prev[from] = from;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint32_t v = queue[qi];
    for (std::uint64_t e = g.row[v]; e < g.row[v + 1]; ++e) {
      std::uint32_t w = g.to[e];
      if (scc.comp[w] != comp || prev.count(w)) continue;
      prev[w] = v;
      if (w == goal) {
        std::vector<std::uint32_t> path;
        for (std::uint32_t x = goal; x != from; x = prev[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  throw std::logic_error("component path not found");
}

// Closed walk within a covering component, starting and ending at entry,
// whose edge labels cover `need`.
std::vector<std::uint32_t> covering_walk(const Csr& g, const SccInfo& scc, int comp,
                                         std::uint32_t entry, std::uint32_t need) {
  std::vector<std::uint32_t> walk{entry};
  std::uint32_t cur = entry;
  while (need) {
    // BFS from cur to the nearest edge contributing a needed label.
    std::unordered_map<std::uint32_t, std::uint32_t> prev;
    std::vector<std::uint32_t> queue{cur};
    prev[cur] = cur;
    bool found = false;
    for (size_t qi = 0; qi < queue.size() && !found; ++qi) {
      std::uint32_t v = queue[qi];
      for (std::uint64_t e = g.row[v]; e < g.row[v + 1]; ++e) {
        std::uint32_t w = g.to[e];
        if (scc.comp[w] != comp) continue;
        if (g.label[e] & need) {
          std::vector<std::uint32_t> path;
          for (std::uint32_t x = v; x != cur; x = prev[x]) path.push_back(x);
          std::reverse(path.begin(), path.end());
          for (std::uint32_t x : path) walk.push_back(x);
          walk.push_back(w);
          need &= ~g.label[e];
          cur = w;
          found = true;
          break;
        }
        if (!prev.count(w)) {
          prev[w] = v;
          queue.push_back(w);
        }
      }
    }
    if (!found) throw std::logic_error("covering walk construction failed");
  }
  for (std::uint32_t x : comp_path(g, scc, comp, cur, entry)) walk.push_back(x);
  return walk;
}

}  // namespace

// ---------------------------------------------------------------------------
// Exhaustive verification

namespace {

struct BuiltGraph {
  std::vector<StateKey> keys;
  std::unordered_map<StateKey, std::uint32_t, StateKeyHash> ids;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint64_t> row;
  std::vector<std::uint32_t> eto;
  std::vector<std::uint32_t> elabel;
  std::vector<std::uint8_t> flags;  // 1 terminal, 2 all visited
  std::vector<std::uint32_t> roots;
  int n = 0, k = 0;
  Model model = Model::FSYNC;
  bool budget_hit = false;
};

constexpr std::uint32_t kNoParent = 0xffffffffu;

// Remaps a scheduler choice expressed against `from` robot coordinates onto
// an equivalent selection of `onto` robots (same (node, phase) multiset).
SchedulerChoice remap_choice(const SchedulerChoice& ch, const ExecutionState& from,
                             const ExecutionState& onto) {
  std::vector<std::vector<int>> buckets(64 * 4);
  for (int i = 0; i < onto.k(); ++i)
    buckets[robot_byte(onto.robots[i].node, onto.robots[i].phase)].push_back(i);
  std::vector<int> map(from.k(), -1);
  std::vector<size_t> used(64 * 4, 0);
  for (int i = 0; i < from.k(); ++i) {
    std::uint8_t b = robot_byte(from.robots[i].node, from.robots[i].phase);
    map[i] = buckets[b].at(used[b]++);
  }
  SchedulerChoice out = ch;
  for (RobotOp& op : out.ops) op.robot = static_cast<std::uint8_t>(map[op.robot]);
  return out;
}

}  // namespace

Verdict verify_exhaustive(const Evaluator& eval, const std::vector<Configuration>& inits,
                          Model model, const VerifyOptions& opt) {
  if (inits.empty()) throw std::invalid_argument("no initial configurations");
  if (opt.identified && opt.symmetry_reduce)
    throw std::invalid_argument("symmetry reduction requires anonymous keys");

  BuiltGraph g;
  g.model = model;
  g.n = inits[0].n();
  g.k = inits[0].robots();
  for (const Configuration& c : inits)
    if (c.n() != g.n || c.robots() != g.k)
      throw std::invalid_argument("initial configurations disagree on n or k");
  if (g.n > 64 || g.k > 16)
    throw std::invalid_argument("verifier needs n <= 64 and k <= 16");

  auto enc = [&](const ExecutionState& st) {
    return opt.symmetry_reduce ? encode_state_canonical(st) : encode_state(st, opt.identified);
  };

  Verdict verdict;
  auto intern = [&](const StateKey& key) -> std::pair<std::uint32_t, bool> {
    auto [it, fresh] = g.ids.try_emplace(key, static_cast<std::uint32_t>(g.keys.size()));
    if (fresh) {
      g.keys.push_back(key);
      g.parent.push_back(kNoParent);
      g.flags.push_back(0);
      if (opt.cumulative_states) ++*opt.cumulative_states;
      if (g.keys.size() > opt.max_states ||
          (opt.cumulative_states && *opt.cumulative_states > opt.max_states))
        g.budget_hit = true;
    }
    return {it->second, fresh};
  };

  for (const Configuration& c : inits) {
    auto [id, fresh] = intern(enc(init_state(c, model)));
    if (fresh) g.roots.push_back(id);
  }

  std::set<std::string> terminal_seen;
  std::vector<std::pair<StateKey, std::uint16_t>> dedup;

  // Processing order is discovery order, so the first bad terminal found is
  // the shortest-by-BFS-layer violation: stop expanding right there.
  std::uint32_t bad_terminal = kNoParent;

  for (std::uint32_t id = 0; id < g.keys.size() && !g.budget_hit; ++id) {
    g.row.push_back(g.eto.size());
    ExecutionState st = decode_state(g.keys[id], g.n, g.k, model);
    std::vector<RobotEnabled> en = enabled_robots(st, eval);

    if (state_terminal(en)) {
      g.flags[id] |= 1;
      if (st.all_visited()) g.flags[id] |= 2;
      if (terminal_seen.size() < 4096) {
        Configuration canon = st.config().canonical();
        if (terminal_seen.insert(canon.str()).second)
          verdict.terminal_configs.push_back(std::move(canon));
      }
      if (!(g.flags[id] & 2)) { bad_terminal = id; break; }
      continue;
    }

    dedup.clear();
    for_each_successor(st, eval, en, false, [&](const SuccEmit& e) {
      if (g.budget_hit) return;
      StateKey key = enc(e.state);
      for (const auto& [pk, pl] : dedup)
        if (pk == key && pl == e.labels) return;
      dedup.push_back({key, e.labels});
      auto [to, fresh] = intern(key);
      g.eto.push_back(to);
      g.elabel.push_back(e.labels);
      if (fresh && g.parent[to] == kNoParent) g.parent[to] = id;
    });
  }

  verdict.states = g.keys.size();
  verdict.edges = g.eto.size();
  verdict.rule_fires = eval.fires();

  if (g.budget_hit) {
    verdict.kind = VerdictKind::BudgetExceeded;
    verdict.detail = "state budget exhausted";
    return verdict;
  }

  // Liveness needs the complete graph; skip it when a bad terminal already
  // won (it is the earliest violation by construction).
  Csr csr;
  SccInfo scc;
  std::uint32_t cycle_entry = kNoParent;
  const std::uint32_t full = static_cast<std::uint32_t>((1u << g.k) - 1);
  if (bad_terminal == kNoParent) {
    g.row.push_back(g.eto.size());
    csr = Csr{static_cast<std::uint32_t>(g.keys.size()), g.row.data(), g.eto.data(),
              g.elabel.data()};
    scc = scc_decompose(csr);
    for (std::uint32_t id = 0; id < g.keys.size(); ++id) {
      int c = scc.comp[id];
      if (c >= 0 && scc.has_edge[c] && scc.unions[c] == full) { cycle_entry = id; break; }
    }
  }

  if (bad_terminal == kNoParent && cycle_entry == kNoParent) {
    verdict.kind = VerdictKind::Explores;
    return verdict;
  }

  verdict.kind = VerdictKind::Counterexample;
  bool pick_terminal = bad_terminal != kNoParent &&
                       (cycle_entry == kNoParent || bad_terminal <= cycle_entry);
  verdict.violation = pick_terminal ? ViolationKind::BadTerminal : ViolationKind::FairCycle;

  if (!opt.want_counterexample) return verdict;
  if (opt.symmetry_reduce) {
    verdict.detail = "counterexample trace unavailable under symmetry reduction";
    return verdict;
  }

  // Reconstruct a concrete trace: BFS-tree path from a root, plus (for fair
  // cycles) a covering closed walk inside the SCC.
  std::uint32_t target = pick_terminal ? bad_terminal : cycle_entry;
  std::vector<std::uint32_t> path;
  for (std::uint32_t u = target;; u = g.parent[u]) {
    path.push_back(u);
    if (g.parent[u] == kNoParent) break;
  }
  std::reverse(path.begin(), path.end());

  std::vector<std::uint32_t> ids_seq = path;
  std::size_t lasso_start = path.size() - 1;
  if (!pick_terminal) {
    std::vector<std::uint32_t> walk =
        covering_walk(csr, scc, scc.comp[target], target, full);
    for (size_t i = 1; i < walk.size(); ++i) ids_seq.push_back(walk[i]);
  }

  Trace trace;
  trace.model = model;
  trace.n = g.n;
  trace.k = g.k;
  ExecutionState running = init_state(decode_state(g.keys[ids_seq[0]], g.n, g.k, model).config(), model);
  trace.init = running.config();
  for (size_t i = 0; i + 1 < ids_seq.size(); ++i) {
    // Robot order in the decoded representative differs from the running
    // frame; visited masks and position multisets agree, so choices remap
    // bucket-by-bucket.
    ExecutionState canon = decode_state(g.keys[ids_seq[i]], g.n, g.k, model);
    std::vector<RobotEnabled> en = enabled_robots(canon, eval);
    const StateKey want = g.keys[ids_seq[i + 1]];
    bool done = false;
    StepRecord rec;
    for_each_successor(canon, eval, en, true, [&](const SuccEmit& e) {
      if (done || !(enc(e.state) == want)) return;
      done = true;
      rec.choice = *e.choice;
      for (int r : e.rules) rec.rules.push_back(r < 0 ? "" : eval.rule_label(r));
    });
    if (!done) throw std::logic_error("counterexample reconstruction failed");
    SchedulerChoice mapped = remap_choice(rec.choice, canon, running);
    std::uint64_t before = running.visited;
    running = step(running, eval, mapped);
    rec.choice = std::move(mapped);
    rec.config = running.config();
    for (int j = 0; j < g.n; ++j)
      if ((running.visited & ~before) & (1ull << j)) rec.new_visited.push_back(j);
    trace.steps.push_back(std::move(rec));
  }
  trace.visited_count = running.visited_count();
  trace.outcome = pick_terminal ? Outcome::Terminated : Outcome::MaxStepsReached;
  if (!pick_terminal) trace.lasso_start = lasso_start;
  verdict.counterexample = std::move(trace);
  return verdict;
}

Verdict verify_exhaustive(const Protocol& p, const std::vector<Configuration>& inits,
                          Model model, const VerifyOptions& opt) {
  ProtocolEvaluator eval(p);
  return verify_exhaustive(eval, inits, model, opt);
}

// ---------------------------------------------------------------------------

std::optional<std::vector<int>> fair_cycle_witness(const LabeledGraph& g, int num_robots) {
  if (num_robots < 1 || num_robots > 32) throw std::invalid_argument("robot count out of range");

  // Restrict to states reachable from the roots.
  std::vector<std::uint8_t> reach(g.states, 0);
  std::vector<int> queue;
  for (int r : g.roots)
    if (!reach.at(r)) { reach[r] = 1; queue.push_back(r); }
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (auto [w, lbl] : g.succ[queue[qi]])
      if (!reach.at(w)) { reach[w] = 1; queue.push_back(w); }

  std::vector<std::uint64_t> row(1, 0);
  std::vector<std::uint32_t> to, label;
  for (int v = 0; v < g.states; ++v) {
    if (reach[v])
      for (auto [w, lbl] : g.succ[v])
        if (reach[w]) { to.push_back(w); label.push_back(lbl); }
    row.push_back(to.size());
  }
  Csr csr{static_cast<std::uint32_t>(g.states), row.data(), to.data(), label.data()};
  SccInfo scc = scc_decompose(csr);

  std::uint32_t full = num_robots == 32 ? 0xffffffffu : (1u << num_robots) - 1;
  for (int v = 0; v < g.states; ++v) {
    if (!reach[v]) continue;
    int c = scc.comp[v];
    if (c >= 0 && scc.has_edge[c] && scc.unions[c] == full) {
      std::vector<std::uint32_t> walk = covering_walk(csr, scc, c, v, full);
      return std::vector<int>(walk.begin(), walk.end());
    }
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> monitor_distinguishability(const Trace& t) {
  std::vector<std::string> canon;
  if (t.init.n() > 0) canon.push_back(t.init.canonical().str());
  Configuration prev = t.init;
  for (const StepRecord& rec : t.steps) {
    if (rec.config == prev) continue;
    canon.push_back(rec.config.canonical().str());
    prev = rec.config;
  }
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < canon.size(); ++i)
    for (size_t j = i + 1; j < canon.size(); ++j)
      if (canon[i] == canon[j]) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

}  // namespace ringx
