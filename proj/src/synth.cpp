#include "ringx/synth.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ringx {

const char* to_string(SynthKind k) {
  switch (k) {
    case SynthKind::Found: return "Found";
    case SynthKind::NoneExists: return "NoneExists";
    default: return "BudgetExceeded";
  }
}

namespace {

// Signals a decision point: the exploration reached a view with no table
// entry yet.  Carries the canonical reading.
struct UnassignedView {
  View view;
};

std::uint32_t pack_view(const View& v) {
  std::uint32_t key = static_cast<std::uint32_t>(v.window.size()) << 28;
  for (size_t i = 0; i < v.window.size(); ++i)
    key |= static_cast<std::uint32_t>(v.window[i]) << (4 * i);
  return key;
}

View canonical_view(const View& v) {
  View rev = v.reversed();
  return rev.window < v.window ? rev : v;
}

class TableEvaluator final : public Evaluator {
 public:
  explicit TableEvaluator(int phi) : phi_(phi) {}

  int phi() const override { return phi_; }
  int rule_count() const override { return static_cast<int>(entries_.size()); }
  std::string rule_label(int rule) const override {
    auto it = views_.find(static_cast<std::uint32_t>(rule));
    return it == views_.end() ? "" : "T" + it->second.str();
  }

  Match eval_view(const View& v) const override {
    View canon = canonical_view(v);
    std::uint32_t key = pack_view(canon);
    auto it = entries_.find(key);
    if (it == entries_.end()) throw UnassignedView{canon};
    Match m;
    switch (it->second) {
      case TableAction::Disabled:
        return m;
      case TableAction::Either:
        m.moves.add(Dir::CW);
        m.moves.add(Dir::CCW);
        break;
      case TableAction::TowardPlus:
      case TableAction::TowardMinus: {
        // The action names a side of the canonical reading; map it back to
        // a global direction through the orientation that canonical reading
        // was taken in.
        Dir plus = (v.window == canon.window) ? Dir::CW : Dir::CCW;
        m.moves.add(it->second == TableAction::TowardPlus ? plus : opposite(plus));
        break;
      }
    }
    m.rule = static_cast<int>(key);
    return m;
  }

  void assign(const View& canon, TableAction a) {
    std::uint32_t key = pack_view(canon);
    entries_[key] = a;
    views_.emplace(key, canon);
  }
  void unassign(const View& canon) { entries_.erase(pack_view(canon)); }

  Protocol to_protocol(const std::string& name) const {
    Protocol p;
    p.name = name;
    p.phi = phi_;
    std::map<std::uint32_t, TableAction> ordered(entries_.begin(), entries_.end());
    int i = 0;
    for (const auto& [key, action] : ordered) {
      if (action == TableAction::Disabled) continue;
      Rule r;
      r.label = "S" + std::to_string(++i);
      const View& v = views_.at(key);
      for (Mult m : v.window) r.guard.slots.push_back(static_cast<std::int8_t>(m));
      r.action = action == TableAction::Either
                     ? Action::EitherWay
                     : (action == TableAction::TowardPlus ? Action::TowardPlus
                                                          : Action::TowardMinus);
      p.rules.push_back(std::move(r));
    }
    return p;
  }

 private:
  int phi_;
  std::unordered_map<std::uint32_t, TableAction> entries_;
  std::unordered_map<std::uint32_t, View> views_;
};

}  // namespace

SynthesisResult synthesize(int phi, int n, int k, Model model, InitKind kind,
                           const SynthOptions& opt) {
  std::vector<Configuration> inits = initial_configs({kind, n, k, phi});
  if (inits.empty()) throw std::invalid_argument("initial class is empty for these parameters");

  TableEvaluator eval(phi);
  SynthesisResult res;

  VerifyOptions vopt;
  vopt.identified = true;  // exact fairness; robot count is small here
  vopt.want_counterexample = false;
  vopt.max_states = opt.budget;
  vopt.cumulative_states = &res.states;

  auto options_for = [](const View& v) -> std::vector<TableAction> {
    if (v.symmetric()) return {TableAction::Either, TableAction::Disabled};
    return {TableAction::TowardMinus, TableAction::TowardPlus, TableAction::Either,
            TableAction::Disabled};
  };

  std::function<SynthKind()> dfs = [&]() -> SynthKind {
    if (res.states > opt.budget) return SynthKind::BudgetExceeded;
    try {
      Verdict v = verify_exhaustive(eval, inits, model, vopt);
      ++res.candidates;
      if (v.kind == VerdictKind::BudgetExceeded) return SynthKind::BudgetExceeded;
      return v.explores() ? SynthKind::Found : SynthKind::NoneExists;
    } catch (const UnassignedView& uv) {
      for (TableAction a : options_for(uv.view)) {
        eval.assign(uv.view, a);
        SynthKind r = dfs();
        if (r != SynthKind::NoneExists) return r;  // Found keeps the assignment
      }
      eval.unassign(uv.view);
      return SynthKind::NoneExists;
    }
  };

  res.kind = dfs();
  if (res.kind == SynthKind::Found) {
    std::string name = std::string("synth-") + to_string(model) + "-phi" +
                       std::to_string(phi) + "-n" + std::to_string(n) + "-k" +
                       std::to_string(k);
    res.protocol = eval.to_protocol(name);
  }
  return res;
}

}  // namespace ringx
