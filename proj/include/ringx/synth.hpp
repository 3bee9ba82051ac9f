#pragma once
// Exists-forall protocol synthesis: backtracking search over deterministic
// view tables, with table entries assigned lazily on first encounter during
// adversary exploration.  A candidate is accepted only if exhaustive
// verification passes on every initial configuration of the class.

#include "ringx/verify.hpp"

namespace ringx {

// Per-view decisions.  A symmetric view admits only {Disabled, Either}: the
// sensor output is orientation-ambiguous, so a deterministic protocol
// cannot name a specific direction from it.
enum class TableAction : std::uint8_t { Disabled, TowardPlus, TowardMinus, Either };

struct SynthOptions {
  std::uint64_t budget = 100'000'000;  // cumulative verifier states
};

enum class SynthKind : std::uint8_t { Found, NoneExists, BudgetExceeded };
const char* to_string(SynthKind k);

struct SynthesisResult {
  SynthKind kind = SynthKind::BudgetExceeded;
  std::optional<Protocol> protocol;  // witness, verified over the whole class
  std::uint64_t states = 0;          // verifier states explored in total
  std::uint64_t candidates = 0;      // completed table verifications
};

SynthesisResult synthesize(int phi, int n, int k, Model model, InitKind kind,
                           const SynthOptions& opt = {});

}  // namespace ringx
