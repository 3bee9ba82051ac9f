#pragma once
// JSON-lines trace files.  Line 0 is the run header, one line per step,
// and a final outcome line.

#include <iosfwd>

#include "ringx/execution.hpp"

namespace ringx {

void write_trace_jsonl(const Trace& t, std::ostream& out);
std::string trace_to_jsonl(const Trace& t);
Trace read_trace_jsonl(std::istream& in);
Trace trace_from_jsonl(const std::string& text);

// Streaming writer for long simulations; lines match write_trace_jsonl.
class JsonlTraceWriter final : public StepSink {
 public:
  JsonlTraceWriter(std::ostream& out, const Evaluator& eval);
  void write_header(const std::string& protocol, int phi, const Configuration& init,
                    Model model, std::uint64_t seed);
  void on_step(const ExecutionState& after, const SchedulerChoice& choice,
               std::uint64_t newly_visited, std::span<const int> rules) override;
  void write_tail(Outcome outcome, int visited_count);

 private:
  std::ostream& out_;
  const Evaluator& eval_;
  std::size_t steps_ = 0;
};

}  // namespace ringx
