#include "ringx/trace_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ringx {

using nlohmann::json;

namespace {

json op_to_json(const RobotOp& op, const std::string& rule) {
  json j;
  j["robot"] = op.robot;
  j["op"] = to_string(op.op);
  if (!rule.empty()) j["rule"] = rule;
  if (op.dir) j["dir"] = to_string(*op.dir);
  return j;
}

RobotOp op_from_json(const json& j, std::string& rule) {
  RobotOp op;
  op.robot = j.at("robot").get<std::uint8_t>();
  std::string kind = j.at("op").get<std::string>();
  op.op = kind == "cycle" ? OpKind::Cycle : kind == "look" ? OpKind::Look : OpKind::Move;
  rule = j.value("rule", "");
  if (j.contains("dir")) op.dir = j["dir"] == "cw" ? Dir::CW : Dir::CCW;
  return op;
}

}  // namespace

void write_trace_jsonl(const Trace& t, std::ostream& out) {
  json header;
  header["protocol"] = t.protocol;
  header["phi"] = t.phi;
  header["n"] = t.n;
  header["k"] = t.k;
  header["model"] = to_string(t.model);
  header["seed"] = t.seed;
  header["init"] = t.init.str();
  out << header.dump() << '\n';

  for (size_t i = 0; i < t.steps.size(); ++i) {
    const StepRecord& rec = t.steps[i];
    json line;
    line["step"] = i;
    json ops = json::array();
    for (size_t o = 0; o < rec.choice.ops.size(); ++o)
      ops.push_back(op_to_json(rec.choice.ops[o],
                               o < rec.rules.size() ? rec.rules[o] : ""));
    line["ops"] = std::move(ops);
    line["config"] = rec.config.str();
    line["new_visited"] = rec.new_visited;
    out << line.dump() << '\n';
  }

  json tail;
  tail["outcome"] = to_string(t.outcome);
  tail["steps"] = t.steps.size();
  tail["visited_count"] = t.visited_count;
  if (t.lasso_start) tail["lasso_start"] = *t.lasso_start;
  out << tail.dump() << '\n';
}

std::string trace_to_jsonl(const Trace& t) {
  std::ostringstream out;
  write_trace_jsonl(t, out);
  return out.str();
}

Trace read_trace_jsonl(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty trace file");
  json header = json::parse(line);

  Trace t;
  t.protocol = header.value("protocol", "");
  t.phi = header.at("phi").get<int>();
  t.n = header.at("n").get<int>();
  t.k = header.at("k").get<int>();
  t.model = model_from_string(header.at("model").get<std::string>())
                .value_or(Model::FSYNC);
  t.seed = header.value("seed", 0ull);
  t.init = Configuration::parse(header.at("init").get<std::string>());

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    if (j.contains("outcome")) {
      t.outcome = j["outcome"] == "terminated" ? Outcome::Terminated : Outcome::MaxStepsReached;
      t.visited_count = j.value("visited_count", 0);
      if (j.contains("lasso_start")) t.lasso_start = j["lasso_start"].get<std::size_t>();
      break;
    }
    StepRecord rec;
    for (const json& jo : j.at("ops")) {
      std::string rule;
      rec.choice.ops.push_back(op_from_json(jo, rule));
      rec.rules.push_back(rule);
    }
    rec.config = Configuration::parse(j.at("config").get<std::string>());
    rec.new_visited = j.at("new_visited").get<std::vector<int>>();
    t.steps.push_back(std::move(rec));
  }
  return t;
}

Trace trace_from_jsonl(const std::string& text) {
  std::istringstream in(text);
  return read_trace_jsonl(in);
}

JsonlTraceWriter::JsonlTraceWriter(std::ostream& out, const Evaluator& eval)
    : out_(out), eval_(eval) {}

void JsonlTraceWriter::write_header(const std::string& protocol, int phi,
                                    const Configuration& init, Model model,
                                    std::uint64_t seed) {
  json header;
  header["protocol"] = protocol;
  header["phi"] = phi;
  header["n"] = init.n();
  header["k"] = init.robots();
  header["model"] = to_string(model);
  header["seed"] = seed;
  header["init"] = init.str();
  out_ << header.dump() << '\n';
}

void JsonlTraceWriter::on_step(const ExecutionState& after, const SchedulerChoice& choice,
                               std::uint64_t newly_visited, std::span<const int> rules) {
  json line;
  line["step"] = steps_++;
  json ops = json::array();
  for (size_t o = 0; o < choice.ops.size(); ++o) {
    int r = o < rules.size() ? rules[o] : -1;
    ops.push_back(op_to_json(choice.ops[o], r < 0 ? "" : eval_.rule_label(r)));
  }
  line["ops"] = std::move(ops);
  line["config"] = after.config().str();
  std::vector<int> fresh;
  for (int j = 0; j < after.n; ++j)
    if (newly_visited & (1ull << j)) fresh.push_back(j);
  line["new_visited"] = std::move(fresh);
  out_ << line.dump() << '\n';
}

void JsonlTraceWriter::write_tail(Outcome outcome, int visited_count) {
  json tail;
  tail["outcome"] = to_string(outcome);
  tail["steps"] = steps_;
  tail["visited_count"] = visited_count;
  out_ << tail.dump() << '\n';
}

}  // namespace ringx
