// Command-line front end: load protocols, run simulations, run verification
// suites, run synthesis, and inspect configurations.
//
// Exit codes: 0 when every requested verdict is Explores / the simulation
// terminated with full coverage; 1 on counterexamples or runtime
// verification errors; 2 on bad flags; 3 on exhausted budgets.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringx/synth.hpp"
#include "ringx/trace_io.hpp"
#include "ringx/verify.hpp"

using namespace ringx;
using nlohmann::json;

namespace {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("MYOPIC_RING_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring malformed MYOPIC_RING_BUDGET\n";
    }
  }
  return 10'000'000;
}

Protocol load_protocol(const std::string& spec) {
  if (is_builtin(spec)) return builtin(spec);
  std::ifstream in(spec);
  if (!in) throw std::runtime_error("cannot open protocol file: " + spec);
  std::stringstream buf;
  buf << in.rdbuf();
  size_t slash = spec.find_last_of('/');
  std::string name = slash == std::string::npos ? spec : spec.substr(slash + 1);
  if (name.size() > 4 && name.substr(name.size() - 4) == ".txt")
    name.resize(name.size() - 4);
  return parse_protocol(buf.str(), name);
}

// Robot counts the shipped protocols are designed for.
int designed_k(const std::string& name, int n) {
  if (name == "fsync-phi1-large") return 5;
  if (name == "fsync-phi1-small") return n <= 5 ? n - 1 : 4;
  if (name == "async-phi2-k9") return 9;
  if (name == "async-phi2-k7") return 7;
  if (name == "async-phi3-k7") return 7;
  if (name == "async-phi3-k5") return 5;
  return -1;
}

InitKind parse_init_kind(const std::string& s) {
  if (s == "single-block") return InitKind::SingleOneBlock;
  if (s == "single-phi-group") return InitKind::SinglePhiGroup;
  throw CLI::ValidationError("--init-class", "expected single-block or single-phi-group");
}

Configuration resolve_init(const std::string& init, int n, int k, int phi) {
  if (init.find(',') != std::string::npos) return Configuration::parse(init);
  std::string sel = init;
  int index = 0;
  size_t colon = sel.find(':');
  if (colon != std::string::npos) {
    index = std::stoi(sel.substr(colon + 1));
    sel.resize(colon);
  }
  InitKind kind = parse_init_kind(sel);
  std::vector<Configuration> all = initial_configs({kind, n, k, phi});
  if (index < 0 || index >= static_cast<int>(all.size()))
    throw std::runtime_error("init selector index out of range (class has " +
                             std::to_string(all.size()) + " configurations)");
  return all[index];
}

struct InstanceReport {
  int n = 0;
  Verdict verdict;
  std::string trace_path;
  double seconds = 0;
};

void print_instance(const InstanceReport& rep, const std::string& protocol, int k,
                    Model model, InitKind kind, bool as_json) {
  if (as_json) {
    json j;
    j["instance"] = {{"protocol", protocol}, {"n", rep.n}, {"k", k},
                     {"model", to_string(model)}, {"init_class", to_string(kind)}};
    j["verdict"] = to_string(rep.verdict.kind);
    if (rep.verdict.kind == VerdictKind::Counterexample)
      j["violation"] = to_string(rep.verdict.violation);
    j["states"] = rep.verdict.states;
    j["edges"] = rep.verdict.edges;
    j["seconds"] = rep.seconds;
    if (!rep.trace_path.empty()) j["counterexample_trace"] = rep.trace_path;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "n=" << rep.n << ": " << to_string(rep.verdict.kind);
  if (rep.verdict.kind == VerdictKind::Counterexample)
    std::cout << "(" << to_string(rep.verdict.violation) << ")";
  std::cout << "  states=" << rep.verdict.states << " edges=" << rep.verdict.edges;
  if (!rep.trace_path.empty()) std::cout << "  trace=" << rep.trace_path;
  std::cout << "\n";
}

int run_verify(const std::string& protocol_spec, std::vector<int> ns, int k_flag,
               InitKind kind, Model model, std::uint64_t budget, bool as_json,
               const std::string& artifacts_dir, int jobs) {
  Protocol p = load_protocol(protocol_spec);
  std::vector<InstanceReport> reports(ns.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};

  auto work = [&]() {
    for (size_t i = next.fetch_add(1); i < ns.size(); i = next.fetch_add(1)) {
      InstanceReport& rep = reports[i];
      rep.n = ns[i];
      int k = k_flag > 0 ? k_flag : designed_k(p.name, rep.n);
      if (k <= 0) {
        rep.verdict.detail = "missing --k for non-builtin protocol";
        failed = true;
        continue;
      }
      try {
        std::vector<Configuration> inits = initial_configs({kind, rep.n, k, p.phi});
        VerifyOptions opt;
        opt.max_states = budget;
        auto t0 = std::chrono::steady_clock::now();
        rep.verdict = verify_exhaustive(p, inits, model, opt);
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (rep.verdict.counterexample && !artifacts_dir.empty()) {
          std::string path = artifacts_dir + "/ce_" + p.name + "_" + to_string(model) +
                             "_n" + std::to_string(rep.n) + ".jsonl";
          std::ofstream out(path);
          write_trace_jsonl(*rep.verdict.counterexample, out);
          rep.trace_path = path;
        }
      } catch (const std::exception& e) {
        rep.verdict.detail = e.what();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int k_shown = k_flag > 0 ? k_flag : designed_k(p.name, ns[0]);
  bool all_explore = true;
  bool budget_hit = false;
  for (const InstanceReport& rep : reports) {
    if (!rep.verdict.detail.empty() && rep.verdict.states == 0 && rep.verdict.edges == 0 &&
        rep.verdict.kind == VerdictKind::BudgetExceeded && failed) {
      std::cerr << "n=" << rep.n << ": error: " << rep.verdict.detail << "\n";
      all_explore = false;
      continue;
    }
    print_instance(rep, p.name, k_shown, model, kind, as_json);
    if (rep.verdict.kind == VerdictKind::BudgetExceeded) budget_hit = true;
    if (!rep.verdict.explores()) all_explore = false;
  }
  if (failed) return 1;
  if (all_explore) return 0;
  return budget_hit && reports.size() == 1 ? 3 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exploration protocols for myopic robots on anonymous rings"};
  app.require_subcommand(1);

  // --- simulate ---
  auto* sim = app.add_subcommand("simulate", "run one randomized fair schedule");
  std::string sim_protocol, sim_init = "single-block", sim_model_s, sim_trace;
  int sim_n = 0, sim_k = 0;
  std::uint64_t sim_seed = 0;
  std::int64_t sim_max_steps = 1'000'000;
  sim->add_option("--protocol", sim_protocol, "builtin name or file path")->required();
  sim->add_option("--n", sim_n, "ring size")->required();
  sim->add_option("--init", sim_init,
                  "single-block | single-phi-group:<index> | explicit multiplicities");
  sim->add_option("--k", sim_k, "robot count (default: protocol's design count)");
  sim->add_option("--model", sim_model_s, "fsync | ssync | async")->required();
  sim->add_option("--seed", sim_seed, "PRNG seed");
  sim->add_option("--max-steps", sim_max_steps, "step budget");
  sim->add_option("--trace", sim_trace, "write a JSONL trace here");

  // --- verify ---
  auto* ver = app.add_subcommand("verify", "exhaustive adversarial verification");
  std::string ver_protocol, ver_model_s, ver_range, ver_class = "single-block";
  std::string ver_artifacts = ".";
  int ver_n = 0, ver_k = 0, ver_jobs = 2;
  std::uint64_t ver_budget = 0;
  bool ver_json = false;
  ver->add_option("--protocol", ver_protocol)->required();
  ver->add_option("--n", ver_n, "single ring size");
  ver->add_option("--n-range", ver_range, "inclusive range, e.g. 7..12");
  ver->add_option("--k", ver_k, "robot count (default: protocol's design count)");
  ver->add_option("--init-class", ver_class, "single-block | single-phi-group");
  ver->add_option("--model", ver_model_s)->required();
  ver->add_option("--budget", ver_budget, "max states (default MYOPIC_RING_BUDGET or 1e7)");
  ver->add_option("--jobs", ver_jobs, "worker threads for ranges");
  ver->add_option("--artifacts-dir", ver_artifacts, "where counterexample traces go");
  ver->add_flag("--json", ver_json, "one JSON object per instance");

  // --- synthesize ---
  auto* syn = app.add_subcommand("synthesize", "exists-forall protocol search");
  std::string syn_model_s, syn_class = "single-block";
  int syn_phi = 1, syn_n = 0, syn_k = 0;
  std::uint64_t syn_budget = 100'000'000;
  syn->add_option("--phi", syn_phi)->required();
  syn->add_option("--n", syn_n)->required();
  syn->add_option("--k", syn_k)->required();
  syn->add_option("--model", syn_model_s)->required();
  syn->add_option("--init-class", syn_class, "single-block | single-phi-group");
  syn->add_option("--budget", syn_budget, "max cumulative verifier states");

  // --- inspect ---
  auto* ins = app.add_subcommand("inspect", "views, structure, named patterns");
  std::string ins_config;
  int ins_phi = 1;
  ins->add_option("--config", ins_config, "comma-separated multiplicities")->required();
  ins->add_option("--phi", ins_phi, "visibility radius");

  auto* lst = app.add_subcommand("list-protocols", "show the shipped rule tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*sim) {
      Model model = model_from_string(sim_model_s).value();
      Protocol p = load_protocol(sim_protocol);
      int k = sim_k > 0 ? sim_k : designed_k(p.name, sim_n);
      Configuration start = resolve_init(sim_init, sim_n, k, p.phi);
      ProtocolEvaluator eval(p);

      std::ofstream trace_out;
      std::unique_ptr<JsonlTraceWriter> writer;
      if (!sim_trace.empty()) {
        trace_out.open(sim_trace);
        if (!trace_out) throw std::runtime_error("cannot open trace file: " + sim_trace);
        writer = std::make_unique<JsonlTraceWriter>(trace_out, eval);
        writer->write_header(p.name, p.phi, start, model, sim_seed);
      }
      SimResult res = simulate_core(eval, start, model, sim_seed, sim_max_steps, writer.get());
      if (writer) writer->write_tail(res.outcome, res.final.visited_count());

      Configuration final = res.final.config();
      std::cout << "outcome=" << to_string(res.outcome) << " steps=" << res.steps
                << " visited=" << res.final.visited_count() << "/" << sim_n
                << " final=" << final.str();
      for (NamedConfig nc : detect_all_named(final))
        std::cout << " named=" << to_string(nc);
      std::cout << "\n";
      return res.outcome == Outcome::Terminated && res.final.all_visited() ? 0 : 1;
    }

    if (*ver) {
      Model model = model_from_string(ver_model_s).value();
      std::vector<int> ns;
      if (!ver_range.empty()) {
        size_t dots = ver_range.find("..");
        if (dots == std::string::npos)
          throw std::runtime_error("--n-range wants A..B");
        int a = std::stoi(ver_range.substr(0, dots));
        int b = std::stoi(ver_range.substr(dots + 2));
        for (int n = a; n <= b; ++n) ns.push_back(n);
      } else if (ver_n > 0) {
        ns.push_back(ver_n);
      } else {
        throw std::runtime_error("need --n or --n-range");
      }
      std::uint64_t budget = ver_budget ? ver_budget : default_budget();
      return run_verify(ver_protocol, ns, ver_k, parse_init_kind(ver_class), model,
                        budget, ver_json, ver_artifacts, std::max(1, ver_jobs));
    }

    if (*syn) {
      Model model = model_from_string(syn_model_s).value();
      SynthesisResult res =
          synthesize(syn_phi, syn_n, syn_k, model, parse_init_kind(syn_class),
                     {syn_budget});
      std::cout << to_string(res.kind) << "  states=" << res.states
                << " candidates=" << res.candidates << "\n";
      if (res.protocol) std::cout << format_protocol(*res.protocol);
      return res.kind == SynthKind::BudgetExceeded ? 3 : 0;
    }

    if (*ins) {
      Configuration c = Configuration::parse(ins_config);
      std::cout << "n=" << c.n() << " k=" << c.robots()
                << " towerless=" << (c.towerless() ? "yes" : "no") << "\n";
      std::cout << "canonical: " << c.canonical().str() << "\n";
      if (c.robots() >= 2) {
        int d = inter_distance(c);
        std::cout << "inter-distance: " << d << "\n";
        if (d >= 1) {
          BlockReport blocks = structure(c, d, BlockKind::ExactDistance);
          std::cout << d << ".blocks:";
          for (const Block& b : blocks.blocks)
            std::cout << " [start=" << b.start << " last=" << b.last
                      << " robots=" << b.robots << "]";
          for (int node : blocks.isolated) std::cout << " isolated@" << node;
          if (blocks.cyclic) std::cout << " (cyclic)";
          std::cout << "\n";
        }
        BlockReport groups = structure(c, ins_phi, BlockKind::Group);
        std::cout << ins_phi << ".groups:";
        for (const Block& b : groups.blocks)
          std::cout << " [start=" << b.start << " last=" << b.last
                    << " robots=" << b.robots << "]";
        if (groups.cyclic) std::cout << " (cyclic)";
        std::cout << "\n";
      }
      std::cout << "views (phi=" << ins_phi << "):\n";
      for (int node = 0; node < c.n(); ++node) {
        if (!c.occupied(node)) continue;
        View v = view_at(c, node, ins_phi);
        std::cout << "  node " << node << ": " << v.str()
                  << (v.symmetric() ? "  symmetric" : "") << "\n";
      }
      for (NamedConfig nc : all_named())
        if (auto hit = detect_named(c, nc))
          std::cout << "named: " << to_string(nc) << " @" << hit->anchor << " "
                    << to_string(hit->orientation) << "\n";
      return 0;
    }

    if (*lst) {
      for (const std::string& name : builtin_names()) {
        const Protocol& p = builtin(name);
        std::cout << name << "  phi=" << p.phi << " rules=" << p.rules.size() << "  "
                  << builtin_description(name) << "\n";
      }
      return 0;
    }
  } catch (const std::bad_optional_access&) {
    std::cerr << "error: bad --model value\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
