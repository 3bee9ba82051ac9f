#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringx/synth.hpp"
#include "ringx/trace_io.hpp"
#include "ringx/verify.hpp"

namespace py = pybind11;
using namespace ringx;

namespace {

std::vector<std::string> moves_to_list(const MoveChoice& mc) {
  std::vector<std::string> out;
  if (mc.contains(Dir::CW)) out.push_back("cw");
  if (mc.contains(Dir::CCW)) out.push_back("ccw");
  return out;
}

Model parse_model(const std::string& s) {
  auto m = model_from_string(s);
  if (!m) throw py::value_error("model must be fsync, ssync, or async");
  return *m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exploration of anonymous rings by myopic robots: simulation, "
            "exhaustive verification, and protocol synthesis";

  py::class_<Configuration>(m, "Configuration")
      .def(py::init<const std::vector<int>&>())
      .def_static("parse", &Configuration::parse)
      .def_property_readonly("n", &Configuration::n)
      .def_property_readonly("k", &Configuration::robots)
      .def("at", &Configuration::at)
      .def("rotated", &Configuration::rotated)
      .def("mirrored", &Configuration::mirrored)
      .def("canonical", &Configuration::canonical)
      .def("towerless", &Configuration::towerless)
      .def("mults", [](const Configuration& c) {
        return std::vector<int>(c.mults().begin(), c.mults().end());
      })
      .def("__str__", &Configuration::str)
      .def("__repr__", [](const Configuration& c) { return "Configuration(" + c.str() + ")"; })
      .def("__eq__", [](const Configuration& a, const Configuration& b) { return a == b; });

  m.def("indistinguishable", &indistinguishable);
  m.def("view_at", [](const Configuration& c, int node, int phi) {
    View v = view_at(c, node, phi);
    return py::make_tuple(std::vector<int>(v.window.begin(), v.window.end()), v.symmetric());
  });
  m.def("structure", [](const Configuration& c, int d, const std::string& kind) {
    BlockReport rep = structure(
        c, d, kind == "group" ? BlockKind::Group : BlockKind::ExactDistance);
    py::list blocks;
    for (const Block& b : rep.blocks)
      blocks.append(py::dict(py::arg("start") = b.start, py::arg("last") = b.last,
                             py::arg("nodes") = b.nodes, py::arg("robots") = b.robots));
    return py::dict(py::arg("blocks") = blocks, py::arg("isolated") = rep.isolated,
                    py::arg("cyclic") = rep.cyclic);
  }, py::arg("config"), py::arg("d"), py::arg("kind") = "exact");

  py::class_<Protocol>(m, "Protocol")
      .def_readonly("name", &Protocol::name)
      .def_readonly("phi", &Protocol::phi)
      .def_property_readonly("rules", [](const Protocol& p) {
        py::list out;
        for (const Rule& r : p.rules)
          out.append(py::make_tuple(r.label, r.guard.str(), std::string(to_string(r.action))));
        return out;
      })
      .def("__str__", &format_protocol);

  m.def("parse_protocol", &parse_protocol, py::arg("text"), py::arg("name") = "");
  m.def("format_protocol", &format_protocol);
  m.def("builtin", [](const std::string& name) { return builtin(name); });
  m.def("builtin_names", [] { return builtin_names(); });
  m.def("validate", [](const Protocol& p, int max_mult) {
    py::list out;
    for (const Diagnostic& d : validate(p, max_mult)) {
      const char* sev = d.severity == Diagnostic::Severity::Conflict ? "conflict"
                        : d.severity == Diagnostic::Severity::Warning ? "warning"
                                                                      : "info";
      out.append(py::dict(py::arg("severity") = sev, py::arg("view") = d.view.str(),
                          py::arg("labels") = d.labels, py::arg("message") = d.message));
    }
    return out;
  });
  m.def("enabled_moves", [](const Protocol& p, const Configuration& c, int node) {
    return moves_to_list(enabled_moves(p, c, node).moves);
  });

  m.def("detect_named", [](const Configuration& c, const std::string& name) -> py::object {
    auto which = named_from_string(name);
    if (!which) throw py::value_error("unknown named configuration: " + name);
    auto hit = detect_named(c, *which);
    if (!hit) return py::none();
    return py::make_tuple(hit->anchor, std::string(to_string(hit->orientation)));
  });
  m.def("detect_all_named", [](const Configuration& c) {
    std::vector<std::string> out;
    for (NamedConfig nc : detect_all_named(c)) out.push_back(to_string(nc));
    return out;
  });

  m.def("initial_configs", [](const std::string& kind, int n, int k, int phi) {
    InitKind ik = kind == "single-block" ? InitKind::SingleOneBlock : InitKind::SinglePhiGroup;
    return initial_configs({ik, n, k, phi});
  }, py::arg("kind"), py::arg("n"), py::arg("k"), py::arg("phi") = 1);

  py::class_<Trace>(m, "Trace")
      .def_readonly("protocol", &Trace::protocol)
      .def_readonly("n", &Trace::n)
      .def_readonly("k", &Trace::k)
      .def_readonly("seed", &Trace::seed)
      .def_property_readonly("outcome", [](const Trace& t) {
        return std::string(to_string(t.outcome));
      })
      .def_readonly("visited_count", &Trace::visited_count)
      .def_property_readonly("configs", [](const Trace& t) {
        std::vector<std::string> out{t.init.str()};
        for (const StepRecord& s : t.steps) out.push_back(s.config.str());
        return out;
      })
      .def("steps", [](const Trace& t) { return t.steps.size(); })
      .def("to_jsonl", &trace_to_jsonl);

  m.def("simulate", [](const Protocol& p, const Configuration& start, const std::string& model,
                       std::uint64_t seed, std::int64_t max_steps) {
    return simulate(p, start, parse_model(model), seed, max_steps);
  }, py::arg("protocol"), py::arg("start"), py::arg("model"), py::arg("seed") = 0,
     py::arg("max_steps") = 1'000'000);

  m.def("monitor_distinguishability", &monitor_distinguishability);

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("kind", [](const Verdict& v) {
        return std::string(to_string(v.kind));
      })
      .def_property_readonly("violation", [](const Verdict& v) {
        return std::string(to_string(v.violation));
      })
      .def_readonly("states", &Verdict::states)
      .def_readonly("edges", &Verdict::edges)
      .def_property_readonly("counterexample", [](const Verdict& v) -> py::object {
        if (!v.counterexample) return py::none();
        return py::cast(*v.counterexample);
      })
      .def_property_readonly("terminal_configs", [](const Verdict& v) {
        std::vector<std::string> out;
        for (const Configuration& c : v.terminal_configs) out.push_back(c.str());
        return out;
      })
      .def("explores", &Verdict::explores);

  m.def("verify_exhaustive",
        [](const Protocol& p, const std::vector<Configuration>& inits, const std::string& model,
           std::uint64_t budget, bool symmetry_reduce) {
          VerifyOptions opt;
          opt.max_states = budget;
          opt.symmetry_reduce = symmetry_reduce;
          return verify_exhaustive(p, inits, parse_model(model), opt);
        },
        py::arg("protocol"), py::arg("inits"), py::arg("model"),
        py::arg("budget") = 10'000'000, py::arg("symmetry_reduce") = false);

  m.def("synthesize", [](int phi, int n, int k, const std::string& model,
                         const std::string& init_class, std::uint64_t budget) {
    InitKind kind = init_class == "single-block" ? InitKind::SingleOneBlock
                                                 : InitKind::SinglePhiGroup;
    SynthesisResult res = synthesize(phi, n, k, parse_model(model), kind, {budget});
    py::dict out;
    out["kind"] = std::string(to_string(res.kind));
    out["states"] = res.states;
    out["candidates"] = res.candidates;
    if (res.protocol) out["protocol"] = *res.protocol;
    return out;
  }, py::arg("phi"), py::arg("n"), py::arg("k"), py::arg("model"),
     py::arg("init_class") = "single-block", py::arg("budget") = 100'000'000);
}
