#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ftspan/base_spanners.hpp"
#include "ftspan/experiment.hpp"
#include "ftspan/ft_blocks.hpp"
#include "ftspan/generate.hpp"
#include "ftspan/graph.hpp"
#include "ftspan/oracle.hpp"
#include "ftspan/sourcewise_augment.hpp"
#include "ftspan/spanner.hpp"
#include "ftspan/union_compose.hpp"

namespace py = pybind11;

namespace {

using namespace ftspan;

SourcewiseKind sourcewise_kind_from_string(const std::string& s) {
  if (s == "preserver") return SourcewiseKind::Preserver;
  if (s == "augmented-2additive") return SourcewiseKind::Augmented2Additive;
  throw std::invalid_argument("unknown sourcewise kind: " + s);
}

VerifyOptions make_options(int sample, uint64_t sample_seed, int threads,
                           uint64_t budget) {
  VerifyOptions opts;
  if (sample > 0) {
    opts.mode = VerifyOptions::Mode::Sampled;
    opts.sample_count = sample;
    opts.sample_seed = sample_seed;
  }
  opts.threads = threads;
  opts.budget = budget;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "fault-tolerant additive spanners of unweighted graphs";

  py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
      .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
      .def("num_vertices", &Graph::num_vertices)
      .def("num_edges", &Graph::num_edges)
      .def("edges", [](const Graph& g) { return g.edges(); })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("edge_id", &Graph::edge_id)
      .def("hash_hex", &Graph::hash_hex)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  py::class_<Claim>(m, "Claim")
      .def_readonly("alpha", &Claim::alpha)
      .def_readonly("beta", &Claim::beta)
      .def_readonly("faults", &Claim::faults)
      .def_property_readonly("kind",
                             [](const Claim& c) { return to_string(c.kind); })
      .def("__repr__", [](const Claim& c) { return c.describe(); });

  py::class_<Spanner>(m, "Spanner")
      .def("edge_ids",
           [](const Spanner& h) { return h.edge_ids(); })
      .def("edge_count", &Spanner::edge_count)
      .def("contains", &Spanner::contains)
      .def_property_readonly("claim", &Spanner::claim)
      .def_property_readonly("provenance", &Spanner::provenance)
      .def("to_json", &Spanner::to_json)
      .def_static(
          "from_json",
          [](const std::string& text, std::shared_ptr<Graph> host) {
            return Spanner::from_json(text, std::move(host));
          },
          py::arg("text"), py::arg("host"))
      .def("__repr__", [](const Spanner& h) {
        return "Spanner(edges=" + std::to_string(h.edge_count()) + ", " +
               h.claim().describe() + ")";
      });

  m.def(
      "generate",
      [](const std::string& kind, int n, double prob, uint64_t seed,
         int degree, int rows, int cols, bool connected) {
        GeneratorSpec spec{kind, n, prob, degree, rows, cols, seed, connected};
        return std::make_shared<Graph>(generate(spec));
      },
      py::arg("kind"), py::arg("n") = 0, py::arg("prob") = 0.0,
      py::arg("seed") = 1, py::arg("degree") = 3, py::arg("rows") = 0,
      py::arg("cols") = 0, py::arg("connected") = false,
      "Seeded graph generator: gnp | random_regular | grid | path | cycle | "
      "complete | petersen.");

  m.def("read_edge_list", [](const std::string& text) {
    return std::make_shared<Graph>(read_edge_list(text));
  });
  m.def("write_edge_list", [](const std::shared_ptr<Graph>& g) {
    return write_edge_list(*g);
  });

  m.def(
      "build_pipeline",
      [](std::shared_ptr<Graph> g, const std::string& pipeline,
         const std::string& base, int p, int k, int faults,
         const std::string& fault_kind) {
        ExperimentSpec spec;
        spec.pipeline = pipeline;
        spec.base = base;
        spec.p = p;
        spec.k = k;
        spec.faults = faults;
        spec.fault_kind = fault_kind_from_string(fault_kind);
        return build_pipeline(std::move(g), spec);
      },
      py::arg("graph"), py::arg("pipeline"), py::arg("base") = "",
      py::arg("p") = 0, py::arg("k") = 0, py::arg("faults") = 1,
      py::arg("fault_kind") = "edge",
      "Named construction pipelines: alg1-preserver | alg1-2additive | "
      "alg2-bkmp6 | union-f.");

  m.def(
      "greedy_multiplicative",
      [](std::shared_ptr<Graph> g, int k) {
        return greedy_multiplicative(std::move(g), k);
      },
      py::arg("graph"), py::arg("k"));
  m.def(
      "eft_multiplicative",
      [](std::shared_ptr<Graph> g, int k, int f) {
        return eft_multiplicative(std::move(g), k, f);
      },
      py::arg("graph"), py::arg("k"), py::arg("faults"));
  m.def(
      "acim_2additive",
      [](std::shared_ptr<Graph> g) {
        return acim_2additive(std::move(g)).spanner;
      },
      py::arg("graph"));
  m.def(
      "bkmp_6additive",
      [](std::shared_ptr<Graph> g) {
        return bkmp_6additive(std::move(g)).spanner;
      },
      py::arg("graph"));
  m.def(
      "union_spanner",
      [](const Spanner& a, const Spanner& m_) { return union_spanner(a, m_); },
      py::arg("additive"), py::arg("multiplicative"));

  m.def(
      "recommended_p",
      [](int n, const std::string& kind, const std::string& fault_kind) {
        return recommended_p(n, sourcewise_kind_from_string(kind),
                             fault_kind_from_string(fault_kind));
      },
      py::arg("n"), py::arg("kind"), py::arg("fault_kind") = "edge");
  m.def("stretch_claim", &stretch_claim, py::arg("alpha"), py::arg("beta"),
        py::arg("faults"),
        "(current, earlier) additive bounds for the union construction.");

  m.def(
      "verify",
      [](const std::shared_ptr<Graph>& g, const Spanner& h, int sample,
         uint64_t sample_seed, int threads, uint64_t budget) {
        return verify_claim(*g, h,
                            make_options(sample, sample_seed, threads, budget))
            .to_json();
      },
      py::arg("graph"), py::arg("spanner"), py::arg("sample") = 0,
      py::arg("sample_seed") = 1, py::arg("threads") = 0,
      py::arg("budget") = 5'000'000'000ULL,
      "Fault-enumeration stretch check; returns the report as JSON.");
  m.def(
      "verify_sourcewise",
      [](const std::shared_ptr<Graph>& g, const Spanner& h,
         const std::vector<int>& sources, int sample, uint64_t sample_seed,
         int threads, uint64_t budget) {
        return verify_sourcewise(
                   *g, h, sources,
                   make_options(sample, sample_seed, threads, budget))
            .to_json();
      },
      py::arg("graph"), py::arg("spanner"), py::arg("sources"),
      py::arg("sample") = 0, py::arg("sample_seed") = 1, py::arg("threads") = 0,
      py::arg("budget") = 5'000'000'000ULL);
}
