#include "doctest.h"
#include "test_support.hpp"

#include "simcut/bounds.hpp"
#include "simcut/derandomizer.hpp"
#include "simcut/errors.hpp"
#include "simcut/event_spec.hpp"
#include "simcut/moments.hpp"
#include "simcut/oracle.hpp"

#include <cmath>
#include <numeric>

using namespace simcut;
using namespace simcut::testing;

namespace {

void check_descent(const Instance& inst, const std::vector<EventSpec>& specs, const DerandResult& res) {
  CHECK(res.initial_value < 1.0);
  CHECK(res.final_value < 1.0);
  CHECK(res.assignment.is_total());
  CHECK(res.trace.size() == vertex_count(inst));
  double current = res.initial_value;
  for (const DescentStep& step : res.trace) {
    CHECK(step.value <= current + 1e-9);
    const double mean = std::accumulate(step.candidates.begin(), step.candidates.end(), 0.0) /
                        static_cast<double>(step.candidates.size());
    CHECK(std::abs(mean - current) <= 1e-9);
    CHECK(step.value == step.candidates[static_cast<std::size_t>(step.chosen)]);
    current = step.value;
  }
  CHECK(std::abs(current - res.final_value) <= 1e-12);
  CHECK(std::abs(res.final_value - estimator_value(inst, res.assignment, specs)) <= 1e-9);
  REQUIRE(res.report.constraints.size() == specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& c = res.report.constraints[i];
    CHECK(c.satisfied);
    CHECK(static_cast<double>(realized_count(inst, res.assignment, specs[i])) >= specs[i].threshold());
  }
}

} // namespace

TEST_CASE("C5 pair: both cuts reach 1") {
  const Instance inst = c5_pair();
  const auto specs = make_event_specs(inst, {});
  const DerandResult res = derandomize(inst, specs);
  check_descent(inst, specs, res);
  for (const auto& c : res.report.constraints) {
    CHECK(c.count >= 1);
  }
  CHECK(res.initial_value == doctest::Approx(0.5));
}

TEST_CASE("single C4 reaches a cut of at least 1") {
  const GraphFamily fam = single(cycle(4));
  const auto specs = make_event_specs(fam, {});
  const DerandResult res = derandomize(fam, specs);
  check_descent(fam, specs, res);
  CHECK(res.report.constraints[0].count >= 1);
  CHECK(max_cut_value(fam[0]) == 4);
}

TEST_CASE("empty graphs keep the estimator constant") {
  const GraphFamily fam(6, std::vector<Graph>{Graph(6, {}), Graph(6, {})});
  const auto specs = make_event_specs(fam, {});
  CHECK(specs.empty());
  DescentOptions opts;
  opts.k = 3;
  const DerandResult res = derandomize(fam, specs, opts);
  CHECK(res.initial_value == 0.0);
  CHECK(res.final_value == 0.0);
  for (const auto& step : res.trace) {
    CHECK(step.value == 0.0);
    CHECK(step.chosen == 0);
    CHECK(step.candidates.size() == 3);
  }
}

TEST_CASE("ties go to the lowest class") {
  // Vertex 0 is first: every label is symmetric at the empty assignment.
  const GraphFamily fam = gnm_family(10, 20, 1, 1);
  const DerandResult res = derandomize(fam, make_event_specs(fam, {}));
  CHECK(res.trace.front().vertex == 0);
  CHECK(res.trace.front().chosen == 0);
}

TEST_CASE("an initial estimator of 1 or more is rejected") {
  const GraphFamily fam = gnm_family(10, 20, 1, 2);
  auto specs = make_event_specs(fam, {});
  specs[0].normalizer = 1.0; // Var X = 5
  CHECK_THROWS_AS(derandomize(fam, specs), ContractError);
}

TEST_CASE("incremental and naive engines produce identical traces") {
  for (int trial = 0; trial < 24; ++trial) {
    const std::size_t ell = 1 + trial % 3;
    const int k = 2 + trial % 4;
    const GraphFamily fam = gnm_family(16, 20 + trial, ell, 500 + trial);
    const auto specs = make_event_specs(fam, {trial % 2 ? Theorem::thm2 : Theorem::thm1, k, 0.0});
    DescentOptions fast;
    fast.order = trial % 3 == 0 ? VertexOrder::degree : VertexOrder::natural;
    DescentOptions naive = fast;
    naive.naive_recompute = true;
    const DerandResult a = derandomize(fam, specs, fast);
    const DerandResult b = derandomize(fam, specs, naive);
    CHECK(a.assignment == b.assignment);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      CHECK(a.trace[i].vertex == b.trace[i].vertex);
      CHECK(a.trace[i].chosen == b.trace[i].chosen);
      for (std::size_t c = 0; c < a.trace[i].candidates.size(); ++c) {
        CHECK(std::abs(a.trace[i].candidates[c] - b.trace[i].candidates[c]) <= 1e-12);
      }
    }
  }
  for (int trial = 0; trial < 8; ++trial) {
    const int r = 2 + trial % 2;
    const HypergraphFamily fam = uniform_family(12, r, 15, 1 + trial % 2, 600 + trial, 2);
    const auto specs = make_event_specs(fam, resolve_guarantee(fam, {Theorem::hyp, r, 0.0}));
    DescentOptions naive;
    naive.naive_recompute = true;
    const DerandResult a = derandomize(fam, specs);
    const DerandResult b = derandomize(fam, specs, naive);
    CHECK(a.assignment == b.assignment);
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      CHECK(std::abs(a.trace[i].value - b.trace[i].value) <= 1e-12);
    }
  }
}

TEST_CASE("descent invariants and guarantees across theorems") {
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t ell = 1 + trial % 3;
    const GraphFamily fam = gnm_family(40, 60 + 5 * trial, ell, 700 + trial);
    for (int k = 2; k <= 5; ++k) {
      const Guarantee g{Theorem::thm2, k, 0.0};
      const auto specs = make_event_specs(fam, g);
      const DerandResult res = derandomize(fam, specs);
      check_descent(fam, specs, res);
      for (std::size_t i = 0; i < ell; ++i) {
        CHECK(static_cast<double>(res.report.constraints[i].count) >=
              threshold_for(ThresholdKind::thm2, {.m = fam[i].m(), .ell = ell, .k = k}));
      }
    }
  }
}

TEST_CASE("thm3 descent on bounded-degree graphs") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    GeneratorParams p;
    p.n = 700;
    p.degree = 2;
    p.seed = seed;
    const Instance inst = generate(GeneratorKind::bounded_degree, p);
    const Guarantee g = resolve_guarantee(inst, {Theorem::thm3, 2, thm3_epsilon_limit(1, 2)});
    const auto specs = make_event_specs(inst, g);
    DescentOptions opts;
    opts.order = VertexOrder::degree;
    const DerandResult res = derandomize(inst, specs, opts);
    check_descent(inst, specs, res);
    const auto& counts = res.report.graph_counts.at(0);
    const double eps4 = std::pow(g.epsilon, 0.25);
    const double m = static_cast<double>(std::get<GraphFamily>(inst)[0].m());
    CHECK(static_cast<double>(counts.pair(0, 1)) >= m / 2.0 - eps4 * m);
    CHECK(static_cast<double>(counts.within[0]) >= m / 4.0 - eps4 * m);
    CHECK(static_cast<double>(counts.within[1]) >= m / 4.0 - eps4 * m);
  }
}

TEST_CASE("hypergraph descent meets the derived rainbow bound") {
  for (int trial = 0; trial < 10; ++trial) {
    const int r = 2 + trial % 2;
    const HypergraphFamily fam = uniform_family(30, r, 60, 1 + trial % 3, 800 + trial, 2);
    const auto specs = make_event_specs(fam, resolve_guarantee(fam, {Theorem::hyp, r, 0.0}));
    const DerandResult res = derandomize(fam, specs);
    check_descent(fam, specs, res);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      CHECK(static_cast<double>(res.report.rainbow_counts[i]) >=
            threshold_for(ThresholdKind::hyp,
                          {.m = fam[i].m(), .ell = fam.size(), .delta2 = fam[i].delta2(), .r = r}));
    }
  }
}

TEST_CASE("vertex orders") {
  const GraphFamily fam(4, std::vector<Graph>{Graph(4, {{3, 0}, {3, 1}, {3, 2}, {1, 2}})});
  CHECK(vertex_order(fam, VertexOrder::natural) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(vertex_order(fam, VertexOrder::degree) == std::vector<Vertex>{3, 1, 2, 0});
  CHECK(vertex_order_from_string(to_string(VertexOrder::degree)) == VertexOrder::degree);
  CHECK_THROWS_AS(vertex_order_from_string("random"), ContractError);
}

TEST_CASE("spec_report thresholds match the spec") {
  const GraphFamily fam = gnm_family(12, 30, 2, 9);
  const auto specs = make_event_specs(fam, {});
  const Assignment a({0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}, 2);
  const CutReport rep = spec_report(fam, a, specs);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    CHECK(rep.constraints[i].threshold == doctest::Approx(15.0 - std::sqrt(30.0)));
    CHECK(rep.constraints[i].count == realized_count(fam, a, specs[i]));
  }
}
