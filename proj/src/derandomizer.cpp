#include "simcut/derandomizer.hpp"

#include "moment_kernels.hpp"
#include "simcut/counting.hpp"
#include "simcut/errors.hpp"
#include "simcut/moments.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>

namespace simcut {

std::string to_string(VertexOrder o) { return o == VertexOrder::natural ? "natural" : "degree"; }

VertexOrder vertex_order_from_string(const std::string& s) {
  if (s == "natural") return VertexOrder::natural;
  if (s == "degree") return VertexOrder::degree;
  throw ContractError("unknown vertex order '" + s + "' (expected natural or degree)");
}

std::vector<Vertex> vertex_order(const Instance& instance, VertexOrder order) {
  const std::size_t n = vertex_count(instance);
  std::vector<Vertex> vs(n);
  std::iota(vs.begin(), vs.end(), Vertex{0});
  if (order == VertexOrder::degree) {
    std::vector<std::size_t> deg(n);
    std::visit(
        [&](const auto& family) {
          for (Vertex v = 0; v < n; ++v) {
            deg[v] = family.total_degree(v);
          }
        },
        instance);
    std::stable_sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  }
  return vs;
}

namespace {



// A descent engine tracks E[(X_j - center_j)^2 | U] exactly for every spec
// and answers "what would the estimator be if v took class c".
class Engine {
public:
  virtual ~Engine() = default;
  /// Per-spec exact deviations with v set to c (v must be undecided).
  virtual void candidate(Vertex v, Label c, std::vector<Fraction>& out) = 0;
  virtual void commit(Vertex v, Label c) = 0;
  virtual std::vector<Fraction> current() const = 0;
};

double total_value(const std::vector<EventSpec>& specs, const std::vector<Fraction>& dev) {
  double total = 0.0;
  for (std::size_t j = 0; j < specs.size(); ++j) {
    total += term_value(dev[j], specs[j]);
  }
  return total;
}

class GraphEngine final : public Engine {
public:
  GraphEngine(const GraphFamily& family, const std::vector<EventSpec>& specs, int k)
      : family_(family), specs_(specs), k_(k), labels_(family.n(), k), scale_(detail::ipow(k, 2)) {
    const std::size_t side = static_cast<std::size_t>(k_ + 1);
    hist_.resize(family.size());
    for (std::size_t g = 0; g < family.size(); ++g) {
      hist_[g].assign(family.n() * side, 0);
      for (Vertex v = 0; v < family.n(); ++v) {
        hist_[g][v * side + static_cast<std::size_t>(k_)] = static_cast<std::int64_t>(family[g].degree(v));
      }
    }
    for (const auto& spec : specs_) {
      tables_.emplace_back(spec);
      sums_.push_back(detail::graph_sums(family_[spec.graph], labels_, tables_.back()));
    }
  }

  void candidate(Vertex v, Label c, std::vector<Fraction>& out) override {
    out.resize(specs_.size());
    for (std::size_t j = 0; j < specs_.size(); ++j) {
      out[j] = detail::deviation_from_sums(shifted(j, v, c), scale_, specs_[j].center);
    }
  }

  void commit(Vertex v, Label c) override {
    for (std::size_t j = 0; j < specs_.size(); ++j) {
      sums_[j] = shifted(j, v, c);
    }
    const std::size_t side = static_cast<std::size_t>(k_ + 1);
    for (std::size_t g = 0; g < family_.size(); ++g) {
      for (Vertex u : family_[g].neighbors(v)) {
        --hist_[g][u * side + static_cast<std::size_t>(k_)];
        ++hist_[g][u * side + static_cast<std::size_t>(c)];
      }
    }
    labels_.set(v, c);
  }

  std::vector<Fraction> current() const override {
    std::vector<Fraction> out;
    for (std::size_t j = 0; j < specs_.size(); ++j) {
      out.push_back(detail::deviation_from_sums(sums_[j], scale_, specs_[j].center));
    }
    return out;
  }

private:
  std::span<const std::int64_t> hist(std::size_t g, Vertex u) const {
    const std::size_t side = static_cast<std::size_t>(k_ + 1);
    return {hist_[g].data() + u * side, side};
  }

  detail::ScaledSums shifted(std::size_t j, Vertex v, Label c) const {
    const detail::GraphTables& t = tables_[j];
    const std::size_t g = specs_[j].graph;
    const Graph& graph = family_[g];
    detail::ScaledSums s = sums_[j];
    for (Vertex u : graph.neighbors(v)) {
      const int lu = detail::label_index(labels_[u], k_);
      const std::int64_t before = t.weight(k_, lu);
      const std::int64_t after = t.weight(c, lu);
      s.s1 += after - before;
      s.s2 += static_cast<int128>(after) * after - static_cast<int128>(before) * before;
      if (labels_[u] == kUndecided) {
        s.c += t.pair_correction_delta(hist(g, u), c);
      }
    }
    // v stops being an undecided centre of adjacent pairs.
    s.c -= t.pair_correction(hist(g, v));
    return s;
  }

  const GraphFamily& family_;
  const std::vector<EventSpec>& specs_;
  int k_;
  Assignment labels_;
  std::int64_t scale_;
  std::vector<std::vector<std::int64_t>> hist_;
  std::vector<detail::GraphTables> tables_;
  std::vector<detail::ScaledSums> sums_;
};

class HypergraphEngine final : public Engine {
public:
  HypergraphEngine(const HypergraphFamily& family, const std::vector<EventSpec>& specs, int k)
      : family_(family), specs_(specs), labels_(family.n(), k) {
    detail::check_scale(k, family.r());
    scale_ = detail::ipow(k, family.r());
    for (const auto& h : family.members()) {
      overlaps_.push_back(detail::overlap_lists(h));
    }
    for (const auto& spec : specs_) {
      sums_.push_back(detail::hypergraph_sums(family_[spec.graph], overlaps_[spec.graph], labels_, spec));
    }
  }

  void candidate(Vertex v, Label c, std::vector<Fraction>& out) override {
    out.resize(specs_.size());
    for (std::size_t j = 0; j < specs_.size(); ++j) {
      out[j] = detail::deviation_from_sums(shifted(j, v, c), scale_, specs_[j].center);
    }
  }

  void commit(Vertex v, Label c) override {
    for (std::size_t j = 0; j < specs_.size(); ++j) {
      sums_[j] = shifted(j, v, c);
    }
    labels_.set(v, c);
  }

  std::vector<Fraction> current() const override {
    std::vector<Fraction> out;
    for (std::size_t j = 0; j < specs_.size(); ++j) {
      out.push_back(detail::deviation_from_sums(sums_[j], scale_, specs_[j].center));
    }
    return out;
  }

private:
  // Contribution of all terms that depend on v's label, under labels_.
  detail::ScaledSums local(std::size_t j, Vertex v) const {
    const EventSpec& spec = specs_[j];
    const Hypergraph& h = family_[spec.graph];
    const auto& ov = overlaps_[spec.graph];
    detail::ScaledSums s;
    for (std::uint32_t e : h.incident_edges(v)) {
      const std::int64_t w = detail::edge_weight(h.edge(e), labels_, spec);
      s.s1 += w;
      s.s2 += static_cast<int128>(w) * w;
      for (std::uint32_t f : ov[e]) {
        const auto fe = h.edge(f);
        const bool f_has_v = std::find(fe.begin(), fe.end(), v) != fe.end();
        // Ordered pairs (e,f) and (f,e) are both affected; when f also
        // contains v this pair is visited again from f.
        s.c += (f_has_v ? 1 : 2) * detail::scaled_pair_correction(h.edge(e), fe, labels_, spec);
      }
    }
    return s;
  }

  detail::ScaledSums shifted(std::size_t j, Vertex v, Label c) {
    const detail::ScaledSums before = local(j, v);
    labels_.set(v, c);
    const detail::ScaledSums after = local(j, v);
    labels_.clear(v);
    detail::ScaledSums s = sums_[j];
    s.s1 += after.s1 - before.s1;
    s.s2 += after.s2 - before.s2;
    s.c += after.c - before.c;
    return s;
  }

  const HypergraphFamily& family_;
  const std::vector<EventSpec>& specs_;
  Assignment labels_;
  std::int64_t scale_ = 1;
  std::vector<std::vector<std::vector<std::uint32_t>>> overlaps_;
  std::vector<detail::ScaledSums> sums_;
};

// Full recomputation from the pairwise reference moments; the oracle for
// the incremental engines.
class NaiveEngine final : public Engine {
public:
  NaiveEngine(const Instance& instance, const std::vector<EventSpec>& specs, int k)
      : instance_(instance), specs_(specs), labels_(vertex_count(instance), k) {}

  void candidate(Vertex v, Label c, std::vector<Fraction>& out) override {
    labels_.set(v, c);
    out = evaluate();
    labels_.clear(v);
  }

  void commit(Vertex v, Label c) override { labels_.set(v, c); }

  std::vector<Fraction> current() const override { return evaluate(); }

private:
  std::vector<Fraction> evaluate() const {
    std::vector<Fraction> out;
    for (const auto& spec : specs_) {
      const ConditionalMoments terms = std::visit(
          [&](const auto& family) { return conditional_moment_terms(family[spec.graph], labels_, spec); }, instance_);
      out.push_back(terms.moments().deviation(spec.center));
    }
    return out;
  }

  const Instance& instance_;
  const std::vector<EventSpec>& specs_;
  Assignment labels_;
};

int validate_specs(const Instance& instance, const std::vector<EventSpec>& specs, int fallback_k) {
  const bool hyper = std::holds_alternative<HypergraphFamily>(instance);
  const int k = specs.empty() ? fallback_k : specs.front().k;
  if (k < 2) {
    throw ContractError("class count must be at least 2");
  }
  for (const auto& spec : specs) {
    if (spec.k != k) {
      throw ContractError("all specs must share one class count");
    }
    if (spec.graph >= member_count(instance)) {
      throw ContractError("spec refers to member " + std::to_string(spec.graph) + " of a family of " +
                          std::to_string(member_count(instance)));
    }
    if (!(spec.normalizer > 0.0)) {
      throw ContractError("spec normalizer must be positive");
    }
    if (hyper != (spec.statistic == Statistic::rainbow)) {
      throw ContractError("rainbow specs go with hypergraph families, the others with graph families");
    }
    if ((spec.statistic == Statistic::pair && !(0 <= spec.s && spec.s < spec.t && spec.t < k)) ||
        (spec.statistic == Statistic::within && !(0 <= spec.s && spec.s < k))) {
      throw ContractError("spec class indices out of range");
    }
    if (spec.statistic == Statistic::rainbow &&
        static_cast<std::size_t>(k) != std::get<HypergraphFamily>(instance).r()) {
      throw ContractError("rainbow specs need k = r");
    }
  }
  return k;
}

std::unique_ptr<Engine> make_engine(const Instance& instance, const std::vector<EventSpec>& specs, int k,
                                    bool naive) {
  if (naive) {
    return std::make_unique<NaiveEngine>(instance, specs, k);
  }
  if (const auto* family = std::get_if<GraphFamily>(&instance)) {
    return std::make_unique<GraphEngine>(*family, specs, k);
  }
  return std::make_unique<HypergraphEngine>(std::get<HypergraphFamily>(instance), specs, k);
}

} // namespace

CutReport spec_report(const Instance& instance, const Assignment& a, const std::vector<EventSpec>& specs) {
  require_total(a, vertex_count(instance), "spec_report");
  CutReport report;
  report.k = a.k();
  report.class_sizes = a.class_sizes();
  if (const auto* family = std::get_if<GraphFamily>(&instance)) {
    for (const Graph& g : family->graphs()) {
      report.graph_counts.push_back(partition_counts(g, a));
    }
  } else {
    for (const Hypergraph& h : std::get<HypergraphFamily>(instance).members()) {
      report.rainbow_counts.push_back(rainbow_count(h, a));
    }
  }
  for (const auto& spec : specs) {
    Constraint c;
    c.graph = spec.graph;
    c.statistic = spec.statistic;
    c.s = spec.s;
    c.t = spec.t;
    c.count = realized_count(instance, a, spec);
    c.threshold = spec.threshold();
    c.satisfied = static_cast<double>(c.count) >= c.threshold;
    report.constraints.push_back(c);
  }
  return report;
}

DerandResult derandomize(const Instance& instance, const std::vector<EventSpec>& specs,
                         const DescentOptions& options) {
  const int k = validate_specs(instance, specs, options.k);
  auto engine = make_engine(instance, specs, k, options.naive_recompute);

  DerandResult result{.assignment = Assignment(vertex_count(instance), k), .report = {}, .trace = {}};
  result.initial_value = total_value(specs, engine->current());
  if (!(result.initial_value < 1.0)) {
    throw ContractError("estimator of the empty assignment is " + std::to_string(result.initial_value) +
                        ", must be below 1");
  }

  double value = result.initial_value;
  std::vector<Fraction> dev;
  std::vector<double> cand(static_cast<std::size_t>(k));
  for (Vertex v : vertex_order(instance, options.order)) {
    for (Label c = 0; c < k; ++c) {
      engine->candidate(v, c, dev);
      cand[static_cast<std::size_t>(c)] = total_value(specs, dev);
    }
    Label best = 0;
    for (Label c = 1; c < k; ++c) {
      if (cand[static_cast<std::size_t>(c)] < cand[static_cast<std::size_t>(best)]) {
        best = c;
      }
    }
    engine->commit(v, best);
    result.assignment.set(v, best);
    value = cand[static_cast<std::size_t>(best)];
    DescentStep step{.vertex = v, .chosen = best, .value = value, .candidates = {}};
    if (options.record_candidates) {
      step.candidates = cand;
    }
    result.trace.push_back(std::move(step));
  }
  result.final_value = value;
  result.report = spec_report(instance, result.assignment, specs);
  if (!result.report.all_satisfied()) {
    throw std::logic_error("descent finished with estimator " + std::to_string(value) +
                           " but a constraint is violated");
  }
  return result;
}

} // namespace simcut
