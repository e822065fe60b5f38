#include "simcut/run_report.hpp"

#include "simcut/errors.hpp"
#include "simcut/event_spec.hpp"
#include "simcut/instance_io.hpp"
#include "simcut/random_partitioner.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace simcut {

std::string to_string(Method m) { return m == Method::mc ? "mc" : "derand"; }

Method method_from_string(const std::string& s) {
  if (s == "mc") return Method::mc;
  if (s == "derand") return Method::derand;
  throw ContractError("unknown method '" + s + "' (expected mc or derand)");
}

namespace {

std::string exact(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string fixed3(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << x;
  return os.str();
}

} // namespace

void write_run_report(std::ostream& out, const RunReport& r) {
  out << "report simcut 1\n";
  out << "digest " << r.digest << '\n';
  out << "method " << to_string(r.method) << '\n';
  out << "theorem " << to_string(r.guarantee.theorem) << '\n';
  out << "k " << r.guarantee.k << '\n';
  out << "ell " << r.ell << '\n';
  out << "vertices " << r.n << '\n';
  out << "epsilon " << exact(r.guarantee.epsilon) << '\n';
  out << "seed " << r.seed << '\n';
  out << "order " << to_string(r.order) << '\n';
  out << "balanced " << (r.balanced ? 1 : 0) << '\n';
  out << "slack " << (r.slack ? exact(*r.slack) : std::string("none")) << '\n';
  out << "max_tries " << r.max_tries << '\n';
  out << "assignment";
  for (Label l : r.labels) {
    out << ' ' << l;
  }
  out << '\n';
  out << "class_sizes";
  for (std::size_t s : r.report.class_sizes) {
    out << ' ' << s;
  }
  out << '\n';
  for (const auto& c : r.report.constraints) {
    out << "constraint " << c.graph << ' ' << to_string(c.statistic) << ' ' << c.s << ' ' << c.t << ' ' << c.count
        << ' ' << exact(c.threshold) << ' ' << fixed3(c.margin()) << ' ' << (c.satisfied ? "pass" : "fail") << '\n';
  }
  if (r.report.balance) {
    const auto& b = *r.report.balance;
    out << "balance " << exact(b.target) << ' ' << exact(b.slack) << ' ' << (b.satisfied ? "pass" : "fail") << '\n';
  }
  if (r.method == Method::mc) {
    out << "tries " << r.tries_used << '\n';
  } else {
    out << "descent_steps " << r.descent_steps << '\n';
    out << "estimator_initial " << exact(r.initial_estimator) << '\n';
    out << "estimator_final " << exact(r.final_estimator) << '\n';
    for (const auto& step : r.trace) {
      out << "trace " << step.vertex << ' ' << step.chosen << ' ' << exact(step.value) << '\n';
    }
  }
  out << "wall_ms " << fixed3(r.wall_ms) << '\n';
  out << "status " << (r.pass() ? "pass" : "fail") << '\n';
  out << "end\n";
}

std::string format_run_report(const RunReport& r) {
  std::ostringstream os;
  write_run_report(os, r);
  return os.str();
}

namespace {

template <typename T>
T number(std::istringstream& in, std::size_t line, const char* what) {
  T value{};
  if (!(in >> value)) {
    throw ParseError(ParseIssue::syntax, line, std::string("bad ") + what);
  }
  return value;
}

double real(std::istringstream& in, std::size_t line, const char* what) {
  std::string tok;
  if (!(in >> tok)) {
    throw ParseError(ParseIssue::syntax, line, std::string("missing ") + what);
  }
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) {
      throw std::invalid_argument(tok);
    }
    return v;
  } catch (const std::exception&) {
    throw ParseError(ParseIssue::syntax, line, std::string("bad ") + what + " '" + tok + "'");
  }
}

bool flag(std::istringstream& in, std::size_t line) {
  std::string tok;
  in >> tok;
  if (tok == "pass") return true;
  if (tok == "fail") return false;
  throw ParseError(ParseIssue::syntax, line, "expected pass or fail");
}

} // namespace

RunReport parse_run_report(std::istream& in) {
  RunReport r;
  std::string raw;
  std::size_t number_of_line = 0;
  bool started = false;
  bool ended = false;
  while (std::getline(in, raw)) {
    ++number_of_line;
    const std::size_t ln = number_of_line;
    std::istringstream line(raw);
    std::string key;
    if (!(line >> key)) {
      continue;
    }
    if (!started) {
      std::string tool;
      std::string version;
      line >> tool >> version;
      if (key != "report" || tool != "simcut" || version != "1") {
        throw ParseError(ParseIssue::bad_header, ln, "expected 'report simcut 1'");
      }
      started = true;
      continue;
    }
    if (key == "end") {
      ended = true;
      break;
    }
    try {
      if (key == "digest") {
        line >> r.digest;
      } else if (key == "method") {
        r.method = method_from_string(number<std::string>(line, ln, "method"));
      } else if (key == "theorem") {
        r.guarantee.theorem = theorem_from_string(number<std::string>(line, ln, "theorem"));
      } else if (key == "k") {
        r.guarantee.k = number<int>(line, ln, "k");
      } else if (key == "ell") {
        r.ell = number<std::size_t>(line, ln, "ell");
      } else if (key == "vertices") {
        r.n = number<std::size_t>(line, ln, "vertices");
      } else if (key == "epsilon") {
        r.guarantee.epsilon = real(line, ln, "epsilon");
      } else if (key == "seed") {
        r.seed = number<std::uint64_t>(line, ln, "seed");
      } else if (key == "order") {
        r.order = vertex_order_from_string(number<std::string>(line, ln, "order"));
      } else if (key == "balanced") {
        r.balanced = number<int>(line, ln, "balanced") != 0;
      } else if (key == "slack") {
        std::string tok;
        line >> tok;
        if (tok != "none") {
          std::istringstream again(tok);
          r.slack = real(again, ln, "slack");
        }
      } else if (key == "max_tries") {
        r.max_tries = number<std::size_t>(line, ln, "max_tries");
      } else if (key == "assignment") {
        Label l;
        while (line >> l) {
          r.labels.push_back(l);
        }
      } else if (key == "class_sizes") {
        std::size_t s;
        while (line >> s) {
          r.report.class_sizes.push_back(s);
        }
      } else if (key == "constraint") {
        Constraint c;
        c.graph = number<std::size_t>(line, ln, "graph index");
        c.statistic = statistic_from_string(number<std::string>(line, ln, "statistic"));
        c.s = number<int>(line, ln, "class s");
        c.t = number<int>(line, ln, "class t");
        c.count = number<std::int64_t>(line, ln, "count");
        c.threshold = real(line, ln, "threshold");
        real(line, ln, "margin");
        c.satisfied = flag(line, ln);
        r.report.constraints.push_back(c);
      } else if (key == "balance") {
        BalanceCheck b;
        b.target = real(line, ln, "balance target");
        b.slack = real(line, ln, "balance slack");
        b.satisfied = flag(line, ln);
        r.report.balance = b;
      } else if (key == "tries") {
        r.tries_used = number<std::size_t>(line, ln, "tries");
      } else if (key == "descent_steps") {
        r.descent_steps = number<std::size_t>(line, ln, "descent_steps");
      } else if (key == "estimator_initial") {
        r.initial_estimator = real(line, ln, "estimator");
      } else if (key == "estimator_final") {
        r.final_estimator = real(line, ln, "estimator");
      } else if (key == "trace") {
        DescentStep step;
        step.vertex = number<Vertex>(line, ln, "trace vertex");
        step.chosen = number<Label>(line, ln, "trace class");
        step.value = real(line, ln, "trace value");
        r.trace.push_back(step);
      } else if (key == "wall_ms") {
        r.wall_ms = real(line, ln, "wall_ms");
      } else if (key == "status") {
        // Derived from the constraints; re-derived on read.
      } else {
        throw ParseError(ParseIssue::syntax, ln, "unknown key '" + key + "'");
      }
    } catch (const ContractError& err) {
      throw ParseError(ParseIssue::syntax, ln, err.what());
    }
  }
  if (!started || !ended) {
    throw ParseError(ParseIssue::count_mismatch, number_of_line, "report is missing its 'end' line");
  }
  if (r.digest.empty()) {
    throw ParseError(ParseIssue::syntax, number_of_line, "report has no digest");
  }
  r.report.k = r.guarantee.k;
  return r;
}

RunReport parse_run_report(const std::string& text) {
  std::istringstream in(text);
  return parse_run_report(in);
}

VerifyResult verify_run_report(const Instance& instance, const RunReport& r) {
  VerifyResult v;
  auto mismatch = [&](const std::string& what) {
    v.consistent = false;
    v.mismatches.push_back(what);
  };
  if (r.digest != instance_digest(instance)) {
    mismatch("digest " + r.digest + " does not match instance " + instance_digest(instance));
  }
  if (r.n != vertex_count(instance) || r.ell != member_count(instance)) {
    mismatch("vertex or member count differs from the instance");
  }
  CutReport fresh;
  try {
    const Assignment a(r.labels, r.guarantee.k);
    fresh = check_report(instance, a, r.guarantee, r.balanced ? r.slack : std::nullopt);
  } catch (const std::exception& err) {
    mismatch(std::string("cannot recompute: ") + err.what());
    v.pass = false;
    return v;
  }
  if (fresh.class_sizes != r.report.class_sizes) {
    mismatch("class sizes differ");
  }
  if (fresh.constraints.size() != r.report.constraints.size()) {
    mismatch("report lists " + std::to_string(r.report.constraints.size()) + " constraints, recomputation gives " +
             std::to_string(fresh.constraints.size()));
  } else {
    for (std::size_t i = 0; i < fresh.constraints.size(); ++i) {
      if (!(fresh.constraints[i] == r.report.constraints[i])) {
        const auto& c = fresh.constraints[i];
        mismatch("constraint " + std::to_string(i) + " (graph " + std::to_string(c.graph) + ", " +
                 to_string(c.statistic) + ") recomputes to count " + std::to_string(c.count) + ", threshold " +
                 exact(c.threshold));
      }
    }
  }
  if (fresh.balance != r.report.balance) {
    mismatch("balance check differs");
  }
  v.pass = v.consistent && fresh.all_satisfied();
  return v;
}

RunReport run_partition(const Instance& instance, const PartitionRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  r.digest = instance_digest(instance);
  r.method = request.method;
  r.ell = member_count(instance);
  r.n = vertex_count(instance);
  r.order = request.order;
  r.seed = request.seed;

  if (request.method == Method::mc) {
    McConfig cfg;
    cfg.guarantee = request.guarantee;
    cfg.balanced = request.balanced;
    cfg.balance_slack = request.slack;
    cfg.max_tries = request.max_tries;
    cfg.seed = request.seed;
    cfg = resolve_config(instance, cfg);
    McResult mc = mc_partition(instance, cfg);
    r.guarantee = cfg.guarantee;
    r.balanced = cfg.balanced;
    r.slack = cfg.balance_slack;
    r.max_tries = cfg.max_tries;
    r.labels.assign(mc.assignment.labels().begin(), mc.assignment.labels().end());
    r.report = std::move(mc.report);
    r.tries_used = mc.tries_used;
  } else {
    if (request.balanced) {
      throw ContractError("balanced classes are only available with --method mc");
    }
    r.guarantee = resolve_guarantee(instance, request.guarantee);
    const auto specs = make_event_specs(instance, r.guarantee);
    DescentOptions options;
    options.order = request.order;
    options.record_candidates = false;
    options.k = r.guarantee.k;
    DerandResult d = derandomize(instance, specs, options);
    r.labels.assign(d.assignment.labels().begin(), d.assignment.labels().end());
    r.report = check_report(instance, d.assignment, r.guarantee);
    r.descent_steps = d.trace.size();
    r.initial_estimator = d.initial_value;
    r.final_estimator = d.final_value;
    if (request.trace) {
      r.trace = std::move(d.trace);
    }
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

} // namespace simcut
