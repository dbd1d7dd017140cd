#include "polyscribe/inscribability.hpp"

#include <algorithm>

#include "polyscribe/errors.hpp"
#include "polyscribe/simplex.hpp"

namespace polyscribe {

const Rational& WeightFunction::at(int edge) const {
  auto it = values.find(edge);
  if (it == values.end())
    throw InputError("weight function: missing weight for edge " + std::to_string(edge));
  return it->second;
}

WeightFunction WeightFunction::uniform(const PlanarGraph& g, const Rational& w) {
  WeightFunction f;
  for (int e = 0; e < g.edge_count(); ++e) f.values[e] = w;
  return f;
}

namespace {

// LP in substituted variables u(e) = w(e) - t >= 0 and free t:
//   max t
//   u(e) + 2t <= 1/2                   (W1 upper; W1 lower is u >= 0)
//   sum_{e at v} u(e) + d(v) t  = 1    (W2)
//   sum_{e in g} u(e) + (|g|-1) t >= 1 (W3)
struct RivinLp {
  const PlanarGraph& g;
  lp::Problem prob;
  int t_var;

  explicit RivinLp(const PlanarGraph& g_) : g(g_) {
    for (int e = 0; e < g.edge_count(); ++e) prob.add_var(0);
    t_var = prob.add_var(1, /*free_var=*/true);
    prob.maximize = true;
    for (int e = 0; e < g.edge_count(); ++e)
      prob.add_row({{{e, 1}, {t_var, 2}}, lp::Sense::LE, Rational(1, 2)});
    for (int v = 0; v < g.vertex_count(); ++v) {
      lp::Constraint c;
      for (int e : g.vertex_edges(v)) c.terms.push_back({e, 1});
      c.terms.push_back({t_var, g.degree(v)});
      c.sense = lp::Sense::EQ;
      c.rhs = 1;
      prob.add_row(std::move(c));
    }
  }

  void add_circuit(const std::vector<int>& edges) {
    lp::Constraint c;
    for (int e : edges) c.terms.push_back({e, 1});
    c.terms.push_back({t_var, static_cast<int>(edges.size()) - 1});
    c.sense = lp::Sense::GE;
    c.rhs = 1;
    prob.add_row(std::move(c));
  }

  // (w, t) from a solution of the substituted LP.
  std::pair<WeightFunction, Rational> extract(const lp::Solution& s) const {
    Rational t = s.x[t_var];
    WeightFunction w;
    for (int e = 0; e < g.edge_count(); ++e) w.values[e] = s.x[e] + t;
    return {w, t};
  }
};

}  // namespace

InscribabilityVerdict rivin_feasibility(const PlanarGraph& g, const RivinOptions& opt) {
  auto rep = validate_polyhedral(g);
  if (!rep.polyhedral()) throw InputError("rivin_feasibility: input graph is not polyhedral");

  CycleOptions copt;
  copt.max_length = opt.max_circuit_length;
  copt.cap = opt.circuit_cap;
  auto circuits = prismatic_circuits(g, copt);

  InscribabilityVerdict verdict;
  verdict.circuits_used = static_cast<int>(circuits.size());

  RivinLp lp(g);
  std::vector<char> active(circuits.size(), 0);

  // Row generation: solve, then add the most violated circuit rows until the
  // optimum satisfies every prismatic constraint.  The final t* is the true
  // optimum of the full system: dropping rows can only increase the maximum,
  // and the returned point satisfies all of them.
  for (;;) {
    lp::Solution sol = lp::solve(lp.prob);
    if (sol.status == lp::Status::Infeasible) {
      verdict.inscribable = false;
      verdict.violated.push_back(
          "W2 vertex-sum system has no solution together with the bound rows");
      return verdict;
    }
    if (sol.status == lp::Status::Unbounded)
      throw std::logic_error("rivin LP cannot be unbounded (t <= 1/4 by W1 rows)");

    auto [w, t] = lp.extract(sol);
    bool added = false;
    for (std::size_t i = 0; i < circuits.size(); ++i) {
      if (active[i]) continue;
      Rational sum = 0;
      for (int e : circuits[i].edges) sum += w.values[e];
      if (sum < 1 + t) {
        lp.add_circuit(circuits[i].edges);
        active[i] = 1;
        added = true;
      }
    }
    if (added) continue;

    verdict.slack = t;
    verdict.inscribable = (t > 0);
    if (verdict.inscribable) {
      verdict.certificate = std::move(w);
    } else {
      auto report = check_weights(g, w, opt);
      for (const auto& c : report.checks)
        if (!c.pass) {
          std::string els;
          for (std::size_t k = 0; k < c.elements.size(); ++k)
            els += (k ? "," : "") + std::to_string(c.elements[k]);
          verdict.violated.push_back(c.kind + " at {" + els + "}: lhs " +
                                     rational_to_string(c.lhs) + " vs " +
                                     rational_to_string(c.bound));
        }
      if (verdict.violated.empty())
        verdict.violated.push_back("all conditions only weakly satisfiable (t* = " +
                                   rational_to_string(t) + ")");
    }
    return verdict;
  }
}

WeightReport check_weights(const PlanarGraph& g, const WeightFunction& w, const RivinOptions& opt) {
  WeightReport rep;
  auto push = [&rep](ConditionCheck c) {
    c.pass = c.strict ? (c.kind == "W1-upper" ? c.lhs < c.bound
                                              : c.lhs > c.bound)
                      : (c.lhs == c.bound);
    if (!c.pass) {
      rep.all_pass = false;
      rep.failures++;
    }
    rep.checks.push_back(std::move(c));
  };

  for (int e = 0; e < g.edge_count(); ++e) {
    const Rational& we = w.at(e);
    push({"W1-lower", {e}, we, Rational(0), true, false});
    push({"W1-upper", {e}, we, Rational(1, 2), true, false});
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    Rational sum = 0;
    for (int e : g.vertex_edges(v)) sum += w.at(e);
    push({"W2", {v}, sum, Rational(1), false, false});
  }
  // Dual formulation: the faces of G* are the vertices of g, and edge ids
  // agree, so the dual face sums must reproduce the vertex sums exactly.
  {
    PlanarGraph dual = g.dual();
    for (int f = 0; f < dual.face_count(); ++f) {
      Rational sum = 0;
      for (int d : dual.face_darts(f)) sum += w.at(PlanarGraph::edge_of(d));
      push({"W2-dual", {f}, sum, Rational(1), false, false});
    }
  }
  CycleOptions copt;
  copt.max_length = opt.max_circuit_length;
  copt.cap = opt.circuit_cap;
  for (const auto& pc : prismatic_circuits(g, copt)) {
    Rational sum = 0;
    for (int e : pc.edges) sum += w.at(e);
    push({"W3", pc.edges, sum, Rational(1), true, false});
  }
  return rep;
}

}  // namespace polyscribe
