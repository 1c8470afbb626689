#include "ordspace/report.hpp"

#include "ordspace/io.hpp"

namespace ordspace {

namespace {

Json set_json(PointSet s) {
  Json out = Json::array();
  for (Point p : s.members()) out.push_back(p + 1);
  return out;
}

Json pair_json(PointPair p) { return Json::array({p.first + 1, p.second + 1}); }

}  // namespace

std::string version() { return ORDSPACE_VERSION; }

Json envelope(const std::string& command, std::uint64_t seed) {
  return Json{{"tool", "ordspace"}, {"version", version()}, {"command", command}, {"seed", seed}};
}

Json permutation_json(const Permutation& f) {
  Json out = Json::array();
  for (Point p : f) out.push_back(p + 1);
  return out;
}

Json to_json(const OrdinalSpace& s) {
  Json rows = Json::array();
  for (int i = 0; i < s.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < s.size(); ++j) row.push_back(s.rank(i, j));
    rows.push_back(row);
  }
  return Json{{"n", s.size()}, {"k", s.levels()}, {"ranks", rows}, {"text", format_rank_matrix(s)}};
}

Json to_json(const BallSet& b) {
  Json balls = Json::array();
  for (int i = 0; i < b.size(); ++i) {
    Json centers = Json::array();
    for (auto [c, t] : b.provenance[i]) centers.push_back(Json{{"center", c + 1}, {"threshold", t}});
    balls.push_back(Json{{"members", set_json(b.balls[i])}, {"generated_by", centers}});
  }
  return Json{{"count", b.size()}, {"balls", balls}};
}

Json to_json(const HasseDiagram& h) {
  Json vertices = Json::array();
  for (const auto& v : h.vertices) vertices.push_back(set_json(v));
  Json arcs = Json::array();
  for (auto [child, parent] : h.arcs) arcs.push_back(Json::array({child, parent}));
  return Json{{"vertices", vertices}, {"arcs", arcs}};
}

Json to_json(const LineWitness& w) {
  Json gaps = Json::array();
  Json decimal = Json::array();
  for (const auto& g : w.gaps) {
    gaps.push_back(to_string(g));
    decimal.push_back(to_decimal(g));
  }
  Json coords = Json::array();
  for (const auto& c : w.coordinates()) coords.push_back(to_string(c));
  return Json{{"ordering", permutation_json(w.ordering)},
              {"gaps", gaps},
              {"gaps_decimal", decimal},
              {"coordinates", coords},
              {"margin", to_string(w.margin)}};
}

Json to_json(const EuclidWitness& w) {
  Json coords = Json::array();
  Json approx = Json::array();
  for (int i = 0; i < w.size(); ++i) {
    Json row = Json::array();
    Json arow = Json::array();
    for (int j = 0; j < w.dim; ++j) {
      row.push_back(to_string(w.coeffs(i, j)));
      arow.push_back(w.approx(i, j));
    }
    coords.push_back(row);
    approx.push_back(arow);
  }
  Json out{{"dim", w.dim}, {"coords", coords}};
  if (!w.rational_coordinates()) {
    // coordinate (i, j) is coords[i][j] * sqrt(axis_radicands[j])
    Json radicands = Json::array();
    for (int j = 0; j < w.dim; ++j) radicands.push_back(to_string(w.radicands(j)));
    out["axis_radicands"] = radicands;
  }
  out["coords_decimal"] = approx;
  out["verified"] = w.verified;
  out["method"] = w.method;
  return out;
}

Json to_json(const CMResult& c) {
  return Json{{"k", c.k}, {"value", to_string(c.value)}, {"sign", c.sign}};
}

Json to_json(const R2Report& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    clauses.push_back(Json{{"name", c.name},
                           {"formula", c.formula},
                           {"value", c.value},
                           {"bound", c.bound},
                           {"applies", c.applies},
                           {"holds", c.holds}});
  }
  return Json{{"passes", r.passes}, {"diametrical_ok", r.diametrical_ok()}, {"clauses", clauses}, {"notes", r.notes}};
}

Json to_json(const MengerProbe& p) {
  Json refuted = Json::array();
  for (const auto& subset : p.refuted) {
    Json s = Json::array();
    for (Point x : subset) s.push_back(x + 1);
    refuted.push_back(s);
  }
  return Json{{"dim", p.dim},
              {"whole", name(p.whole)},
              {"subsets_checked", p.subsets_checked},
              {"refuted_subsets", refuted},
              {"inconclusive_subsets", p.inconclusive},
              {"conjecture_counterexample", p.conjecture_counterexample}};
}

Json to_json(const OrdDistResult& r) {
  Json dis = Json::array();
  for (const auto& [p, q] : r.disagreements) dis.push_back(Json::array({pair_json(p), pair_json(q)}));
  return Json{{"value", r.value}, {"witness", permutation_json(r.witness)}, {"disagreements", dis}};
}

Json to_json(const CensusReport& r) {
  auto extreme = [](const std::optional<BallExtreme>& e) -> Json {
    if (!e) return nullptr;
    return Json{{"value", e->value}, {"witness", format_rank_matrix(e->witness)}};
  };
  Json out{{"n", r.n},
           {"filter", name(r.filter)},
           {"candidates", r.candidates},
           {"total_nonisomorphic", r.total_nonisomorphic},
           {"max_balls", extreme(r.max_balls)},
           {"min_balls_distinct", extreme(r.min_balls_distinct)},
           {"min_attainers", r.min_attainers},
           {"matches_max_sequence", name(r.max_verdict)},
           {"matches_triangular", name(r.min_verdict)}};
  out["r1_embeddable"] = r.r1_embeddable ? Json(*r.r1_embeddable) : Json(nullptr);
  out["seconds"] = r.seconds;
  return out;
}

Json to_json(const MajorizationResult& m) {
  Json out{{"holds", m.holds}};
  if (m.counterexample) {
    auto seq = [](const IndexSequence& a) {
      Json s = Json::array();
      for (int i : a) s.push_back(i + 1);
      return s;
    };
    out["counterexample"] = Json::array({seq(m.counterexample->first), seq(m.counterexample->second)});
  }
  return out;
}

}  // namespace ordspace
