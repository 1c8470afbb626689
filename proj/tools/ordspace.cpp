// Command-line front end. Exit codes: 0 computed, 1 negative decision,
// 2 input error, 3 size guard exceeded, 4 internal solver failure.
#include "ordspace/balls.hpp"
#include "ordspace/census.hpp"
#include "ordspace/core.hpp"
#include "ordspace/errors.hpp"
#include "ordspace/euclid.hpp"
#include "ordspace/io.hpp"
#include "ordspace/line.hpp"
#include "ordspace/orddist.hpp"
#include "ordspace/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ordspace;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kGuard = 3, kInternal = 4 };

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  int limit = kDefaultPointLimit;
  int jobs = 1;
};

std::string header(const std::string& command, const Globals& g) {
  return "ordspace " + version() + " " + command + " (seed " + std::to_string(g.seed) + ")\n";
}

OrdinalSpace load_space(const std::string& path) { return parse_rank_matrix(read_file(path)); }

std::string format_permutation(const Permutation& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " " : "") + std::to_string(f[i] + 1);
  return out;
}

std::string format_sequence(const IndexSequence& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i] + 1);
  return out + ")";
}

Permutation parse_permutation(const std::string& text, int n) {
  Permutation f;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      f.push_back(std::stoi(item) - 1);
    } catch (const std::exception&) {
      throw ValidationError("bad point index '" + item + "' in enumeration");
    }
  }
  std::vector<bool> seen(n, false);
  if (static_cast<int>(f.size()) != n) throw ValidationError("enumeration must list all " + std::to_string(n) + " points");
  for (Point p : f) {
    if (p < 0 || p >= n || seen[p]) throw ValidationError("enumeration is not a permutation of 1.." + std::to_string(n));
    seen[p] = true;
  }
  return f;
}

void emit(const Globals& g, const std::string& command, Json body, const std::string& text) {
  if (g.json) {
    Json out = envelope(command, g.seed);
    for (auto& [k, v] : body.items()) out[k] = v;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << header(command, g) << text;
  }
}

std::string rational_list(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + to_string(v[i]);
  return out;
}

std::string witness_text(const EuclidWitness& w) {
  std::ostringstream os;
  for (int i = 0; i < w.size(); ++i) {
    os << "  x" << i + 1 << " = (";
    for (int j = 0; j < w.dim; ++j) {
      if (j) os << ", ";
      os << to_string(w.coeffs(i, j));
      if (w.radicands(j) != 1 && w.coeffs(i, j) != 0) os << "*sqrt(" << to_string(w.radicands(j)) << ")";
    }
    os << ")  ~ (";
    for (int j = 0; j < w.dim; ++j) os << (j ? ", " : "") << w.approx(i, j);
    os << ")\n";
  }
  return os.str();
}

EuclidWitness line_to_euclid(const LineWitness& lw) {
  const auto coords = lw.coordinates();
  const int n = static_cast<int>(coords.size());
  EuclidWitness w;
  w.dim = 1;
  w.coeffs = RationalMatrix(n, 1);
  w.radicands = RationalVector::Constant(1, Rational(1));
  w.approx = Eigen::MatrixXd(n, 1);
  for (int i = 0; i < n; ++i) {
    w.coeffs(i, 0) = coords[i];
    w.approx(i, 0) = to_double(coords[i]);
  }
  w.verified = true;
  w.method = "line-lp";
  return w;
}

// --- subcommands -----------------------------------------------------------

int cmd_ordtype(const Globals& g, const std::string& path) {
  const auto d = parse_distance_csv(read_file(path));
  const auto s = ordinal_type(d);
  emit(g, "ordtype", Json{{"space", to_json(s)}}, format_rank_matrix(s));
  return kOk;
}

int cmd_validate(const Globals& g, const std::string& path) {
  const auto c = parse_comparisons(read_file(path));
  try {
    const auto s = from_comparisons(c);
    emit(g, "validate", Json{{"valid", true}, {"space", to_json(s)}}, "valid\n" + format_rank_matrix(s));
    return kOk;
  } catch (const AxiomViolation& e) {
    Json wit = Json::array();
    std::string text = std::string(e.what()) + "\n";
    for (const auto& w : e.witnesses()) {
      const std::string line = std::to_string(w.x + 1) + " " + std::to_string(w.y + 1) + " " +
                               std::to_string(w.z + 1) + " " + std::to_string(w.w + 1) + " " + name(w.rel);
      wit.push_back(line);
      text += "  " + line + "\n";
    }
    emit(g, "validate", Json{{"valid", false}, {"axiom", e.axiom()}, {"detail", e.what()}, {"witnesses", wit}},
         text);
    return kNegative;
  } catch (const Underdetermined& e) {
    auto pair = [](Underdetermined::Pair p) {
      return "{" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + "}";
    };
    emit(g, "validate",
         Json{{"valid", false}, {"underdetermined", Json::array({pair(e.first()), pair(e.second())})}},
         std::string("underdetermined: ") + e.what() + "\n");
    return kNegative;
  }
}

int cmd_iso(const Globals& g, const std::string& a_path, const std::string& b_path) {
  const auto a = load_space(a_path);
  const auto b = load_space(b_path);
  if (a.size() > g.limit) throw SizeLimit("isomorphism test", a.size(), g.limit);
  const auto r = is_isomorphic(a, b);
  const bool hasse_iso = hasse_isomorphic(hasse(ball_set(a)), hasse(ball_set(b))).isomorphic;
  Json body{{"isomorphic", r.isomorphic}, {"hasse_isomorphic", hasse_iso}};
  std::string text;
  if (r.isomorphic) {
    body["witness"] = permutation_json(*r.witness);
    text = "isomorphic; witness " + format_permutation(*r.witness) + "\n";
  } else {
    text = std::string("not isomorphic; Hasse diagrams isomorphic: ") + (hasse_iso ? "yes" : "no") + "\n";
  }
  emit(g, "iso", body, text);
  return r.isomorphic ? kOk : kNegative;
}

int cmd_dord(const Globals& g, const std::string& a_path, const std::string& b_path, bool oracle) {
  const auto a = load_space(a_path);
  const auto b = load_space(b_path);
  const auto r = d_ord(a, b, g.limit);
  Json body{{"d_ord", to_json(r)}};
  std::ostringstream os;
  os << "d_ord = " << r.value << "\nwitness " << format_permutation(r.witness) << "\n";
  if (oracle) {
    const long long check = d_ord_ordered_quadruples(a, b, g.limit);
    if (check != r.value) {
      throw SolverFailure("ordered-quadruple oracle gives " + std::to_string(check) + ", branch and bound gives " +
                          std::to_string(r.value));
    }
    body["oracle"] = check;
    os << "oracle agrees (ordered quadruples / 8 = " << check << ")\n";
  }
  emit(g, "dord", body, os.str());
  return kOk;
}

int cmd_balls(const Globals& g, const std::string& path) {
  const auto s = load_space(path);
  const auto b = ball_set(s);
  std::ostringstream os;
  os << b.size() << " balls\n";
  for (Point c = 0; c < s.size(); ++c) {
    os << "x" << c + 1 << ":";
    bool first = true;
    for (const auto& ball : balls_at(s, c)) {
      os << (first ? " " : " < ") << format_point_set(ball.members);
      first = false;
    }
    os << "\n";
  }
  os << "distinct:\n";
  for (const auto& ball : b.balls) os << "  " << format_point_set(ball) << "\n";
  emit(g, "balls", Json{{"balls", to_json(b)}}, os.str());
  return kOk;
}

int cmd_hasse(const Globals& g, const std::string& path, bool dot) {
  const auto s = load_space(path);
  const auto h = hasse(ball_set(s));
  if (dot) {
    std::cout << "// ordspace " << version() << " hasse (seed " << g.seed << ")\n" << to_dot(h);
    return kOk;
  }
  std::ostringstream os;
  os << h.size() << " vertices, " << h.arcs.size() << " arcs\n";
  for (int v = 0; v < h.size(); ++v) os << "  v" << v << " " << format_point_set(h.vertices[v]) << "\n";
  for (auto [u, v] : h.arcs) os << "  v" << u << " -> v" << v << "\n";
  emit(g, "hasse", Json{{"hasse", to_json(h)}}, os.str());
  return kOk;
}

// Explains why no line embedding exists, strongest cheap reason first.
std::string line_obstruction(const OrdinalSpace& s, const Globals& g) {
  const auto profile = check_p210(s);
  if (!profile.holds) return "class profile: " + profile.violated;
  if (dp_pairs(s).size() > 1) return "more than one pair at maximal distance; on a line the extreme pair is unique";
  if (!find_majorizing_enumeration(s, g.limit)) return "no enumeration has the majorization property";
  return "the strict-margin LP is infeasible for every ordering";
}

int cmd_embed1d(const Globals& g, const std::string& path) {
  const auto s = load_space(path);
  const auto w = embed_line(s, g.limit);
  Json body{{"embeddable", w.has_value()}};
  std::ostringstream os;
  if (w) {
    const auto j = to_json(*w);
    body["ordering"] = j["ordering"];
    body["gaps"] = j["gaps"];
    body["margin"] = j["margin"];
    body["gaps_decimal"] = j["gaps_decimal"];
    body["coordinates"] = j["coordinates"];
    os << "embeddable\nordering " << format_permutation(w->ordering) << "\ngaps " << rational_list(w->gaps)
       << "\nmargin " << to_string(w->margin) << "\ncoordinates";
    for (const auto& c : w->coordinates()) os << " " << to_string(c) << " (" << to_decimal(c) << ")";
    os << "\n";
  } else {
    const auto note = line_obstruction(s, g);
    body["obstruction"] = note;
    os << "not embeddable\nobstruction: " << note << "\n";
  }
  if (s.size() == 4) {
    const auto c = classify_t10(s);
    body["case_tag"] = c.tag;
    os << "case " << c.tag << "\n";
  }
  emit(g, "embed1d", body, os.str());
  return w ? kOk : kNegative;
}

int cmd_t10(const Globals& g, const std::string& path) {
  const auto s = load_space(path);
  const auto c = classify_t10(s);
  Json body{{"embeddable", c.embeddable}, {"case_tag", c.tag}, {"enumeration", permutation_json(c.enumeration)}};
  std::ostringstream os;
  os << "case " << c.tag << "\nenumeration " << format_permutation(c.enumeration) << "\n";
  if (c.embeddable) {
    const auto rel = t10_gap_relations(c.tag);
    body["gap_relations"] = rel;
    os << "gaps a, b, c satisfy: " << rel << "\n";
  }
  emit(g, "t10", body, os.str());
  return c.embeddable ? kOk : kNegative;
}

int cmd_majorization(const Globals& g, const std::string& path, const std::string& enumeration,
                     const std::string& mode) {
  const auto s = load_space(path);
  Permutation e;
  if (enumeration.empty()) {
    e.resize(s.size());
    for (int i = 0; i < s.size(); ++i) e[i] = i;
  } else {
    e = parse_permutation(enumeration, s.size());
  }
  const auto m = mode == "consecutive" ? MajorizationMode::Consecutive : MajorizationMode::Full;
  const auto r = check_majorization(s, e, m);
  std::ostringstream os;
  os << "mode " << mode << ", enumeration " << format_permutation(e) << "\n";
  if (r.holds) {
    os << "majorization holds\n";
  } else {
    os << "majorization fails: " << format_sequence(r.counterexample->first) << " vs "
       << format_sequence(r.counterexample->second) << "\n";
  }
  Json body{{"mode", mode}, {"enumeration", permutation_json(e)}, {"majorization", to_json(r)}};
  emit(g, "majorization", body, os.str());
  return r.holds ? kOk : kNegative;
}

int cmd_embednd(const Globals& g, const std::string& path, int dim, const HeuristicOptions& opts) {
  if (dim < 1) throw ValidationError("--dim must be at least 1");
  const auto s = load_space(path);
  if (s.size() > g.limit) throw SizeLimit("embednd", s.size(), g.limit);
  std::optional<EuclidWitness> w;
  EmbedStatus status = EmbedStatus::Inconclusive;
  std::string note;
  if (s.size() <= dim + 1) {
    w = realize_simplex(s);
    note = "simplex realization in dimension " + std::to_string(w->dim);
  } else if (dim == 1) {
    if (auto lw = embed_line(s, g.limit)) {
      w = line_to_euclid(*lw);
    } else {
      status = EmbedStatus::NotEmbeddable;
      note = line_obstruction(s, g);
    }
  } else {
    if (dim == 2) {
      const auto r2 = check_r2_necessary(s);
      if (!r2.passes) {
        status = EmbedStatus::NotEmbeddable;
        for (const auto& c : r2.clauses) {
          if (c.applies && !c.holds) {
            note = "necessary condition '" + c.name + "' fails: " + c.formula;
            break;
          }
        }
      }
    }
    if (status != EmbedStatus::NotEmbeddable) {
      const auto h = embed_heuristic(s, dim, opts);
      w = h.witness;
      if (!w) {
        std::ostringstream os;
        os << "search found no verified configuration (" << h.restarts_used << " restarts, best loss "
           << h.best_loss << ")";
        note = os.str();
      }
    }
  }
  if (w) status = EmbedStatus::Embeddable;
  Json body{{"dim", dim}, {"status", name(status)}};
  std::string text = name(status) + "\n";
  if (!note.empty()) {
    body["note"] = note;
    text += note + "\n";
  }
  if (w) {
    body["witness"] = to_json(*w);
    text += "method " + w->method + "\n" + witness_text(*w);
  }
  emit(g, "embednd", body, text);
  return status == EmbedStatus::Embeddable ? kOk : kNegative;
}

int cmd_check_r2(const Globals& g, const std::string& path) {
  const auto s = load_space(path);
  const auto r = check_r2_necessary(s);
  std::ostringstream os;
  os << (r.passes ? "all necessary conditions hold (not a proof of embeddability)" : "not embeddable in the plane")
     << "\n";
  for (const auto& c : r.clauses) {
    os << "  " << c.name << ": " << c.formula << "  [" << c.value << " vs " << c.bound << "] "
       << (!c.applies ? "n/a" : c.holds ? "ok" : "FAILS") << "\n";
  }
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  emit(g, "check-r2", Json{{"r2", to_json(r)}}, os.str());
  return r.passes ? kOk : kNegative;
}

int cmd_menger(const Globals& g, const std::string& path, int dim, const HeuristicOptions& opts) {
  const auto s = load_space(path);
  const auto p = menger_probe(s, dim, opts, g.limit);
  std::ostringstream os;
  os << "whole space: " << name(p.whole) << " in dimension " << dim << "\n"
     << "subsets checked: " << p.subsets_checked << ", refuted: " << p.refuted.size()
     << ", inconclusive: " << p.inconclusive << "\n";
  for (const auto& sub : p.refuted) {
    os << "  refuted {";
    for (std::size_t i = 0; i < sub.size(); ++i) os << (i ? "," : "") << "x" << sub[i] + 1;
    os << "}\n";
  }
  os << "counterexample to the subset conjecture: " << (p.conjecture_counterexample ? "yes" : "no") << "\n";
  emit(g, "menger-probe", Json{{"probe", to_json(p)}}, os.str());
  return kOk;
}

int cmd_census(const Globals& g, int n, const std::string& filter_name, bool huge, const std::string& out_path) {
  const auto filter = filter_name == "injective" ? CensusFilter::Injective : CensusFilter::All;
  CensusOptions opts;
  opts.huge = huge;
  opts.jobs = g.jobs;
  const auto r = ball_extremes(n, filter, opts);
  Json body{{"census", to_json(r)}};
  std::ostringstream os;
  os << "n " << n << ", filter " << name(filter) << "\n"
     << "candidates " << r.candidates << "\n"
     << "isomorphism classes " << r.total_nonisomorphic << "\n";
  if (r.max_balls) {
    os << "max balls " << r.max_balls->value << " (" << name(r.max_verdict) << ")\nwitness\n"
       << format_rank_matrix(r.max_balls->witness);
  }
  if (r.min_balls_distinct) {
    os << "min balls over injective spaces " << r.min_balls_distinct->value << ", " << r.min_attainers
       << " attainer(s) (triangular " << n * (n + 1) / 2 << ": " << name(r.min_verdict) << ")\nwitness\n"
       << format_rank_matrix(r.min_balls_distinct->witness);
  }
  if (r.r1_embeddable) os << "line-embeddable classes " << *r.r1_embeddable << "\n";
  if (filter == CensusFilter::Injective && (n == 3 || n == 4)) {
    const auto h = minimal_hasse_shape_probe(n, path_interval_hasse(n));
    body["path_interval_shape"] = Json{{"min_balls", h.min_balls},
                                       {"attainers", h.attainers},
                                       {"attainers_matching", h.attainers_matching},
                                       {"non_attainers_matching", h.non_attainers_matching}};
    os << "minimal attainers with path-interval Hasse shape " << h.attainers_matching << "/" << h.attainers
       << ", other spaces with that shape " << h.non_attainers_matching << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot write '" + out_path + "'");
    Json full = envelope("census", g.seed);
    for (auto& [k, v] : body.items()) full[k] = v;
    out << full.dump(2) << '\n';
    os << "report written to " << out_path << "\n";
  }
  emit(g, "census", body, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordspace " + version() + ": finite ordinal spaces (pair-distance comparisons only)"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Print a JSON report instead of text");
  app.add_option("--seed", g.seed, "Seed for every randomized step (recorded in the output)");
  app.add_option("--limit", g.limit, "Point-count guard for exhaustive searches")->check(CLI::PositiveNumber);
  app.add_option("--jobs", g.jobs, "Worker threads for the census")->check(CLI::PositiveNumber);

  std::function<int()> run;
  std::string a, b;

  auto* ordtype = app.add_subcommand("ordtype", "Rank matrix of a distance CSV (ordinal type of a semimetric)");
  ordtype->add_option("distances", a, "CSV distance matrix")->required()->check(CLI::ExistingFile);
  ordtype->callback([&] { run = [&] { return cmd_ordtype(g, a); }; });

  auto* validate = app.add_subcommand("validate", "Build a space from quadruple comparisons or name the broken axiom");
  validate->add_option("comparisons", a, "Lines `x y z w LT|EQ|GT`")->required()->check(CLI::ExistingFile);
  validate->callback([&] { run = [&] { return cmd_validate(g, a); }; });

  auto* iso = app.add_subcommand("iso", "Isomorphism test with witness; also compares ball Hasse diagrams");
  iso->add_option("a", a)->required()->check(CLI::ExistingFile);
  iso->add_option("b", b)->required()->check(CLI::ExistingFile);
  iso->callback([&] { run = [&] { return cmd_iso(g, a, b); }; });

  bool oracle = false;
  auto* dord = app.add_subcommand("dord", "Comparison-disagreement distance between equal-size spaces");
  dord->add_option("a", a)->required()->check(CLI::ExistingFile);
  dord->add_option("b", b)->required()->check(CLI::ExistingFile);
  dord->add_flag("--oracle", oracle, "Cross-check with the ordered-quadruple brute force");
  dord->callback([&] { run = [&] { return cmd_dord(g, a, b, oracle); }; });

  auto* balls = app.add_subcommand("balls", "Balls at every center and the distinct ball family");
  balls->add_option("space", a, "Rank-matrix file")->required()->check(CLI::ExistingFile);
  balls->callback([&] { run = [&] { return cmd_balls(g, a); }; });

  bool dot = false;
  auto* hasse_cmd = app.add_subcommand("hasse", "Inclusion Hasse diagram of the balls");
  hasse_cmd->add_option("space", a, "Rank-matrix file")->required()->check(CLI::ExistingFile);
  hasse_cmd->add_flag("--dot", dot, "Graphviz output");
  hasse_cmd->callback([&] { run = [&] { return cmd_hasse(g, a, dot); }; });

  auto* embed1d = app.add_subcommand("embed1d", "Exact decision of embeddability in the real line");
  embed1d->add_option("space", a, "Rank-matrix file")->required()->check(CLI::ExistingFile);
  embed1d->callback([&] { run = [&] { return cmd_embed1d(g, a); }; });

  auto* t10 = app.add_subcommand("t10", "Case classification of a 4-point space for line embeddings");
  t10->add_option("space", a, "Rank-matrix file")->required()->check(CLI::ExistingFile);
  t10->callback([&] { run = [&] { return cmd_t10(g, a); }; });

  std::string enumeration;
  std::string mode = "full";
  auto* major = app.add_subcommand("majorization", "Check the majorization property of an enumeration");
  major->add_option("space", a, "Rank-matrix file")->required()->check(CLI::ExistingFile);
  major->add_option("--enumeration", enumeration, "Comma-separated points, default 1,2,...,n");
  major->add_option("--mode", mode, "full or consecutive")->check(CLI::IsMember({"full", "consecutive"}));
  major->callback([&] { run = [&] { return cmd_majorization(g, a, enumeration, mode); }; });

  int dim = 2;
  HeuristicOptions hopts;
  auto* embednd = app.add_subcommand("embednd", "Euclidean embedding in R^d: exact where decidable, else search");
  embednd->add_option("space", a, "Rank-matrix file")->required()->check(CLI::ExistingFile);
  embednd->add_option("--dim", dim, "Target dimension")->required();
  embednd->add_option("--restarts", hopts.restarts, "Random restarts of the search")->check(CLI::PositiveNumber);
  embednd->add_option("--iterations", hopts.iterations, "Descent steps per restart")->check(CLI::PositiveNumber);
  embednd->callback([&] {
    run = [&] {
      hopts.seed = g.seed;
      return cmd_embednd(g, a, dim, hopts);
    };
  });

  auto* r2 = app.add_subcommand("check-r2", "Necessary conditions for embeddability in the plane");
  r2->add_option("space", a, "Rank-matrix file")->required()->check(CLI::ExistingFile);
  r2->callback([&] { run = [&] { return cmd_check_r2(g, a); }; });

  auto* menger = app.add_subcommand("menger-probe", "Subset evidence for Menger-type embedding in R^d");
  menger->add_option("space", a, "Rank-matrix file")->required()->check(CLI::ExistingFile);
  menger->add_option("--dim", dim, "Target dimension")->required();
  menger->add_option("--restarts", hopts.restarts, "Random restarts of the search")->check(CLI::PositiveNumber);
  menger->add_option("--iterations", hopts.iterations, "Descent steps per restart")->check(CLI::PositiveNumber);
  menger->callback([&] {
    run = [&] {
      hopts.seed = g.seed;
      return cmd_menger(g, a, dim, hopts);
    };
  });

  int n = 0;
  std::string filter = "all";
  bool huge = false;
  std::string out_path;
  auto* census = app.add_subcommand("census", "All spaces of n points up to isomorphism with ball-count extremes");
  census->add_option("--n", n, "Number of points")->required()->check(CLI::PositiveNumber);
  census->add_option("--filter", filter, "all or injective")->check(CLI::IsMember({"all", "injective"}));
  census->add_flag("--huge", huge, "Allow n = 5 with the all filter (about 10^8 candidates)");
  census->add_option("--out", out_path, "Write the JSON report here");
  census->callback([&] { run = [&] { return cmd_census(g, n, filter, huge, out_path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    return run();
  } catch (const SizeLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const SolverFailure& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kInternal;
  } catch (const RetryExhausted& e) {
    std::cerr << "internal failure: " << e.what() << " (order " << e.failing_order() << ")\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
