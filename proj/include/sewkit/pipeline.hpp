#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sewkit/cyclic.hpp"
#include "sewkit/io.hpp"
#include "sewkit/neighbourly.hpp"
#include "sewkit/sewing.hpp"
#include "sewkit/tower.hpp"

namespace sewkit {

// --- verification -------------------------------------------------------

struct VerifyOptions {
  bool neighbourly = true;
  bool facet_formula = true;
  std::vector<int> universal_dims;
  unsigned threads = 1;
};

struct VerifyReport {
  std::vector<std::string> lines;
  bool ok = true;
};

/// Structural validity is implied by having a SimplicialPolytope at all; the
/// remaining checks are optional.
inline VerifyReport verify_polytope(const SimplicialPolytope& p, const VerifyOptions& opt = {}) {
  VerifyReport r;
  r.lines.push_back("valid: dim " + std::to_string(p.dim()) + ", " + std::to_string(p.num_vertices()) +
                    " vertices, " + std::to_string(p.num_facets()) + " facets");
  if (opt.neighbourly) {
    const bool nb = is_neighbourly(p);
    r.ok = r.ok && nb;
    r.lines.push_back(nb ? "neighbourly: yes" : "neighbourly: NO");
  }
  if (opt.facet_formula) {
    const int m = p.dim() / 2;
    const int n = p.num_vertices();
    if (p.dim() % 2 != 0 || n < 2 * m + 1) {
      r.lines.push_back("facet formula: not applicable");
    } else {
      const auto expected = neighbourly_facet_count(n, m);
      const bool match = expected == p.num_facets();
      r.ok = r.ok && match;
      std::ostringstream os;
      os << "facet formula: " << p.num_facets() << " facets " << (match ? "=" : "!=") << " C(" << n - m << ","
         << m << ")+C(" << n - m - 1 << "," << m - 1 << ")";
      if (!match) os << " = " << expected;
      r.lines.push_back(os.str());
    }
  }
  for (int k : opt.universal_dims) {
    const auto faces = universal_faces(p, k, opt.threads);
    r.lines.push_back("universal " + std::to_string(k) + "-faces: " + std::to_string(faces.size()));
  }
  return r;
}

// --- pipelines ----------------------------------------------------------

enum class StepKind { Generate, Sew, SewAuto, Verify, Report };

struct PipelineStep {
  StepKind kind = StepKind::Report;
  int line = 0;
  int n = 0;
  int d = 0;
  std::vector<LabelPair> tower;
  std::string new_label;
};

struct StepReport {
  int line = 0;
  std::string summary;
  bool ok = true;
};

struct PipelineResult {
  std::optional<PolytopeFile> final;
  std::vector<StepReport> reports;
  bool verification_failed = false;
};

/// Script grammar, one step per line ('#' comments):
///   generate <n> <d>
///   sew <x1>,<y1>:<x2>,<y2>... [as <label>]
///   sew-auto [as <label>]
///   verify
///   report
/// Label references are checked against the labels each step would produce
/// before anything runs.
inline std::vector<PipelineStep> parse_pipeline(std::string_view script) {
  std::istringstream in{std::string(script)};
  std::string line;
  int lineno = 0;
  std::vector<PipelineStep> steps;
  auto fail = [&](const std::string& why) { throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": " + why); };
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) fail("bad integer '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("bad integer '" + s + "'");
    }
    return 0;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    PipelineStep st;
    st.line = lineno;
    const std::string& cmd = tok[0];
    auto take_label = [&](std::size_t at) {
      if (tok.size() == at) return;
      if (tok.size() != at + 2 || tok[at] != "as") fail("expected 'as <label>'");
      st.new_label = tok[at + 1];
    };
    if (cmd == "generate") {
      if (tok.size() != 3) fail("generate takes <n> <d>");
      st.kind = StepKind::Generate;
      st.n = to_int(tok[1]);
      st.d = to_int(tok[2]);
    } else if (cmd == "sew") {
      if (tok.size() < 2) fail("sew needs a tower");
      st.kind = StepKind::Sew;
      st.tower = parse_tower_spec(tok[1]);
      take_label(2);
    } else if (cmd == "sew-auto") {
      st.kind = StepKind::SewAuto;
      take_label(1);
    } else if (cmd == "verify" || cmd == "report") {
      if (tok.size() != 1) fail(cmd + " takes no arguments");
      st.kind = cmd == "verify" ? StepKind::Verify : StepKind::Report;
    } else {
      fail("unknown step '" + cmd + "'");
    }
    steps.push_back(std::move(st));
  }

  // Dry run over labels only.
  std::optional<std::set<std::string>> labels;
  int dim = 0;
  for (PipelineStep& st : steps) {
    lineno = st.line;
    if (st.kind == StepKind::Generate) {
      labels.emplace();
      for (const auto& l : default_labels(st.n)) labels->insert(l);
      dim = st.d;
      continue;
    }
    if (!labels) fail("no polytope yet; start with 'generate'");
    if (st.kind == StepKind::Sew || st.kind == StepKind::SewAuto) {
      if (st.kind == StepKind::Sew) {
        if (static_cast<int>(st.tower.size()) * 2 != dim) fail("tower must have d/2 pairs");
        for (const auto& [x, y] : st.tower) {
          if (!labels->contains(x)) fail("undefined label '" + x + "'");
          if (!labels->contains(y)) fail("undefined label '" + y + "'");
        }
      }
      if (st.new_label.empty()) {
        for (int k = 1;; ++k) {
          st.new_label = "s" + std::to_string(k);
          if (!labels->contains(st.new_label)) break;
        }
      }
      if (labels->contains(st.new_label)) fail("label '" + st.new_label + "' already defined");
      if (!detail::label_ok(st.new_label)) fail("invalid label '" + st.new_label + "'");
      labels->insert(st.new_label);
    }
  }
  return steps;
}

inline std::string describe(const SimplicialPolytope& p) {
  return "dim " + std::to_string(p.dim()) + ", " + std::to_string(p.num_vertices()) + " vertices, " +
         std::to_string(p.num_facets()) + " facets";
}

/// First tower in find_towers() order.
inline UniversalTower first_tower(const SimplicialPolytope& p) {
  auto towers = find_towers(p, 1);
  if (towers.empty()) throw Error(ErrorCode::InvalidTower, "polytope has no universal tower");
  return towers.front();
}

inline PolytopeFile sew_file(const PolytopeFile& in, const UniversalTower& t, const std::string& label, bool automatic) {
  PolytopeFile out{sew(in.polytope, t, label), in.provenance};
  out.provenance.history.push_back({tower_labels(in.polytope, t), out.polytope.labels().back(), automatic});
  return out;
}

inline PipelineResult run_pipeline(const std::vector<PipelineStep>& steps) {
  PipelineResult res;
  std::optional<PolytopeFile> cur;
  for (const PipelineStep& st : steps) {
    StepReport rep{st.line, {}, true};
    switch (st.kind) {
      case StepKind::Generate: {
        cur = PolytopeFile{cyclic_polytope(st.n, st.d),
                           {"cyclic(" + std::to_string(st.n) + "," + std::to_string(st.d) + ")", {}}};
        rep.summary = "generate C(" + std::to_string(st.n) + "," + std::to_string(st.d) + "): " + describe(cur->polytope);
        break;
      }
      case StepKind::Sew: {
        // vertex guard before tower validation
        if (cur->polytope.dim() % 2 == 0 && cur->polytope.num_vertices() < cur->polytope.dim() + 3) {
          throw Error(ErrorCode::TooFewVertices, "sewing needs at least d+3 vertices");
        }
        const UniversalTower t = validate_tower(cur->polytope, resolve_tower(cur->polytope, st.tower));
        cur = sew_file(*cur, t, st.new_label, false);
        rep.summary = "sew " + tower_spec(st.tower) + " as " + st.new_label + ": " + describe(cur->polytope);
        break;
      }
      case StepKind::SewAuto: {
        if (cur->polytope.dim() % 2 == 0 && cur->polytope.num_vertices() < cur->polytope.dim() + 3) {
          throw Error(ErrorCode::TooFewVertices, "sewing needs at least d+3 vertices");
        }
        const UniversalTower t = first_tower(cur->polytope);
        const auto spec = tower_spec(tower_labels(cur->polytope, t));
        cur = sew_file(*cur, t, st.new_label, true);
        rep.summary = "sew-auto " + spec + " as " + st.new_label + ": " + describe(cur->polytope);
        break;
      }
      case StepKind::Verify: {
        const VerifyReport v = verify_polytope(cur->polytope);
        rep.ok = v.ok;
        rep.summary = "verify " + std::string(v.ok ? "pass" : "FAIL");
        for (std::size_t i = 1; i < v.lines.size(); ++i) rep.summary += "; " + v.lines[i];
        res.verification_failed = res.verification_failed || !v.ok;
        break;
      }
      case StepKind::Report: {
        rep.summary = "report: " + describe(cur->polytope) + ", neighbourly " +
                      (is_neighbourly(cur->polytope) ? "yes" : "no");
        break;
      }
    }
    res.reports.push_back(std::move(rep));
  }
  res.final = std::move(cur);
  return res;
}

// --- benchmark ----------------------------------------------------------

struct BenchRow {
  int vertices = 0;
  std::size_t facets = 0;
  double seconds_per_sew = 0;
  std::size_t facets_touched = 0;

  double ns_per_facet() const { return seconds_per_sew * 1e9 / static_cast<double>(facets); }
  double touched_per_facet() const { return static_cast<double>(facets_touched) / static_cast<double>(facets); }
};

/// Sews C(start_n, 4) up to end_n vertices through the first tower at each
/// step. Each sew is timed over enough repetitions to span ~10 ms, taking the
/// fastest of five batches.
inline std::vector<BenchRow> run_bench(int start_n, int end_n) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  SimplicialPolytope p = cyclic_polytope(start_n, 4);
  for (int n = start_n; n < end_n; ++n) {
    if (p.num_vertices() < 7) throw Error(ErrorCode::TooFewVertices, "sewing a 4-polytope needs at least 7 vertices");
    const UniversalTower t = first_tower(p);
    BenchRow row;
    row.vertices = p.num_vertices();
    row.facets = p.num_facets();
    SewStats stats;
    SimplicialPolytope next = sew(p, t, {}, &stats);
    row.facets_touched = stats.facets_touched;

    std::size_t reps = 1;
    while (true) {
      const auto t0 = clock::now();
      for (std::size_t r = 0; r < reps; ++r) next = sew(p, t);
      if (clock::now() - t0 > std::chrono::milliseconds(10) || reps > (1u << 20)) break;
      reps *= 2;
    }
    double best = 1e300;
    for (int batch = 0; batch < 5; ++batch) {
      const auto t0 = clock::now();
      for (std::size_t r = 0; r < reps; ++r) next = sew(p, t);
      const double s = std::chrono::duration<double>(clock::now() - t0).count() / static_cast<double>(reps);
      best = std::min(best, s);
    }
    row.seconds_per_sew = best;
    rows.push_back(row);
    p = std::move(next);
  }
  return rows;
}

/// max/min of time per facet across rows.
inline double time_ratio_spread(const std::vector<BenchRow>& rows) {
  double lo = 1e300, hi = 0;
  for (const BenchRow& r : rows) {
    lo = std::min(lo, r.ns_per_facet());
    hi = std::max(hi, r.ns_per_facet());
  }
  return rows.empty() ? 1.0 : hi / lo;
}

/// Largest relative deviation of facets_touched from its least-squares
/// affine fit in the facet count.
inline double touched_linearity_error(const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) return 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(rows.size());
  for (const BenchRow& r : rows) {
    const double x = static_cast<double>(r.facets), y = static_cast<double>(r.facets_touched);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const double icept = (sy - slope * sx) / k;
  double worst = 0;
  for (const BenchRow& r : rows) {
    const double y = static_cast<double>(r.facets_touched);
    worst = std::max(worst, std::abs(y - (slope * static_cast<double>(r.facets) + icept)) / y);
  }
  return worst;
}

}  // namespace sewkit
