// sewkit command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 internal invariant breach (oracle mismatch).

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sewkit/cyclic.hpp"
#include "sewkit/io.hpp"
#include "sewkit/pipeline.hpp"
#include "sewkit/sewing.hpp"
#include "sewkit/tower.hpp"
#include "sewkit/tracking.hpp"

namespace {

using namespace sewkit;

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

unsigned thread_count() {
  if (const char* env = std::getenv("SEWKIT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Parse:
    case ErrorCode::IO:
    case ErrorCode::BadParameters:
      return kExitUsage;
    case ErrorCode::OracleMismatch:
      return kExitInternal;
    default:
      return kExitVerify;
  }
}

void write_or_print(const std::string& path, const PolytopeFile& file, const std::string& format) {
  if (path.empty() || path == "-") {
    std::cout << emit_polytope(file, format == "text" ? FileFormat::Text : FileFormat::Json);
  } else if (format.empty()) {
    save_polytope(path, file);
  } else {
    write_file(path, emit_polytope(file, format == "text" ? FileFormat::Text : FileFormat::Json));
  }
}

int cmd_gen_cyclic(int n, int d, const std::string& out, const std::string& format) {
  PolytopeFile file{cyclic_polytope(n, d), {"cyclic(" + std::to_string(n) + "," + std::to_string(d) + ")", {}}};
  write_or_print(out, file, format);
  std::cerr << "C(" << n << "," << d << "): " << file.polytope.num_facets() << " facets\n";
  return 0;
}

int cmd_verify(const std::string& path, bool neighbourly, bool formula, const std::vector<int>& dims) {
  PolytopeFile file;
  try {
    file = load_polytope(path);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IO || e.code() == ErrorCode::Parse) throw;
    std::cout << "FAIL " << e.what() << "\n";
    return kExitVerify;
  }
  VerifyOptions opt{neighbourly, formula, dims, thread_count()};
  const VerifyReport r = verify_polytope(file.polytope, opt);
  for (const auto& l : r.lines) std::cout << l << "\n";
  std::cout << (r.ok ? "PASS" : "FAIL") << "\n";
  return r.ok ? 0 : kExitVerify;
}

int cmd_sew(const std::string& path, const std::string& tower, const std::string& tower_file, bool automatic,
            const std::string& label, const std::string& out, const std::string& format, bool oracle_check,
            const std::string& track_out, const std::string& catalog_in) {
  const PolytopeFile in = load_polytope(path);
  const SimplicialPolytope& p = in.polytope;
  if (p.dim() % 2 != 0) throw Error(ErrorCode::BadDimension, "sewing needs an even-dimensional polytope");
  if (p.num_vertices() < p.dim() + 3) {
    throw Error(ErrorCode::TooFewVertices, "sewing a " + std::to_string(p.dim()) + "-polytope needs at least " +
                                               std::to_string(p.dim() + 3) + " vertices, got " +
                                               std::to_string(p.num_vertices()));
  }
  if (static_cast<int>(!tower.empty()) + static_cast<int>(!tower_file.empty()) + static_cast<int>(automatic) != 1) {
    throw Error(ErrorCode::BadParameters, "give exactly one of --tower, --tower-file, --auto");
  }
  const UniversalTower t = automatic ? first_tower(p)
                                     : validate_tower(p, resolve_tower(p, tower.empty() ? tower_from_json(read_file(tower_file))
                                                                                        : parse_tower_spec(tower)));
  const std::string new_label = label.empty() ? fresh_label(p) : label;
  PolytopeFile result = sew_file(in, t, new_label, automatic);
  std::cerr << "tower " << tower_spec(tower_labels(p, t)) << ": " << describe(result.polytope) << "\n";

  if (oracle_check) {
    const SimplicialPolytope oracle = sew_bbp_oracle(p, t, new_label);
    if (!(oracle == result.polytope)) {
      std::cerr << "oracle check: MISMATCH between recursive sewing and beyond/beneath oracle\n";
      return kExitInternal;
    }
    std::cerr << "oracle check: pass\n";
  }
  if (!track_out.empty()) {
    const UniversalCatalog cat =
        catalog_in.empty() ? brute_force_catalog(p, thread_count()) : catalog_from_json(p, read_file(catalog_in));
    const TrackedSewing tracked = sew_with_tracking(p, t, cat, new_label);
    if (!(tracked.polytope == result.polytope)) {
      std::cerr << "tracking: facet list differs from sew()\n";
      return kExitInternal;
    }
    write_file(track_out, catalog_to_json(tracked.polytope, tracked.catalog));
    for (const auto& [dim, faces] : tracked.catalog.lists()) {
      std::cerr << "universal " << dim << "-faces: " << faces.size() << "\n";
    }
  }
  write_or_print(out, result, format);
  return 0;
}

int cmd_towers(const std::string& path, std::size_t limit) {
  const PolytopeFile in = load_polytope(path);
  const SimplicialPolytope& p = in.polytope;
  const auto towers = find_towers(p, limit == 0 ? std::nullopt : std::optional<std::size_t>(limit));
  if (p.dim() % 2 == 0 && p.num_vertices() < p.dim() + 3) {
    std::cerr << "warning: " << p.num_vertices() << " vertices; sewing needs at least " << p.dim() + 3 << "\n";
  }
  for (const auto& t : towers) std::cout << tower_spec(tower_labels(p, t)) << "\n";
  std::cerr << towers.size() << " tower(s)\n";
  return 0;
}

int cmd_pipeline(const std::string& script, const std::string& out, const std::string& format) {
  const auto steps = parse_pipeline(read_file(script));
  const PipelineResult res = run_pipeline(steps);
  for (const auto& r : res.reports) std::cout << "[line " << r.line << "] " << r.summary << "\n";
  if (res.final && !out.empty()) write_or_print(out, *res.final, format);
  return res.verification_failed ? kExitVerify : 0;
}

int cmd_bench(int start, int end) {
  const auto rows = run_bench(start, end);
  std::cout << std::setw(4) << "n" << std::setw(8) << "facets" << std::setw(14) << "us/sew" << std::setw(14)
            << "ns/facet" << std::setw(10) << "touched" << std::setw(14) << "touched/f" << "\n";
  std::cout << std::fixed;
  for (const auto& r : rows) {
    std::cout << std::setw(4) << r.vertices << std::setw(8) << r.facets << std::setw(14) << std::setprecision(2)
              << r.seconds_per_sew * 1e6 << std::setw(14) << r.ns_per_facet() << std::setw(10) << r.facets_touched
              << std::setw(14) << std::setprecision(3) << r.touched_per_facet() << "\n";
  }
  std::cout << std::setprecision(3) << "time/facet spread (max/min): " << time_ratio_spread(rows) << "\n";
  std::cout << "touched vs facets, worst deviation from affine fit: " << 100 * touched_linearity_error(rows) << "%\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sewkit: neighbourly polytopes by sewing"};
  app.require_subcommand(1);

  int n = 0, d = 0;
  std::string out, format;
  auto* gen = app.add_subcommand("gen-cyclic", "write the cyclic polytope C(n,d)");
  gen->add_option("n", n, "vertex count")->required();
  gen->add_option("d", d, "dimension")->required();
  gen->add_option("-o,--out", out, "output path (.txt = text format, '-' = stdout)");
  gen->add_option("--format", format, "force json or text")->check(CLI::IsMember({"json", "text"}));

  std::string path;
  bool no_nb = false, no_formula = false;
  std::vector<int> dims;
  auto* verify = app.add_subcommand("verify", "validate a polytope file");
  verify->add_option("path", path)->required();
  verify->add_flag("--no-neighbourly", no_nb, "skip the neighbourliness test");
  verify->add_flag("--no-facet-formula", no_formula, "skip the facet-count formula");
  verify->add_option("--universal", dims, "list universal k-faces by brute force (odd k)");

  std::string tower, tower_file, label, track_out, catalog_in;
  bool automatic = false, oracle = false;
  auto* sewc = app.add_subcommand("sew", "sew a new vertex through a universal tower");
  sewc->add_option("path", path)->required();
  sewc->add_option("--tower", tower, "tower as x1,y1:x2,y2:... (labels)");
  sewc->add_option("--tower-file", tower_file, "tower JSON file");
  sewc->add_flag("--auto", automatic, "use the first tower found");
  sewc->add_option("--label", label, "label for the new vertex");
  sewc->add_option("-o,--out", out, "output path");
  sewc->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  sewc->add_flag("--oracle-check", oracle, "cross-check against the beyond/beneath construction");
  sewc->add_option("--track-universal", track_out, "write the universal-face catalog of the result here");
  sewc->add_option("--catalog", catalog_in, "catalog of the input (default: brute force)");

  std::size_t limit = 0;
  auto* towers = app.add_subcommand("towers", "list universal towers");
  towers->add_option("path", path)->required();
  towers->add_option("--limit", limit, "stop after this many (0 = all)");

  std::string script;
  auto* pipe = app.add_subcommand("pipeline", "run a sewing script");
  pipe->add_option("script", script)->required();
  pipe->add_option("-o,--out", out, "write the final polytope here");
  pipe->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  int start = 7, end = 25;
  auto* bench = app.add_subcommand("bench", "time repeated sewing in dimension 4");
  bench->add_option("start", start, "initial cyclic vertex count")->required();
  bench->add_option("end", end, "final vertex count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen_cyclic(n, d, out, format);
    if (*verify) return cmd_verify(path, !no_nb, !no_formula, dims);
    if (*sewc) {
      return cmd_sew(path, tower, tower_file, automatic, label, out, format, oracle, track_out, catalog_in);
    }
    if (*towers) return cmd_towers(path, limit);
    if (*pipe) return cmd_pipeline(script, out, format);
    if (*bench) return cmd_bench(start, end);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
