#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "atoral/serialize.hpp"

namespace atoral::cli {

namespace {

namespace fs = std::filesystem;

struct Globals {
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::string out_path;
  std::size_t dim = 0;  ///< 0: infer from the expression
};

std::optional<std::size_t> dim_hint(const Globals& g) {
  return g.dim == 0 ? std::nullopt : std::optional<std::size_t>(g.dim);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

bool names_file(const std::string& arg) {
  return arg.ends_with(".json") || (fs::is_regular_file(arg) && !arg.empty());
}

// A polynomial given either as a JSON file or as an inline expression.
IntLaurentPoly load_poly(const std::string& arg, std::optional<std::size_t> dim) {
  if (names_file(arg)) {
    IntLaurentPoly p = int_poly_from_json(read_json_file(arg));
    if (dim && p.dim() != *dim) throw DimensionMismatch(arg + " has the wrong dimension");
    return p;
  }
  return parse_polynomial(arg, dim);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

// "p1;p2;..." or a JSON file holding an array of polynomials.
std::vector<IntLaurentPoly> load_family(const std::string& arg, std::size_t dim) {
  std::vector<IntLaurentPoly> fam;
  if (names_file(arg)) {
    const json j = read_json_file(arg);
    if (!j.is_array()) throw ParseError(arg + ": expected an array of polynomials");
    for (const auto& x : j) fam.push_back(int_poly_from_json(x));
    for (const auto& p : fam) check_same_dim(dim, p.dim());
  } else {
    for (const auto& s : split(arg, ';')) fam.push_back(parse_polynomial(s, dim));
  }
  if (fam.empty()) throw ParseError("empty family");
  return fam;
}

// "a,b;c,d;..."
std::vector<LatticePoint> parse_points(const std::string& arg, std::size_t dim) {
  std::vector<LatticePoint> pts;
  for (const auto& item : split(arg, ';')) {
    std::vector<std::int64_t> c;
    for (const auto& x : split(item, ',')) {
      try {
        std::size_t used = 0;
        c.push_back(std::stoll(x, &used));
        if (used != x.size()) throw ParseError("bad coordinate '" + x + "'");
      } catch (const std::logic_error&) {
        throw ParseError("bad coordinate '" + x + "'");
      }
    }
    if (c.size() != dim) throw DimensionMismatch("point '" + item + "' has the wrong dimension");
    pts.emplace_back(std::span<const std::int64_t>(c));
  }
  return pts;
}

void write_text(const std::string& text, const Globals& g, std::ostream& out) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out_path);
  if (!f) throw Error("cannot write " + g.out_path);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(const json& j, const Globals& g, std::ostream& out) { write_text(dump(j), g, out); }

std::string csv_samples(const IntLaurentPoly& f, const std::vector<TorusPoint>& pts) {
  std::string s;
  for (std::size_t j = 1; j <= f.dim(); ++j) s += "t" + std::to_string(j) + ",";
  s += "abs_f\n";
  char buf[64];
  for (const auto& p : pts) {
    for (double t : p.t) {
      std::snprintf(buf, sizeof buf, "%.17g,", t);
      s += buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g\n", std::abs(eval_on_torus(f, p)));
    s += buf;
  }
  return s;
}

std::size_t default_grid(std::size_t dim) { return dim >= 3 ? 64 : 256; }

QuasiInverse obtain_quasi_inverse(const IntLaurentPoly& f, const std::string& q_path, double eps) {
  if (!q_path.empty()) {
    QuasiInverse q = quasi_inverse_from_json(read_json_file(q_path));
    check_quasi_inverse(f, q);
    return q;
  }
  QuasiInverseOptions opts;
  opts.eps = eps;
  return compute_empty_variety(f, opts);
}

json classify_json(const IntLaurentPoly& f, std::size_t grid, bool irreducible, std::size_t threads) {
  if (f.dim() == 1) {
    json j = to_json(classify_d1(f));
    j["f"] = to_string(f);
    j["method"] = "exact: self-inversive gcd and Sturm count";
    return j;
  }
  json j{{"f", to_string(f)}};
  const TorusCertificate cert = empty_variety_certificate(f, grid);
  if (cert.empty_proven) {
    j["verdict"] = "atoral";
    j["method"] = "certified empty unitary variety";
    j["certified_min"] = cert.certified_min;
    return j;
  }
  const AdjointComparison hint = adjoint_atorality_hint(f);
  j["adjoint"] = to_json(hint);
  if (hint.hint == AdjointHint::kAtoralIfIrreducible) {
    j["verdict"] = irreducible ? "atoral" : "atoral-if-irreducible";
    j["method"] = "adjoint is not a unit times f";
    return j;
  }
  const auto samples = unitary_variety_sample(f, std::min<std::size_t>(grid, 64), 1e-10, threads);
  j["verdict"] = "undetermined";
  j["method"] = "diagnostic only";
  j["heuristic"] = {{"unitary_variety_samples", samples.size()},
                    {"note", "sampling does not determine the dimension of the unitary variety"}};
  return j;
}

// demo helpers: each writes files into dir and returns true when every
// reproduced value matches the expected one.
struct DemoRun {
  fs::path dir;
  std::vector<std::string> files;
  void write(const std::string& name, const std::string& text) {
    std::ofstream f(dir / name);
    if (!f) throw Error("cannot write " + (dir / name).string());
    f << text;
    files.push_back(name);
  }
};

bool demo_exam(DemoRun& run, std::size_t threads, std::ostream& out) {
  bool ok = true;
  json d1 = json::array();
  const std::pair<const char*, Torality> cases[] = {{"x^2-x-1", Torality::kAtoral},
                                                    {"x^4-x^3-x^2-x+1", Torality::kToral},
                                                    {"5x^2-6x+5", Torality::kToral}};
  for (const auto& [expr, expected] : cases) {
    const auto c = classify_d1(parse_polynomial(expr, 1));
    json j = to_json(c);
    j["f"] = expr;
    d1.push_back(j);
    ok = ok && c.verdict == expected;
    out << expr << ": " << to_string(c.verdict) << "\n";
  }
  run.write("classify_d1.json", dump(d1));

  const IntLaurentPoly isolated = parse_polynomial("1+x+y");
  const auto pts = unitary_variety_sample(isolated, 64, 1e-12, threads);
  const auto clusters = cluster_torus_points(pts, 0.05);
  run.write("uv_1+x+y.csv", csv_samples(isolated, pts));
  ok = ok && clusters.size() == 2;
  out << "1+x+y: " << clusters.size() << " isolated zeros\n";

  const IntLaurentPoly lifted = parse_polynomial("3+x+y");
  const auto cert = empty_variety_certificate(lifted, 256);
  run.write("certificate_3+x+y.json", dump(to_json(cert)));
  ok = ok && cert.empty_proven;
  out << "3+x+y: unitary variety empty, certified min " << cert.certified_min << "\n";

  const IntLaurentPoly curve = parse_polynomial("3+x+y+x^-1+y^-1");
  const auto cpts = unitary_variety_sample(curve, 64, 1e-10, threads);
  run.write("uv_curve.csv", csv_samples(curve, cpts));
  ok = ok && !cpts.empty();
  out << "3+x+y+x^-1+y^-1: " << cpts.size() << " samples on a closed curve\n";

  const IntLaurentPoly circles = parse_polynomial("1+x+y+z");
  const auto tpts = unitary_variety_sample(circles, 32, 1e-10, threads);
  run.write("uv_1+x+y+z.csv", csv_samples(circles, tpts));
  ok = ok && !tpts.empty();
  out << "1+x+y+z: " << tpts.size() << " samples\n";
  return ok;
}

bool demo_gap(DemoRun& run, std::size_t threads, std::ostream& out) {
  const IntLaurentPoly f = parse_polynomial("x-2");
  const QuasiInverse q = compute_empty_variety(f);
  run.write("qinv.json", dump(to_json(q)));
  json consts = json::array();
  bool ok = true;
  for (const auto& [h, r_expected] : {std::pair{1, 3}, std::pair{8, 6}}) {
    const auto r = gap_radius(q, h);
    consts.push_back({{"H", h}, {"R", r}, {"M", 3 * r}});
    ok = ok && r == r_expected;
    out << "H=" << h << ": R=" << r << " M=" << 3 * r << "\n";
  }
  run.write("gapconst.json", dump(consts));

  const IntLaurentPoly r = parse_polynomial("(x-2) + x^20*(x-2)");
  SplitOptions opts;
  opts.h_bound = 2;
  opts.irreducible_asserted = true;
  opts.threads = threads;
  const GapCertificate cert = split_and_verify(f, q, r, opts);
  run.write("split.json", dump(to_json(cert)));
  ok = ok && cert.clusters.size() == 2 && cert.anomalies.empty();
  out << "split: " << cert.clusters.size() << " clusters, " << cert.anomalies.size() << " anomalies\n";

  const ProofTrace t = proof_trace(f, q, parse_polynomial("x-2"), parse_polynomial("x^20*(x-2)"), 2);
  run.write("trace.json", dump(to_json(t)));
  ok = ok && t.passed();
  out << "trace: " << (t.passed() ? "all checks pass" : "FAILED") << "\n";
  return ok;
}

bool demo_frobenius(DemoRun& run, std::ostream& out) {
  const FrobeniusReport rep = frobenius_counterexample(10);
  run.write("frobenius.json", dump(to_json(rep)));
  out << "frobenius n=1..10: " << (rep.all_hold() ? "identity and counterexample verified" : "FAILED") << "\n";
  return rep.all_hold();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divisibility, quasi-inverses and gap constants for integer Laurent polynomials"};
  app.require_subcommand(1);
  // Global options may follow the subcommand.
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized verifiers");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out_path, "Write the result to this file instead of stdout");
  app.add_option("--dim", g.dim, "Dimension for inline expressions (default: inferred)");

  int code = kExitOk;
  std::string f_arg;

  auto* classify = app.add_subcommand("classify", "Atoral/toral verdict (exact for d = 1)");
  std::size_t grid = 0;
  bool irreducible = false;
  classify->add_option("--f", f_arg, "Polynomial expression or JSON file")->required();
  classify->add_option("--grid", grid, "Certificate grid size (power of two)");
  classify->add_flag("--irreducible", irreducible, "Assert that f is irreducible");
  classify->callback([&] {
    const auto f = load_poly(f_arg, dim_hint(g));
    emit(classify_json(f, grid ? grid : default_grid(f.dim()), irreducible, g.threads), g, out);
  });

  auto* sample = app.add_subcommand("uv-sample", "CSV samples of the unitary variety");
  std::size_t sample_grid = 64;
  double tol = 1e-10;
  sample->add_option("--f", f_arg)->required();
  sample->add_option("--grid", sample_grid);
  sample->add_option("--tol", tol);
  sample->callback([&] {
    const auto f = load_poly(f_arg, dim_hint(g));
    write_text(csv_samples(f, unitary_variety_sample(f, sample_grid, tol, g.threads)), g, out);
  });

  auto* certify = app.add_subcommand("certify-empty", "Grid certificate for an empty unitary variety");
  certify->add_option("--f", f_arg)->required();
  certify->add_option("--grid", grid);
  certify->callback([&] {
    const auto f = load_poly(f_arg, dim_hint(g));
    emit(to_json(empty_variety_certificate(f, grid ? grid : default_grid(f.dim()))), g, out);
  });

  auto* qinv = app.add_subcommand("qinv", "Quasi-inverse with certified tail");
  double eps = 1e-9;
  std::optional<std::int64_t> radius;
  std::string h_arg;
  std::size_t h_grid = 256;
  qinv->add_option("--f", f_arg)->required();
  qinv->add_option("--eps", eps);
  qinv->add_option("--radius", radius, "Also report the tail mass at this radius");
  qinv->add_option("--h-poly", h_arg, "User-supplied h (experimental path)");
  qinv->add_option("--grid", h_grid, "Grid size for the experimental path");
  qinv->callback([&] {
    const auto f = load_poly(f_arg, dim_hint(g));
    QuasiInverse q;
    if (h_arg.empty()) {
      QuasiInverseOptions opts;
      opts.eps = eps;
      q = compute_empty_variety(f, opts);
    } else {
      q = attach_user_h(f, load_poly(h_arg, f.dim()), h_grid, eps);
    }
    json j = to_json(q);
    if (radius) j["tail_mass"] = {{"R", *radius}, {"bound", tail_mass(q, *radius)}};
    emit(j, g, out);
  });

  std::string q_path;
  std::int64_t h_value = 0;
  auto* gapconst = app.add_subcommand("gapconst", "Gap radius R and constant M = 3R");
  gapconst->add_option("--f", f_arg)->required();
  gapconst->add_option("--H", h_value)->required();
  gapconst->add_option("--q", q_path, "Quasi-inverse JSON (computed if absent)");
  gapconst->callback([&] {
    const auto f = load_poly(f_arg, dim_hint(g));
    const QuasiInverse q = obtain_quasi_inverse(f, q_path, eps);
    const auto r = gap_radius(q, h_value);
    emit({{"H", h_value}, {"R", r}, {"M", 3 * r}}, g, out);
  });

  std::string r_arg;
  std::optional<std::int64_t> h_opt, m_opt;
  auto* split_cmd = app.add_subcommand("split", "Split a divisible r at the gap constant");
  split_cmd->add_option("--f", f_arg)->required();
  split_cmd->add_option("--r", r_arg)->required();
  split_cmd->add_option("--H", h_opt);
  split_cmd->add_option("--M", m_opt, "Separation override (at least the computed M)");
  split_cmd->add_option("--q", q_path);
  split_cmd->add_flag("--irreducible", irreducible);
  split_cmd->callback([&] {
    const auto f = load_poly(f_arg, dim_hint(g));
    const auto r = load_poly(r_arg, f.dim());
    SplitOptions opts;
    if (h_opt) opts.h_bound = mpz_class(std::to_string(*h_opt));
    opts.gap = m_opt;
    opts.irreducible_asserted = irreducible;
    opts.threads = g.threads;
    const GapCertificate cert = split_and_verify(f, obtain_quasi_inverse(f, q_path, eps), r, opts);
    emit(to_json(cert), g, out);
    if (!cert.anomalies.empty()) {
      for (const auto& a : cert.anomalies) err << "anomaly: " << a << "\n";
      code = kExitAnomaly;
    }
  });

  std::string p_arg, qpoly_arg;
  auto* trace = app.add_subcommand("trace", "Evaluate the splitting inequalities for r = p + q");
  trace->add_option("--f", f_arg)->required();
  trace->add_option("--p", p_arg)->required();
  trace->add_option("--qpoly", qpoly_arg)->required();
  trace->add_option("--H", h_value)->required();
  trace->add_option("--q", q_path);
  trace->callback([&] {
    const auto f = load_poly(f_arg, dim_hint(g));
    const ProofTrace t = proof_trace(f, obtain_quasi_inverse(f, q_path, eps), load_poly(p_arg, f.dim()),
                                     load_poly(qpoly_arg, f.dim()), h_value);
    emit(to_json(t), g, out);
    if (!t.passed()) code = kExitAnomaly;
  });

  auto* lac = app.add_subcommand("lacunary", "Lacunary independence verifiers");
  lac->require_subcommand(1);
  std::string family_arg, points_arg;
  std::int64_t spacing = 1;

  auto* verify = lac->add_subcommand("verify", "Exhaustive check on one spaced configuration");
  verify->add_option("--f", f_arg)->required();
  verify->add_option("--family", family_arg, "p1;p2;... or JSON array file")->required();
  verify->add_option("--points", points_arg, "a,b;c,d;...")->required();
  verify->add_option("--M", spacing)->required();
  verify->callback([&] {
    const auto f = load_poly(f_arg, dim_hint(g));
    const auto cfg = make_spaced_configuration(parse_points(points_arg, f.dim()), spacing);
    emit(to_json(verify_spaced_divisibility(f, load_family(family_arg, f.dim()), cfg, g.threads)), g, out);
  });

  GapSearchOptions search;
  auto* msearch = lac->add_subcommand("msearch", "Randomized search for the smallest clean spacing");
  msearch->add_option("--f", f_arg)->required();
  msearch->add_option("--family", family_arg)->required();
  msearch->add_option("--max-M", search.max_spacing);
  msearch->add_option("--trials", search.trials);
  msearch->add_option("--points", search.points);
  msearch->callback([&] {
    const auto f = load_poly(f_arg, dim_hint(g));
    const auto family = load_family(family_arg, f.dim());
    search.seed = g.seed;
    search.threads = g.threads;
    json j = to_json(empirical_gap_search(f, family, search));
    // Sums over the configuration stay within H = points * max ||p||_inf.
    mpz_class h = 0;
    for (const auto& p : family) h = std::max(h, mpz_class(p.sup_norm()));
    h *= static_cast<unsigned long>(search.points);
    if (h >= 1) {
      try {
        const QuasiInverse q = compute_empty_variety(f);
        j["gap_engine"] = {{"H", h.get_str()}, {"M", gap_constant(q, h)}};
      } catch (const Error& e) {
        j["gap_engine"] = {{"unavailable", e.what()}};
      }
    }
    emit(j, g, out);
  });

  unsigned frob_n = 8;
  bool skip_integer = false;
  auto* frob = lac->add_subcommand("frobenius", "Frobenius counterexample modulo 2");
  frob->add_option("--n", frob_n)->required();
  frob->add_flag("--skip-integer", skip_integer, "Skip the division check over Z");
  frob->callback([&] {
    const FrobeniusReport rep = frobenius_counterexample(frob_n, !skip_integer);
    emit(to_json(rep), g, out);
    if (!rep.all_hold()) code = kExitAnomaly;
  });

  std::int64_t ball_radius = 0;
  auto* sumset = lac->add_subcommand("sumset", "Sumset size over B_{R,M} for a two-element set");
  sumset->add_option("--f", f_arg)->required();
  sumset->add_option("--F", family_arg, "Two elements, e.g. \"0;1\"")->required();
  sumset->add_option("--R", ball_radius)->required();
  sumset->add_option("--M", spacing)->required();
  sumset->callback([&] {
    const auto f = load_poly(f_arg, dim_hint(g));
    emit(to_json(sumset_growth(f, load_family(family_arg, f.dim()), ball_radius, spacing)), g, out);
  });

  auto* indep = lac->add_subcommand("independence", "Distinct selection sums in R_d/<f>");
  indep->add_option("--f", f_arg)->required();
  indep->add_option("--families", family_arg, "E1|E2|..., each E as p1;p2;...")->required();
  indep->callback([&] {
    const auto f = load_poly(f_arg, dim_hint(g));
    std::vector<std::vector<IntLaurentPoly>> families;
    for (const auto& fam : split(family_arg, '|')) families.push_back(load_family(fam, f.dim()));
    const auto rep = independence_check(f, families);
    emit(to_json(rep), g, out);
  });

  std::string demo_id, out_dir;
  auto* demo = app.add_subcommand("demo", "Reproduce a worked example into a run directory");
  demo->add_option("id", demo_id)->required()->check(CLI::IsMember({"exam-1-4", "gap-x-minus-2", "frobenius"}));
  demo->add_option("--out-dir", out_dir, "Run directory (default: run-<id>)");
  demo->callback([&] {
    DemoRun run{out_dir.empty() ? fs::path("run-" + demo_id) : fs::path(out_dir), {}};
    fs::create_directories(run.dir);
    bool ok = false;
    if (demo_id == "exam-1-4")
      ok = demo_exam(run, g.threads, out);
    else if (demo_id == "gap-x-minus-2")
      ok = demo_gap(run, g.threads, out);
    else
      ok = demo_frobenius(run, out);
    const json manifest{{"demo", demo_id}, {"seed", g.seed}, {"files", run.files}, {"ok", ok}};
    std::ofstream(run.dir / "manifest.json") << dump(manifest);
    if (!ok) code = kExitAnomaly;
  });

  std::vector<std::string> owned{"atoral"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : owned) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}

}  // namespace atoral::cli
