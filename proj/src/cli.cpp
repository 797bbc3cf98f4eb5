#include "ghl/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghl/closedform.hpp"
#include "ghl/error.hpp"
#include "ghl/evolve.hpp"
#include "ghl/functionals.hpp"
#include "ghl/hierarchy.hpp"
#include "ghl/illposed.hpp"
#include "ghl/kernels.hpp"
#include "ghl/report.hpp"
#include "ghl/suite.hpp"

namespace fs = std::filesystem;

namespace ghl {

namespace {

// Inline JSON when the text starts with '{', otherwise a file path.
json load_params(const std::string& text) {
  if (text.empty()) return json::object();
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') return json::parse(text);
  std::ifstream in(text);
  if (!in) throw InvalidParameter("cannot read params file '" + text + "'");
  return json::parse(in);
}

std::pair<double, int> parse_grid(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidParameter("--grid expects L,N");
  try {
    return {std::stod(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InvalidParameter("--grid expects L,N, got '" + text + "'");
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw InvalidParameter("bad number '" + item + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw InvalidParameter("empty list");
  return out;
}

json get_or(const json& j, const char* key, json fallback) {
  return j.contains(key) ? j.at(key) : fallback;
}

std::unique_ptr<ClosedForm> make_solution(const std::string& kind, const json& j) {
  if (kind == "soliton") {
    SolitonParams p{get_or(j, "c", 1.0).get<double>(), get_or(j, "mu", 0.0).get<double>(),
                    get_or(j, "n", 1).get<int>()};
    p.validate();
    return std::make_unique<SolitonSolution>(p);
  }
  if (kind == "breather" || kind == "mkdv-breather") {
    BreatherParams p{get_or(j, "alpha", 1.0).get<double>(), get_or(j, "beta", 1.0).get<double>(),
                     kind == "breather" ? get_or(j, "mu", 0.0).get<double>() : 0.0,
                     get_or(j, "n", 1).get<int>(), get_or(j, "x1", 0.0).get<double>(),
                     get_or(j, "x2", 0.0).get<double>()};
    p.validate();
    return std::make_unique<BreatherSolution>(p);
  }
  if (kind == "periodic") {
    const PeriodicBreatherParams p = make_periodic_params(
        get_or(j, "beta", 1.0).get<double>(), get_or(j, "k", 1.0 / 17).get<double>(),
        get_or(j, "order", 5).get<int>(), get_or(j, "x1", 0.0).get<double>(),
        get_or(j, "x2", 0.0).get<double>());
    return std::make_unique<PeriodicBreatherSolution>(p);
  }
  throw InvalidParameter("unknown solution kind '" + kind + "'");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream o(path);
  if (!o) throw Error("cannot write " + path);
  o << text;
}

std::string manifest_path_for(const std::string& output) { return output + ".manifest.json"; }

GridFunction read_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot read profile '" + path + "'");
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> xs, us;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("profile row without comma: " + line);
    xs.push_back(std::stod(line.substr(0, comma)));
    us.push_back(std::stod(line.substr(comma + 1)));
  }
  if (xs.size() < 16) throw InvalidParameter("profile needs at least 16 rows");
  const Grid g(-xs.front(), static_cast<int>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (std::abs(xs[i] - g.x(static_cast<int>(i))) > 1e-9 * g.half_width)
      throw InvalidParameter("profile x column is not the uniform grid on [-L, L)");
  return GridFunction(g, us);
}

// ---------------------------------------------------------------- commands

struct HierarchyOpts {
  int n = 1;
  bool mu0 = false;
  bool lenard = false;
  std::string format = "text";
};

int cmd_hierarchy(const HierarchyOpts& o, std::ostream& out) {
  if (o.lenard) {
    if (o.n < 0 || o.n > kMaxHierarchyIndex + 1) throw InvalidParameter("--n out of range");
    const DiffPoly& l = lenard(o.n);
    if (o.format == "json")
      out << json{{"lenard", o.n}, {"poly", l.to_string("v")}}.dump(2) << "\n";
    else
      out << l.to_string("v") << "\n";
    return kExitOk;
  }
  if (o.n < 1 || o.n > kMaxHierarchyIndex)
    throw InvalidParameter("--n must be in 1.." + std::to_string(kMaxHierarchyIndex));
  const HierarchyEquation& e = o.mu0 ? mkdv_rhs(o.n) : gardner_rhs(o.n);
  std::vector<std::string> a;
  for (const auto& q : e.a) a.push_back(q.get_str());
  if (o.format == "json") {
    json j;
    j["n"] = o.n;
    j["equation"] = o.mu0 ? "mkdv" : "gardner";
    j["order"] = e.order();
    j["flux"] = e.flux_form().to_string();
    j["rhs"] = e.rhs.to_string();
    j["a"] = a;
    j["transport"] = e.transport.get_str();
    out << j.dump(2) << "\n";
  } else {
    out << e.flux_form().to_string() << "\n";
    out << "# a =";
    for (const auto& s : a) out << " " << s;
    out << "\n# a0 = " << e.transport.get_str() << "\n";
  }
  return kExitOk;
}

struct SampleOpts {
  std::string kind = "breather";
  std::string params;
  std::string grid = "40,2048";
  double t = 0;
  std::string out;
};

int cmd_sample(const SampleOpts& o, std::ostream& out) {
  const json params = load_params(o.params);
  const auto sol = make_solution(o.kind, params);
  const auto [L, N] = parse_grid(o.grid);
  const GridFunction u = sample_solution(*sol, o.t, Grid(L, N));
  if (o.out.empty()) {
    write_csv(out, u);
    return kExitOk;
  }
  std::ostringstream csv;
  write_csv(csv, u);
  write_text(o.out, csv.str());
  RunManifest m{"solution sample", {{"kind", o.kind}, {"params", params}, {"L", L}, {"N", N},
                                    {"t", o.t}},
                {o.out}};
  write_json(manifest_path_for(o.out), m.to_json());
  out << "wrote " << o.out << "\n";
  return kExitOk;
}

struct VerifyOpts {
  std::string test;
  VerifyParams p;
  std::string params;
  std::string report;
};

int cmd_verify(VerifyOpts o, std::ostream& out) {
  if (!o.params.empty()) {
    json merged = o.p.to_json();
    const json given = load_params(o.params);
    for (const auto& [k, v] : given.items()) merged[k] = v;
    o.p = VerifyParams::from_json(merged);
  }
  const VerificationReport r = verify(o.test, o.p);
  const json j = r.to_json();
  if (o.report.empty()) {
    out << j.dump(2) << "\n";
  } else {
    write_json(o.report, j);
    RunManifest m{"verify " + o.test, o.p.to_json(), {o.report}};
    write_json(manifest_path_for(o.report), m.to_json());
    out << (r.pass ? "PASS " : "FAIL ") << o.test << " residual " << format_double(r.residual_inf)
        << " tolerance " << format_double(r.tolerance) << "\n";
  }
  return r.pass ? kExitOk : kExitFailure;
}

struct EvolveOpts {
  int n = 1;
  double mu = 0.1;
  std::string init = "breather";
  double alpha = 1.0;
  double beta = 0.4;
  double c = 1.0;
  std::string file;
  double T = 1;
  double dt = 0;
  double dt_factor = 0.15;
  std::string grid = "80,1024";
  int checkpoints = 10;
  bool no_dealias = false;
  std::string out = "evolve_out";
};

int cmd_evolve(const EvolveOpts& o, std::ostream& out) {
  if (o.n < 1 || o.n > kMaxHierarchyIndex) throw InvalidParameter("--n out of range");
  EvolveConfig cfg;
  cfg.eqn = &gardner_rhs(o.n);
  cfg.mu = o.mu;
  cfg.T = o.T;
  cfg.checkpoints = o.checkpoints;
  cfg.dealias = !o.no_dealias;

  std::unique_ptr<ClosedForm> exact;
  GridFunction u0;
  if (o.init == "file") {
    if (o.file.empty()) throw InvalidParameter("--init file needs --file <csv>");
    u0 = read_profile_csv(o.file);
    cfg.grid = u0.grid();
  } else {
    const auto [L, N] = parse_grid(o.grid);
    cfg.grid = Grid(L, N);
    if (o.init == "breather")
      exact = make_solution("breather",
                            {{"alpha", o.alpha}, {"beta", o.beta}, {"mu", o.mu}, {"n", o.n}});
    else if (o.init == "soliton")
      exact = make_solution("soliton", {{"c", o.c}, {"mu", o.mu}, {"n", o.n}});
    else
      throw InvalidParameter("--init must be breather, soliton or file");
    u0 = sample_solution(*exact, 0, cfg.grid);
  }
  cfg.dt = o.dt > 0 ? o.dt : o.dt_factor * stable_dt(cfg, u0);

  const Trajectory traj = evolve(cfg, u0);
  fs::create_directories(o.out);
  std::vector<std::string> outputs;
  json errors = json::array();
  for (std::size_t i = 0; i < traj.size(); ++i) {
    std::ostringstream name;
    name << "checkpoint_" << std::setw(3) << std::setfill('0') << i << ".csv";
    const std::string path = (fs::path(o.out) / name.str()).string();
    std::ostringstream csv;
    write_csv(csv, traj[i].u);
    write_text(path, csv.str());
    outputs.push_back(path);
    if (exact) {
      const double e = (traj[i].u - sample_solution(*exact, traj[i].t, cfg.grid)).max_abs();
      errors.push_back({{"t", traj[i].t}, {"error", e}});
    }
  }
  const SpectralCoefficients w{o.alpha, o.beta};
  const DriftReport d = conservation_drift(traj, o.mu, w);
  json drift{{"mass", d.mass},
             {"energy", d.energy},
             {"higher_energy", d.higher_energy},
             {"lyapunov", d.lyapunov},
             {"max", d.max()},
             {"dt", cfg.dt},
             {"steps_per_unit_time", 1.0 / cfg.dt}};
  if (exact) drift["error_vs_closed_form"] = errors;
  const std::string drift_path = (fs::path(o.out) / "drift.json").string();
  write_json(drift_path, drift);
  outputs.push_back(drift_path);

  json params{{"n", o.n}, {"mu", o.mu}, {"init", o.init}, {"T", o.T}, {"dt", cfg.dt},
              {"L", cfg.grid.half_width}, {"N", cfg.grid.npoints},
              {"checkpoints", o.checkpoints}, {"dealias", cfg.dealias}};
  if (o.init == "breather") {
    params["alpha"] = o.alpha;
    params["beta"] = o.beta;
  }
  if (o.init == "soliton") params["c"] = o.c;
  if (o.init == "file") params["file"] = o.file;
  RunManifest m{"evolve", params, outputs};
  write_json((fs::path(o.out) / "manifest.json").string(), m.to_json());
  out << "evolved to t=" << format_double(traj.back().t) << " with dt=" << format_double(cfg.dt)
      << ", max drift " << format_double(d.max()) << "\n";
  return kExitOk;
}

struct IllposedOpts {
  IllposedConfig cfg;
  std::string report;
  std::string sweep;
  std::string csv;
};

json illposed_json(const IllposedReport& r) {
  return {{"T", r.T},
          {"beta", r.beta},
          {"norm1_0", r.norm1_0},
          {"norm2_0", r.norm2_0},
          {"norm1_T", r.norm1_T},
          {"norm2_T", r.norm2_T},
          {"d0", r.d0},
          {"dT", r.dT},
          {"ratio", r.ratio},
          {"separation", r.separation},
          {"separation_in_widths", r.separation_in_widths},
          {"tail", r.tail},
          {"npoints_0", r.npoints_0},
          {"npoints_T", r.npoints_T}};
}

int cmd_illposed(const IllposedOpts& o, std::ostream& out) {
  json params{{"n", o.cfg.n}, {"s", o.cfg.s}, {"alpha", o.cfg.alpha},
              {"delta", o.cfg.delta_sep}, {"mu", o.cfg.mu}, {"T", o.cfg.time()}};
  json j;
  std::vector<std::string> outputs;
  bool pass = true;
  if (!o.sweep.empty()) {
    const std::vector<double> alphas = parse_list(o.sweep);
    params["sweep"] = alphas;
    const auto reps = sweep(o.cfg, alphas);
    j["runs"] = json::array();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      json r = illposed_json(reps[i]);
      r["alpha"] = alphas[i];
      j["runs"].push_back(r);
      pass = pass && reps[i].d0 <= 0.5 && reps[i].ratio >= 10 &&
             (i == 0 || reps[i].ratio >= reps[i - 1].ratio);
    }
    j["trend_pass"] = pass;
    j["note"] =
        "accepted on the monotone trend of d_T/d_0 in alpha; the alpha -> infinity limit is not "
        "reproduced at this scale";
    if (!o.csv.empty()) {
      std::ofstream c(o.csv);
      if (!c) throw Error("cannot write " + o.csv);
      write_sweep_csv(c, o.cfg, alphas, reps);
      outputs.push_back(o.csv);
    } else {
      write_sweep_csv(out, o.cfg, alphas, reps);
    }
  } else {
    const IllposedReport r = run_experiment(o.cfg);
    j = illposed_json(r);
    pass = r.d0 <= 0.5 && r.ratio >= 10;
    j["pass"] = pass;
  }
  j["params"] = params;
  if (o.report.empty()) {
    out << j.dump(2) << "\n";
  } else {
    write_json(o.report, j);
    outputs.push_back(o.report);
    RunManifest m{"illposed", params, outputs};
    write_json(manifest_path_for(o.report), m.to_json());
    out << (pass ? "PASS" : "FAIL") << " illposed, report " << o.report << "\n";
  }
  return pass ? kExitOk : kExitFailure;
}

struct PeriodicOpts {
  double beta = 1;
  double k = 1.0 / 17;
  int order = 5;
  int N = 1024;
  std::string report;
};

int cmd_periodic(const PeriodicOpts& o, std::ostream& out) {
  if (!(o.k > 0 && o.k < 1)) throw InvalidParameter("--k must lie in the open interval (0, 1)");
  if (o.order != 5 && o.order != 7) throw InvalidParameter("--order must be 5 or 7");
  if (!(o.beta > 0)) throw InvalidParameter("--beta must be positive");
  const CommensurabilityResult cr = commensurability_solve(o.beta, o.k);
  VerifyParams vp;
  vp.kind = "periodic";
  vp.beta = o.beta;
  vp.k = o.k;
  vp.order = o.order;
  vp.N = o.N;
  const VerificationReport pde = verify_pde(vp);
  json j{{"beta", o.beta},
         {"k", o.k},
         {"order", o.order},
         {"alpha", cr.alpha},
         {"m", cr.m},
         {"period", 4 * elliptic_K(o.k) / cr.alpha},
         {"ratio_residual", cr.ratio_residual},
         {"K_residual", cr.K_residual},
         {"period_residual", cr.period_residual},
         {"pde_residual", pde.residual_inf},
         {"tolerance", pde.tolerance},
         {"pass", pde.pass}};
  if (o.report.empty()) {
    out << j.dump(2) << "\n";
  } else {
    write_json(o.report, j);
    RunManifest m{"periodic", {{"beta", o.beta}, {"k", o.k}, {"order", o.order}, {"N", o.N}},
                  {o.report}};
    write_json(manifest_path_for(o.report), m.to_json());
    out << (pde.pass ? "PASS" : "FAIL") << " periodic alpha=" << format_double(cr.alpha)
        << " m=" << format_double(cr.m) << "\n";
  }
  return pde.pass ? kExitOk : kExitFailure;
}

struct SuiteOpts {
  bool all = false;
  std::vector<int> criteria;
  std::uint64_t seed = SuiteOptions{}.seed;
  std::string report;
};

int cmd_suite(const SuiteOpts& o, std::ostream& out) {
  std::vector<int> ids = o.criteria;
  if (o.all || ids.empty()) {
    ids.clear();
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  }
  for (int id : ids)
    if (id < 1 || id > kCriterionCount) throw InvalidParameter("no criterion " + std::to_string(id));
  SuiteOptions so;
  so.seed = o.seed;
  const auto results = run_suite(ids, so, &out);
  bool all_pass = true;
  json j = json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    j.push_back({{"criterion", r.id},
                 {"title", r.title},
                 {"pass", r.pass},
                 {"summary", r.summary},
                 {"details", r.details}});
  }
  out << (all_pass ? "ALL PASS" : "SOME CRITERIA FAILED") << " (" << results.size()
      << " criteria)\n";
  if (!o.report.empty()) {
    write_json(o.report, {{"criteria", j}, {"pass", all_pass}});
    RunManifest m{"suite", {{"criteria", ids}, {"seed", o.seed}}, {o.report}};
    write_json(manifest_path_for(o.report), m.to_json());
  }
  return all_pass ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gardner/mKdV hierarchy toolkit", "ghl"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  auto* hier = app.add_subcommand("hierarchy", "Generate hierarchy members");
  hier->require_subcommand(1);
  auto* hier_print = hier->add_subcommand("print", "Print the (2n+1)th-order flow");
  HierarchyOpts ho;
  hier_print->add_option("--n", ho.n, "Hierarchy index")->required();
  hier_print->add_flag("--mu0", ho.mu0, "mKdV member (mu = 0)");
  hier_print->add_flag("--lenard", ho.lenard, "Print the Lenard operator L_n instead");
  hier_print->add_option("--format", ho.format)->check(CLI::IsMember({"text", "json"}));

  auto* sol = app.add_subcommand("solution", "Closed-form solutions");
  sol->require_subcommand(1);
  auto* sol_sample = sol->add_subcommand("sample", "Sample a closed form on a grid");
  SampleOpts so;
  sol_sample->add_option("--kind", so.kind)
      ->check(CLI::IsMember({"soliton", "breather", "mkdv-breather", "periodic"}));
  sol_sample->add_option("--params", so.params, "JSON object or path to a JSON file");
  sol_sample->add_option("--grid", so.grid, "L,N (domain [-L, L), N points)");
  sol_sample->add_option("--t", so.t);
  sol_sample->add_option("--out", so.out, "CSV path (stdout when omitted)");

  auto* ver = app.add_subcommand("verify", "Identity checks on exact solutions");
  VerifyOpts vo;
  ver->add_option("test", vo.test)
      ->required()
      ->check(CLI::IsMember({"pde", "ode", "miura", "conserved", "critical-point"}));
  ver->add_option("--kind", vo.p.kind)
      ->check(CLI::IsMember({"soliton", "breather", "mkdv-breather", "periodic"}));
  ver->add_option("--n", vo.p.n);
  ver->add_option("--alpha", vo.p.alpha);
  ver->add_option("--beta", vo.p.beta);
  ver->add_option("--mu", vo.p.mu);
  ver->add_option("--c", vo.p.c);
  ver->add_option("--k", vo.p.k);
  ver->add_option("--order", vo.p.order);
  ver->add_option("--t", vo.p.t);
  ver->add_option("--L", vo.p.L);
  ver->add_option("--N", vo.p.N);
  ver->add_option("--seed", vo.p.seed);
  ver->add_option("--params", vo.params, "JSON object or path; overrides the flags");
  ver->add_option("--report", vo.report, "Write the JSON report here");

  auto* evo = app.add_subcommand("evolve", "Pseudospectral evolution");
  EvolveOpts eo;
  evo->add_option("--n", eo.n);
  evo->add_option("--mu", eo.mu);
  evo->add_option("--init", eo.init)->check(CLI::IsMember({"breather", "soliton", "file"}));
  evo->add_option("--alpha", eo.alpha);
  evo->add_option("--beta", eo.beta);
  evo->add_option("--c", eo.c);
  evo->add_option("--file", eo.file, "Initial profile CSV (x,u) for --init file");
  evo->add_option("--T", eo.T);
  evo->add_option("--dt", eo.dt, "Time step; 0 picks dt-factor x stability budget");
  evo->add_option("--dt-factor", eo.dt_factor);
  evo->add_option("--grid", eo.grid, "L,N");
  evo->add_option("--checkpoints", eo.checkpoints);
  evo->add_flag("--no-dealias", eo.no_dealias);
  evo->add_option("--out", eo.out, "Output directory");

  auto* ill = app.add_subcommand("illposed", "Breather-pair norm separation");
  IllposedOpts io;
  ill->add_option("--n", io.cfg.n);
  ill->add_option("--s", io.cfg.s);
  ill->add_option("--alpha", io.cfg.alpha);
  ill->add_option("--delta", io.cfg.delta_sep);
  ill->add_option("--mu", io.cfg.mu);
  ill->add_option("--T", io.cfg.T, "Separation time; default min(10 alpha^(4s-2n+1)/delta, 0.06)");
  ill->add_option("--report", io.report);
  ill->add_option("--sweep", io.sweep, "Comma-separated alpha list");
  ill->add_option("--csv", io.csv, "Sweep CSV path (stdout when omitted)");

  auto* per = app.add_subcommand("periodic", "Solve commensurability and check the PDE");
  PeriodicOpts po;
  per->add_option("--beta", po.beta);
  per->add_option("--k", po.k);
  per->add_option("--order", po.order);
  per->add_option("--N", po.N);
  per->add_option("--report", po.report);

  auto* sui = app.add_subcommand("suite", "Acceptance criteria");
  SuiteOpts sopt;
  sui->add_flag("--all", sopt.all);
  sui->add_option("--criterion", sopt.criteria, "Run only these criteria")->delimiter(',');
  sui->add_option("--seed", sopt.seed);
  sui->add_option("--report", sopt.report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  apply_thread_limit_from_env();
  try {
    if (*hier_print) return cmd_hierarchy(ho, out);
    if (*sol_sample) return cmd_sample(so, out);
    if (*ver) return cmd_verify(vo, out);
    if (*evo) return cmd_evolve(eo, out);
    if (*ill) return cmd_illposed(io, out);
    if (*per) return cmd_periodic(po, out);
    if (*sui) return cmd_suite(sopt, out);
  } catch (const InvalidParameter& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ZeroParameter& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "usage error: bad JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  err << "no command\n";
  return kExitUsage;
}

}  // namespace ghl
