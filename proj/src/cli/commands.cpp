#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "alphadg/cli.hpp"
#include "alphadg/errors.hpp"
#include "alphadg/families.hpp"
#include "alphadg/formulas.hpp"
#include "alphadg/io.hpp"
#include "alphadg/kernels.hpp"
#include "alphadg/oracle.hpp"
#include "alphadg/parallel.hpp"

namespace alphadg::cli {

namespace {

using nlohmann::json;

// Options naming a digraph: a file or a generated family.
struct GraphArgs {
  std::string file;
  std::string family;
  std::string n, g, d, k, m, a;
  std::string steps;
  bool primed = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--file", file, "digraph text file");
    cmd->add_option("--family", family, "generated family (path, cycle, complete, c_ng, b_nd, knkm, h4, ...)");
    cmd->add_option("--n", n, "order");
    cmd->add_option("--g", g, "girth parameter");
    cmd->add_option("--d", d, "clique parameter");
    cmd->add_option("--k", k, "connectivity parameter");
    cmd->add_option("--m", m, "block size parameter");
    cmd->add_option("--a", a, "h4 block size");
    cmd->add_option("--steps", steps, "circulant steps, e.g. 1,2");
    cmd->add_flag("--primed", primed, "primed variant of c_ng / b_nd");
  }

  Digraph build(double alpha, const RunConfig& cfg) const {
    if (!file.empty() && !family.empty()) throw InvalidInput("give either --file or --family, not both");
    if (!file.empty()) return load_digraph(file);
    if (family.empty()) throw InvalidInput("no digraph given (use --file or --family)");
    FamilySpec spec;
    spec.kind = family;
    spec.primed = primed;
    spec.alpha = alpha;
    const std::pair<const char*, const std::string*> fields[] = {{"n", &n}, {"g", &g}, {"d", &d},
                                                                 {"k", &k}, {"m", &m}, {"a", &a}};
    for (const auto& [name, text] : fields) {
      if (text->empty()) continue;
      const std::vector<int> v = parse_int_list(*text);
      if (v.size() != 1) throw InvalidInput(std::string("--") + name + " must be a single value here");
      spec.params[name] = v.front();
    }
    if (!steps.empty())
      for (int s : parse_int_list(steps)) spec.steps.insert(s);
    return build_family(spec, cfg.workers, cfg.long_runs);
  }
};

struct Check {
  std::string name;
  bool pass;
};

std::vector<Check> bound_checks(const Digraph& g, double alpha, const SpectralResult& r) {
  constexpr double slack = 1e-9;
  const DegreeProfile p = degree_profile(g);
  const double lam = r.radius;
  return {
      {"alpha_max_out_below_radius", alpha * p.max_out < lam + (alpha == 0.0 ? 0.0 : slack) && lam > 0},
      {"radius_at_most_n_minus_1", lam <= g.n() - 1 + slack || g.n() == 1},
      {"radius_at_least_1", lam >= 1 - slack || g.n() == 1},
      {"min_out_at_most_radius", p.min_out <= lam + slack},
      {"radius_at_most_max_out", lam <= p.max_out + slack},
  };
}

std::string csv_line(std::initializer_list<std::string> cells) {
  std::string s;
  for (const auto& c : cells) {
    if (!s.empty()) s += ',';
    s += c;
  }
  return s + '\n';
}

std::string fr(double x) { return format_real(x); }

// --- radius ------------------------------------------------------------------

int cmd_radius(const GraphArgs& ga, const std::string& alpha_text, const RunConfig& cfg, std::ostream& out) {
  const std::vector<double> alphas = parse_real_list(alpha_text);
  if (alphas.size() != 1) throw InvalidInput("radius takes a single --alpha");
  const double alpha = alphas.front();
  const Digraph g = ga.build(alpha, cfg);
  const SpectralResult r = spectral_radius(g, alpha, cfg.spectral());
  const std::vector<Check> checks = bound_checks(g, alpha, r);

  switch (cfg.format) {
    case Format::json: {
      json j;
      j["radius"] = r.radius;
      j["lo"] = r.certificate_lo;
      j["hi"] = r.certificate_hi;
      j["perron"] = r.perron_vector;
      j["checks"] = json::array();
      for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      out << "quantity,value\n";
      out << csv_line({"radius", fr(r.radius)}) << csv_line({"lo", fr(r.certificate_lo)})
          << csv_line({"hi", fr(r.certificate_hi)}) << csv_line({"iterations", std::to_string(r.iterations)});
      for (std::size_t i = 0; i < r.perron_vector.size(); ++i)
        out << csv_line({"perron_" + std::to_string(i), fr(r.perron_vector[i])});
      for (const auto& c : checks) out << csv_line({"check_" + c.name, c.pass ? "1" : "0"});
      break;
    }
    case Format::text: {
      out << "n            " << g.n() << "  arcs " << g.arc_count() << "  alpha " << fr(alpha) << '\n';
      out << "radius       " << fr(r.radius) << '\n';
      out << "certificate  [" << fr(r.certificate_lo) << ", " << fr(r.certificate_hi) << "]  width "
          << fr(r.width()) << '\n';
      out << "iterations   " << r.iterations << "  kernels "
          << kernels::backend_name(kernels::active_backend()) << '\n';
      out << "perron      ";
      for (double x : r.perron_vector) out << ' ' << fr(x);
      out << '\n';
      for (const auto& c : checks) out << (c.pass ? "  pass  " : "  FAIL  ") << c.name << '\n';
      break;
    }
  }
  for (const auto& c : checks)
    if (!c.pass) return kExitFailure;
  return kExitOk;
}

// --- verify ------------------------------------------------------------------

int cmd_verify(const std::string& id_text, const std::string& n_text, const std::string& alpha_text,
               const std::string& witness_dir, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::optional<TheoremId> id = parse_theorem_id(id_text);
  if (!id) {
    std::string known;
    for (TheoremId t : all_theorem_ids()) known += std::string(" ") + to_string(t);
    throw InvalidInput("unknown theorem id '" + id_text + "'; known:" + known);
  }
  const std::vector<int> ns = parse_int_list(n_text);
  const std::vector<double> alphas = parse_real_list(alpha_text);
  Oracle oracle({cfg.spectral(), cfg.workers, cfg.long_runs});

  bool violated = false;
  json all = json::array();
  for (int n : ns) {
    const VerificationVerdict v = verify_theorem(oracle, *id, n, alphas);
    std::string witness_path;
    if (v.witness) {
      violated = true;
      std::filesystem::create_directories(witness_dir);
      witness_path = (std::filesystem::path(witness_dir) /
                      ("witness_" + std::string(to_string(*id)) + "_n" + std::to_string(n) + ".dg"))
                         .string();
      save_digraph(witness_path, *v.witness);
      err << "violation witness written to " << witness_path << '\n';
    }
    switch (cfg.format) {
      case Format::json:
        all.push_back({{"id", to_string(v.id)},
                       {"n", v.n},
                       {"alphas", v.alphas},
                       {"status", to_string(v.status)},
                       {"details", v.details},
                       {"witness", witness_path.empty() ? json(nullptr) : json(witness_path)}});
        break;
      case Format::csv:
        if (n == ns.front()) out << "id,n,status,cases,witness\n";
        out << csv_line({to_string(v.id), std::to_string(n), to_string(v.status), std::to_string(v.details.size()),
                         witness_path});
        break;
      case Format::text:
        out << to_string(v.id) << " n=" << n << ": " << to_string(v.status) << '\n';
        for (const auto& line : v.details) out << "  " << line << '\n';
        break;
    }
  }
  if (cfg.format == Format::json) out << all.dump(2) << '\n';
  return violated ? kExitViolation : kExitOk;
}

// --- sweep -------------------------------------------------------------------

struct SweepArgs {
  std::string kind;
  std::string n = "4..10";
  std::string k, m;
  std::string alpha = "0,0.1,...,0.9";
};

int sweep_formula(const SweepArgs& sa, const RunConfig& cfg, std::ostream& out) {
  const std::vector<int> ns = parse_int_list(sa.n);
  const std::vector<double> alphas = parse_real_list(sa.alpha);
  const std::optional<std::vector<int>> ks = sa.k.empty() ? std::nullopt : std::optional(parse_int_list(sa.k));
  const std::optional<std::vector<int>> ms = sa.m.empty() ? std::nullopt : std::optional(parse_int_list(sa.m));
  json rows = json::array();
  if (cfg.format != Format::json) out << "n,k,m,alpha,formula,numeric,abs_err\n";
  for (int n : ns) {
    if (n < 3) throw InvalidInput("formula sweep needs n >= 3");
    for (int k = 1; k <= n - 2; ++k) {
      if (ks && std::find(ks->begin(), ks->end(), k) == ks->end()) continue;
      for (int m = 1; m <= n - k - 1; ++m) {
        if (ms && std::find(ms->begin(), ms->end(), m) == ms->end()) continue;
        const Digraph g = k_nkm(n, k, m);
        for (double alpha : alphas) {
          const double f = lambda_knkm(n, k, m, alpha);
          const double x = spectral_radius(g, alpha, cfg.spectral()).radius;
          if (cfg.format == Format::json)
            rows.push_back({{"n", n}, {"k", k}, {"m", m}, {"alpha", alpha}, {"formula", f}, {"numeric", x},
                            {"abs_err", std::abs(f - x)}});
          else
            out << csv_line({std::to_string(n), std::to_string(k), std::to_string(m), fr(alpha), fr(f), fr(x),
                             fr(std::abs(f - x))});
        }
      }
    }
  }
  if (cfg.format == Format::json) out << rows.dump(2) << '\n';
  return kExitOk;
}

int sweep_alpha(const SweepArgs& sa, const GraphArgs& ga, const RunConfig& cfg, std::ostream& out) {
  const std::vector<double> alphas = parse_real_list(sa.alpha);
  GraphArgs fixed = ga;
  fixed.n = sa.n;
  fixed.k = sa.k;
  fixed.m = sa.m;
  json rows = json::array();
  if (cfg.format != Format::json) out << "alpha,radius,lo,hi\n";
  for (double alpha : alphas) {
    const Digraph g = fixed.build(alpha, cfg);
    const SpectralResult r = spectral_radius(g, alpha, cfg.spectral());
    if (cfg.format == Format::json)
      rows.push_back({{"alpha", alpha}, {"radius", r.radius}, {"lo", r.certificate_lo}, {"hi", r.certificate_hi}});
    else
      out << csv_line({fr(alpha), fr(r.radius), fr(r.certificate_lo), fr(r.certificate_hi)});
  }
  if (cfg.format == Format::json) out << rows.dump(2) << '\n';
  return kExitOk;
}

// --- scan --------------------------------------------------------------------

json band_json(const Band& b) {
  json classes = json::array();
  for (const IsoClass& c : b.classes)
    classes.push_back({{"code", c.code}, {"labelled", c.labelled_count}, {"digraph", to_text(c.representative)}});
  return {{"value", b.value}, {"labelled", b.labelled_count}, {"classes", classes}};
}

int cmd_scan(const std::string& n_text, const std::string& alpha_text, const std::string& parameter,
             const std::string& mode, int bands, const RunConfig& cfg, std::ostream& out) {
  const Parameter p = parse_parameter(parameter);
  const Mode md = parse_mode(mode);
  Oracle oracle({cfg.spectral(), cfg.workers, cfg.long_runs});
  json all = json::array();
  bool header = false;
  for (int n : parse_int_list(n_text)) {
    for (double alpha : parse_real_list(alpha_text)) {
      const ExtremalReport r = oracle.extremal_scan(n, alpha, p, md, bands);
      for (const ExtremalGroup& g : r.groups) {
        switch (cfg.format) {
          case Format::json: {
            json bj = json::array();
            for (const Band& b : g.bands) bj.push_back(band_json(b));
            all.push_back({{"n", n},
                           {"alpha", alpha},
                           {"parameter", to_string(p)},
                           {"mode", to_string(md)},
                           {"key", g.key},
                           {"group_size", g.group_size},
                           {"bands", bj},
                           {"runner_up", g.runner_up ? json(*g.runner_up) : json(nullptr)},
                           {"gap", g.gap() ? json(*g.gap()) : json(nullptr)}});
            break;
          }
          case Format::csv:
            if (!header) out << "n,alpha,parameter,mode,key,group_size,band,value,classes,labelled,gap\n";
            header = true;
            for (std::size_t i = 0; i < g.bands.size(); ++i)
              out << csv_line({std::to_string(n), fr(alpha), to_string(p), to_string(md), std::to_string(g.key),
                               std::to_string(g.group_size), std::to_string(i), fr(g.bands[i].value),
                               std::to_string(g.bands[i].classes.size()), std::to_string(g.bands[i].labelled_count),
                               g.gap() ? fr(*g.gap()) : ""});
            break;
          case Format::text:
            out << "n=" << n << " alpha=" << fr(alpha) << " " << to_string(p) << "=" << g.key << " ("
                << g.group_size << " labelled)\n";
            for (std::size_t i = 0; i < g.bands.size(); ++i) {
              const Band& b = g.bands[i];
              out << "  " << to_string(md) << (i ? " band " + std::to_string(i) : std::string()) << " "
                  << fr(b.value) << ": " << b.classes.size() << " class(es), " << b.labelled_count << " labelled\n";
              for (const IsoClass& c : b.classes) {
                out << "    code " << c.code << " arcs";
                for (Arc arc : c.representative.arcs()) out << ' ' << arc.tail << "->" << arc.head;
                out << '\n';
              }
            }
            if (g.gap()) out << "  gap to runner-up " << fr(*g.gap()) << '\n';
            break;
        }
      }
    }
  }
  if (cfg.format == Format::json) out << all.dump(2) << '\n';
  return kExitOk;
}

// --- explore -----------------------------------------------------------------

int cmd_explore(const std::string& n_text, const std::string& d_text, const std::string& alpha_text,
                const RunConfig& cfg, std::ostream& out) {
  const std::vector<double> alphas = parse_real_list(alpha_text);
  Oracle oracle({cfg.spectral(), cfg.workers, cfg.long_runs});
  json rows = json::array();
  std::string label;
  if (cfg.format != Format::json) {
    out << "# " << Problem41Report{}.label << '\n';
    out << "n,d,alpha,g0_radius,g0_in_class,scan_max,gap,agree\n";
  }
  for (int n : parse_int_list(n_text)) {
    std::vector<int> ds;
    if (d_text.empty())
      for (int d = 1; d <= n - 1; ++d) ds.push_back(d);
    else
      ds = parse_int_list(d_text);
    for (int d : ds) {
      const Problem41Report rep = explore_problem_4_1(oracle, n, d, alphas);
      label = rep.label;
      for (const Problem41Row& r : rep.rows) {
        if (cfg.format == Format::json) {
          rows.push_back({{"n", r.n},
                          {"d", r.d},
                          {"alpha", r.alpha},
                          {"g0_radius", r.g0_radius},
                          {"g0_in_class", r.g0_in_class},
                          {"scan_max", r.scan_max ? json(*r.scan_max) : json(nullptr)},
                          {"gap", r.gap ? json(*r.gap) : json(nullptr)},
                          {"agree", r.agree}});
        } else {
          out << csv_line({std::to_string(r.n), std::to_string(r.d), fr(r.alpha), fr(r.g0_radius),
                           r.g0_in_class ? "1" : "0", r.scan_max ? fr(*r.scan_max) : "", r.gap ? fr(*r.gap) : "",
                           r.agree ? "1" : "0"});
        }
      }
    }
  }
  if (cfg.format == Format::json) out << json{{"label", label}, {"rows", rows}}.dump(2) << '\n';
  return kExitOk;
}

// --- generate ----------------------------------------------------------------

int cmd_generate(const GraphArgs& ga, const std::string& alpha_text, const std::string& out_path,
                 const RunConfig& cfg, std::ostream& out) {
  const std::vector<double> alphas = parse_real_list(alpha_text);
  const Digraph g = ga.build(alphas.front(), cfg);
  if (out_path.empty())
    write_digraph(out, g);
  else
    save_digraph(out_path, g);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"A_alpha spectral radius toolkit for strongly connected digraphs", "alphadg"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  cfg.workers = default_workers();
  std::string config_path, format_text;
  auto* tol_opt = app.add_option("--tol", cfg.tol, "power-iteration stopping width")->check(CLI::PositiveNumber);
  auto* iters_opt = app.add_option("--max-iters", cfg.max_iters, "power-iteration cap")->check(CLI::PositiveNumber);
  auto* workers_opt = app.add_option("--workers", cfg.workers, "scan threads")->check(CLI::PositiveNumber);
  auto* long_opt = app.add_flag("--long-runs", cfg.long_runs, "allow n=6 enumeration and n=7 tournament search");
  auto* format_opt = app.add_option("--format", format_text, "json, csv or text");
  app.add_option("--config", config_path, "key=value configuration file");

  GraphArgs radius_graph;
  std::string radius_alpha = "0";
  auto* radius = app.add_subcommand("radius", "certified spectral radius of one digraph");
  radius_graph.attach(radius);
  radius->add_option("--alpha", radius_alpha, "alpha in [0,1)");

  std::string verify_id, verify_n = "3..5", verify_alpha = "0,0.3,0.5,0.7", witness_dir = ".";
  auto* verify = app.add_subcommand("verify", "check a theorem by exhaustive enumeration");
  verify->add_option("id", verify_id, "T3.1 T4.1 T5.3 T6.3 T6.4 T6.5 R5.1 L3.1 L4.1")->required();
  verify->add_option("--n", verify_n, "orders, e.g. 3..5");
  verify->add_option("--alpha", verify_alpha, "alpha list");
  verify->add_option("--witness-dir", witness_dir, "where violation witnesses are written");

  SweepArgs sweep_args;
  GraphArgs sweep_graph;
  auto* sweep = app.add_subcommand("sweep", "formula or alpha sweeps as CSV");
  sweep->add_option("kind", sweep_args.kind, "formula | alpha")->required();
  sweep->add_option("--alpha", sweep_args.alpha, "alpha grid");
  sweep->add_option("--n", sweep_args.n, "orders");
  sweep->add_option("--k", sweep_args.k, "connectivity values (formula sweep)");
  sweep->add_option("--m", sweep_args.m, "block sizes (formula sweep)");
  sweep->add_option("--family", sweep_graph.family, "family (alpha sweep)");
  sweep->add_option("--file", sweep_graph.file, "digraph file (alpha sweep)");
  sweep->add_option("--g", sweep_graph.g);
  sweep->add_option("--d", sweep_graph.d);
  sweep->add_option("--a", sweep_graph.a);
  sweep->add_option("--steps", sweep_graph.steps);
  sweep->add_flag("--primed", sweep_graph.primed);

  std::string scan_n = "4", scan_alpha = "0", scan_param = "girth", scan_mode = "min";
  int scan_bands = 1;
  auto* scan = app.add_subcommand("scan", "extremal scan over all strongly connected digraphs");
  scan->add_option("--n", scan_n, "orders (2..5, 6 with --long-runs)");
  scan->add_option("--alpha", scan_alpha, "alpha list");
  scan->add_option("--parameter", scan_param, "girth, clique, vertex_conn, arc_conn, none");
  scan->add_option("--mode", scan_mode, "min or max");
  scan->add_option("--bands", scan_bands, "number of extremal value bands")->check(CLI::PositiveNumber);

  std::string explore_n = "3..5", explore_d, explore_alpha = "0,0.25,0.5,0.75";
  auto* explore = app.add_subcommand("explore", "G0 versus the maximum over a clique-number class");
  explore->add_option("--n", explore_n, "orders (2..5)");
  explore->add_option("--d", explore_d, "clique numbers (default 1..n-1)");
  explore->add_option("--alpha", explore_alpha, "alpha list");

  GraphArgs gen_graph;
  std::string gen_alpha = "0", gen_out;
  auto* generate = app.add_subcommand("generate", "write a family member in the digraph text format");
  gen_graph.attach(generate);
  generate->add_option("--alpha", gen_alpha, "alpha (extremal tournaments, g0)");
  generate->add_option("--out", gen_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format default_format = radius->parsed() || verify->parsed() || scan->parsed() ? Format::text : Format::csv;
    cfg.format = default_format;
    if (!config_path.empty()) {
      RunConfig file_cfg = cfg;
      for (const std::string& key : apply_config_file(config_path, file_cfg)) {
        if (key == "tol" && tol_opt->count() == 0) cfg.tol = file_cfg.tol;
        if (key == "max_iters" && iters_opt->count() == 0) cfg.max_iters = file_cfg.max_iters;
        if (key == "workers" && workers_opt->count() == 0) cfg.workers = file_cfg.workers;
        if (key == "long_runs" && long_opt->count() == 0) cfg.long_runs = file_cfg.long_runs;
        if (key == "format" && format_opt->count() == 0) cfg.format = file_cfg.format;
      }
    }
    if (format_opt->count() > 0) cfg.format = parse_format(format_text);

    if (radius->parsed()) return cmd_radius(radius_graph, radius_alpha, cfg, out);
    if (verify->parsed()) return cmd_verify(verify_id, verify_n, verify_alpha, witness_dir, cfg, out, err);
    if (sweep->parsed()) {
      if (sweep_args.kind == "formula") return sweep_formula(sweep_args, cfg, out);
      if (sweep_args.kind == "alpha") return sweep_alpha(sweep_args, sweep_graph, cfg, out);
      throw InvalidInput("unknown sweep kind '" + sweep_args.kind + "' (formula, alpha)");
    }
    if (scan->parsed()) return cmd_scan(scan_n, scan_alpha, scan_param, scan_mode, scan_bands, cfg, out);
    if (explore->parsed()) return cmd_explore(explore_n, explore_d, explore_alpha, cfg, out);
    if (generate->parsed()) return cmd_generate(gen_graph, gen_alpha, gen_out, cfg, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ConvergenceError& e) {
    err << "no convergence: " << e.what() << " (enclosure [" << format_real(e.lo()) << ", " << format_real(e.hi())
        << "])\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace alphadg::cli
