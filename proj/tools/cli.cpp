#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "catsim/circuit.hpp"
#include "catsim/error.hpp"
#include "catsim/grid_io.hpp"
#include "catsim/optimizer.hpp"
#include "catsim/tables.hpp"
#include "catsim/verify.hpp"
#include "catsim/wigner.hpp"

namespace catsim::cli {

namespace {

using nlohmann::json;

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << body))
    throw Error("cannot write " + path.string());
}

// Options shared by every subcommand; flags override the config file.
struct Common {
  std::string config_path;
  int dim = 0;
  int restarts = 0;
  std::vector<std::uint64_t> seeds;
  std::string output_dir;
  CLI::Option* dim_opt = nullptr;
  CLI::Option* restarts_opt = nullptr;
  CLI::Option* seeds_opt = nullptr;
  CLI::Option* out_opt = nullptr;

  void attach(CLI::App* app, bool optimizer_flags) {
    app->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
    dim_opt = app->add_option("--dim", dim, "Fock-space truncation dimension");
    if (optimizer_flags) {
      restarts_opt = app->add_option("--restarts", restarts, "optimizer restarts");
      seeds_opt = app->add_option("--seeds", seeds, "per-restart seeds")->delimiter(',');
    }
    out_opt = app->add_option("--output-dir", output_dir, "directory for output files");
  }

  RunConfig resolve() const {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    if (dim_opt && dim_opt->count())
      cfg.dim = dim;
    if (restarts_opt && restarts_opt->count())
      cfg.restarts = restarts;
    if (seeds_opt && seeds_opt->count())
      cfg.seed_list = seeds;
    if (out_opt && out_opt->count())
      cfg.output_dir = output_dir;
    cfg.validate();
    return cfg;
  }
};

OptConfig opt_config(const RunConfig& cfg) {
  OptConfig c;
  c.dim = cfg.dim;
  c.restarts = cfg.restarts;
  c.restart_seeds = cfg.seed_list;
  return c;
}

json result_json(const OptResult& r) {
  json phys = json::array();
  for (const auto& p : r.physical) {
    json j = {{"branch", p.branch == Branch::A ? "a" : "b"},
              {"alpha_in", cjson(p.alpha_in)},
              {"alpha_disp", cjson(p.alpha_disp)},
              {"r", p.r}};
    if (r.order == 2)
      j["alpha_1"] = cjson(p.alpha_1);
    phys.push_back(std::move(j));
  }
  json free = {{"a1", cjson(r.free_params.a1)}, {"gamma", cjson(r.free_params.gamma)}, {"r", r.free_params.r}};
  if (r.order == 2)
    free["a2"] = cjson(r.free_params.a2);
  return {{"order", r.order},
          {"q", r.q},
          {"alpha_scs", r.alpha_scs},
          {"fidelity_sq", r.fidelity_sq},
          {"converged", r.converged},
          {"restarts_used", r.restarts_used},
          {"evaluations", r.evaluations},
          {"free_params", free},
          {"physical", phys}};
}

int sign_of_q(double q) {
  if (std::abs(std::remainder(q - kEvenQ, 2.0 * std::numbers::pi)) < 1e-9)
    return +1;
  if (std::abs(std::remainder(q - kOddQ, 2.0 * std::numbers::pi)) < 1e-9)
    return -1;
  return 0;
}

StateVector read_amplitudes(const std::string& path, int dim) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("state file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("amplitudes") || !j["amplitudes"].is_array())
    throw InvalidArgument("state file: expected {\"amplitudes\": [[re, im], ...]}");
  const auto& a = j["amplitudes"];
  if (a.empty() || static_cast<int>(a.size()) > dim)
    throw InvalidArgument("state file: amplitude count must be between 1 and dim");
  CVector v = CVector::Zero(dim);
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (!a[n].is_array() || a[n].size() != 2 || !a[n][0].is_number() || !a[n][1].is_number())
      throw InvalidArgument("state file: each amplitude must be [re, im]");
    v[static_cast<Eigen::Index>(n)] = Complex(a[n][0].get<double>(), a[n][1].get<double>());
  }
  return normalize(StateVector(std::move(v)));
}

} // namespace

void RunConfig::validate() const {
  if (dim < 8)
    throw InvalidArgument("config: dim must be at least 8");
  if (restarts < 1)
    throw InvalidArgument("config: restarts must be at least 1");
  for (const auto& [k, v] : tolerances)
    if (!(v >= 0.0))
      throw InvalidArgument("config: tolerance '" + k + "' must be nonnegative");
}

RunConfig load_config(const std::string& path) {
  RunConfig cfg;
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  if (!j.is_object())
    throw InvalidArgument("config: expected a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "dim")
        cfg.dim = value.get<int>();
      else if (key == "restarts")
        cfg.restarts = value.get<int>();
      else if (key == "seed_list")
        cfg.seed_list = value.get<std::vector<std::uint64_t>>();
      else if (key == "tolerances")
        for (const auto& [name, tol] : value.items())
          cfg.tolerances[name] = tol.get<double>();
      else if (key == "output_dir")
        cfg.output_dir = value.get<std::string>();
      else
        throw InvalidArgument("config: unknown field '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

double parse_angle(const std::string& text) {
  if (text == "+")
    return kEvenQ;
  if (text == "-")
    return kOddQ;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("angle: cannot parse '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v))
    throw InvalidArgument("angle: cannot parse '" + text + "'");
  return v;
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  auto real = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("complex: cannot parse '" + text + "'");
    }
    if (used != s.size() || !std::isfinite(v))
      throw InvalidArgument("complex: cannot parse '" + text + "'");
    return v;
  };
  if (comma == std::string::npos)
    return {real(text), 0.0};
  return {real(text.substr(0, comma)), real(text.substr(comma + 1))};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cat-state circuit simulation, optimization and Wigner grids", "catsim"};
  app.require_subcommand(1);

  // optimize
  auto* opt = app.add_subcommand("optimize", "maximize the fidelity for one target cat");
  Common opt_common;
  opt_common.attach(opt, true);
  int order = 0;
  std::string q_text;
  double alpha_scs = 0.0;
  bool full = false;
  double fixed_r = 0.0;
  opt->add_option("--order", order, "number of photon additions (1 or 2)")->required()->check(CLI::IsMember({1, 2}));
  opt->add_option("--q", q_text, "rotation angle in radians, or + / -")->required();
  opt->add_option("--alpha-scs", alpha_scs, "cat amplitude")->required();
  opt->add_flag("--full", full, "search complex parameters instead of the imaginary axis");
  auto* fixed_r_opt = opt->add_option("--fixed-r", fixed_r, "hold the squeezing at this value");

  // table
  auto* tab = app.add_subcommand("table", "reproduce a reference parameter table");
  Common tab_common;
  tab_common.attach(tab, true);
  int which = 0;
  double tolerance = 0.0;
  tab->add_option("which", which, "table number (1, 2 or 3)")->required();
  auto* tol_opt = tab->add_option("--tolerance", tolerance, "allowed max |dF|");

  // simulate
  auto* sim = app.add_subcommand("simulate", "run a circuit and print its amplitudes");
  Common sim_common;
  sim_common.attach(sim, false);
  std::string circuit_path;
  double cutoff = 1e-10;
  sim->add_option("circuit", circuit_path, "CircuitSpec JSON file")->required();
  sim->add_option("--cutoff", cutoff, "stop once the printed mass reaches 1 - cutoff");

  // wigner
  auto* wig = app.add_subcommand("wigner", "write a Wigner-function grid");
  Common wig_common;
  wig_common.attach(wig, false);
  std::string kind;
  std::string wq_text = "+";
  double w_alpha = 1.0;
  double w_r = 0.0;
  std::string w_disp = "0,0";
  std::string w_circuit, w_state, w_out, w_format = "text";
  GridWindow window;
  wig->add_option("kind", kind, "scs | dsscs | circuit | file")
      ->required()
      ->check(CLI::IsMember({"scs", "dsscs", "circuit", "file"}));
  wig->add_option("--alpha-scs", w_alpha, "cat amplitude");
  wig->add_option("--q", wq_text, "rotation angle in radians, or + / -");
  wig->add_option("--r", w_r, "squeezing");
  wig->add_option("--disp", w_disp, "displacement re,im");
  wig->add_option("--circuit", w_circuit, "CircuitSpec JSON (kind circuit)");
  wig->add_option("--state", w_state, "amplitude JSON file (kind file)");
  wig->add_option("--x-min", window.x_min);
  wig->add_option("--x-max", window.x_max);
  wig->add_option("--nx", window.nx);
  wig->add_option("--p-min", window.p_min);
  wig->add_option("--p-max", window.p_max);
  wig->add_option("--np", window.np);
  wig->add_option("--out", w_out, "output file (default <output-dir>/wigner.txt)");
  wig->add_option("--format", w_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* ver = app.add_subcommand("verify", "run the identity suite");
  Common ver_common;
  ver_common.attach(ver, false);
  bool as_json = false;
  ver->add_flag("--json", as_json, "machine-readable report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* sub = nullptr;
    for (const CLI::App* s : app.get_subcommands())
      sub = s;
    err << (sub ? sub->help() : app.help());
    return kUsage;
  }

  try {
    if (opt->parsed()) {
      const RunConfig cfg = opt_common.resolve();
      OptConfig oc = opt_config(cfg);
      oc.restricted = !full;
      if (fixed_r_opt->count())
        oc.fixed_r = fixed_r;
      const OptResult r = maximize(order, parse_angle(q_text), alpha_scs, oc);
      out << result_json(r).dump(2) << '\n';
      return r.converged ? kOk : kNumeric;
    }

    if (tab->parsed()) {
      if (which < 1 || which > 3) {
        err << "error: table must be 1, 2 or 3\n";
        return kUsage;
      }
      const RunConfig cfg = tab_common.resolve();
      const double tol = tol_opt->count() ? tolerance : cfg.tolerances.at("table_dF");
      const TableDocument doc = reproduce_table(which, opt_config(cfg));
      const std::filesystem::path dir(cfg.output_dir);
      const std::string stem = "table" + std::to_string(which);
      write_file(dir / (stem + ".csv"), to_csv(doc));
      write_file(dir / (stem + ".json"), to_json(doc));
      for (const auto& row : doc.rows)
        if (!row.note.empty())
          out << "note: alpha_scs=" << row.alpha_scs << " q=" << (row.q > 0 ? "+" : "-")
              << " branch=" << (row.branch == Branch::A ? "a" : "b") << ": " << row.note << '\n';
      char line[128];
      std::snprintf(line, sizeof line, "rows %zu  max |dF| %.3e  tolerance %.1e\n", doc.rows.size(),
                    doc.max_abs_dF(), tol);
      out << line;
      out << "wrote " << (dir / (stem + ".csv")).string() << " and " << (dir / (stem + ".json")).string()
          << '\n';
      return doc.max_abs_dF() <= tol ? kOk : kNumeric;
    }

    if (sim->parsed()) {
      const RunConfig cfg = sim_common.resolve();
      CircuitSpec spec = circuit_from_json(read_file(circuit_path));
      if (sim_common.dim_opt->count() || !sim_common.config_path.empty())
        spec.dim = cfg.dim;
      const StateVector v = run_circuit(spec);
      char line[128];
      std::snprintf(line, sizeof line, "# scale %.12g\n# n re im\n", v.scale());
      out << line;
      double mass = 0.0;
      for (int n = 0; n < v.dim() && mass < 1.0 - cutoff; ++n) {
        mass += std::norm(v[n]);
        std::snprintf(line, sizeof line, "%d %.12g %.12g\n", n, v[n].real(), v[n].imag());
        out << line;
      }
      return kOk;
    }

    if (wig->parsed()) {
      const RunConfig cfg = wig_common.resolve();
      const double q = parse_angle(wq_text);
      const int sign = sign_of_q(q);
      const TargetCat target{w_alpha, q, parse_complex(w_disp), w_r};
      WignerSource source = ScsSource{};
      if (kind == "scs") {
        if (sign != 0)
          source = ScsSource{sign, w_alpha};
        else
          source = outer(scs(q, w_alpha, cfg.dim));
      } else if (kind == "dsscs") {
        if (sign != 0)
          source = DsscsSource{sign, target};
        else
          source = outer(dsscs(target, cfg.dim));
      } else if (kind == "circuit") {
        if (w_circuit.empty())
          throw InvalidArgument("wigner circuit: --circuit is required");
        CircuitSpec spec = circuit_from_json(read_file(w_circuit));
        if (wig_common.dim_opt->count() || !wig_common.config_path.empty())
          spec.dim = cfg.dim;
        source = outer(run_circuit(spec));
      } else {
        if (w_state.empty())
          throw InvalidArgument("wigner file: --state is required");
        source = outer(read_amplitudes(w_state, cfg.dim));
      }
      const std::filesystem::path path =
          w_out.empty() ? std::filesystem::path(cfg.output_dir) / "wigner.txt" : std::filesystem::path(w_out);
      if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
      const WignerGrid grid =
          emit_grid(source, window, path.string(), w_format == "json" ? GridFormat::Json : GridFormat::Text);
      char line[160];
      std::snprintf(line, sizeof line, "wrote %s  %dx%d  norm %.6f  W(min) %.6f\n", path.string().c_str(),
                    window.nx, window.np, grid.norm(),
                    *std::min_element(grid.values.begin(), grid.values.end()));
      out << line;
      return kOk;
    }

    if (ver->parsed()) {
      RunConfig cfg;
      // verify accepts deliberately tiny dimensions, so only dim >= 1 is enforced here.
      if (!ver_common.config_path.empty())
        cfg = load_config(ver_common.config_path);
      if (ver_common.dim_opt->count())
        cfg.dim = ver_common.dim;
      if (cfg.dim < 1)
        throw InvalidArgument("verify: dim must be positive");
      const auto checks = run_identity_suite(cfg.dim);
      const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
      if (as_json) {
        json list = json::array();
        for (const auto& c : checks) {
          json j = {{"name", c.name}, {"tolerance", c.tolerance}, {"passed", c.passed}};
          j["value"] = std::isfinite(c.value) ? json(c.value) : json(nullptr);
          if (!c.detail.empty())
            j["detail"] = c.detail;
          list.push_back(std::move(j));
        }
        out << json{{"dim", cfg.dim}, {"passed", ok}, {"checks", list}}.dump(2) << '\n';
      } else {
        char line[256];
        for (const auto& c : checks) {
          std::snprintf(line, sizeof line, "%s %-32s %10.3e  (tol %.1e)%s%s\n", c.passed ? "PASS" : "FAIL",
                        c.name.c_str(), c.value, c.tolerance, c.detail.empty() ? "" : "  ",
                        c.detail.c_str());
          out << line;
        }
        const auto failed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
        out << (ok ? "all checks passed" : std::to_string(failed) + " check(s) failed") << " at dim "
            << cfg.dim << '\n';
      }
      return ok ? kOk : kNumeric;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  }
  return kUsage;
}

} // namespace catsim::cli
