#include "btzotto/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "btzotto/error.hpp"
#include "btzotto/optimizer.hpp"
#include "btzotto/version.hpp"
#include "output.hpp"
#include "params.hpp"

namespace btzotto::cli {
namespace {

using Keys = std::vector<std::string>;

const Keys kRateKeys{"mass", "zeta", "omega", "T", "radius", "nmax", "term_tol"};
const Keys kCycleKeys{"mass",  "zeta",  "omega_c", "omega_h", "Th",
                      "Tc",    "tau_h", "tau_c",   "nmax",    "term_tol",
                      "entropy_convention"};

Keys without(Keys keys, const Keys& drop) {
  std::erase_if(keys, [&](const std::string& k) {
    return std::find(drop.begin(), drop.end(), k) != drop.end();
  });
  return keys;
}

Keys with(Keys keys, const Keys& add) {
  keys.insert(keys.end(), add.begin(), add.end());
  return keys;
}

// Keys each sweep kind reads; the swept quantity itself is excluded.
Keys sweep_keys(SweepKind kind) {
  const Keys bath{"mass", "nmax", "term_tol", "zeta", "zeta_list", "grid"};
  switch (kind) {
    case SweepKind::RateVsT: return with(bath, {"omega"});
    case SweepKind::WorkVsTauH: return with(bath, {"omega_c", "omega_h", "Th", "Tc", "tau_c"});
    case SweepKind::CoolPowerVsTauC: return with(bath, {"omega_c", "omega_h", "Th", "Tc", "tau_h"});
    case SweepKind::EmpVsRatio:
      return with(bath, {"omega_c", "Th", "tau_h", "tau_c", "entropy_convention", "gap_tol", "prescan"});
    case SweepKind::CopVsRatio:
      return with(bath, {"omega_h", "Th", "tau_h", "tau_c", "entropy_convention", "gap_tol", "prescan"});
    case SweepKind::CustomGrid:
      return with(bath, {"omega_c", "omega_h", "Th", "Tc", "tau_h", "tau_c", "entropy_convention",
                         "variable"});
  }
  return bath;
}

Keys all_sweep_flags() {
  Keys out{"kind"};
  for (const SweepKind k : {SweepKind::RateVsT, SweepKind::WorkVsTauH, SweepKind::CoolPowerVsTauC,
                            SweepKind::EmpVsRatio, SweepKind::CopVsRatio, SweepKind::CustomGrid}) {
    for (const auto& key : sweep_keys(k)) {
      if (std::find(out.begin(), out.end(), key) == out.end()) out.push_back(key);
    }
  }
  return out;
}

const Json& base_defaults() {
  static const Json d = {
      {"mass", 0.01},        {"zeta", 0},          {"zeta_list", {-1, 0, 1}},
      {"omega", 0.1},        {"T", 0.1},           {"omega_c", 0.1},
      {"omega_h", 1.0},      {"Th", 2.0},          {"Tc", 0.1},
      {"tau_h", 1.0},        {"tau_c", 1.0},       {"entropy_convention", "standard"},
      {"nmax", 200},         {"term_tol", 1e-12},  {"gap_tol", kDefaultGapTol},
      {"prescan", kDefaultPrescanPoints},          {"variable", "tau_h"},
  };
  return d;
}

struct FigDefaults {
  SweepKind kind;
  Json values;
};

const std::map<std::string, FigDefaults>& fig_table() {
  static const std::map<std::string, FigDefaults> figs{
      {"1", {SweepKind::RateVsT, {{"mass", 0.01}, {"omega", 0.1}, {"grid", {0.01, 2.0, 200}}}}},
      {"2",
       {SweepKind::WorkVsTauH,
        {{"omega_h", 1.0}, {"omega_c", 0.1}, {"Th", 2.0}, {"Tc", 0.1}, {"grid", {0.0, 30.0, 301}}}}},
      {"3",
       {SweepKind::EmpVsRatio,
        {{"zeta_list", {-1}}, {"omega_c", 0.1}, {"tau_h", 0.2}, {"tau_c", 0.5}, {"Th", 2.0},
         {"grid", {0.02, 0.98, 96}}}}},
      {"4a",
       {SweepKind::CoolPowerVsTauC,
        {{"omega_h", 0.5}, {"omega_c", 0.1}, {"Th", 0.2}, {"Tc", 0.1}, {"tau_h", 0.3},
         {"grid", {0.0, 100.0, 501}}}}},
      {"4b",
       {SweepKind::CoolPowerVsTauC,
        {{"omega_h", 0.5}, {"omega_c", 0.1}, {"Th", 0.2}, {"Tc", 0.1}, {"tau_h", 10.0},
         {"grid", {0.0, 100.0, 501}}}}},
      {"5",
       {SweepKind::CopVsRatio,
        {{"zeta_list", {-1}}, {"omega_h", 0.5}, {"tau_h", 0.2}, {"tau_c", 0.2}, {"Th", 2.0},
         {"grid", {0.02, 0.98, 96}}}}},
  };
  return figs;
}

void apply_defaults(ParamSet& p, const Keys& allowed, const Json& extra = Json::object()) {
  for (const auto& key : allowed) {
    if (extra.contains(key)) p.set_default(key, extra.at(key));
    else if (base_defaults().contains(key)) p.set_default(key, base_defaults().at(key));
  }
}

// Registered flags of one subcommand, with their raw text.
struct FlagSlots {
  std::map<std::string, std::string> text;
  std::map<std::string, CLI::Option*> opts;
  std::string config;
  std::string out;
  CLI::Option* config_opt = nullptr;
  CLI::Option* out_opt = nullptr;
};

void add_flags(CLI::App* sub, FlagSlots& slots, const Keys& keys, bool with_out = true) {
  for (const auto& key : keys) {
    const KeyInfo& info = key_info(key);
    slots.opts[key] = sub->add_option("--" + info.flag, slots.text[key], info.help);
  }
  slots.config_opt = sub->add_option("--config", slots.config, "flat JSON parameter file");
  if (with_out) slots.out_opt = sub->add_option("--out", slots.out, "output CSV path");
}

// defaults < file < flags
void layer_inputs(ParamSet& p, const FlagSlots& slots) {
  if (slots.config_opt->count() > 0) p.merge_file(load_config_file(slots.config), slots.config);
  for (const auto& [key, opt] : slots.opts) {
    if (opt->count() > 0) p.merge_flag(key, slots.text.at(key));
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

void check_common(const ParamSet& p) {
  if (p.has("nmax")) require(p.integer("nmax") >= 0, "nmax: must be >= 0");
  if (p.has("term_tol")) require(p.number("term_tol") > 0.0, "term_tol: must be > 0");
  if (p.has("mass")) require(p.number("mass") > 0.0, "mass: must be > 0");
  if (p.has("zeta")) {
    const int z = p.integer("zeta");
    require(z >= -1 && z <= 1, "zeta: must be -1, 0 or 1");
  }
  if (p.has("zeta_list")) {
    const auto zs = p.int_list("zeta_list");
    require(!zs.empty(), "zeta_list: must not be empty");
    for (const int z : zs) require(z >= -1 && z <= 1, "zeta_list: entries must be -1, 0 or 1");
  }
  for (const char* k : {"Th", "Tc", "T"}) {
    if (p.has(k)) require(p.number(k) > 0.0, std::string(k) + ": must be > 0");
  }
  for (const char* k : {"tau_h", "tau_c"}) {
    if (p.has(k)) require(p.number(k) >= 0.0, std::string(k) + ": must be >= 0");
  }
  if (p.has("Th") && p.has("Tc")) require(p.number("Tc") < p.number("Th"), "Tc: must be below Th");
  if (p.has("gap_tol")) require(p.number("gap_tol") > 0.0, "gap_tol: must be > 0");
  if (p.has("prescan")) require(p.integer("prescan") >= 3, "prescan: must be >= 3");
  if (p.has("entropy_convention")) (void)entropy_convention_from_string(p.string("entropy_convention"));
}

BathSpec bath_from(const ParamSet& p, double temperature) {
  BathSpec b;
  b.temperature = temperature;
  if (p.has("mass")) b.mass = p.number("mass");
  if (p.has("zeta")) b.zeta = p.integer("zeta");
  if (p.has("nmax")) b.n_max = p.integer("nmax");
  if (p.has("term_tol")) b.term_tol = p.number("term_tol");
  return b;
}

CycleConfig cycle_from(const ParamSet& p) {
  CycleConfig c;
  c.hot = bath_from(p, p.has("Th") ? p.number("Th") : c.hot.temperature);
  c.cold = bath_from(p, p.has("Tc") ? p.number("Tc") : c.cold.temperature);
  if (p.has("omega_c")) c.omega_c = p.number("omega_c");
  if (p.has("omega_h")) c.omega_h = p.number("omega_h");
  if (p.has("tau_h")) c.tau_h = p.number("tau_h");
  if (p.has("tau_c")) c.tau_c = p.number("tau_c");
  if (p.has("entropy_convention")) {
    c.entropy_convention = entropy_convention_from_string(p.string("entropy_convention"));
  }
  return c;
}

OptimizerSettings settings_from(const ParamSet& p) {
  OptimizerSettings s;
  if (p.has("gap_tol")) s.tol = p.number("gap_tol");
  if (p.has("prescan")) s.prescan = p.integer("prescan");
  return s;
}

// One "name = value" line per filled cell; multi-row tables prefix the
// first column's value.
void print_kv(std::ostream& out, const Table& t) {
  const bool labelled = t.rows.size() > 1;
  for (const auto& row : t.rows) {
    for (std::size_t i = labelled ? 1 : 0; i < t.columns.size(); ++i) {
      if (row[i].empty()) continue;
      if (labelled) out << row[0] << '.';
      out << t.columns[i] << " = " << row[i] << '\n';
    }
  }
}

void emit(const Table& t, const ParamSet& p, const FlagSlots& slots, std::ostream& out,
          bool csv_to_stdout) {
  if (slots.out_opt->count() > 0) {
    write_dataset(slots.out, t, p);
    out << "wrote " << slots.out << " (" << t.rows.size() << " rows)\n";
  } else if (csv_to_stdout) {
    out << csv_text(t);
  } else {
    print_kv(out, t);
  }
}

void cmd_rate(const FlagSlots& slots, std::ostream& out) {
  ParamSet p("rate", kRateKeys);
  apply_defaults(p, kRateKeys);
  layer_inputs(p, slots);
  check_common(p);
  if (p.explicit_key("radius")) {
    require(!p.explicit_key("T"), "T and radius are mutually exclusive");
    p.erase("T");
  }
  require(p.number("omega") > 0.0, "omega: must be > 0");
  const double temperature = p.has("radius")
                                 ? kms_temperature(p.number("radius"), p.number("mass"))
                                 : p.number("T");
  const BathSpec bath = bath_from(p, temperature);
  const RateData r = rate_data(p.number("omega"), bath);
  Table t{{"omega", "T", "zeta", "gamma_plus", "gamma_minus", "gamma", "kappa", "truncated"}, {}};
  t.rows.push_back({format_number(p.number("omega")), format_number(temperature),
                    std::to_string(bath.zeta), format_number(r.gamma_plus),
                    format_number(r.gamma_minus), format_number(r.gamma), format_number(r.kappa),
                    r.truncated ? "1" : "0"});
  emit(t, p, slots, out, false);
}

void cmd_cycle(const FlagSlots& slots, std::ostream& out) {
  ParamSet p("cycle", kCycleKeys);
  apply_defaults(p, kCycleKeys);
  layer_inputs(p, slots);
  check_common(p);
  const CycleConfig cfg = cycle_from(p);
  const CycleResult r = run_cycle(cfg);
  Table t{{"w1", "qh", "w3", "qc", "w_tot", "delta_u", "closure_defect", "entropy", "r3_initial",
           "r3_hot", "r3_final", "efficiency", "finite_time_efficiency", "power", "entropy_rate",
           "ecological", "cop", "cooling_power", "chi", "ecological_fridge"},
          {}};
  std::vector<std::string> row;
  for (const double v : {r.w1, r.qh, r.w3, r.qc, r.w_tot, r.delta_u, r.closure_defect,
                         r.entropy_per_cycle, r.r3_initial, r.r3_hot, r.r3_final}) {
    row.push_back(format_number(v));
  }
  const auto& e = r.engine;
  const auto& f = r.fridge;
  auto opt = [](bool has, double v) { return has ? format_number(v) : std::string{}; };
  for (const std::string& s :
       {opt(e.has_value(), e ? e->efficiency : 0.0), opt(e.has_value(), e ? e->finite_time_efficiency : 0.0),
        opt(e.has_value(), e ? e->power : 0.0), opt(e.has_value(), e ? e->entropy_rate : 0.0),
        opt(e.has_value(), e ? e->ecological : 0.0), opt(f.has_value(), f ? f->cop : 0.0),
        opt(f.has_value(), f ? f->cooling_power : 0.0), opt(f.has_value(), f ? f->chi : 0.0),
        opt(f.has_value(), f ? f->ecological_fridge : 0.0)}) {
    row.push_back(s);
  }
  t.rows.push_back(std::move(row));
  emit(t, p, slots, out, false);
}

std::vector<std::string> optimum_row(const std::string& label, const OptimumReport& r) {
  return {label,
          format_number(r.argmax),
          format_number(r.objective_value),
          format_number(r.efficiency_or_cop_at_opt),
          format_number(r.bracket_lo),
          format_number(r.bracket_hi),
          std::to_string(r.iterations),
          std::to_string(r.evaluations),
          r.near_edge ? "1" : "0"};
}

void cmd_optimize(bool engine, const FlagSlots& slots, std::ostream& out) {
  const Keys keys = with(without(kCycleKeys, {engine ? "omega_h" : "omega_c"}), {"gap_tol", "prescan"});
  ParamSet p(engine ? "optimize-engine" : "optimize-fridge", keys);
  apply_defaults(p, keys);
  layer_inputs(p, slots);
  check_common(p);
  CycleConfig cfg = cycle_from(p);
  const OptimizerSettings s = settings_from(p);
  Table t{{"objective", "argmax", "objective_value", engine ? "efficiency" : "cop", "bracket_lo",
           "bracket_hi", "iterations", "evaluations", "near_edge"},
          {}};
  if (engine) {
    const EngineOptimum o = optimize_engine(cfg, s);
    t.rows.push_back(optimum_row("power", o.power));
    t.rows.push_back(optimum_row("ecological", o.ecological));
    t.columns.insert(t.columns.end(), {"eta_C", "eta_CA"});
    for (auto& row : t.rows) {
      row.push_back(format_number(o.bounds.eta_carnot));
      row.push_back(format_number(o.bounds.eta_ca));
    }
  } else {
    const FridgeOptimum o = optimize_fridge(cfg, s);
    t.rows.push_back(optimum_row("chi", o.chi));
    t.rows.push_back(optimum_row("ecological", o.ecological));
    t.columns.insert(t.columns.end(), {"eps_C", "eps_yan"});
    for (auto& row : t.rows) {
      row.push_back(format_number(o.bounds.cop_carnot));
      row.push_back(format_number(o.bounds.cop_yan));
    }
  }
  emit(t, p, slots, out, false);
}

// Folds the single-zeta shorthand into zeta_list.
void resolve_zeta_list(ParamSet& p) {
  if (!p.explicit_key("zeta")) {
    p.erase("zeta");
    return;
  }
  require(!p.explicit_key("zeta_list"), "zeta and zeta_list are mutually exclusive");
  p.set("zeta_list", Json::array({p.integer("zeta")}));
  p.erase("zeta");
}

SweepSpec sweep_from(const ParamSet& p, SweepKind kind) {
  SweepSpec s;
  s.kind = kind;
  s.cycle = cycle_from(p);
  if (p.has("omega")) s.omega = p.number("omega");
  s.grid = p.grid("grid");
  s.zeta_list = p.int_list("zeta_list");
  if (p.has("variable")) s.variable = p.string("variable");
  s.optimizer = settings_from(p);
  s.validate();
  return s;
}

void run_sweep_command(ParamSet& p, SweepKind kind, const FlagSlots& slots, std::ostream& out) {
  check_common(p);
  resolve_zeta_list(p);
  const SweepSpec spec = sweep_from(p, kind);
  emit(to_table(run_sweep(spec)), p, slots, out, true);
}

SweepKind peek_kind(const FlagSlots& slots) {
  if (slots.opts.at("kind")->count() > 0) return sweep_kind_from_string(slots.text.at("kind"));
  if (slots.config_opt->count() > 0) {
    const Json file = load_config_file(slots.config);
    if (file.is_object() && file.contains("kind")) {
      const Json k = canonical_value(key_info("kind"), file.at("kind"), slots.config + ": kind");
      return sweep_kind_from_string(k.get<std::string>());
    }
  }
  throw UsageError("sweep: --kind is required");
}

void cmd_sweep(const FlagSlots& slots, std::ostream& out) {
  const SweepKind kind = peek_kind(slots);
  const Keys keys = with(sweep_keys(kind), {"kind"});
  ParamSet p("sweep", keys);
  apply_defaults(p, keys);
  p.set_default("kind", to_string(kind));
  layer_inputs(p, slots);
  run_sweep_command(p, kind, slots, out);
}

void cmd_fig(const std::string& id, const FlagSlots& slots, std::ostream& out) {
  const auto it = fig_table().find(id);
  if (it == fig_table().end()) throw UsageError("fig: unknown figure '" + id + "'");
  const FigDefaults& fig = it->second;
  const Keys keys = sweep_keys(fig.kind);
  ParamSet p("fig " + id, keys);
  apply_defaults(p, keys, fig.values);
  layer_inputs(p, slots);
  run_sweep_command(p, fig.kind, slots, out);
}

bool numerical(const std::exception& e) {
  return dynamic_cast<const ConvergenceError*>(&e) || dynamic_cast<const RegimeError*>(&e) ||
         dynamic_cast<const FlatObjectiveError*>(&e);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Otto cycle of a qubit detector coupled to a field in a BTZ black hole background",
               "btz-otto"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  FlagSlots rate_f, cycle_f, sweep_f, fig_f, eng_f, fri_f;
  CLI::App* rate = app.add_subcommand("rate", "transition rates of a static detector");
  add_flags(rate, rate_f, kRateKeys);
  CLI::App* cycle = app.add_subcommand("cycle", "one finite-time Otto cycle");
  add_flags(cycle, cycle_f, kCycleKeys);
  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  add_flags(sweep, sweep_f, all_sweep_flags());
  CLI::App* engine = app.add_subcommand("optimize-engine", "maximize power and ecological function over omega_h");
  add_flags(engine, eng_f, with(without(kCycleKeys, {"omega_h"}), {"gap_tol", "prescan"}));
  CLI::App* fridge = app.add_subcommand("optimize-fridge", "maximize figure of merit and ecological function over omega_c");
  add_flags(fridge, fri_f, with(without(kCycleKeys, {"omega_c"}), {"gap_tol", "prescan"}));
  CLI::App* fig = app.add_subcommand("fig", "figure datasets with pinned defaults");
  std::string fig_id;
  fig->add_option("id", fig_id, "figure: 1, 2, 3, 4a, 4b or 5")->required();
  {
    Keys all;
    for (const auto& [id, f] : fig_table()) {
      for (const auto& k : sweep_keys(f.kind)) {
        if (std::find(all.begin(), all.end(), k) == all.end()) all.push_back(k);
      }
    }
    add_flags(fig, fig_f, all);
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string command = "btz-otto";
  try {
    if (rate->parsed()) {
      command = "rate";
      cmd_rate(rate_f, out);
    } else if (cycle->parsed()) {
      command = "cycle";
      cmd_cycle(cycle_f, out);
    } else if (sweep->parsed()) {
      command = "sweep";
      cmd_sweep(sweep_f, out);
    } else if (engine->parsed()) {
      command = "optimize-engine";
      cmd_optimize(true, eng_f, out);
    } else if (fridge->parsed()) {
      command = "optimize-fridge";
      cmd_optimize(false, fri_f, out);
    } else if (fig->parsed()) {
      command = "fig " + fig_id;
      cmd_fig(fig_id, fig_f, out);
    }
  } catch (const UsageError& e) {
    err << "btz-otto " << command << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "btz-otto " << command << ": invalid parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    if (numerical(e)) {
      err << "btz-otto " << command << ": numerical failure: " << e.what() << '\n';
    } else {
      err << "btz-otto " << command << ": " << e.what() << '\n';
    }
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace btzotto::cli
