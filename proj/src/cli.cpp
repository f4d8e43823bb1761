// Copyright 2026 The rsuplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsuplan/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rsuplan/coverage.hpp"
#include "rsuplan/errors.hpp"
#include "rsuplan/evaluator.hpp"
#include "rsuplan/hespic.hpp"
#include "rsuplan/mip.hpp"
#include "rsuplan/pattern_mining.hpp"

namespace rsu {

namespace {

struct Options {
  std::string trajectories;
  std::string map;
  std::string distances;
  std::string plan;
  std::string config;
  std::string minsup;
  std::size_t max_len = 0;
  double minbenefit = 0;
  std::size_t k = 0;
  double alpha = 1, beta = 1, delta = 1;
  int poisson_m = kDefaultPoissonTruncation;
  double range = 300;
  std::size_t message_size = 2312;
  double frequency = 0.5;
  std::size_t runs = 1;
  std::string strategy = "spacov";
  std::string axis;
  std::string values;
  std::string kind = "all";
  std::string out;
  std::string format;
};

// Expands `--config FILE` into leading `--key value` pairs right after the
// subcommand name, so that explicit flags (parsed later) take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path) return args;
  std::ifstream in(*path);
  if (!in) throw IoError("cannot open config file " + *path);
  std::vector<std::string> injected;
  for (const auto& item : CLI::ConfigINI().from_config(in)) {
    if (item.name == "++" || item.name == "--") continue;
    if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == "default"))
      throw ValidationError("config file " + *path + ": sections are not supported");
    std::string key = item.name;
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "config") throw ValidationError("config file " + *path + ": nested config is not supported");
    injected.push_back("--" + key);
    std::string joined;
    for (std::size_t i = 0; i < item.inputs.size(); ++i) joined += (i ? "," : "") + item.inputs[i];
    injected.push_back(joined);
  }
  std::vector<std::string> out{args.front()};
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), args.begin() + 1, args.end());
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

std::string join(const std::vector<JunctionId>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void mine() {
    const auto db = load_trajectories_file(o_.trajectories);
    const MinSup ms = MinSup::parse(o_.minsup);
    const std::size_t max_len = o_.max_len ? o_.max_len : default_max_len(db);
    std::vector<std::pair<std::string, const PatternSet*>> named;
    AmpResult a;
    if (o_.kind == "fs" || o_.kind == "mfs") {
      a.fs = mine_frequent(db, ms);
      a.mfs = maximal_frequent(a.fs);
      named.emplace_back(o_.kind, o_.kind == "fs" ? &a.fs : &a.mfs);
    } else {
      a = run_amp(db, ms, max_len);
      const std::vector<std::pair<std::string, const PatternSet*>> all{
          {"fs", &a.fs}, {"mfs", &a.mfs}, {"rs", &a.rs}, {"mrs", &a.mrs}, {"mrs_pruned", &a.mrs_pruned}, {"ap", &a.ap}};
      for (const auto& p : all) {
        if (o_.kind == "all" || o_.kind == p.first) named.push_back(p);
      }
    }

    std::ostringstream doc;
    const std::string fmt = format_or("json");
    if (fmt == "json") {
      nlohmann::json j = {{"minsup", ms.str()}, {"max_len", max_len}};
      for (const auto& [name, set] : named) j[name] = patterns_to_json(*set);
      doc << j.dump(2) << '\n';
    } else if (fmt == "csv") {
      doc << "set,sequence,count,total\n";
      for (const auto& [name, set] : named) {
        for (const auto& p : set->patterns)
          doc << name << ',' << join(p.sequence) << ',' << p.support.count << ',' << p.support.total << '\n';
      }
    } else {
      for (const auto& [name, set] : named) {
        doc << "# " << name << " (" << set->size() << ")\n";
        write_patterns(doc, *set);
      }
    }
    std::string summary = "mine: minsup " + ms.str();
    for (const auto& [name, set] : named) summary += ", " + name + " " + std::to_string(set->size());
    emit(doc.str(), summary);
  }

  void spacov_like(bool plus) {
    const auto db = load_trajectories_file(o_.trajectories);
    const MinSup ms = MinSup::parse(o_.minsup);
    const PlacementPlan plan =
        plus ? spacov_plus(db, ms, o_.max_len ? o_.max_len : default_max_len(db)) : spacov(db, ms);
    emit_plan(plan);
  }

  void hespic() {
    const auto db = load_trajectories_file(o_.trajectories);
    const MinSup ms = MinSup::parse(o_.minsup);
    HespicParams p;
    p.k = o_.k;
    p.weights = {o_.alpha, o_.beta, o_.delta};
    p.poisson_m = o_.poisson_m;
    p.max_len = o_.max_len;
    const HespicResult r = hespic_top_k(db, ms, distances(), p);

    std::ostringstream doc;
    const std::string fmt = format_or("json");
    if (fmt == "json") {
      doc << hespic_to_json(r).dump(2) << '\n';
    } else {
      const bool csv = fmt == "csv";
      doc << (csv ? "junction,w_mfs,w_mrs,lambda,probability,weight_rank,probability_rank,path_rank,score,selected\n"
                  : "junction  weight  lambda  probability  O(W)  O(P)  O(L)  score  selected\n");
      const char* sep = csv ? "," : "  ";
      for (const auto& s : r.table) {
        const bool sel = std::find(r.plan.rsu_junctions.begin(), r.plan.rsu_junctions.end(), s.junction) !=
                         r.plan.rsu_junctions.end();
        doc << s.junction << sep;
        if (csv) doc << s.weight.mfs << ',' << s.weight.mrs;
        else doc << '(' << s.weight.mfs << ',' << s.weight.mrs << ')';
        doc << sep << s.lambda << sep << s.probability << sep << s.weight_rank << sep << s.probability_rank << sep
            << s.path_rank << sep << s.score << sep << (sel ? "yes" : "no") << '\n';
      }
      if (!csv) doc << "path: " << join(r.path) << "\njunctions: " << join(r.plan.rsu_junctions) << '\n';
    }
    emit(doc.str(), "hespic: junctions " + join(r.plan.rsu_junctions));
  }

  // Returns false when no pattern reaches minbenefit.
  bool mip() {
    const auto db = load_trajectories_file(o_.trajectories);
    const MinSup ms = MinSup::parse(o_.minsup);
    const MipResult r = mip_placement(db, ms, o_.minbenefit);

    std::ostringstream doc;
    const std::string fmt = format_or("json");
    if (fmt == "json") {
      doc << mip_to_json(r).dump(2) << '\n';
    } else {
      const bool csv = fmt == "csv";
      if (csv) doc << "sequence,support,utility,benefit,ratio\n";
      for (const auto& b : r.mip) {
        if (csv)
          doc << join(b.sequence) << ',' << b.support << ',' << b.utility << ',' << b.benefit << ',' << b.ratio << '\n';
        else
          doc << format_sequence(b.sequence) << "  U=" << b.utility << "  Bf=" << b.benefit << "  R=" << b.ratio
              << '\n';
      }
      if (!csv) doc << "junctions: " << (r.plan ? join(r.plan->rsu_junctions) : "-") << '\n';
    }
    emit(doc.str(), "mip: " + std::to_string(r.mip.size()) + " patterns, junctions " +
                        (r.plan ? join(r.plan->rsu_junctions) : "-"));
    return r.plan.has_value();
  }

  void eval() {
    const RoadMap map = load_map_file(o_.map);
    const auto db = load_trajectories_file(o_.trajectories);
    const PlacementPlan plan = load_plan_file(o_.plan);
    const SimConfig cfg = sim();
    const CoverageReport rep = simulate(map, plan, db, cfg);

    std::ostringstream doc;
    const std::string fmt = format_or("csv");
    if (fmt == "json") {
      nlohmann::json j = {{"plan", plan_to_json(plan)},
                          {"config",
                           {{"communication_range", cfg.communication_range},
                            {"message_size", cfg.message_size},
                            {"message_frequency", cfg.message_frequency},
                            {"runs", cfg.runs}}},
                          {"report", report_to_json(rep)}};
      doc << j.dump(2) << '\n';
    } else if (fmt == "csv") {
      doc << "strategy,junctions,range,coverage_ratio,informed_vehicles,total_vehicles,avg_latency_proxy,"
             "overhead_proxy,cost\n"
          << to_string(plan.strategy) << ',' << join(plan.rsu_junctions) << ',' << cfg.communication_range << ','
          << rep.coverage_ratio << ',' << rep.informed_vehicles << ',' << rep.total_vehicles << ',' << rep.avg_latency
          << ',' << rep.overhead << ',' << rep.cost << '\n';
    } else {
      doc << "coverage ratio      " << rep.coverage_ratio << " (" << rep.informed_vehicles << '/'
          << rep.total_vehicles << ")\n"
          << "latency (proxy)     " << rep.avg_latency << " junctions to first contact\n"
          << "overhead (proxy)    " << rep.overhead << " messages\n"
          << "cost                " << rep.cost << " RSUs\n";
    }
    std::ostringstream s;
    s << "eval: coverage " << rep.coverage_ratio << " (" << rep.informed_vehicles << '/' << rep.total_vehicles
      << "), cost " << rep.cost;
    emit(doc.str(), s.str());
  }

  void sweep_cmd() {
    const RoadMap map = load_map_file(o_.map);
    const auto db = load_trajectories_file(o_.trajectories);
    StrategyConfig sc;
    sc.strategy = parse_strategy(o_.strategy);
    sc.minsup = MinSup::parse(o_.minsup);
    sc.max_len = o_.max_len;
    sc.minbenefit = o_.minbenefit;
    sc.hespic.k = o_.k ? o_.k : 1;
    sc.hespic.weights = {o_.alpha, o_.beta, o_.delta};
    sc.hespic.poisson_m = o_.poisson_m;
    if (!o_.distances.empty()) sc.distances = load_distance_matrix_file(o_.distances);
    const auto points = sweep(map, db, sc, sim(), parse_sweep_axis(o_.axis), split_commas(o_.values));

    std::ostringstream doc;
    if (format_or("csv") == "json") doc << sweep_to_json(points).dump(2) << '\n';
    else write_sweep_csv(doc, points);
    emit(doc.str(), "sweep: " + std::to_string(points.size()) + " points over " + o_.axis);
  }

 private:
  std::string format_or(const char* fallback) const { return o_.format.empty() ? fallback : o_.format; }

  SimConfig sim() const {
    SimConfig c;
    c.communication_range = o_.range;
    c.message_size = o_.message_size;
    c.message_frequency = o_.frequency;
    c.runs = o_.runs;
    c.validate();
    return c;
  }

  DistanceMatrix distances() const {
    if (!o_.distances.empty()) return load_distance_matrix_file(o_.distances);
    if (!o_.map.empty()) return shortest_path_matrix(load_map_file(o_.map));
    throw ValidationError("hespic needs --distances or --map");
  }

  void emit_plan(const PlacementPlan& plan) {
    std::ostringstream doc;
    const std::string fmt = format_or("json");
    if (fmt == "json") doc << plan_to_json(plan).dump(2) << '\n';
    else if (fmt == "csv") doc << "junction\n" << join(plan.rsu_junctions, "\n") << '\n';
    else doc << "strategy: " << to_string(plan.strategy) << "\njunctions: " << join(plan.rsu_junctions) << '\n';
    emit(doc.str(), std::string(to_string(plan.strategy)) + ": junctions " + join(plan.rsu_junctions));
  }

  void emit(const std::string& doc, const std::string& summary) {
    if (o_.out.empty()) {
      out_ << doc;
      return;
    }
    std::ofstream f(o_.out, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + o_.out);
    f << doc;
    f.close();
    if (!f) throw IoError("failed writing " + o_.out);
    out_ << summary << " -> " << o_.out << '\n';
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"RSU placement planning from vehicle trajectories", "rsuplan"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  const auto formats = CLI::IsMember({"json", "csv", "text"});
  auto common = [&](CLI::App* s) {
    s->add_option("--config", o.config, "key=value file with default flag values; flags override it");
    s->add_option("--out", o.out, "Write the report here instead of standard output");
    s->add_option("--format", o.format, "Report format")->check(formats);
  };
  auto trajectories = [&](CLI::App* s) {
    s->add_option("--trajectories", o.trajectories, "Trajectory file (`vehicle: j1 j2 ...` per line)")->required();
  };
  auto minsup = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--minsup", o.minsup, "Minimum support, `a/b` or a decimal in (0, 1]");
    if (required) opt->required();
  };
  auto max_len = [&](CLI::App* s) {
    s->add_option("--max-len", o.max_len, "Longest rare candidate (default: longest trajectory + 1)")
        ->check(CLI::PositiveNumber);
  };
  auto scoring = [&](CLI::App* s) {
    s->add_option("--alpha", o.alpha, "Weight-rank coefficient")->check(CLI::NonNegativeNumber);
    s->add_option("--beta", o.beta, "Probability-rank coefficient")->check(CLI::NonNegativeNumber);
    s->add_option("--delta", o.delta, "Path-rank coefficient")->check(CLI::NonNegativeNumber);
    s->add_option("--poisson-m", o.poisson_m, "Poisson truncation M")->check(CLI::PositiveNumber);
    s->add_option("--distances", o.distances, "Distance matrix file");
  };
  auto simulation = [&](CLI::App* s) {
    s->add_option("--range", o.range, "Communication range in meters (0: co-location)")->check(CLI::NonNegativeNumber);
    s->add_option("--message-size", o.message_size, "Message size in bytes (recorded only)")->check(CLI::PositiveNumber);
    s->add_option("--frequency", o.frequency, "Message frequency in Hz (recorded only)")->check(CLI::PositiveNumber);
    s->add_option("--runs", o.runs, "Repetitions; the simulator is deterministic")->check(CLI::PositiveNumber);
  };

  auto* mine = app.add_subcommand("mine", "Mine FS, MFS, RS, MRS and AP pattern sets");
  trajectories(mine);
  minsup(mine, true);
  max_len(mine);
  mine->add_option("--kind", o.kind, "Pattern set to report")
      ->check(CLI::IsMember({"all", "fs", "mfs", "rs", "mrs", "mrs_pruned", "ap"}));
  common(mine);

  auto* spacov_cmd = app.add_subcommand("spacov", "Cover the maximal frequent patterns");
  trajectories(spacov_cmd);
  minsup(spacov_cmd, true);
  common(spacov_cmd);

  auto* plus_cmd = app.add_subcommand("spacov-plus", "Cover maximal frequent plus pruned minimal rare patterns");
  trajectories(plus_cmd);
  minsup(plus_cmd, true);
  max_len(plus_cmd);
  common(plus_cmd);

  auto* hespic_cmd = app.add_subcommand("hespic", "Rank junctions and keep the best k");
  trajectories(hespic_cmd);
  minsup(hespic_cmd, true);
  max_len(hespic_cmd);
  hespic_cmd->add_option("--k", o.k, "Number of RSUs")->required();
  scoring(hespic_cmd);
  hespic_cmd->add_option("--map", o.map, "Road map; distances are derived from it when --distances is absent");
  common(hespic_cmd);

  auto* mip_cmd = app.add_subcommand("mip", "Cover the high-benefit frequent patterns");
  trajectories(mip_cmd);
  minsup(mip_cmd, true);
  mip_cmd->add_option("--minbenefit", o.minbenefit, "Benefit threshold")->required();
  common(mip_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Replay trajectories against a plan");
  eval_cmd->add_option("--plan", o.plan, "Plan JSON file")->required();
  eval_cmd->add_option("--map", o.map, "Road map file")->required();
  trajectories(eval_cmd);
  simulation(eval_cmd);
  common(eval_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate one strategy across values of one parameter");
  sweep_cmd->add_option("--map", o.map, "Road map file")->required();
  trajectories(sweep_cmd);
  sweep_cmd->add_option("--strategy", o.strategy, "spacov, spacov-plus, hespic or mip")
      ->check(CLI::IsMember({"spacov", "spacov+", "spacov-plus", "hespic", "mip"}));
  sweep_cmd->add_option("--axis", o.axis, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"k", "minsup", "range", "vehicles"}));
  sweep_cmd->add_option("--values", o.values, "Comma-separated axis values")->required();
  minsup(sweep_cmd, false);
  max_len(sweep_cmd);
  sweep_cmd->add_option("--minbenefit", o.minbenefit, "Benefit threshold (mip)");
  sweep_cmd->add_option("--k", o.k, "Number of RSUs (hespic)");
  scoring(sweep_cmd);
  simulation(sweep_cmd);
  common(sweep_cmd);

  try {
    std::vector<std::string> args = raw_args.empty() ? raw_args : expand_config(raw_args);
    // Sweeps over minsup do not need a base threshold.
    if (o.minsup.empty()) o.minsup = "1/2";
    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::CallForHelp&) {
      const auto subs = app.get_subcommands();
      out << (subs.empty() ? app.help() : subs.front()->help("rsuplan"));
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "rsuplan: error: " << e.what() << '\n';
      return kExitUsage;
    }

    Runner run(o, out);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "mine") run.mine();
    else if (cmd == "spacov") run.spacov_like(false);
    else if (cmd == "spacov-plus") run.spacov_like(true);
    else if (cmd == "hespic") run.hespic();
    else if (cmd == "eval") run.eval();
    else if (cmd == "sweep") run.sweep_cmd();
    else if (cmd == "mip") {
      if (!run.mip()) {
        err << "rsuplan: error: no frequent pattern reaches minbenefit " << o.minbenefit << "; no plan\n";
        return kExitUsage;
      }
    }
    return kExitOk;
  } catch (const IoError& e) {
    err << "rsuplan: error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "rsuplan: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "rsuplan: error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ResourceLimitError& e) {
    err << "rsuplan: error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "rsuplan: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace rsu
