// seqspace: norms, indices, F(X), witnesses, residual scans and the verification suite.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "seqspace/acceptance.hpp"
#include "seqspace/error.hpp"
#include "seqspace/indices.hpp"
#include "seqspace/json_io.hpp"
#include "seqspace/lattices.hpp"
#include "seqspace/norm_search.hpp"
#include "seqspace/operators.hpp"
#include "seqspace/q0.hpp"
#include "seqspace/spectral.hpp"

using namespace seqspace;

namespace {

constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string command;
  std::string space;
  std::string lattice;
  std::string x;
  std::string op;
  std::string strategy = "structured";
  std::string kind = "vn";
  std::string grid = "0.5:2.5:101";
  std::string suite = "all";
  std::string out;
  std::string format = "json";
  std::string config;
  double p = 2.0;
  double q = kInf;
  int n = 8;
  std::size_t dim = 4096;
  int n_max = IndexOptions{}.n_max;
  int k_max = IndexOptions{}.orlicz_k_max;
  std::uint64_t j_max = IndexOptions{}.j_max;
  int restarts = 8;
  std::uint64_t seed = kDefaultSeed;
};

std::string csv_num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  require(static_cast<bool>(f), ErrorCode::invalid_argument, "cannot open output file '" + c.out + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Values from the config file override flags; conflicts are reported.
void merge_config(RunConfig& c, const CLI::App& sub) {
  if (c.config.empty()) return;
  std::ifstream f(c.config);
  require(static_cast<bool>(f), ErrorCode::invalid_argument, "cannot read config file '" + c.config + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  const Json j = parse_json_text(ss.str());
  require(j.is_object(), ErrorCode::parse_error, "config file must hold a JSON object");
  for (const auto& [key, val] : j.items()) {
    std::string flag = key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    const CLI::Option* o = nullptr;
    try {
      o = sub.get_option("--" + flag);
    } catch (const CLI::OptionNotFound&) {
      fail(ErrorCode::invalid_argument, "config file: unknown key '" + key + "'");
    }
    const std::string text = val.is_string() ? val.get<std::string>() : val.dump();
    if (o->count() > 0 && o->as<std::string>() != text)
      std::cerr << "warning: config file value for '" << key << "' (" << text << ") overrides --" << flag << " ("
                << o->as<std::string>() << ")\n";
    auto set = [&](auto& field) {
      using T = std::decay_t<decltype(field)>;
      if constexpr (std::is_same_v<T, std::string>)
        field = text;
      else if (val.is_string() && val == "inf")
        field = static_cast<T>(kInf);
      else {
        require(val.is_number(), ErrorCode::parse_error, "config file: '" + key + "' must be a number");
        field = val.get<T>();
      }
    };
    if (flag == "space") set(c.space);
    else if (flag == "lattice") set(c.lattice);
    else if (flag == "x") set(c.x);
    else if (flag == "op") set(c.op);
    else if (flag == "strategy") set(c.strategy);
    else if (flag == "kind") set(c.kind);
    else if (flag == "grid") set(c.grid);
    else if (flag == "suite") set(c.suite);
    else if (flag == "out") set(c.out);
    else if (flag == "format") set(c.format);
    else if (flag == "p") set(c.p);
    else if (flag == "q") set(c.q);
    else if (flag == "n") set(c.n);
    else if (flag == "dim") set(c.dim);
    else if (flag == "n-max") set(c.n_max);
    else if (flag == "k-max") set(c.k_max);
    else if (flag == "j-max") set(c.j_max);
    else if (flag == "restarts") set(c.restarts);
    else if (flag == "seed") set(c.seed);
    else fail(ErrorCode::invalid_argument, "config file: key '" + key + "' does not apply here");
  }
}

SpaceSpec space_of(const RunConfig& c) {
  if (!c.space.empty()) return space_from_text(c.space);
  if (std::isinf(c.q)) return SpaceSpec::lp(c.p);
  return SpaceSpec::lpq(c.p, c.q);
}

IndexOptions index_options(const RunConfig& c) {
  IndexOptions o;
  o.n_max = c.n_max;
  o.j_max = c.j_max;
  o.orlicz_k_max = c.k_max;
  o.dim = c.dim;
  o.seed = c.seed;
  return o;
}

int cmd_norm(const RunConfig& c) {
  require(!c.x.empty() || !c.op.empty(), ErrorCode::invalid_argument, "norm needs --x or --op");
  Json j;
  std::vector<std::array<std::string, 3>> rows;  // quantity, value, method
  if (!c.lattice.empty()) {
    const auto lat = lattice_from_text(c.lattice);
    const Seq a = seq_from_json(parse_json_text(c.x));
    const double v = lattice_norm(lat, a);
    j["lattice"] = lat.describe();
    j["norm"] = {{"value", number(v)}, {"method", "direct_eval"}};
    rows.push_back({"norm", csv_num(v), "direct_eval"});
  } else {
    const auto X = space_of(c);
    j["space"] = X.describe();
    if (!c.x.empty()) {
      const Seq x = seq_from_json(parse_json_text(c.x));
      const double v = norm(X, x);
      j["norm"] = {{"value", number(v)}, {"method", "direct_eval"}};
      rows.push_back({"norm", csv_num(v), "direct_eval"});
    }
    if (!c.op.empty()) {
      std::vector<OperatorSpec> program;
      std::stringstream ss(c.op);
      for (std::string part; std::getline(ss, part, ',');) program.push_back(OperatorSpec::parse(part));
      SearchOptions so;
      so.seed = c.seed;
      so.restarts = c.restarts;
      const auto cert = operator_norm_lower(X, program, c.dim, parse_strategy(c.strategy), so);
      j["operator"] = c.op;
      j["operator_norm_lower"] = {{"value", number(cert.value)},
                                  {"method", "operator_search"},
                                  {"family", cert.family},
                                  {"input_dim", cert.input_dim},
                                  {"output_length", cert.output_length},
                                  {"truncated", cert.truncated},
                                  {"witness", to_json(cert.witness)}};
      rows.push_back({"operator_norm_lower", csv_num(cert.value), "operator_search"});
    }
  }
  if (c.format == "csv") {
    std::string s = "schema_version,quantity,value,method\n";
    for (const auto& r : rows) s += std::to_string(kSchemaVersion) + "," + r[0] + "," + r[1] + "," + r[2] + "\n";
    emit(c, s);
  } else {
    emit(c, dump(j));
  }
  return 0;
}

int cmd_index(const RunConfig& c) {
  const auto X = space_of(c);
  const auto rep = index_report(X, index_options(c));
  if (c.format == "csv") {
    const std::string v = std::to_string(kSchemaVersion) + "," + rep.space + ",";
    std::string s = "schema_version,space,quantity,lo,hi,point,method\n";
    s += v + "alpha," + csv_num(rep.alpha.lo) + "," + csv_num(rep.alpha.hi) + "," + csv_num(rep.alpha_point) + "," +
         rep.method.at("alpha") + "\n";
    s += v + "beta," + csv_num(rep.beta.lo) + "," + csv_num(rep.beta.hi) + "," + csv_num(rep.beta_point) + "," +
         rep.method.at("beta") + "\n";
    s += v + "mu," + csv_num(rep.mu) + "," + csv_num(rep.mu) + "," + csv_num(rep.mu) + "," + rep.method.at("mu") + "\n";
    s += v + "nu," + csv_num(rep.nu) + "," + csv_num(rep.nu) + "," + csv_num(rep.nu) + "," + rep.method.at("nu") + "\n";
    s += v + "f_interval," + csv_num(rep.f_interval.first) + "," + csv_num(rep.f_interval.second) + ",," +
         rep.method.at("f_interval") + "\n";
    emit(c, s);
  } else {
    emit(c, dump(to_json(rep)));
  }
  return 0;
}

int cmd_fset(const RunConfig& c) {
  const auto X = space_of(c);
  const auto rep = index_report(X, index_options(c));
  const auto& m = rep.method.at("f_interval");
  if (c.format == "csv") {
    emit(c, "schema_version,space,f_lo,f_hi,method\n" + std::to_string(kSchemaVersion) + "," + rep.space + "," +
                csv_num(rep.f_interval.first) + "," + csv_num(rep.f_interval.second) + "," + m + "\n");
  } else {
    Json j;
    j["space"] = rep.space;
    j["f_interval"] = {number(rep.f_interval.first), number(rep.f_interval.second)};
    j["method"] = m;
    emit(c, dump(j));
  }
  return 0;
}

int cmd_scan(const RunConfig& c) {
  const auto X = space_of(c);
  ScanOptions so;
  so.dim = c.dim;
  so.restarts = c.restarts;
  so.seed = c.seed;
  const auto pts = residual_scan(X, parse_grid(c.grid), so);
  if (c.format == "csv") {
    std::string s = "schema_version,lambda,residual_estimate,method,dim,seed\n";
    for (const auto& p : pts)
      s += std::to_string(kSchemaVersion) + "," + csv_num(p.lambda) + "," + csv_num(p.estimate) + ",heuristic/" +
           p.method + "," + std::to_string(c.dim) + "," + std::to_string(c.seed) + "\n";
    emit(c, s);
  } else {
    Json j;
    j["space"] = X.describe();
    j["dim"] = c.dim;
    j["seed"] = c.seed;
    j["note"] = "upper estimates of inf ||(D - lambda)x||/||x|| only";
    j["points"] = Json::array();
    for (const auto& p : pts) j["points"].push_back(to_json(p));
    emit(c, dump(j));
  }
  return 0;
}

int cmd_witness(const RunConfig& c) {
  Json j;
  std::vector<std::array<std::string, 3>> rows;
  if (c.kind == "un") {
    const auto u = q0_witness_un(c.p, c.n);
    j = to_json(u);
    rows = {{"norm", csv_num(u.norm), "direct_eval"},
            {"d2_residual", csv_num(u.d2_residual), "direct_eval"},
            {"d3_residual", csv_num(u.d3_residual), "direct_eval"},
            {"d2_predicted", csv_num(u.d2_predicted), "closed_form"},
            {"d3_predicted", csv_num(u.d3_predicted), "closed_form"},
            {"d3_telescoped", csv_num(u.d3_telescoped), "closed_form"}};
  } else if (c.kind == "vn") {
    const auto X = c.space.empty() ? SpaceSpec::lp(c.p) : space_from_text(c.space);
    const Seq seed = c.x.empty() ? Seq::unit(1) : seq_from_json(parse_json_text(c.x));
    const auto w = doubling_witness_vn(X, c.p, c.n, seed);
    j = to_json(w);
    rows = {{"residual", csv_num(w.residual), "direct_eval"}, {"residual_raw", csv_num(w.residual_raw), "direct_eval"},
            {"norm", csv_num(w.norm), "direct_eval"}};
    if (w.predicted) rows.push_back({"predicted", csv_num(*w.predicted), "closed_form"});
  } else {
    fail(ErrorCode::unknown_kind, "unknown witness kind '" + c.kind + "' (vn or un)");
  }
  if (c.format == "csv") {
    std::string s = "schema_version,kind,p,n,quantity,value,method\n";
    for (const auto& r : rows)
      s += std::to_string(kSchemaVersion) + "," + c.kind + "," + csv_num(c.p) + "," + std::to_string(c.n) + "," + r[0] +
           "," + r[1] + "," + r[2] + "\n";
    emit(c, s);
  } else {
    emit(c, dump(j));
  }
  return 0;
}

std::vector<int> suite_ids(const std::string& suite) {
  std::vector<int> ids;
  if (suite == "all") {
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
    return ids;
  }
  std::stringstream ss(suite);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      std::size_t used = 0;
      const int id = std::stoi(part, &used);
      require(used == part.size(), ErrorCode::parse_error, "");
      ids.push_back(id);
    } catch (const std::exception&) {
      fail(ErrorCode::parse_error, "suite must be 'all' or a comma list of criterion numbers, got '" + suite + "'");
    }
    require(ids.back() >= 1 && ids.back() <= kCriterionCount, ErrorCode::range_error,
            "criterion numbers run from 1 to " + std::to_string(kCriterionCount));
  }
  return ids;
}

int cmd_verify(const RunConfig& c) {
  AcceptanceOptions opt;
  opt.seed = c.seed;
  bool all = true;
  Json arr = Json::array();
  std::string csv = "schema_version,criterion,passed,observed,expected\n";
  for (int id : suite_ids(c.suite)) {
    const auto r = run_criterion(id, opt);
    all = all && r.passed;
    if (c.format == "json") {
      arr.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"observed", r.observed},
                     {"expected", r.expected}});
    } else if (c.format == "csv") {
      auto quote = [](std::string s) {
        std::string o = "\"";
        for (char ch : s) o += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return o + "\"";
      };
      csv += std::to_string(kSchemaVersion) + "," + std::to_string(r.id) + "," + (r.passed ? "true" : "false") + "," +
             quote(r.observed) + "," + quote(r.expected) + "\n";
    } else {
      std::cout << format_result(r) << std::endl;
    }
  }
  if (c.format == "json") emit(c, dump(arr));
  if (c.format == "csv") emit(c, csv);
  if (c.format == "table") std::cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seqspace: symmetric sequence spaces, indices and approximate eigenvectors"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* s) {
    s->add_option("--space", c.space, "space as JSON, e.g. {\"kind\":\"lp\",\"p\":2}");
    s->add_option("--p", c.p, "exponent p (l^p when --space is absent)");
    s->add_option("--q", c.q, "second exponent (l^{p,q} when --space is absent)");
    s->add_option("--seed", c.seed, "random seed");
    s->add_option("--out", c.out, "output file (stdout when absent)");
    s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv", "table"}));
    s->add_option("--config", c.config, "JSON config file; its values win over flags");
  };
  auto index_flags = [&](CLI::App* s) {
    s->add_option("--n-max", c.n_max, "largest dilation exponent");
    s->add_option("--k-max", c.k_max, "dyadic range for Orlicz formulas");
    s->add_option("--j-max", c.j_max, "truncation of sup over j");
    s->add_option("--dim", c.dim, "vector length for searches");
  };

  auto* norm_cmd = app.add_subcommand("norm", "norm of a vector, or lower bound for an operator norm");
  common(norm_cmd);
  norm_cmd->add_option("--lattice", c.lattice, "lattice as JSON (ex, wlq, un)");
  norm_cmd->add_option("--x", c.x, "vector as a JSON array");
  norm_cmd->add_option("--op", c.op, "operator program, comma separated (sigma_up:2,tau:1,...)");
  norm_cmd->add_option("--strategy", c.strategy, "structured, random or optimize");
  norm_cmd->add_option("--dim", c.dim, "vector length for the search");
  norm_cmd->add_option("--restarts", c.restarts, "restarts for the optimize strategy");

  auto* index_cmd = app.add_subcommand("index", "Boyd and fundamental indices");
  common(index_cmd);
  index_flags(index_cmd);
  auto* fset_cmd = app.add_subcommand("fset", "the interval [1/beta, 1/alpha]");
  common(fset_cmd);
  index_flags(fset_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "residual scan of D - lambda over a lambda grid");
  common(scan_cmd);
  scan_cmd->add_option("--grid", c.grid, "start:stop:steps");
  scan_cmd->add_option("--dim", c.dim, "support length of test vectors");
  scan_cmd->add_option("--restarts", c.restarts, "local minimization restarts");

  auto* witness_cmd = app.add_subcommand("witness", "approximate eigenvector witnesses");
  common(witness_cmd);
  witness_cmd->add_option("--kind", c.kind, "vn (doubling operator) or un (D_2, D_3 on Q_0)");
  witness_cmd->add_option("--n", c.n, "witness index");
  witness_cmd->add_option("--x", c.x, "seed vector for vn as a JSON array (default e_1)");

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  common(verify_cmd);
  verify_cmd->add_option("--suite", c.suite, "all or a comma list of criterion numbers");
  c.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ErrorCode::invalid_argument);
  }

  CLI::App* sub = app.get_subcommands().front();
  c.command = sub->get_name();
  if (c.command == "verify" && sub->get_option("--format")->count() == 0) c.format = "table";
  try {
    merge_config(c, *sub);
    if (c.command == "norm") return cmd_norm(c);
    if (c.command == "index") return cmd_index(c);
    if (c.command == "fset") return cmd_fset(c);
    if (c.command == "scan") return cmd_scan(c);
    if (c.command == "witness") return cmd_witness(c);
    return cmd_verify(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
