#include "coremotz/cli.hpp"

#include "coremotz/abacus.hpp"
#include "coremotz/bijections.hpp"
#include "coremotz/counting.hpp"
#include "coremotz/oracle.hpp"
#include "coremotz/partition.hpp"
#include "coremotz/paths.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

namespace coremotz::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  int s = 0;
  int d = 1;
  int p = 2;
  int k = -1;
  int corners = -1;
  int render_d = 0;
  bool self_conjugate = false;
  std::string moduli;
  std::string family;
  std::string partition;
  std::string path;
  std::string rows;
  std::string target;
  std::vector<int> grid;
  int smax = 0;
  int dmax = 0;
  int pmax = 0;
};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) throw DomainError("bad integer list '" + text + "'");
    values.push_back(value);
  }
  return values;
}

std::pair<int, int> parse_rows(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("rows must be written lo:hi");
  int lo = 0;
  int hi = 0;
  auto [p1, e1] = std::from_chars(text.data(), text.data() + colon, lo);
  auto [p2, e2] = std::from_chars(text.data() + colon + 1, text.data() + text.size(), hi);
  if (e1 != std::errc{} || e2 != std::errc{} || p1 != text.data() + colon || p2 != text.data() + text.size() || lo > hi) {
    throw DomainError("rows must be written lo:hi with lo <= hi");
  }
  return {lo, hi};
}

CoreFamily family_from(const Options& o) {
  if (!o.family.empty()) return CoreFamily::parse(o.family);
  if (o.s < 1) throw DomainError("a family needs --s (or --family s,d,p)");
  return CoreFamily::make(o.s, o.d, o.p);
}

std::vector<int> moduli_from(const Options& o) {
  if (!o.moduli.empty()) return parse_list(o.moduli);
  return family_from(o).moduli();
}

void emit(std::ostream& out, const std::string& command, Json params, Json result) {
  Json doc;
  doc["command"] = command;
  doc["params"] = std::move(params);
  doc["result"] = std::move(result);
  out << doc.dump() << '\n';
}

Json family_params(const CoreFamily& family) { return Json{{"s", family.s}, {"d", family.d}, {"p", family.p}}; }

int do_count(const Options& o, std::ostream& out) {
  const CoreFamily family = family_from(o);
  const int s = family.s;
  const int d = family.d;
  const int p = family.p;
  CountResult result;
  result.parameters = {{"s", s}, {"d", d}, {"p", p}};

  if (o.self_conjugate) {
    if (p == 1) {
      result.formula = Formula::SelfConjugateFms;
      result.value = count_sc_fms(s, s + d);
    } else if (d == 1) {
      result.formula = Formula::SelfConjugateMain;
      result.value = count_sc_main(s, p);
    } else {
      // no closed formula for d >= 2; fall back to enumeration
      const auto moduli = family.moduli();
      result.value = oracle::enumerate_sc_cores(moduli).size();
      result.formula = Formula::Enumeration;
    }
  } else if (o.corners >= 0) {
    if (d != 1) throw DomainError("--corners is defined for d = 1");
    result.parameters["corners"] = o.corners;
    if (p == 1) {
      result.formula = Formula::CornersTwo;
      result.value = count_corners_two(s, o.corners);
    } else {
      result.formula = Formula::Corners;
      result.value = count_corners(s, p, o.corners);
    }
  } else if (o.k >= 0) {
    result.parameters["k"] = o.k;
    if (p <= 2) {
      if (p < 2) throw DomainError("--k counts restricted rational Motzkin paths; needs p >= 2");
      result.formula = Formula::FreeMotz;
      result.value = count_freemotz(s, d, o.k);
    } else if (o.k == 0) {
      result.formula = Formula::FreeMotz;
      result.value = count_freemotz(s, d, 0);
    } else {
      result.formula = Formula::MainProp;
      result.value = count_mainprop(s, d, p, o.k);
    }
  } else if (p == 1) {
    result.formula = Formula::Anderson;
    result.value = count_anderson(s, s + d);
  } else {
    result.formula = Formula::Main;
    result.value = count_main(s, d, p);
  }

  if (o.format == "json") {
    Json params = family_params(family);
    for (const auto& [key, value] : result.parameters) params[key] = value;
    emit(out, "count", params, Json{{"formula", to_string(result.formula)}, {"value", result.value.str()}});
  } else {
    out << result.value.str() << '\n';
  }
  return kExitOk;
}

int do_enumerate(const Options& o, std::ostream& out) {
  std::vector<std::string> items;
  Json params;
  if (o.target == "cores" || o.target == "sc-cores") {
    const auto moduli = moduli_from(o);
    const auto cores = o.target == "cores" ? oracle::enumerate_cores(moduli) : oracle::enumerate_sc_cores(moduli);
    for (const auto& lambda : cores) items.push_back(lambda.to_string());
    params["moduli"] = moduli;
  } else if (o.target == "paths") {
    const CoreFamily family = family_from(o);
    for (const auto& path : enumerate_rational_motzkin(family.s, family.d, family.p)) items.push_back(path.to_string());
    params = family_params(family);
  } else if (o.target == "gen-dyck") {
    if (o.s < 0) throw DomainError("gen-dyck needs --s >= 0");
    for (const auto& path : enumerate_gen_dyck(o.s, o.p)) items.push_back(path.to_string());
    params = Json{{"s", o.s}, {"p", o.p}};
  } else {
    throw DomainError("unknown enumeration target '" + o.target + "'");
  }
  if (o.format == "json") {
    emit(out, "enumerate", params, Json{{"target", o.target}, {"count", items.size()}, {"items", items}});
  } else {
    for (const auto& item : items) out << item << '\n';
  }
  return kExitOk;
}

int do_map(const Options& o, std::ostream& out) {
  std::string input;
  std::string output;
  Json params;
  if (o.target == "core-to-path") {
    const CoreFamily family = family_from(o);
    const Partition lambda = Partition::parse(o.partition);
    input = lambda.to_string();
    output = core_to_path(lambda, family).to_string();
    params = family_params(family);
  } else if (o.target == "path-to-core") {
    const CoreFamily family = family_from(o);
    input = o.path;
    output = path_to_core(StepWord::parse(o.path), family).to_string();
    params = family_params(family);
  } else if (o.target == "phi") {
    input = o.path;
    output = phi(StepWord::parse(o.path), o.p).to_string();
    params = Json{{"p", o.p}};
  } else if (o.target == "phi-inverse") {
    input = o.path;
    output = phi_inverse(GenDyckPath::parse(o.path, o.p)).to_string();
    params = Json{{"p", o.p}};
  } else if (o.target == "canonicalize") {
    if (o.s < 1) throw DomainError("canonicalize needs --s and --d");
    input = o.path;
    const auto canonical = canonicalize(StepWord::parse(o.path), o.s, o.d);
    params = Json{{"s", o.s}, {"d", o.d}};
    if (o.format == "json") {
      emit(out, "map", params,
           Json{{"operation", o.target},
                {"input", input},
                {"shift", canonical.shift},
                {"output", canonical.path.to_string()},
                {"labels", label_vector(StepWord::parse(o.path), o.s, o.d)}});
    } else {
      out << canonical.shift << ' ' << canonical.path.to_string() << '\n';
    }
    return kExitOk;
  } else {
    throw DomainError("unknown map operation '" + o.target + "'");
  }
  if (o.format == "json") {
    emit(out, "map", params, Json{{"operation", o.target}, {"input", input}, {"output", output}});
  } else {
    out << output << '\n';
  }
  return kExitOk;
}

std::string ascii_path(const StepWord& path) {
  int height = 0;
  int lo = 0;
  int hi = 0;
  std::vector<int> levels;
  for (Step step : path.steps()) {
    const int level = step == Step::D ? height - 1 : height;
    levels.push_back(level);
    height += step == Step::U ? 1 : step == Step::D ? -1 : 0;
    lo = std::min(lo, level);
    hi = std::max(hi, level);
  }
  std::string out;
  for (int row = hi; row >= lo; --row) {
    std::string line;
    for (std::size_t x = 0; x < path.size(); ++x) {
      if (levels[x] != row) {
        line += ' ';
      } else {
        line += path[x] == Step::U ? '/' : path[x] == Step::D ? '\\' : '_';
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

int do_render(const Options& o, std::ostream& out) {
  if (o.target == "abacus") {
    const Partition lambda = Partition::parse(o.partition);
    if (o.s < 1) throw DomainError("render abacus needs --s");
    const int max_bead = beta_set(lambda).max();
    if (o.render_d == 0) {
      if (o.format == "svg") throw DomainError("svg output needs the (s+d, d)-abacus; pass --d");
      const int rows = o.rows.empty() ? max_bead / o.s + 1 : parse_rows(o.rows).second + 1;
      out << render_s_abacus(lambda, o.s, rows);
      return kExitOk;
    }
    auto [lo, hi] = o.rows.empty() ? std::pair{-o.render_d, max_bead / (o.s + o.render_d) + 1} : parse_rows(o.rows);
    out << (o.format == "svg" ? render_abacus_svg(lambda, o.s, o.render_d, lo, hi)
                              : render_abacus(lambda, o.s, o.render_d, lo, hi));
    return kExitOk;
  }
  if (o.target == "path") {
    const StepWord path = StepWord::parse(o.path);
    out << (o.format == "svg" ? render_path_svg(path, o.s, o.render_d) : ascii_path(path));
    return kExitOk;
  }
  throw DomainError("unknown render target '" + o.target + "'");
}

struct VerifyCell {
  std::string family;
  BigInt formula;
  std::size_t oracle = 0;
  bool match() const { return formula == oracle; }
};

int do_verify(const Options& o, std::ostream& out) {
  if (o.grid.size() != 3) throw DomainError("--grid takes smax dmax pmax");
  const int smax = o.grid[0];
  const int dmax = o.grid[1];
  const int pmax = o.grid[2];
  std::vector<VerifyCell> cells;
  for (int s = 1; s <= smax; ++s) {
    for (int d = 1; d <= dmax; ++d) {
      if (gcd(s, d) != 1) continue;
      for (int p = 2; p <= pmax; ++p) {
        const auto family = CoreFamily::make(s, d, p);
        const auto moduli = family.moduli();
        const auto cores = oracle::enumerate_cores(moduli);
        cells.push_back({family.to_string(), count_main(s, d, p), cores.size()});
        if (d == 1) {
          const auto sc = std::count_if(cores.begin(), cores.end(), is_self_conjugate);
          cells.push_back({"sc" + family.to_string(), count_sc_main(s, p), static_cast<std::size_t>(sc)});
        }
      }
    }
  }
  const bool all_match = std::all_of(cells.begin(), cells.end(), [](const VerifyCell& c) { return c.match(); });
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& cell : cells) {
      rows.push_back(Json{{"family", cell.family},
                          {"formula_value", cell.formula.str()},
                          {"oracle_value", std::to_string(cell.oracle)},
                          {"match", cell.match()}});
    }
    emit(out, "verify", Json{{"smax", smax}, {"dmax", dmax}, {"pmax", pmax}}, rows);
  } else {
    for (const auto& cell : cells) {
      out << cell.family << " formula=" << cell.formula.str() << " oracle=" << cell.oracle << ' '
          << (cell.match() ? "ok" : "MISMATCH") << '\n';
    }
    out << (all_match ? "all " : "not all ") << cells.size() << " cells match\n";
  }
  return all_match ? kExitOk : kExitMismatch;
}

int do_table(const Options& o, std::ostream& out) {
  Json rows = Json::array();
  if (o.format != "json") out << "s,d,p,count\n";
  for (int s = 1; s <= o.smax; ++s) {
    for (int d = 1; d <= o.dmax; ++d) {
      if (gcd(s, d) != 1) continue;
      for (int p = 2; p <= o.pmax; ++p) {
        const std::string value = count_main(s, d, p).str();
        if (o.format == "json") {
          rows.push_back(Json{{"s", s}, {"d", d}, {"p", p}, {"count", value}});
        } else {
          out << s << ',' << d << ',' << p << ',' << value << '\n';
        }
      }
    }
  }
  if (o.format == "json") emit(out, "table", Json{{"smax", o.smax}, {"dmax", o.dmax}, {"pmax", o.pmax}}, rows);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Simultaneous core partitions and rational Motzkin paths", "coremotz"};
  app.require_subcommand(1);

  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--s", o.s, "first modulus s");
    cmd->add_option("--d", o.d, "common difference d");
    cmd->add_option("--p", o.p, "number of steps p (moduli s, s+d, ..., s+pd)");
  };

  auto* count = app.add_subcommand("count", "exact count from a closed formula");
  add_family(count);
  count->add_option("--k", o.k, "number of up steps");
  count->add_option("--corners", o.corners, "number of corners (d = 1)");
  count->add_flag("--self-conjugate", o.self_conjugate, "count self-conjugate cores");
  count->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* enumerate = app.add_subcommand("enumerate", "list cores or paths");
  enumerate->add_option("target", o.target, "cores | sc-cores | paths | gen-dyck")->required();
  add_family(enumerate);
  enumerate->add_option("--moduli", o.moduli, "explicit moduli list, e.g. 3,5,7");
  enumerate->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* map = app.add_subcommand("map", "apply a bijection");
  map->add_option("operation", o.target, "core-to-path | path-to-core | phi | phi-inverse | canonicalize")->required();
  add_family(map);
  map->add_option("--family", o.family, "s,d,p");
  map->add_option("--partition", o.partition, "partition like [5,4,2,1]");
  map->add_option("--path", o.path, "step word like UFUDDDDD or tokens like 'U4 F1 D4'");
  map->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* render = app.add_subcommand("render", "draw an abacus or a path");
  render->add_option("target", o.target, "abacus | path")->required();
  render->add_option("--s", o.s);
  render->add_option("--d", o.render_d, "common difference d; omit for the plain s-abacus");
  render->add_option("--partition", o.partition);
  render->add_option("--path", o.path);
  render->add_option("--rows", o.rows, "row range lo:hi (write --rows=-3:3 for negative bounds)");
  render->add_option("--format", o.format)->check(CLI::IsMember({"text", "svg"}));

  auto* verify = app.add_subcommand("verify", "closed formulas against exhaustive enumeration");
  verify->add_option("--grid", o.grid, "smax dmax pmax")->expected(3)->required();
  verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* table = app.add_subcommand("table", "grid of core counts");
  table->add_option("--smax", o.smax)->required();
  table->add_option("--dmax", o.dmax)->required();
  table->add_option("--pmax", o.pmax)->required();
  table->add_option("--format", o.format)->default_val("csv")->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (count->parsed()) return do_count(o, out);
    if (enumerate->parsed()) return do_enumerate(o, out);
    if (map->parsed()) return do_map(o, out);
    if (render->parsed()) return do_render(o, out);
    if (verify->parsed()) return do_verify(o, out);
    if (table->parsed()) return do_table(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace coremotz::cli
