// Command-line front end: invariant reports, cut-system decoration, double
// covers, move fuzzing and code comparison over .gauss files.
//
// Exit codes: 0 success / not distinguished, 1 distinguished (eq), 2 a fuzz
// trial changed an invariant, 3 I/O or parse failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aik/aik.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

aik::LinkCode load_code(const std::string& path) {
  return aik::parse(read_file(path));
}

json writhe_json(const aik::WritheTable& table) {
  json out = json::object();
  for (const auto& [n, v] : table) out[std::to_string(n)] = v;
  return out;
}

json pair_map_json(const std::map<std::pair<int, int>, long long>& m) {
  json out = json::object();
  for (const auto& [key, v] : m)
    out[std::to_string(key.first) + "," + std::to_string(key.second)] = v;
  return out;
}

// The Q polynomial and the cover need a cut-free code; the index family is
// diagram data only in the presence of bars, where bar slides rewrite it.
struct ReportPlan {
  bool family = false;  // index-family section applies
  bool knot = false;    // single-component extras
  bool parity = false;  // Q and per-crossing parities
  bool cover = false;   // cover section (barred, cut-free input)
  bool cut = false;     // input already carries cut points
};

ReportPlan plan_for(const aik::LinkCode& code) {
  ReportPlan plan;
  bool bars = code.has_bars();
  bool cuts = code.has_cuts();
  plan.family = !bars;
  plan.knot = plan.family && code.components.size() == 1;
  plan.parity = !cuts;
  plan.cover = bars && !cuts;
  plan.cut = cuts;
  return plan;
}

json cut_section_json(const aik::LinkCode& code) {
  json out = json::object();
  aik::Numbering numbering = aik::solve_numbering(code, 0);
  out["defect_gcd"] = numbering.defect_gcd;
  if (!numbering.solved) {
    out["numbering"] = nullptr;
    out["rho"] = nullptr;
    for (const char* key : {"JO", "JU", "PO", "PU", "POU"}) out[key] = nullptr;
    return out;
  }
  out["numbering"] = numbering.values;
  json table = json::object();
  for (const auto& [id, pair] : aik::rho(code))
    table[std::to_string(id)] = {{"over", pair.over}, {"under", pair.under}};
  out["rho"] = table;
  aik::LinkInvariants inv = aik::cut_invariants(code);
  out["JO"] = writhe_json(inv.over_writhes);
  out["JU"] = writhe_json(inv.under_writhes);
  out["PO"] = inv.over_poly.to_string();
  out["PU"] = inv.under_poly.to_string();
  out["POU"] = inv.over_under_poly.to_string();
  return out;
}

json cover_section_json(const aik::TildeInvariants& tilde) {
  json out = json::object();
  out["code"] = aik::serialize(tilde.cover_code);
  out["components"] = tilde.cover_components;
  out["type"] =
      tilde.odd_type ? json(*tilde.odd_type ? "odd" : "even") : json(nullptr);
  out["JO"] = writhe_json(tilde.cover.over_writhes);
  out["JU"] = writhe_json(tilde.cover.under_writhes);
  out["PO"] = tilde.cover.over_poly.to_string();
  out["PU"] = tilde.cover.under_poly.to_string();
  out["POU"] = tilde.cover.over_under_poly.to_string();
  out["J"] = tilde.cover_knot_writhes ? writhe_json(*tilde.cover_knot_writhes)
                                      : json(nullptr);
  out["P"] = tilde.cover_knot_poly ? json(tilde.cover_knot_poly->to_string())
                                   : json(nullptr);
  return out;
}

int run_inv(const std::string& path, bool as_json) {
  aik::LinkCode code = load_code(path);
  ReportPlan plan = plan_for(code);
  auto info = aik::crossing_info(code);
  auto parities = plan.parity ? aik::bar_parities(code)
                              : std::map<int, aik::ParityData>{};
  aik::LinkingData linking = aik::linking_data(code);
  std::string canonical;
  bool have_canonical = true;
  try {
    canonical = aik::canonical_form(code);
  } catch (const std::invalid_argument&) {
    have_canonical = false;
  }

  if (as_json) {
    json report;
    report["code"] = aik::serialize(code);
    report["canonical"] = have_canonical ? json(canonical) : json(nullptr);
    report["components"] = code.components.size();

    json crossings = json::object();
    for (const auto& [id, c] : info) {
      json entry;
      entry["sign"] = c.sign;
      entry["self"] = c.self;
      entry["over_component"] = c.over_component + 1;
      entry["under_component"] = c.under_component + 1;
      if (c.self) {
        entry["over"] = c.ind.over;
        entry["under"] = c.ind.under;
        entry["left"] = c.ind.left;
        entry["right"] = c.ind.right;
        if (plan.parity) {
          const aik::ParityData& p = parities.at(id);
          entry["parity"] = {{"rho_over", p.rho_bar_over},
                             {"rho_under", p.rho_bar_under},
                             {"bars_over", p.bars_over},
                             {"bars_under", p.bars_under}};
        }
      }
      crossings[std::to_string(id)] = entry;
    }
    report["crossings"] = crossings;

    for (const char* key :
         {"J", "JO", "JU", "P", "PO", "PU", "POU", "per_component"})
      report[key] = nullptr;
    report["compatible"] = nullptr;
    if (plan.family) {
      aik::LinkInvariants inv = aik::link_invariants(code);
      report["JO"] = writhe_json(inv.over_writhes);
      report["JU"] = writhe_json(inv.under_writhes);
      report["PO"] = inv.over_poly.to_string();
      report["PU"] = inv.under_poly.to_string();
      report["POU"] = inv.over_under_poly.to_string();
      report["compatible"] = aik::compatibility(code).compatible;
      json per = json::array();
      for (const aik::ComponentInvariants& ci : aik::component_split(code))
        per.push_back({{"lambda", ci.lambda},
                       {"JO", writhe_json(ci.over_writhes)},
                       {"PO", ci.over_poly.to_string()},
                       {"PU", ci.under_poly.to_string()},
                       {"POU", ci.over_under_poly.to_string()}});
      report["per_component"] = per;
      if (plan.knot) {
        report["J"] = writhe_json(aik::n_writhes_knot(code));
        report["P"] = aik::affine_index_polynomial_knot(code).to_string();
      }
    }

    report["lk"] = pair_map_json(linking.lk);
    report["vlk"] = pair_map_json(linking.vlk);
    report["lambda"] = linking.lambda;
    report["Q"] = plan.parity ? json(aik::q_polynomial(code).to_string())
                              : json(nullptr);
    report["cover"] = plan.cover
                          ? cover_section_json(aik::tilde_invariants(code))
                          : json(nullptr);
    report["cut"] = plan.cut ? cut_section_json(code) : json(nullptr);
    std::cout << report.dump(2) << '\n';
    return 0;
  }

  std::cout << "code: " << aik::serialize(code) << '\n';
  if (have_canonical) std::cout << "canonical: " << canonical << '\n';
  std::cout << "components: " << code.components.size() << '\n';
  if (!info.empty()) std::cout << "crossings:\n";
  for (const auto& [id, c] : info) {
    std::cout << "  " << id << ": " << (c.sign > 0 ? '+' : '-');
    if (c.self) {
      std::cout << " self over=" << c.ind.over << " under=" << c.ind.under
                << " left=" << c.ind.left << " right=" << c.ind.right;
      if (plan.parity) {
        const aik::ParityData& p = parities.at(id);
        std::cout << " parity rho=(" << p.rho_bar_over << ","
                  << p.rho_bar_under << ") bars=(" << p.bars_over << ","
                  << p.bars_under << ")";
      }
    } else {
      std::cout << " link over component " << c.over_component + 1
                << " under component " << c.under_component + 1;
    }
    std::cout << '\n';
  }
  if (plan.family) {
    aik::LinkInvariants inv = aik::link_invariants(code);
    if (plan.knot) {
      std::cout << "J: " << aik::writhe_table_to_string(
                               aik::n_writhes_knot(code))
                << '\n';
      std::cout << "P: "
                << aik::affine_index_polynomial_knot(code).to_string() << '\n';
    }
    std::cout << "JO: " << aik::writhe_table_to_string(inv.over_writhes)
              << '\n';
    std::cout << "JU: " << aik::writhe_table_to_string(inv.under_writhes)
              << '\n';
    std::cout << "PO: " << inv.over_poly.to_string() << '\n';
    std::cout << "PU: " << inv.under_poly.to_string() << '\n';
    std::cout << "POU: " << inv.over_under_poly.to_string() << '\n';
  }
  if (plan.parity)
    std::cout << "Q: " << aik::q_polynomial(code).to_string() << '\n';
  for (const auto& [pair, value] : linking.lk)
    std::cout << "lk(" << pair.first << "," << pair.second << "): " << value
              << '\n';
  for (const auto& [pair, value] : linking.vlk)
    std::cout << "vlk(" << pair.first << "," << pair.second << "): " << value
              << '\n';
  std::cout << "lambda:";
  for (long long v : linking.lambda) std::cout << ' ' << v;
  std::cout << '\n';
  if (plan.family) {
    std::cout << "compatible: "
              << (aik::compatibility(code).compatible ? "yes" : "no") << '\n';
    auto split = aik::component_split(code);
    for (std::size_t i = 0; i < split.size(); ++i)
      std::cout << "component " << i + 1 << ": lambda=" << split[i].lambda
                << " JO=" << aik::writhe_table_to_string(split[i].over_writhes)
                << " PO=" << split[i].over_poly.to_string()
                << " PU=" << split[i].under_poly.to_string()
                << " POU=" << split[i].over_under_poly.to_string() << '\n';
  }
  if (plan.cover) {
    aik::TildeInvariants tilde = aik::tilde_invariants(code);
    std::cout << "cover: " << aik::serialize(tilde.cover_code) << '\n';
    std::cout << "cover components: " << tilde.cover_components << '\n';
    if (tilde.odd_type)
      std::cout << "type: " << (*tilde.odd_type ? "odd" : "even") << '\n';
    std::cout << "cover JO: "
              << aik::writhe_table_to_string(tilde.cover.over_writhes) << '\n';
    std::cout << "cover JU: "
              << aik::writhe_table_to_string(tilde.cover.under_writhes)
              << '\n';
    std::cout << "cover PO: " << tilde.cover.over_poly.to_string() << '\n';
    std::cout << "cover PU: " << tilde.cover.under_poly.to_string() << '\n';
    std::cout << "cover POU: " << tilde.cover.over_under_poly.to_string()
              << '\n';
    if (tilde.cover_knot_writhes)
      std::cout << "cover J: "
                << aik::writhe_table_to_string(*tilde.cover_knot_writhes)
                << '\n';
    if (tilde.cover_knot_poly)
      std::cout << "cover P: " << tilde.cover_knot_poly->to_string() << '\n';
  }
  if (plan.cut) {
    aik::Numbering numbering = aik::solve_numbering(code, 0);
    if (!numbering.solved) {
      std::cout << "defect gcd: " << numbering.defect_gcd << '\n';
    } else {
      for (std::size_t k = 0; k < numbering.values.size(); ++k) {
        std::cout << "numbering " << k + 1 << ":";
        for (long long v : numbering.values[k]) std::cout << ' ' << v;
        std::cout << '\n';
      }
      std::cout << "rho:\n";
      for (const auto& [id, pair] : aik::rho(code))
        std::cout << "  " << id << ": over=" << pair.over
                  << " under=" << pair.under << '\n';
      aik::LinkInvariants inv = aik::cut_invariants(code);
      std::cout << "cut JO: " << aik::writhe_table_to_string(inv.over_writhes)
                << '\n';
      std::cout << "cut JU: " << aik::writhe_table_to_string(inv.under_writhes)
                << '\n';
      std::cout << "cut PO: " << inv.over_poly.to_string() << '\n';
      std::cout << "cut PU: " << inv.under_poly.to_string() << '\n';
      std::cout << "cut POU: " << inv.over_under_poly.to_string() << '\n';
    }
  }
  return 0;
}

int run_cut(const std::string& path, bool binary, std::uint64_t seed) {
  aik::LinkCode code = load_code(path);
  aik::LinkCode cut = binary ? aik::binary_cut_system(code)
                             : aik::random_cut_system(code, seed);
  std::cout << "cut: " << aik::serialize(cut) << '\n';
  aik::Numbering numbering = aik::solve_numbering(cut, 0);
  if (!numbering.solved) {
    std::cout << "defect gcd: " << numbering.defect_gcd << '\n';
    return 0;
  }
  for (std::size_t k = 0; k < numbering.values.size(); ++k) {
    std::cout << "numbering " << k + 1 << ":";
    for (long long v : numbering.values[k]) std::cout << ' ' << v;
    std::cout << '\n';
  }
  std::cout << "rho:\n";
  for (const auto& [id, pair] : aik::rho(cut))
    std::cout << "  " << id << ": over=" << pair.over
              << " under=" << pair.under << '\n';
  aik::LinkInvariants inv = aik::cut_invariants(cut);
  std::cout << "JO: " << aik::writhe_table_to_string(inv.over_writhes) << '\n';
  std::cout << "JU: " << aik::writhe_table_to_string(inv.under_writhes)
            << '\n';
  std::cout << "PO: " << inv.over_poly.to_string() << '\n';
  std::cout << "PU: " << inv.under_poly.to_string() << '\n';
  std::cout << "POU: " << inv.over_under_poly.to_string() << '\n';
  return 0;
}

int run_cover(const std::string& path) {
  std::cout << aik::serialize(aik::double_cover(load_code(path))) << '\n';
  return 0;
}

bool uses_bar_moves(const std::vector<aik::MoveSpec>& log) {
  for (const aik::MoveSpec& m : log)
    if (m.kind == aik::MoveKind::t1_insert ||
        m.kind == aik::MoveKind::t1_delete || m.kind == aik::MoveKind::t3)
      return true;
  return false;
}

int run_replay(const aik::LinkCode& code, const std::string& log_path) {
  std::vector<aik::MoveSpec> log;
  std::istringstream lines(read_file(log_path));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    log.push_back(aik::MoveSpec::from_line(line));
  }
  aik::InvariantScope scope = code.has_bars() || uses_bar_moves(log)
                                  ? aik::InvariantScope::twisted_link
                                  : aik::InvariantScope::virtual_link;
  std::string before = aik::fingerprint(code, scope);
  aik::LinkCode current = code;
  for (const aik::MoveSpec& m : log) current = aik::apply_move(current, m);
  std::cout << aik::serialize(current) << '\n';
  if (aik::fingerprint(current, scope) != before) {
    std::cerr << "invariants changed after " << log.size() << " moves\n";
    return 2;
  }
  std::cout << "invariants preserved over " << log.size() << " moves\n";
  return 0;
}

int run_fuzz(const std::string& path, int steps, int trials,
             std::uint64_t seed, const std::string& replay) {
  aik::LinkCode code = load_code(path);
  if (!replay.empty()) return run_replay(code, replay);
  bool twisted = code.has_bars();
  aik::MoveSet set =
      twisted ? aik::MoveSet::twisted : aik::MoveSet::virtual_only;
  aik::InvariantScope scope = twisted ? aik::InvariantScope::twisted_link
                                      : aik::InvariantScope::virtual_link;
  std::string before = aik::fingerprint(code, scope);
  for (int trial = 0; trial < trials; ++trial) {
    aik::EquivalenceResult walk =
        aik::random_equivalent(code, steps, seed + trial, set);
    if (aik::fingerprint(walk.code, scope) != before) {
      std::cerr << "trial " << trial << " (seed " << seed + trial
                << ") changed an invariant; move log follows\n";
      for (const aik::MoveSpec& m : walk.log)
        std::cout << m.to_line() << '\n';
      return 2;
    }
  }
  std::cout << trials << " trials x " << steps
            << " moves: invariants preserved\n";
  return 0;
}

int run_eq(const std::string& left, const std::string& right) {
  aik::LinkCode a = load_code(left);
  aik::LinkCode b = load_code(right);
  aik::InvariantScope scope = a.has_bars() || b.has_bars()
                                  ? aik::InvariantScope::twisted_link
                                  : aik::InvariantScope::virtual_link;
  bool same = aik::fingerprint(a, scope) == aik::fingerprint(b, scope);
  std::cout << (same ? "not distinguished" : "distinguished") << '\n';
  return same ? 0 : 1;
}

int run_parse(const std::string& path) {
  std::cout << aik::canonical_form(load_code(path)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine index invariants of decorated Gauss codes"};
  app.require_subcommand(1);

  std::uint64_t default_seed = 1;
  if (const char* env = std::getenv("AIK_SEED"))
    default_seed = std::strtoull(env, nullptr, 10);

  std::string inv_file;
  bool inv_json = false;
  CLI::App* inv = app.add_subcommand("inv", "print the invariant report");
  inv->add_option("file", inv_file, "gauss code file")->required();
  inv->add_flag("--json", inv_json, "machine-readable report");

  std::string cut_file;
  bool cut_binary = false;
  std::uint64_t cut_seed = default_seed;
  CLI::App* cut = app.add_subcommand("cut", "decorate with a cut system");
  cut->add_option("file", cut_file, "gauss code file")->required();
  CLI::Option_group* mode = cut->add_option_group("mode");
  mode->add_flag("--binary", cut_binary, "two cuts per crossing");
  mode->add_option("--random", cut_seed, "seeded random cut system");
  mode->require_option(1);

  std::string cover_file;
  CLI::App* cover = app.add_subcommand("cover", "print the double cover");
  cover->add_option("file", cover_file, "gauss code file")->required();

  std::string fuzz_file, fuzz_replay;
  int fuzz_steps = 0, fuzz_trials = 0;
  std::uint64_t fuzz_seed = default_seed;
  CLI::App* fuzz =
      app.add_subcommand("fuzz", "random-move invariance checking");
  fuzz->add_option("file", fuzz_file, "gauss code file")->required();
  fuzz->add_option("--steps", fuzz_steps, "moves per trial")->required();
  fuzz->add_option("--trials", fuzz_trials, "number of trials")->required();
  fuzz->add_option("--seed", fuzz_seed, "base seed (default from AIK_SEED)");
  fuzz->add_option("--replay", fuzz_replay, "move log to replay instead");

  std::string eq_left, eq_right;
  CLI::App* eq = app.add_subcommand("eq", "compare two codes by invariants");
  eq->add_option("file1", eq_left, "gauss code file")->required();
  eq->add_option("file2", eq_right, "gauss code file")->required();

  std::string parse_file;
  CLI::App* parse_cmd =
      app.add_subcommand("parse", "validate and print the canonical form");
  parse_cmd->add_option("file", parse_file, "gauss code file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return run_inv(inv_file, inv_json);
    if (cut->parsed()) return run_cut(cut_file, cut_binary, cut_seed);
    if (cover->parsed()) return run_cover(cover_file);
    if (fuzz->parsed())
      return run_fuzz(fuzz_file, fuzz_steps, fuzz_trials, fuzz_seed,
                      fuzz_replay);
    if (eq->parsed()) return run_eq(eq_left, eq_right);
    if (parse_cmd->parsed()) return run_parse(parse_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
