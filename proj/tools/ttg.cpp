// ttg: finite spectral spaces, quotient predicates, and computed Balmer
// spectra (Burnside rings, derived Mackey functors, truncated equivariant
// stable homotopy) on the command line.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ttg/burnside.hpp"
#include "ttg/equivariant.hpp"
#include "ttg/errors.hpp"
#include "ttg/fixtures.hpp"
#include "ttg/io.hpp"
#include "ttg/lattice.hpp"
#include "ttg/marks.hpp"
#include "ttg/perm.hpp"
#include "ttg/predicates.hpp"
#include "ttg/verify.hpp"

namespace {

using ttg::json;

constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ttg::InputError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ttg::InputError("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

// Full output is composed first so a failure never leaves a partial file.
void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw ttg::InputError("cannot open output file '" + out_path + "'");
  out << text;
  if (!out) throw ttg::InputError("failed writing '" + out_path + "'");
}

ttg::PermGroup load_group(const std::string& spec) {
  if (spec.find('/') != std::string::npos ||
      (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")) {
    json j = read_json_file(spec);
    if (j.contains("catalog")) return ttg::catalog(j.at("catalog").get<std::string>());
    if (!j.contains("degree") || !j.contains("generators"))
      throw ttg::InputError("group JSON needs 'degree' and 'generators' or 'catalog'");
    std::size_t degree = j.at("degree").get<std::size_t>();
    std::vector<ttg::Perm> gens;
    for (const auto& g : j.at("generators")) {
      ttg::Perm p;
      for (const auto& v : g) p.push_back(v.get<std::uint8_t>());
      gens.push_back(std::move(p));
    }
    return ttg::PermGroup(degree, gens);
  }
  return ttg::catalog(spec);
}

std::vector<long> parse_primes(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw ttg::InputError("bad prime list entry '" + item + "'");
    }
  }
  return out;
}

int run_space_check(const std::string& file, const std::string& predicate) {
  ttg::SpectralMapData m = ttg::map_from_json(read_json_file(file));
  bool result = false;
  std::optional<std::string> witness;
  if (predicate == "quotient" || predicate == "spectral-quotient") {
    witness = ttg::topological_quotient_violation(m);
    result = !witness.has_value();
  } else if (predicate == "weak") {
    witness = ttg::weak_spectral_quotient_violation(m);
    result = !witness.has_value();
  } else if (predicate == "heritable-weak") {
    witness = ttg::heritable_weak_violation(m);
    result = !witness.has_value();
  } else if (predicate == "strong-topological") {
    witness = ttg::strong_topological_violation(m);
    result = !witness.has_value();
  } else if (predicate == "weak-lifting") {
    witness = ttg::weak_lifting_violation(m);
    result = !witness.has_value();
  } else if (predicate == "connected-fibers") {
    witness = ttg::disconnected_fiber(m);
    result = !witness.has_value();
  } else {
    throw ttg::InputError("unknown predicate '" + predicate + "'");
  }
  json verdict{{"predicate", predicate}, {"result", result}};
  verdict["witness"] = witness ? json(*witness) : json(nullptr);
  std::cout << ttg::dump_json(verdict);
  return result ? 0 : kExitFalse;
}

int run_emit(const std::string& subject, const std::string& group_spec,
             const std::string& primes_csv, long prime, long height,
             const std::string& format, const std::string& out_path) {
  auto primes_for = [&](const ttg::SubgroupLattice& lat) {
    std::vector<long> primes = parse_primes(primes_csv);
    if (primes.empty()) primes = ttg::default_primes(lat);
    return primes;
  };
  auto finish_space = [&](const ttg::FiniteSpectralSpace& space, json annotations,
                          const std::string& name) {
    if (format == "dot")
      write_output(ttg::space_to_dot(space, name), out_path);
    else
      write_output(ttg::dump_json(ttg::space_to_json(space, std::move(annotations))), out_path);
  };
  auto finish_map = [&](const ttg::SpectralMapData& m, json annotations,
                        const std::string& name) {
    if (format == "dot")
      write_output(ttg::map_to_dot(m, name), out_path);
    else
      write_output(ttg::dump_json(ttg::map_to_json(m, std::move(annotations))), out_path);
  };

  if (subject == "burnside-spec") {
    ttg::SubgroupLattice lat(load_group(group_spec));
    auto spec = ttg::spec_burnside(lat, primes_for(lat));
    json members = json::object();
    for (std::size_t pt = 0; pt < spec.space.size(); ++pt) {
      json list = json::array();
      for (const auto& q : spec.members[pt]) list.push_back(ttg::burnside_label(lat, q));
      members[spec.space.id(pt)] = std::move(list);
    }
    finish_space(spec.space, json{{"members", std::move(members)}}, "burnside-spec");
    return 0;
  }
  if (subject == "dhz-spec") {
    ttg::SubgroupLattice lat(load_group(group_spec));
    auto spec = ttg::spc_dhzg(lat, primes_for(lat));
    finish_space(spec.space, json::object(), "dhz-spec");
    return 0;
  }
  if (subject == "dhz-comparison") {
    ttg::SubgroupLattice lat(load_group(group_spec));
    auto cmp = ttg::dhzg_comparison(lat, primes_for(lat));
    finish_map(cmp.map, json::object(), "dhz-comparison");
    return 0;
  }
  if (subject == "shg-cp" || subject == "shg-cp-unitation") {
    std::vector<long> primes = parse_primes(primes_csv);
    if (primes.empty()) primes = {prime};
    if (subject == "shg-cp") {
      auto spec = ttg::spc_shg_cp(prime, primes, height);
      finish_space(spec.space, json::object(), "shg-cp");
    } else {
      auto uni = ttg::unitation_shg_cp(prime, primes, height);
      finish_map(uni.map, json::object(), "shg-cp-unitation");
    }
    return 0;
  }
  if (subject == "infinity-gluing") {
    ttg::SubgroupLattice lat(load_group(group_spec));
    auto primes = primes_for(lat);
    if (primes.empty()) primes = {2};
    auto gluing = ttg::shg_infinity_gluing(lat, primes);
    if (format == "dot") throw ttg::InputError("infinity-gluing has no dot form");
    json blocks = json::array();
    for (const auto& block : gluing.blocks) {
      json b = json::array();
      for (auto [cl, p] : block)
        b.push_back("P(" + lat.class_label(cl) + "," + std::to_string(p) + ",inf)");
      blocks.push_back(std::move(b));
    }
    write_output(ttg::dump_json(json{{"blocks", std::move(blocks)}}), out_path);
    return 0;
  }
  if (subject == "fixtures") {
    if (format == "dot") throw ttg::InputError("fixtures are emitted as JSON files");
    if (out_path.empty())
      throw ttg::InputError("emit fixtures requires --out <directory>");
    std::filesystem::create_directories(out_path);
    auto fx = ttg::fixtures();
    auto write_one = [&](const std::string& name, const json& j) {
      write_output(ttg::dump_json(j), (std::filesystem::path(out_path) / name).string());
    };
    write_one("vee_over_chain.json", ttg::map_to_json(fx.vee_over_chain));
    write_one("vee_over_chain_corestriction.json",
              ttg::map_to_json(fx.vee_over_chain_corestriction));
    write_one("three_point_scheme.json", ttg::map_to_json(fx.three_point_affinization));
    return 0;
  }
  throw ttg::InputError("unknown emit subject '" + subject + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite spectral spaces, quotient predicates, and computed Balmer spectra"};
  app.require_subcommand(1);

  // --- space ---------------------------------------------------------------
  auto* space_cmd = app.add_subcommand("space", "operations on space/map files");
  auto* space_check = space_cmd->add_subcommand("check", "evaluate a predicate on a map file");
  std::string check_file, check_predicate;
  space_check->add_option("file", check_file, "map JSON file")->required();
  space_check
      ->add_option("--predicate", check_predicate,
                   "quotient|spectral-quotient|weak|heritable-weak|strong-topological|"
                   "weak-lifting|connected-fibers")
      ->required();
  space_cmd->require_subcommand(1);

  // --- group ---------------------------------------------------------------
  auto* group_cmd = app.add_subcommand("group", "inspect a catalog or JSON group");
  auto* group_info = group_cmd->add_subcommand("info", "subgroup classes and o_p data");
  std::string group_name;
  group_info->add_option("--group", group_name, "catalog name or JSON file")->required();
  group_cmd->require_subcommand(1);

  // --- burnside ------------------------------------------------------------
  auto* burnside_cmd = app.add_subcommand("burnside", "Burnside ring computations");
  auto* burnside_marks = burnside_cmd->add_subcommand("marks", "table of marks");
  std::string bm_group;
  burnside_marks->add_option("--group", bm_group)->required();
  auto* burnside_spec_cmd = burnside_cmd->add_subcommand("spec", "Spec(A(G)) as a space");
  std::string bs_group, bs_primes, bs_format, bs_out;
  burnside_spec_cmd->add_option("--group", bs_group)->required();
  burnside_spec_cmd->add_option("--primes", bs_primes, "comma separated; default p | |G|");
  burnside_spec_cmd->add_option("--format", bs_format)->default_val("json");
  burnside_spec_cmd->add_option("--out", bs_out);
  burnside_cmd->require_subcommand(1);

  // --- dhz -----------------------------------------------------------------
  auto* dhz_cmd = app.add_subcommand("dhz", "derived Mackey functor spectra");
  std::string dhz_sub, dhz_group, dhz_primes, dhz_format, dhz_out;
  auto* dhz_spec_cmd = dhz_cmd->add_subcommand("spec", "Spc of compact derived Mackey functors");
  dhz_spec_cmd->add_option("--group", dhz_group)->required();
  dhz_spec_cmd->add_option("--primes", dhz_primes);
  dhz_spec_cmd->add_option("--format", dhz_format)->default_val("json");
  dhz_spec_cmd->add_option("--out", dhz_out);
  auto* dhz_cmp_cmd = dhz_cmd->add_subcommand("comparison", "unitation map to Spec(A(G))");
  dhz_cmp_cmd->add_option("--group", dhz_group)->required();
  dhz_cmp_cmd->add_option("--primes", dhz_primes);
  dhz_cmp_cmd->add_option("--format", dhz_format)->default_val("json");
  dhz_cmp_cmd->add_option("--out", dhz_out);
  dhz_cmd->require_subcommand(1);

  // --- shg -----------------------------------------------------------------
  auto* shg_cmd = app.add_subcommand("shg", "truncated equivariant stable homotopy");
  std::string shg_group, shg_primes, shg_format, shg_out;
  long shg_prime = 2, shg_height = 4;
  auto* shg_cp_cmd = shg_cmd->add_subcommand("cp", "truncated Spc(SH_{C_p}^c)");
  shg_cp_cmd->add_option("--prime", shg_prime)->default_val(2);
  shg_cp_cmd->add_option("--primes", shg_primes);
  shg_cp_cmd->add_option("--height", shg_height)->default_val(4);
  shg_cp_cmd->add_option("--format", shg_format)->default_val("json");
  shg_cp_cmd->add_option("--out", shg_out);
  auto* shg_uni_cmd = shg_cmd->add_subcommand("unitation", "its unitation quotient");
  shg_uni_cmd->add_option("--prime", shg_prime)->default_val(2);
  shg_uni_cmd->add_option("--primes", shg_primes);
  shg_uni_cmd->add_option("--height", shg_height)->default_val(4);
  shg_uni_cmd->add_option("--format", shg_format)->default_val("json");
  shg_uni_cmd->add_option("--out", shg_out);
  auto* shg_glue_cmd = shg_cmd->add_subcommand("gluing", "height-infinity gluing for G");
  shg_glue_cmd->add_option("--group", shg_group)->required();
  shg_glue_cmd->add_option("--primes", shg_primes);
  shg_glue_cmd->add_option("--out", shg_out);
  shg_cmd->require_subcommand(1);

  // --- verify --------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  ttg::VerifyOptions vopt;
  std::vector<std::string> verify_groups;
  verify_cmd->add_option("suite", suite, "section2|burnside|dhz|shg-cp|all")->required();
  verify_cmd->add_option("--seed", vopt.seed)->default_val(0);
  verify_cmd->add_option("--jobs", vopt.jobs)->default_val(1);
  verify_cmd->add_option("--max-domain", vopt.max_domain)->default_val(5);
  verify_cmd->add_option("--max-codomain", vopt.max_codomain)->default_val(4);
  verify_cmd->add_option("--group", verify_groups, "restrict group suites");
  verify_cmd->add_option("--prime", vopt.prime)->default_val(2);
  verify_cmd->add_option("--height", vopt.height)->default_val(4);

  // --- emit ----------------------------------------------------------------
  auto* emit_cmd = app.add_subcommand("emit", "emit spaces, maps and fixtures");
  std::string emit_subject, emit_group, emit_primes, emit_format = "json", emit_out;
  long emit_prime = 2, emit_height = 4;
  emit_cmd
      ->add_option("subject", emit_subject,
                   "burnside-spec|dhz-spec|dhz-comparison|shg-cp|shg-cp-unitation|"
                   "infinity-gluing|fixtures")
      ->required();
  emit_cmd->add_option("--group", emit_group);
  emit_cmd->add_option("--primes", emit_primes);
  emit_cmd->add_option("--prime", emit_prime)->default_val(2);
  emit_cmd->add_option("--height", emit_height)->default_val(4);
  emit_cmd->add_option("--format", emit_format)->default_val("json");
  emit_cmd->add_option("--out", emit_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (space_check->parsed()) return run_space_check(check_file, check_predicate);

    if (group_info->parsed()) {
      ttg::SubgroupLattice lat(load_group(group_name));
      json classes = json::array();
      for (std::size_t c = 0; c < lat.class_count(); ++c) {
        json entry{{"label", lat.class_label(c)},
                   {"order", lat.class_order(c)},
                   {"class_size", lat.class_members(c).size()},
                   {"normal", lat.class_members(c).size() == 1}};
        json op = json::object();
        for (long p : ttg::primes_dividing(lat.group().order()))
          op[std::to_string(p)] = lat.class_label(lat.o_p_class(c, p));
        entry["o_p"] = std::move(op);
        classes.push_back(std::move(entry));
      }
      std::cout << ttg::dump_json(json{{"order", lat.group().order()},
                                       {"degree", lat.group().degree()},
                                       {"subgroups", lat.subgroup_count()},
                                       {"classes", std::move(classes)}});
      return 0;
    }

    if (burnside_marks->parsed()) {
      ttg::SubgroupLattice lat(load_group(bm_group));
      auto marks = ttg::table_of_marks(lat);
      json rows = json::array();
      for (const auto& row : marks.m) rows.push_back(row);
      std::cout << ttg::dump_json(
          json{{"classes", marks.class_labels}, {"marks", std::move(rows)}});
      return 0;
    }
    if (burnside_spec_cmd->parsed())
      return run_emit("burnside-spec", bs_group, bs_primes, 0, 0, bs_format, bs_out);

    if (dhz_spec_cmd->parsed())
      return run_emit("dhz-spec", dhz_group, dhz_primes, 0, 0, dhz_format, dhz_out);
    if (dhz_cmp_cmd->parsed())
      return run_emit("dhz-comparison", dhz_group, dhz_primes, 0, 0, dhz_format, dhz_out);

    if (shg_cp_cmd->parsed())
      return run_emit("shg-cp", "", shg_primes, shg_prime, shg_height, shg_format, shg_out);
    if (shg_uni_cmd->parsed())
      return run_emit("shg-cp-unitation", "", shg_primes, shg_prime, shg_height,
                      shg_format, shg_out);
    if (shg_glue_cmd->parsed())
      return run_emit("infinity-gluing", shg_group, shg_primes, 0, 0, "json", shg_out);

    if (verify_cmd->parsed()) {
      vopt.groups = verify_groups;
      ttg::VerifyReport report = ttg::verify_suite(suite, vopt);
      std::cout << ttg::dump_json(ttg::report_to_json(report));
      std::cerr << "suite " << report.suite << ": " << report.instances
                << " instances, " << report.failures.size() << " failures, "
                << report.wall_seconds << "s\n";
      return report.ok() ? 0 : kExitFalse;
    }

    if (emit_cmd->parsed())
      return run_emit(emit_subject, emit_group, emit_primes, emit_prime, emit_height,
                      emit_format, emit_out);
  } catch (const ttg::SelfCheckError& e) {
    std::cerr << "internal self-check failed: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
