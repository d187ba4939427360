// invtopos: finite inverse semigroup actions, functors on L(S), and their
// equivalences, exercised by brute force at desk scale.
//
// JSON reports go to stdout; human summaries and timing go to stderr.
// Exit codes: 0 ok, 1 check failed, 2 input error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invtopos/cosets_filters.hpp"
#include "invtopos/finite_bundles.hpp"
#include "invtopos/fixtures.hpp"
#include "invtopos/json_io.hpp"
#include "invtopos/phi_psi.hpp"
#include "invtopos/presheaf_tensor.hpp"
#include "invtopos/random_gen.hpp"
#include "invtopos/suite.hpp"

namespace fs = std::filesystem;
using invtopos::io::json;
using namespace invtopos;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::uint64_t default_seed() {
  if (char const* env = std::getenv("INVTOPOS_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 7;
}

void emit(json const& report) { std::cout << report.dump(2) << std::endl; }

json witness_json(Witness const& w) {
  return json{{"code", w.code}, {"parts", w.parts}, {"detail", w.detail}};
}

json verdict_json(Verdict const& v) {
  json out{{"holds", v.value}};
  if (v.witness) {
    out["witness"] = witness_json(*v.witness);
  }
  return out;
}

json names_of(InverseSemigroup const& s, ElementSet const& xs) {
  json out = json::array();
  for (int x : xs) {
    out.push_back(s.name(x));
  }
  return out;
}

// The functor/presheaf formats may reference the semigroup positionally
// on the command line instead of carrying one.
json with_semigroup_ref(std::string const& path, std::string const& semigroup_path) {
  json j = io::load_file(path);
  if (!j.contains("semigroup") && !semigroup_path.empty()) {
    j["semigroup"] = fs::absolute(semigroup_path).string();
  }
  return j;
}

int cmd_validate(std::string const& file, bool skip_associativity) {
  json report{{"command", "validate"}, {"input", file}};
  try {
    json j = io::load_file(file);
    if (skip_associativity) {
      j["skip_associativity"] = true;
    }
    auto s = io::semigroup_from_json(j);
    report["ok"] = true;
    report["elements"] = s->size();
    report["idempotents"] = names_of(*s, s->idempotents());
    emit(report);
    std::cerr << "valid inverse semigroup with " << s->size() << " elements\n";
    return kExitOk;
  } catch (ValidationError const& err) {
    if (err.code() == "FileNotFound" || err.code() == "ParseError" ||
        err.code() == "BadFormat") {
      throw;
    }
    report["ok"] = false;
    report["error"] = witness_json(err.witness());
    emit(report);
    std::cerr << "invalid: " << err.what() << "\n";
    return kExitCheckFailed;
  }
}

int cmd_analyze(std::string const& file) {
  auto s = io::load_semigroup(file);
  json hasse = json::array();
  for (auto const& [a, b] : s->hasse_pairs()) {
    hasse.push_back(json::array({s->name(a), s->name(b)}));
  }
  json d_classes = json::array();
  for (auto const& cls : s->d_classes()) {
    d_classes.push_back(names_of(*s, cls));
  }
  json grid = json::array();
  for (int e : s->idempotents()) {
    for (int f : s->idempotents()) {
      auto h = s->h_class(e, f);
      if (!h.empty()) {
        grid.push_back(json{{"r", s->name(e)},
                            {"d", s->name(f)},
                            {"members", names_of(*s, h)}});
      }
    }
  }
  emit(json{{"command", "analyze"},
            {"input", file},
            {"elements", s->names()},
            {"idempotents", names_of(*s, s->idempotents())},
            {"hasse", std::move(hasse)},
            {"d_classes", std::move(d_classes)},
            {"h_classes", std::move(grid)}});
  std::cerr << "analyzed " << s->size() << " elements, "
            << s->idempotents().size() << " idempotents\n";
  return kExitOk;
}

int cmd_logan(std::string const& file, std::string const& dot_path) {
  auto s = io::load_semigroup(file);
  auto logan = build_logan(s);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) {
      fail({"FileNotWritable", {dot_path}, ""});
    }
    out << logan->dot();
  }
  emit(json{{"command", "logan"},
            {"input", file},
            {"objects", logan->object_count()},
            {"arrows", logan->arrow_count()}});
  std::cerr << "L(S): " << logan->object_count() << " objects, "
            << logan->arrow_count() << " arrows\n";
  return kExitOk;
}

int cmd_action_check(std::string const& file, std::vector<std::string> properties,
                     bool allow_non_effective) {
  json report{{"command", "action check"}, {"input", file}};
  json j = io::load_file(file);
  if (allow_non_effective) {
    j["allow_non_effective"] = true;
  }
  PartialAction a = [&]() -> PartialAction {
    try {
      return io::action_from_json(j, fs::path(file).parent_path().string());
    } catch (ValidationError const& err) {
      report["ok"] = false;
      report["error"] = witness_json(err.witness());
      emit(report);
      std::cerr << "invalid action: " << err.what() << "\n";
      std::exit(kExitCheckFailed);
    }
  }();
  report["ok"] = true;
  report["carrier"] = a.carrier_size();

  if (properties.empty()) {
    properties = {"strict", "connected", "transitive", "free", "torsor"};
  }
  json props = json::object();
  for (auto const& p : properties) {
    if (p == "strict") {
      props[p] = verdict_json(is_strict(a));
    } else if (p == "connected") {
      props[p] = verdict_json(is_connected(a));
    } else if (p == "transitive") {
      props[p] = verdict_json(is_transitive(a));
    } else if (p == "free") {
      props[p] = verdict_json(is_free(a));
    } else if (p == "torsor") {
      try {
        props[p] = json{{"holds", is_torsor(a)}};
      } catch (ValidationError const& err) {
        props[p] = json{{"error", witness_json(err.witness())}};
      }
    } else if (p == "universal") {
      try {
        props[p] = json{{"holds", is_universal(a)}};
      } catch (ValidationError const& err) {
        props[p] = json{{"error", witness_json(err.witness())}};
      }
    } else {
      fail({"UnknownProperty", {p},
            "expected strict,connected,transitive,free,torsor,universal"});
    }
  }
  report["properties"] = std::move(props);
  emit(report);
  std::cerr << "checked " << properties.size() << " properties\n";
  return kExitOk;
}

int cmd_functor_classify(std::string const& semigroup_file,
                         std::string const& functor_file) {
  auto f = io::functor_from_json(with_semigroup_ref(functor_file, semigroup_file),
                                 fs::path(functor_file).parent_path().string());
  auto tf = is_torsion_free(f);
  json report{{"command", "functor classify"},
              {"torsion_free", verdict_json(tf)},
              {"directed", verdict_json(is_directed(f))},
              {"filtered", verdict_json(is_filtered(f))}};
  if (tf.value) {
    report["pullback_preserving"] = json{{"holds", preserves_pullbacks(f)}};
  } else {
    report["pullback_preserving"] =
        json{{"error", witness_json({"NotTorsionFree", {}, ""})}};
  }
  emit(report);
  std::cerr << "classified functor over " << semigroup_file << "\n";
  return kExitOk;
}

int cmd_equiv_roundtrip(std::string const& semigroup_file, int random_count,
                        std::uint64_t seed) {
  auto sgp = io::load_semigroup(semigroup_file);
  std::vector<std::pair<std::string, PartialAction>> actions;
  for (auto const& h : enumerate_closed_subsemigroups(*sgp)) {
    actions.emplace_back("coset(" + element_set_label(*sgp, h) + ")",
                         coset_action(sgp, h));
  }
  std::mt19937_64 rng(seed);
  size_t const base_count = actions.size();
  int made = 0;
  for (int i = 0; made < random_count && i < random_count * 20; ++i) {
    auto const& base = actions[i % base_count].second;
    if (auto restricted = random_restriction(rng, base, 0.7)) {
      actions.emplace_back("random#" + std::to_string(made), *restricted);
      ++made;
    }
  }
  std::vector<std::pair<std::string, SetFunctor>> functors;
  auto logan = build_logan(sgp);
  functors.emplace_back("terminal", constant_singleton(logan));
  for (auto const& [name, a] : actions) {
    functors.emplace_back("phi(" + name + ")", phi(a, logan));
  }
  auto rt = verify_round_trips(actions, functors);
  json checks = json::array();
  for (auto const& check : rt.checks) {
    checks.push_back(json{{"name", check.name},
                          {"pass", check.pass},
                          {"detail", check.detail}});
  }
  emit(json{{"command", "equiv roundtrip"},
            {"seed", seed},
            {"instances", actions.size()},
            {"all_pass", rt.all_pass()},
            {"checks", std::move(checks)}});
  std::cerr << (rt.all_pass() ? "round trips hold" : "round trips FAILED")
            << " on " << actions.size() << " instances\n";
  return rt.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_equiv_psi(std::string const& functor_file, std::string const& semigroup_file) {
  auto f = io::functor_from_json(with_semigroup_ref(functor_file, semigroup_file),
                                 fs::path(functor_file).parent_path().string());
  emit(io::action_to_json(psi(f)));
  std::cerr << "psi computed\n";
  return kExitOk;
}

int cmd_equiv_phi(std::string const& action_file) {
  auto a = io::load_action(action_file);
  emit(io::functor_to_json(phi(a)));
  std::cerr << "phi computed\n";
  return kExitOk;
}

int cmd_cosets(std::string const& semigroup_file, std::string const& subsemigroup_file) {
  auto sgp = io::load_semigroup(semigroup_file);
  auto h = io::subset_from_json(*sgp, io::load_file(subsemigroup_file));
  if (!is_closed_inverse_subsemigroup(*sgp, h)) {
    fail({"NotClosedSubsemigroup", {element_set_label(*sgp, h)}, ""});
  }
  auto space = coset_space(*sgp, h);
  json cosets = json::array();
  for (size_t i = 0; i < space.cosets.size(); ++i) {
    cosets.push_back(json{{"members", names_of(*sgp, space.cosets[i])},
                          {"witness", sgp->name(space.witness[i])}});
  }
  emit(json{{"command", "cosets"},
            {"subsemigroup", names_of(*sgp, h)},
            {"cosets", std::move(cosets)},
            {"action", io::action_to_json(coset_action(sgp, h))}});
  std::cerr << space.cosets.size() << " cosets\n";
  return kExitOk;
}

int cmd_schein(std::string const& action_file) {
  auto a = io::load_action(action_file);
  auto dec = schein_decompose(a);
  json iso = json::object();
  for (int x = 0; x < a.carrier_size(); ++x) {
    iso[a.point_name(x)] = dec.cosets.point_name(dec.iso.map[x]);
  }
  emit(json{{"command", "schein"},
            {"stabilizer", names_of(a.sgp(), dec.h)},
            {"cosets", dec.cosets.carrier_size()},
            {"isomorphism", std::move(iso)}});
  std::cerr << "decomposed over a stabilizer with " << dec.h.size()
            << " elements\n";
  return kExitOk;
}

int cmd_filters(std::string const& semigroup_file, bool in_s, bool in_e) {
  auto sgp = io::load_semigroup(semigroup_file);
  json report{{"command", "filters"}};
  if (in_e || !in_s) {
    json filters = json::array();
    for (auto const& f : enumerate_filters_in_e(*sgp)) {
      filters.push_back(names_of(*sgp, f));
    }
    report["filters_in_e"] = std::move(filters);
  }
  if (in_s || !in_e) {
    auto data = filter_groupoid_data(*sgp);
    json filters = json::array();
    for (size_t i = 0; i < data.filters_in_s.size(); ++i) {
      filters.push_back(json{{"members", names_of(*sgp, data.filters_in_s[i])},
                             {"d", names_of(*sgp, data.d_of[i])}});
    }
    report["filters_in_s"] = std::move(filters);
    json m_sets = json::object();
    for (int s = 0; s < sgp->size(); ++s) {
      m_sets[sgp->name(s)] = data.m_sets[s];
    }
    report["m_sets"] = std::move(m_sets);
  }
  emit(report);
  std::cerr << "filters enumerated\n";
  return kExitOk;
}

int cmd_torsor_check(std::string const& semigroup_file) {
  auto sgp = io::load_semigroup(semigroup_file);
  auto report = torsor_equiv_universal(sgp);
  json entries = json::array();
  for (auto const& entry : report.entries) {
    entries.push_back(json{{"h", names_of(*sgp, entry.h)},
                           {"torsor", entry.torsor},
                           {"universal", entry.universal}});
  }
  emit(json{{"command", "torsor-check"},
            {"consistent", report.consistent()},
            {"entries", std::move(entries)}});
  std::cerr << (report.consistent() ? "torsor iff universal holds"
                                    : "MISMATCH between torsor and universal")
            << " over " << report.entries.size() << " closed subsemigroups\n";
  return report.consistent() ? kExitOk : kExitCheckFailed;
}

int cmd_tensor(std::string const& presheaf_file, std::string const& functor_file) {
  auto p = io::load_presheaf(presheaf_file);
  auto f = io::functor_from_json(with_semigroup_ref(functor_file, ""),
                                 fs::path(functor_file).parent_path().string());
  // Rebuild the functor over the presheaf's category so the two share it.
  auto f2 = SetFunctor::validate(p.logan_ptr(), f.object_sets(), f.arrow_maps());
  auto t = tensor(p, f2);
  json classes = json::array();
  for (int c = 0; c < t.size(); ++c) {
    json members = json::array();
    for (auto const& [obj, i, j] : t.classes[c]) {
      members.push_back(json{{"object", p.logan().cat().object_name(obj)},
                             {"p", p.elem_label(obj, i)},
                             {"a", f2.elem_label(obj, j)}});
    }
    classes.push_back(json{{"label", t.labels[c]}, {"members", std::move(members)}});
  }
  emit(json{{"command", "tensor"}, {"size", t.size()}, {"classes", std::move(classes)}});
  std::cerr << t.size() << " tensor classes\n";
  return kExitOk;
}

int cmd_flatness(std::string const& functor_file) {
  auto f = io::load_functor(functor_file);
  auto report = flatness_spotcheck(f);
  json items = json::array();
  for (auto const& item : report.items) {
    items.push_back(json{{"name", item.name},
                         {"holds", item.holds},
                         {"detail", item.detail}});
  }
  emit(json{{"command", "flatness-spotcheck"},
            {"filtered", report.filtered},
            {"all_preserved", report.all_preserved()},
            {"items", std::move(items)}});
  std::cerr << (report.filtered ? "filtered" : "not filtered") << "; "
            << (report.all_preserved() ? "all spot-checks preserved"
                                       : "preservation failures found")
            << "\n";
  return report.filtered && !report.all_preserved() ? kExitCheckFailed : kExitOk;
}

int cmd_bundle_check(std::string const& file) {
  json j = io::load_file(file);
  std::string const base = fs::path(file).parent_path().string();
  if (j.value("kind", "bundle") == "sheaf_action") {
    auto sa = io::sheaf_action_from_json(j, base);
    auto report = check_universal_sheaf_action(sa);
    json items = json::array();
    for (auto const& item : report.items) {
      items.push_back(json{{"axiom", item.axiom},
                           {"holds", item.holds},
                           {"detail", item.detail}});
    }
    emit(json{{"command", "bundle check"},
              {"kind", "sheaf_action"},
              {"ok", report.ok()},
              {"axioms", std::move(items)}});
    std::cerr << (report.ok() ? "universal sheaf action" : "axioms FAILED") << "\n";
    return report.ok() ? kExitOk : kExitCheckFailed;
  }
  auto b = io::bundle_from_json(j, base);
  auto principal = is_principal(b);
  emit(json{{"command", "bundle check"},
            {"kind", "bundle"},
            {"principal", verdict_json(principal)}});
  std::cerr << (principal.value ? "principal bundle" : "not principal") << "\n";
  return principal.value ? kExitOk : kExitCheckFailed;
}

int cmd_bundle_tau(std::string const& file) {
  auto b = io::load_bundle(file);
  emit(io::sheaf_action_to_json(tau(b)));
  std::cerr << "tau computed\n";
  return kExitOk;
}

int cmd_bundle_rho(std::string const& file) {
  auto sa = io::load_sheaf_action(file);
  emit(io::bundle_to_json(rho(sa)));
  std::cerr << "rho computed\n";
  return kExitOk;
}

int cmd_bundle_roundtrip(std::string const& dir) {
  std::vector<std::pair<std::string, Bundle>> bundles;
  std::vector<std::pair<std::string, SheafAction>> actions;
  std::vector<fs::path> files;
  for (auto const& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (auto const& path : files) {
    json j = io::load_file(path.string());
    std::string const base = path.parent_path().string();
    if (!j.contains("kind")) {
      continue;  // not a bundle document (e.g. a semigroup file)
    }
    if (j.at("kind") == "sheaf_action") {
      actions.emplace_back(path.filename().string(),
                           io::sheaf_action_from_json(j, base));
    } else {
      bundles.emplace_back(path.filename().string(), io::bundle_from_json(j, base));
    }
  }
  auto report = verify_bundle_equiv(bundles, actions);
  json checks = json::array();
  for (auto const& check : report.checks) {
    checks.push_back(json{{"name", check.name},
                          {"pass", check.pass},
                          {"detail", check.detail}});
  }
  emit(json{{"command", "bundle roundtrip"},
            {"bundles", bundles.size()},
            {"sheaf_actions", actions.size()},
            {"all_pass", report.all_pass()},
            {"checks", std::move(checks)}});
  std::cerr << (report.all_pass() ? "round trips hold" : "round trips FAILED")
            << "\n";
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

std::string action_semigroup_name(std::string const& action_name) {
  if (action_name == "ex33-action" || action_name == "sl3-point-action") return "SL3";
  if (action_name == "b2-natural-action") return "B2";
  if (action_name == "i2-natural-action") return "I2";
  if (action_name == "sl31-ex33") return "SL31";
  if (action_name == "d4-diag") return "D4";
  return "Z3";
}

int cmd_fixture(std::string const& name, std::string const& out_dir) {
  fs::create_directories(out_dir);
  auto const semigroups = fixtures::semigroup_names();
  auto const actions = fixtures::action_names();
  json written = json::array();

  auto write_semigroup = [&](std::string const& sname) {
    auto path = fs::path(out_dir) / (sname + ".json");
    io::write_file(path.string(),
                   io::semigroup_to_json(*fixtures::semigroup_by_name(sname)));
    written.push_back(path.string());
  };

  if (std::find(semigroups.begin(), semigroups.end(), name) != semigroups.end()) {
    write_semigroup(name);
  } else if (std::find(actions.begin(), actions.end(), name) != actions.end()) {
    auto const sname = action_semigroup_name(name);
    write_semigroup(sname);
    auto path = fs::path(out_dir) / (name + ".json");
    io::write_file(path.string(), io::action_to_json(fixtures::action_by_name(name),
                                                     sname + ".json"));
    written.push_back(path.string());
  } else {
    fail({"UnknownFixture", {name}, ""});
  }
  emit(json{{"command", "fixture"}, {"name", name}, {"written", std::move(written)}});
  std::cerr << "fixture " << name << " written to " << out_dir << "\n";
  return kExitOk;
}

int cmd_suite(std::uint64_t seed, bool fixtures_only, int random_instances) {
  auto const start = std::chrono::steady_clock::now();
  suite::Options options;
  options.seed = seed;
  options.fixtures_only = fixtures_only;
  options.random_instances = random_instances;
  auto report = suite::run(options);

  json criteria = json::array();
  for (auto const& criterion : report.criteria) {
    criteria.push_back(json{{"id", criterion.id},
                            {"name", criterion.name},
                            {"pass", criterion.pass},
                            {"checks", criterion.checks},
                            {"failures", criterion.failures}});
  }
  emit(json{{"command", "suite"},
            {"seed", seed},
            {"fixtures_only", fixtures_only},
            {"all_pass", report.all_pass()},
            {"criteria", std::move(criteria)}});

  auto const elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  for (auto const& criterion : report.criteria) {
    std::cerr << (criterion.pass ? "[PASS] " : "[FAIL] ") << criterion.id << ": "
              << criterion.name << " (" << criterion.checks << " checks)\n";
  }
  std::cerr << (report.all_pass() ? "all criteria passed" : "criteria FAILED")
            << " in " << elapsed.count() << " ms\n";
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite inverse semigroup actions vs functors on L(S)"};
  app.require_subcommand(1);

  std::string file, file2, dot_path, out_dir = ".", properties_csv, subsemigroup_file;
  std::uint64_t seed = default_seed();
  bool allow_non_effective = false, fixtures_only = false, in_s = false, in_e = false;
  int random_count = 120;

  bool skip_associativity = false;
  auto* validate = app.add_subcommand("validate", "validate a semigroup file");
  validate->add_option("file", file)->required();
  validate->add_flag("--skip-associativity", skip_associativity,
                     "bypass the O(n^3) check above the soft cap");

  auto* analyze = app.add_subcommand("analyze", "idempotents, order, D- and H-classes");
  analyze->add_option("file", file)->required();

  auto* logan = app.add_subcommand("logan", "build L(S) and report sizes");
  logan->add_option("file", file)->required();
  logan->add_option("--dot", dot_path, "write a DOT rendering");

  auto* action = app.add_subcommand("action", "actions");
  auto* action_check = action->add_subcommand("check", "validate and classify an action");
  action_check->add_option("file", file)->required();
  action_check->add_option(
      "--properties", properties_csv,
      "comma-separated: strict,connected,transitive,free,torsor,universal");
  action_check->add_flag("--allow-non-effective", allow_non_effective);

  auto* functor = app.add_subcommand("functor", "functors on L(S)");
  auto* classify = functor->add_subcommand("classify", "the four classification predicates");
  classify->add_option("semigroup", file)->required();
  classify->add_option("functor", file2)->required();

  auto* equiv = app.add_subcommand("equiv", "the action/functor equivalence");
  auto* roundtrip = equiv->add_subcommand("roundtrip", "verify round trips over a semigroup");
  roundtrip->add_option("semigroup", file)->required();
  roundtrip->add_option("--random", random_count);
  roundtrip->add_option("--seed", seed);
  auto* psi_cmd = equiv->add_subcommand("psi", "action induced by a torsion-free functor");
  psi_cmd->add_option("functor", file)->required();
  psi_cmd->add_option("--semigroup", file2,
                      "semigroup file if the functor has no reference");
  auto* phi_cmd = equiv->add_subcommand("phi", "functor of an action");
  phi_cmd->add_option("action", file)->required();

  auto* cosets = app.add_subcommand("cosets", "coset space and coset action");
  cosets->add_option("semigroup", file)->required();
  cosets->add_option("--subsemigroup", subsemigroup_file)->required();

  auto* schein = app.add_subcommand("schein", "decompose a strict transitive action");
  schein->add_option("action", file)->required();

  auto* filters = app.add_subcommand("filters", "filters in E(S) and in S");
  filters->add_option("semigroup", file)->required();
  filters->add_flag("--in-s", in_s);
  filters->add_flag("--in-e", in_e);

  auto* torsor = app.add_subcommand("torsor-check",
                                    "torsor iff universal, per closed subsemigroup");
  torsor->add_option("semigroup", file)->required();

  auto* tensor_cmd = app.add_subcommand("tensor", "tensor a presheaf with a functor");
  tensor_cmd->add_option("presheaf", file)->required();
  tensor_cmd->add_option("functor", file2)->required();

  auto* flatness = app.add_subcommand("flatness-spotcheck",
                                      "limit preservation spot-checks");
  flatness->add_option("functor", file)->required();

  auto* bundle = app.add_subcommand("bundle", "bundles over finite spaces");
  auto* bcheck = bundle->add_subcommand("check", "principality / universality axioms");
  bcheck->add_option("file", file)->required();
  auto* btau = bundle->add_subcommand("tau", "sheaf action of a principal bundle");
  btau->add_option("bundle", file)->required();
  auto* brho = bundle->add_subcommand("rho", "bundle of a universal sheaf action");
  brho->add_option("sheaf_action", file)->required();
  auto* bround = bundle->add_subcommand("roundtrip",
                                        "verify rho/tau round trips over a directory");
  bround->add_option("dir", file)->required();

  auto* fixture = app.add_subcommand("fixture", "write canonical fixture files");
  fixture->add_option("name", file)->required();
  fixture->add_option("--out", out_dir);

  auto* suite_cmd = app.add_subcommand("suite", "run every acceptance criterion");
  suite_cmd->add_option("--seed", seed);
  suite_cmd->add_option("--random", random_count);
  suite_cmd->add_flag("--fixtures-only", fixtures_only);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(file, skip_associativity);
    if (*analyze) return cmd_analyze(file);
    if (*logan) return cmd_logan(file, dot_path);
    if (*action_check) {
      std::vector<std::string> properties;
      std::stringstream ss(properties_csv);
      for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) {
          properties.push_back(item);
        }
      }
      return cmd_action_check(file, properties, allow_non_effective);
    }
    if (*classify) return cmd_functor_classify(file, file2);
    if (*roundtrip) return cmd_equiv_roundtrip(file, random_count, seed);
    if (*psi_cmd) return cmd_equiv_psi(file, file2);
    if (*phi_cmd) return cmd_equiv_phi(file);
    if (*cosets) return cmd_cosets(file, subsemigroup_file);
    if (*schein) return cmd_schein(file);
    if (*filters) return cmd_filters(file, in_s, in_e);
    if (*torsor) return cmd_torsor_check(file);
    if (*tensor_cmd) return cmd_tensor(file, file2);
    if (*flatness) return cmd_flatness(file);
    if (*bcheck) return cmd_bundle_check(file);
    if (*btau) return cmd_bundle_tau(file);
    if (*brho) return cmd_bundle_rho(file);
    if (*bround) return cmd_bundle_roundtrip(file);
    if (*fixture) return cmd_fixture(file, out_dir);
    if (*suite_cmd) return cmd_suite(seed, fixtures_only, random_count);
  } catch (ValidationError const& err) {
    std::cerr << "input error: " << err.what() << "\n";
    emit(json{{"ok", false}, {"error", witness_json(err.witness())}});
    return kExitInputError;
  } catch (std::exception const& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
