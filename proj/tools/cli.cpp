#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tinter/acceptance.hpp"
#include "tinter/bounds.hpp"
#include "tinter/family_io.hpp"
#include "tinter/kneser.hpp"
#include "tinter/report.hpp"
#include "tinter/search.hpp"
#include "tinter/shifting.hpp"
#include "tinter/verify.hpp"

namespace tinter::cli {

namespace {

using Json = nlohmann::ordered_json;

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
  if (const char* v = std::getenv(name)) {
    try {
      return std::stoull(v);
    } catch (const std::exception&) {
      throw InvalidParameters(std::string("environment variable ") + name + " is not a number");
    }
  }
  return fallback;
}

struct RunConfig {
  std::string sizes;
  std::string k;
  std::string profiles;
  std::string h3_a;
  int t = 0;
  bool shifted = false;
  std::string format = "json";
  std::uint64_t enum_cap = kDefaultEnumerationCap;
  std::uint64_t search_cap = 50'000;
  std::uint64_t node_limit = 0;
  unsigned workers = 1;
  std::string witness;
  std::string in;
  std::string out;
  std::string family_b;
  std::string space;
  std::string mode;
  std::string center;
  int part = 0;
  bool all_parts = false;
  int r = 0;
  int s = 0;
  std::string profile_a;
  std::string profile_b;
  int i = 0;
  int j = 0;
  std::string params;
  std::vector<int> only;

  std::vector<int> ground_sizes() const {
    if (sizes.empty()) throw InvalidParameters("--n is required");
    return parse_int_list(sizes);
  }
  SearchOptions search_options() const {
    SearchOptions o;
    o.vertex_cap = search_cap;
    o.node_limit = node_limit;
    o.workers = workers;
    return o;
  }
};

ProfileSet parse_profiles(const std::string& text) {
  std::vector<Profile> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(Profile{parse_int_list(item)});
  return ProfileSet(std::move(out));
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "table")
    out << json_as_table(j);
  else
    out << j.dump() << '\n';
}

std::optional<std::string> write_witness(const RunConfig& cfg, const Family& witness) {
  if (cfg.witness.empty()) return std::nullopt;
  write_family_file(cfg.witness, witness);
  return cfg.witness;
}

// ---------------------------------------------------------------- bound

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  const PartitionedGroundSet ground(cfg.ground_sizes());
  if (!cfg.profiles.empty()) {
    const ProfileSet rs = parse_profiles(cfg.profiles);
    if (rs.parts() != ground.parts()) throw InvalidParameters("profile length does not match --n");
    auto rep = t2_bound(cfg.t, ground, rs);
    Json j = bound_json(rep);
    j["t_le_c"] = cfg.t <= rs.c();
    j["K"] = [&]() -> Json {
      try {
        return compute_K(ground, rs).elements();
      } catch (const InvalidParameters&) {
        return nullptr;
      }
    }();
    emit(out, j, cfg.format);
    return kOk;
  }
  if (cfg.k.empty()) throw InvalidParameters("--k or --profiles is required");
  const Profile k{parse_int_list(cfg.k)};
  if (k.size() != ground.parts()) throw InvalidParameters("--k has a different length from --n");
  BoundReport rep;
  rep.optimal_distributions = algorithm1(cfg.t, ground, k);
  rep.value = star_size(ground, k, rep.optimal_distributions.front());
  rep.hypotheses = theorem_hypotheses(cfg.t, ground, k);
  Json j = bound_json(rep);
  const auto fb = frankl_bound(ground, k);
  j["ratio_bound"] = {{"ratio", to_decimal(fb.ratio)}, {"absolute", to_decimal(fb.absolute)},
                      {"block_size", to_decimal(block_size(ground, k))}};
  emit(out, j, cfg.format);
  return kOk;
}

// ---------------------------------------------------------------- search

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  const PartitionedGroundSet ground(cfg.ground_sizes());
  const auto opts = cfg.search_options();
  if (!cfg.h3_a.empty()) {
    const auto kk = parse_int_list(cfg.k);
    if (kk.size() != 1) throw InvalidParameters("with --h3-a, --k is the single total size k");
    const auto a = parse_int_list(cfg.h3_a);
    const auto rep = check_conjecture_h3(ground, kk.front(), a, opts);
    emit(out, conjecture_json(rep, write_witness(cfg, rep.search.witness)), cfg.format);
    return kOk;
  }
  if (!cfg.profiles.empty()) {
    const ProfileSet rs = parse_profiles(cfg.profiles);
    const Family space = enumerate_h2(ground, rs, cfg.enum_cap);
    const auto res = cfg.shifted ? shifted_search(space, cfg.t, opts) : max_t_intersecting(space, cfg.t, opts);
    Json j = search_json(res, write_witness(cfg, res.witness));
    const auto bound = t2_bound(cfg.t, ground, rs);
    j["bound"] = to_decimal(bound.value);
    j["hypotheses"] = hypotheses_json(bound.hypotheses);
    emit(out, j, cfg.format);
    return kOk;
  }
  const Profile k{parse_int_list(cfg.k)};
  if (k.size() != ground.parts()) throw InvalidParameters("--k has a different length from --n");
  if (cfg.shifted) {
    const Family space = enumerate_block(ground, k, cfg.enum_cap);
    const auto res = shifted_search(space, cfg.t, opts);
    Json j = search_json(res, write_witness(cfg, res.witness));
    if (cfg.t <= k.total()) {
      j["g"] = to_decimal(g_value(cfg.t, ground, k));
      j["hypotheses"] = hypotheses_json(theorem_hypotheses(cfg.t, ground, k));
    }
    emit(out, j, cfg.format);
    return kOk;
  }
  const auto rep = check_theorem_t1(ground, k, cfg.t, opts);
  emit(out, theorem_json(rep, write_witness(cfg, rep.search.witness)), cfg.format);
  return kOk;
}

// ---------------------------------------------------------------- shift

int cmd_shift(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Family fam = read_family_file(cfg.in);
  if (cfg.all_parts == (cfg.part != 0)) throw InvalidParameters("give exactly one of --part or --all");
  const auto res = cfg.all_parts ? full_shift_closure(fam) : l_shift_closure(fam, cfg.part - 1);
  if (cfg.out.empty()) {
    write_family(out, res.family);
    err << "steps: " << res.steps << '\n';
  } else {
    write_family_file(cfg.out, res.family);
    out << "steps: " << res.steps << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Family fam = read_family_file(cfg.in);
  auto verdict = [&](bool holds, Json extra = Json::object()) {
    Json j{{"mode", cfg.mode}, {"holds", holds}};
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    emit(out, j, cfg.format);
    return holds ? kOk : kPropertyFails;
  };
  auto second = [&] {
    if (cfg.family_b.empty()) throw InvalidParameters("--family-b is required for this mode");
    return read_family_file(cfg.family_b);
  };
  try {
    if (cfg.mode == "t-intersecting") return verdict(is_t_intersecting(fam, cfg.t));
    if (cfg.mode == "cross") return verdict(are_cross_t_intersecting(fam, second(), cfg.t));
    if (cfg.mode == "star") {
      std::optional<Family> space;
      if (!cfg.space.empty())
        space = read_family_file(cfg.space);
      else if (!cfg.profiles.empty())
        space = enumerate_h2(fam.ground(), parse_profiles(cfg.profiles), cfg.enum_cap);
      else
        throw InvalidParameters("star mode needs --space or --profiles");
      for (const auto& f : fam)
        if (!space->contains(f)) throw PreconditionViolation("family is not inside the space");
      const auto c = is_full_t_star(fam, *space, cfg.t);
      return verdict(c.has_value(), c ? Json{{"center", c->elements()}} : Json::object());
    }
    if (cfg.mode == "lemma21ii") return verdict(check_lemma_21ii(fam, second(), cfg.t, cfg.r, cfg.s));
    if (cfg.mode == "lemma22") {
      if (cfg.profile_a.empty() || cfg.profile_b.empty())
        throw InvalidParameters("lemma22 needs --profile-a and --profile-b");
      return verdict(check_lemma_22(fam, second(), cfg.t, Profile{parse_int_list(cfg.profile_a)},
                                    Profile{parse_int_list(cfg.profile_b)}));
    }
    if (cfg.mode == "lemma24") {
      if (cfg.profiles.empty()) throw InvalidParameters("lemma24 needs --profiles");
      const ProfileSet rs = parse_profiles(cfg.profiles);
      const Family space = cfg.space.empty() ? enumerate_h2(fam.ground(), rs, cfg.enum_cap) : read_family_file(cfg.space);
      const auto rep = check_lemma_24(fam, space, rs, cfg.t, cfg.i, cfg.j);
      return verdict(rep.holds, Json{{"hypothesis", rep.hypothesis},
                                     {"shifted_is_star", rep.shifted_is_star},
                                     {"original_is_star", rep.original_is_star}});
    }
  } catch (const PreconditionViolation& e) {
    Json j{{"mode", cfg.mode}, {"hypothesis_violated", e.what()}};
    emit(out, j, cfg.format);
    return kInputError;
  } catch (const EmptyFamily& e) {
    Json j{{"mode", cfg.mode}, {"hypothesis_violated", e.what()}};
    emit(out, j, cfg.format);
    return kInputError;
  }
  throw InvalidParameters("unknown verify mode '" + cfg.mode + "'");
}

// ---------------------------------------------------------------- kneser

int cmd_kneser(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::pair<int, int>> pairs;
  std::stringstream ss(cfg.params);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidParameters("--params entries look like g:h");
    const auto g = parse_int_list(item.substr(0, colon));
    const auto h = parse_int_list(item.substr(colon + 1));
    if (g.size() != 1 || h.size() != 1) throw InvalidParameters("--params entries look like g:h");
    pairs.emplace_back(g.front(), h.front());
  }
  const KneserParams params(pairs);
  Json j{{"connected", is_connected(params, cfg.search_cap > 100'000 ? cfg.search_cap : 100'000)},
         {"vertices", to_decimal(params.vertex_count())},
         {"g_gt_2h", params.strict()}};
  emit(out, j, cfg.format);
  return kOk;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const PartitionedGroundSet ground(cfg.ground_sizes());
  std::optional<Family> fam;
  if (!cfg.h3_a.empty()) {
    const auto kk = parse_int_list(cfg.k);
    if (kk.size() != 1) throw InvalidParameters("with --h3-a, --k is the single total size k");
    fam = enumerate_h3(ground, kk.front(), parse_int_list(cfg.h3_a), cfg.enum_cap);
  } else if (!cfg.profiles.empty()) {
    fam = enumerate_h2(ground, parse_profiles(cfg.profiles), cfg.enum_cap);
  } else {
    fam = enumerate_block(ground, Profile{parse_int_list(cfg.k)}, cfg.enum_cap);
  }
  if (!cfg.center.empty()) {
    const auto c = parse_int_list(cfg.center);
    fam = trivial_star(*fam, Subset(std::span<const int>(c)));
  }
  if (cfg.out.empty()) {
    write_family(out, *fam);
  } else {
    write_family_file(cfg.out, *fam);
    out << Json{{"size", std::to_string(fam->size())}, {"file", cfg.out}}.dump() << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- repro

int cmd_repro(const RunConfig& cfg, std::ostream& out) {
  const auto results = run_acceptance(out, cfg.only);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() ? kOk : kPropertyFails;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact computations for t-intersecting families in direct products"};
  app.require_subcommand(1);

  try {
    cfg.enum_cap = env_cap("TINTER_ENUM_CAP", cfg.enum_cap);
    cfg.search_cap = env_cap("TINTER_SEARCH_CAP", cfg.search_cap);
  } catch (const InvalidParameters& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--cap", cfg.enum_cap, "enumeration cap (members)");
  };
  auto add_space = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.sizes, "part sizes, e.g. 8,10");
    sub->add_option("--k", cfg.k, "block profile, e.g. 4,4 (single total k with --h3-a)");
    sub->add_option("--profiles", cfg.profiles, "H2 profile set, e.g. \"2,2;3,2\"");
  };

  auto* bound = app.add_subcommand("bound", "closed-form bounds and optimal t-distributions");
  add_space(bound);
  bound->add_option("--t", cfg.t, "intersection size")->required();
  add_common(bound);

  auto* search = app.add_subcommand("search", "exact maximum t-intersecting subfamily");
  add_space(search);
  search->add_option("--t", cfg.t, "intersection size");
  search->add_flag("--shifted", cfg.shifted, "search only families shifted in every part");
  search->add_option("--h3-a", cfg.h3_a, "lower bounds a_i; searches H3 with t = 1");
  search->add_option("--witness", cfg.witness, "write the witness family to this file");
  search->add_option("--search-cap", cfg.search_cap, "maximum number of vertices");
  search->add_option("--node-limit", cfg.node_limit, "stop after this many branch nodes (0 = none)");
  search->add_option("--workers", cfg.workers, "parallel workers")->check(CLI::PositiveNumber);
  add_common(search);

  auto* shift = app.add_subcommand("shift", "shift a family to a fixed point");
  shift->add_option("--in", cfg.in, "family file")->required();
  shift->add_option("--part", cfg.part, "1-based part index");
  shift->add_flag("--all", cfg.all_parts, "shift every part");
  shift->add_option("--out", cfg.out, "output family file");

  auto* verify = app.add_subcommand("verify", "check intersection properties and lemma inequalities");
  verify->add_option("--mode", cfg.mode, "t-intersecting|cross|star|lemma21ii|lemma22|lemma24")
      ->required()
      ->check(CLI::IsMember({"t-intersecting", "cross", "star", "lemma21ii", "lemma22", "lemma24"}));
  verify->add_option("--in", cfg.in, "family file")->required();
  verify->add_option("--family-b", cfg.family_b, "second family file (cross, lemma21ii, lemma22)");
  verify->add_option("--space", cfg.space, "ambient space family file (star, lemma24)");
  verify->add_option("--profiles", cfg.profiles, "H2 profile set (star, lemma24)");
  verify->add_option("--t", cfg.t, "intersection size")->required();
  verify->add_option("--r", cfg.r, "member size of the first family (lemma21ii)");
  verify->add_option("--s", cfg.s, "member size of the second family (lemma21ii)");
  verify->add_option("--profile-a", cfg.profile_a, "member profile of the first family (lemma22)");
  verify->add_option("--profile-b", cfg.profile_b, "member profile of the second family (lemma22)");
  verify->add_option("--i", cfg.i, "compression target element (lemma24)");
  verify->add_option("--j", cfg.j, "compression source element (lemma24)");
  add_common(verify);

  auto* kneser = app.add_subcommand("kneser", "connectivity of a direct product of Kneser graphs");
  kneser->add_option("--params", cfg.params, "factors g:h, e.g. 5:2,7:3")->required();
  add_common(kneser);

  auto* enumerate = app.add_subcommand("enumerate", "write a block, H2 or H3 family (optionally a star in it)");
  add_space(enumerate);
  enumerate->add_option("--h3-a", cfg.h3_a, "lower bounds a_i for H3");
  enumerate->add_option("--center", cfg.center, "keep only members containing this set");
  enumerate->add_option("--out", cfg.out, "output family file");
  enumerate->add_option("--cap", cfg.enum_cap, "enumeration cap (members)");

  auto* repro = app.add_subcommand("repro", "run the acceptance battery");
  repro->add_option("--only", cfg.only, "criterion ids to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*bound) return cmd_bound(cfg, out);
    if (*search) return cmd_search(cfg, out);
    if (*shift) return cmd_shift(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out);
    if (*kneser) return cmd_kneser(cfg, out);
    if (*enumerate) return cmd_enumerate(cfg, out);
    if (*repro) return cmd_repro(cfg, out);
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace tinter::cli
