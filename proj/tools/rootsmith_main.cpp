// rootsmith: exact computations in crystallographic root systems.
//
// Exit codes: 0 affirmative/success, 1 negative verdict or check failure,
// 2 usage or validation error.

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rootsmith/json_io.hpp"
#include "rootsmith/quasicox.hpp"
#include "rootsmith/root_system.hpp"
#include "rootsmith/selftest.hpp"
#include "rootsmith/simple_systems.hpp"
#include "rootsmith/weyl.hpp"

namespace {

using rootsmith::CartanType;
using rootsmith::RootCoords;
using rootsmith::RootIndex;
using rootsmith::RootSystem;
using rootsmith::json_io::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t bfs_cap() {
  if (const char* env = std::getenv("ROOTSMITH_BFS_CAP")) {
    std::uint64_t cap = 0;
    const std::string s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec != std::errc{} || ptr != s.data() + s.size() || cap == 0)
      throw ValidationError("invalid ROOTSMITH_BFS_CAP value");
    return cap;
  }
  return rootsmith::weyl::kDefaultBfsCap;
}

// Roots are passed as semicolon-separated, comma-separated integer
// coordinate vectors in the simple-root basis, e.g. "1,0;1,2".
std::vector<RootCoords> parse_vectors(const std::string& text, int rank) {
  std::vector<RootCoords> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    RootCoords v;
    std::size_t p = 0;
    while (p <= item.size()) {
      std::size_t q = item.find(',', p);
      if (q == std::string::npos) q = item.size();
      std::string tok = item.substr(p, q - p);
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      rootsmith::Coord c = 0;
      const auto [ptr, ec] =
          std::from_chars(tok.data(), tok.data() + tok.size(), c);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ValidationError("cannot parse coordinate '" + tok + "'");
      v.push_back(c);
      p = q + 1;
      if (q == item.size()) break;
    }
    if (v.size() != static_cast<std::size_t>(rank))
      throw ValidationError("coordinate vector has length " +
                            std::to_string(v.size()) + ", expected " +
                            std::to_string(rank));
    out.push_back(std::move(v));
    start = end + 1;
    if (end == text.size()) break;
  }
  if (out.empty()) throw ValidationError("no coordinate vectors given");
  return out;
}

std::vector<RootIndex> to_root_indices(const RootSystem& rs,
                                       const std::vector<RootCoords>& vs) {
  std::vector<RootIndex> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    const auto idx = rs.root_index(v);
    if (!idx) {
      std::string msg = "not a root: [";
      for (std::size_t i = 0; i < v.size(); ++i)
        msg += (i ? "," : "") + std::to_string(v[i]);
      throw ValidationError(msg + "]");
    }
    out.push_back(*idx);
  }
  return out;
}

void emit(const Json& j, const std::string& output_path) {
  const std::string text = j.dump(2) + "\n";
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file " + output_path);
    out << text;
  }
}

Json selftest_json(const rootsmith::selftest::Summary& s) {
  Json j;
  j["rng"] = rootsmith::selftest::kRngAlgorithm;
  j["seed"] = s.seed;
  j["samples"] = s.samples;
  j["max_rank"] = s.max_rank;
  Json types = Json::array();
  for (const auto& t : s.types) {
    Json tj;
    tj["type"] = t.label;
    tj["checks"] = t.checks;
    tj["disagreements"] = t.disagreements;
    tj["max_obtusify_steps"] = t.max_obtusify_steps;
    if (!t.offenders.empty()) tj["offending"] = t.offenders;
    types.push_back(std::move(tj));
  }
  j["types"] = std::move(types);
  j["total_checks"] = s.total_checks;
  j["disagreements"] = s.disagreements;
  j["pass"] = s.pass;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact root-system and Weyl-group computations"};
  app.require_subcommand(1);

  bool json_output = true;
  bool with_oracle = false;
  std::uint64_t seed = 42;
  std::uint64_t samples = 100;
  std::uint64_t limit = 100000;
  std::string output_path;
  app.add_flag("--json", json_output, "Emit JSON (the default and only format)");
  app.add_flag("--oracle", with_oracle,
               "Also run the root-closure oracle where applicable");
  app.add_option("--seed", seed, "Seed for sampled subcommands");
  app.add_option("--samples", samples, "Sample count per type and size");
  app.add_option("--limit", limit, "Cap on enumerated items");
  app.add_option("--output", output_path, "Write JSON to a file instead of stdout");

  std::string type_label, roots_arg, delta_arg, beta_arg, r1_arg, rest_arg,
      t1_arg, dir_arg;
  std::size_t move_index = 1;
  int max_rank = 4;

  auto* cmd_build = app.add_subcommand("build", "Construct a root system and dump it");
  cmd_build->add_option("type", type_label, "Cartan type label, e.g. B2")->required();

  auto* cmd_gen = app.add_subcommand(
      "gen-test", "Test whether a set of reflections generates the Weyl group");
  cmd_gen->add_option("type", type_label)->required();
  cmd_gen->add_option("--roots", roots_arg, "Roots as 'c1,..,cn;c1,..,cn;..'")->required();

  auto* cmd_closure = app.add_subcommand(
      "closure", "Smallest root subsystem containing the given roots");
  cmd_closure->add_option("type", type_label)->required();
  cmd_closure->add_option("--roots", roots_arg)->required();

  auto* cmd_qc = app.add_subcommand(
      "qc-search", "Classify quasi-Coxeter and Coxeter elements of a type");
  cmd_qc->add_option("type", type_label)->required();

  auto* cmd_obt = app.add_subcommand(
      "obtusify", "Conjugate a completing root until it is obtuse to delta");
  cmd_obt->add_option("type", type_label)->required();
  cmd_obt->add_option("--delta", delta_arg, "n-1 roots spanning the parabolic")->required();
  cmd_obt->add_option("--beta", beta_arg, "Root to obtusify")->required();

  auto* cmd_comp = app.add_subcommand(
      "completions", "All positive roots completing delta to a generating set");
  cmd_comp->add_option("type", type_label)->required();
  cmd_comp->add_option("--delta", delta_arg)->required();

  auto* cmd_orbits = app.add_subcommand(
      "orbits", "Partition the completions of delta under conjugation");
  cmd_orbits->add_option("type", type_label)->required();
  cmd_orbits->add_option("--delta", delta_arg)->required();

  auto* cmd_conj = app.add_subcommand(
      "conjugator", "Find g in <rest> with g^-1 s_r1 g = s_t1");
  cmd_conj->add_option("type", type_label)->required();
  cmd_conj->add_option("--r1", r1_arg)->required();
  cmd_conj->add_option("--rest", rest_arg)->required();
  cmd_conj->add_option("--t1", t1_arg)->required();

  auto* cmd_hur = app.add_subcommand(
      "hurwitz", "Apply a braid move to a reflection factorization");
  cmd_hur->add_option("type", type_label)->required();
  cmd_hur->add_option("--roots", roots_arg)->required();
  cmd_hur->add_option("--index", move_index, "Move position, 1-based")->required();
  cmd_hur->add_option("--dir", dir_arg, "left or right")->required();

  auto* cmd_self = app.add_subcommand(
      "selftest", "Seeded criterion-vs-oracle cross validation");
  cmd_self->add_option("--max-rank", max_rank, "Largest rank to test");

  // Global flags may be given after the subcommand name.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_build) {
      const RootSystem rs = RootSystem::build(CartanType::parse(type_label));
      emit(rootsmith::json_io::root_system_json(rs), output_path);
      return kExitPass;
    }

    if (*cmd_gen) {
      const RootSystem rs = RootSystem::build(CartanType::parse(type_label));
      const auto indices =
          to_root_indices(rs, parse_vectors(roots_arg, rs.rank()));
      const rootsmith::weyl::RootSet r(indices.begin(), indices.end());
      const auto verdict =
          rootsmith::quasicox::generates_lattice_criterion(rs, r);
      Json j = rootsmith::json_io::verdict_json(verdict);
      if (with_oracle)
        j["oracle"] = rootsmith::weyl::generates_oracle(rs, r);
      emit(j, output_path);
      return verdict.generates ? kExitPass : kExitFail;
    }

    if (*cmd_closure) {
      const RootSystem rs = RootSystem::build(CartanType::parse(type_label));
      const auto indices =
          to_root_indices(rs, parse_vectors(roots_arg, rs.rank()));
      const auto closed = rootsmith::weyl::closure_subsystem(
          rs, rootsmith::weyl::RootSet(indices.begin(), indices.end()));
      Json j;
      j["roots"] = rootsmith::json_io::coords_list_json(
          rs, {closed.begin(), closed.end()});
      j["count"] = closed.size();
      j["is_full_system"] = closed.size() == rs.root_count();
      emit(j, output_path);
      return kExitPass;
    }

    if (*cmd_qc) {
      const RootSystem rs = RootSystem::build(CartanType::parse(type_label));
      std::vector<rootsmith::weyl::GroupElement> gens;
      for (int i = 0; i < rs.rank(); ++i)
        gens.push_back(rootsmith::weyl::reflection(rs, rs.simple_root(i)));
      const auto group = rootsmith::weyl::group_bfs(rs, gens, bfs_cap());
      if (!group) {
        Json j;
        j["error"] = "group exceeds the BFS cap";
        emit(j, output_path);
        return kExitFail;
      }
      std::uint64_t full_length = 0, quasi = 0, coxeter = 0;
      Json strict = Json::array();
      for (const auto& w : *group) {
        if (rootsmith::weyl::reflection_length(rs, w) != rs.rank()) continue;
        ++full_length;
        const bool qc = rootsmith::quasicox::is_quasi_coxeter(rs, w);
        const bool cox = rootsmith::quasicox::is_coxeter(rs, w);
        if (qc) ++quasi;
        if (cox) ++coxeter;
        if (qc && !cox && strict.size() < limit) {
          const auto fs = rootsmith::quasicox::reduced_factorizations(rs, w, 1);
          strict.push_back(
              rootsmith::json_io::factorization_json(rs, fs.front()));
        }
      }
      Json j;
      j["type"] = rs.type().label();
      j["group_order"] = group->size();
      j["full_reflection_length_elements"] = full_length;
      j["quasi_coxeter"] = quasi;
      j["coxeter"] = coxeter;
      j["strict_quasi_coxeter_examples"] = std::move(strict);
      emit(j, output_path);
      return kExitPass;
    }

    if (*cmd_obt) {
      const RootSystem rs = RootSystem::build(CartanType::parse(type_label));
      const auto delta =
          to_root_indices(rs, parse_vectors(delta_arg, rs.rank()));
      const auto beta =
          to_root_indices(rs, parse_vectors(beta_arg, rs.rank()));
      if (beta.size() != 1) throw ValidationError("--beta takes one root");
      const auto trace =
          rootsmith::simple_systems::obtusify(rs, delta, beta.front());
      emit(rootsmith::json_io::trace_json(trace), output_path);
      return kExitPass;
    }

    if (*cmd_comp) {
      const RootSystem rs = RootSystem::build(CartanType::parse(type_label));
      const auto delta =
          to_root_indices(rs, parse_vectors(delta_arg, rs.rank()));
      const auto comp = rootsmith::simple_systems::completions(rs, delta);
      Json j;
      j["completions"] = rootsmith::json_io::coords_list_json(rs, comp);
      emit(j, output_path);
      return comp.empty() ? kExitFail : kExitPass;
    }

    if (*cmd_orbits) {
      const RootSystem rs = RootSystem::build(CartanType::parse(type_label));
      const auto delta =
          to_root_indices(rs, parse_vectors(delta_arg, rs.rank()));
      const auto report =
          rootsmith::simple_systems::orbit_partition(rs, delta, bfs_cap());
      emit(rootsmith::json_io::orbit_report_json(rs, report), output_path);
      return kExitPass;
    }

    if (*cmd_conj) {
      const RootSystem rs = RootSystem::build(CartanType::parse(type_label));
      const auto r1 = to_root_indices(rs, parse_vectors(r1_arg, rs.rank()));
      const auto t1 = to_root_indices(rs, parse_vectors(t1_arg, rs.rank()));
      if (r1.size() != 1 || t1.size() != 1)
        throw ValidationError("--r1 and --t1 take one root each");
      const auto rest =
          to_root_indices(rs, parse_vectors(rest_arg, rs.rank()));
      const auto g = rootsmith::simple_systems::find_conjugator(
          rs, r1.front(), rest, t1.front());
      Json j;
      j["g"] = rootsmith::json_io::group_element_json(rs, g);
      emit(j, output_path);
      return kExitPass;
    }

    if (*cmd_hur) {
      const RootSystem rs = RootSystem::build(CartanType::parse(type_label));
      const auto refs =
          to_root_indices(rs, parse_vectors(roots_arg, rs.rank()));
      rootsmith::quasicox::Factorization f;
      for (const RootIndex t : refs) f.refs.push_back(rs.positive_rep(t));
      rootsmith::quasicox::HurwitzDir dir;
      if (dir_arg == "left")
        dir = rootsmith::quasicox::HurwitzDir::Left;
      else if (dir_arg == "right")
        dir = rootsmith::quasicox::HurwitzDir::Right;
      else
        throw ValidationError("--dir must be 'left' or 'right'");
      const auto moved =
          rootsmith::quasicox::hurwitz_move(rs, f, move_index, dir);
      Json j;
      j["factorization"] = rootsmith::json_io::factorization_json(rs, moved);
      emit(j, output_path);
      return kExitPass;
    }

    if (*cmd_self) {
      const auto summary = rootsmith::selftest::run(seed, samples, max_rank);
      emit(selftest_json(summary), output_path);
      return summary.pass ? kExitPass : kExitFail;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    Json j;
    j["error"] = e.what();
    emit(j, output_path);
    return kExitFail;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
