#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "slat/congruence.hpp"
#include "slat/construct.hpp"
#include "slat/engine.hpp"
#include "slat/io.hpp"

namespace {

using namespace slat;

int worker_count() {
  if (const char* env = std::getenv("SLAT_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)hw : 1;
}

// Runs fn(i) for i in [0, count) on up to `workers` threads; results land in
// a caller-indexed container, so output order stays deterministic.
template <typename Fn>
void parallel_for(int count, int workers, Fn fn) {
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

PlanarLattice load_input(const std::string& file, const std::string& fixture_name) {
  if (!fixture_name.empty()) return fixture(fixture_name);
  if (file.empty()) fail(errc::parse_error, "either --lattice or --fixture is required");
  return load_lattice(file);
}

ElementId resolve_element(const PlanarLattice& L, const std::string& token) {
  ElementId x = L.find_label(token);
  if (x >= 0) return x;
  try {
    size_t pos = 0;
    int v = std::stoi(token, &pos);
    if (pos == token.size() && v >= 0 && v < L.size()) return v;
  } catch (const std::exception&) {
  }
  fail(errc::parse_error, "unknown element '" + token + "'");
}

PrimeInterval parse_prime(const PlanarLattice& L, const std::string& spec) {
  size_t comma = spec.find(',');
  if (comma == std::string::npos) fail(errc::parse_error, "expected 'bottom,top': " + spec);
  ElementId lo = resolve_element(L, spec.substr(0, comma));
  ElementId hi = resolve_element(L, spec.substr(comma + 1));
  if (!L.covers(lo, hi)) fail(errc::parse_error, "interval is not prime");
  return {lo, hi};
}

int run_check(const std::string& suite, int forks) {
  std::vector<std::pair<std::string, PlanarLattice>> targets;
  std::vector<std::string> sl_failures;
  if (suite == "pproj")
    for (const char* f : {"N5", "M3", "S7", "B2", "C2xC3"})
      targets.push_back({std::string("fixture:") + f, fixture(f)});
  auto gen = generate_patch_lattices(
      forks, suite == "lemmas"
                 ? ForkCallback([&](const PlanarLattice&, const CoveringSquare&,
                                    const PlanarLattice& child, int depth) {
                     std::string detail;
                     if (!has_sl_property(child, &detail))
                       sl_failures.push_back("(SL) lost at fork depth " + std::to_string(depth) +
                                             ": " + detail);
                   })
                 : ForkCallback{});
  for (const auto& g : gen)
    targets.push_back({"gen:" + digest(g.canon), g.lattice});

  std::vector<Report> reports(targets.size());
  parallel_for((int)targets.size(), worker_count(), [&](int i) {
    const PlanarLattice& L = targets[i].second;
    if (suite == "swing")
      reports[i] = verify_swing_lemma(L);
    else if (suite == "pproj")
      reports[i] = verify_prime_projectivity_lemma(L);
    else
      reports[i] = lemma_suite(L);
  });

  int checks = 0, discrepancies = 0, soft = 0;
  for (size_t i = 0; i < targets.size(); ++i) {
    checks += reports[i].checks;
    for (const std::string& f : reports[i].failures) {
      ++discrepancies;
      nlohmann::ordered_json line;
      line["suite"] = suite;
      line["lattice"] = targets[i].first;
      line["detail"] = f;
      std::cout << line.dump() << "\n";
    }
    for (const std::string& s : reports[i].soft_notes) {
      ++soft;
      nlohmann::ordered_json line;
      line["suite"] = suite;
      line["lattice"] = targets[i].first;
      line["soft_note"] = s;
      std::cout << line.dump() << "\n";
    }
  }
  for (const std::string& f : sl_failures) {
    ++discrepancies;
    nlohmann::ordered_json line;
    line["suite"] = suite;
    line["detail"] = f;
    std::cout << line.dump() << "\n";
  }
  nlohmann::ordered_json summary;
  summary["suite"] = suite;
  summary["lattices"] = targets.size();
  summary["checks"] = checks;
  summary["discrepancies"] = discrepancies;
  summary["soft_notes"] = soft;
  std::cout << summary.dump() << "\n";
  return discrepancies == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congruence spreading in slim planar semimodular lattices"};
  app.require_subcommand(1);
  unsigned seed = 0;
  app.add_option("--seed", seed, "reserved; all algorithms are deterministic");

  auto* gen_cmd = app.add_subcommand("gen", "generate the fork-insertion family");
  int gen_forks = 2;
  std::string gen_out = "out";
  gen_cmd->add_option("--forks", gen_forks, "maximum number of fork insertions");
  gen_cmd->add_option("--out", gen_out, "output directory")->required();

  auto* check_cmd = app.add_subcommand("check", "run a verification suite");
  std::string suite;
  int check_forks = 2;
  check_cmd->add_option("--suite", suite, "swing | pproj | lemmas")
      ->required()
      ->check(CLI::IsMember({"swing", "pproj", "lemmas"}));
  check_cmd->add_option("--forks", check_forks, "generation depth");

  auto* seq_cmd = app.add_subcommand("seq", "search a witness sequence");
  std::string seq_file, seq_fixture, from_spec, to_spec, mode = "swing";
  seq_cmd->add_option("--lattice", seq_file, "lattice JSON file");
  seq_cmd->add_option("--fixture", seq_fixture, "built-in fixture name");
  seq_cmd->add_option("--from", from_spec, "source prime 'bottom,top'")->required();
  seq_cmd->add_option("--to", to_spec, "target prime 'bottom,top'")->required();
  seq_cmd->add_option("--mode", mode, "swing | pproj")->check(CLI::IsMember({"swing", "pproj"}));

  auto* con_cmd = app.add_subcommand("con", "join-irreducible congruences");
  std::string con_file, con_fixture;
  con_cmd->add_option("--lattice", con_file, "lattice JSON file");
  con_cmd->add_option("--fixture", con_fixture, "built-in fixture name");

  auto* export_cmd = app.add_subcommand("export", "emit DOT");
  std::string exp_file, exp_fixture, exp_out;
  export_cmd->add_option("--lattice", exp_file, "lattice JSON file");
  export_cmd->add_option("--fixture", exp_fixture, "built-in fixture name");
  export_cmd->add_option("--out", exp_out, "output file (default stdout)");

  auto* stats_cmd = app.add_subcommand("stats", "structural summary");
  std::string st_file, st_fixture;
  stats_cmd->add_option("--lattice", st_file, "lattice JSON file");
  stats_cmd->add_option("--fixture", st_fixture, "built-in fixture name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_cmd->parsed()) {
      auto entries = write_generation(gen_forks, gen_out);
      for (const auto& e : entries)
        std::cout << e.id << " n=" << e.n << " depth=" << e.fork_depth << " " << e.path << "\n";
      return 0;
    }
    if (check_cmd->parsed()) return run_check(suite, check_forks);
    if (seq_cmd->parsed()) {
      PlanarLattice L = load_input(seq_file, seq_fixture);
      PrimeInterval p = parse_prime(L, from_spec), q = parse_prime(L, to_spec);
      auto w = mode == "swing" ? find_swing_sequence(L, p, q) : find_prime_projectivity(L, p, q);
      if (!w) {
        std::cout << "none\n";
        return 0;
      }
      std::cout << format_sequence(L, *w) << "\n";
      return 0;
    }
    if (con_cmd->parsed()) {
      PlanarLattice L = load_input(con_file, con_fixture);
      JiConOrder ji = join_irreducible_congruences(L);
      for (size_t i = 0; i < ji.generators.size(); ++i) {
        std::cout << "con" << format_interval(L, ji.generators[i]) << " =";
        for (const auto& block : ji.congruences[i].blocks()) {
          std::cout << " {";
          for (size_t k = 0; k < block.size(); ++k) {
            if (k) std::cout << ",";
            const std::string& lbl = L.label(block[k]);
            std::cout << (lbl.empty() ? "#" + std::to_string(block[k]) : lbl);
          }
          std::cout << "}";
        }
        std::cout << "\n";
      }
      std::cout << jicon_to_dot(L, ji);
      return 0;
    }
    if (export_cmd->parsed()) {
      PlanarLattice L = load_input(exp_file, exp_fixture);
      if (exp_out.empty()) {
        std::cout << to_dot(L);
      } else {
        std::ofstream out(exp_out, std::ios::binary);
        if (!out) fail(errc::parse_error, "cannot open " + exp_out);
        out << to_dot(L);
      }
      return 0;
    }
    if (stats_cmd->parsed()) {
      PlanarLattice L = load_input(st_file, st_fixture);
      nlohmann::ordered_json j;
      j["n"] = L.size();
      j["covers"] = L.cover_count();
      j["primes"] = L.prime_intervals().size();
      j["height"] = L.height(L.top());
      j["semimodular"] = L.is_semimodular();
      j["slim"] = L.is_slim();
      j["sps"] = L.is_sps();
      j["patch"] = L.is_patch_lattice();
      j["covering_squares"] = covering_squares(L).size();
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::parse_error || e.code() == errc::schema_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
