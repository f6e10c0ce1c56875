// Acceptance gate: one line per criterion, exit 0 only when all pass.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "slat/congruence.hpp"
#include "slat/construct.hpp"
#include "slat/engine.hpp"
#include "slat/io.hpp"

using namespace slat;
using namespace slat::testing;

namespace {

int failures = 0;

void report(int num, const char* title, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s — %s (%s)\n", num, pass ? "PASS" : "FAIL", title,
              detail.c_str());
  if (!pass) ++failures;
}

bool monotone_tops(const PlanarLattice& L, const StepSequence& w) {
  size_t start = (!w.steps.empty() && w.steps[0] == StepKind::UpPersp) ? 1 : 0;
  for (size_t i = start; i + 1 < w.intervals.size(); ++i)
    if (!L.leq(w.intervals[i + 1].top, w.intervals[i].top)) return false;
  return true;
}

bool normal_form(const StepSequence& w) {
  for (size_t a = 0; a < w.intervals.size(); ++a)
    for (size_t b = a + 1; b < w.intervals.size(); ++b)
      if (w.intervals[a] == w.intervals[b]) return false;
  for (size_t i = 0; i < w.steps.size(); ++i) {
    if (w.steps[i] == StepKind::UpPersp && i != 0) return false;
    if (i + 1 < w.steps.size() && w.steps[i] != StepKind::UpPersp &&
        w.steps[i] == w.steps[i + 1])
      return false;
  }
  return true;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  std::vector<GeneratedLattice> gen3;
  long sl_checks = 0, sl_bad = 0;
  gen3 = generate_patch_lattices(3, [&](const PlanarLattice&, const CoveringSquare&,
                                        const PlanarLattice& child, int) {
    ++sl_checks;
    if (!has_sl_property(child)) ++sl_bad;
  });
  std::vector<GeneratedLattice> gen2;
  for (const auto& g : gen3)
    if (g.fork_depth <= 2) gen2.push_back(g);

  // 1 + 2: exhaustive swing lemma with witness-quality side conditions
  {
    long pairs = 0, mismatches = 0, bad_witness = 0, witnesses = 0;
    for (const auto& g : gen3) {
      const PlanarLattice& L = g.lattice;
      auto primes = L.prime_intervals();
      std::vector<Congruence> cons;
      cons.reserve(primes.size());
      for (auto p : primes) cons.push_back(principal_congruence(L, p));
      for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = 0; j < primes.size(); ++j) {
          if (i == j) continue;
          ++pairs;
          bool collapsed = cons[i].collapses(primes[j]);
          auto w = find_swing_sequence(L, primes[i], primes[j]);
          if (collapsed != w.has_value()) {
            ++mismatches;
            continue;
          }
          if (!w) continue;
          ++witnesses;
          if (w->intervals.front() != primes[i] || w->intervals.back() != primes[j] ||
              !validate_witness(L, *w) || !monotone_tops(L, *w) || !normal_form(*w))
            ++bad_witness;
        }
    }
    std::ostringstream d1;
    d1 << gen3.size() << " lattices, " << pairs << " ordered prime pairs, " << mismatches
       << " oracle disagreements";
    report(1, "swing lemma exhaustive at fork depth <= 3", mismatches == 0, d1.str());
    std::ostringstream d2;
    d2 << witnesses << " witnesses, " << bad_witness << " violations of monotone tops / normal form";
    report(2, "witness side conditions", bad_witness == 0, d2.str());
  }

  // 3: prime-projectivity lemma on fixtures and depth <= 2
  {
    long pairs = 0, mismatches = 0;
    std::vector<PlanarLattice> targets;
    for (const char* f : {"N5", "M3", "S7", "B2", "C2xC3"}) targets.push_back(fixture(f));
    for (const auto& g : gen2) targets.push_back(g.lattice);
    for (const auto& L : targets) {
      auto primes = L.prime_intervals();
      std::vector<Congruence> cons;
      for (auto p : primes) cons.push_back(principal_congruence(L, p));
      for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = 0; j < primes.size(); ++j) {
          if (i == j) continue;
          ++pairs;
          bool collapsed = cons[i].collapses(primes[j]);
          auto w = find_prime_projectivity(L, primes[i], primes[j]);
          if (collapsed != w.has_value() || (w && !validate_witness(L, *w))) ++mismatches;
        }
    }
    std::ostringstream d;
    d << targets.size() << " lattices, " << pairs << " pairs, " << mismatches << " disagreements";
    report(3, "prime-projectivity lemma", mismatches == 0, d.str());
  }

  // 4: the auxiliary lemma suite
  {
    long checks = 0, bad = 0;
    for (const auto& g : gen3) {
      Report r = lemma_suite(g.lattice);
      checks += r.checks;
      bad += (long)r.failures.size();
    }
    std::ostringstream d;
    d << gen3.size() << " lattices, " << checks << " checks, " << bad << " violations";
    report(4, "auxiliary lemma suite at fork depth <= 3", bad == 0, d.str());
  }

  // 5: (SL) persists through every individual fork insertion
  {
    long final_bad = 0;
    for (const auto& g : gen3)
      if (!has_sl_property(g.lattice)) ++final_bad;
    std::ostringstream d;
    d << sl_checks << " insertions re-checked, " << sl_bad + final_bad << " losses";
    report(5, "condition (SL) persistence", sl_bad == 0 && final_bad == 0, d.str());
  }

  // 6: at most two covers in J(Con L)
  {
    long bad = 0;
    for (const auto& g : gen3)
      if (!two_cover_property(g.lattice)) ++bad;
    std::ostringstream d;
    d << gen3.size() << " lattices, " << bad << " violations";
    report(6, "two-cover property of J(Con L)", bad == 0, d.str());
  }

  // 7: golden congruences of S7 against the naive closure oracle
  {
    PlanarLattice L = fixture("S7");  // o=0 z_l=1 z_r=2 a_l=3 m=4 a_r=5 t=6
    bool ok = true;
    Congruence alpha = principal_congruence(L, 4, 6);
    Congruence beta = principal_congruence(L, 3, 6);
    // {{o},{z_l,a_l},{z_r,a_r},{m,t}} and {{o,z_r,a_r},{z_l,m,a_l,t}}
    ok = ok && alpha.block_of == std::vector<ElementId>{0, 1, 2, 1, 4, 2, 4};
    ok = ok && beta.block_of == std::vector<ElementId>{0, 1, 0, 1, 1, 0, 1};
    ok = ok && alpha.block_of == naive_principal_congruence(L, 4, 6);
    ok = ok && beta.block_of == naive_principal_congruence(L, 3, 6);
    report(7, "S7 fixture congruences con(m,t) and con(a_l,t)", ok,
           ok ? "partitions match the independent oracle" : "partition mismatch");
  }

  // 8: round trip and byte-stable output
  {
    bool ok = true;
    for (const auto& g : gen3) {
      std::string s = serialize_lattice(g.lattice);
      if (serialize_lattice(parse_lattice(s)) != s) ok = false;
    }
    auto base = std::filesystem::temp_directory_path() / "slat_acceptance";
    std::filesystem::remove_all(base);
    auto e1 = write_generation(2, base / "a");
    auto e2 = write_generation(2, base / "b");
    if (e1.size() != e2.size()) ok = false;
    if (slurp(base / "a/catalog.json") != slurp(base / "b/catalog.json")) ok = false;
    for (size_t i = 0; ok && i < e1.size(); ++i)
      if (slurp(base / "a" / e1[i].path) != slurp(base / "b" / e2[i].path)) ok = false;
    std::filesystem::remove_all(base);
    std::ostringstream d;
    d << gen3.size() << " round trips, two generation runs compared byte for byte";
    report(8, "round trip and determinism", ok, d.str());
  }

  return failures == 0 ? 0 : 1;
}
