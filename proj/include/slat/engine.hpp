#ifndef SLAT_ENGINE_HPP
#define SLAT_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "slat/congruence.hpp"
#include "slat/lattice.hpp"
#include "slat/relations.hpp"

namespace slat {

enum class StepKind { UpPersp, DownPersp, Swing, PrimeUp, PrimeDown };

const char* to_string(StepKind k) noexcept;

/// A witness path: intervals.size() == steps.size() + 1 and each consecutive
/// pair satisfies its step's relation.
struct StepSequence {
  std::vector<PrimeInterval> intervals;
  std::vector<StepKind> steps;
};

/// Shortest sequence p (up-perspective, at most once, first) r_0 then
/// down-perspectivities and swings to q. Deterministic: lexicographically
/// least among the shortest, by prime-interval index.
std::optional<StepSequence> find_swing_sequence(const PlanarLattice& L, PrimeInterval p,
                                                PrimeInterval q);

/// Shortest chain of prime-perspectivities (up/down) from p to q. Works in
/// any finite lattice.
std::optional<StepSequence> find_prime_projectivity(const PlanarLattice& L, PrimeInterval p,
                                                    PrimeInterval q);

/// Step-by-step revalidation against the relations module. Fills `why` with
/// the first offending step when given.
bool validate_witness(const PlanarLattice& L, const StepSequence& seq,
                      std::string* why = nullptr);

/// Shortest equivalent witness; asserts the normal form (pairwise distinct
/// intervals, no two equal consecutive step kinds among DownPersp/Swing,
/// UpPersp only first). Throws not_a_witness when seq does not validate.
StepSequence normalize_witness(const PlanarLattice& L, const StepSequence& seq);

struct Report {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> soft_notes;  // experimental observations, not gates
  bool ok() const { return failures.empty(); }
};

/// Oracle collapse vs witness presence over every ordered pair of distinct
/// primes, plus revalidation and monotone-tops checks of every witness.
Report verify_swing_lemma(const PlanarLattice& L);

/// Oracle collapse vs prime-projectivity witness over every ordered pair of
/// distinct primes; any finite lattice.
Report verify_prime_projectivity_lemma(const PlanarLattice& L);

/// Condition (SL): every prime on the lower right boundary is reachable from
/// the top left prime by down-perspectivities and swings.
bool has_sl_property(const PlanarLattice& L, std::string* detail = nullptr);

/// Exhaustive checks of the auxiliary lemma statements on one lattice.
Report lemma_suite(const PlanarLattice& L);

std::string format_interval(const PlanarLattice& L, PrimeInterval p);
std::string format_sequence(const PlanarLattice& L, const StepSequence& seq);

}  // namespace slat

#endif
