#pragma once

#include <cstdint>
#include <string_view>

#include "tetrabox/random.hpp"
#include "tetrabox/report.hpp"

namespace tetrabox {

enum class Suite : std::uint8_t {
  Tetra,
  Sequences,
  Operators,
  AbTable,
  XyzTable,
  DeltaTable,
  Transitions,
  Grid,
  Appendix,
  All,
};

std::string_view suite_name(Suite suite);
Suite parse_suite(std::string_view name);

/// Sweep depths derived from a single bound N: sequences reach N, bracket tables
/// and the recursive reconstruction 2N/5, transitions and likeness 3N/5.
struct Depths {
  long sequences = 20;
  long tables = 8;
  long transitions = 12;
  long likeness = 12;
  long reconstruction = 8;

  static Depths from_max(long max);
};

struct VerifyOptions {
  long max = 20;
  std::uint64_t seed = 0x7e7a;
  int random_count = 50;
};

/// Recursive against closed forms of a_n, b_n at all three levels, for n <= n_max.
Report check_sequences(long n_max);
/// x/y/z combinations against closed forms, U_n bases and the odd-index identities.
Report check_xyz_sequences(long n_max);
/// G and H closed forms against the defining double brackets.
Report check_operators(RandomSource& rng, int count);
/// Jacobi identity, bracket preservation and order three of the prime map, and
/// compatibility of the index cycle (123) with the prime map on generators.
Report check_jacobi_automorphism(RandomSource& rng, int count);
/// A bracket table against direct brackets for all slot pairs with i, j <= depth.
Report check_table(Basis basis, long depth);
/// All six transitions against coordinate extraction, plus round trips.
Report check_transitions(RandomSource& rng, long depth);
/// Nine-way decomposition on random elements.
Report check_grid(RandomSource& rng, int count);
/// Structural and definitional likeness of the like-element bases at all levels,
/// and of random multiples of the six generators.
Report check_likeness(RandomSource& rng, long depth);
/// Primed and double-primed data against the images under the prime map.
Report check_appendix(long depth);

Report run_suite(Suite suite, const VerifyOptions& options);

}  // namespace tetrabox
