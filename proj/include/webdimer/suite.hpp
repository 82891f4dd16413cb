#pragma once

#include <cstdint>

#include "webdimer/report.hpp"

namespace webdimer {

// Acceptance checks. Every equality is exact rational arithmetic.
Report acc1_sl4_evaluation();
Report acc2_square_web_expansion();
Report acc3_move_invariance(std::uint64_t seed, int trials);
Report acc4_factorization(std::uint64_t seed, int weightings);
Report acc5_sign_coherence();
Report acc6_plucker_relations(std::uint64_t seed, int count);
Report acc7_skein_identities();
Report acc8_dimension_pins();
Report acc9_partial_evaluation_37();
Report acc10_duality_pin();
Report acc11_sn_twist(std::uint64_t seed, int trials);
Report acc12_positivity_sampling(std::uint64_t seed, int samples);  // exploratory

Report run_pinned_example_suite();  // the pinned worked-example checks

}  // namespace webdimer
