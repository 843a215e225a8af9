#pragma once

#include <string>
#include <vector>

#include "braidcover/braid.hpp"
#include "braidcover/fiber.hpp"
#include "braidcover/perm.hpp"

namespace braidcover::refdata {

/// Default base configurations used by the published computations.
std::vector<std::complex<double>> base_n3();
std::vector<std::complex<double>> base_n2(double eps = 0.8);

/// Published fiber labelings. n=2 is exact (closed formulas in eps); n=3 was
/// published to five decimals.
FiberReference<double> reference_n2(double eps = 0.8);
FiberReference<double> reference_n3();

/// Level-1 generator permutations on the published labels.
Perm rho21_sigma1();                 // 4 points
Perm rho31_sigma1();                 // 27 points
Perm rho31_sigma2();                 // 27 points
Perm rho22_sigma1();                 // 16 points, level 2
Perm rho22_sigma1_pow12();           // 16 points, level 2 image of s1^12

/// Published lifted-braid word lists, indexed by start label.
std::vector<BraidWord> lifts_n2_sigma1();             // roots embedding, 4 entries
std::vector<BraidWord> lifts_n3_sigma1_roots();       // 27 entries
std::vector<BraidWord> lifts_n3_sigma2_roots();       // 27 entries
std::vector<BraidWord> lifts_n3_sigma1_critpts();     // 27 entries
std::vector<BraidWord> lifts_n3_sigma2_critpts();     // 27 entries

/// The worked commutator example and its level-1 lift pattern.
BraidWord beta_example();                    // s1^12 s2^12 s1^-12 s2^-12
std::vector<BraidWord> beta_lift_pattern();  // 27 entries built from S and T
BraidWord beta_S();
BraidWord beta_T();

/// The five certified loop braids, their loop-closing powers from z_1, and
/// their published lifts.
std::vector<BraidWord> beta_loops();     // beta_1 .. beta_5 in B_3
std::vector<int> beta_loop_powers();     // (1, 2, 6, 6, 3)
std::vector<BraidWord> w_words();        // w_1 .. w_5 in B_3

/// The 3-component obstruction example.
BraidWord obstruction_braid();

}  // namespace braidcover::refdata
