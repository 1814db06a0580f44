#ifndef FREQPRED_TESTS_TABLE1_HPP
#define FREQPRED_TESTS_TABLE1_HPP

// Published coefficient table for the expanded accuracy polynomial,
// alpha_{a,i} for a = 0..10, i = 1..a+2, transcribed as printed. Entry
// (a=5, i=1) is printed as 426; see the coefficient tests.

#include <vector>

namespace published {

inline const std::vector<std::vector<long long>>& alpha_table() {
  static const std::vector<std::vector<long long>> rows = {
      {1, -2},
      {3, -8, 4},
      {10, -35, 36, -12},
      {35, -154, 238, -160, 40},
      {126, -672, 1380, -1395, 700, -140},
      {426, -2904, 7425, -10010, 7546, -3024, 504},
      {1716, -12441, 38038, -64064, 64428, -38766, 12936, -1848},
      {6435, -52910, 188188, -380016, 477750, -383460, 192060, -54912, 6864},
      {24310, -223652, 906984, -2134860, 3220140, -3231360, 2158728, -926211, 231660, -25740},
      {92378, -940576, 4282980, -11511720, 20252100, -24387792, 20369349, -11655930, 4374370,
       -972400, 97240},
      {352716, -3938662, 19896800, -60116760, 120830424, -169744575, 170143974, -121721600,
       60920860, -20318298, 4064632, -369512},
  };
  return rows;
}

/// The ten displayed accuracy polynomials pi_1 = pi_2, .., pi_9 = pi_10 as
/// dense coefficients of theta^0, theta^1, ...
inline const std::vector<std::vector<long>>& first_polynomials() {
  static const std::vector<std::vector<long>> polys = {
      {1, -2, 2},
      {1, -1, -3, 8, -4},
      {1, -1, 0, -10, 35, -36, 12},
      {1, -1, 0, 0, -35, 154, -238, 160, -40},
      {1, -1, 0, 0, 0, -126, 672, -1380, 1395, -700, 140},
  };
  return polys;
}

}  // namespace published

#endif  // FREQPRED_TESTS_TABLE1_HPP
