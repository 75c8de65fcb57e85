#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mild2/oracle.hpp"

namespace mild2 {

namespace fixtures {

inline const std::vector<std::uint64_t> example1_primes{41, 13, 5, 3, 19};
inline const std::vector<std::uint64_t> example2_primes{5, 29, 7, 11, 3};

inline const std::string example1_text =
    "r_1 = [x1,x2][x1,x4][x1,x5]\n"
    "r_2 = [x2,x1][x2,x3][x2,x5]\n"
    "r_3 = [x3,x2][x3,x4]\n"
    "r_4 = x4^2[x4,x1][x4,x3][x4,x5]\n"
    "r_5 = x5^2[x5,x1][x5,x2]\n"
    "r = x4x5\n";
inline const std::string example1_reduced_text =
    "r'_1 = [x1,x2]\n"
    "r'_2 = [x2,x1][x2,x3][x2,x4]\n"
    "r'_3 = [x3,x2][x3,x4]\n"
    "r'_4 = x4^2[x4,x1][x4,x3]\n";

// r_5 as computed from the linking numbers; the printed version lacks [x5,x3].
inline const std::string example2_text =
    "r_1 = [x1,x3][x1,x5]\n"
    "r_2 = [x2,x4][x2,x5]\n"
    "r_3 = x3^2[x3,x1][x3,x4]\n"
    "r_4 = x4^2[x4,x2][x4,x5]\n"
    "r_5 = x5^2[x5,x1][x5,x2][x5,x3]\n"
    "r = x3x4x5\n";
inline const std::string example2_reduced_text =
    "r'_1 = [x1,x4]\n"
    "r'_2 = [x2,x3]\n"
    "r'_3 = x3^2[x3,x1][x3,x4]\n"
    "r'_4 = x4^2[x4,x2][x4,x3]\n";

inline const std::vector<std::uint64_t> strongly_free_d4_m4{1, 4, 12, 32, 80, 192, 448, 1024};
inline const std::vector<std::uint64_t> strongly_free_d4_m4_pi{1, 5, 17, 49, 129, 321};

}  // namespace fixtures

// a_i xi_i^2 + [xi_i, xi_{i+1 mod d}] with a_i = 1 exactly on the even positions.
std::vector<QuadraticRelator> cyclic_instance(int d);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

struct SelftestOptions {
  bool degree7 = false;
  std::uint64_t seed = 0x6d696c64;
  unsigned threads = 2;
  OracleOptions oracle;
};

std::vector<CriterionResult> run_acceptance(const SelftestOptions& options = {});

// "PASS  4  oracle agreement  (2.31 s / 70 s)  ..." on one line.
std::string format_result(const CriterionResult& r);

}  // namespace mild2
