#pragma once

// Shared instances for the test suites. classd10 is a 10-vertex strongly
// connected pendant-dominated digraph with four maximum matchings;
// mixed5/star5 are a 5-vertex pair (one leaves the class under inversion,
// one does not); symmetric5 is simple symmetric but not pendant-dominated,
// so only the algebraic path applies to it.

#include <string>

#include "dginv/matrix_io.hpp"

namespace fixtures {

inline const std::string classd10_text = R"(10
0 -2 0 2 2 1 0 0 0 0
-1 0 1 0 0 0 -3 0 0 0
0 3 0 -1 0 0 0 2 2 0
-1 0 1 0 0 0 0 0 0 2
1 0 0 0 0 0 0 0 0 0
-3 0 0 0 0 0 0 0 0 0
0 -2 0 0 0 0 0 0 0 0
0 0 3 0 0 0 0 0 0 0
0 0 -1 0 0 0 0 0 0 0
0 0 0 2 0 0 0 0 0 0
)";

inline const std::string mixed5_text = R"(5
0 2 -1 0 0
1 0 0 1 1
1 0 0 0 0
0 -2 0 0 0
0 -2 0 0 0
)";

inline const std::string mixed5_inverse_text = R"(5
0 0 1 0 0
0 0 0 -1/4 -1/4
-1 0 0 -1/2 -1/2
0 1/2 -1/2 0 0
0 1/2 -1/2 0 0
)";

inline const std::string star5_text = R"(5
0 1 1 2 -1
-1 0 0 0 0
2 0 0 0 0
1 0 0 0 0
2 0 0 0 0
)";

inline const std::string symmetric5_text = R"(5
0 2 1 2 1
2 0 2 0 0
1 2 0 0 0
2 0 0 0 0
1 0 0 0 0
)";

inline const std::string symmetric5_inverse_text = R"(5
0 0 0 2/5 1/5
0 0 1/2 -1/5 -1/10
0 1/2 0 -2/5 -1/5
2/5 -1/5 -2/5 8/25 4/25
1/5 -1/10 -1/5 4/25 2/25
)";

// Two non-pendants on an edge, one pendant each, unit weights.
inline const std::string corona4_text = R"(4
0 1 1 0
1 0 0 1
1 0 0 0
0 1 0 0
)";

inline const std::string corona4_inverse_text = R"(4
0 0 1 0
0 0 0 1
1 0 0 -1
0 1 -1 0
)";

inline dginv::Matrix classd10() { return dginv::read_matrix_string(classd10_text); }
inline dginv::Matrix mixed5() { return dginv::read_matrix_string(mixed5_text); }
inline dginv::Matrix mixed5_inverse() { return dginv::read_matrix_string(mixed5_inverse_text); }
inline dginv::Matrix star5() { return dginv::read_matrix_string(star5_text); }
inline dginv::Matrix symmetric5() { return dginv::read_matrix_string(symmetric5_text); }
inline dginv::Matrix symmetric5_inverse() {
  return dginv::read_matrix_string(symmetric5_inverse_text);
}
inline dginv::Matrix corona4() { return dginv::read_matrix_string(corona4_text); }
inline dginv::Matrix corona4_inverse() { return dginv::read_matrix_string(corona4_inverse_text); }

}  // namespace fixtures
