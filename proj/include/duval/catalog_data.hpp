#pragma once

// Weighted K3 surfaces realizing each signature from -16 to 2. Mirrors data/k3_signatures.cat.

#include <string_view>

namespace duval {

inline constexpr std::string_view kEmbeddedCatalog = R"(# name | weights | degrees | basket | sigma
F_4 ⊂ P(1,1,1,1) | 1 1 1 1 | 4 | - | -16
F_5 ⊂ P(1,1,1,2) | 1 1 1 2 | 5 | A_1 | -15
F_8 ⊂ P(1,1,2,4) | 1 1 2 4 | 8 | 2A_1 | -14
F_6 ⊂ P(1,1,2,2) | 1 1 2 2 | 6 | 3A_1 | -13
F_{4,4} ⊂ P(1,1,2,2,2) | 1 1 2 2 2 | 4 4 | 4A_1 | -12
F_10 ⊂ P(1,2,2,5) | 1 2 2 5 | 10 | 5A_1 | -11
F_8 ⊂ P(1,2,2,3) | 1 2 2 3 | 8 | 4A_1 A_2 | -10
F_9 ⊂ P(1,2,3,3) | 1 2 3 3 | 9 | A_1 3A_2 | -9
F_16 ⊂ P(1,3,4,8) | 1 3 4 8 | 16 | A_2 2A_3 | -8
F_12 ⊂ P(1,3,4,4) | 1 3 4 4 | 12 | 3A_3 | -7
F_12 ⊂ P(2,2,3,5) | 2 2 3 5 | 12 | 6A_1 A_4 | -6
F_12 ⊂ P(2,3,3,4) | 2 3 3 4 | 12 | 3A_1 4A_2 | -5
F_14 ⊂ P(2,3,4,5) | 2 3 4 5 | 14 | 3A_1 A_2 A_3 A_4 | -4
F_15 ⊂ P(2,3,5,5) | 2 3 5 5 | 15 | A_1 3A_4 | -3
F_18 ⊂ P(3,4,5,6) | 3 4 5 6 | 18 | A_1 3A_2 A_3 A_4 | -2
F_19 ⊂ P(3,4,5,7) | 3 4 5 7 | 19 | A_2 A_3 A_4 A_6 | -1
F_24 ⊂ P(3,4,7,10) | 3 4 7 10 | 24 | A_1 A_6 A_9 | 0
F_25 ⊂ P(4,5,7,9) | 4 5 7 9 | 25 | A_3 A_6 A_8 | 1
F_30 ⊂ P(5,6,8,11) | 5 6 8 11 | 30 | A_1 A_7 A_10 | 2
)";

}  // namespace duval
