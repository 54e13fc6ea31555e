#pragma once

// Frozen fixtures. Brackets were produced by the brute-force oracle before
// the library existed; the two published Jones polynomials are copied as text.

namespace fixtures {

inline constexpr const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
inline constexpr const char* kTrefoilBracket = "-A^(-5) - A^3 + A^7";
inline constexpr const char* kTrefoilJones = "-t^(-4) + t^(-3) + t^(-1)";

inline constexpr const char* kKink = "X[1,1,2,2]";

inline constexpr const char* kHopf = "X[4,1,3,2] X[2,3,1,4]";

// Connected sum of two trefoils of the same handedness.
inline constexpr const char* kGranny =
    "X[5,2,6,3] X[9,6,10,7] X[11,8,12,9] X[3,12,4,1] X[1,4,2,5] X[7,10,8,11]";

// Ten-crossing two-component almost alternating diagram; crossing index 9
// (X[13,17,14,18]) is the dealternator.
inline constexpr const char* kAAExample =
    "X[14,3,1,4] X[6,11,7,12] X[4,10,5,9] X[12,7,13,8] X[10,15,11,20] X[8,18,9,19] "
    "X[19,5,20,6] X[15,1,16,2] X[2,16,3,17] X[13,17,14,18]";
inline constexpr const char* kAAExampleBracket =
    "-2A^(-12) + 3A^(-8) - 5A^(-4) + 5 - 5A^4 + 4A^8 - 3A^12 + A^16";
inline constexpr const char* kAAExampleJones =
    "t^(-17/2) - 3t^(-15/2) + 4t^(-13/2) - 5t^(-11/2) + 5t^(-9/2) - 5t^(-7/2) + 3t^(-5/2) - 2t^(-3/2)";

inline constexpr const char* kK15 =
    "X[9,17,10,16] X[17,11,18,10] X[23,15,24,14] X[20,8,21,7] X[28,14,29,13] X[15,27,16,26] "
    "X[11,9,12,8] X[12,22,13,21] X[27,23,28,22] X[29,6,30,7] X[2,26,3,25] X[5,30,6,1] "
    "X[4,20,5,19] X[24,2,25,1] X[18,4,19,3]";
inline constexpr const char* kK15Jones =
    "t^4 + t^5 - 3t^6 + 8t^7 - 12t^8 + 14t^9 - 15t^10 + 13t^11 - 10t^12 + 6t^13 - 2t^14";

}  // namespace fixtures
