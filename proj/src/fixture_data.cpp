#include "mkb/fixtures.hpp"

#include <stdexcept>

// Transcriptions of the explicit polynomial data used by the case studies:
// the two monomial ideals and their Groebner/marked bases, the one-parameter
// families, support points, and the appendix material (u_{i,j} relations,
// parameter values, ideal a, the 109-parameter family and its two sample
// points).  Text is in the polynomial grammar of mkb::parse_poly; parameter
// symbols are c<i>_<j>, tau, T.

namespace mkb {
namespace {

const char* k_jg7 = R"FIX(
x7^2
x6*x7
x5*x7
x4*x7
x3*x7
x2*x7
x1*x7
x6^2
x5*x6
x4*x6
x3*x6
x2*x6
x1*x6
x5^2
x4*x5
x3*x5
x2*x5
x1*x5
x4^2
x3*x4
x2*x4
x1^2*x4
x3^3
x2*x3^2
x1*x3^2
x2^2*x3
x1*x2*x3
x1^2*x3
x2^3
x1*x2^2
x1^2*x2
x1^4
)FIX";
const char* k_jlex7 = R"FIX(
x7
x6
x5
x4
x3
x2
x1^16
)FIX";
const char* k_cubic7 = R"FIX(
2*x1^3 - 3*x1^2*x2 - 6*x1^2*x4 - 6*x1^2*x5 - 3*x1^2*x7 + 9*x1*x2^2 + 12*x1*x2*x3 + 12*x1*x2*x4 + 12*x1*x2*x5 + 12*x1*x2*x6 + 6*x1*x2*x7 + 6*x1*x3^2 + 6*x1*x3*x4 + 6*x1*x3*x5 + 12*x1*x3*x6 + 6*x1*x3*x7 + 6*x1*x4^2 + 12*x1*x4*x5 + 6*x1*x4*x6 + 6*x1*x4*x7 + 6*x1*x5^2 + 6*x1*x5*x6 + 6*x1*x5*x7 + 6*x1*x6^2 + 6*x1*x6*x7 + 3*x1*x7^2 - x2^3 + 3*x2^2*x3 - 9*x2^2*x4 - 6*x2^2*x5 - 3*x2^2*x6 - 6*x2^2*x7 + 3*x2*x3^2 - 12*x2*x3*x4 - 6*x2*x3*x5 - 6*x2*x3*x6 - 12*x2*x3*x7 - 3*x2*x4^2 - 12*x2*x4*x5 - 6*x2*x5^2 - 6*x2*x5*x6 - 6*x2*x5*x7 + 3*x2*x6^2 - 6*x3^2*x4 - 3*x3^2*x5 - 3*x3^2*x6 - 6*x3^2*x7 - 6*x3*x4*x5 - 3*x3*x5^2 - 6*x3*x5*x6 - 6*x3*x5*x7 + 3*x3*x6^2 - 5*x4^3 - 6*x4^2*x5 - 6*x4^2*x6 - 3*x4^2*x7 - 6*x4*x5^2 - 6*x4*x5*x6 - 6*x4*x5*x7 - 6*x4*x6^2 - 12*x4*x6*x7 - 9*x4*x7^2 - 3*x5^3 - 3*x5^2*x6 - 3*x5^2*x7 - 3*x5*x6^2 - 6*x5*x6*x7 - 3*x5*x7^2 - 2*x6^3 - 6*x6^2*x7 - 6*x6*x7^2 - 2*x7^3
)FIX";
const char* k_f32_dim7 = R"FIX(
4*x1*x2 - 2*x1*x3 - 4*x1*x4 - x2^2 + x2*x3 - 2*x3^2 + x7^2
x1*x2 - x1*x4 - x2*x3 + x6*x7
-x1*x2 + x1*x3 + x1*x4 + x5*x7
-x1^2 - 5*x1*x2 + 5*x1*x3 + 2*x1*x4 - 2*x2*x3 + 2*x3^2 + x4*x7
-3*x1*x2 + 2*x1*x3 + 3*x1*x4 + x2*x3 + x3*x7
-3*x1*x2 + 2*x1*x3 + 3*x1*x4 + x2*x3 + x2*x7
x1*x2 - x1*x3 - x1*x4 + x1*x7
x1^2 + x1*x2 - x1*x3 + x1*x4 + x2^2 - 3*x2*x3 + x3^2 + x6^2
-x1*x2 + x1*x3 + x1*x4 + x5*x6
x1*x2 - x1*x4 - x2*x3 + x4*x6
-4*x1*x2 + 2*x1*x3 + 4*x1*x4 + x2*x3 + x3*x6
-4*x1*x2 + 2*x1*x3 + 4*x1*x4 + x2*x3 + x2*x6
-x1*x3 + x1*x6
-x1^2 + 2*x1*x4 + 2*x2^2 - 3*x2*x3 + 2*x3^2 + x5^2
x1*x4 + x4*x5
-x1*x2 + x1*x3 + x1*x4 + x3*x5
x1*x4 + x2*x5
-x1*x4 + x1*x5
x1^2 + 11*x1*x2 - 8*x1*x3 - 7*x1*x4 - x2^2 + 2*x2*x3 - 4*x3^2 + x4^2
-3*x1*x2 + 2*x1*x3 + 3*x1*x4 + x2*x3 + x3*x4
-2*x1*x2 + x1*x3 + 3*x1*x4 + x2*x3 + x2*x4
x1^3 + x1^2*x4
x3^3
-1/2*x1^3 + x2*x3^2
-x1^3 + x1*x3^2
-1/2*x1^3 + x2^2*x3
-x1^3 + x1*x2*x3
x1^2*x3
1/2*x1^3 + x2^3
-3/2*x1^3 + x1*x2^2
1/2*x1^3 + x1^2*x2
x1^4
)FIX";
const char* k_gtau_dim7 = R"FIX(
4*x1*x2 - 2*x1*x3 - 4*x1*x4 - x2^2 + x2*x3 - 2*x3^2 + x7^2 + 2*x1*tau - 7*x2*tau + 11/2*x3*tau + 16*x4*tau - 9*x7*tau - 8*tau^2
x1*x2 - x1*x4 - x2*x3 + x6*x7 + 1/2*x1*tau - x2*tau + 1/2*x3*tau + x4*tau - 1/2*x6*tau - 1/2*tau^2
-x1*x2 + x1*x3 + x1*x4 + x5*x7 - 1/2*x1*tau + x2*tau - x3*tau - x4*tau - 1/2*x5*tau - x7*tau + tau^2
-x1^2 - 5*x1*x2 + 5*x1*x3 + 2*x1*x4 - 2*x2*x3 + 2*x3^2 + x4*x7 - 3/2*x1*tau + 5*x2*tau - 8*x3*tau - 45/2*x4*tau + 11*x7*tau + 17*tau^2
-3*x1*x2 + 2*x1*x3 + 3*x1*x4 + x2*x3 + x3*x7 - 3/2*x1*tau + 3*x2*tau - 3*x3*tau - 3*x4*tau + 3/2*tau^2
-3*x1*x2 + 2*x1*x3 + 3*x1*x4 + x2*x3 + x2*x7 - 3/2*x1*tau + 5/2*x2*tau - 5/2*x3*tau - 3*x4*tau - 1/2*x7*tau + 7/4*tau^2
x1*x2 - x1*x3 - x1*x4 + x1*x7 - x2*tau + x3*tau + x4*tau - x7*tau
x1^2 + x1*x2 - x1*x3 + x1*x4 + x2^2 - 3*x2*x3 + x3^2 + x6^2 + 1/2*x1*tau + 2*x2*tau + 1/2*x3*tau - x4*tau + 2*x6*tau - 13/4*tau^2
-x1*x2 + x1*x3 + x1*x4 + x5*x6 - 1/2*x1*tau + x2*tau - x3*tau - x4*tau - x6*tau + 1/2*tau^2
x1*x2 - x1*x4 - x2*x3 + x4*x6 + 1/2*x1*tau - x2*tau + 1/2*x3*tau + x4*tau - x6*tau - 1/2*tau^2
-4*x1*x2 + 2*x1*x3 + 4*x1*x4 + x2*x3 + x3*x6 - 2*x1*tau + 4*x2*tau - 5/2*x3*tau - 4*x4*tau + 2*tau^2
-4*x1*x2 + 2*x1*x3 + 4*x1*x4 + x2*x3 + x2*x6 - 2*x1*tau + 4*x2*tau - 5/2*x3*tau - 4*x4*tau - 1/2*x6*tau + 2*tau^2
-x1*x3 + x1*x6 + x3*tau - x6*tau
-x1^2 + 2*x1*x4 + 2*x2^2 - 3*x2*x3 + 2*x3^2 + x5^2 - 4*x1*tau + 6*x2*tau - 5/2*x3*tau - 2*x4*tau - 14*x5*tau + 29/2*tau^2
x1*x4 + x4*x5 - x1*tau - 2*x4*tau - x5*tau + 2*tau^2
-x1*x2 + x1*x3 + x1*x4 + x3*x5 - 1/2*x1*tau + x2*tau - 2*x3*tau - x4*tau + 1/2*tau^2
x1*x4 + x2*x5 - x1*tau - x2*tau - x4*tau - 1/2*x5*tau + 3/2*tau^2
-x1*x4 + x1*x5 + x4*tau - x5*tau
x1^2 + 11*x1*x2 - 8*x1*x3 - 7*x1*x4 - x2^2 + 2*x2*x3 - 4*x3^2 + x4^2 + 7/2*x1*tau - 14*x2*tau + 15*x3*tau + 37*x4*tau - 20*x7*tau - 95/4*tau^2
-3*x1*x2 + 2*x1*x3 + 3*x1*x4 + x2*x3 + x3*x4 - 3/2*x1*tau + 3*x2*tau - 7/2*x3*tau - 3*x4*tau + 3/2*tau^2
-2*x1*x2 + x1*x3 + 3*x1*x4 + x2*x3 + x2*x4 - 2*x1*tau + x2*tau - 3/2*x3*tau - 7/2*x4*tau + 5/2*tau^2
x1^3 + x1^2*x4 + 4*x1*x2*tau - 2*x1*x4*tau - 5*x1*tau^2 - 4*x2*tau^2 + x4*tau^2 + 4*tau^3
x3^3 + 4*x1*x2*tau - 4*x1*x4*tau + 6*x2*x3*tau - 2*x3^2*tau + 2*x1*tau^2 - 4*x2*tau^2 - 3*x3*tau^2 + 4*x4*tau^2 - 2*tau^3
-1/2*x1^3 + x2*x3^2 - 1/2*x1^2*tau + 8*x1*x2*tau - 6*x1*x3*tau - 6*x1*x4*tau + 4*x2*x3*tau - 1/2*x3^2*tau + 9/2*x1*tau^2 - 8*x2*tau^2 + 4*x3*tau^2 + 6*x4*tau^2 - 7/2*tau^3
-x1^3 + x1*x3^2 - x1^2*tau + 12*x1*x2*tau - 8*x1*x3*tau - 8*x1*x4*tau - x3^2*tau + 7*x1*tau^2 - 12*x2*tau^2 + 8*x3*tau^2 + 8*x4*tau^2 - 5*tau^3
-1/2*x1^3 + x2^2*x3 - 1/2*x1^2*tau + 8*x1*x2*tau - 6*x1*x3*tau - 6*x1*x4*tau + 3*x2*x3*tau + 9/2*x1*tau^2 - 8*x2*tau^2 + 17/4*x3*tau^2 + 6*x4*tau^2 - 7/2*tau^3
-x1^3 + x1*x2*x3 - x1^2*tau + 12*x1*x2*tau - 17/2*x1*x3*tau - 8*x1*x4*tau - x2*x3*tau + 7*x1*tau^2 - 12*x2*tau^2 + 17/2*x3*tau^2 + 8*x4*tau^2 - 5*tau^3
x1^2*x3 + 12*x1*x2*tau - 6*x1*x3*tau - 12*x1*x4*tau + 6*x1*tau^2 - 12*x2*tau^2 + 5*x3*tau^2 + 12*x4*tau^2 - 6*tau^3
1/2*x1^3 + x2^3 + 1/2*x1^2*tau + 12*x1*x2*tau - 6*x1*x3*tau - 2*x1*x4*tau + 5/2*x2^2*tau - 13/2*x1*tau^2 - 61/4*x2*tau^2 + 6*x3*tau^2 + 2*x4*tau^2 + 51/8*tau^3
-3/2*x1^3 + x1*x2^2 - 3/2*x1^2*tau + 7*x1*x2*tau - 6*x1*x3*tau - 10*x1*x4*tau - x2^2*tau + 55/4*x1*tau^2 - 7*x2*tau^2 + 6*x3*tau^2 + 10*x4*tau^2 - 43/4*tau^3
1/2*x1^3 + x1^2*x2 + 14*x1*x2*tau - 6*x1*x3*tau - 10*x1*x4*tau + 1/2*x1*tau^2 - 15*x2*tau^2 + 6*x3*tau^2 + 10*x4*tau^2 - tau^3
x1^4 - 6*x1^2*tau^2 - 32*x1*x2*tau^2 + 64*x1*x4*tau^2 - 40*x1*tau^3 + 32*x2*tau^3 - 64*x4*tau^3 + 45*tau^4
)FIX";
const char* k_points8_dim7 = R"FIX(
1 1/2 2 1 1 0 1/2
1 -7/2 0 1 1 0 1/2
-3 1/2 0 1 1 0 1/2
1 1/2 0 1 1 0 1/2
-7 -15/2 -8 1 1 -8 1/2
1 1/2 0 1 1 -2 1/2
1 1/2 0 1 13 0 1/2
-7 17/2 0 9 9 0 1/2
)FIX";
const char* k_jg5 = R"FIX(
x5^2
x4*x5
x3*x5
x2*x5
x1*x5
x4^2
x3*x4
x2*x4
x1*x4
x3^2
x2^2*x3
x1*x2*x3
x1^2*x3
x2^3
x1*x2^2
x1^2*x2
x1^4
)FIX";
const char* k_jlex5 = R"FIX(
x5
x4
x3
x2
x1^12
)FIX";
const char* k_f17_dim5 = R"FIX(
4*x1^2 + 17/3*x1*x2 - 83/12*x1*x3 - 23/4*x2*x3 + x5^2
x1*x2 - 5/4*x1*x3 - 3/4*x2*x3 + x4*x5
-5*x1^2 - 28/9*x1*x2 + 71/18*x1*x3 + x2^2 + 25/6*x2*x3 + x4^2
-x1*x2 + 3/4*x1*x3 - 3/4*x2*x3 + x3*x5
-x2*x3 + x3*x4
2*x1^2 + 71/18*x1*x2 - 317/72*x1*x3 - 85/24*x2*x3 + x3^2
x1*x2 - 5/4*x1*x3 - 3/4*x2*x3 + x2*x5
x1*x2 - x1*x3 - x2*x3 + x2*x4
-x1*x2 + 1/4*x1*x3 + x1*x5 - 1/4*x2*x3
-x1*x2 + x1*x4
x1^3 + x2^2*x3
5/9*x1^3 + x2^3
-11/9*x1^3 + x1*x2*x3
-8/9*x1^3 + x1*x2^2
x1^3 + x1^2*x3
2/3*x1^3 + x1^2*x2
x1^4
)FIX";
const char* k_gT_dim5 = R"FIX(
4*x1^2 + 17/3*x1*x2 - 83/12*x1*x3 - 23/4*x2*x3 + x5^2
x1*x2 - 5/4*x1*x3 - 3/4*x2*x3 + x4*x5
-5*x1^2 - 28/9*x1*x2 + 71/18*x1*x3 + x2^2 + 25/6*x2*x3 + x4^2 + x2*T - x4*T
-x1*x2 + 3/4*x1*x3 - 3/4*x2*x3 + x3*x5
-x2*x3 + x3*x4
2*x1^2 + 71/18*x1*x2 - 317/72*x1*x3 - 85/24*x2*x3 + x3^2
x1*x2 - 5/4*x1*x3 - 3/4*x2*x3 + x2*x5
x1*x2 - x1*x3 - x2*x3 + x2*x4
-x1*x2 + 1/4*x1*x3 + x1*x5 - 1/4*x2*x3
-x1*x2 + x1*x4
x1^3 + x2^2*x3
5/9*x1^3 + x2^3 + x1*x2*T - x1*x3*T + x2^2*T - x2*x3*T
-11/9*x1^3 + x1*x2*x3
-8/9*x1^3 + x1*x2^2
x1^3 + x1^2*x3
2/3*x1^3 + x1^2*x2
x1^4
)FIX";
const char* k_points3_dim5 = R"FIX(
0 0 0 1 0
0 0 0 0 0
0 -1 0 0 0
)FIX";
const char* k_appendix_u = R"FIX(
u1_8 := c1_1*c32_1 + c1_2*c28_1^2 + c1_3*c28_1*c31_1 + c1_4*c31_1^2 + c1_5*c22_1 + c1_6*c28_1 + c1_7*c31_1 + c1_8 - c7_1^2*c32_1^2 - 2*c7_1*c7_2*c28_1^2*c32_1 - 2*c7_1*c7_3*c28_1*c31_1*c32_1 - 2*c7_1*c7_4*c31_1^2*c32_1 - 2*c7_1*c7_5*c22_1*c32_1 - 2*c7_1*c7_6*c28_1*c32_1 - 2*c7_1*c7_7*c31_1*c32_1 - 2*c7_1*c7_8*c32_1 - c7_2^2*c28_1^4 - 2*c7_2*c7_3*c28_1^3*c31_1 - 2*c7_2*c7_4*c28_1^2*c31_1^2 - 2*c7_2*c7_5*c22_1*c28_1^2 - 2*c7_2*c7_6*c28_1^3 - 2*c7_2*c7_7*c28_1^2*c31_1 - 2*c7_2*c7_8*c28_1^2 - c7_3^2*c28_1^2*c31_1^2 - 2*c7_3*c7_4*c28_1*c31_1^3 - 2*c7_3*c7_5*c22_1*c28_1*c31_1 - 2*c7_3*c7_6*c28_1^2*c31_1 - 2*c7_3*c7_7*c28_1*c31_1^2 - 2*c7_3*c7_8*c28_1*c31_1 - c7_4^2*c31_1^4 - 2*c7_4*c7_5*c22_1*c31_1^2 - 2*c7_4*c7_6*c28_1*c31_1^2 - 2*c7_4*c7_7*c31_1^3 - 2*c7_4*c7_8*c31_1^2 - c7_5^2*c22_1^2 - 2*c7_5*c7_6*c22_1*c28_1 - 2*c7_5*c7_7*c22_1*c31_1 - 2*c7_5*c7_8*c22_1 - c7_6^2*c28_1^2 - 2*c7_6*c7_7*c28_1*c31_1 - 2*c7_6*c7_8*c28_1 - c7_7^2*c31_1^2 - 2*c7_7*c7_8*c31_1 - c7_8^2
u2_8 := c2_1*c32_1 + c2_2*c28_1^2 + c2_3*c28_1*c31_1 + c2_4*c31_1^2 + c2_5*c22_1 + c2_6*c28_1 + c2_7*c31_1 + c2_8 - c7_1*c13_1*c32_1^2 - c7_1*c13_2*c28_1^2*c32_1 - c7_1*c13_3*c28_1*c31_1*c32_1 - c7_1*c13_4*c31_1^2*c32_1 - c7_1*c13_5*c22_1*c32_1 - c7_1*c13_6*c28_1*c32_1 - c7_1*c13_7*c31_1*c32_1 - c7_1*c13_8*c32_1 - c7_2*c13_1*c28_1^2*c32_1 - c7_2*c13_2*c28_1^4 - c7_2*c13_3*c28_1^3*c31_1 - c7_2*c13_4*c28_1^2*c31_1^2 - c7_2*c13_5*c22_1*c28_1^2 - c7_2*c13_6*c28_1^3 - c7_2*c13_7*c28_1^2*c31_1 - c7_2*c13_8*c28_1^2 - c7_3*c13_1*c28_1*c31_1*c32_1 - c7_3*c13_2*c28_1^3*c31_1 - c7_3*c13_3*c28_1^2*c31_1^2 - c7_3*c13_4*c28_1*c31_1^3 - c7_3*c13_5*c22_1*c28_1*c31_1 - c7_3*c13_6*c28_1^2*c31_1 - c7_3*c13_7*c28_1*c31_1^2 - c7_3*c13_8*c28_1*c31_1 - c7_4*c13_1*c31_1^2*c32_1 - c7_4*c13_2*c28_1^2*c31_1^2 - c7_4*c13_3*c28_1*c31_1^3 - c7_4*c13_4*c31_1^4 - c7_4*c13_5*c22_1*c31_1^2 - c7_4*c13_6*c28_1*c31_1^2 - c7_4*c13_7*c31_1^3 - c7_4*c13_8*c31_1^2 - c7_5*c13_1*c22_1*c32_1 - c7_5*c13_2*c22_1*c28_1^2 - c7_5*c13_3*c22_1*c28_1*c31_1 - c7_5*c13_4*c22_1*c31_1^2 - c7_5*c13_5*c22_1^2 - c7_5*c13_6*c22_1*c28_1 - c7_5*c13_7*c22_1*c31_1 - c7_5*c13_8*c22_1 - c7_6*c13_1*c28_1*c32_1 - c7_6*c13_2*c28_1^3 - c7_6*c13_3*c28_1^2*c31_1 - c7_6*c13_4*c28_1*c31_1^2 - c7_6*c13_5*c22_1*c28_1 - c7_6*c13_6*c28_1^2 - c7_6*c13_7*c28_1*c31_1 - c7_6*c13_8*c28_1 - c7_7*c13_1*c31_1*c32_1 - c7_7*c13_2*c28_1^2*c31_1 - c7_7*c13_3*c28_1*c31_1^2 - c7_7*c13_4*c31_1^3 - c7_7*c13_5*c22_1*c31_1 - c7_7*c13_6*c28_1*c31_1 - c7_7*c13_7*c31_1^2 - c7_7*c13_8*c31_1 - c7_8*c13_1*c32_1 - c7_8*c13_2*c28_1^2 - c7_8*c13_3*c28_1*c31_1 - c7_8*c13_4*c31_1^2 - c7_8*c13_5*c22_1 - c7_8*c13_6*c28_1 - c7_8*c13_7*c31_1 - c7_8*c13_8
u3_8 := c3_1*c32_1 + c3_2*c28_1^2 + c3_3*c28_1*c31_1 + c3_4*c31_1^2 + c3_5*c22_1 + c3_6*c28_1 + c3_7*c31_1 + c3_8 - c7_1*c18_1*c32_1^2 - c7_1*c18_2*c28_1^2*c32_1 - c7_1*c18_3*c28_1*c31_1*c32_1 - c7_1*c18_4*c31_1^2*c32_1 - c7_1*c18_5*c22_1*c32_1 - c7_1*c18_6*c28_1*c32_1 - c7_1*c18_7*c31_1*c32_1 - c7_1*c18_8*c32_1 - c7_2*c18_1*c28_1^2*c32_1 - c7_2*c18_2*c28_1^4 - c7_2*c18_3*c28_1^3*c31_1 - c7_2*c18_4*c28_1^2*c31_1^2 - c7_2*c18_5*c22_1*c28_1^2 - c7_2*c18_6*c28_1^3 - c7_2*c18_7*c28_1^2*c31_1 - c7_2*c18_8*c28_1^2 - c7_3*c18_1*c28_1*c31_1*c32_1 - c7_3*c18_2*c28_1^3*c31_1 - c7_3*c18_3*c28_1^2*c31_1^2 - c7_3*c18_4*c28_1*c31_1^3 - c7_3*c18_5*c22_1*c28_1*c31_1 - c7_3*c18_6*c28_1^2*c31_1 - c7_3*c18_7*c28_1*c31_1^2 - c7_3*c18_8*c28_1*c31_1 - c7_4*c18_1*c31_1^2*c32_1 - c7_4*c18_2*c28_1^2*c31_1^2 - c7_4*c18_3*c28_1*c31_1^3 - c7_4*c18_4*c31_1^4 - c7_4*c18_5*c22_1*c31_1^2 - c7_4*c18_6*c28_1*c31_1^2 - c7_4*c18_7*c31_1^3 - c7_4*c18_8*c31_1^2 - c7_5*c18_1*c22_1*c32_1 - c7_5*c18_2*c22_1*c28_1^2 - c7_5*c18_3*c22_1*c28_1*c31_1 - c7_5*c18_4*c22_1*c31_1^2 - c7_5*c18_5*c22_1^2 - c7_5*c18_6*c22_1*c28_1 - c7_5*c18_7*c22_1*c31_1 - c7_5*c18_8*c22_1 - c7_6*c18_1*c28_1*c32_1 - c7_6*c18_2*c28_1^3 - c7_6*c18_3*c28_1^2*c31_1 - c7_6*c18_4*c28_1*c31_1^2 - c7_6*c18_5*c22_1*c28_1 - c7_6*c18_6*c28_1^2 - c7_6*c18_7*c28_1*c31_1 - c7_6*c18_8*c28_1 - c7_7*c18_1*c31_1*c32_1 - c7_7*c18_2*c28_1^2*c31_1 - c7_7*c18_3*c28_1*c31_1^2 - c7_7*c18_4*c31_1^3 - c7_7*c18_5*c22_1*c31_1 - c7_7*c18_6*c28_1*c31_1 - c7_7*c18_7*c31_1^2 - c7_7*c18_8*c31_1 - c7_8*c18_1*c32_1 - c7_8*c18_2*c28_1^2 - c7_8*c18_3*c28_1*c31_1 - c7_8*c18_4*c31_1^2 - c7_8*c18_5*c22_1 - c7_8*c18_6*c28_1 - c7_8*c18_7*c31_1 - c7_8*c18_8
u4_8 := c4_1*c32_1 + c4_2*c28_1^2 + c4_3*c28_1*c31_1 + c4_4*c31_1^2 + c4_5*c22_1 + c4_6*c28_1 + c4_7*c31_1 + c4_8 - c7_1*c22_1*c32_1 - c7_2*c22_1*c28_1^2 - c7_3*c22_1*c28_1*c31_1 - c7_4*c22_1*c31_1^2 - c7_5*c22_1^2 - c7_6*c22_1*c28_1 - c7_7*c22_1*c31_1 - c7_8*c22_1
u5_8 := c5_1*c32_1 + c5_2*c28_1^2 + c5_3*c28_1*c31_1 + c5_4*c31_1^2 + c5_5*c22_1 + c5_6*c28_1 + c5_7*c31_1 + c5_8 - c7_1*c28_1*c32_1 - c7_2*c28_1^3 - c7_3*c28_1^2*c31_1 - c7_4*c28_1*c31_1^2 - c7_5*c22_1*c28_1 - c7_6*c28_1^2 - c7_7*c28_1*c31_1 - c7_8*c28_1
u6_8 := c6_1*c32_1 + c6_2*c28_1^2 + c6_3*c28_1*c31_1 + c6_4*c31_1^2 + c6_5*c22_1 + c6_6*c28_1 + c6_7*c31_1 + c6_8 - c7_1*c31_1*c32_1 - c7_2*c28_1^2*c31_1 - c7_3*c28_1*c31_1^2 - c7_4*c31_1^3 - c7_5*c22_1*c31_1 - c7_6*c28_1*c31_1 - c7_7*c31_1^2 - c7_8*c31_1
u8_8 := c8_1*c32_1 + c8_2*c28_1^2 + c8_3*c28_1*c31_1 + c8_4*c31_1^2 + c8_5*c22_1 + c8_6*c28_1 + c8_7*c31_1 + c8_8 - c13_1^2*c32_1^2 - 2*c13_1*c13_2*c28_1^2*c32_1 - 2*c13_1*c13_3*c28_1*c31_1*c32_1 - 2*c13_1*c13_4*c31_1^2*c32_1 - 2*c13_1*c13_5*c22_1*c32_1 - 2*c13_1*c13_6*c28_1*c32_1 - 2*c13_1*c13_7*c31_1*c32_1 - 2*c13_1*c13_8*c32_1 - c13_2^2*c28_1^4 - 2*c13_2*c13_3*c28_1^3*c31_1 - 2*c13_2*c13_4*c28_1^2*c31_1^2 - 2*c13_2*c13_5*c22_1*c28_1^2 - 2*c13_2*c13_6*c28_1^3 - 2*c13_2*c13_7*c28_1^2*c31_1 - 2*c13_2*c13_8*c28_1^2 - c13_3^2*c28_1^2*c31_1^2 - 2*c13_3*c13_4*c28_1*c31_1^3 - 2*c13_3*c13_5*c22_1*c28_1*c31_1 - 2*c13_3*c13_6*c28_1^2*c31_1 - 2*c13_3*c13_7*c28_1*c31_1^2 - 2*c13_3*c13_8*c28_1*c31_1 - c13_4^2*c31_1^4 - 2*c13_4*c13_5*c22_1*c31_1^2 - 2*c13_4*c13_6*c28_1*c31_1^2 - 2*c13_4*c13_7*c31_1^3 - 2*c13_4*c13_8*c31_1^2 - c13_5^2*c22_1^2 - 2*c13_5*c13_6*c22_1*c28_1 - 2*c13_5*c13_7*c22_1*c31_1 - 2*c13_5*c13_8*c22_1 - c13_6^2*c28_1^2 - 2*c13_6*c13_7*c28_1*c31_1 - 2*c13_6*c13_8*c28_1 - c13_7^2*c31_1^2 - 2*c13_7*c13_8*c31_1 - c13_8^2
u9_8 := c9_1*c32_1 + c9_2*c28_1^2 + c9_3*c28_1*c31_1 + c9_4*c31_1^2 + c9_5*c22_1 + c9_6*c28_1 + c9_7*c31_1 + c9_8 - c13_1*c18_1*c32_1^2 - c13_1*c18_2*c28_1^2*c32_1 - c13_1*c18_3*c28_1*c31_1*c32_1 - c13_1*c18_4*c31_1^2*c32_1 - c13_1*c18_5*c22_1*c32_1 - c13_1*c18_6*c28_1*c32_1 - c13_1*c18_7*c31_1*c32_1 - c13_1*c18_8*c32_1 - c13_2*c18_1*c28_1^2*c32_1 - c13_2*c18_2*c28_1^4 - c13_2*c18_3*c28_1^3*c31_1 - c13_2*c18_4*c28_1^2*c31_1^2 - c13_2*c18_5*c22_1*c28_1^2 - c13_2*c18_6*c28_1^3 - c13_2*c18_7*c28_1^2*c31_1 - c13_2*c18_8*c28_1^2 - c13_3*c18_1*c28_1*c31_1*c32_1 - c13_3*c18_2*c28_1^3*c31_1 - c13_3*c18_3*c28_1^2*c31_1^2 - c13_3*c18_4*c28_1*c31_1^3 - c13_3*c18_5*c22_1*c28_1*c31_1 - c13_3*c18_6*c28_1^2*c31_1 - c13_3*c18_7*c28_1*c31_1^2 - c13_3*c18_8*c28_1*c31_1 - c13_4*c18_1*c31_1^2*c32_1 - c13_4*c18_2*c28_1^2*c31_1^2 - c13_4*c18_3*c28_1*c31_1^3 - c13_4*c18_4*c31_1^4 - c13_4*c18_5*c22_1*c31_1^2 - c13_4*c18_6*c28_1*c31_1^2 - c13_4*c18_7*c31_1^3 - c13_4*c18_8*c31_1^2 - c13_5*c18_1*c22_1*c32_1 - c13_5*c18_2*c22_1*c28_1^2 - c13_5*c18_3*c22_1*c28_1*c31_1 - c13_5*c18_4*c22_1*c31_1^2 - c13_5*c18_5*c22_1^2 - c13_5*c18_6*c22_1*c28_1 - c13_5*c18_7*c22_1*c31_1 - c13_5*c18_8*c22_1 - c13_6*c18_1*c28_1*c32_1 - c13_6*c18_2*c28_1^3 - c13_6*c18_3*c28_1^2*c31_1 - c13_6*c18_4*c28_1*c31_1^2 - c13_6*c18_5*c22_1*c28_1 - c13_6*c18_6*c28_1^2 - c13_6*c18_7*c28_1*c31_1 - c13_6*c18_8*c28_1 - c13_7*c18_1*c31_1*c32_1 - c13_7*c18_2*c28_1^2*c31_1 - c13_7*c18_3*c28_1*c31_1^2 - c13_7*c18_4*c31_1^3 - c13_7*c18_5*c22_1*c31_1 - c13_7*c18_6*c28_1*c31_1 - c13_7*c18_7*c31_1^2 - c13_7*c18_8*c31_1 - c13_8*c18_1*c32_1 - c13_8*c18_2*c28_1^2 - c13_8*c18_3*c28_1*c31_1 - c13_8*c18_4*c31_1^2 - c13_8*c18_5*c22_1 - c13_8*c18_6*c28_1 - c13_8*c18_7*c31_1 - c13_8*c18_8
u10_8 := c10_1*c32_1 + c10_2*c28_1^2 + c10_3*c28_1*c31_1 + c10_4*c31_1^2 + c10_5*c22_1 + c10_6*c28_1 + c10_7*c31_1 + c10_8 - c13_1*c22_1*c32_1 - c13_2*c22_1*c28_1^2 - c13_3*c22_1*c28_1*c31_1 - c13_4*c22_1*c31_1^2 - c13_5*c22_1^2 - c13_6*c22_1*c28_1 - c13_7*c22_1*c31_1 - c13_8*c22_1
u11_8 := c11_1*c32_1 + c11_2*c28_1^2 + c11_3*c28_1*c31_1 + c11_4*c31_1^2 + c11_5*c22_1 + c11_6*c28_1 + c11_7*c31_1 + c11_8 - c13_1*c28_1*c32_1 - c13_2*c28_1^3 - c13_3*c28_1^2*c31_1 - c13_4*c28_1*c31_1^2 - c13_5*c22_1*c28_1 - c13_6*c28_1^2 - c13_7*c28_1*c31_1 - c13_8*c28_1
u12_8 := c12_1*c32_1 + c12_2*c28_1^2 + c12_3*c28_1*c31_1 + c12_4*c31_1^2 + c12_5*c22_1 + c12_6*c28_1 + c12_7*c31_1 + c12_8 - c13_1*c31_1*c32_1 - c13_2*c28_1^2*c31_1 - c13_3*c28_1*c31_1^2 - c13_4*c31_1^3 - c13_5*c22_1*c31_1 - c13_6*c28_1*c31_1 - c13_7*c31_1^2 - c13_8*c31_1
u14_8 := c14_1*c32_1 + c14_2*c28_1^2 + c14_3*c28_1*c31_1 + c14_4*c31_1^2 + c14_5*c22_1 + c14_6*c28_1 + c14_7*c31_1 + c14_8 - c18_1^2*c32_1^2 - 2*c18_1*c18_2*c28_1^2*c32_1 - 2*c18_1*c18_3*c28_1*c31_1*c32_1 - 2*c18_1*c18_4*c31_1^2*c32_1 - 2*c18_1*c18_5*c22_1*c32_1 - 2*c18_1*c18_6*c28_1*c32_1 - 2*c18_1*c18_7*c31_1*c32_1 - 2*c18_1*c18_8*c32_1 - c18_2^2*c28_1^4 - 2*c18_2*c18_3*c28_1^3*c31_1 - 2*c18_2*c18_4*c28_1^2*c31_1^2 - 2*c18_2*c18_5*c22_1*c28_1^2 - 2*c18_2*c18_6*c28_1^3 - 2*c18_2*c18_7*c28_1^2*c31_1 - 2*c18_2*c18_8*c28_1^2 - c18_3^2*c28_1^2*c31_1^2 - 2*c18_3*c18_4*c28_1*c31_1^3 - 2*c18_3*c18_5*c22_1*c28_1*c31_1 - 2*c18_3*c18_6*c28_1^2*c31_1 - 2*c18_3*c18_7*c28_1*c31_1^2 - 2*c18_3*c18_8*c28_1*c31_1 - c18_4^2*c31_1^4 - 2*c18_4*c18_5*c22_1*c31_1^2 - 2*c18_4*c18_6*c28_1*c31_1^2 - 2*c18_4*c18_7*c31_1^3 - 2*c18_4*c18_8*c31_1^2 - c18_5^2*c22_1^2 - 2*c18_5*c18_6*c22_1*c28_1 - 2*c18_5*c18_7*c22_1*c31_1 - 2*c18_5*c18_8*c22_1 - c18_6^2*c28_1^2 - 2*c18_6*c18_7*c28_1*c31_1 - 2*c18_6*c18_8*c28_1 - c18_7^2*c31_1^2 - 2*c18_7*c18_8*c31_1 - c18_8^2
u15_8 := c15_1*c32_1 + c15_2*c28_1^2 + c15_3*c28_1*c31_1 + c15_4*c31_1^2 + c15_5*c22_1 + c15_6*c28_1 + c15_7*c31_1 + c15_8 - c18_1*c22_1*c32_1 - c18_2*c22_1*c28_1^2 - c18_3*c22_1*c28_1*c31_1 - c18_4*c22_1*c31_1^2 - c18_5*c22_1^2 - c18_6*c22_1*c28_1 - c18_7*c22_1*c31_1 - c18_8*c22_1
u16_8 := c16_1*c32_1 + c16_2*c28_1^2 + c16_3*c28_1*c31_1 + c16_4*c31_1^2 + c16_5*c22_1 + c16_6*c28_1 + c16_7*c31_1 + c16_8 - c18_1*c28_1*c32_1 - c18_2*c28_1^3 - c18_3*c28_1^2*c31_1 - c18_4*c28_1*c31_1^2 - c18_5*c22_1*c28_1 - c18_6*c28_1^2 - c18_7*c28_1*c31_1 - c18_8*c28_1
u17_8 := c17_1*c32_1 + c17_2*c28_1^2 + c17_3*c28_1*c31_1 + c17_4*c31_1^2 + c17_5*c22_1 + c17_6*c28_1 + c17_7*c31_1 + c17_8 - c18_1*c31_1*c32_1 - c18_2*c28_1^2*c31_1 - c18_3*c28_1*c31_1^2 - c18_4*c31_1^3 - c18_5*c22_1*c31_1 - c18_6*c28_1*c31_1 - c18_7*c31_1^2 - c18_8*c31_1
u19_8 := c19_1*c32_1 + c19_2*c28_1^2 + c19_3*c28_1*c31_1 + c19_4*c31_1^2 + c19_5*c22_1 + c19_6*c28_1 + c19_7*c31_1 + c19_8 - c22_1^2
u20_8 := c20_1*c32_1 + c20_2*c28_1^2 + c20_3*c28_1*c31_1 + c20_4*c31_1^2 + c20_5*c22_1 + c20_6*c28_1 + c20_7*c31_1 + c20_8 - c22_1*c28_1
u21_8 := c21_1*c32_1 + c21_2*c28_1^2 + c21_3*c28_1*c31_1 + c21_4*c31_1^2 + c21_5*c22_1 + c21_6*c28_1 + c21_7*c31_1 + c21_8 - c22_1*c31_1
u23_1 := c23_1 - c28_1^3
u24_1 := c24_1 - c28_1^2*c31_1
u25_1 := c25_1 - c28_1^2
u26_1 := c26_1 - c28_1*c31_1^2
u27_1 := c27_1 - c28_1*c31_1
u29_1 := c29_1 - c31_1^3
u30_1 := c30_1 - c31_1^2
)FIX";
const char* k_appendix_C0 = R"FIX(
c1_1 = -3
c1_2 = 2
c1_3 = -3
c1_4 = 0
c1_5 = 1
c1_6 = -2
c1_7 = -3
c2_1 = -1
c2_2 = -1
c2_3 = -1
c2_4 = -2
c2_5 = -1
c2_6 = -3
c2_7 = -3
c3_1 = 0
c3_2 = -2
c3_3 = -1
c3_4 = -2
c3_5 = -1
c3_6 = -2
c3_7 = 1
c4_1 = 1
c4_2 = -1
c4_3 = -2
c4_4 = 1
c4_5 = -1
c4_6 = -1
c4_7 = -3
c5_1 = -2
c5_2 = 2
c5_3 = 2
c5_4 = -2
c5_5 = 0
c5_6 = 1
c5_7 = -1
c6_1 = -1
c6_2 = -3
c6_3 = -2
c6_4 = 2
c6_5 = -2
c6_6 = -3
c6_7 = -2
c7_1 = -2
c7_2 = -1
c7_3 = 0
c7_4 = 0
c7_5 = -1
c7_6 = 1
c7_7 = -2
c7_8 = 1
c8_1 = 1
c8_2 = 2
c8_3 = 0
c8_4 = 0
c8_5 = -3
c8_6 = -1
c8_7 = -2
c9_1 = 1
c9_2 = -3
c9_3 = 0
c9_4 = 0
c9_5 = 0
c9_6 = -2
c9_7 = 0
c10_1 = 0
c10_2 = -2
c10_3 = -2
c10_4 = -1
c10_5 = -3
c10_6 = -3
c10_7 = 2
c11_1 = 2
c11_2 = -3
c11_3 = 0
c11_4 = 0
c11_5 = -1
c11_6 = -2
c11_7 = 1
c12_1 = -1
c12_2 = 2
c12_3 = -3
c12_4 = -2
c12_5 = 2
c12_6 = 1
c12_7 = -2
c13_1 = 1
c13_2 = 0
c13_3 = 0
c13_4 = 2
c13_5 = 0
c13_6 = 0
c13_7 = -1
c13_8 = 2
c14_1 = 2
c14_2 = -2
c14_3 = -3
c14_4 = 1
c14_5 = 0
c14_6 = -1
c14_7 = -2
c15_1 = 1
c15_2 = -1
c15_3 = 0
c15_4 = -1
c15_5 = -3
c15_6 = -2
c15_7 = -2
c16_1 = -2
c16_2 = 2
c16_3 = -1
c16_4 = -2
c16_5 = -3
c16_6 = -3
c16_7 = -3
c17_1 = -1
c17_2 = -2
c17_3 = -2
c17_4 = -3
c17_5 = -3
c17_6 = -2
c17_7 = -1
c18_1 = -3
c18_2 = -3
c18_3 = 2
c18_4 = -3
c18_5 = -2
c18_6 = 1
c18_7 = -2
c18_8 = 1
c19_1 = 0
c19_2 = -1
c19_3 = -3
c19_4 = 0
c19_5 = 0
c19_6 = -3
c19_7 = 2
c20_1 = 1
c20_2 = 0
c20_3 = -3
c20_4 = -2
c20_5 = 2
c20_6 = 0
c20_7 = 2
c21_1 = 1
c21_2 = 0
c21_3 = 2
c21_4 = 0
c21_5 = 0
c21_6 = 0
c21_7 = -1
c22_1 = -3
c28_1 = 1
c31_1 = -3
c32_1 = -1
)FIX";
const char* k_appendix_elim = R"FIX(
c1_8 = 126
c2_8 = 270
c3_8 = -209
c4_8 = -60
c5_8 = 28
c6_8 = -67
c8_8 = 469
c9_8 = -412
c10_8 = -61
c11_8 = 29
c12_8 = -61
c14_8 = 342
c15_8 = 55
c16_8 = -23
c17_8 = 69
c19_8 = 10
c20_8 = 19
c21_8 = 13
c23_1 = 1
c24_1 = -3
c25_1 = 1
c26_1 = 9
c27_1 = -3
c29_1 = -27
c30_1 = 9
)FIX";
const char* k_ideal_a = R"FIX(
3*x1^3 - 126*x1^2 + 3*x1*x2 + 2*x1*x3 - x1*x4 + 3*x2*x3 - 2*x3^2 + x7^2
x1^3 - 270*x1^2 + 3*x1*x2 + 3*x1*x3 + x1*x4 + 2*x2^2 + x2*x3 + x3^2 + x6*x7
209*x1^2 - x1*x2 + 2*x1*x3 + x1*x4 + 2*x2^2 + x2*x3 + 2*x3^2 + x5*x7
-x1^3 + 60*x1^2 + 3*x1*x2 + x1*x3 + x1*x4 - x2^2 + 2*x2*x3 + x3^2 + x4*x7
2*x1^3 - 28*x1^2 + x1*x2 - x1*x3 + 2*x2^2 - 2*x2*x3 - 2*x3^2 + x3*x7
x1^3 + 67*x1^2 + 2*x1*x2 + 3*x1*x3 + 2*x1*x4 - 2*x2^2 + 2*x2*x3 + x2*x7 + 3*x3^2
2*x1^3 - x1^2 + 2*x1*x2 - x1*x3 + x1*x4 + x1*x7 + x3^2
-x1^3 - 469*x1^2 + 2*x1*x2 + x1*x3 + 3*x1*x4 - 2*x3^2 + x6^2
-x1^3 + 412*x1^2 + 2*x1*x3 + 3*x3^2 + x5*x6
61*x1^2 - 2*x1*x2 + 3*x1*x3 + 3*x1*x4 + x2^2 + 2*x2*x3 + 2*x3^2 + x4*x6
-2*x1^3 - 29*x1^2 - x1*x2 + 2*x1*x3 + x1*x4 + 3*x3^2 + x3*x6
x1^3 + 61*x1^2 + 2*x1*x2 - x1*x3 - 2*x1*x4 + 2*x2^2 + 3*x2*x3 + x2*x6 - 2*x3^2
-x1^3 - 2*x1^2 + x1*x2 + x1*x6 - 2*x2^2
-2*x1^3 - 342*x1^2 + 2*x1*x2 + x1*x3 - x2^2 + 3*x2*x3 + 2*x3^2 + x5^2
-x1^3 - 55*x1^2 + 2*x1*x2 + 2*x1*x3 + 3*x1*x4 + x2^2 + x3^2 + x4*x5
2*x1^3 + 23*x1^2 + 3*x1*x2 + 3*x1*x3 + 3*x1*x4 + 2*x2^2 + x2*x3 - 2*x3^2 + x3*x5
x1^3 - 69*x1^2 + x1*x2 + 2*x1*x3 + 3*x1*x4 + 3*x2^2 + 2*x2*x3 + x2*x5 + 2*x3^2
3*x1^3 - x1^2 + 2*x1*x2 - x1*x3 + 2*x1*x4 + x1*x5 + 3*x2^2 - 2*x2*x3 + 3*x3^2
-10*x1^2 - 2*x1*x2 + 3*x1*x3 + 3*x2*x3 + x3^2 + x4^2
-x1^3 - 19*x1^2 - 2*x1*x2 - 2*x1*x4 + 2*x2^2 + 3*x2*x3 + x3*x4
-x1^3 - 13*x1^2 + x1*x2 - 2*x2*x3 + x2*x4
3*x1^3 + x1^2*x4
-x1^3 + x3^3
3*x1^3 + x2*x3^2
-x1^3 + x1*x3^2
-9*x1^3 + x2^2*x3
3*x1^3 + x1*x2*x3
-x1^3 + x1^2*x3
27*x1^3 + x2^3
-9*x1^3 + x1*x2^2
3*x1^3 + x1^2*x2
x1^4 + x1^3
)FIX";
const char* k_f3_paramset = R"FIX(
c1_2
c1_3
c1_4
c1_5
c1_6
c2_2
c2_3
c2_4
c2_5
c2_6
c3_2
c3_3
c3_4
c3_5
c3_6
c4_2
c4_3
c4_4
c4_5
c4_6
c5_2
c5_3
c5_4
c5_5
c5_6
c6_2
c6_3
c6_4
c6_5
c6_6
c7_2
c7_3
c7_4
c7_5
c7_6
c7_7
c8_2
c8_3
c8_4
c8_5
c8_6
c9_2
c9_3
c9_4
c9_5
c9_6
c10_2
c10_3
c10_4
c10_5
c10_6
c11_2
c11_3
c11_4
c11_5
c11_6
c12_2
c12_3
c12_4
c12_5
c12_6
c13_2
c13_3
c13_4
c13_5
c13_6
c13_7
c14_2
c14_3
c14_4
c14_5
c14_6
c15_2
c15_3
c15_4
c15_5
c15_6
c16_2
c16_3
c16_4
c16_5
c16_6
c17_2
c17_3
c17_4
c17_5
c17_6
c18_2
c18_3
c18_4
c18_5
c18_6
c18_7
c19_2
c19_3
c19_4
c19_5
c19_6
c20_2
c20_3
c20_4
c20_5
c20_6
c21_2
c21_3
c21_4
c21_5
c21_6
c31_1
)FIX";
const char* k_f3_point1 = R"FIX(
-2*x1*x3 + x1*x4 - 4*x2^2 - 4*x2*x3 - 2*x3^2 + x7^2
-x1*x3 + x1*x4 + x2*x3 - 3*x3^2 + x6*x7
-2*x1*x3 + 2*x1*x4 - 2*x2*x3 - 3*x3^2 + x5*x7
-x1*x3 + x1*x4 + x2^2 + x3^2 + x4*x7
-2*x1*x3 + x1*x4 + 2*x2^2 + x3*x7
x1*x4 - 3*x2^2 - 2*x2*x3 + x2*x7 - x3^2
-2*x1*x2 + 2*x1*x3 - x1*x4 + x1*x7 - 3*x2^2 + x2*x3 - 4*x3^2
-3*x1*x3 + 2*x1*x4 - 3*x2^2 + 2*x2*x3 + x6^2
-3*x1*x3 - 4*x2^2 - x2*x3 - 4*x3^2 + x5*x6
-2*x1*x3 - 4*x2^2 - 4*x2*x3 - 2*x3^2 + x4*x6
x1*x4 - 4*x2^2 - x3^2 + x3*x6
-2*x1*x3 + 2*x1*x4 + 2*x2*x3 + x2*x6 + 2*x3^2
-x1*x2 + x1*x3 + x1*x6 + x2^2 + x2*x3 + x3^2
2*x1*x3 - 2*x1*x4 + 2*x2^2 + x2*x3 - 4*x3^2 + x5^2
-2*x1*x4 - x2^2 - x2*x3 - 4*x3^2 + x4*x5
-x1*x3 + x1*x4 + 2*x2^2 - 4*x2*x3 + x3^2 + x3*x5
-4*x1*x3 + 2*x1*x4 - x2^2 + x2*x5 - 2*x3^2
-x1*x2 + x1*x4 + x1*x5 + x2^2 + 2*x2*x3 + 2*x3^2
-x1*x3 - 3*x1*x4 + 2*x2^2 - 2*x2*x3 - 4*x3^2 + x4^2
-2*x1*x3 + 2*x1*x4 + x2^2 - 4*x2*x3 + 2*x3^2 + x3*x4
-2*x1*x3 - x2^2 + 2*x2*x3 + x2*x4 + 2*x3^2
x1^2*x4
x3^3
x2*x3^2
x1*x3^2
x2^2*x3
x1*x2*x3
x1^2*x3
x2^3
x1*x2^2
-4*x1^3 + x1^2*x2
x1^4
)FIX";
const char* k_f3_point2 = R"FIX(
-x1*x3 - 3*x1*x4 - x2^2 - x2*x3 + x3^2 + x7^2
-3*x1*x3 + 2*x1*x4 - 2*x2*x3 + x3^2 + x6*x7
-4*x1*x3 - 2*x2^2 + 2*x2*x3 - x3^2 + x5*x7
-4*x1*x3 - x1*x4 - 4*x2^2 + x2*x3 - 2*x3^2 + x4*x7
-x1*x4 - 3*x3^2 + x3*x7
-x1*x3 + 2*x2^2 - x2*x3 + x2*x7 - 3*x3^2
-3*x1*x2 - 4*x1*x3 - 2*x1*x4 + x1*x7 - 4*x2^2 - x2*x3
-2*x1*x3 + 2*x1*x4 + 2*x2^2 - x2*x3 + 2*x3^2 + x6^2
x1*x3 - 4*x2^2 + 2*x3^2 + x5*x6
2*x1*x3 - 2*x2^2 - 4*x2*x3 - 2*x3^2 + x4*x6
-2*x1*x3 + 2*x1*x4 - 3*x2^2 - x2*x3 - 4*x3^2 + x3*x6
-x1*x3 - x1*x4 - 4*x2^2 + 2*x2*x3 + x2*x6 + x3^2
-2*x1*x2 + 2*x1*x3 + 2*x1*x4 + x1*x6 - x2^2 + 2*x2*x3 - x3^2
-x1*x3 + 2*x1*x4 - 2*x2^2 - 3*x3^2 + x5^2
x1*x3 - x1*x4 - 3*x2^2 + 2*x2*x3 + 2*x3^2 + x4*x5
x1*x3 - 4*x1*x4 + x2^2 - 4*x3^2 + x3*x5
2*x1*x3 + x1*x4 + x2*x3 + x2*x5 - 4*x3^2
2*x1*x3 - x1*x4 + x1*x5 + 2*x2^2 + x2*x3 - 4*x3^2
-x1*x3 + x1*x4 - 3*x2^2 - 4*x2*x3 + x3^2 + x4^2
2*x1*x3 - 4*x1*x4 + 2*x2^2 - 4*x2*x3 + x3^2 + x3*x4
-x1*x3 - 3*x2^2 + 2*x2*x3 + x2*x4 - 3*x3^2
x1^2*x4
x3^3
x2*x3^2
x1*x3^2
x2^2*x3
x1*x2*x3
x1^2*x3
x2^3
x1*x2^2
-4*x1^3 + x1^2*x2
x1^4
)FIX";

}  // namespace

const std::vector<std::pair<std::string, const char*>>& fixture_table() {
  static const std::vector<std::pair<std::string, const char*>> table = {
      {"jg7", k_jg7},
      {"jlex7", k_jlex7},
      {"cubic7", k_cubic7},
      {"f32_dim7", k_f32_dim7},
      {"gtau_dim7", k_gtau_dim7},
      {"points8_dim7", k_points8_dim7},
      {"jg5", k_jg5},
      {"jlex5", k_jlex5},
      {"f17_dim5", k_f17_dim5},
      {"gT_dim5", k_gT_dim5},
      {"points3_dim5", k_points3_dim5},
      {"appendix_u", k_appendix_u},
      {"appendix_C0", k_appendix_C0},
      {"appendix_elim", k_appendix_elim},
      {"ideal_a", k_ideal_a},
      {"f3_paramset", k_f3_paramset},
      {"f3_point1", k_f3_point1},
      {"f3_point2", k_f3_point2},
  };
  return table;
}

const char* fixture_text(const std::string& name) {
  for (const auto& [key, text] : fixture_table())
    if (key == name) return text;
  throw std::runtime_error("unknown fixture: " + name);
}

}  // namespace mkb
