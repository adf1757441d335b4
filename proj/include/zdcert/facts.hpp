#pragma once

// External zero-free facts and published constants, each with its citation.
// Logic reads constants from here; nothing numeric is duplicated elsewhere.

#include <array>
#include <string_view>

namespace zdcert::facts {

struct Fact {
  std::string_view key;
  double value;
  std::string_view citation;
};

// Zero-free regions and repulsion.
inline constexpr Fact kOneZeroRegion{"zero_free.one_zero", 0.44, "Theorem E: at most one zero with lambda <= 0.44"};
inline constexpr Fact kTwoZeroRegion{"zero_free.two_zeros", 0.702,
                                     "Theorem F: at most two zeros with lambda < 0.702, with multiplicity"};
inline constexpr Fact kSparseClassFloor{"zero_free.sparse_class", 6.0 / 7.0,
                                        "Heath-Brown Lemma 10.3: lambda_i >= 6/7 apart from two characters"};
inline constexpr Fact kRepulsionExponent{"zero_free.repulsion", 12.0 / 11.0,
                                         "Theorem G: (12/11) log(1/lambda_1) repulsion radius"};
inline constexpr Fact kCase2Other{"zero_free.case2_other", 0.74, "Xylouris tables 2, 3, 7"};
inline constexpr Fact kCase3Other{"zero_free.case3_other", 0.97, "Xylouris tables 2, 3, 7"};
inline constexpr Fact kCase4Other{"zero_free.case4_other", 1.08, "Heath-Brown tables 4, 7"};
inline constexpr Fact kCase5Other{"zero_free.case5_other", 1.18, "Heath-Brown tables 4, 7"};
inline constexpr Fact kComplexOther{"zero_free.complex_other", 1.36, "Xylouris table 7"};
inline constexpr Fact kRealExceptionalOther{"zero_free.real_other", 1.42, "Heath-Brown tables 3, 7"};
inline constexpr Fact kCase7Other{"zero_free.case7_other", 2.421, "Heath-Brown tables 4, 5"};

// Case boundaries for the leading zero.
inline constexpr Fact kCase6Floor{"case.floor6", 0.14, "case list for the a-sums"};
inline constexpr Fact kCase7Floor{"case.floor7", 0.04, "case list for the a-sums"};

// Corollary 1 thresholds and published constants.
inline constexpr Fact kLambda0{"cor1.Lambda0", 1.311, "Corollary 1"};
inline constexpr Fact kLambda1{"cor1.Lambda1", 2.421, "Corollary 1"};
inline constexpr Fact kLambda2{"cor1.Lambda2", 3.96, "Corollary 1"};
inline constexpr Fact kLambda3{"cor1.Lambda3", 5.8, "Corollary 1"};
inline constexpr Fact kE0{"cor1.E0", 22.281, "Corollary 1"};
inline constexpr Fact kE1{"cor1.E1", 15.6, "Corollary 1"};
inline constexpr Fact kE2{"cor1.E2", 10.4, "Corollary 1"};
inline constexpr Fact kE3{"cor1.E3", 7.01, "Corollary 1"};

inline constexpr std::array<Fact, 4> kThresholds{kLambda0, kLambda1, kLambda2, kLambda3};
inline constexpr std::array<Fact, 4> kEnvelopeConstants{kE0, kE1, kE2, kE3};

// Weight and exponent.
inline constexpr Fact kWeightA{"weight.A", 25.0 / 7.0, "weight A = 1/theta"};
inline constexpr Fact kTheta{"weight.theta", 0.28, "theta = 0.28"};
inline constexpr Fact kExponent{"verdict.exponent", 0.72, "Theorem 1: E(X) < X^0.72"};

// Published bounds for the tail and leading parts.
inline constexpr Fact kBMax1{"bmax.case1", 0.0722, "Lemma 6uj"};
inline constexpr Fact kBMax2{"bmax.case2", 0.0751, "Lemma 6uj"};
inline constexpr Fact kBMax3{"bmax.case3", 0.0826, "Lemma 6uj"};
// Printed as 0.715 in the lemma statement; 0.0715 is the value used in Case 7.
inline constexpr Fact kBMax4{"bmax.case4", 0.0715, "Lemma 6uj with the Case 7 value"};
inline constexpr std::array<Fact, 4> kBMax{kBMax1, kBMax2, kBMax3, kBMax4};

inline constexpr Fact kASum1{"asum.case1", 0.612, "Lemma 7uj"};
inline constexpr Fact kASum2{"asum.case2", 0.622, "Lemma 7uj"};
inline constexpr Fact kASum3{"asum.case3", 0.564, "Lemma 7uj"};
inline constexpr Fact kASum4{"asum.case4", 0.453, "Lemma 7uj"};
inline constexpr Fact kASum5{"asum.case5", 0.483, "Lemma 7uj"};
inline constexpr std::array<Fact, 5> kASum{kASum1, kASum2, kASum3, kASum4, kASum5};
inline constexpr Fact kASum4Complex{"asum.case4_complex", 0.39698, "Lemma 7uj, complex branch"};
inline constexpr Fact kASum6{"asum.case6", 0.59727, "Case 6 closed form"};
inline constexpr Fact kASumMax{"asum.max", 0.622, "Corollary to Lemma 7uj"};

inline constexpr Fact kBTotal0{"btotal.Lambda0", 6.805, "sum of b_i via Corollary 1"};
inline constexpr Fact kBTotal1{"btotal.Lambda1", 1.74516, "Case 7 sum of b_i"};

inline constexpr Fact kCase1G{"case1.G_minus", 1.56903, "Case 1 context"};
inline constexpr Fact kCase1GLambda{"case1.G_Lambda", 0.5882, "Case 1 context"};
inline constexpr Fact kCase1Psi{"case1.psi", 0.37488, "Case 1 context"};
inline constexpr Fact kCase1Xi{"case1.xi", 0.07931, "Case 1 context"};
inline constexpr Fact kCase1Delta{"case1.Delta", 0.29557, "Case 1 context"};
inline constexpr Fact kCase1D{"case1.D", 1.5575, "Theorem J for Case 1"};
inline constexpr Fact kCase1D0{"case1.D0", 2.4438, "Theorem J for Case 1"};
inline constexpr Fact kCase1Target{"case1.inversion_target", 0.71336, "Theorem K for Case 1"};
inline constexpr Fact kCase1SPrime{"case1.S_prime", 0.612, "Theorem K for Case 1"};

inline constexpr Fact kSMinus{"combine.S_minus", 0.9680218, "Cases 1-6 combination"};
inline constexpr Fact kDelta1{"combine.Delta1", 0.01465568, "Cases 1-6 surplus"};
inline constexpr Fact kDelta2{"combine.Delta2", 4.3558e-4, "Cases 1-6 surplus"};
inline constexpr Fact kSCases1to6{"combine.S", 0.9832, "Cases 1-6 total"};
inline constexpr Fact kSCases1to6Stated{"combine.S_stated", 0.9903, "Corollary for Cases 1-6"};
inline constexpr Fact kSurplusFactor{"combine.surplus_factor", 1.4092, "Cases 1-6 surplus"};
inline constexpr Fact kCase7A{"case7.a", 0.86671, "Case 7"};
inline constexpr Fact kCase7S{"case7.S", 0.99991, "Case 7"};
inline constexpr Fact kCase8Ratio{"case8.slack_ratio", 6.1, "Case 8"};
inline constexpr Fact kCase8BSum{"case8.b_sum", 0.435, "Case 8"};
inline constexpr Fact kCase8Coefficient{"case8.coefficient", 2.87, "Case 8"};

/// The Lemma 6uj zero schedule: lower bounds for the N-th zero of a class
/// with the printed kernel scale (0 where no scale is printed).
struct ScheduleFact {
  int index;
  double lambda;
  double x;
};
inline constexpr std::array<ScheduleFact, 26> kZeroSchedule{{
    {7, 1.47, 1.58},  {8, 1.61, 1.6},   {9, 1.73, 1.62},  {10, 1.85, 1.66}, {11, 1.94, 1.66}, {12, 2.05, 1.68},
    {13, 2.12, 1.68}, {14, 2.20, 1.68}, {15, 2.27, 1.68}, {16, 2.33, 1.68}, {17, 2.4, 0.0},   {18, 2.45, 0.0},
    {19, 2.51, 0.0},  {20, 2.56, 0.0},  {21, 2.61, 0.0},  {22, 2.65, 0.0},  {23, 2.7, 0.0},   {24, 2.74, 0.0},
    {25, 2.78, 0.0},  {26, 2.82, 0.0},  {27, 2.85, 0.0},  {28, 2.89, 0.0},  {29, 2.92, 0.0},  {30, 2.95, 0.0},
    {31, 2.99, 0.0},  {32, 3.0, 0.0},
}};
inline constexpr std::string_view kZeroScheduleCitation = "Lemma 6uj";
inline constexpr int kCase1ZerosBelowLambda0 = 6;

}  // namespace zdcert::facts
