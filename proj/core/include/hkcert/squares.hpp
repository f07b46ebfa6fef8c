// Constrained sums-of-squares decompositions with the classical
// (Halter-Koch) exception lists, backed by exhaustive search.
//
// The lists are complete for all n below the star threshold 5*10^10; the
// one hypothetical further exception (nonexistent under GRH) is handled by
// rejecting inputs at or beyond that threshold rather than ever branching
// on it.  The constructive path always runs the direct bounded search, so
// no result depends on the lists being complete.
#pragma once

#include "hkcert/errors.hpp"
#include "hkcert/ints.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace hkcert {

// Exclusive upper bound for every decomposition query.
inline constexpr std::int64_t kStarThreshold = 50'000'000'000;  // 5*10^10

struct SquaresDecomposition {
    std::vector<Int> parts;  // descending
    Int target;              // sum of squares of parts
    bool pairwise_distinct = false;
    bool coprime = false;
    bool all_positive = false;
};

// n not re-representable as three positive coprime squares.
const std::vector<std::int64_t>& three_positive_coprime_exceptions();
// n not representable as three pairwise distinct coprime squares, beyond the
// structural 4^k(8m+7) obstruction.
const std::vector<std::int64_t>& three_distinct_coprime_exceptions();
// Odd n that ARE sums of four pairwise distinct positive coprime squares
// have finite complement; this is that complement (39 values).
const std::vector<std::int64_t>& four_distinct_positive_coprime_odd_exceptions();
// Odd n not representable as four positive coprime squares.
const std::vector<std::int64_t>& four_positive_coprime_odd_exceptions();

// n = a^2+b^2+c^2 with a > b > c >= 0, gcd(a,b,c) = 1, or nullopt.
// Canonical pick: lexicographically largest (a,b,c).
std::optional<SquaresDecomposition> three_squares_distinct_coprime(const Int& n);

// Full enumeration of distinct-coprime triples, descending-lex order.
std::vector<std::array<std::int64_t, 3>> three_squares_distinct_coprime_all(const Int& n);

// n = a^2+b^2+c^2 with a >= b >= c >= 1, gcd = 1, or nullopt.
std::optional<SquaresDecomposition> three_squares_positive_coprime(const Int& n);

enum class FourSquaresMode {
    // Four coprime squares, at most one zero; domain n >= 3, n != 0 mod 4
    // (outside the domain the answer is nullopt by definition).
    AtMostOneZeroCoprime,
    // (x1,x2,x3,x4): x1 even >= 0, x2,x3,x4 >= 1, x4 odd, coprime.
    // d=5 uses the bespoke pick (0,0,2,1).
    RankTwoSplit,       // the divisibility-1 embedding tail
    // As RankTwoSplit but x1 pinned to 0 (the root-count mod 4 refinement).
    RankTwoSplitX1Zero,
    // (x5,x6,x7,x8): x5 >= x6 >= x7 >= 1, coprime, x8 >= 1 except for
    // R in {9,11,17,29,41} where x8 = 0 is forced.
    DegreeTwoTail,      // the divisibility-2 embedding tail
};

// Decomposition under the given mode, or nullopt.  Canonical pick =
// lexicographically largest tuple among valid ones.
std::optional<SquaresDecomposition> four_squares_constrained(const Int& d, FourSquaresMode mode);

// Prefers n, falls back to n-2; nullopt exactly when both fail.
std::optional<std::pair<Int, SquaresDecomposition>>
three_distinct_coprime_of_n_or_n_minus_2(const Int& n);

// Shared star guard; throws StarDomainExceeded for n >= 5*10^10.
std::int64_t guard_star_domain(const Int& n);

}  // namespace hkcert
