#pragma once

#include <optional>
#include <vector>

#include "nsfact/factorization.hpp"
#include "nsfact/semigroup.hpp"

namespace nsfact {

// Parametric families indexed by an odd integer i >= 5. Writing h = (i+1)/2:
//
//   T(i) = {0} u [h, i-1] u [i+1, ...)          symmetric, Frobenius i
//   S(i) = <2, i> ^ T(i)                         reducible, Frobenius i
//        = {0} u { even n : h <= n <= i-1 } u [i+1, ...)
//
// S(i) factors through the T family: S(i) is the intersection of T(j) for j
// in b_set(i), and when i == 3 (mod 4) it also has the stepped factorizations
// of every length from 2 up to (i+1)/4. The behaviour splits on the parity
// of h, so the closed forms below carry both cases.

// Throws BadParameter unless i is odd and >= 5.
NumericalSemigroup t_family(int i);
NumericalSemigroup s_family(int i);

// B(i) = { odd j : (i+1)/2 <= j <= i }, the indices of the full factorization.
std::vector<int> b_set(int i);

// Predicted special gaps of S(i), h = (i+1)/2:
//   h even: { even n : (i+1)/4 <= n <= h-1 } u { odd n : h+1 <= n <= i }
//   h odd:  { even n : (i+3)/4 <= n <= h-1 } u { odd n : h   <= n <= i }
std::vector<int> sg_closed_form(int i);

// S(i) as the intersection of T(j), j in b_set(i). Verified on construction.
Factorization full_factorization(int i);

// For i == 3 (mod 4) and 1 <= t <= (i-3)/4, the length-((i+1)/4 - t + 1)
// factorization { <2, h+2t+1> } u { T(h+2k+1) : t <= k <= (i-3)/4 }.
// Verified on construction. Throws BadParameter outside that range.
Factorization stepped_factorization(int i, int t);

// Two distinct factorizations of one semigroup with lengths k and l.
// Requires k, l >= 2. Uses S(4m-1) with m = max(k, l).
struct WitnessPair {
    NumericalSemigroup target;
    Factorization of_length_k;
    Factorization of_length_l;
};

WitnessPair witness_for_pair(int k, int l);

// Bundle of everything the family machinery knows about one index.
struct FamilyInstance {
    int i = 0;
    bool h_even = false; // parity of (i+1)/2
    NumericalSemigroup s;
    NumericalSemigroup t;
    std::vector<int> b;
    std::vector<int> predicted_sg;
    std::vector<int> computed_sg;
    Factorization full;
    std::optional<Factorization> stepped; // present when t was requested
};

FamilyInstance family_instance(int i, std::optional<int> stepped_t = std::nullopt);

} // namespace nsfact
