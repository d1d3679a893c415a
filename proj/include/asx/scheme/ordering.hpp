#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "asx/algebra/errors.hpp"
#include "asx/scheme/tridiagonal.hpp"

namespace asx {

/// sigma as the sequence sigma(0), ..., sigma(d) with sigma(0) = 0.
using Ordering = std::vector<int>;

enum class StructureType { I, II, III, IV, V, None };

std::string to_string(StructureType t);

/// Throws InvalidArgument unless sigma is a permutation of 0..d fixing 0.
void validate_ordering(const Ordering& sigma);
Ordering inverse_ordering(const Ordering& sigma);
/// "(0,5,3,2,4,1)"
std::string to_string(const Ordering& sigma);
/// Disjoint-cycle form without fixed points, "(1 5)(2 3)"; "id" for identity.
std::string cycle_string(const Ordering& sigma);

/// The candidate sequences of the five patterns for this d, invalid ones
/// omitted.
std::vector<std::pair<StructureType, Ordering>> structure_patterns(int d);

StructureType classify_structure_pair(const Ordering& sigma, int d);

/// Does the relabeled tensor satisfy (Q1) and (Q2)? Uses a precomputed zero
/// pattern: zero[i][j][k] is true when x^k_ij vanishes.
bool satisfies_q_conditions(const std::vector<std::vector<std::vector<bool>>>& zero, const Ordering& sigma);

/// All orderings sigma, in lexicographic order, under which the relabeled
/// tensor is Q-polynomial. Throws TooManyClasses when d > max_d (at most 8).
template <class T>
std::vector<Ordering> enumerate_q_orderings(const StructureTensor<T>& t, int max_d = 8) {
  const int d = t.d();
  if (d > max_d || d > 8) {
    throw Error(ErrorKind::TooManyClasses, "d = " + std::to_string(d) + " exceeds the enumeration cap");
  }
  std::vector<std::vector<std::vector<bool>>> zero(
      d + 1, std::vector<std::vector<bool>>(d + 1, std::vector<bool>(d + 1, false)));
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k) zero[i][j][k] = is_zero(t(i, j, k));
  std::vector<Ordering> out;
  Ordering sigma(d + 1);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    if (satisfies_q_conditions(zero, sigma)) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
  return out;
}

}  // namespace asx
