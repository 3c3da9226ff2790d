#pragma once

#include <span>
#include <string>
#include <vector>

#include "eulerian/int_poly.hpp"
#include "eulerian/inversion.hpp"

namespace eulerian {

enum class RowMarker { one, one_plus_z };

/// Row data for the interlacing-preserving transform
///   g_i = z * sum_{j < t_i} f_j + a_i f_{t_i} + sum_{j > t_i} f_j
/// with 1-based thresholds 1 <= t_1 <= ... <= t_p <= q. When two rows share a
/// threshold, a marker pair (one_plus_z, one) in that order is forbidden.
struct ThresholdSpec {
  std::vector<int> t;
  std::vector<RowMarker> a;

  void validate(int q) const;  // throws std::domain_error on violation
};

struct ThresholdEntry {
  long t = 0;          // ceil(k * s_{m-1} / s_m)
  bool divisible = false;  // s_m | k * s_{m-1}
};

/// Threshold table for level m (2 <= m <= n), one entry per k = 0..s_m-1.
std::vector<ThresholdEntry> thresholds(const SVec& s, int m);

/// Applies the transform above using prefix sums; O((p+q) * max degree).
/// Preconditions on fs (nonnegative coefficients) are the caller's contract.
std::vector<IntPoly> threshold_transform(std::span<const IntPoly> fs,
                                         const ThresholdSpec& spec);

/// The refined family (p_{m,k}) at a fixed level m.
struct RefinedFamily {
  int level = 0;
  std::vector<IntPoly> polys;
};

/// Runs the threshold recurrence from level 1 up to n = len(s); the level-1
/// seed is (1+z, z, ..., z). Requires nonempty s.
RefinedFamily refined_polys(const SVec& s);

/// (1+z) p_{n,0} + sum_{k>=1} p_{n,k}; the empty s gives 1+z by convention.
IntPoly binomial_eulerian(const SVec& s);

struct MatrixCheckReport {
  bool all_passed = true;
  std::vector<std::string> lines;
};

/// Verifies the eight 2x2 factorization identities symbolically, and checks
/// that the one directly-proved matrix preserves interlacing on a fixed
/// battery of interlacing pairs.
MatrixCheckReport factorization_checks();

/// Applies the two non-interlacing-preserving matrices to their displayed
/// inputs and confirms the outputs match and fail the sequence test.
MatrixCheckReport counterexample_check();

}  // namespace eulerian
