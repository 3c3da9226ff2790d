#pragma once

#include <utility>
#include <vector>

#include "eulerian/int_poly.hpp"
#include "eulerian/inversion.hpp"
#include "eulerian/permutations.hpp"

namespace eulerian {

/// An r-colored permutation pi^c: a permutation of [n] with a color in
/// [0, r-1] attached to each position.
struct ColoredPerm {
  ColoredPerm() = default;
  ColoredPerm(Perm p, std::vector<int> c, int r);  // validates

  int size() const { return perm.size(); }
  Perm perm;
  std::vector<int> colors;
  int r = 1;
};

enum class SignClass { plus, minus };

struct ColoredStats {
  int des = 0;
  int exc = 0;
  bool is_derangement = false;  // no fixed point of color 0
  std::vector<int> bad_set;     // bad elements (values, ascending)
  SignClass sign_class = SignClass::plus;  // color of the last position
};

ColoredStats colored_stats(const ColoredPerm& sigma);

/// s = (rn, r(n-1), ..., 2r, r).
SVec psi_svec(int n, int r);

/// e_i = (n-i+1) c_i + t_i over s = (rn, ..., r); a bijection carrying des to
/// des, bad to col', and the sign class to the vanishing of e_n.
InvSeq psi(const ColoredPerm& sigma);
ColoredPerm psi_inv(const InvSeq& e, int n, int r);

/// Descent generating polynomial of Z_r wr S_n, by exhaustive enumeration.
IntPoly colored_eulerian(int n, int r);
/// Excedance generating polynomial of the colored derangements.
IntPoly colored_derangement(int n, int r);

/// Descent sums over the bad-element-free colored permutations, split by the
/// color of the last position: the symmetric-decomposition parts of the
/// colored derangement polynomial. (1, 0) at n = 0 by convention.
std::pair<IntPoly, IntPoly> d_plus_minus(int n, int r);

/// The two halves of the colored binomial Eulerian polynomial, computed by
/// three routes (binomial/derangement formulas, class-split combinatorial
/// sums, and the recurrence engine on s = (rn, ..., r)); all are asserted
/// equal and the engine values are returned.
struct ATildeParts {
  IntPoly plus;
  IntPoly minus;
  IntPoly total;
};

ATildeParts a_tilde_parts(int n, int r);

/// Rebuilds a colored permutation of [n] from a bad-element-free base over
/// [k] and a set T of n-k values to insert as bad elements. Step order:
/// relabel the base into [n] \ T, then insert T ascending, each value right
/// after the rightmost suffix-minimum below it (1 goes in front with color 0).
ColoredPerm bad_insertion_construct(const ColoredPerm& base,
                                    const std::vector<int>& insert_values,
                                    int n);

/// Visits all r^n n! colored permutations; fn(const Perm&, const
/// std::vector<int>& colors).
template <typename Fn>
void for_each_colored_permutation(int n, int r, Fn&& fn) {
  for_each_permutation(n, [&](const std::vector<int>& w) {
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    while (true) {
      fn(w, static_cast<const std::vector<int>&>(colors));
      int i = n - 1;
      while (i >= 0 && colors[static_cast<std::size_t>(i)] + 1 >= r) {
        colors[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++colors[static_cast<std::size_t>(i)];
    }
  });
}

}  // namespace eulerian
