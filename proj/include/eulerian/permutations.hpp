#pragma once

#include <algorithm>
#include <vector>

#include "eulerian/int_poly.hpp"
#include "eulerian/inversion.hpp"

namespace eulerian {

/// A permutation of [n], stored as the one-line word pi_1 ... pi_n.
struct Perm {
  Perm() = default;
  explicit Perm(std::vector<int> w);  // validates

  int size() const { return static_cast<int>(word.size()); }
  std::vector<int> word;
};

struct PermStats {
  int des = 0;
  int exc = 0;
  int fix = 0;
  int bad = 0;        // pi_k below the whole suffix and above pi_{k-1} (pi_0 = 0)
  int bad_prime = 0;  // bad, minus one when pi_1 = 1
};

PermStats perm_stats(const Perm& p);

/// s = (2, 3, ..., n); empty for n <= 1.
SVec theta_svec(int n);

/// Reversed truncated Lehmer code: e = (t_{n-1}, ..., t_1) over (2, ..., n),
/// where t_i counts later smaller letters. A bijection onto I_{n-1}^(2..n)
/// carrying des to asc and bad to col. n = 1 maps to the empty sequence.
InvSeq theta(const Perm& p);

/// Descent generating polynomial of S_n, by exhaustive enumeration.
IntPoly eulerian_poly(int n);
/// Excedance generating polynomial of the derangements of [n].
IntPoly derangement_poly(int n);

/// The same polynomial by four independent routes; construction throws
/// std::logic_error if any two disagree.
struct BinomialEulerianRoutes {
  IntPoly by_definition;  // 1 + z sum_m C(n,m) A_m(z)
  IntPoly by_fix_exc;     // sum over S_n of (1+z)^fix z^exc
  IntPoly by_bad_des;     // sum over S_n of (1+z)^bad z^des
  IntPoly by_svec;        // recurrence engine on s = (2, ..., n)
};

BinomialEulerianRoutes binomial_eulerian_classic(int n);

enum class AlphaKind { zero, one, one_plus_z };

/// Level-n vector of the triangular transfer recurrence whose top entry at
/// level n+1 is A_n, d_n, or the binomial Eulerian polynomial according to
/// alpha = 1, 0, 1+z.
std::vector<IntPoly> alpha_recurrence(int n, AlphaKind alpha);

/// Visits all of S_n in lexicographic order; fn(const std::vector<int>&).
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  if (n == 0) {
    fn(static_cast<const std::vector<int>&>(w));
    return;
  }
  do {
    fn(static_cast<const std::vector<int>&>(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace eulerian
