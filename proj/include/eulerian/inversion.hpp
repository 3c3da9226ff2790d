#pragma once

#include <stdexcept>
#include <vector>

#include "eulerian/int_poly.hpp"

namespace eulerian {

/// A sequence of positive integers s = (s_1, ..., s_n). The boundary values
/// s_0 = s_{n+1} = 1 are implicit and never stored.
struct SVec {
  SVec() = default;
  explicit SVec(std::vector<long> e) : entries(std::move(e)) {
    for (long v : entries)
      if (v < 1) throw std::invalid_argument("SVec: entries must be positive");
  }

  int size() const { return static_cast<int>(entries.size()); }
  /// s_i with 1-based index; s_0 and s_{n+1} read as 1.
  long bound(int i) const {
    return (i < 1 || i > size()) ? 1 : entries[static_cast<std::size_t>(i - 1)];
  }
  /// prod s_i, clamped to cap + 1 when it exceeds cap.
  long long product_clamped(long long cap) const {
    long long p = 1;
    for (long v : entries) {
      p *= v;
      if (p > cap) return cap + 1;
    }
    return p;
  }

  std::vector<long> entries;
};

/// An s-inversion sequence e = (e_1, ..., e_n) with 0 <= e_i < s_i; the
/// boundary values e_0 = e_{n+1} = 0 are implicit.
struct InvSeq {
  InvSeq() = default;
  InvSeq(std::vector<long> v, const SVec& s) : values(std::move(v)) {
    if (static_cast<int>(values.size()) != s.size())
      throw std::domain_error("InvSeq: length does not match s");
    for (int i = 1; i <= s.size(); ++i) {
      long e = values[static_cast<std::size_t>(i - 1)];
      if (e < 0 || e >= s.bound(i))
        throw std::domain_error("InvSeq: entry out of range for s");
    }
  }

  std::vector<long> values;
};

struct StatTuple {
  long asc = 0;
  long col = 0;
  long des = 0;
  long col_prime = 0;
};

/// Exact ascent/collision/descent counts over the pair indices i in [0, n]
/// (so asc + col + des = n + 1), and collisions over i in [0, n-1] only for
/// col_prime. Ratios e_i/s_i are compared by cross-multiplication.
StatTuple stats(const std::vector<long>& e, const SVec& s);
StatTuple stats(const InvSeq& e, const SVec& s);

/// Streams all of I_n^s in lexicographic order; fn receives each sequence as
/// a const std::vector<long>&. The empty s yields one empty sequence.
template <typename Fn>
void for_each_inversion_sequence(const SVec& s, Fn&& fn) {
  std::vector<long> e(static_cast<std::size_t>(s.size()), 0);
  while (true) {
    fn(static_cast<const std::vector<long>&>(e));
    int i = s.size() - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] + 1 >= s.bound(i + 1)) {
      e[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++e[static_cast<std::size_t>(i)];
  }
}

std::vector<InvSeq> all_inversion_sequences(const SVec& s);

/// sum over I_n^s of (1+z)^col z^asc, by direct enumeration.
IntPoly brute_binomial_eulerian(const SVec& s);
/// sum over I_n^s of z^asc.
IntPoly brute_s_eulerian(const SVec& s);
/// sum over collision-free sequences of z^asc.
IntPoly brute_s_derangement(const SVec& s);
/// The refined family (p_{n,0}, ..., p_{n,s_n-1}) split by the last entry,
/// with the col' statistic. Requires nonempty s.
std::vector<IntPoly> brute_refined(const SVec& s);

/// Componentwise negation mod s_i; an involution exchanging asc and des.
InvSeq involution_f(const InvSeq& e, const SVec& s);

}  // namespace eulerian
