#include "eulerian/colored.hpp"

#include <algorithm>
#include <stdexcept>

#include "eulerian/recurrence.hpp"

namespace eulerian {

ColoredPerm::ColoredPerm(Perm p, std::vector<int> c, int r_)
    : perm(std::move(p)), colors(std::move(c)), r(r_) {
  if (r < 1) throw std::domain_error("ColoredPerm: r must be >= 1");
  if (colors.size() != perm.word.size())
    throw std::domain_error("ColoredPerm: color vector length mismatch");
  for (int ci : colors)
    if (ci < 0 || ci >= r)
      throw std::domain_error("ColoredPerm: color out of [0, r-1]");
}

namespace {

ColoredStats stats_of(const std::vector<int>& w, const std::vector<int>& c) {
  int n = static_cast<int>(w.size());
  ColoredStats st;
  auto wa = [&](int i) { return i == n ? n + 1 : w[static_cast<std::size_t>(i)]; };
  auto ca = [&](int i) { return i == n ? 0 : c[static_cast<std::size_t>(i)]; };
  for (int i = 0; i < n; ++i) {
    if (ca(i) > ca(i + 1) || (ca(i) == ca(i + 1) && wa(i) > wa(i + 1))) ++st.des;
    if (wa(i) > i + 1 || (wa(i) == i + 1 && ca(i) > 0)) ++st.exc;
  }
  st.is_derangement = true;
  for (int i = 0; i < n; ++i)
    if (wa(i) == i + 1 && ca(i) == 0) st.is_derangement = false;
  // Bad elements: pi_j below its whole suffix, pi_{j-1} below everything from
  // position j on, same color as the predecessor (pi_0 = 0 with color 0).
  int suffix_min = n + 1;
  std::vector<bool> below_suffix(static_cast<std::size_t>(n) + 1, false);
  for (int j = n - 1; j >= 0; --j) {
    below_suffix[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j)] < suffix_min;
    suffix_min = std::min(suffix_min, w[static_cast<std::size_t>(j)]);
  }
  for (int j = 0; j < n; ++j) {
    int prev = j > 0 ? w[static_cast<std::size_t>(j - 1)] : 0;
    int prev_color = j > 0 ? c[static_cast<std::size_t>(j - 1)] : 0;
    // Given pi_j below its suffix, the predecessor condition reduces to
    // pi_{j-1} < pi_j.
    if (below_suffix[static_cast<std::size_t>(j)] && prev < w[static_cast<std::size_t>(j)] &&
        prev_color == c[static_cast<std::size_t>(j)])
      st.bad_set.push_back(w[static_cast<std::size_t>(j)]);
  }
  std::sort(st.bad_set.begin(), st.bad_set.end());
  st.sign_class =
      (n == 0 || c[static_cast<std::size_t>(n - 1)] == 0) ? SignClass::plus : SignClass::minus;
  return st;
}

std::vector<long> lehmer_code(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  std::vector<long> t(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[static_cast<std::size_t>(j)] < w[static_cast<std::size_t>(i)])
        ++t[static_cast<std::size_t>(i)];
  return t;
}

}  // namespace

ColoredStats colored_stats(const ColoredPerm& sigma) {
  return stats_of(sigma.perm.word, sigma.colors);
}

SVec psi_svec(int n, int r) {
  std::vector<long> s;
  s.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) s.push_back(static_cast<long>(r) * (n - i + 1));
  return SVec{std::move(s)};
}

InvSeq psi(const ColoredPerm& sigma) {
  int n = sigma.size();
  auto t = lehmer_code(sigma.perm.word);
  std::vector<long> e(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    e[static_cast<std::size_t>(i - 1)] =
        static_cast<long>(n - i + 1) * sigma.colors[static_cast<std::size_t>(i - 1)] +
        t[static_cast<std::size_t>(i - 1)];
  return InvSeq{std::move(e), psi_svec(n, sigma.r)};
}

ColoredPerm psi_inv(const InvSeq& e, int n, int r) {
  SVec s = psi_svec(n, r);
  if (static_cast<int>(e.values.size()) != n)
    throw std::domain_error("psi_inv: length mismatch");
  for (int i = 1; i <= n; ++i) {
    long v = e.values[static_cast<std::size_t>(i - 1)];
    if (v < 0 || v >= s.bound(i))
      throw std::domain_error("psi_inv: entry out of range");
  }
  std::vector<int> colors(static_cast<std::size_t>(n));
  std::vector<long> t(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    long base = n - i + 1;
    long v = e.values[static_cast<std::size_t>(i - 1)];
    colors[static_cast<std::size_t>(i - 1)] = static_cast<int>(v / base);
    t[static_cast<std::size_t>(i - 1)] = v % base;
  }
  // Rebuild the permutation from its Lehmer code: pi_i is the (t_i + 1)-th
  // smallest value not yet used.
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) pool[static_cast<std::size_t>(v - 1)] = v;
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto idx = static_cast<std::size_t>(t[static_cast<std::size_t>(i)]);
    word.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return ColoredPerm{Perm{std::move(word)}, std::move(colors), r};
}

IntPoly colored_eulerian(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("colored_eulerian: bad n or r");
  IntPoly out;
  for_each_colored_permutation(n, r, [&](const std::vector<int>& w, const std::vector<int>& c) {
    out += IntPoly::monomial(1, static_cast<std::size_t>(stats_of(w, c).des));
  });
  return out;
}

IntPoly colored_derangement(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("colored_derangement: bad n or r");
  IntPoly out;
  for_each_colored_permutation(n, r, [&](const std::vector<int>& w, const std::vector<int>& c) {
    ColoredStats st = stats_of(w, c);
    if (st.is_derangement)
      out += IntPoly::monomial(1, static_cast<std::size_t>(st.exc));
  });
  return out;
}

std::pair<IntPoly, IntPoly> d_plus_minus(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("d_plus_minus: bad n or r");
  if (n == 0) return {IntPoly{1}, IntPoly{}};
  IntPoly plus, minus;
  for_each_colored_permutation(n, r, [&](const std::vector<int>& w, const std::vector<int>& c) {
    ColoredStats st = stats_of(w, c);
    if (!st.bad_set.empty()) return;
    IntPoly term = IntPoly::monomial(1, static_cast<std::size_t>(st.des));
    if (st.sign_class == SignClass::plus) plus += term; else minus += term;
  });
  return {plus, minus};
}

ATildeParts a_tilde_parts(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("a_tilde_parts: bad n or r");

  // Route (i): binomial sums over the derangement parts.
  IntPoly plus_i, minus_i;
  for (int k = 0; k <= n; ++k) {
    auto [dp, dm] = d_plus_minus(k, r);
    IntPoly co = IntPoly{binomial(static_cast<unsigned long>(n),
                                  static_cast<unsigned long>(k))} *
                 pow(one_plus_z(), static_cast<unsigned>(n - k));
    plus_i += co * dp;
    minus_i += co * dm;
  }

  // Route (ii): class-split sums of (1+z)^bad z^des.
  IntPoly plus_ii, minus_ii;
  std::vector<IntPoly> opz{IntPoly{1}};
  for (int k = 1; k <= n; ++k) opz.push_back(opz.back() * one_plus_z());
  for_each_colored_permutation(n, r, [&](const std::vector<int>& w, const std::vector<int>& c) {
    ColoredStats st = stats_of(w, c);
    IntPoly term = opz[st.bad_set.size()].shifted(static_cast<std::size_t>(st.des));
    if (st.sign_class == SignClass::plus) plus_ii += term; else minus_ii += term;
  });

  // Route (iii): the recurrence engine on s = (rn, ..., 2r, r).
  auto fam = refined_polys(psi_svec(n, r));
  IntPoly plus_iii = fam.polys[0];
  IntPoly minus_iii;
  for (int k = 1; k < r; ++k) minus_iii += fam.polys[static_cast<std::size_t>(k)];

  if (plus_i != plus_ii || plus_i != plus_iii || minus_i != minus_ii ||
      minus_i != minus_iii)
    throw std::logic_error("a_tilde_parts: routes disagree");

  IntPoly total = plus_iii + minus_iii;

  // Definition cross-check: sum_m C(n,m) z^(n-m) A_{m,r}.
  IntPoly total_def;
  for (int m = 0; m <= n; ++m)
    total_def += (IntPoly{binomial(static_cast<unsigned long>(n),
                                   static_cast<unsigned long>(m))} *
                  colored_eulerian(m, r))
                     .shifted(static_cast<std::size_t>(n - m));
  if (total != total_def)
    throw std::logic_error("a_tilde_parts: total differs from the definition sum");

  return {std::move(plus_iii), std::move(minus_iii), std::move(total)};
}

ColoredPerm bad_insertion_construct(const ColoredPerm& base,
                                    const std::vector<int>& insert_values,
                                    int n) {
  int k = base.size();
  if (static_cast<int>(insert_values.size()) != n - k)
    throw std::domain_error("bad_insertion_construct: |T| must be n - k");
  if (!colored_stats(base).bad_set.empty())
    throw std::domain_error("bad_insertion_construct: base has bad elements");
  std::vector<int> tset = insert_values;
  std::sort(tset.begin(), tset.end());
  std::vector<bool> in_t(static_cast<std::size_t>(n) + 1, false);
  for (int v : tset) {
    if (v < 1 || v > n || in_t[static_cast<std::size_t>(v)])
      throw std::domain_error("bad_insertion_construct: T is not a subset of [n]");
    in_t[static_cast<std::size_t>(v)] = true;
  }

  // Relabel base values into [n] \ T, order preserved.
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (!in_t[static_cast<std::size_t>(v)]) rest.push_back(v);
  std::vector<int> word;
  std::vector<int> colors;
  word.reserve(static_cast<std::size_t>(n));
  colors.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < k; ++i) {
    word.push_back(rest[static_cast<std::size_t>(base.perm.word[static_cast<std::size_t>(i)] - 1)]);
    colors.push_back(base.colors[static_cast<std::size_t>(i)]);
  }

  for (int v : tset) {
    if (v == 1) {
      word.insert(word.begin(), 1);
      colors.insert(colors.begin(), 0);
      continue;
    }
    // Rightmost suffix-minimum strictly below v.
    int pos = -1;
    int m = static_cast<int>(word.size());
    int suffix_min = n + 1;
    for (int j = m - 1; j >= 0; --j) {
      if (word[static_cast<std::size_t>(j)] < suffix_min) {
        suffix_min = word[static_cast<std::size_t>(j)];
        if (word[static_cast<std::size_t>(j)] < v) {
          pos = j;
          break;  // scanning right to left, the first hit is the rightmost
        }
      }
    }
    if (pos < 0)
      throw std::domain_error("bad_insertion_construct: no insertion point");
    int color = colors[static_cast<std::size_t>(pos)];
    word.insert(word.begin() + pos + 1, v);
    colors.insert(colors.begin() + pos + 1, color);
  }
  return ColoredPerm{Perm{std::move(word)}, std::move(colors), base.r};
}

}  // namespace eulerian
