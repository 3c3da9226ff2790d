#include "eulerian/permutations.hpp"

#include <algorithm>
#include <stdexcept>

#include "eulerian/recurrence.hpp"

namespace eulerian {

Perm::Perm(std::vector<int> w) : word(std::move(w)) {
  std::vector<bool> seen(word.size() + 1, false);
  for (int v : word) {
    if (v < 1 || v > static_cast<int>(word.size()) || seen[static_cast<std::size_t>(v)])
      throw std::domain_error("Perm: word is not a permutation of [n]");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

namespace {

PermStats stats_of_word(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  PermStats st;
  for (int i = 0; i + 1 < n; ++i)
    if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)]) ++st.des;
  int suffix_min = n + 1;
  std::vector<bool> below_suffix(static_cast<std::size_t>(n), false);
  for (int k = n - 1; k >= 0; --k) {
    below_suffix[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(k)] < suffix_min;
    suffix_min = std::min(suffix_min, w[static_cast<std::size_t>(k)]);
  }
  for (int i = 0; i < n; ++i) {
    int v = w[static_cast<std::size_t>(i)];
    if (v > i + 1) ++st.exc;
    if (v == i + 1) ++st.fix;
    int prev = i > 0 ? w[static_cast<std::size_t>(i - 1)] : 0;
    if (below_suffix[static_cast<std::size_t>(i)] && prev < v) ++st.bad;
  }
  st.bad_prime = st.bad - (n > 0 && w[0] == 1 ? 1 : 0);
  return st;
}

}  // namespace

PermStats perm_stats(const Perm& p) { return stats_of_word(p.word); }

SVec theta_svec(int n) {
  std::vector<long> s;
  for (int v = 2; v <= n; ++v) s.push_back(v);
  return SVec{std::move(s)};
}

InvSeq theta(const Perm& p) {
  int n = p.size();
  if (n < 1) throw std::domain_error("theta: empty permutation");
  std::vector<long> e;
  e.reserve(static_cast<std::size_t>(n - 1));
  // t_i = |{j > i : pi_j < pi_i}|; emit (t_{n-1}, ..., t_1).
  for (int i = n - 2; i >= 0; --i) {
    long t = 0;
    for (int j = i + 1; j < n; ++j)
      if (p.word[static_cast<std::size_t>(j)] < p.word[static_cast<std::size_t>(i)]) ++t;
    e.push_back(t);
  }
  return InvSeq{std::move(e), theta_svec(n)};
}

IntPoly eulerian_poly(int n) {
  if (n < 0) throw std::invalid_argument("eulerian_poly: n must be >= 0");
  IntPoly out;
  for_each_permutation(n, [&](const std::vector<int>& w) {
    out += IntPoly::monomial(1, static_cast<std::size_t>(stats_of_word(w).des));
  });
  return out;
}

IntPoly derangement_poly(int n) {
  if (n < 0) throw std::invalid_argument("derangement_poly: n must be >= 0");
  IntPoly out;
  for_each_permutation(n, [&](const std::vector<int>& w) {
    PermStats st = stats_of_word(w);
    if (st.fix == 0)
      out += IntPoly::monomial(1, static_cast<std::size_t>(st.exc));
  });
  return out;
}

BinomialEulerianRoutes binomial_eulerian_classic(int n) {
  if (n < 1)
    throw std::invalid_argument("binomial_eulerian_classic: n must be >= 1");
  BinomialEulerianRoutes r;

  r.by_definition = IntPoly{1};
  for (int m = 1; m <= n; ++m)
    r.by_definition += (IntPoly{binomial(static_cast<unsigned long>(n),
                                         static_cast<unsigned long>(m))} *
                        eulerian_poly(m))
                           .shifted(1);

  std::vector<IntPoly> opz{IntPoly{1}};
  for (int k = 1; k <= n; ++k) opz.push_back(opz.back() * one_plus_z());
  for_each_permutation(n, [&](const std::vector<int>& w) {
    PermStats st = stats_of_word(w);
    r.by_fix_exc += opz[static_cast<std::size_t>(st.fix)].shifted(
        static_cast<std::size_t>(st.exc));
    r.by_bad_des += opz[static_cast<std::size_t>(st.bad)].shifted(
        static_cast<std::size_t>(st.des));
  });

  r.by_svec = binomial_eulerian(theta_svec(n));

  if (r.by_definition != r.by_fix_exc || r.by_definition != r.by_bad_des ||
      r.by_definition != r.by_svec)
    throw std::logic_error("binomial_eulerian_classic: routes disagree");
  return r;
}

std::vector<IntPoly> alpha_recurrence(int n, AlphaKind alpha) {
  if (n < 1) throw std::invalid_argument("alpha_recurrence: n must be >= 1");
  IntPoly a;
  switch (alpha) {
    case AlphaKind::zero: a = IntPoly{}; break;
    case AlphaKind::one: a = IntPoly{1}; break;
    case AlphaKind::one_plus_z: a = one_plus_z(); break;
  }
  std::vector<IntPoly> polys{IntPoly{1}};
  for (int m = 2; m <= n; ++m) {
    // m x (m-1) transfer: alpha in the corner, 1 on and above the diagonal,
    // z strictly below, last row all z.
    std::vector<IntPoly> prefix(polys.size() + 1);
    for (std::size_t k = 0; k < polys.size(); ++k)
      prefix[k + 1] = prefix[k] + polys[k];
    const IntPoly& total = prefix.back();
    std::vector<IntPoly> next;
    next.reserve(static_cast<std::size_t>(m));
    next.push_back(a * polys[0] + (total - prefix[1]));
    for (int i = 1; i < m; ++i) {
      std::size_t cut = std::min(static_cast<std::size_t>(i), polys.size());
      next.push_back(prefix[cut].shifted(1) + (total - prefix[cut]));
    }
    polys = std::move(next);
  }
  return polys;
}

}  // namespace eulerian
