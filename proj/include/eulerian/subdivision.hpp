#pragma once

#include <span>
#include <vector>

#include "eulerian/int_poly.hpp"

namespace eulerian {

/// A word w_0 ... w_m over [0, r-1] with w_0 = w_m = 0.
struct Word {
  Word() = default;
  Word(std::vector<int> letters, int r);  // validates

  std::vector<int> letters;
  int r = 1;
};

struct WordStats {
  int asc = 0;  // adjacent pairs with w_i < w_{i+1}
  int col = 0;  // adjacent pairs with w_i = w_{i+1}
};

WordStats word_stats(const Word& w);

/// All words with num_letters letters (boundary zeros); with smirnov set,
/// only those without equal adjacent letters.
std::vector<Word> enumerate_words(int num_letters, int r, bool smirnov);

/// sum over words with num_free interior letters of (1+z)^col z^asc; equals
/// the binomial Eulerian polynomial of s = (r, ..., r) with num_free entries.
IntPoly word_enumerator(int num_free, int r);

/// Local h-polynomial of the r-fold edgewise subdivision of a k-simplex:
/// E_r((z + ... + z^(r-1))^k).
IntPoly local_h_esd(int k, int r);

/// h-polynomial of the sphere complex built over the r-fold edgewise
/// subdivision of the n-simplex, by three routes asserted equal:
/// E_r((1+z+...+z^r)^n), the binomial/local-h sum, and the word sum with
/// n-1 free letters.
struct HDeltaRoutes {
  IntPoly by_er;
  IntPoly by_binomial_sum;
  IntPoly by_words;
};

HDeltaRoutes h_delta_esd(int n, int r);

/// r-sections of (1+z+...+z^r)^n in descending order
/// (h_{n,r-1}, ..., h_{n,1}, h_{n,0}); h_{n,0} is the h-polynomial above.
std::vector<IntPoly> h_sections(int n, int r);

/// Sections of (1+z+...+z^r) * f from the sections of f, via the banded
/// matrix with 1+z on the diagonal. Input and output are in r_sections
/// order (ascending section index).
std::vector<IntPoly> lem_f_transform(std::span<const IntPoly> sections);

}  // namespace eulerian
