#include "eulerian/subdivision.hpp"

#include <algorithm>
#include <stdexcept>

#include "eulerian/sections.hpp"

namespace eulerian {

Word::Word(std::vector<int> l, int r_) : letters(std::move(l)), r(r_) {
  if (r < 1) throw std::invalid_argument("Word: r must be >= 1");
  if (letters.empty()) throw std::invalid_argument("Word: needs at least one letter");
  if (letters.front() != 0 || letters.back() != 0)
    throw std::invalid_argument("Word: boundary letters must be zero");
  for (int v : letters)
    if (v < 0 || v >= r) throw std::invalid_argument("Word: letter out of range");
}

WordStats word_stats(const Word& w) {
  WordStats st;
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
    if (w.letters[i] < w.letters[i + 1]) ++st.asc;
    else if (w.letters[i] == w.letters[i + 1]) ++st.col;
  }
  return st;
}

namespace {

template <typename Fn>
void for_each_word(int num_letters, int r, bool smirnov, Fn&& fn) {
  if (num_letters < 1) return;
  std::vector<int> letters(static_cast<std::size_t>(num_letters), 0);
  int free_count = num_letters - 2;
  if (free_count <= 0) {
    bool collides = num_letters == 2;  // (0, 0)
    if (!smirnov || !collides) fn(letters);
    return;
  }
  while (true) {
    if (!smirnov || [&] {
          for (std::size_t i = 0; i + 1 < letters.size(); ++i)
            if (letters[i] == letters[i + 1]) return false;
          return true;
        }())
      fn(letters);
    int i = free_count;  // interior positions are 1..free_count
    while (i >= 1 && letters[static_cast<std::size_t>(i)] + 1 >= r) {
      letters[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 1) return;
    ++letters[static_cast<std::size_t>(i)];
  }
}

}  // namespace

std::vector<Word> enumerate_words(int num_letters, int r, bool smirnov) {
  if (r < 1) throw std::invalid_argument("enumerate_words: r must be >= 1");
  std::vector<Word> out;
  for_each_word(num_letters, r, smirnov, [&](const std::vector<int>& l) {
    out.push_back(Word{l, r});
  });
  return out;
}

IntPoly word_enumerator(int num_free, int r) {
  if (num_free < 0 || r < 1)
    throw std::invalid_argument("word_enumerator: bad arguments");
  std::vector<IntPoly> opz{IntPoly{1}};
  for (int k = 1; k <= num_free + 2; ++k) opz.push_back(opz.back() * one_plus_z());
  IntPoly out;
  for_each_word(num_free + 2, r, false, [&](const std::vector<int>& l) {
    Word w{l, r};
    WordStats st = word_stats(w);
    out += opz[static_cast<std::size_t>(st.col)].shifted(
        static_cast<std::size_t>(st.asc));
  });
  return out;
}

IntPoly local_h_esd(int k, int r) {
  if (k < 0 || r < 1) throw std::invalid_argument("local_h_esd: bad arguments");
  std::vector<mpz_class> inner(static_cast<std::size_t>(r), mpz_class{1});
  inner[0] = 0;  // z + z^2 + ... + z^(r-1)
  return er_apply(pow(IntPoly{std::move(inner)}, static_cast<unsigned>(k)), r);
}

HDeltaRoutes h_delta_esd(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("h_delta_esd: bad arguments");
  HDeltaRoutes routes;

  std::vector<mpz_class> simplex(static_cast<std::size_t>(r) + 1, mpz_class{1});
  routes.by_er = er_apply(pow(IntPoly{std::move(simplex)}, static_cast<unsigned>(n)), r);

  for (int k = 0; k <= n; ++k)
    routes.by_binomial_sum +=
        IntPoly{binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))} *
        pow(one_plus_z(), static_cast<unsigned>(n - k)) * local_h_esd(k, r);

  routes.by_words = n >= 1 ? word_enumerator(n - 1, r) : IntPoly{1};

  if (routes.by_er != routes.by_binomial_sum || routes.by_er != routes.by_words)
    throw std::logic_error("h_delta_esd: routes disagree");
  return routes;
}

std::vector<IntPoly> h_sections(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("h_sections: bad arguments");
  std::vector<mpz_class> simplex(static_cast<std::size_t>(r) + 1, mpz_class{1});
  auto secs = r_sections(pow(IntPoly{std::move(simplex)}, static_cast<unsigned>(n)), r);
  std::reverse(secs.begin(), secs.end());
  return secs;
}

std::vector<IntPoly> lem_f_transform(std::span<const IntPoly> sections) {
  if (sections.empty())
    throw std::domain_error("lem_f_transform: needs at least one section");
  std::size_t r = sections.size();
  std::vector<IntPoly> prefix(r + 1);
  for (std::size_t j = 0; j < r; ++j) prefix[j + 1] = prefix[j] + sections[j];
  const IntPoly& total = prefix.back();
  // g_i = sum_{j<i} f_j + (1+z) f_i + z * sum_{j>i} f_j, ascending index.
  std::vector<IntPoly> out;
  out.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    IntPoly g = prefix[i] + sections[i] * one_plus_z() +
                (total - prefix[i + 1]).shifted(1);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace eulerian
