#include "ldiag/random_gen.hpp"

#include <algorithm>
#include <numeric>

#include "ldiag/structure.hpp"

namespace ldiag {

Monomial RandomGen::monomial(int max_var, int max_degree) {
  int deg = uniform(1, std::max(1, max_degree));
  Monomial m;
  for (int i = 0; i < deg; ++i) m = m.times(Monomial::var(uniform(1, max_var)));
  return m;
}

Word RandomGen::word(int max_var, int max_degree, bool allow_empty) {
  int budget = uniform(allow_empty ? 0 : 1, max_degree);
  std::vector<Monomial> letters;
  while (budget > 0) {
    int d = uniform(1, budget);
    letters.push_back(monomial(max_var, d));
    budget -= letters.back().degree();
  }
  return Word(std::move(letters));
}

Word RandomGen::letter_word(int max_var, int max_len, bool allow_empty) {
  int len = uniform(allow_empty ? 0 : 1, max_len);
  std::vector<Monomial> letters;
  for (int i = 0; i < len; ++i) letters.push_back(Monomial::var(uniform(1, max_var)));
  return Word(std::move(letters));
}

Coeff RandomGen::coeff(int max_deg, int max_abs, int max_terms) {
  Coeff c;
  int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    long long v = uniform(-max_abs, max_abs);
    c += Coeff::term(uniform(0, max_deg), uniform(0, max_deg), v);
  }
  return c;
}

Lin RandomGen::lin(int max_var, int max_degree, int max_terms) {
  Lin l;
  int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) l.add(word(max_var, max_degree), coeff());
  return l;
}

Word RandomGen::irreducible_word(int max_var, int max_degree) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    Word w = word(max_var, max_degree, false);
    if (is_irreducible(w)) return w;
  }
  return Word::single(monomial(max_var, std::max(1, max_degree)));
}

Word RandomGen::in_class_word(WordClass c, int max_len) {
  const int len = uniform(1, max_len);
  std::vector<int> js;
  switch (c) {
    case WordClass::packed: {
      // Random values, then packed to their rank order.
      std::vector<int> raw(len);
      for (int& v : raw) v = uniform(1, len);
      std::vector<int> sorted = raw;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int v : raw)
        js.push_back(1 + static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                          sorted.begin()));
      break;
    }
    case WordClass::injective: {
      std::vector<int> pool(max_len + 2);
      std::iota(pool.begin(), pool.end(), 1);
      for (int i = 0; i < len; ++i) {
        int k = uniform(0, static_cast<int>(pool.size()) - 1);
        js.push_back(pool[k]);
        pool.erase(pool.begin() + k);
      }
      break;
    }
    case WordClass::permutation: {
      js.resize(len);
      std::iota(js.begin(), js.end(), 1);
      for (int i = len - 1; i > 0; --i) std::swap(js[i], js[uniform(0, i)]);
      break;
    }
    case WordClass::increasing: {
      for (int i = 0; i < len; ++i) js.push_back(uniform(1, max_len));
      std::sort(js.begin(), js.end());
      break;
    }
    case WordClass::strictly_increasing: {
      int next = 1;
      for (int i = 0; i < len; ++i) {
        next += uniform(0, 2);
        js.push_back(next);
        ++next;
      }
      break;
    }
    case WordClass::disconnected: {
      // First letter x2 and no index 3 anywhere, so index 3 is the gap.
      static const int choices[3] = {1, 2, 4};
      js.push_back(2);
      for (int i = 1; i < std::max(2, len); ++i) js.push_back(choices[uniform(0, 2)]);
      break;
    }
  }
  std::vector<Monomial> letters;
  letters.reserve(js.size());
  for (int j : js) letters.push_back(Monomial::var(j));
  return Word(std::move(letters));
}

}  // namespace ldiag
