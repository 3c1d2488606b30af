#include "ldiag/enumerate.hpp"

#include <functional>

namespace ldiag {

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial::ExpMap exps;
  std::function<void(int, int)> fill = [&](int var, int remaining) {
    if (var > nvars) {
      if (remaining == 0 && !exps.empty()) out.push_back(Monomial::from_exps(exps));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      if (e > 0) exps[var] = e;
      fill(var + 1, remaining - e);
      if (e > 0) exps.erase(var);
    }
  };
  fill(1, d);
  return out;
}

std::vector<Word> words_of_degree(int nvars, int d) {
  std::vector<Word> out;
  std::vector<Monomial> letters;
  std::function<void(int)> fill = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(Word(letters));
      return;
    }
    for (int first = 1; first <= remaining; ++first) {
      for (const Monomial& m : monomials_of_degree(nvars, first)) {
        letters.push_back(m);
        fill(remaining - first);
        letters.pop_back();
      }
    }
  };
  fill(d);
  return out;
}

std::vector<Word> words_up_to_degree(int nvars, int d) {
  std::vector<Word> out;
  for (int n = 0; n <= d; ++n) {
    auto ws = words_of_degree(nvars, n);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

std::vector<Word> letter_words_of_length(int nvars, int length) {
  std::vector<Word> out;
  std::vector<Monomial> letters;
  std::function<void()> fill = [&]() {
    if (static_cast<int>(letters.size()) == length) {
      out.push_back(Word(letters));
      return;
    }
    for (int v = 1; v <= nvars; ++v) {
      letters.push_back(Monomial::var(v));
      fill();
      letters.pop_back();
    }
  };
  fill();
  return out;
}

std::vector<Word> code_words_of_degree(int n) {
  std::vector<Word> out;
  for (const ExpandRow& row : expand(n, n)) out.push_back(code(row.diagram));
  return out;
}

}  // namespace ldiag
