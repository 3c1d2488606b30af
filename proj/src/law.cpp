#include "ldiag/law.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ldiag/errors.hpp"

namespace ldiag {

Lin LawParams::apply(const Lin& l) const {
  if (symbolic()) return l;
  Lin r;
  for (const auto& [w, c] : l.terms()) r.add(w, apply(c));
  return r;
}

namespace {

Lin prepend_all(const Monomial& m, const Lin& l) {
  Lin r;
  for (const auto& [w, c] : l.terms()) r.add(w.prepend(m), c);
  return r;
}

// Recursion with memoization on the word pair; the recursion tree shares
// its suffix subproblems.
class InfilEval {
 public:
  const Lin& run(const Word& u, const Word& v) {
    auto key = std::make_pair(u, v);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Lin r;
    if (u.empty()) {
      r.add(v, Coeff::one());
    } else if (v.empty()) {
      r.add(u, Coeff::one());
    } else {
      const Monomial& a = u[0];
      const Monomial& b = v[0];
      const Word ut = u.suffix(1);
      const Word vt = v.suffix(1);
      const int du = u.degree(), da = a.degree(), db = b.degree();
      r = prepend_all(a, run(ut, v));
      r += prepend_all(b, run(u, vt)) * Coeff::qc(du * db);
      r += prepend_all(a.times(b), run(ut, vt)) *
           (Coeff::qc((du - da) * db) * Coeff::qs(da * db));
    }
    return memo_.emplace(std::move(key), std::move(r)).first->second;
  }

 private:
  std::map<std::pair<Word, Word>, Lin> memo_;
};

}  // namespace

Lin infil(const Word& u, const Word& v) {
  InfilEval eval;
  return eval.run(u, v);
}

Lin infil_lin(const Lin& a, const Lin& b) {
  InfilEval eval;
  Lin r;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) r += eval.run(u, v) * (cu * cv);
  return r;
}

Word shifted_concat(const Word& u, const Word& v) {
  return u.concat(v.translated(u.max_index()));
}

Lin infil_shifted(const Word& u, const Word& v) {
  return infil(u, v.translated(u.max_index()));
}

Lin shifted_law_generic(const WordLaw& star, const GradeFn& grade_of,
                        const TranslateFn& translate_by, const Word& u, const Word& v) {
  return star(u, translate_by(v, grade_of(u)));
}

Lin shifted_law_lin(const WordLaw& star, const GradeFn& grade_of,
                    const TranslateFn& translate_by, const Lin& a, const Lin& b) {
  Lin r;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms())
      r += shifted_law_generic(star, grade_of, translate_by, u, v) * (cu * cv);
  return r;
}

bool word_class(const Word& w, WordClass c) {
  std::vector<int> js;
  js.reserve(w.size());
  for (const auto& m : w.letters()) {
    if (m.degree() != 1)
      throw NotLetterWordError("word classes are defined on words of single degree-1 letters");
    js.push_back(m.max_index());
  }
  std::set<int> used(js.begin(), js.end());
  switch (c) {
    case WordClass::packed:
      return used.empty() || *used.rbegin() == static_cast<int>(used.size());
    case WordClass::injective:
      return used.size() == js.size();
    case WordClass::permutation:
      return word_class(w, WordClass::packed) && word_class(w, WordClass::injective);
    case WordClass::increasing:
      for (std::size_t r = 1; r < js.size(); ++r)
        if (js[r - 1] > js[r]) return false;
      return true;
    case WordClass::strictly_increasing:
      for (std::size_t r = 1; r < js.size(); ++r)
        if (js[r - 1] >= js[r]) return false;
      return true;
    case WordClass::disconnected:
      for (std::size_t r = 0; r + 1 < js.size(); ++r)
        if (!used.count(js[r] + 1)) return true;
      return false;
  }
  return false;
}

}  // namespace ldiag
