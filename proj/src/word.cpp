#include "ldiag/word.hpp"

#include <algorithm>

#include "ldiag/errors.hpp"

namespace ldiag {

Word::Word(std::vector<Monomial> letters) : letters_(std::move(letters)) {
  for (const auto& m : letters_)
    if (m.is_unit()) throw Error("unit monomial is not a valid word letter");
}

int Word::degree() const {
  int d = 0;
  for (const auto& m : letters_) d += m.degree();
  return d;
}

int Word::max_index() const {
  int mx = 0;
  for (const auto& m : letters_) mx = std::max(mx, m.max_index());
  return mx;
}

Word Word::translated(int n) const {
  std::vector<Monomial> ls;
  ls.reserve(letters_.size());
  for (const auto& m : letters_) ls.push_back(m.translated(n));
  return Word(std::move(ls));
}

Word Word::concat(const Word& o) const {
  std::vector<Monomial> ls = letters_;
  ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(ls));
}

Word Word::prepend(const Monomial& m) const {
  std::vector<Monomial> ls;
  ls.reserve(letters_.size() + 1);
  ls.push_back(m);
  ls.insert(ls.end(), letters_.begin(), letters_.end());
  return Word(std::move(ls));
}

Word Word::suffix(std::size_t from) const {
  return Word(std::vector<Monomial>(letters_.begin() + from, letters_.end()));
}

Word Word::segment(std::size_t from, std::size_t count) const {
  return Word(std::vector<Monomial>(letters_.begin() + from,
                                    letters_.begin() + from + count));
}

bool Word::operator<(const Word& o) const {
  if (letters_.size() != o.letters_.size())
    return letters_.size() < o.letters_.size();
  return std::lexicographical_compare(letters_.begin(), letters_.end(),
                                      o.letters_.begin(), o.letters_.end());
}

Coeff pairing(const Lin& a, const Lin& b) {
  // Iterate over the smaller support.
  const Lin& small = a.size() <= b.size() ? a : b;
  const Lin& large = a.size() <= b.size() ? b : a;
  Coeff r;
  for (const auto& [w, c] : small.terms()) r += c * large.coeff_of(w);
  return r;
}

Lin specialize(const Lin& a, long long vc, long long vs) {
  Lin r;
  for (const auto& [w, c] : a.terms()) r.add(w, Coeff::integer(c.eval(vc, vs)));
  return r;
}

}  // namespace ldiag
