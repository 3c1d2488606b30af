#include "ldiag/structure.hpp"

#include <algorithm>

#include "ldiag/errors.hpp"
#include "ldiag/law.hpp"

namespace ldiag {

namespace {

int min_index(const Monomial& m) { return m.min_index(); }

// Positions k in [1..len-1] such that every index of letters [0,k) is below
// every index of letters [k,len).
std::vector<std::size_t> valid_cuts(const Word& w) {
  const std::size_t len = w.size();
  std::vector<int> prefix_max(len), suffix_min(len);
  int mx = 0;
  for (std::size_t i = 0; i < len; ++i) {
    mx = std::max(mx, w[i].max_index());
    prefix_max[i] = mx;
  }
  int mn = 0;
  for (std::size_t i = len; i-- > 0;) {
    mn = i + 1 == len ? min_index(w[i]) : std::min(mn, min_index(w[i]));
    suffix_min[i] = mn;
  }
  std::vector<std::size_t> cuts;
  for (std::size_t k = 1; k < len; ++k)
    if (prefix_max[k - 1] < suffix_min[k]) cuts.push_back(k);
  return cuts;
}

}  // namespace

bool is_irreducible(const Word& w) {
  if (w.empty()) throw EmptyWordError("irreducibility is defined for nonempty words");
  return valid_cuts(w).empty();
}

Word Factorization::recombine() const {
  Word r;
  for (const Word& f : factors) r = shifted_concat(r, f);
  return r;
}

Factorization factorize(const Word& w) {
  if (w.empty()) throw EmptyWordError("cannot factorize the empty word");
  std::vector<std::size_t> cuts = valid_cuts(w);
  cuts.push_back(w.size());
  Factorization out;
  std::size_t start = 0;
  int shift = 0;  // max index seen before the current segment
  for (std::size_t cut : cuts) {
    Word segment = w.segment(start, cut - start);
    out.factors.push_back(segment.translated(-shift));
    shift = std::max(shift, segment.max_index());
    start = cut;
  }
  return out;
}

std::size_t filtration_length(const Word& w) {
  if (w.empty()) return 0;
  return valid_cuts(w).size() + 1;
}

TriangularityReport triangularity_check(const Word& u, const Word& v) {
  TriangularityReport rep;
  rep.leading = shifted_concat(u, v);
  const std::size_t bound = filtration_length(u) + filtration_length(v);
  const Lin prod = infil_shifted(u, v);
  rep.leading_coeff = prod.coeff_of(rep.leading);
  rep.leading_coeff_ok = rep.leading_coeff.is_one();
  for (const auto& [w, c] : prod.terms()) {
    if (w == rep.leading) continue;
    const std::size_t lw = filtration_length(w);
    if (lw >= bound) rep.violations.emplace_back(w, lw);
  }
  rep.pass = rep.leading_coeff_ok && rep.violations.empty();
  return rep;
}

}  // namespace ldiag
