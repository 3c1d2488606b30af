#include "ldiag/coalg.hpp"

#include <mutex>
#include <set>

#include "ldiag/diagram.hpp"
#include "ldiag/errors.hpp"

namespace ldiag {

CocycleCheck is_colour_factor(const ColourFactor& chi, const std::vector<int>& sample) {
  for (int b1 : sample)
    for (int b2 : sample)
      for (int a2 : sample)
        for (int a3 : sample) {
          Coeff lhs = chi(b1, a2) * chi(b1 + b2, a3);
          Coeff rhs = chi(b2, a3) * chi(b1, a2 + a3);
          if (!(lhs == rhs)) return {false, {b1, b2, a2, a3}};
        }
  return {};
}

ColourFactor bicharacter_pow(std::function<int(int, int)> exponent_rule, DeformParam which) {
  std::string name = which == DeformParam::qc ? "qc-bichar" : "qs-bichar";
  return {name, [rule = std::move(exponent_rule), which](int a, int b) {
            return which == DeformParam::qc ? Coeff::qc(rule(a, b)) : Coeff::qs(rule(a, b));
          }};
}

ColourFactor constant_factor(const Coeff& c) {
  return {"const", [c](int, int) { return c; }};
}

ColourFactor named_colour_factor(const std::string& name) {
  if (name == "qc-bichar")
    return bicharacter_pow([](int a, int b) { return a * b; }, DeformParam::qc);
  if (name == "qs-bichar")
    return bicharacter_pow([](int a, int b) { return a * b; }, DeformParam::qs);
  if (name.rfind("const:", 0) == 0) {
    long long c = std::stoll(name.substr(6));
    ColourFactor f = constant_factor(Coeff::integer(c));
    f.name = name;
    return f;
  }
  if (name == "perturbed") {
    // qc^{a+b} with one value overridden; fails the cocycle equation.
    return {"perturbed", [](int a, int b) {
              if (a == 1 && b == 1) return Coeff::qc(3);
              return Coeff::qc(a + b);
            }};
  }
  throw Error("unknown colour factor \"" + name + "\"");
}

Coeff word_crossing_factor(const Word& u, const Word& v) {
  return Coeff::qc(u.degree() * v.degree());
}

Tensor2 coloured_mul(const ColourFactor& chi, const std::pair<Word, Word>& t1,
                     const std::pair<Word, Word>& t2) {
  Tensor2 r;
  r.add({t1.first.concat(t2.first), t1.second.concat(t2.second)},
        chi(t1.second.degree(), t2.first.degree()));
  return r;
}

Tensor2 coloured_mul(const ColourFactor& chi, const Tensor2& t1, const Tensor2& t2) {
  Tensor2 r;
  for (const auto& [p1, c1] : t1.terms())
    for (const auto& [p2, c2] : t2.terms()) {
      Coeff c = c1 * c2 * chi(p1.second.degree(), p2.first.degree());
      r.add({p1.first.concat(p2.first), p1.second.concat(p2.second)}, c);
    }
  return r;
}

std::pair<Coeff, Monomial> diag_deform_product(const ColourFactor& chi, const Monomial& a,
                                               const Monomial& b) {
  return {chi(a.degree(), b.degree()), a.times(b)};
}

std::vector<std::pair<Monomial, Monomial>> mono_factorizations(const Monomial& m) {
  if (m.is_unit()) throw Error("the unit monomial has no proper factorizations");
  std::vector<std::pair<int, int>> vars(m.exps().begin(), m.exps().end());
  std::vector<std::pair<Monomial, Monomial>> out;
  // Odometer over divisor exponents.
  std::vector<int> left(vars.size(), 0);
  for (;;) {
    Monomial::ExpMap le, re;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (left[k] > 0) le[vars[k].first] = left[k];
      if (vars[k].second - left[k] > 0) re[vars[k].first] = vars[k].second - left[k];
    }
    if (!le.empty() && !re.empty())
      out.emplace_back(Monomial::from_exps(std::move(le)), Monomial::from_exps(std::move(re)));
    std::size_t k = 0;
    while (k < vars.size() && left[k] == vars[k].second) {
      left[k] = 0;
      ++k;
    }
    if (k == vars.size()) break;
    ++left[k];
  }
  return out;
}

Tensor2 delta1(const Monomial& m) {
  Tensor2 r;
  for (const auto& [l, t] : mono_factorizations(m))
    r.add({Word::single(l), Word::single(t)}, Coeff::qs(l.degree() * t.degree()));
  return r;
}

namespace {

Tensor2 delta_letter(const Monomial& m) {
  Tensor2 r = delta1(m);
  r.add({Word::single(m), Word()}, Coeff::one());
  r.add({Word(), Word::single(m)}, Coeff::one());
  return r;
}

const ColourFactor& crossing_bicharacter() {
  static const ColourFactor chi =
      bicharacter_pow([](int a, int b) { return a * b; }, DeformParam::qc);
  return chi;
}

}  // namespace

Tensor2 delta(const Word& w) {
  Tensor2 r = Tensor2::of({Word(), Word()});
  for (const auto& m : w.letters()) r = coloured_mul(crossing_bicharacter(), r, delta_letter(m));
  return r;
}

namespace {

// Words that can receive a nonzero pairing against u (x) v under a coproduct:
// interleavings of the two letter sequences where superposed slots multiply.
// For letter coproducts superposition requires equal letters and keeps one copy.
std::set<Word> interleaving_candidates(const Word& u, const Word& v, bool merge_by_product) {
  const int p = static_cast<int>(u.size());
  const int q = static_cast<int>(v.size());
  std::set<Word> out;
  for (const ShsMap& s : shs_enumerate(p, q)) {
    std::vector<Monomial> slots(s.image_size);
    bool valid = true;
    for (int i = 0; i < p && valid; ++i) slots[s.f[i] - 1] = u[i];
    for (int j = 0; j < q && valid; ++j) {
      Monomial& slot = slots[s.f[p + j] - 1];
      if (slot.is_unit()) {
        slot = v[j];
      } else if (merge_by_product) {
        slot = slot.times(v[j]);
      } else if (!(slot == v[j])) {
        valid = false;  // letter coproducts only superpose equal letters
      }
    }
    if (valid) out.insert(Word(std::move(slots)));
  }
  return out;
}

}  // namespace

Lin dual_product(const Word& u, const Word& v) {
  Lin r;
  for (const Word& w : interleaving_candidates(u, v, true))
    r.add(w, delta(w).coeff_of({u, v}));
  return r;
}

namespace {

Tensor2 letter_coproduct_uncached(const LetterCoproduct& lc, const Word& w) {
  Tensor2 r = Tensor2::of({Word(), Word()});
  const ColourFactor plain = constant_factor(Coeff::one());
  for (const auto& m : w.letters()) {
    if (m.degree() != 1)
      throw NotLetterWordError("letter coproducts are defined on words of degree-1 letters");
    Tensor2 dm;
    switch (lc.kind) {
      case LetterCoproductKind::shuffle:
        dm.add({Word::single(m), Word()}, Coeff::one());
        dm.add({Word(), Word::single(m)}, Coeff::one());
        break;
      case LetterCoproductKind::hadamard:
        dm.add({Word::single(m), Word::single(m)}, Coeff::one());
        break;
      case LetterCoproductKind::infiltration:
        dm.add({Word::single(m), Word()}, Coeff::one());
        dm.add({Word(), Word::single(m)}, Coeff::one());
        dm.add({Word::single(m), Word::single(m)}, Coeff::one());
        break;
      case LetterCoproductKind::q_deformed:
        dm.add({Word::single(m), Word()}, Coeff::one());
        dm.add({Word(), Word::single(m)}, Coeff::one());
        dm.add({Word::single(m), Word::single(m)}, lc.q);
        break;
    }
    r = coloured_mul(plain, r, dm);
  }
  return r;
}

// The dual laws query the same candidate words over and over; cache the
// fold.  Entries are never erased, so references stay valid; the lock only
// guards the lookup.
const Tensor2& letter_coproduct_cached(const LetterCoproduct& lc, const Word& w) {
  using Key = std::tuple<int, Coeff, Word>;
  static std::mutex mu;
  static std::map<Key, Tensor2> cache;
  Key key{static_cast<int>(lc.kind), lc.q, w};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Tensor2 r = letter_coproduct_uncached(lc, w);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(r)).first->second;
}

}  // namespace

Tensor2 letter_coproduct(const LetterCoproduct& lc, const Word& w) {
  return letter_coproduct_cached(lc, w);
}

Lin letter_dual_product(const LetterCoproduct& lc, const Word& u, const Word& v) {
  for (const auto& m : u.letters())
    if (m.degree() != 1) throw NotLetterWordError("letter dual laws need degree-1 letters");
  for (const auto& m : v.letters())
    if (m.degree() != 1) throw NotLetterWordError("letter dual laws need degree-1 letters");
  Lin r;
  for (const Word& w : interleaving_candidates(u, v, false))
    r.add(w, letter_coproduct_cached(lc, w).coeff_of({u, v}));
  return r;
}

AugmentedVec AugmentedVec::from_lin(const Lin& l) {
  AugmentedVec a;
  a.unit_coeff = l.coeff_of(Word());
  a.body = l;
  a.body.add(Word(), -a.unit_coeff);
  return a;
}

Lin AugmentedVec::to_lin() const {
  Lin l = body;
  l.add(Word(), unit_coeff);
  return l;
}

Coeff extended_pairing(const AugmentedVec& a, const AugmentedVec& b) {
  return pairing(a.body, b.body) + b.unit_coeff * a.unit_coeff;
}

Tensor3 coproduct_left(const Tensor2& t, const CoproductFn& dl) {
  Tensor3 r;
  for (const auto& [p, c] : t.terms()) {
    const Tensor2 d = dl(p.first);
    for (const auto& [pp, cc] : d.terms()) r.add({pp.first, pp.second, p.second}, c * cc);
  }
  return r;
}

Tensor3 coproduct_right(const Tensor2& t, const CoproductFn& dl) {
  Tensor3 r;
  for (const auto& [p, c] : t.terms()) {
    const Tensor2 d = dl(p.second);
    for (const auto& [pp, cc] : d.terms()) r.add({p.first, pp.first, pp.second}, c * cc);
  }
  return r;
}

}  // namespace ldiag
