#include "ldiag/verify.hpp"

#include <functional>
#include <map>

#include "ldiag/coalg.hpp"
#include "ldiag/diagram.hpp"
#include "ldiag/enumerate.hpp"
#include "ldiag/errors.hpp"
#include "ldiag/law.hpp"
#include "ldiag/random_gen.hpp"
#include "ldiag/structure.hpp"
#include "ldiag/text.hpp"

namespace ldiag {

namespace {

struct Context {
  unsigned long long seed = 0;
  int max_degree = 0;  // <= 0: suite default

  int degree_or(int dflt) const { return max_degree > 0 ? max_degree : dflt; }
};

SuiteReport pass(const std::string& suite, long long checks, std::string detail = "") {
  return {suite, true, checks, std::move(detail)};
}

SuiteReport fail(const std::string& suite, long long checks, std::string detail) {
  return {suite, false, checks, std::move(detail)};
}

SuiteReport suite_assoc(const Context& ctx) {
  const int bound = ctx.degree_or(4);
  long long checks = 0;
  const auto words = words_up_to_degree(2, bound);
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (u.degree() + v.degree() > bound) continue;
      const Lin uv = infil(u, v);
      for (const Word& w : words) {
        if (u.degree() + v.degree() + w.degree() > bound) continue;
        ++checks;
        Lin lhs = infil_lin(uv, Lin::of(w));
        Lin rhs = infil_lin(Lin::of(u), infil(v, w));
        if (!(lhs == rhs))
          return fail("assoc", checks,
                      "associativity broken at u=" + render_word(u) + " v=" + render_word(v) +
                          " w=" + render_word(w));
        // Grading: every term of u^v has degree |u|+|v|.
        for (const auto& [t, c] : uv.terms())
          if (t.degree() != u.degree() + v.degree())
            return fail("assoc", checks, "grading broken at u=" + render_word(u) +
                                             " v=" + render_word(v));
      }
    }
  }
  RandomGen gen(ctx.seed);
  for (int i = 0; i < 200; ++i) {
    Word u = gen.word(3, 2), v = gen.word(3, 2), w = gen.word(3, 2);
    ++checks;
    if (!(infil_lin(infil(u, v), Lin::of(w)) == infil_lin(Lin::of(u), infil(v, w))))
      return fail("assoc", checks,
                  "associativity broken at u=" + render_word(u) + " v=" + render_word(v) +
                      " w=" + render_word(w));
  }
  return pass("assoc", checks);
}

SuiteReport suite_duality(const Context& ctx) {
  const int bound = ctx.degree_or(5);
  long long checks = 0;
  const auto words = words_up_to_degree(2, bound);
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (u.degree() + v.degree() > bound) continue;
      ++checks;
      if (!(dual_product(u, v) == infil(u, v)))
        return fail("duality", checks,
                    "dual law differs from the recursion at u=" + render_word(u) +
                        " v=" + render_word(v));
    }
  }
  return pass("duality", checks);
}

SuiteReport suite_coassoc(const Context& ctx) {
  const int bound = ctx.degree_or(4);
  long long checks = 0;
  const CoproductFn dl = [](const Word& w) { return delta(w); };
  for (const Word& w : words_up_to_degree(2, bound)) {
    ++checks;
    const Tensor2 dw = delta(w);
    if (!(coproduct_left(dw, dl) == coproduct_right(dw, dl)))
      return fail("coassoc", checks, "coassociativity broken at w=" + render_word(w));
  }
  return pass("coassoc", checks);
}

SuiteReport suite_cocycle(const Context& ctx) {
  long long checks = 0;
  std::vector<int> sample;
  for (int i = 0; i <= 5; ++i) sample.push_back(i);

  for (const char* name : {"qc-bichar", "qs-bichar", "const:2"}) {
    ++checks;
    CocycleCheck res = is_colour_factor(named_colour_factor(name), sample);
    if (!res.ok)
      return fail("cocycle", checks, std::string("expected colour factor rejected: ") + name);
  }
  ++checks;
  CocycleCheck constant = is_colour_factor(constant_factor(Coeff::qc() + Coeff::qs()), sample);
  if (!constant.ok) return fail("cocycle", checks, "constant qc+qs rejected");

  ++checks;
  CocycleCheck perturbed = is_colour_factor(named_colour_factor("perturbed"), sample);
  if (perturbed.ok) return fail("cocycle", checks, "perturbed function passed the cocycle check");
  std::string tuple = "(b1,b2,a2,a3)=(" + std::to_string(perturbed.violation[0]) + "," +
                      std::to_string(perturbed.violation[1]) + "," +
                      std::to_string(perturbed.violation[2]) + "," +
                      std::to_string(perturbed.violation[3]) + ")";

  // Coloured-product associativity on random homogeneous tensors.
  RandomGen gen(ctx.seed);
  const ColourFactor chi = named_colour_factor("qc-bichar");
  for (int i = 0; i < 100; ++i) {
    Tensor2 t1 = Tensor2::of({gen.word(2, 2), gen.word(2, 2)}, gen.coeff());
    Tensor2 t2 = Tensor2::of({gen.word(2, 2), gen.word(2, 2)}, gen.coeff());
    Tensor2 t3 = Tensor2::of({gen.word(2, 2), gen.word(2, 2)}, gen.coeff());
    ++checks;
    if (!(coloured_mul(chi, coloured_mul(chi, t1, t2), t3) ==
          coloured_mul(chi, t1, coloured_mul(chi, t2, t3))))
      return fail("cocycle", checks, "coloured product not associative under qc-bichar");
  }
  return pass("cocycle", checks, "perturbed rejected at " + tuple);
}

SuiteReport suite_code_bijection(const Context& ctx) {
  const int bound = ctx.degree_or(4);
  long long checks = 0;
  for (int n = 1; n <= bound; ++n) {
    for (const ExpandRow& row : expand(n, bound)) {
      ++checks;
      const Word w = code(row.diagram);
      if (!(decode(w) == row.diagram))
        return fail("code-bijection", checks, "decode(code(d)) != d at " + render_word(w));
      if (!(code(decode(w)) == w))
        return fail("code-bijection", checks, "code(decode(w)) != w at " + render_word(w));
    }
  }
  // Words violating the interval criterion must be rejected.
  for (const char* bad : {"x2", "x1.x3", "x2^2*x4"}) {
    ++checks;
    try {
      decode(parse_word(bad));
      return fail("code-bijection", checks, std::string("non-code word accepted: ") + bad);
    } catch (const NotACodeError&) {
    }
  }
  return pass("code-bijection", checks);
}

SuiteReport suite_diagram_code(const Context& ctx) {
  const int bound = ctx.degree_or(4);
  long long checks = 0;
  std::vector<Diagram> pool;
  for (int n = 1; n <= bound; ++n)
    for (const ExpandRow& row : expand(n, bound))
      if (row.diagram.black_count() <= 3) pool.push_back(row.diagram);

  for (const Diagram& d1 : pool) {
    const Word c1 = code(d1);
    for (const Diagram& d2 : pool) {
      ++checks;
      Lin via_diagrams;
      const DiagLin prod = shs_product(d1, d2);
      for (const auto& [d, c] : prod.terms()) via_diagrams.add(code(d), c);
      if (!(via_diagrams == infil_shifted(c1, code(d2))))
        return fail("diagram-code", checks,
                    "presentations disagree at d1=" + render_word(c1) +
                        " d2=" + render_word(code(d2)));
    }
  }
  return pass("diagram-code", checks);
}

SuiteReport suite_triangularity(const Context& ctx) {
  const int bound = ctx.degree_or(5);
  long long checks = 0;
  std::vector<std::vector<Word>> codes_by_degree(bound);
  for (int n = 1; n < bound; ++n) codes_by_degree[n] = code_words_of_degree(n);
  for (int a = 1; a < bound; ++a) {
    for (int b = 1; a + b <= bound; ++b) {
      for (const Word& u : codes_by_degree[a]) {
        for (const Word& v : codes_by_degree[b]) {
          ++checks;
          if (filtration_length(shifted_concat(u, v)) !=
              filtration_length(u) + filtration_length(v))
            return fail("triangularity", checks,
                        "filtration not additive at u=" + render_word(u) +
                            " v=" + render_word(v));
          TriangularityReport rep = triangularity_check(u, v);
          if (!rep.pass)
            return fail("triangularity", checks,
                        "triangularity broken at u=" + render_word(u) + " v=" + render_word(v) +
                            (rep.leading_coeff_ok
                                 ? " (filtration violation)"
                                 : " (leading coefficient " + render_coeff(rep.leading_coeff) +
                                       ")"));
        }
      }
    }
  }
  return pass("triangularity", checks);
}

SuiteReport suite_classes(const Context& ctx) {
  long long checks = 0;
  RandomGen gen(ctx.seed);
  const WordClass all[] = {WordClass::packed,     WordClass::injective,
                           WordClass::permutation, WordClass::increasing,
                           WordClass::strictly_increasing, WordClass::disconnected};
  const char* names[] = {"packed", "injective", "permutation", "increasing",
                         "strictly-increasing", "disconnected"};
  for (int k = 0; k < 6; ++k) {
    for (int i = 0; i < 100; ++i) {
      Word u = gen.in_class_word(all[k], 4);
      Word v = gen.in_class_word(all[k], 4);
      ++checks;
      if (!word_class(u, all[k]) || !word_class(v, all[k]))
        return fail("classes", checks, std::string("generator left class ") + names[k]);
      if (!word_class(shifted_concat(u, v), all[k]))
        return fail("classes", checks,
                    std::string("class ") + names[k] + " not closed at u=" + render_word(u) +
                        " v=" + render_word(v));
    }
  }
  return pass("classes", checks);
}

SuiteReport suite_shift_lemma(const Context& ctx) {
  long long checks = 0;
  RandomGen gen(ctx.seed);
  const GradeFn grade = [](const Word& w) { return w.max_index(); };
  const TranslateFn tr = [](const Word& w, int n) { return w.translated(n); };
  const WordLaw concat_law = [](const Word& u, const Word& v) { return Lin::of(u.concat(v)); };
  const WordLaw infil_law = [](const Word& u, const Word& v) { return infil(u, v); };

  for (const WordLaw* law : {&concat_law, &infil_law}) {
    for (int i = 0; i < 50; ++i) {
      Word u = gen.word(2, 3), v = gen.word(2, 3), w = gen.word(2, 3);
      ++checks;
      Lin lhs = shifted_law_lin(*law, grade, tr,
                                shifted_law_generic(*law, grade, tr, u, v), Lin::of(w));
      Lin rhs = shifted_law_lin(*law, grade, tr, Lin::of(u),
                                shifted_law_generic(*law, grade, tr, v, w));
      if (!(lhs == rhs))
        return fail("shift-lemma", checks,
                    "shifted law not associative at u=" + render_word(u) +
                        " v=" + render_word(v) + " w=" + render_word(w));
    }
  }
  return pass("shift-lemma", checks);
}

using SuiteFn = std::function<SuiteReport(const Context&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"assoc", suite_assoc},
      {"duality", suite_duality},
      {"coassoc", suite_coassoc},
      {"cocycle", suite_cocycle},
      {"code-bijection", suite_code_bijection},
      {"diagram-code", suite_diagram_code},
      {"triangularity", suite_triangularity},
      {"classes", suite_classes},
      {"shift-lemma", suite_shift_lemma},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suite_table()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<SuiteReport> run_verify(const std::string& suite, unsigned long long seed,
                                    int max_degree) {
  Context ctx{seed, max_degree};
  std::vector<SuiteReport> out;
  if (suite == "all") {
    for (const auto& [name, fn] : suite_table()) out.push_back(fn(ctx));
    return out;
  }
  for (const auto& [name, fn] : suite_table()) {
    if (name == suite) {
      out.push_back(fn(ctx));
      return out;
    }
  }
  throw UnknownSuiteError("unknown verification suite \"" + suite + "\"");
}

}  // namespace ldiag
