#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldiag/enumerate.hpp"
#include "ldiag/errors.hpp"
#include "ldiag/law.hpp"
#include "ldiag/random_gen.hpp"
#include "ldiag/structure.hpp"
#include "ldiag/text.hpp"
#include "oracles.hpp"

using namespace ldiag;
using oracles::W;

TEST_CASE("irreducibility") {
  CHECK_FALSE(is_irreducible(W("x1.x2")));
  CHECK(is_irreducible(W("x2.x1")));
  CHECK(is_irreducible(W("x1")));
  CHECK(is_irreducible(W("x1.x1")));
  CHECK(is_irreducible(W("x1*x3.x2")));
  CHECK_FALSE(is_irreducible(W("x2.x1.x3")));
  CHECK_THROWS_AS(is_irreducible(Word()), EmptyWordError);
}

TEST_CASE("factorization") {
  CHECK(factorize(W("x1.x2")).factors == std::vector<Word>{W("x1"), W("x1")});
  CHECK(factorize(W("x2.x1")).factors == std::vector<Word>{W("x2.x1")});
  CHECK(factorize(W("x1.x2.x3")).factors == std::vector<Word>{W("x1"), W("x1"), W("x1")});
  CHECK(factorize(W("x2.x1.x3.x3")).factors == std::vector<Word>{W("x2.x1"), W("x1.x1")});
  CHECK_THROWS_AS(factorize(Word()), EmptyWordError);
}

TEST_CASE("factors are irreducible and recombine") {
  RandomGen gen(59);
  for (int i = 0; i < 200; ++i) {
    Word w = gen.word(4, 6, false);
    Factorization f = factorize(w);
    CHECK(f.recombine() == w);
    for (const Word& factor : f.factors) CHECK(is_irreducible(factor));
  }
}

TEST_CASE("factors of code words are code words") {
  for (int n = 1; n <= 4; ++n)
    for (const Word& w : code_words_of_degree(n))
      for (const Word& factor : factorize(w).factors) CHECK_NOTHROW(decode(factor));
}

TEST_CASE("unique factorization round trip") {
  RandomGen gen(61);
  for (int i = 0; i < 200; ++i) {
    int parts = gen.uniform(1, 4);
    Factorization f;
    Word w;
    for (int k = 0; k < parts; ++k) {
      f.factors.push_back(gen.irreducible_word(3, 3));
      w = shifted_concat(w, f.factors.back());
    }
    CHECK(factorize(w) == f);
  }
}

TEST_CASE("filtration length") {
  CHECK(filtration_length(Word()) == 0);
  CHECK(filtration_length(W("x2.x1")) == 1);
  CHECK(filtration_length(W("x1.x2.x3")) == 3);
  RandomGen gen(67);
  for (int i = 0; i < 100; ++i) {
    Word u = gen.word(3, 4, false), v = gen.word(3, 4, false);
    CHECK(filtration_length(shifted_concat(u, v)) ==
          filtration_length(u) + filtration_length(v));
  }
}

TEST_CASE("triangularity of the shifted deformed product") {
  TriangularityReport r1 = triangularity_check(W("x1"), W("x1"));
  CHECK(r1.pass);
  CHECK(r1.leading == W("x1.x2"));

  TriangularityReport r2 = triangularity_check(W("x2.x1"), W("x1"));
  CHECK(r2.pass);
  CHECK(r2.leading == W("x2.x1.x3"));

  // Every code-word pair at small combined degree.
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; a + b <= 4; ++b)
      for (const Word& u : code_words_of_degree(a))
        for (const Word& v : code_words_of_degree(b)) CHECK(triangularity_check(u, v).pass);
}
