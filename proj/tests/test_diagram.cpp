#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ldiag/diagram.hpp"
#include "ldiag/errors.hpp"
#include "ldiag/text.hpp"
#include "oracles.hpp"

using namespace ldiag;
using oracles::W;

namespace {

// The 3x4 example diagram: rows of degree 3, 5, 3.
Diagram example_diagram() {
  return Diagram::from_weights({{{1, 2}, 2},
                                {{1, 3}, 1},
                                {{2, 1}, 1},
                                {{2, 2}, 1},
                                {{2, 3}, 3},
                                {{3, 3}, 1},
                                {{3, 4}, 2}});
}

Diagram diag(Diagram::WeightMap w) { return Diagram::from_weights(std::move(w)); }

}  // namespace

TEST_CASE("diagram validation") {
  Diagram d = example_diagram();
  CHECK(d.black_count() == 3);
  CHECK(d.white_count() == 4);
  CHECK(d.edge_count() == 11);
  CHECK(Diagram().empty());
  CHECK(Diagram().black_count() == 0);
  CHECK_THROWS_AS(diag({{{2, 1}, 1}}), GapError);
  CHECK_THROWS_AS(diag({{{1, 1}, 1}, {{3, 1}, 1}}), GapError);
  CHECK_THROWS_AS(diag({{{1, 1}, 1}, {{2, 3}, 1}}), GapError);
  CHECK_THROWS_AS(diag({{{1, 1}, 0}}), ZeroWeightError);
}

TEST_CASE("code of a diagram") {
  CHECK(code(example_diagram()) == W("x2^2*x3 . x1*x2*x3^3 . x3*x4^2"));
  CHECK(code(Diagram()) == Word());
  CHECK(code(diag({{{1, 1}, 2}})) == W("x1^2"));
}

TEST_CASE("decode") {
  CHECK(decode(W("x2^2*x3 . x1*x2*x3^3 . x3*x4^2")) == example_diagram());
  CHECK(decode(Word()) == Diagram());
  CHECK_THROWS_AS(decode(W("x2")), NotACodeError);
  CHECK_THROWS_AS(decode(W("x1.x3")), NotACodeError);
}

TEST_CASE("code/decode bijection on all small diagrams") {
  for (int n = 1; n <= 4; ++n) {
    for (const ExpandRow& row : expand(n)) {
      Word w = code(row.diagram);
      CHECK(decode(w) == row.diagram);
      CHECK(code(decode(w)) == w);
    }
  }
}

TEST_CASE("diagram concatenation") {
  Diagram d = example_diagram();
  CHECK(diagram_concat(d, Diagram()) == d);
  CHECK(diagram_concat(Diagram(), d) == d);
  CHECK(diagram_concat(diag({{{1, 1}, 1}}), diag({{{1, 1}, 1}})) ==
        diag({{{1, 1}, 1}, {{2, 2}, 1}}));
  // code([d1|d2]) = code(d1) . T_{q1}(code(d2)).
  CHECK(code(diagram_concat(d, d)) == code(d).concat(code(d).translated(4)));
}

TEST_CASE("black spot degrees") {
  Diagram d = example_diagram();
  CHECK(bks(d, 1) == 3);
  CHECK(bks(d, 2) == 5);
  CHECK(bks(d, 3) == 3);
  CHECK_THROWS_AS(bks(d, 4), IndexError);
  CHECK_THROWS_AS(bks(d, 0), IndexError);
  // bks(d,l) equals the degree of letter l of the code.
  Word w = code(d);
  for (int l = 1; l <= 3; ++l) CHECK(bks(d, l) == w[l - 1].degree());
}

TEST_CASE("relabelling action") {
  Diagram d2 = diag({{{1, 1}, 1}, {{2, 1}, 1}});
  CHECK(act(d2, {1, 2}) == d2);
  CHECK(act(d2, {1, 1}) == diag({{{1, 1}, 2}}));
  Diagram swapped = act(diag({{{1, 1}, 1}, {{2, 2}, 1}}), {2, 1});
  CHECK(swapped == diag({{{1, 2}, 1}, {{2, 1}, 1}}));
  CHECK_THROWS_AS(act(d2, {2, 2}), NotOntoError);
  CHECK_THROWS_AS(act(d2, {1, 3}), NotOntoError);
}

TEST_CASE("relabelling composes") {
  Diagram d = diag({{{1, 1}, 1}, {{2, 2}, 1}, {{3, 1}, 2}});
  std::vector<int> f = {2, 1, 2};  // onto [1..2]
  std::vector<int> g = {1, 1};     // onto [1..1]
  std::vector<int> gf = {g[f[0] - 1], g[f[1] - 1], g[f[2] - 1]};
  CHECK(act(act(d, f), g) == act(d, gf));
}

TEST_CASE("shuffle-with-superposition enumeration") {
  auto maps = shs_enumerate(1, 1);
  std::set<std::vector<int>> got;
  for (const auto& s : maps) got.insert(s.f);
  CHECK(got == std::set<std::vector<int>>{{1, 2}, {2, 1}, {1, 1}});
  CHECK(shs_enumerate(2, 1).size() == 5);
  CHECK(shs_enumerate(3, 0).size() == 1);
  CHECK(shs_enumerate(0, 0).size() == 1);

  for (int p = 0; p <= 5; ++p) {
    for (int q = 0; q <= 5; ++q) {
      auto all = shs_enumerate(p, q);
      std::set<std::vector<int>> dedup;
      for (const auto& s : all) {
        // Increasing on each block, image an interval [1..m].
        for (int i = 1; i < p; ++i) CHECK(s.f[i - 1] < s.f[i]);
        for (int j = 1; j < q; ++j) CHECK(s.f[p + j - 1] < s.f[p + j]);
        std::set<int> image(s.f.begin(), s.f.end());
        CHECK(static_cast<int>(image.size()) == s.image_size);
        if (!image.empty()) CHECK(*image.rbegin() == s.image_size);
        dedup.insert(s.f);
      }
      CHECK(dedup.size() == all.size());
      CHECK(static_cast<long long>(all.size()) == oracles::delannoy(p, q));
    }
  }
}

TEST_CASE("deformed diagram product") {
  Diagram e = diag({{{1, 1}, 1}});
  DiagLin prod = shs_product(e, e);
  CHECK(prod.size() == 3);
  CHECK(prod.coeff_of(diag({{{1, 1}, 1}, {{2, 2}, 1}})) == Coeff::one());
  CHECK(prod.coeff_of(diag({{{1, 2}, 1}, {{2, 1}, 1}})) == Coeff::qc());
  CHECK(prod.coeff_of(diag({{{1, 1}, 1}, {{1, 2}, 1}})) == Coeff::qs());

  Diagram d = example_diagram();
  CHECK(shs_product(d, Diagram()) == DiagLin::of(d));
  CHECK(shs_product(Diagram(), d) == DiagLin::of(d));

  // At qc = qs = 0 only the plain concatenation survives.
  DiagLin big = shs_product(d, e);
  DiagLin at00;
  for (const auto& [t, c] : big.terms())
    at00.add(t, Coeff::integer(c.eval(0, 0)));
  CHECK(at00 == DiagLin::of(diagram_concat(d, e)));

  // Edge-count grading.
  for (const auto& [t, c] : big.terms()) CHECK(t.edge_count() == d.edge_count() + 1);
}

TEST_CASE("mult counts set partition pairs") {
  CHECK(mult(diag({{{1, 1}, 1}})) == 1);
  CHECK(mult(diag({{{1, 1}, 1}, {{1, 2}, 1}})) == 2);
  CHECK(mult(diag({{{1, 1}, 2}})) == 1);
  CHECK_THROWS_AS(mult(example_diagram()), TooLargeError);
  CHECK(mult(example_diagram(), 11) == 1663200);  // 11!/(2!*3!*2!)
}

TEST_CASE("mult agrees with the full expansion") {
  for (int n = 1; n <= 4; ++n)
    for (const ExpandRow& row : expand(n)) CHECK(mult(row.diagram) == row.mult);
}

TEST_CASE("expansion by order") {
  auto rows1 = expand(1);
  REQUIRE(rows1.size() == 1);
  CHECK(rows1[0].mult == 1);
  CHECK(rows1[0].profile.alpha == std::map<int, int>{{1, 1}});
  CHECK(rows1[0].profile.beta == std::map<int, int>{{1, 1}});

  auto rows2 = expand(2);
  CHECK(rows2.size() == 5);
  std::multiset<long long> mults;
  long long total2 = 0;
  for (const auto& r : rows2) {
    mults.insert(r.mult);
    total2 += r.mult;
  }
  CHECK(mults == std::multiset<long long>{1, 2, 2, 2, 2});
  CHECK(total2 == 9);

  long long total3 = 0;
  for (const auto& r : expand(3)) total3 += r.mult;
  CHECK(total3 == 169);

  auto rows0 = expand(0);
  REQUIRE(rows0.size() == 1);
  CHECK(rows0[0].diagram == Diagram());
  CHECK(rows0[0].mult == 1);

  CHECK_THROWS_AS(expand(6), BoundError);
}

TEST_CASE("fubini numbers") {
  CHECK(fubini(0) == 1);
  CHECK(fubini(1) == 1);
  CHECK(fubini(2) == 3);
  CHECK(fubini(3) == 13);
  CHECK(fubini(4) == 75);
  CHECK(fubini(5) == 541);
}

TEST_CASE("degree profiles") {
  MultiIndex mi = multiindex(example_diagram());
  CHECK(mi.beta == std::map<int, int>{{3, 2}, {5, 1}});
  CHECK(mi.alpha == std::map<int, int>{{1, 1}, {2, 1}, {3, 1}, {5, 1}});
  CHECK(multiindex(Diagram()) == MultiIndex{});
  // The profile weights balance the edge count.
  for (const ExpandRow& row : expand(3)) {
    int white = 0, black = 0;
    for (auto [deg, cnt] : row.profile.alpha) white += deg * cnt;
    for (auto [deg, cnt] : row.profile.beta) black += deg * cnt;
    CHECK(white == 3);
    CHECK(black == 3);
  }
}

TEST_CASE("diagram JSON round trip") {
  Diagram d = example_diagram();
  CHECK(diagram_from_json(diagram_to_json(d)) == d);
  CHECK_THROWS_AS(diagram_from_json("{\"weights\":[{\"i\":2,\"j\":1,\"w\":1}]}"), GapError);
  CHECK_THROWS_AS(diagram_from_json("{\"weights\":[{\"i\":1,\"j\":1,\"w\":0}]}"),
                  ZeroWeightError);
  CHECK_THROWS_AS(diagram_from_json("not json"), ParseError);
  CHECK_THROWS_AS(diagram_from_json("{\"weights\":1}"), ParseError);
}
