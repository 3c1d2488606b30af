#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ldiag/word.hpp"

namespace ldiag {

// Labelled bipartite multigraph with ordered black spots (rows) and white
// spots (columns), stored as its weight function.  Valid diagrams have
// support projecting onto the intervals [1..p] and [1..q]; the empty
// diagram (p = q = 0) is the unit of concatenation.
class Diagram {
 public:
  using WeightMap = std::map<std::pair<int, int>, int>;  // (i,j) -> multiplicity

  Diagram() = default;  // the empty diagram

  // Validates the interval conditions; throws GapError on a hole in the row
  // or column labels and ZeroWeightError on a nonpositive multiplicity.
  static Diagram from_weights(WeightMap weights);

  const WeightMap& weights() const { return weights_; }
  int black_count() const { return p_; }
  int white_count() const { return q_; }
  bool empty() const { return weights_.empty(); }

  // Number of edges counted with multiplicity.
  int edge_count() const;

  // Degree of black spot l (1-based): the number of adjacent edges.
  int black_degree(int l) const;
  // Degree of white spot j (1-based).
  int white_degree(int j) const;

  bool operator==(const Diagram& o) const = default;
  // Canonical order: lexicographic on the weight map sorted by (i,j).
  bool operator<(const Diagram& o) const { return weights_ < o.weights_; }

 private:
  WeightMap weights_;
  int p_ = 0;
  int q_ = 0;
};

using DiagLin = LinearCombo<Diagram>;

// Shuffle-with-superposition map: an endofunction f of [1..p+q] with image
// [1..m], increasing on the first p and on the last q positions.
struct ShsMap {
  std::vector<int> f;  // f[k] is the image of position k+1
  int image_size = 0;
  int p = 0;
  int q = 0;

  bool operator==(const ShsMap& o) const = default;
};

// Degree profiles of a diagram: alpha counts white spots by degree, beta
// counts black spots by degree.
struct MultiIndex {
  std::map<int, int> alpha;
  std::map<int, int> beta;

  bool operator==(const MultiIndex& o) const = default;
};

// Word of monomials encoding d: letter i is prod_j x_j^{w(i,j)}.
Word code(const Diagram& d);

// Inverse of code; throws NotACodeError when the variable indices used in w
// do not form an interval [1..m].
Diagram decode(const Word& w);

// Concatenation: black spots of d2 relabelled after d1, white spots after
// d1's.  code(diagram_concat(d1,d2)) = code(d1) . T_{q1}(code(d2)).
Diagram diagram_concat(const Diagram& d1, const Diagram& d2);

// Black spot degree bks(d,l); throws IndexError when l is out of range.
int bks(const Diagram& d, int l);

// Relabels black spots through an onto map f: [1..p] -> [1..r], merging rows
// that share an image.  Throws NotOntoError when the image of f is not an
// interval [1..r].
Diagram act(const Diagram& d, const std::vector<int>& f);

// Complete enumeration of Shs(p,q); |Shs(p,q)| is the Delannoy number D(p,q).
std::vector<ShsMap> shs_enumerate(int p, int q);

// The deformed product of diagrams: sum over f in Shs(p1,p2) of
// qc^(crossings) qs^(superpositions) [d1|d2].f, degrees taken in the
// concatenation [d1|d2].
DiagLin shs_product(const Diagram& d1, const Diagram& d2);

// Number of pairs of ordered set partitions of [1..n] realizing d, counted
// by direct enumeration; throws TooLargeError above max_edges.
long long mult(const Diagram& d, int max_edges = 8);

MultiIndex multiindex(const Diagram& d);

struct ExpandRow {
  Diagram diagram;
  long long mult = 0;
  MultiIndex profile;
};

// Enumerates every pair of ordered set partitions of [1..n] and aggregates
// by diagram; the counts sum to fubini(n)^2.  Throws BoundError above the
// configured bound.
std::vector<ExpandRow> expand(int n, int bound = 5);

// Ordered Bell number by the binomial recurrence.
long long fubini(int n);

// JSON form {"weights":[{"i":1,"j":2,"w":2},...]}; validation as from_weights.
Diagram diagram_from_json(const std::string& text);
std::string diagram_to_json(const Diagram& d);

}  // namespace ldiag
