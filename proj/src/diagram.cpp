#include "ldiag/diagram.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "ldiag/errors.hpp"

namespace ldiag {

Diagram Diagram::from_weights(WeightMap weights) {
  Diagram d;
  if (weights.empty()) return d;
  std::map<int, int> rows, cols;  // index -> degree
  for (const auto& [ij, w] : weights) {
    if (w <= 0) throw ZeroWeightError("weight at (" + std::to_string(ij.first) + "," +
                                      std::to_string(ij.second) + ") must be positive");
    if (ij.first < 1 || ij.second < 1)
      throw GapError("spot labels must be positive");
    rows[ij.first] += w;
    cols[ij.second] += w;
  }
  int p = rows.rbegin()->first;
  int q = cols.rbegin()->first;
  if (static_cast<int>(rows.size()) != p)
    throw GapError("black spot labels do not form an interval [1..p]");
  if (static_cast<int>(cols.size()) != q)
    throw GapError("white spot labels do not form an interval [1..q]");
  d.weights_ = std::move(weights);
  d.p_ = p;
  d.q_ = q;
  return d;
}

int Diagram::edge_count() const {
  int n = 0;
  for (const auto& [ij, w] : weights_) n += w;
  return n;
}

int Diagram::black_degree(int l) const {
  int n = 0;
  for (const auto& [ij, w] : weights_)
    if (ij.first == l) n += w;
  return n;
}

int Diagram::white_degree(int j) const {
  int n = 0;
  for (const auto& [ij, w] : weights_)
    if (ij.second == j) n += w;
  return n;
}

Word code(const Diagram& d) {
  std::vector<Monomial::ExpMap> rows(d.black_count());
  for (const auto& [ij, w] : d.weights()) rows[ij.first - 1][ij.second] = w;
  std::vector<Monomial> letters;
  letters.reserve(rows.size());
  for (auto& r : rows) letters.push_back(Monomial::from_exps(std::move(r)));
  return Word(std::move(letters));
}

Diagram decode(const Word& w) {
  std::map<int, bool> used;
  Diagram::WeightMap weights;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& [j, e] : w[i].exps()) {
      weights[{static_cast<int>(i) + 1, j}] = e;
      used[j] = true;
    }
  }
  if (!used.empty() && used.rbegin()->first != static_cast<int>(used.size()))
    throw NotACodeError("variable indices do not form an interval [1..m]: index " +
                        std::to_string(used.rbegin()->first) + " used but only " +
                        std::to_string(used.size()) + " distinct indices occur");
  return Diagram::from_weights(std::move(weights));
}

Diagram diagram_concat(const Diagram& d1, const Diagram& d2) {
  Diagram::WeightMap weights = d1.weights();
  for (const auto& [ij, w] : d2.weights())
    weights[{ij.first + d1.black_count(), ij.second + d1.white_count()}] = w;
  return Diagram::from_weights(std::move(weights));
}

int bks(const Diagram& d, int l) {
  if (l < 1 || l > d.black_count())
    throw IndexError("black spot label " + std::to_string(l) + " out of range");
  return d.black_degree(l);
}

Diagram act(const Diagram& d, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != d.black_count())
    throw NotOntoError("relabelling map must cover every black spot");
  int r = 0;
  for (int v : f) r = std::max(r, v);
  std::vector<bool> hit(r + 1, false);
  for (int v : f) {
    if (v < 1) throw NotOntoError("relabelling map values must be positive");
    hit[v] = true;
  }
  for (int v = 1; v <= r; ++v)
    if (!hit[v]) throw NotOntoError("image of relabelling map is not [1..r]");
  Diagram::WeightMap weights;
  for (const auto& [ij, w] : d.weights()) weights[{f[ij.first - 1], ij.second}] += w;
  return Diagram::from_weights(std::move(weights));
}

std::vector<ShsMap> shs_enumerate(int p, int q) {
  // Walk the image slots left to right; each slot receives the next black
  // position, the next white position, or both.  This is exactly the
  // Delannoy lattice-path enumeration.
  std::vector<ShsMap> out;
  std::vector<int> f(p + q, 0);
  std::function<void(int, int, int)> walk = [&](int b, int w, int m) {
    if (b == p && w == q) {
      out.push_back(ShsMap{f, m, p, q});
      return;
    }
    if (b < p) {
      f[b] = m + 1;
      walk(b + 1, w, m + 1);
    }
    if (w < q) {
      f[p + w] = m + 1;
      walk(b, w + 1, m + 1);
    }
    if (b < p && w < q) {
      f[b] = m + 1;
      f[p + w] = m + 1;
      walk(b + 1, w + 1, m + 1);
    }
  };
  walk(0, 0, 0);
  return out;
}

DiagLin shs_product(const Diagram& d1, const Diagram& d2) {
  const Diagram joined = diagram_concat(d1, d2);
  const int p = d1.black_count(), q = d2.black_count();
  std::vector<int> deg(p + q);
  for (int i = 1; i <= p + q; ++i) deg[i - 1] = joined.black_degree(i);

  DiagLin out;
  for (const ShsMap& s : shs_enumerate(p, q)) {
    // Crossings and superpositions only arise between a black position
    // i <= p and a white position j > p, since f is increasing on each block.
    int qc_exp = 0, qs_exp = 0;
    for (int i = 0; i < p; ++i) {
      for (int j = p; j < p + q; ++j) {
        if (s.f[i] > s.f[j]) qc_exp += deg[i] * deg[j];
        else if (s.f[i] == s.f[j]) qs_exp += deg[i] * deg[j];
      }
    }
    out.add(act(joined, s.f), Coeff::term(qc_exp, qs_exp, 1));
  }
  return out;
}

long long mult(const Diagram& d, int max_edges) {
  const int n = d.edge_count();
  if (n > max_edges)
    throw TooLargeError("mult enumeration bounded at " + std::to_string(max_edges) +
                        " edges, diagram has " + std::to_string(n));
  if (n == 0) return d.empty() ? 1 : 0;
  // Assign elements 1..n to cells (i,j) one at a time, respecting the
  // remaining cell capacities.  Every leaf is one pair of ordered set
  // partitions (B_i), (W_j) with |B_i ∩ W_j| = w(i,j).
  std::vector<int> capacity;
  capacity.reserve(d.weights().size());
  for (const auto& [ij, w] : d.weights()) capacity.push_back(w);
  long long count = 0;
  std::function<void(int)> place = [&](int e) {
    if (e == n) {
      ++count;
      return;
    }
    for (std::size_t c = 0; c < capacity.size(); ++c) {
      if (capacity[c] == 0) continue;
      --capacity[c];
      place(e + 1);
      ++capacity[c];
    }
  };
  place(0);
  return count;
}

MultiIndex multiindex(const Diagram& d) {
  MultiIndex mi;
  for (int j = 1; j <= d.white_count(); ++j) mi.alpha[d.white_degree(j)] += 1;
  for (int i = 1; i <= d.black_count(); ++i) mi.beta[d.black_degree(i)] += 1;
  return mi;
}

namespace {

// All surjections [1..n] -> [1..p] for every p, as block assignments.
std::vector<std::vector<int>> ordered_set_partitions(int n) {
  std::vector<std::vector<int>> out;
  for (int p = 1; p <= n; ++p) {
    std::vector<int> f(n, 1);
    for (;;) {
      std::vector<bool> hit(p + 1, false);
      for (int v : f) hit[v] = true;
      bool onto = true;
      for (int v = 1; v <= p; ++v) onto = onto && hit[v];
      if (onto) out.push_back(f);
      int k = n - 1;
      while (k >= 0 && f[k] == p) {
        f[k] = 1;
        --k;
      }
      if (k < 0) break;
      ++f[k];
    }
  }
  return out;
}

}  // namespace

std::vector<ExpandRow> expand(int n, int bound) {
  if (n < 0 || n > bound)
    throw BoundError("expansion order " + std::to_string(n) + " above bound " +
                     std::to_string(bound));
  if (n == 0) return {{Diagram(), 1, MultiIndex{}}};  // the empty pair of partitions
  const auto parts = ordered_set_partitions(n);
  std::map<Diagram, long long> counts;
  for (const auto& blacks : parts) {
    for (const auto& whites : parts) {
      Diagram::WeightMap weights;
      for (int e = 0; e < n; ++e) weights[{blacks[e], whites[e]}] += 1;
      counts[Diagram::from_weights(std::move(weights))] += 1;
    }
  }
  std::vector<ExpandRow> rows;
  rows.reserve(counts.size());
  for (const auto& [d, c] : counts) rows.push_back({d, c, multiindex(d)});
  return rows;
}

long long fubini(int n) {
  // a(n) = sum_{k=1..n} C(n,k) a(n-k), a(0) = 1.
  std::vector<long long> a(n + 1, 0), binom(n + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    binom[0] = 1;
    for (int k = m; k >= 1; --k) binom[k] = binom[k] + binom[k - 1];
    long long s = 0;
    for (int k = 1; k <= m; ++k) s += binom[k] * a[m - k];
    a[m] = s;
  }
  return a[n];
}

Diagram diagram_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "invalid JSON: " + std::string(e.what()));
  }
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array())
    throw ParseError(0, "diagram JSON must be {\"weights\":[{\"i\":..,\"j\":..,\"w\":..},...]}");
  Diagram::WeightMap weights;
  for (const auto& entry : j["weights"]) {
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
        !entry.contains("w"))
      throw ParseError(0, "each weight entry needs integer fields i, j, w");
    int i = entry["i"].get<int>();
    int jj = entry["j"].get<int>();
    int w = entry["w"].get<int>();
    if (weights.count({i, jj}))
      throw ParseError(0, "duplicate weight entry for (" + std::to_string(i) + "," +
                              std::to_string(jj) + ")");
    weights[{i, jj}] = w;
  }
  return Diagram::from_weights(std::move(weights));
}

std::string diagram_to_json(const Diagram& d) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [ij, w] : d.weights())
    entries.push_back({{"i", ij.first}, {"j", ij.second}, {"w", w}});
  return nlohmann::json{{"weights", entries}}.dump();
}

}  // namespace ldiag
