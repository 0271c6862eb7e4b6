#include "minorhom/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "minorhom/error.hpp"
#include "minorhom/linalg.hpp"

namespace minorhom {

namespace {

using Poly = std::vector<Int>;
using EdgeList = std::vector<std::pair<int, int>>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

// k^c (k-1)^f
Poly forest_poly(long c, long f) {
  Poly out(static_cast<std::size_t>(c) + 1, Int(0));
  out.back() = 1;
  Poly factor = {Int(-1), Int(1)};
  for (long i = 0; i < f; ++i) out = poly_mul(out, factor);
  return out;
}

// k (k-1) ... (k-n+1)
Poly falling_factorial(long n) {
  Poly out = {Int(1)};
  for (long i = 0; i < n; ++i) out = poly_mul(out, Poly{Int(-i), Int(1)});
  return out;
}

struct ChromaticContext {
  std::map<std::string, Poly> memo;
};

std::string graph_key(int n, const EdgeList& edges) {
  std::string key;
  key.push_back(static_cast<char>(n));
  auto encode = [&key](const EdgeList& es) {
    for (auto [a, b] : es) {
      key.push_back(static_cast<char>(a));
      key.push_back(static_cast<char>(b));
    }
  };
  if (n > 7) {
    encode(edges);
    return key;
  }
  // Small graphs: canonical form by minimizing the relabeled edge list.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList relabeled;
    relabeled.reserve(edges.size());
    for (auto [a, b] : edges) {
      int u = perm[static_cast<std::size_t>(a)];
      int v = perm[static_cast<std::size_t>(b)];
      relabeled.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (first || relabeled < best) {
      best = std::move(relabeled);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  encode(best);
  return key;
}

Poly chromatic_rec(int n, EdgeList edges, ChromaticContext& ctx);

// Split into connected components and multiply.
Poly chromatic_by_components(int n, const EdgeList& edges, ChromaticContext& ctx) {
  std::vector<int> root(static_cast<std::size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [a, b] : edges) root[static_cast<std::size_t>(find(a))] = find(b);

  std::map<int, std::vector<int>> members;
  for (int v = 0; v < n; ++v) members[find(v)].push_back(v);
  if (members.size() <= 1) return chromatic_rec(n, edges, ctx);

  Poly out = {Int(1)};
  for (const auto& [rep, verts] : members) {
    std::map<int, int> local;
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    EdgeList sub;
    for (auto [a, b] : edges)
      if (find(a) == rep) sub.emplace_back(local[a], local[b]);
    for (auto& [a, b] : sub)
      if (a > b) std::swap(a, b);
    std::sort(sub.begin(), sub.end());
    out = poly_mul(out, chromatic_rec(static_cast<int>(verts.size()), sub, ctx));
  }
  return out;
}

Poly chromatic_rec(int n, EdgeList edges, ChromaticContext& ctx) {
  if (n == 0) return {Int(1)};
  const long m = static_cast<long>(edges.size());
  if (m == 0) {
    Poly out(static_cast<std::size_t>(n) + 1, Int(0));
    out.back() = 1;
    return out;
  }
  if (m == n - 1) return forest_poly(1, n - 1);  // connected by construction below
  if (m == static_cast<long>(n) * (n - 1) / 2) return falling_factorial(n);

  std::string key = graph_key(n, edges);
  auto hit = ctx.memo.find(key);
  if (hit != ctx.memo.end()) return hit->second;

  // Pivot on an edge with the largest combined degree: contractions then
  // reach the dense shortcuts sooner.
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : edges) {
    ++degree[static_cast<std::size_t>(a)];
    ++degree[static_cast<std::size_t>(b)];
  }
  std::size_t pick = 0;
  int best_score = -1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int score = degree[static_cast<std::size_t>(edges[i].first)] +
                degree[static_cast<std::size_t>(edges[i].second)];
    if (score > best_score) {
      best_score = score;
      pick = i;
    }
  }
  auto [u, v] = edges[pick];

  EdgeList deleted = edges;
  deleted.erase(deleted.begin() + static_cast<std::ptrdiff_t>(pick));

  std::set<std::pair<int, int>> contracted;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == pick) continue;
    auto relabel = [&](int x) {
      if (x == v) x = u;
      return x > v ? x - 1 : x;
    };
    int a = relabel(edges[i].first);
    int b = relabel(edges[i].second);
    if (a == b) continue;  // parallel edge to the pivot collapses
    contracted.insert({std::min(a, b), std::max(a, b)});
  }

  Poly out = poly_sub(chromatic_by_components(n, deleted, ctx),
                      chromatic_by_components(n - 1, EdgeList(contracted.begin(), contracted.end()), ctx));
  ctx.memo.emplace(std::move(key), out);
  return out;
}

// Shared combination iterator: calls fn on every size-k index subset of 0..n-1.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

}  // namespace

std::vector<Int> chromatic_polynomial(const SimpleGraph& h, std::size_t max_edges) {
  if (h.edge_count() > max_edges)
    fail(ErrorKind::TooLarge, "chromatic recursion capped at " + std::to_string(max_edges) +
                                  " edges, got " + std::to_string(h.edge_count()));
  ChromaticContext ctx;
  Poly out = chromatic_by_components(static_cast<int>(h.vertex_count()), h.edges(), ctx);
  out.resize(h.vertex_count() + 1, Int(0));
  return out;
}

Int evaluate_poly(const std::vector<Int>& coeffs, const Int& x) {
  Int acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PoincareVector conf_poincare(const Graph& g, int d) {
  if (d < 1) fail(ErrorKind::BadConfig, "coefficient dimension d must be positive");
  SimpleGraph h = complement_line_graph(g);
  Poly chi = chromatic_polynomial(h);
  PoincareVector pv;
  pv.generator_degree = 2 * d - 1;
  const int n = static_cast<int>(h.vertex_count());
  for (int j = 0; j <= n; ++j) {
    Int coeff = chi[static_cast<std::size_t>(n - j)];
    if (coeff == 0) continue;
    pv.ranks[j * pv.generator_degree] = abs_int(coeff).convert_to<long long>();
  }
  return pv;
}

namespace {

// All simple cycles as vertex sequences: smallest vertex first, second vertex
// smaller than the last (one orientation per cycle).
std::vector<std::vector<int>> simple_cycles(const SimpleGraph& h, std::size_t max_length,
                                            std::size_t max_count) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(h.vertex_count());
  std::vector<char> in_path(static_cast<std::size_t>(n), 0);
  std::vector<int> path;
  std::function<void(int, int)> extend = [&](int start, int v) {
    for (int w : h.neighbors(v)) {
      if (w == start && path.size() >= 3) {
        if (path[1] < path.back()) {
          out.push_back(path);
          if (out.size() > max_count)
            fail(ErrorKind::TooLarge, "cycle enumeration exceeded " + std::to_string(max_count));
        }
      } else if (w > start && !in_path[static_cast<std::size_t>(w)] && path.size() < max_length) {
        in_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        extend(start, w);
        in_path[static_cast<std::size_t>(w)] = 0;
        path.pop_back();
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    in_path[static_cast<std::size_t>(s)] = 1;
    extend(s, s);
    in_path[static_cast<std::size_t>(s)] = 0;
  }
  return out;
}

}  // namespace

OSPresentation os_presentation(const Graph& g, int d, std::size_t max_cycle_length) {
  if (d < 1) fail(ErrorKind::BadConfig, "coefficient dimension d must be positive");
  SimpleGraph h = complement_line_graph(g);

  OSPresentation pres;
  pres.generator_degree = 2 * d - 1;
  pres.parity = OSPresentation::Parity::Odd;
  for (const auto& [u, w] : h.edge_labels()) pres.generators.push_back(u + "|" + w);

  std::map<std::pair<int, int>, int> edge_index;
  for (std::size_t k = 0; k < h.edges().size(); ++k) edge_index[h.edges()[k]] = static_cast<int>(k);

  std::size_t cap = max_cycle_length == 0 ? h.vertex_count() : max_cycle_length;
  for (const auto& cycle : simple_cycles(h, cap, 200000)) {
    // Orientation sign per cycle edge: +1 when the traversal runs from the
    // smaller endpoint to the larger.
    std::vector<std::pair<int, int>> signed_edges;  // (generator, sign)
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int a = cycle[i];
      int b = cycle[(i + 1) % cycle.size()];
      int gen = edge_index.at({std::min(a, b), std::max(a, b)});
      signed_edges.emplace_back(gen, a < b ? 1 : -1);
    }
    std::sort(signed_edges.begin(), signed_edges.end());
    if (signed_edges.front().second < 0)
      for (auto& [gen, sign] : signed_edges) sign = -sign;

    OSRelation rel;
    for (const auto& [gen, sign] : signed_edges) rel.cycle.push_back(gen);
    for (std::size_t omit = 0; omit < signed_edges.size(); ++omit) {
      std::vector<int> monomial = rel.cycle;
      monomial.erase(monomial.begin() + static_cast<std::ptrdiff_t>(omit));
      rel.terms.emplace_back(std::move(monomial), signed_edges[omit].second);
    }
    pres.relations.push_back(std::move(rel));
  }
  std::sort(pres.relations.begin(), pres.relations.end(),
            [](const OSRelation& a, const OSRelation& b) {
              return std::make_pair(a.cycle.size(), a.cycle) <
                     std::make_pair(b.cycle.size(), b.cycle);
            });
  return pres;
}

OsRankReport os_rank_check(const Graph& g, int d, int max_degree) {
  if (max_degree < 0) fail(ErrorKind::BadConfig, "max_degree must be nonnegative");
  OsRankReport report;
  report.d = d;
  report.max_degree = max_degree;
  PoincareVector pv = conf_poincare(g, d);
  const int r = pv.generator_degree;
  OSPresentation pres = os_presentation(g, d, static_cast<std::size_t>(max_degree / r + 1));
  const int gens = static_cast<int>(pres.generators.size());

  for (int degree = 0; degree <= max_degree; ++degree) {
    OsDegreeRank entry;
    entry.degree = degree;
    entry.predicted = pv.rank(degree);
    if (degree % r != 0) {
      entry.presented = 0;
    } else {
      int j = degree / r;
      Int monomials = binomial(gens, j);
      if (monomials > 200000) fail(ErrorKind::TooLarge, "too many monomials in degree " +
                                                            std::to_string(degree));
      // Column per squarefree monomial of size j.
      std::map<std::vector<int>, int> column;
      for_each_subset(gens, j, [&](const std::vector<int>& subset) {
        int next = static_cast<int>(column.size());
        column.emplace(subset, next);
      });
      // Row per (cycle relation, multiplier monomial); squares vanish.
      std::vector<std::map<int, int>> rows;
      for (const auto& rel : pres.relations) {
        int usize = j + 1 - static_cast<int>(rel.cycle.size());
        if (usize < 0) continue;
        for_each_subset(gens, usize, [&](const std::vector<int>& u) {
          std::map<int, int> row;
          for (const auto& [monomial, sign] : rel.terms) {
            std::vector<int> merged;
            std::set_union(monomial.begin(), monomial.end(), u.begin(), u.end(),
                           std::back_inserter(merged));
            if (merged.size() != static_cast<std::size_t>(j)) continue;  // repeated generator
            row[column.at(merged)] += sign;
          }
          if (!row.empty()) rows.push_back(std::move(row));
        });
      }
      SparseIntMatrix relmat(rows.size(), column.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [col, value] : rows[i])
          relmat.set(static_cast<int>(i), col, Int(value));
      entry.presented =
          static_cast<long long>(column.size() - rank_over_q(relmat));
    }
    if (entry.presented != entry.predicted) report.consistent = false;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace minorhom
