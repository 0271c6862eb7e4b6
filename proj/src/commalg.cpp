#include "minorhom/commalg.hpp"

#include <algorithm>
#include <set>

#include "minorhom/error.hpp"
#include "minorhom/homology.hpp"
#include "minorhom/linalg.hpp"

namespace minorhom {

namespace {

Coefficients field_for(long long characteristic) {
  if (characteristic == 0) return Coefficients::rationals();
  return Coefficients::mod(characteristic);
}

std::size_t field_rank_of(const SparseIntMatrix& a, long long characteristic) {
  if (characteristic == 0) return rank_over_q(a);
  return rank_mod_p(a, characteristic);
}

}  // namespace

SquarefreeMonomialIdeal SquarefreeMonomialIdeal::make(
    std::vector<std::string> variables, std::vector<std::vector<std::string>> generators) {
  SquarefreeMonomialIdeal ideal;
  std::sort(variables.begin(), variables.end());
  auto dup = std::adjacent_find(variables.begin(), variables.end());
  if (dup != variables.end()) fail(ErrorKind::BadConfig, "duplicate variable '" + *dup + "'");
  ideal.variables = std::move(variables);

  std::set<std::vector<std::string>> seen;
  for (auto& gen : generators) {
    std::sort(gen.begin(), gen.end());
    gen.erase(std::unique(gen.begin(), gen.end()), gen.end());
    for (const auto& var : gen)
      if (!std::binary_search(ideal.variables.begin(), ideal.variables.end(), var))
        fail(ErrorKind::NotSubset, "generator uses unknown variable '" + var + "'");
    seen.insert(std::move(gen));
  }
  for (const auto& gen : seen) {
    bool redundant = false;
    for (const auto& other : seen) {
      if (other == gen) continue;
      if (std::includes(gen.begin(), gen.end(), other.begin(), other.end())) {
        redundant = true;  // a strictly smaller generator already divides it
        break;
      }
    }
    if (!redundant) ideal.generators.push_back(gen);
  }
  return ideal;
}

bool SquarefreeMonomialIdeal::contains(const std::map<std::string, int>& exponents) const {
  for (const auto& gen : generators) {
    bool divides = true;
    for (const auto& var : gen) {
      auto it = exponents.find(var);
      if (it == exponents.end() || it->second < 1) {
        divides = false;
        break;
      }
    }
    if (divides) return true;
  }
  return false;
}

SquarefreeMonomialIdeal edge_ideal_lc(const Graph& g) {
  std::vector<std::vector<std::string>> gens;
  const auto& ids = g.edge_ids();
  for (std::size_t a = 0; a < ids.size(); ++a) {
    auto ea = g.ends(static_cast<int>(a));
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      auto eb = g.ends(static_cast<int>(b));
      bool share = ea.first == eb.first || ea.first == eb.second ||
                   ea.second == eb.first || ea.second == eb.second;
      if (!share) gens.push_back({ids[a], ids[b]});
    }
  }
  return SquarefreeMonomialIdeal::make(ids, std::move(gens));
}

long hochster_betti(const Graph& g, int i, const std::vector<std::string>& sigma,
                    long long characteristic) {
  if (i < 0) fail(ErrorKind::BadDegree, "betti index must be nonnegative");
  std::vector<std::string> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& e : sorted)
    if (!g.has_edge(e)) fail(ErrorKind::UnknownEdge, "degree mentions unknown edge '" + e + "'");

  int degree = static_cast<int>(sorted.size()) - i - 2;
  if (degree < -1) return 0;
  auto restricted = flag_complex_of_line_graph(g).restricted_to(sorted);
  // Over a field, cohomology and homology of a finite complex have equal
  // dimensions in every degree.
  return homology(restricted, degree, field_for(characteristic), /*reduced=*/true).free_rank;
}

long koszul_betti_oracle(const SquarefreeMonomialIdeal& ideal, int i,
                         const std::map<std::string, int>& sigma, long long characteristic) {
  if (i < 0) fail(ErrorKind::BadDegree, "betti index must be nonnegative");
  if (ideal.variables.size() > 8)
    fail(ErrorKind::TooLarge, "Koszul oracle limited to 8 variables, got " +
                                  std::to_string(ideal.variables.size()));
  if (characteristic != 0) (void)PrimeField(characteristic);  // validate early

  std::vector<std::string> support;
  for (const auto& [var, exp] : sigma) {
    if (!std::binary_search(ideal.variables.begin(), ideal.variables.end(), var))
      fail(ErrorKind::Mismatch, "multidegree mentions unknown variable '" + var + "'");
    if (exp < 0) fail(ErrorKind::Mismatch, "negative exponent for '" + var + "'");
    if (exp > 0) support.push_back(var);
  }
  std::sort(support.begin(), support.end());
  const int n = static_cast<int>(support.size());
  if (i > n) return 0;

  // Strand of K(x_1..x_m) (x) I in multidegree sigma.  A basis element in
  // homological degree p is a p-subset tau of the support with
  // x^{sigma - tau} in I; the differential drops one element of tau at a time
  // with alternating signs and multiplies the coefficient monomial back up.
  auto strand = [&](int p) {
    std::vector<std::vector<int>> basis;
    if (p < 0 || p > n) return basis;
    std::vector<int> idx(p);
    for (int k = 0; k < p; ++k) idx[k] = k;
    while (true) {
      std::map<std::string, int> rest = sigma;
      for (int k : idx) rest[support[static_cast<std::size_t>(k)]] -= 1;
      if (ideal.contains(rest)) basis.push_back(idx);
      int pos = p - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - p + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int k = pos + 1; k < p; ++k)
        idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
    }
    return basis;
  };

  auto differential = [&](const std::vector<std::vector<int>>& from,
                          const std::vector<std::vector<int>>& to) {
    std::map<std::vector<int>, int> row_of;
    for (std::size_t r = 0; r < to.size(); ++r) row_of[to[r]] = static_cast<int>(r);
    SparseIntMatrix d(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
      int sign = 1;
      for (std::size_t k = 0; k < from[c].size(); ++k) {
        std::vector<int> dropped = from[c];
        dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(k));
        auto it = row_of.find(dropped);
        // Multiplying by x_t keeps the coefficient inside the ideal, so the
        // face is always present; guard anyway for the zero strand.
        if (it != row_of.end()) d.set(it->second, static_cast<int>(c), Int(sign));
        sign = -sign;
      }
    }
    return d;
  };

  auto below = strand(i - 1);
  auto here = strand(i);
  auto above = strand(i + 1);
  std::size_t rank_in = field_rank_of(differential(here, below), characteristic);
  std::size_t rank_out = field_rank_of(differential(above, here), characteristic);
  return static_cast<long>(here.size() - rank_in - rank_out);
}

long coarse_betti(const Graph& g, int i, int a, long long characteristic) {
  if (i < 0) fail(ErrorKind::BadDegree, "betti index must be nonnegative");
  const auto& ids = g.edge_ids();
  const int m = static_cast<int>(ids.size());
  if (a < 0 || a > m) return 0;
  long total = 0;
  std::vector<int> idx(static_cast<std::size_t>(a));
  for (int k = 0; k < a; ++k) idx[static_cast<std::size_t>(k)] = k;
  while (true) {
    std::vector<std::string> sigma;
    for (int k : idx) sigma.push_back(ids[static_cast<std::size_t>(k)]);
    total += hochster_betti(g, i, sigma, characteristic);
    int pos = a - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - a + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int k = pos + 1; k < a; ++k)
      idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
  }
  return total;
}

int max_nonzero_degree(const Graph& g, int i, long long characteristic) {
  for (int a = static_cast<int>(g.edge_count()); a >= 0; --a)
    if (coarse_betti(g, i, a, characteristic) > 0) return a;
  return -1;
}

BettiTable betti_table(const Graph& g, int max_i, long long characteristic) {
  if (max_i < 0) fail(ErrorKind::BadDegree, "betti index must be nonnegative");
  BettiTable table;
  const auto& ids = g.edge_ids();
  const std::size_t m = ids.size();
  if (m > 20) fail(ErrorKind::TooLarge, "betti table sweeps all edge subsets; 20 edge cap");
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::string> sigma;
    for (std::size_t b = 0; b < m; ++b)
      if (mask & (std::size_t{1} << b)) sigma.push_back(ids[b]);
    for (int i = 0; i <= max_i; ++i) {
      long value = hochster_betti(g, i, sigma, characteristic);
      if (value != 0) table.entries[{i, sigma}] = value;
    }
  }
  return table;
}

}  // namespace minorhom
