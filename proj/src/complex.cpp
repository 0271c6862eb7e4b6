#include "minorhom/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "minorhom/minor.hpp"

namespace minorhom {

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
  out << "}";
  return out.str();
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<std::string> ground, const std::vector<std::vector<std::string>>& facets) {
  SimplicialComplex c;
  c.ground_ = std::move(ground);
  std::sort(c.ground_.begin(), c.ground_.end());
  c.ground_.erase(std::unique(c.ground_.begin(), c.ground_.end()), c.ground_.end());
  for (std::size_t i = 0; i < c.ground_.size(); ++i) c.gidx_[c.ground_[i]] = (int)i;

  std::set<std::vector<int>> raw;
  for (const auto& facet : facets) {
    std::vector<int> f;
    for (const auto& label : facet) {
      auto it = c.gidx_.find(label);
      if (it == c.gidx_.end())
        fail(ErrorKind::NotSubset, "facet label " + label + " not in ground set");
      f.push_back(it->second);
    }
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    raw.insert(f);
  }
  // keep only maximal faces
  for (const auto& f : raw) {
    bool maximal = true;
    for (const auto& g : raw) {
      if (&f == &g || f.size() >= g.size()) continue;
      if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) c.facets_.push_back(f);
  }
  std::sort(c.facets_.begin(), c.facets_.end());
  return c;
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> ground) {
  return from_facets(std::move(ground), {});
}

SimplicialComplex SimplicialComplex::empty_face_only(std::vector<std::string> ground) {
  return from_facets(std::move(ground), {{}});
}

int SimplicialComplex::dimension() const {
  if (is_void()) return kVoidDimension;
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, (int)f.size() - 1);
  return d;
}

int SimplicialComplex::ground_index(const std::string& label) const {
  auto it = gidx_.find(label);
  if (it == gidx_.end()) fail(ErrorKind::NotSubset, "label " + label + " not in ground set");
  return it->second;
}

std::vector<std::vector<std::string>> SimplicialComplex::facet_labels() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : facets_) {
    std::vector<std::string> labels;
    for (int i : f) labels.push_back(ground_[i]);
    out.push_back(labels);
  }
  return out;
}

const std::vector<std::vector<int>>& SimplicialComplex::faces(int dim) const {
  auto it = faces_cache_.find(dim);
  if (it != faces_cache_.end()) return it->second;

  std::vector<std::vector<int>> result;
  if (dim == -1) {
    if (!is_void()) result.push_back({});
  } else if (dim >= 0) {
    std::set<std::vector<int>> found;
    std::size_t k = (std::size_t)dim + 1;
    std::vector<int> pick(k);
    for (const auto& facet : facets_) {
      if (facet.size() < k) continue;
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
          found.insert(pick);
          return;
        }
        for (std::size_t i = start; i + (k - pos) <= facet.size(); ++i) {
          pick[pos] = facet[i];
          rec(pos + 1, i + 1);
        }
      };
      rec(0, 0);
    }
    result.assign(found.begin(), found.end());
  }
  return faces_cache_.emplace(dim, std::move(result)).first->second;
}

int SimplicialComplex::face_index(const std::vector<int>& face) const {
  int dim = (int)face.size() - 1;
  auto it = index_cache_.find(dim);
  if (it == index_cache_.end()) {
    std::map<std::vector<int>, int> index;
    const auto& fs = faces(dim);
    for (std::size_t i = 0; i < fs.size(); ++i) index[fs[i]] = (int)i;
    it = index_cache_.emplace(dim, std::move(index)).first;
  }
  auto jt = it->second.find(face);
  return jt == it->second.end() ? -1 : jt->second;
}

bool SimplicialComplex::is_face(std::vector<int> face) const {
  std::sort(face.begin(), face.end());
  for (const auto& facet : facets_)
    if (std::includes(facet.begin(), facet.end(), face.begin(), face.end())) return true;
  return false;
}

bool SimplicialComplex::is_face_labels(const std::vector<std::string>& labels) const {
  std::vector<int> face;
  for (const auto& label : labels) {
    auto it = gidx_.find(label);
    if (it == gidx_.end()) return false;
    face.push_back(it->second);
  }
  return is_face(std::move(face));
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  if (is_void()) return out;
  int d = dimension();
  for (int k = -1; k <= d; ++k) out.push_back(face_count(k));
  return out;
}

Int SimplicialComplex::euler_characteristic() const {
  Int chi = 0;
  int d = dimension();
  for (int k = 0; k <= d; ++k) {
    Int term = (Int)(long long)face_count(k);
    chi += (k % 2 == 0) ? term : -term;
  }
  return chi;
}

Int SimplicialComplex::reduced_euler_characteristic() const {
  if (is_void()) return 0;
  return euler_characteristic() - 1;
}

SimplicialComplex SimplicialComplex::restricted_to(const std::vector<std::string>& subset) const {
  std::set<int> keep;
  for (const auto& label : subset) keep.insert(ground_index(label));  // NotSubset on foreign labels
  std::vector<std::string> new_ground(subset);
  std::vector<std::vector<std::string>> new_facets;
  for (const auto& facet : facets_) {
    std::vector<std::string> cut;
    for (int i : facet)
      if (keep.count(i)) cut.push_back(ground_[i]);
    new_facets.push_back(cut);
  }
  return from_facets(std::move(new_ground), new_facets);
}

// --- boundary ----------------------------------------------------------------

std::size_t OrientedBoundary::chain_dim(int k) const {
  if (k == -1) return (reduced_ && !complex_->is_void()) ? 1 : 0;
  if (k < -1) return 0;
  return complex_->face_count(k);
}

const SparseIntMatrix& OrientedBoundary::matrix(int k) const {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;

  SparseIntMatrix m(chain_dim(k - 1), chain_dim(k));
  if (k == 0 && reduced_ && !complex_->is_void()) {
    const auto& verts = complex_->faces(0);
    for (std::size_t j = 0; j < verts.size(); ++j) m.set(0, j, 1);
  } else if (k >= 1) {
    const auto& top = complex_->faces(k);
    for (std::size_t j = 0; j < top.size(); ++j) {
      std::vector<int> sub(top[j].begin(), top[j].end());
      for (std::size_t i = 0; i < top[j].size(); ++i) {
        sub.erase(sub.begin() + i);
        int row = complex_->face_index(sub);
        m.set((std::size_t)row, j, (i % 2 == 0) ? 1 : -1);
        sub.insert(sub.begin() + i, top[j][i]);
      }
    }
  }
  return cache_.emplace(k, std::move(m)).first->second;
}

bool OrientedBoundary::squares_to_zero() const {
  if (complex_->is_void()) return true;
  int d = complex_->dimension();
  for (int k = 1; k <= d; ++k)
    if (!(matrix(k - 1) * matrix(k)).is_zero()) return false;
  return true;
}

// --- graph complexes ----------------------------------------------------------

namespace {

SimplicialComplex degree_bounded_complex(const Graph& g, int d) {
  const std::size_t m = g.edge_count();
  std::vector<int> budget(g.vertex_count(), d);
  std::vector<int> current;
  std::vector<std::vector<int>> all;

  auto cost_ok = [&](int e) {
    auto [u, v] = g.ends(e);
    if (u == v) return budget[u] >= 2;
    return budget[u] >= 1 && budget[v] >= 1;
  };
  auto apply = [&](int e, int sign) {
    auto [u, v] = g.ends(e);
    if (u == v)
      budget[u] -= 2 * sign;
    else {
      budget[u] -= sign;
      budget[v] -= sign;
    }
  };

  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    all.push_back(current);
    for (std::size_t e = start; e < m; ++e) {
      if (!cost_ok((int)e)) continue;
      apply((int)e, 1);
      current.push_back((int)e);
      rec(e + 1);
      current.pop_back();
      apply((int)e, -1);
    }
  };
  rec(0);

  // facets = sets with no single-edge extension
  std::set<std::vector<int>> all_set(all.begin(), all.end());
  std::vector<std::vector<std::string>> facet_labels;
  for (const auto& face : all) {
    bool maximal = true;
    for (std::size_t e = 0; e < m && maximal; ++e) {
      if (std::binary_search(face.begin(), face.end(), (int)e)) continue;
      std::vector<int> bigger(face);
      bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), (int)e), (int)e);
      if (all_set.count(bigger)) maximal = false;
    }
    if (maximal) {
      std::vector<std::string> labels;
      for (int e : face) labels.push_back(g.edge_ids()[e]);
      facet_labels.push_back(labels);
    }
  }
  return SimplicialComplex::from_facets(g.edge_ids(), facet_labels);
}

}  // namespace

SimplicialComplex matching_complex(const Graph& g) { return degree_bounded_complex(g, 1); }

SimplicialComplex d_matching_complex(const Graph& g, int d) {
  if (d < 1) fail(ErrorKind::BadDegree, "degree bound must be >= 1");
  return degree_bounded_complex(g, d);
}

EdgeProperty matching_property() { return d_matching_property(1); }

EdgeProperty d_matching_property(int d) {
  if (d < 1) fail(ErrorKind::BadDegree, "degree bound must be >= 1");
  return [d](const Graph& g, const std::vector<std::string>& edges) {
    std::vector<int> degree(g.vertex_count(), 0);
    for (const auto& id : edges) {
      auto [u, v] = g.ends(g.edge_index(id));
      degree[u] += u == v ? 2 : 1;
      if (u != v) degree[v] += 1;
    }
    for (int x : degree)
      if (x > d) return false;
    return true;
  };
}

SimplicialComplex monotone_property_complex(const Graph& g, const EdgeProperty& property,
                                            std::size_t max_edges) {
  const std::size_t m = g.edge_count();
  if (m > max_edges)
    fail(ErrorKind::TooLarge, "property complex capped at " + std::to_string(max_edges) + " edges");

  auto subset_labels = [&](unsigned long mask) {
    std::vector<std::string> labels;
    for (std::size_t e = 0; e < m; ++e)
      if (mask >> e & 1) labels.push_back(g.edge_ids()[e]);
    return labels;
  };

  std::vector<unsigned long> by_size;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) by_size.push_back(mask);
  std::sort(by_size.begin(), by_size.end(), [](unsigned long a, unsigned long b) {
    int pa = __builtin_popcountl(a), pb = __builtin_popcountl(b);
    return pa != pb ? pa < pb : a < b;
  });

  std::set<unsigned long> satisfied;
  for (unsigned long mask : by_size) {
    if (!property(g, subset_labels(mask))) continue;
    // downward closure: every one-smaller subset must be satisfied too
    for (std::size_t e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      unsigned long smaller = mask & ~(1ul << e);
      if (!satisfied.count(smaller))
        fail(ErrorKind::NotMonotone,
             "property holds on " + join_labels(subset_labels(mask)) + " but fails on " +
                 join_labels(subset_labels(smaller)));
    }
    satisfied.insert(mask);
  }
  if (!satisfied.count(0ul))
    fail(ErrorKind::NotMonotone, "property fails on the empty edge set");

  std::vector<std::vector<std::string>> facets;
  for (unsigned long mask : satisfied) {
    bool maximal = true;
    for (std::size_t e = 0; e < m && maximal; ++e)
      if (!(mask >> e & 1) && satisfied.count(mask | (1ul << e))) maximal = false;
    if (maximal) facets.push_back(subset_labels(mask));
  }
  return SimplicialComplex::from_facets(g.edge_ids(), facets);
}

SimplicialComplex flag_complex_of_line_graph(const Graph& g) {
  SimpleGraph l = line_graph(g);
  const std::size_t n = l.vertex_count();

  // Bron-Kerbosch, no pivoting; sizes here are tiny.
  std::vector<std::vector<std::string>> cliques;
  std::vector<int> r;
  std::function<void(std::vector<int>, std::vector<int>)> bk = [&](std::vector<int> p,
                                                                   std::vector<int> x) {
    if (p.empty() && x.empty()) {
      std::vector<std::string> labels;
      for (int v : r) labels.push_back(l.vertex_ids()[v]);
      cliques.push_back(labels);
      return;
    }
    auto pcopy = p;
    for (int v : pcopy) {
      std::vector<int> np, nx;
      for (int w : p)
        if (l.adjacent(v, w)) np.push_back(w);
      for (int w : x)
        if (l.adjacent(v, w)) nx.push_back(w);
      r.push_back(v);
      bk(np, nx);
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = (int)i;
  bk(all, {});
  return SimplicialComplex::from_facets(l.vertex_ids(), cliques);
}

ComplexBuilder matching_builder() {
  return {"matching", [](const Graph& g) { return matching_complex(g); }};
}

ComplexBuilder d_matching_builder(int d) {
  if (d < 1) fail(ErrorKind::BadDegree, "degree bound must be >= 1");
  return {"dmatching" + std::to_string(d),
          [d](const Graph& g) { return d_matching_complex(g, d); }};
}

ComplexBuilder flag_builder() {
  return {"flag", [](const Graph& g) { return flag_complex_of_line_graph(g); }};
}

std::vector<GopMonotoneCounterexample> check_gop_monotone(
    const EdgeProperty& property, const std::vector<MinorMorphism>& morphisms,
    std::size_t max_edges) {
  std::vector<GopMonotoneCounterexample> out;
  for (std::size_t idx = 0; idx < morphisms.size(); ++idx) {
    const MinorMorphism& phi = morphisms[idx];
    const Graph& src = phi.source();
    const Graph& dst = phi.target();
    std::size_t m = dst.edge_count();
    if (m > max_edges)
      fail(ErrorKind::TooLarge, "compatibility check capped at " + std::to_string(max_edges) +
                                    " target edges");
    auto pullback = edge_injection(phi);
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
      std::vector<std::string> subset;
      for (std::size_t e = 0; e < m; ++e)
        if (mask >> e & 1) subset.push_back(dst.edge_ids()[e]);
      if (!property(dst, subset)) continue;
      std::vector<std::string> pulled;
      for (const auto& label : subset) pulled.push_back(pullback.at(label));
      std::sort(pulled.begin(), pulled.end());
      if (!property(src, pulled)) out.push_back({idx, subset, pulled});
    }
  }
  return out;
}

InducedSimplicialMap induced_simplicial_map(const MinorMorphism& phi,
                                            const ComplexBuilder& builder) {
  InducedSimplicialMap m;
  m.from = builder.build(phi.target());
  m.to = builder.build(phi.source());
  auto pullback = edge_injection(phi);
  for (const auto& label : m.from.ground())
    m.ground_map.push_back(m.to.ground_index(pullback.at(label)));
  for (const auto& facet : m.from.facets()) {
    std::vector<int> image;
    for (int i : facet) image.push_back(m.ground_map[i]);
    if (!m.to.is_face(image)) {
      std::string labels;
      for (int i : facet) labels += (labels.empty() ? "" : ",") + m.from.ground()[i];
      fail(ErrorKind::NotFunctorial,
           builder.name + " does not carry the face {" + labels + "} into a face");
    }
  }
  return m;
}

SparseIntMatrix chain_map_matrix(const InducedSimplicialMap& m, int k, bool reduced) {
  auto dim_of = [&](const SimplicialComplex& c) -> std::size_t {
    if (k == -1) return (reduced && !c.is_void()) ? 1 : 0;
    return k < -1 ? 0 : c.face_count(k);
  };
  SparseIntMatrix out(dim_of(m.to), dim_of(m.from));
  if (k == -1) {
    if (out.rows() == 1 && out.cols() == 1) out.set(0, 0, 1);
    return out;
  }
  if (k < 0) return out;
  const auto& faces = m.from.faces(k);
  for (std::size_t j = 0; j < faces.size(); ++j) {
    std::vector<int> image;
    for (int i : faces[j]) image.push_back(m.ground_map[i]);
    int inversions = 0;
    for (std::size_t a = 0; a < image.size(); ++a)
      for (std::size_t b = a + 1; b < image.size(); ++b)
        if (image[a] > image[b]) ++inversions;
    std::sort(image.begin(), image.end());
    int row = m.to.face_index(image);
    if (row < 0)
      fail(ErrorKind::NotFunctorial, "face image missing downstairs in degree " +
                                         std::to_string(k));
    out.set((std::size_t)row, j, inversions % 2 == 0 ? 1 : -1);
  }
  return out;
}

}  // namespace minorhom
