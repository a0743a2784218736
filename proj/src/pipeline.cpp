#include "gsv/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gsv {

ProfileNerveIndex::ProfileNerveIndex(int n, int N) : n_(n), N_(N) {
  if (n < 2 || N < 1) throw std::invalid_argument("ProfileNerveIndex: need n >= 2, N >= 1");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
}

int ProfileNerveIndex::pair_index(int i, int j) const {
  if (i >= j) throw std::invalid_argument("pair_index: requires i < j");
  // Pairs are listed lexicographically.
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

std::string ProfileNerveIndex::label(int v) const {
  const auto& [i, j] = pairs_[pair_of_vertex(v)];
  std::string s = "(" + std::to_string(i) + "," + std::to_string(j) + ",";
  const int code = sigma_of_vertex(v);
  for (int l = 0; l < N_; ++l) s += sign_is_plus(code, l) ? '+' : '-';
  return s + ")";
}

Cover cover_profiles(int n, int N) {
  const ProfileNerveIndex idx(n, N);
  Cover cover;
  cover.ground_size = static_cast<int>(profile_count(n, N));
  cover.sets.assign(idx.vertex_count(), std::vector<char>(cover.ground_size, 0));
  cover.labels.resize(idx.vertex_count());
  for (int v = 0; v < idx.vertex_count(); ++v) cover.labels[v] = idx.label(v);
  for (long long r = 0; r < cover.ground_size; ++r) {
    const Profile p = profile_of_rank(r, n, N);
    for (int pi = 0; pi < idx.num_pairs(); ++pi) {
      const auto& [i, j] = idx.pair(pi);
      int code = 0;
      for (int l = 0; l < N; ++l)
        if (!p.orders[l].prefers(i, j)) code |= 1 << (N - 1 - l);
      cover.sets[idx.vertex(pi, code)][r] = 1;
    }
  }
  return cover;
}

Cover cover_P(int n) { return cover_profiles(n, 1); }

Cover cover_A(int n) {
  Cover cover;
  cover.ground_size = n;
  cover.sets.assign(n, std::vector<char>(n, 1));
  for (int i = 0; i < n; ++i) {
    cover.sets[i][i] = 0;
    cover.labels.push_back("U_" + std::to_string(i));
  }
  return cover;
}

SimplicialComplex nerve_NA(int n) { return nerve(cover_A(n)); }
SimplicialComplex nerve_NP(int n) { return nerve(cover_P(n)); }
SimplicialComplex nerve_NProfiles(int n, int N) { return nerve(cover_profiles(n, N)); }

namespace {

// Is `to` reachable from `from` in the arc set?
bool reachable(const std::vector<std::vector<int>>& adj, int from, int to) {
  if (from == to) return true;
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (w == to) return true;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace

SimplicialComplex nerve_NM(int n, int N) {
  const ProfileNerveIndex idx(n, N);
  std::vector<SimplexKey> faces;
  std::vector<char> pair_used(idx.num_pairs(), 0);
  // One comparison digraph per voter; arc i -> j means x_i > x_j.
  std::vector<std::vector<std::vector<int>>> adj(N, std::vector<std::vector<int>>(n));
  SimplexKey face;

  std::function<void(int)> extend = [&](int start) {
    for (int v = start; v < idx.vertex_count(); ++v) {
      const int pi = idx.pair_of_vertex(v);
      if (pair_used[pi]) continue;
      const auto& [i, j] = idx.pair(pi);
      const int code = idx.sigma_of_vertex(v);
      bool ok = true;
      int added = 0;
      for (int l = 0; l < N && ok; ++l) {
        const int from = idx.sign_is_plus(code, l) ? i : j;
        const int to = idx.sign_is_plus(code, l) ? j : i;
        // A new arc closes a cycle iff its head already reaches its tail.
        if (reachable(adj[l], to, from)) {
          ok = false;
        } else {
          adj[l][from].push_back(to);
          ++added;
        }
      }
      if (ok) {
        pair_used[pi] = 1;
        face.push_back(v);
        faces.push_back(face);
        extend(v + 1);
        face.pop_back();
        pair_used[pi] = 0;
      }
      for (int l = 0; l < added; ++l) {
        const int from = idx.sign_is_plus(code, l) ? i : j;
        adj[l][from].pop_back();
      }
    }
  };
  extend(0);
  return SimplicialComplex::from_faces(idx.vertex_count(), faces);
}

Orientation Orientation::cyclic_hat(int n) {
  Orientation g;
  g.n = n;
  g.forward.assign(n, 1);
  g.forward[n - 1] = 0;  // arc n-1 -> 0 on the wrap edge (0, n-1)
  return g;
}

Orientation Orientation::acyclic_all_plus(int n) {
  Orientation g;
  g.n = n;
  g.forward.assign(n, 1);
  return g;
}

Orientation Orientation::from_mask(int n, unsigned mask) {
  Orientation g;
  g.n = n;
  g.forward.assign(n, 0);
  for (int k = 0; k < n; ++k) g.forward[k] = (mask >> k) & 1;
  return g;
}

std::pair<int, int> Orientation::edge(int k) const {
  if (k < n - 1) return {k, k + 1};
  return {0, n - 1};
}

bool Orientation::is_cyclic() const {
  std::vector<int> indeg(n, 0);
  for (int k = 0; k < n; ++k) {
    const auto& [u, v] = edge(k);
    indeg[forward[k] ? v : u]++;
  }
  return std::all_of(indeg.begin(), indeg.end(), [](int d) { return d == 1; });
}

SimplexKey delta_simplex(const ProfileNerveIndex& idx, const std::vector<Orientation>& gs) {
  const int n = idx.n(), N = idx.voters();
  if (static_cast<int>(gs.size()) != N)
    throw std::invalid_argument("delta_simplex: need one orientation per voter");
  SimplexKey key;
  for (int k = 0; k < n; ++k) {
    const auto& [i, j] = gs.front().edge(k);
    int code = 0;
    for (int l = 0; l < N; ++l)
      if (!gs[l].forward[k]) code |= 1 << (N - 1 - l);
    key.push_back(idx.vertex(idx.pair_index(i, j), code));
  }
  std::sort(key.begin(), key.end());
  return key;
}

Chain h_chain(const ProfileNerveIndex& idx, const std::vector<Orientation>& gs) {
  return boundary_of_simplex(delta_simplex(idx, gs));
}

std::vector<Chain> standard_basis(const ProfileNerveIndex& idx) {
  std::vector<Chain> basis;
  for (int l = 0; l < idx.voters(); ++l) {
    std::vector<Orientation> gs(idx.voters(), Orientation::acyclic_all_plus(idx.n()));
    gs[l] = Orientation::cyclic_hat(idx.n());
    basis.push_back(h_chain(idx, gs));
  }
  return basis;
}

SimplicialMap projection_map(const ProfileNerveIndex& idx, int voter) {
  if (voter < 0 || voter >= idx.voters()) throw std::invalid_argument("projection_map: bad voter");
  const ProfileNerveIndex target(idx.n(), 1);
  SimplicialMap m;
  m.vertex_map.resize(idx.vertex_count());
  for (int v = 0; v < idx.vertex_count(); ++v) {
    const int bit = idx.sign_is_plus(idx.sigma_of_vertex(v), voter) ? 0 : 1;
    m.vertex_map[v] = target.vertex(idx.pair_of_vertex(v), bit);
  }
  return m;
}

Profile probe_profile(const ProfileNerveIndex& idx, int pair_idx, int sigma_code) {
  const auto& [i, j] = idx.pair(pair_idx);
  std::vector<LinearOrder> orders;
  for (int l = 0; l < idx.voters(); ++l) {
    std::vector<int> r;
    if (idx.sign_is_plus(sigma_code, l)) {
      r = {i, j};
    } else {
      r = {j, i};
    }
    for (int a = 0; a < idx.n(); ++a)
      if (a != i && a != j) r.push_back(a);
    orders.emplace_back(std::move(r));
  }
  return Profile{std::move(orders)};
}

SimplicialMap induced_scf_map(const SocialChoiceFunction& f, const ProfileNerveIndex& idx,
                              const SimplicialComplex& nerve_profiles,
                              const SimplicialComplex& na, bool exhaustive) {
  const int n = idx.n(), N = idx.voters();
  SimplicialMap m;
  m.vertex_map.resize(idx.vertex_count());
  for (int v = 0; v < idx.vertex_count(); ++v) {
    const int pi = idx.pair_of_vertex(v);
    const int code = idx.sigma_of_vertex(v);
    const auto& [i, j] = idx.pair(pi);
    const Alternative y = f.choose(probe_profile(idx, pi, code));
    if (y != i && y != j)
      throw std::logic_error("induced_scf_map: probe outcome outside {a_i, a_j}; "
                             "input is not monotonic and unanimous");
    // Probe outcome a_i means a_j is never chosen on U_ij^sigma, so the
    // vertex lands in U_j = A - {a_j}.
    const int image = (y == i) ? j : i;
    m.vertex_map[v] = image;
    if (exhaustive) {
      for (long long r = 0; r < profile_count(n, N); ++r) {
        const Profile p = profile_of_rank(r, n, N);
        bool member = true;
        for (int l = 0; l < N && member; ++l)
          member = p.orders[l].prefers(i, j) == idx.sign_is_plus(code, l);
        if (member && f.choose(p) == image)
          throw std::logic_error("induced_scf_map: exhaustive validation failed on " +
                                 idx.label(v));
      }
    }
  }
  m.validate(nerve_profiles, na);
  return m;
}

Chain fundamental_cycle_NA(int n) {
  SimplexKey full(n);
  std::iota(full.begin(), full.end(), 0);
  return boundary_of_simplex(full);
}

Int pairing_with_dstar(int n, const Chain& z) {
  if (z.dim != n - 2) throw std::invalid_argument("pairing_with_dstar: wrong degree");
  if (!boundary(z).is_zero()) throw std::invalid_argument("pairing_with_dstar: not a cycle");
  if (z.is_zero()) return 0;
  const Chain za = fundamental_cycle_NA(n);
  const auto& [key, c0] = *za.coeffs.begin();
  auto it = z.coeffs.find(key);
  if (it == z.coeffs.end())
    throw std::logic_error("pairing_with_dstar: cycle is not a multiple of the fundamental cycle");
  const Int mult = it->second / c0;
  if (!(za * mult == z))
    throw std::logic_error("pairing_with_dstar: cycle is not a multiple of the fundamental cycle");
  return mult;
}

Int unanimity_class(const SocialChoiceFunction& f, const ProfileNerveIndex& idx,
                    const SimplicialMap& fs) {
  std::vector<Orientation> gs(idx.voters(), Orientation::cyclic_hat(idx.n()));
  const Int raw = pairing_with_dstar(idx.n(), chain_image(fs, h_chain(idx, gs)));
  if (raw != 1 && raw != -1)
    throw std::logic_error("unanimity_class: pairing magnitude is not 1");
  return raw;
}

PairingResult pairing_vector(const SocialChoiceFunction& f, bool exhaustive_validation) {
  if (check_monotonic(f) || check_unanimous(f))
    throw std::invalid_argument("pairing_vector: f must be monotonic and unanimous");
  const int n = f.n(), N = f.voters();
  const ProfileNerveIndex idx(n, N);
  const SimplicialComplex np = nerve_NProfiles(n, N);
  const SimplicialComplex na = nerve_NA(n);
  const SimplicialMap fs = induced_scf_map(f, idx, np, na, exhaustive_validation);

  PairingResult out;
  out.normalization = unanimity_class(f, idx, fs);
  int ones = 0;
  const auto basis = standard_basis(idx);
  for (int l = 0; l < N; ++l) {
    const Int entry = out.normalization * pairing_with_dstar(n, chain_image(fs, basis[l]));
    if (entry == 1) {
      ++ones;
      out.dictator = l;
    } else if (entry != 0) {
      throw std::logic_error("pairing_vector: entry outside {0, 1}");
    }
    out.vector.push_back(entry);
  }
  if (ones != 1) throw std::logic_error("pairing_vector: not a standard unit vector");
  const std::optional<int> direct = dictator_of(f);
  if (!direct || *direct != *out.dictator)
    throw std::logic_error("pairing_vector: homological dictator disagrees with direct check");
  return out;
}

bool homologous_tuple_check(const ProfileNerveIndex& idx, const HomologySolver& solver,
                            const std::vector<Orientation>& gs,
                            const std::vector<Orientation>& gs2) {
  const int N = idx.voters();
  if (static_cast<int>(gs.size()) != N || static_cast<int>(gs2.size()) != N)
    throw std::invalid_argument("homologous_tuple_check: wrong tuple length");
  bool hypotheses = false;
  for (int k = 0; k < N && !hypotheses; ++k) {
    if (!std::equal(gs[k].forward.begin(), gs[k].forward.end(), gs2[k].forward.begin())) continue;
    bool rest_acyclic = true;
    for (int l = 0; l < N && rest_acyclic; ++l)
      if (l != k) rest_acyclic = !gs[l].is_cyclic() && !gs2[l].is_cyclic();
    hypotheses = rest_acyclic;
  }
  if (!hypotheses)
    throw std::invalid_argument("homologous_tuple_check: hypotheses of the corollary not met");
  return coefficients_in_homology(solver, h_chain(idx, gs)) ==
         coefficients_in_homology(solver, h_chain(idx, gs2));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++c;
    return c;
  }
};

}  // namespace

int coloring_dimension_unionfind(const Coloring& lambda, int n, int N) {
  const ProfileNerveIndex idx(n, 1);
  int dim = 0;
  for (int k = 0; k < N; ++k) {
    UnionFind uf(n);
    for (int pi = 0; pi < idx.num_pairs(); ++pi)
      if (lambda[pi] == k) uf.unite(idx.pair(pi).first, idx.pair(pi).second);
    dim += uf.components() - 1;
  }
  return dim;
}

int coloring_dimension_formula(const Coloring& lambda, int n, int N) {
  const ProfileNerveIndex idx(n, 1);
  const int pairs = idx.num_pairs();
  int h1_sum = 0;
  for (int k = 0; k < N; ++k) {
    UnionFind uf(n);
    int edges = 0;
    for (int pi = 0; pi < pairs; ++pi)
      if (lambda[pi] == k) {
        uf.unite(idx.pair(pi).first, idx.pair(pi).second);
        ++edges;
      }
    h1_sum += edges - n + uf.components();
  }
  return (n - 1) * N - pairs + h1_sum;
}

ArrangementSurvey arrangement_survey(int n, int N) {
  const int pairs = n * (n - 1) / 2;
  long long total = 1;
  for (int k = 0; k < pairs; ++k) total *= N;
  ArrangementSurvey out;
  out.max_dimension = -1;
  std::vector<Coloring> maximizers;
  Coloring lambda(pairs, 0);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int pi = 0; pi < pairs; ++pi) {
      lambda[pi] = static_cast<int>(c % N);
      c /= N;
    }
    const int d1 = coloring_dimension_unionfind(lambda, n, N);
    const int d2 = coloring_dimension_formula(lambda, n, N);
    if (d1 != d2) out.formulas_agree = false;
    if (d1 > out.max_dimension) {
      out.max_dimension = d1;
      maximizers.clear();
    }
    if (d1 == out.max_dimension) maximizers.push_back(lambda);
  }
  out.maximizer_count = static_cast<long long>(maximizers.size());
  out.maximizers_are_constant =
      out.maximizer_count == N &&
      std::all_of(maximizers.begin(), maximizers.end(), [&](const Coloring& m) {
        return std::all_of(m.begin(), m.end(), [&](int c) { return c == m.front(); });
      });
  return out;
}

EnumerationResult enumerate_monotonic_unanimous(int n, int N, long long node_budget) {
  const long long total = profile_count(n, N);
  std::vector<Profile> profiles;
  profiles.reserve(total);
  for (long long r = 0; r < total; ++r) profiles.push_back(profile_of_rank(r, n, N));

  // improves[a][p * total + q]: q is a coordinatewise a-improvement of p.
  std::vector<std::vector<char>> improves(n, std::vector<char>(total * total, 0));
  for (int a = 0; a < n; ++a)
    for (long long p = 0; p < total; ++p)
      for (long long q = 0; q < total; ++q) {
        bool ok = true;
        for (int l = 0; l < N && ok; ++l)
          ok = profiles[p].orders[l].is_improvement_for(profiles[q].orders[l], a);
        improves[a][p * total + q] = ok;
      }

  // Unanimity pre-assignments.
  std::vector<int> forced(total, -1);
  for (long long r = 0; r < total; ++r) {
    const int t = profiles[r].orders.front().top();
    bool all = true;
    for (const auto& o : profiles[r].orders) all = all && o.top() == t;
    if (all) forced[r] = t;
  }

  EnumerationResult out;
  std::vector<int> table(total, -1);
  std::function<void(long long)> assign = [&](long long r) {
    if (out.budget_exceeded) return;
    if (r == total) {
      out.tables.push_back(table);
      return;
    }
    const int lo = forced[r] >= 0 ? forced[r] : 0;
    const int hi = forced[r] >= 0 ? forced[r] : n - 1;
    for (int a = lo; a <= hi; ++a) {
      if (++out.nodes > node_budget) {
        out.budget_exceeded = true;
        return;
      }
      bool ok = true;
      for (long long s = 0; s < r && ok; ++s) {
        const int b = table[s];
        if (improves[b][s * total + r] && a != b) ok = false;
        if (ok && improves[a][r * total + s] && b != a) ok = false;
      }
      if (ok) {
        table[r] = a;
        assign(r + 1);
        table[r] = -1;
      }
    }
  };
  assign(0);
  if (out.budget_exceeded) out.tables.clear();
  return out;
}

}  // namespace gsv
