#ifndef GSV_PIPELINE_HPP
#define GSV_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "gsv/choice.hpp"
#include "gsv/homology.hpp"
#include "gsv/simplicial.hpp"

namespace gsv {

// Vertex bookkeeping for the profile-space nerves. Vertices are the
// triples (i, j, sigma) with i < j and sigma a sign vector over voters,
// numbered lexicographically by (i, j, sigma) with + before -.
class ProfileNerveIndex {
 public:
  ProfileNerveIndex(int n, int N);

  int n() const { return n_; }
  int voters() const { return N_; }
  int num_pairs() const { return static_cast<int>(pairs_.size()); }
  int vertex_count() const { return num_pairs() << N_; }

  const std::pair<int, int>& pair(int pair_idx) const { return pairs_[pair_idx]; }
  int pair_index(int i, int j) const;  // requires i < j

  // sigma_code bit for voter l is (code >> (N-1-l)) & 1; bit 1 means '-'.
  int vertex(int pair_idx, int sigma_code) const { return (pair_idx << N_) | sigma_code; }
  int pair_of_vertex(int v) const { return v >> N_; }
  int sigma_of_vertex(int v) const { return v & ((1 << N_) - 1); }
  bool sign_is_plus(int sigma_code, int voter) const {
    return ((sigma_code >> (N_ - 1 - voter)) & 1) == 0;
  }

  std::string label(int v) const;

 private:
  int n_, N_;
  std::vector<std::pair<int, int>> pairs_;
};

// Half-space cover of the n! linear orders: U_ij^+ and U_ij^-.
Cover cover_P(int n);
// Product cover of the (n!)^N profiles by the U_ij^sigma.
Cover cover_profiles(int n, int N);
// Cover of the alternatives by U_i = A - {a_i}.
Cover cover_A(int n);

SimplicialComplex nerve_NA(int n);
SimplicialComplex nerve_NP(int n);                  // N = 1 profile nerve
SimplicialComplex nerve_NProfiles(int n, int N);    // via profile witnesses
// Same complex via the cone-intersection criterion: a vertex set is a
// face iff every voter's sign-induced comparison digraph is acyclic.
SimplicialComplex nerve_NM(int n, int N);

// Direction of each edge of the n-cycle graph (0,1),(1,2),...,(n-2,n-1),(0,n-1).
// forward[k] means the arc runs from the smaller-indexed endpoint to the
// larger, which is the '+' sign for that pair.
struct Orientation {
  int n = 0;
  std::vector<char> forward;

  static Orientation cyclic_hat(int n);     // 0 -> 1 -> ... -> n-1 -> 0
  static Orientation acyclic_all_plus(int n);  // induces a_0 > a_1 > ... > a_{n-1}
  static Orientation from_mask(int n, unsigned mask);  // bit k = forward[k]

  std::pair<int, int> edge(int k) const;  // (smaller, larger)
  bool is_cyclic() const;                 // coherent directed cycle
};

// The n-vertex simplex delta(g_1,...,g_N) in the ambient simplex on the
// profile-nerve vertex set, and its boundary h = d(delta), a degree-(n-2)
// chain supported on faces of the profile nerve.
SimplexKey delta_simplex(const ProfileNerveIndex& idx, const std::vector<Orientation>& gs);
Chain h_chain(const ProfileNerveIndex& idx, const std::vector<Orientation>& gs);

// h_l = h(g_1,...,g_N) with the cyclic orientation in slot l and the
// canonical acyclic orientation elsewhere.
std::vector<Chain> standard_basis(const ProfileNerveIndex& idx);

// Coordinate projection (i,j,sigma) -> (i,j,sigma_l) onto the N=1 nerve.
SimplicialMap projection_map(const ProfileNerveIndex& idx, int voter);

// The simplicial map N_P(rofiles) -> N_A induced by a monotonic and
// unanimous f. Vertex (i,j,sigma) maps to the index of the alternative f
// never chooses on U_ij^sigma, determined by one canonical probe profile;
// exhaustive==true additionally scans all of U_ij^sigma.
SimplicialMap induced_scf_map(const SocialChoiceFunction& f, const ProfileNerveIndex& idx,
                              const SimplicialComplex& nerve_profiles,
                              const SimplicialComplex& na, bool exhaustive);

// The canonical probe profile for vertex (i,j,sigma): each voter ranks
// {a_i, a_j} in the top two positions ordered by their sign, remaining
// alternatives ascending below.
Profile probe_profile(const ProfileNerveIndex& idx, int pair_idx, int sigma_code);

// d(full simplex on all n cover indices), a degree-(n-2) cycle of N_A.
Chain fundamental_cycle_NA(int n);
// The exact multiple of the fundamental cycle that z represents
// (unnormalized pairing with the dual generator).
Int pairing_with_dstar(int n, const Chain& z);

// Pairing of f_*(h(g_hat,...,g_hat)) with d*; its sign fixes the
// normalization and its magnitude must be 1.
Int unanimity_class(const SocialChoiceFunction& f, const ProfileNerveIndex& idx,
                    const SimplicialMap& fs);

struct PairingResult {
  std::vector<Int> vector;        // normalized; expected a standard unit vector
  Int normalization = 1;          // raw unanimity pairing (+1 or -1)
  std::optional<int> dictator;    // index of the unit entry, if the pattern holds
};

// Dictator-detection pipeline: requires f monotonic and unanimous; cross-checks the
// homological dictator against the combinatorial one.
PairingResult pairing_vector(const SocialChoiceFunction& f, bool exhaustive_validation = false);

// Homologous-tuple check: both tuples must agree in slot k and be acyclic in
// every other slot; compares the homology classes of the two h-chains.
bool homologous_tuple_check(const ProfileNerveIndex& idx, const HomologySolver& solver,
                            const std::vector<Orientation>& gs,
                            const std::vector<Orientation>& gs2);

// A voter for every unordered pair of alternatives.
using Coloring = std::vector<int>;  // indexed like ProfileNerveIndex pairs

int coloring_dimension_unionfind(const Coloring& lambda, int n, int N);
int coloring_dimension_formula(const Coloring& lambda, int n, int N);

struct ArrangementSurvey {
  bool formulas_agree = true;
  int max_dimension = 0;
  long long maximizer_count = 0;
  bool maximizers_are_constant = true;
};

ArrangementSurvey arrangement_survey(int n, int N);

struct EnumerationResult {
  std::vector<std::vector<int>> tables;  // each of length (n!)^N
  long long nodes = 0;
  bool budget_exceeded = false;
};

// Complete backtracking search for all monotonic and unanimous SCFs.
EnumerationResult enumerate_monotonic_unanimous(int n, int N, long long node_budget = 50'000'000);

}  // namespace gsv

#endif
