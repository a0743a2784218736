#include <doctest.h>

#include <numeric>

#include "gsv/homology.hpp"
#include "gsv/pipeline.hpp"

using namespace gsv;

namespace {

SimplicialComplex simplex_boundary(int m) {
  SimplexKey full(m + 1);
  std::iota(full.begin(), full.end(), 0);
  std::vector<SimplexKey> facets;
  for (int i = 0; i <= m; ++i) {
    SimplexKey f = full;
    f.erase(f.begin() + i);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_maximal_faces(m + 1, facets);
}

}  // namespace

TEST_CASE("sphere homology of simplex boundaries") {
  for (int m = 2; m <= 5; ++m) {
    const SimplicialComplex cx = simplex_boundary(m);
    for (int k = 0; k <= cx.dim(); ++k) {
      const HomologyDescriptor d = homology_ranks(cx, k);
      const long long expected = (k == 0 || k == m - 1) ? 1 : 0;
      CHECK(d.betti == expected);
      CHECK(d.torsion.empty());
    }
  }
}

TEST_CASE("contractible complexes have trivial reduced homology") {
  const auto full = SimplicialComplex::from_maximal_faces(3, {{0, 1, 2}});
  CHECK(homology_ranks(full, 0).betti == 1);
  CHECK(homology_ranks(full, 1).betti == 0);
  CHECK(homology_ranks(full, 2).betti == 0);
}

TEST_CASE("torsion is detected (projective plane)") {
  // Minimal 6-vertex triangulation; expected values verified by an
  // independent Smith-form computation.
  const std::vector<SimplexKey> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                         {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
  const auto rp2 = SimplicialComplex::from_maximal_faces(6, faces);
  CHECK(rp2.euler_characteristic() == 1);
  CHECK(homology_ranks(rp2, 0).betti == 1);
  const HomologyDescriptor h1 = homology_ranks(rp2, 1);
  CHECK(h1.betti == 0);
  REQUIRE(h1.torsion.size() == 1);
  CHECK(h1.torsion[0] == 2);
  CHECK(homology_ranks(rp2, 2).betti == 0);
}

TEST_CASE("euler characteristic equals alternating betti sum") {
  for (const auto& cx : {simplex_boundary(3), nerve_NP(3), nerve_NProfiles(3, 2)}) {
    long long sum = 0;
    for (int k = 0; k <= cx.dim(); ++k) sum += (k % 2 == 0 ? 1 : -1) * homology_ranks(cx, k).betti;
    CHECK(sum == cx.euler_characteristic());
  }
}

TEST_CASE("basis cycles are genuine and self-coherent") {
  const SimplicialComplex np = nerve_NProfiles(3, 2);
  const HomologySolver solver(np, 1);
  const auto& d = solver.descriptor();
  REQUIRE(d.betti == 2);
  CHECK(d.torsion.empty());
  REQUIRE(d.basis_cycles.size() == 2);
  for (size_t i = 0; i < d.basis_cycles.size(); ++i) {
    CHECK(boundary(d.basis_cycles[i]).is_zero());
    const auto c = coefficients_in_homology(solver, d.basis_cycles[i]);
    for (size_t j = 0; j < c.size(); ++j) CHECK(c[j] == (i == j ? 1 : 0));
  }
}

TEST_CASE("coefficients: boundaries vanish, linearity holds") {
  const SimplicialComplex np = nerve_NProfiles(3, 2);
  const HomologySolver solver(np, 1);
  // Boundary of any 2-chain has all coordinates zero.
  Chain two(2);
  two.add(np.faces(2).front(), 3);
  two.add(np.faces(2).back(), -1);
  const auto zero = coefficients_in_homology(solver, boundary(two));
  for (const auto& c : zero) CHECK(c == 0);

  const Chain z = solver.descriptor().basis_cycles[1] * Int(2) -
                  solver.descriptor().basis_cycles[0];
  const auto c = coefficients_in_homology(solver, z);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == -1);
  CHECK(c[1] == 2);

  Chain not_cycle(1);
  not_cycle.add(np.faces(1).front(), 1);
  CHECK_THROWS_AS(solver.coefficients(not_cycle), std::invalid_argument);
}

TEST_CASE("induced homology matrices") {
  const SimplicialComplex circle = simplex_boundary(2);
  const HomologySolver solver(circle, 1);
  REQUIRE(solver.descriptor().betti == 1);

  SimplicialMap identity;
  identity.vertex_map = {0, 1, 2};
  const SparseIntMatrix id = induced_homology_matrix(identity, solver, solver);
  CHECK(id == SparseIntMatrix::identity(1));

  // A constant vertex map factors through a point.
  SimplicialMap constant;
  constant.vertex_map = {0, 0, 0};
  const SparseIntMatrix z = induced_homology_matrix(constant, solver, solver);
  CHECK(z.nnz() == 0);
}

TEST_CASE("functoriality: composition of induced maps") {
  // Projection p_0 from the (3,2) profile nerve followed by nothing is
  // checked against the matrix product of the chain-level factors.
  const ProfileNerveIndex idx(3, 2);
  const SimplicialComplex np2 = nerve_NProfiles(3, 2);
  const SimplicialComplex np1 = nerve_NP(3);
  const HomologySolver s2(np2, 1);
  const HomologySolver s1(np1, 1);
  const SimplicialMap p0 = projection_map(idx, 0);
  const SparseIntMatrix m0 = induced_homology_matrix(p0, s2, s1);
  CHECK(integer_rank(m0) == 1);

  SimplicialMap identity1;
  identity1.vertex_map.resize(np1.vertex_count());
  std::iota(identity1.vertex_map.begin(), identity1.vertex_map.end(), 0);
  SimplicialMap composed;  // identity after p0
  composed.vertex_map = p0.vertex_map;
  CHECK(induced_homology_matrix(composed, s2, s1) ==
        induced_homology_matrix(identity1, s1, s1) * m0);
}
