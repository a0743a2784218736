#include <doctest.h>

#include "gsv/simplicial.hpp"

using namespace gsv;

TEST_CASE("downward closure from maximal faces") {
  // Boundary of a triangle: 3 vertices + 3 edges.
  const auto triangle = SimplicialComplex::from_maximal_faces(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(triangle.dim() == 1);
  CHECK(triangle.num_faces(0) == 3);
  CHECK(triangle.num_faces(1) == 3);
  CHECK(triangle.face_count() == 6);

  const auto full = SimplicialComplex::from_maximal_faces(3, {{0, 1, 2}});
  CHECK(full.face_count() == 7);

  // Closure is idempotent: rebuilding from all faces reproduces the complex.
  std::vector<SimplexKey> all;
  for (int k = 0; k <= full.dim(); ++k)
    for (const auto& f : full.faces(k)) all.push_back(f);
  CHECK(SimplicialComplex::from_maximal_faces(3, all) == full);

  CHECK_THROWS_AS(SimplicialComplex::from_maximal_faces(2, {{0, 5}}), std::out_of_range);
  CHECK_THROWS_AS(SimplicialComplex::from_maximal_faces(3, {{1, 0}}), std::invalid_argument);
}

TEST_CASE("nerve of small covers") {
  // U_i = A - {a_i} over three elements: boundary of the 2-simplex.
  Cover complements;
  complements.ground_size = 3;
  complements.sets = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  const auto n1 = nerve(complements);
  CHECK(n1 == SimplicialComplex::from_maximal_faces(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK_FALSE(n1.has_face({0, 1, 2}));

  Cover disjoint;
  disjoint.ground_size = 2;
  disjoint.sets = {{1, 0}, {0, 1}};
  const auto n2 = nerve(disjoint);
  CHECK(n2.num_faces(0) == 2);
  CHECK(n2.dim() == 0);

  Cover common;
  common.ground_size = 1;
  common.sets = {{1}, {1}, {1}};
  const auto n3 = nerve(common);
  CHECK(n3 == SimplicialComplex::from_maximal_faces(3, {{0, 1, 2}}));

  CHECK_THROWS_AS(nerve(Cover{}), std::invalid_argument);
  CHECK(complements.covers_ground());
}

TEST_CASE("boundary matrix signs and rank") {
  const auto triangle = SimplicialComplex::from_maximal_faces(3, {{0, 1}, {0, 2}, {1, 2}});
  const SparseIntMatrix d1 = boundary_matrix(triangle, 1);
  // Column of edge {0,1}: -1 at {0}, +1 at {1}.
  const int j = triangle.index_of({0, 1});
  CHECK(d1.get(triangle.index_of({0}), j) == -1);
  CHECK(d1.get(triangle.index_of({1}), j) == 1);

  const auto full = SimplicialComplex::from_maximal_faces(3, {{0, 1, 2}});
  CHECK(integer_rank(boundary_matrix(full, 1)) == 2);
  CHECK((boundary_matrix(full, 1) * boundary_matrix(full, 2)).nnz() == 0);
  CHECK_THROWS_AS(boundary_matrix(full, 3), std::out_of_range);
  CHECK_THROWS_AS(boundary_matrix(full, 0), std::out_of_range);
}

TEST_CASE("chain arithmetic and boundaries") {
  Chain z(1);
  z.add({0, 1}, 1);
  z.add({1, 2}, 1);
  z.add({0, 2}, -1);
  CHECK(boundary(z).is_zero());

  Chain b = boundary_of_simplex({0, 1, 2});
  CHECK(b == z);
  CHECK((z - z).is_zero());
  CHECK((z * Int(0)).is_zero());
  CHECK_THROWS_AS(z.add({0, 1, 2}, 1), std::invalid_argument);
}

TEST_CASE("chain image under vertex maps") {
  Chain edge(1);
  edge.add({0, 1}, 1);

  SimplicialMap identity;
  identity.vertex_map = {0, 1};
  CHECK(chain_image(identity, edge) == edge);

  SimplicialMap collapse;
  collapse.vertex_map = {2, 2, 2};
  CHECK(chain_image(collapse, edge).is_zero());

  SimplicialMap crossing;
  crossing.vertex_map = {3, 2, 0, 1};
  Chain expect(1);
  expect.add({2, 3}, -1);
  CHECK(chain_image(crossing, edge) == expect);
}

TEST_CASE("simplicial map validation") {
  const auto src = SimplicialComplex::from_maximal_faces(2, {{0, 1}});
  const auto dst = SimplicialComplex::from_maximal_faces(3, {{0, 1}, {2}});
  SimplicialMap good;
  good.vertex_map = {0, 1};
  CHECK_NOTHROW(good.validate(src, dst));
  SimplicialMap bad;
  bad.vertex_map = {0, 2};  // {0,2} is not a face of dst
  CHECK_THROWS_AS(bad.validate(src, dst), std::invalid_argument);
}
