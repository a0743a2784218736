#ifndef GSV_SIMPLICIAL_HPP
#define GSV_SIMPLICIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "gsv/bigint.hpp"
#include "gsv/snf.hpp"

namespace gsv {

// Strictly increasing vertex indices; dimension = size - 1.
using SimplexKey = std::vector<int>;

// Finite abstract simplicial complex with canonical (lexicographic)
// face ordering per dimension.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_maximal_faces(int vertex_count,
                                              const std::vector<SimplexKey>& maximal);
  // `faces` must already be downward closed (duplicates allowed).
  static SimplicialComplex from_faces(int vertex_count, const std::vector<SimplexKey>& faces);

  int vertex_count() const { return vertex_count_; }
  int dim() const { return static_cast<int>(faces_by_dim_.size()) - 1; }
  long long face_count() const;
  const std::vector<SimplexKey>& faces(int k) const { return faces_by_dim_.at(k); }
  int num_faces(int k) const {
    return k >= 0 && k <= dim() ? static_cast<int>(faces_by_dim_[k].size()) : 0;
  }

  bool has_face(const SimplexKey& s) const;
  int index_of(const SimplexKey& s) const;  // position within its dimension

  // Alternating sum of face counts.
  long long euler_characteristic() const;

  bool operator==(const SimplicialComplex& o) const {
    return vertex_count_ == o.vertex_count_ && faces_by_dim_ == o.faces_by_dim_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<SimplexKey>> faces_by_dim_;
  std::vector<std::map<SimplexKey, int>> face_index_;
};

// Indexed family of subsets of a finite ground set, as membership masks.
struct Cover {
  int ground_size = 0;
  std::vector<std::vector<char>> sets;
  std::vector<std::string> labels;

  bool covers_ground() const;
};

// Nerve via witness signatures: for each ground element e, the set of
// cover indices containing e is a face, and the nerve is the downward
// closure of these signatures.
SimplicialComplex nerve(const Cover& cover);

// rows = (k-1)-faces, cols = k-faces; the column of a k-face has entry
// (-1)^i at the face omitting its i-th vertex (sorted order).
SparseIntMatrix boundary_matrix(const SimplicialComplex& cx, int k);

// Sparse integer combination of k-simplices.
struct Chain {
  int dim = 0;
  std::map<SimplexKey, Int> coeffs;

  Chain() = default;
  explicit Chain(int k) : dim(k) {}

  void add(const SimplexKey& s, Int c);
  bool is_zero() const { return coeffs.empty(); }

  Chain& operator+=(const Chain& o);
  Chain operator+(const Chain& o) const;
  Chain operator-() const;
  Chain operator-(const Chain& o) const;
  Chain operator*(const Int& c) const;
  bool operator==(const Chain& o) const { return dim == o.dim && coeffs == o.coeffs; }
};

// Boundary of a single simplex / of a chain, in the ambient full simplex
// (the keys need not belong to any particular complex).
Chain boundary_of_simplex(const SimplexKey& s);
Chain boundary(const Chain& z);

// Dense coordinates of a chain with respect to cx's canonical k-face order.
std::vector<Int> chain_to_coords(const SimplicialComplex& cx, const Chain& z);
Chain coords_to_chain(const SimplicialComplex& cx, int k, const std::vector<Int>& coords);

// Total vertex map whose face images all land in the target complex.
struct SimplicialMap {
  std::vector<int> vertex_map;  // source vertex -> target vertex

  // Throws if some face of src has an image that is not a face of dst.
  void validate(const SimplicialComplex& src, const SimplicialComplex& dst) const;
};

// Chain-level image: distinct image vertices map to the sorted image
// simplex with the sign of the sorting permutation; collapses map to zero.
Chain chain_image(const SimplicialMap& m, const Chain& z);

}  // namespace gsv

#endif
