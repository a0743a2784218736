#ifndef GSV_HOMOLOGY_HPP
#define GSV_HOMOLOGY_HPP

#include <memory>
#include <vector>

#include "gsv/simplicial.hpp"
#include "gsv/snf.hpp"

namespace gsv {

struct HomologyDescriptor {
  int degree = 0;
  long long betti = 0;
  std::vector<Int> torsion;       // nontrivial invariant factors of d_{k+1}
  std::vector<Chain> basis_cycles;  // size == betti
};

// Betti number and torsion only (no basis cycles); cheaper on large complexes.
HomologyDescriptor homology_ranks(const SimplicialComplex& cx, int k);

// Full descriptor with representative basis cycles.
HomologyDescriptor homology(const SimplicialComplex& cx, int k);

struct CycleCoordinates {
  std::vector<Int> free_part;                 // coordinates on basis_cycles
  std::vector<std::pair<Int, Int>> torsion_part;  // (value mod d, d) per torsion factor
};

// Caches the SNF data needed to express cycles of one degree in the
// computed homology basis.
class HomologySolver {
 public:
  HomologySolver(const SimplicialComplex& cx, int k);

  const HomologyDescriptor& descriptor() const { return descriptor_; }

  // Throws if z is not a cycle. For genuine cycles the integer solve is
  // always feasible; infeasibility is reported as a logic error.
  CycleCoordinates coefficients(const Chain& z) const;

 private:
  SimplicialComplex cx_;  // owned copy: solvers may outlive the argument
  int k_;
  int kernel_rank_ = 0;        // dim ker d_k
  int dk_rank_ = 0;            // rank d_k
  SnfResult snf_dk_;           // of d_k (trivial when k == 0)
  SnfResult snf_rel_;          // of the boundary lattice in kernel coordinates
  std::vector<int> free_idx_;  // indices of free generators in snf_rel_ coordinates
  std::vector<int> torsion_idx_;
  HomologyDescriptor descriptor_;

  std::vector<Int> kernel_coords(const Chain& z) const;
};

HomologyDescriptor homology(const SimplicialComplex& cx, int k);

std::vector<Int> coefficients_in_homology(const HomologySolver& solver, const Chain& z);

// Matrix of the induced map on degree-k homology: column i holds the
// coordinates of the image of the i-th source basis cycle in the target
// basis. Requires torsion-free coordinates along the way.
SparseIntMatrix induced_homology_matrix(const SimplicialMap& m, const HomologySolver& src,
                                        const HomologySolver& dst);

}  // namespace gsv

#endif
