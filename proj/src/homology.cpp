#include "gsv/homology.hpp"

#include <stdexcept>

namespace gsv {

namespace {

SnfOptions transform_opts(bool u_side, bool v_side) {
  SnfOptions opt;
  opt.want_u = true;
  opt.want_v = true;
  opt.want_u_inv = u_side;
  opt.want_v_inv = v_side;
  return opt;
}

}  // namespace

HomologyDescriptor homology_ranks(const SimplicialComplex& cx, int k) {
  if (k < 0 || k > cx.dim()) throw std::out_of_range("homology: degree out of range");
  HomologyDescriptor d;
  d.degree = k;
  const int ck = cx.num_faces(k);
  const int rank_k = k >= 1 ? integer_rank(boundary_matrix(cx, k)) : 0;
  int rank_k1 = 0;
  if (k + 1 <= cx.dim()) {
    const SnfResult snf = smith_normal_form(boundary_matrix(cx, k + 1));
    rank_k1 = snf.rank;
    for (const Int& f : snf.diagonal)
      if (f > 1) d.torsion.push_back(f);
  }
  d.betti = ck - rank_k - rank_k1;
  return d;
}

HomologySolver::HomologySolver(const SimplicialComplex& cx, int k) : cx_(cx), k_(k) {
  if (k < 0 || k > cx.dim()) throw std::out_of_range("homology: degree out of range");
  const int ck = cx.num_faces(k);
  if (k >= 1) {
    snf_dk_ = smith_normal_form(boundary_matrix(cx, k), transform_opts(false, true));
    dk_rank_ = snf_dk_.rank;
  }
  kernel_rank_ = ck - dk_rank_;

  // Boundary lattice of degree k+1 expressed in kernel coordinates.
  SparseIntMatrix rel(kernel_rank_, 0);
  if (k + 1 <= cx.dim()) {
    const SparseIntMatrix b = boundary_matrix(cx, k + 1);
    SparseIntMatrix t = (k >= 1) ? snf_dk_.v_inv * b : b;
    rel = SparseIntMatrix(kernel_rank_, t.cols);
    for (int j = 0; j < t.cols; ++j)
      for (const auto& [r, v] : t.col[j]) {
        if (r < dk_rank_)
          throw std::logic_error("boundary column escapes the kernel lattice");
        rel.col[j][r - dk_rank_] = v;
      }
  }
  snf_rel_ = smith_normal_form(rel, transform_opts(true, false));
  for (int i = 0; i < snf_rel_.rank; ++i)
    if (snf_rel_.diagonal[i] > 1) torsion_idx_.push_back(i);
  for (int i = snf_rel_.rank; i < kernel_rank_; ++i) free_idx_.push_back(i);

  descriptor_.degree = k;
  descriptor_.betti = static_cast<long long>(free_idx_.size());
  for (int i : torsion_idx_) descriptor_.torsion.push_back(snf_rel_.diagonal[i]);
  for (int i : free_idx_) {
    // Kernel-coordinate generator, pushed back to chain coordinates.
    std::vector<Int> coords(cx.num_faces(k), 0);
    for (const auto& [m, w] : snf_rel_.u_inv.col[i]) {
      if (k >= 1) {
        for (const auto& [r, v] : snf_dk_.v.col[dk_rank_ + m]) coords[r] += w * v;
      } else {
        coords[m] += w;
      }
    }
    descriptor_.basis_cycles.push_back(coords_to_chain(cx, k, coords));
  }
}

std::vector<Int> HomologySolver::kernel_coords(const Chain& z) const {
  const std::vector<Int> dense = chain_to_coords(cx_, z);
  if (k_ == 0) return dense;
  const std::vector<Int> t = snf_dk_.v_inv.apply(dense);
  for (int i = 0; i < dk_rank_; ++i)
    if (t[i] != 0) throw std::logic_error("cycle is not in the kernel lattice");
  return std::vector<Int>(t.begin() + dk_rank_, t.end());
}

CycleCoordinates HomologySolver::coefficients(const Chain& z) const {
  if (z.dim != k_) throw std::invalid_argument("coefficients: chain has wrong degree");
  for (const auto& [s, c] : z.coeffs)
    if (!cx_.has_face(s)) throw std::invalid_argument("coefficients: chain leaves the complex");
  if (!boundary(z).is_zero()) throw std::invalid_argument("coefficients: not a cycle");
  const std::vector<Int> w = kernel_coords(z);
  const std::vector<Int> y = snf_rel_.u.apply(w);
  CycleCoordinates out;
  for (int i : free_idx_) out.free_part.push_back(y[i]);
  for (int i : torsion_idx_) {
    const Int& d = snf_rel_.diagonal[i];
    Int m = y[i] % d;
    if (m < 0) m += d;
    out.torsion_part.emplace_back(std::move(m), d);
  }
  return out;
}

HomologyDescriptor homology(const SimplicialComplex& cx, int k) {
  return HomologySolver(cx, k).descriptor();
}

std::vector<Int> coefficients_in_homology(const HomologySolver& solver, const Chain& z) {
  return solver.coefficients(z).free_part;
}

SparseIntMatrix induced_homology_matrix(const SimplicialMap& m, const HomologySolver& src,
                                        const HomologySolver& dst) {
  const auto& basis = src.descriptor().basis_cycles;
  SparseIntMatrix out(static_cast<int>(dst.descriptor().betti), static_cast<int>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i) {
    const Chain image = chain_image(m, basis[i]);
    if (!boundary(image).is_zero())
      throw std::logic_error("induced map: image of a cycle is not a cycle");
    const CycleCoordinates cc = dst.coefficients(image);
    for (const auto& [val, d] : cc.torsion_part)
      if (val != 0) throw std::logic_error("induced map: nonzero torsion coordinate");
    for (size_t r = 0; r < cc.free_part.size(); ++r)
      out.set(static_cast<int>(r), static_cast<int>(i), cc.free_part[r]);
  }
  return out;
}

}  // namespace gsv
