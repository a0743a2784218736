#include "gsv/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gsv {

namespace {

void check_key(const SimplexKey& s, int vertex_count) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= vertex_count)
      throw std::out_of_range("simplex vertex index out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument("simplex vertices must be strictly increasing");
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal_faces(int vertex_count,
                                                        const std::vector<SimplexKey>& maximal) {
  std::vector<std::set<SimplexKey>> by_dim;
  for (const auto& face : maximal) {
    check_key(face, vertex_count);
    const int m = static_cast<int>(face.size());
    if (m == 0) continue;
    if (static_cast<int>(by_dim.size()) < m) by_dim.resize(m);
    // All nonempty subsets.
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      SimplexKey sub;
      for (int b = 0; b < m; ++b)
        if (mask & (1u << b)) sub.push_back(face[b]);
      by_dim[sub.size() - 1].insert(std::move(sub));
    }
  }
  SimplicialComplex cx;
  cx.vertex_count_ = vertex_count;
  for (auto& level : by_dim) {
    cx.faces_by_dim_.emplace_back(level.begin(), level.end());
    cx.face_index_.emplace_back();
    auto& idx = cx.face_index_.back();
    int pos = 0;
    for (const auto& f : cx.faces_by_dim_.back()) idx[f] = pos++;
  }
  return cx;
}

SimplicialComplex SimplicialComplex::from_faces(int vertex_count,
                                                const std::vector<SimplexKey>& faces) {
  std::vector<std::set<SimplexKey>> by_dim;
  for (const auto& f : faces) {
    check_key(f, vertex_count);
    if (f.empty()) continue;
    if (by_dim.size() < f.size()) by_dim.resize(f.size());
    by_dim[f.size() - 1].insert(f);
  }
  SimplicialComplex cx;
  cx.vertex_count_ = vertex_count;
  for (auto& level : by_dim) {
    cx.faces_by_dim_.emplace_back(level.begin(), level.end());
    cx.face_index_.emplace_back();
    auto& idx = cx.face_index_.back();
    int pos = 0;
    for (const auto& f : cx.faces_by_dim_.back()) idx[f] = pos++;
  }
  return cx;
}

long long SimplicialComplex::face_count() const {
  long long c = 0;
  for (const auto& level : faces_by_dim_) c += static_cast<long long>(level.size());
  return c;
}

bool SimplicialComplex::has_face(const SimplexKey& s) const {
  const int k = static_cast<int>(s.size()) - 1;
  if (k < 0 || k > dim()) return false;
  return face_index_[k].count(s) > 0;
}

int SimplicialComplex::index_of(const SimplexKey& s) const {
  const int k = static_cast<int>(s.size()) - 1;
  if (k < 0 || k > dim()) throw std::out_of_range("index_of: no such face");
  auto it = face_index_[k].find(s);
  if (it == face_index_[k].end()) throw std::out_of_range("index_of: no such face");
  return it->second;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (int k = 0; k <= dim(); ++k) chi += (k % 2 == 0 ? 1 : -1) * num_faces(k);
  return chi;
}

bool Cover::covers_ground() const {
  std::vector<char> hit(ground_size, 0);
  for (const auto& s : sets)
    for (int e = 0; e < ground_size; ++e)
      if (s[e]) hit[e] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

SimplicialComplex nerve(const Cover& cover) {
  if (cover.sets.empty()) throw std::invalid_argument("nerve: empty cover");
  const int m = static_cast<int>(cover.sets.size());
  for (const auto& s : cover.sets)
    if (static_cast<int>(s.size()) != cover.ground_size)
      throw std::invalid_argument("nerve: mask length mismatch");
  std::vector<SimplexKey> signatures;
  signatures.reserve(cover.ground_size);
  for (int e = 0; e < cover.ground_size; ++e) {
    SimplexKey j;
    for (int a = 0; a < m; ++a)
      if (cover.sets[a][e]) j.push_back(a);
    if (!j.empty()) signatures.push_back(std::move(j));
  }
  return SimplicialComplex::from_maximal_faces(m, signatures);
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& cx, int k) {
  if (k < 1 || k > cx.dim()) throw std::out_of_range("boundary_matrix: k out of range");
  SparseIntMatrix d(cx.num_faces(k - 1), cx.num_faces(k));
  const auto& faces = cx.faces(k);
  for (int j = 0; j < static_cast<int>(faces.size()); ++j) {
    const SimplexKey& s = faces[j];
    for (size_t i = 0; i < s.size(); ++i) {
      SimplexKey face = s;
      face.erase(face.begin() + i);
      d.col[j][cx.index_of(face)] = (i % 2 == 0) ? 1 : -1;
    }
  }
  return d;
}

void Chain::add(const SimplexKey& s, Int c) {
  if (static_cast<int>(s.size()) != dim + 1)
    throw std::invalid_argument("Chain::add: wrong simplex dimension");
  Int& e = coeffs[s];
  e += c;
  if (e == 0) coeffs.erase(s);
}

Chain& Chain::operator+=(const Chain& o) {
  if (dim != o.dim) throw std::invalid_argument("chain sum: dimension mismatch");
  for (const auto& [s, c] : o.coeffs) add(s, c);
  return *this;
}

Chain Chain::operator+(const Chain& o) const {
  Chain r = *this;
  r += o;
  return r;
}

Chain Chain::operator-() const {
  Chain r(dim);
  for (const auto& [s, c] : coeffs) r.coeffs[s] = -c;
  return r;
}

Chain Chain::operator-(const Chain& o) const { return *this + (-o); }

Chain Chain::operator*(const Int& c) const {
  Chain r(dim);
  if (c != 0)
    for (const auto& [s, v] : coeffs) r.coeffs[s] = v * c;
  return r;
}

Chain boundary_of_simplex(const SimplexKey& s) {
  Chain b(static_cast<int>(s.size()) - 2);
  for (size_t i = 0; i < s.size(); ++i) {
    SimplexKey face = s;
    face.erase(face.begin() + i);
    b.add(face, (i % 2 == 0) ? 1 : -1);
  }
  return b;
}

Chain boundary(const Chain& z) {
  Chain b(z.dim - 1);
  for (const auto& [s, c] : z.coeffs) b += boundary_of_simplex(s) * c;
  return b;
}

std::vector<Int> chain_to_coords(const SimplicialComplex& cx, const Chain& z) {
  std::vector<Int> v(cx.num_faces(z.dim), 0);
  for (const auto& [s, c] : z.coeffs) v[cx.index_of(s)] = c;
  return v;
}

Chain coords_to_chain(const SimplicialComplex& cx, int k, const std::vector<Int>& coords) {
  Chain z(k);
  const auto& faces = cx.faces(k);
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) z.coeffs[faces[i]] = coords[i];
  return z;
}

void SimplicialMap::validate(const SimplicialComplex& src, const SimplicialComplex& dst) const {
  if (static_cast<int>(vertex_map.size()) != src.vertex_count())
    throw std::invalid_argument("simplicial map: vertex map not total");
  for (int v : vertex_map)
    if (v < 0 || v >= dst.vertex_count())
      throw std::out_of_range("simplicial map: image vertex out of range");
  for (int k = 0; k <= src.dim(); ++k)
    for (const auto& f : src.faces(k)) {
      std::set<int> image;
      for (int v : f) image.insert(vertex_map[v]);
      SimplexKey key(image.begin(), image.end());
      if (!dst.has_face(key))
        throw std::invalid_argument("simplicial map: face image is not a face of the target");
    }
}

Chain chain_image(const SimplicialMap& m, const Chain& z) {
  Chain out(z.dim);
  for (const auto& [s, c] : z.coeffs) {
    std::vector<int> image;
    image.reserve(s.size());
    for (int v : s) image.push_back(m.vertex_map.at(v));
    // Sign of the permutation sorting the image; zero on repeats.
    int sign = 1;
    bool degenerate = false;
    std::vector<int> sorted = image;
    for (size_t i = 0; i < sorted.size() && !degenerate; ++i)
      for (size_t j = i + 1; j < sorted.size(); ++j) {
        if (sorted[i] == sorted[j]) {
          degenerate = true;
          break;
        }
        if (sorted[i] > sorted[j]) {
          std::swap(sorted[i], sorted[j]);
          sign = -sign;
        }
      }
    if (degenerate) continue;
    out.add(sorted, c * sign);
  }
  return out;
}

}  // namespace gsv
