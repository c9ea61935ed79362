#pragma once

// Face lattices of small polytopes, face numbers, and Euler-Poincare checks.

#include "reciprocity/algebra.hpp"
#include "reciprocity/check.hpp"
#include "reciprocity/poset.hpp"
#include "reciprocity/polytope.hpp"
#include "reciprocity/triangulation.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <stdexcept>
#include <vector>

namespace reciprocity {

struct Face {
  VertexMask vertices = 0;
  long dim = -1;                           // -1 for the empty face
  std::vector<std::size_t> tight_facets;  // facets of P containing the face
};

struct FaceLattice {
  std::vector<Face> faces;  // sorted by (dim, vertex mask); faces[0] is the empty face
  Poset order;              // inclusion

  /// sum over nonempty faces of t^{dim F}.
  Polynomial f_polynomial() const {
    Polynomial f;
    for (const auto& face : faces)
      if (face.dim >= 0) f += Polynomial::monomial(static_cast<std::size_t>(face.dim));
    return f;
  }
};

inline constexpr std::size_t kMaxFaceLatticeDim = 4;

/// All faces, generated by closing the facet vertex sets under intersection.
/// The empty face is always included (dimension -1).
inline FaceLattice face_lattice(const Polytope& p) {
  if (p.dim() > kMaxFaceLatticeDim)
    throw std::invalid_argument("face lattices are limited to dimension " + std::to_string(kMaxFaceLatticeDim));
  const std::size_t nv = p.vertices().size();
  if (nv > 64) throw std::invalid_argument("face lattices are limited to 64 vertices");
  const VertexMask all = nv == 64 ? ~VertexMask{0} : (VertexMask{1} << nv) - 1;
  std::vector<VertexMask> facet_masks;
  for (const auto& f : p.facets()) facet_masks.push_back(ids_to_mask(f.vertices));

  std::set<VertexMask> seen{all, VertexMask{0}};
  std::deque<VertexMask> queue{all};
  while (!queue.empty()) {
    const VertexMask cur = queue.front();
    queue.pop_front();
    for (auto fm : facet_masks) {
      const VertexMask next = cur & fm;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }

  FaceLattice fl;
  for (auto mask : seen) {
    Face face;
    face.vertices = mask;
    const auto ids = mask_to_ids(mask);
    if (!ids.empty()) {
      Matrix diffs;
      for (std::size_t i = 1; i < ids.size(); ++i)
        diffs.push_back(p.vertices()[ids[i]] - p.vertices()[ids[0]]);
      face.dim = static_cast<long>(rank(diffs, p.ambient_dimension()));
    }
    for (std::size_t f = 0; f < facet_masks.size(); ++f)
      if ((mask & ~facet_masks[f]) == 0) face.tight_facets.push_back(f);
    fl.faces.push_back(std::move(face));
  }
  std::sort(fl.faces.begin(), fl.faces.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
  });
  fl.order = Poset::from_order(fl.faces.size(), [&](std::size_t x, std::size_t y) {
    return (fl.faces[x].vertices & ~fl.faces[y].vertices) == 0;
  });
  return fl;
}

/// f_P(-1) over nonempty faces.
inline Integer euler_characteristic(const Polytope& p) {
  const Rational v = face_lattice(p).f_polynomial()(Rational(-1));
  return numerator_of(v);
}

/// mu(G, F) = (-1)^{dim F - dim G} for every pair of faces G <= F.
inline CheckResult face_lattice_mobius_check(const FaceLattice& fl) {
  const MobiusTable mu = mobius(fl.order);
  for (std::size_t g = 0; g < fl.faces.size(); ++g)
    for (std::size_t f = 0; f < fl.faces.size(); ++f) {
      if (!fl.order.leq(g, f)) continue;
      const Integer expected = sign_power(fl.faces[f].dim - fl.faces[g].dim);
      if (mu(g, f) != expected)
        return CheckResult::fail("mu(faces " + std::to_string(fl.faces[g].vertices) + ", " +
                                 std::to_string(fl.faces[f].vertices) + ") = " + mu(g, f).str() + ", expected " +
                                 expected.str());
    }
  return CheckResult::ok();
}

}  // namespace reciprocity
