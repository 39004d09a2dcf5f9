#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthocoord/frames.hpp"
#include "orthocoord/ipspace.hpp"
#include "orthocoord/ortho.hpp"
#include "orthocoord/rings.hpp"

namespace orthocoord::models {

/// MO_k: bottom 0, atoms 2i+1 and 2i+2 = (2i+1)^perp for i < k, top 2k+1.
OrthoLattice mo_n(int k);
/// Subsets of an n-set by bitmask, perp = complement.
OrthoLattice boolean(int n);
FiniteLattice chain(int n);
/// 0 < a < c < 1 and 0 < b < 1; indices 0, 1 (a), 2 (c), 3 (b), 4.
FiniteLattice pentagon();

struct SubspaceLattice {
    IPSpace space;
    std::vector<Subspace> subspaces;  // index = lattice element
    OrthoLattice lattice;
    int index_of(const Subspace& s) const;
};

/// Full subspace ortholattice of a finite inner product space.
SubspaceLattice subspace_ortholattice(const Field& field, std::size_t dim, const Matrix& gram,
                                      Involution sigma = Involution::Identity);

MatrixRing matrix_star_ring(const Field& field, std::size_t dim, const Matrix& gram,
                            Involution sigma = Involution::Identity);
/// M_n(GF(q)) as a table; with_transpose adds X -> X^T.
TableRing finite_matrix_ring(std::uint32_t q, std::size_t n, bool with_transpose = false);
/// Field of order q (q a prime power).
Field field_of_order(std::uint32_t q);
MatrixRing product(const MatrixRing& a, const MatrixRing& b);

/// a_i = span(e_i), a_{0i} = span(e_0 - e_i), b_i = a_0: a skew n-n-frame.
FrameWitness<Subspace> canonical_frame(int n, const Field& field);
/// a_i = span(e_i) with partner span(e_{i+1 mod n}) and axis
/// span(e_i - e_{i+1}); needs a diagonal gram to be orthogonal.
FrameWitness<Subspace> canonical_semiframe(const IPSpace& space);
/// The skew 2-2-frame a_0 = a, a_1 = a', axis b of MO_2.
FrameWitness<Elem> mo2_frame();

/// Names accepted by build-by-name front ends.
std::vector<std::string> catalog_names();

}  // namespace orthocoord::models
