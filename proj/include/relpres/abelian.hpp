// abelian.hpp -- integer lattice utilities: Smith/Hermite normal forms,
// membership tests, abelianized invariants of a presentation
#ifndef RELPRES_ABELIAN_HPP
#define RELPRES_ABELIAN_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "relpres/words.hpp"

namespace relpres {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;  // row-major

/// Smith normal form U*M*V = D with U, V unimodular and the diagonal
/// entries in a divisibility chain.
struct SmithForm {
  ZMat d;            // diagonal (same shape as input)
  ZMat v;            // right transform, n x n
  int rank = 0;      // number of nonzero diagonal entries
  ZVec diagonal;     // the nonzero entries, each dividing the next
};

SmithForm smith_normal_form(const ZMat& m);

/// Row-style Hermite normal form H = U*B with U unimodular; rows of H are
/// an echelon basis of the row lattice of B.
struct HermiteForm {
  ZMat h;                   // echelon rows (zero rows removed)
  ZMat u;                   // full transform, one row per input row
  std::vector<int> pivots;  // pivot column per row of h
  int rank() const { return static_cast<int>(h.size()); }
};

HermiteForm hermite_normal_form(const ZMat& b);

/// Basis of the left kernel {y : y * B = 0} of an integer matrix.
ZMat left_kernel(const ZMat& b);

/// A sublattice of Z^n given by spanning rows; supports membership,
/// canonical coset reduction, and expressing members in the original rows.
class IntLattice {
 public:
  IntLattice() = default;
  IntLattice(int n, ZMat rows);

  int ambient_dim() const { return n_; }
  bool contains(const ZVec& v) const;
  /// Reduces v modulo the lattice to a canonical coset representative.
  ZVec reduce(const ZVec& v) const;
  /// Writes v as an integer combination of the original spanning rows,
  /// or nullopt when v is not in the lattice.
  std::optional<ZVec> express(const ZVec& v) const;
  int rank() const { return static_cast<int>(hnf_.h.size()); }

 private:
  int n_ = 0;
  ZMat rows_;
  HermiteForm hnf_;
};

struct GroupDescriptor;  // rewriting.hpp

/// Abelianization invariants of a finitely presented group: the relator
/// exponent lattice in Smith normal form.  Gives a sound Distinct oracle.
class AbelianizedLattice {
 public:
  static AbelianizedLattice of(const GroupDescriptor& desc);

  int generators() const { return n_; }
  int free_rank() const { return n_ - smith_.rank; }
  /// Torsion coefficients (> 1), in the divisibility chain order.
  ZVec torsion() const;
  ZVec exponent_vector(const FreeWord& w) const;
  /// Whether the exponent vector lies in the relator lattice, i.e. the
  /// word maps to 0 in the abelianization.
  bool image_trivial(const FreeWord& w) const;
  bool contains(const ZVec& v) const;

 private:
  int n_ = 0;
  ZMat relators_;
  SmithForm smith_;
};

}  // namespace relpres

#endif
