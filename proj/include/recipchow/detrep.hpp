#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recipchow/matroid.hpp"
#include "recipchow/multipoly.hpp"

namespace recipchow {

/// A rational linear space given as the row span of a full-rank d x n
/// matrix, with its coordinate vector and matroid cached. Spaces contained
/// in a coordinate hyperplane (loops) are rejected.
class LinearSpace {
public:
    explicit LinearSpace(RatMatrix mat);

    const RatMatrix& mat() const { return mat_; }
    const PlueckerVector& plucker() const { return plucker_; }
    const Matroid& matroid() const { return matroid_; }
    int d() const { return static_cast<int>(mat_.rows()); }
    int n() const { return static_cast<int>(mat_.cols()); }

private:
    RatMatrix mat_;
    PlueckerVector plucker_;
    Matroid matroid_;
};

/// Columns of the reduced intersection-space basis, one per matroid basis.
struct VectorTable {
    std::size_t k = 0;
    std::vector<std::uint32_t> basis_sets; // lex order
    std::vector<std::uint32_t> facet_sets; // lex order, subset of basis_sets
    RatMatrix columns;                     // k x |bases|; facet columns are unit vectors

    std::size_t basis_rank(std::uint32_t mask) const;
    std::vector<BigRat> v(std::uint32_t basis_mask) const;
};

/// Basis of the space of d-vectors of the form (gamma ^ all-ones) supported
/// on the matroid bases, as a k x |bases| matrix whose facet columns form
/// the identity. k always equals the facet count; a mismatch is an internal
/// inconsistency.
RatMatrix hb_basis(const Matroid& m);

VectorTable v_vectors(const Matroid& m);

enum class VarConvention { gamma, beta };

/// Variable names: "g_<I>" over d-subsets or "b_<J>" over (n-d)-subsets.
std::vector<std::string> convention_vars(int n, int d, VarConvention conv);

/// k x k symmetric matrix of linear forms in the chosen variables.
struct SymLinMatrix {
    std::size_t k = 0;
    std::vector<std::string> vars;
    std::vector<MultiPoly> entries; // row-major, k*k

    const MultiPoly& at(std::size_t i, std::size_t j) const { return entries[i * k + j]; }
    MultiPoly& at(std::size_t i, std::size_t j) { return entries[i * k + j]; }
};

SymLinMatrix phi_symbolic(const LinearSpace& l, VarConvention conv);

/// Same matrix for the full-support matroid with explicit coordinate
/// values (indexed by the lex d-subset table), gamma convention.
SymLinMatrix phi_uniform_values(int n, int d, const std::vector<BigRat>& alpha);

/// Numeric evaluation of the representation at a dual coefficient vector
/// gamma (indexed by d-subsets): sum over bases of (gamma_I / alpha_I) v_I v_I^T.
RatMatrix phi_at(const LinearSpace& l, const std::vector<BigRat>& gamma);

/// Determinant of a symmetric matrix of linear forms. Every variable's
/// coefficient matrix must have rank one (true for all matrices built
/// here); minors are then multilinear and the expansion prunes eagerly.
MultiPoly det_symlin(const SymLinMatrix& m);

/// Memoized Laplace expansion for small general polynomial matrices.
MultiPoly det_poly_matrix(const std::vector<MultiPoly>& entries, std::size_t k);

struct ChowForm {
    SymLinMatrix matrix;
    MultiPoly det;        // raw determinant, denominators of alpha retained
    MultiPoly cleared;    // det times the product of the nonzero coordinates
    MultiPoly normalized; // cleared, content 1, positive leading coefficient
};

ChowForm chow_form(const LinearSpace& l, VarConvention conv);

/// Determinantal route to the bihomogeneous form of the uniform matroid with
/// both coefficient sets symbolic: det of the representation, cleared of the
/// denominator product. Variables are a_<I> then g_<I> over all d-subsets.
MultiPoly chow_det_bisymbolic(int n, int d);

/// Whether the coordinate table annihilates the diagonal-scaled witness:
/// with w^{-1} in the row span, the vector of facet coordinates of
/// diag_w(alpha) must lie in the kernel of the representation evaluated at
/// delta ^ w. Throws input_error when w has a zero entry or w^{-1} is not
/// in the space.
bool kernel_witness_check(const LinearSpace& l, const std::vector<BigRat>& w,
                          const std::vector<BigRat>& delta);

} // namespace recipchow
