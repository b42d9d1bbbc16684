#ifndef CALEX_LINALG_HPP
#define CALEX_LINALG_HPP

#include <map>
#include <vector>

#include "calex/poly.hpp"

namespace calex {

/// Dense integer matrix, row-major, exact arithmetic throughout.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<Int> entries);
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;
    IntMatrix transposed() const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column

    bool is_identity() const;
    bool is_zero() const;
    Int determinant() const;  // fraction-free, square only

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    /// row[i] += c * row[j]
    void add_row(int i, int j, const Int& c);
    void add_col(int i, int j, const Int& c);
    void scale_row(int i, const Int& c);
    void scale_col(int i, const Int& c);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// U * A * V = D with U, V unimodular and D diagonal with the divisibility
/// chain d1 | d2 | ... ; trailing diagonal entries are zero. Vinv is
/// maintained alongside V, so consumers never invert.
struct SmithDecompositionZ {
    IntMatrix U, V, Vinv, D;
    std::vector<Int> diagonal() const;
    int rank() const;
};

SmithDecompositionZ smith_z(const IntMatrix& a);

/// det(h - t*Id), exact, leading coefficient (-1)^n.
IntPoly charpoly(const IntMatrix& h);

/// Multiplication-by-t on Z[t]/(psi) in the basis 1, t, ..., t^(d-1):
/// ones on the subdiagonal, last column -a_0 ... -a_(d-1). psi must be monic.
IntMatrix companion(const IntPoly& psi);

/// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Finitely generated abelian group presented as Z^n modulo the row span of
/// a relation matrix. V and diag come from the Smith form of the relations;
/// the canonical coordinates of a vector x are V^T x, where coordinate i is
/// taken mod diag[i] (diag[i] = 0 means a free coordinate).
class FgAbelianGroup {
public:
    FgAbelianGroup(int generators, IntMatrix relations);

    int num_generators() const { return n_; }
    const IntMatrix& relations() const { return relations_; }
    int free_rank() const;
    std::vector<Int> torsion() const;  // invariant factors > 1, divisibility order
    const std::vector<Int>& diagonal() const { return diag_; }
    const IntMatrix& basis_change() const { return v_; }  // the V above

    std::vector<Int> canonical_coords(const std::vector<Int>& x) const;
    std::vector<int> free_coordinate_indices() const;
    std::vector<int> torsion_coordinate_indices() const;

    /// True when x lies in the relation span (i.e. represents 0).
    bool is_zero_element(const std::vector<Int>& x) const;

    /// Matrix of the endomorphism induced on the free part Z^free_rank by a
    /// generator-level endomorphism H (n x n). Throws MapIllDefined when H
    /// does not preserve the relation span.
    IntMatrix induced_free_action(const IntMatrix& H) const;

private:
    int n_;
    IntMatrix relations_;
    IntMatrix v_;
    IntMatrix v_inv_transposed_;
    std::vector<Int> diag_;  // length n, nonzero entries first
};

FgAbelianGroup abelian_from_relations(int generators, const IntMatrix& relations);

/// Generating set of the kernel of the map induced by `map_on_generators`
/// (one column per domain generator, values in a free codomain Z^r), as
/// vectors over the domain's original generators. Checks that every domain
/// relation maps to zero and throws MapIllDefined otherwise.
std::vector<std::vector<Int>> kernel_of_abelian_map(const FgAbelianGroup& domain,
                                                    const IntMatrix& map_on_generators);

/// Membership of v in the lattice spanned by the rows of `rows`.
bool lattice_contains(const IntMatrix& rows, const std::vector<Int>& v);

/// Row-echelon basis over Z with positive pivots, stored sparsely. Spans the
/// same lattice as the inserted rows; supports exact membership tests.
class RowLattice {
public:
    explicit RowLattice(int cols) : n_(cols) {}
    explicit RowLattice(const IntMatrix& rows);

    void insert(const std::vector<Int>& v);
    bool contains(const std::vector<Int>& v) const;
    int cols() const { return n_; }
    IntMatrix echelon_rows() const;  // pivot columns ascending

private:
    using SparseRow = std::vector<std::pair<int, Int>>;  // sorted by column
    static SparseRow sparsify(const std::vector<Int>& v);
    /// ca * a + cb * b, merged by column.
    static SparseRow combine(const Int& ca, const SparseRow& a, const Int& cb,
                             const SparseRow& b);
    void insert_sparse(SparseRow v);

    int n_;
    std::vector<SparseRow> basis_;
    std::map<int, int> pivot_row_;
};

/// Matrix over Q[t]; rows act as relations on `cols` module generators.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RatPoly& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const RatPoly& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<RatPoly> a_;
};

/// Smith form over the Euclidean domain Q[t]: U * A * V = D, invariant
/// factors monic with d1 | d2 | ..., and the cokernel of A (columns as
/// generators) is the direct sum of Q[t]/(d_i) plus a free part.
struct SmithDecompositionQt {
    std::vector<RatPoly> invariant_factors;  // monic, nonzero, may include constants 1
    int free_cokernel_rank = 0;
    PolyMatrix U, V, D;
};

SmithDecompositionQt smith_qt(const PolyMatrix& a);

}  // namespace calex

#endif
