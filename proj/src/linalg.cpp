#include "calex/linalg.hpp"

#include <algorithm>

#include "calex/errors.hpp"

namespace calex {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(rows) * cols)
        throw Error("BadArgument", "matrix entry count does not match dimensions", EXIT_INTERNAL);
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw Error("BadArgument", "matrix product dimension mismatch", EXIT_INTERNAL);
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    IntMatrix r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) -= o.at(i, j);
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    IntMatrix r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
    return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw Error("BadArgument", "vector length does not match matrix columns", EXIT_INTERNAL);
    std::vector<Int> r(static_cast<size_t>(rows_), Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw Error("BadArgument", "determinant of non-square matrix", EXIT_INTERNAL);
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row(int i, int j, const Int& c) {
    for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(int i, int j, const Int& c) {
    for (int k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::scale_row(int i, const Int& c) {
    for (int k = 0; k < cols_; ++k) at(i, k) *= c;
}

void IntMatrix::scale_col(int i, const Int& c) {
    for (int k = 0; k < rows_; ++k) at(k, i) *= c;
}

// ----------------------------------------------------------------- smith_z

std::vector<Int> SmithDecompositionZ::diagonal() const {
    int m = std::min(D.rows(), D.cols());
    std::vector<Int> d;
    d.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) d.push_back(D.at(i, i));
    return d;
}

int SmithDecompositionZ::rank() const {
    int r = 0;
    for (const auto& d : diagonal())
        if (d != 0) ++r;
    return r;
}

SmithDecompositionZ smith_z(const IntMatrix& a) {
    int r = a.rows(), c = a.cols();
    SmithDecompositionZ out{IntMatrix::identity(r), IntMatrix::identity(c),
                            IntMatrix::identity(c), a};
    IntMatrix& A = out.D;
    IntMatrix& U = out.U;
    IntMatrix& V = out.V;
    IntMatrix& Vinv = out.Vinv;

    int m = std::min(r, c);
    for (int k = 0; k < m; ++k) {
        for (;;) {
            // Pivot: smallest nonzero absolute value, lowest row then column.
            int pi = -1, pj = -1;
            Int best;
            for (int i = k; i < r; ++i)
                for (int j = k; j < c; ++j) {
                    const Int& x = A.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (pi < 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) { k = m; break; }  // remaining block is zero

            A.swap_rows(k, pi);
            U.swap_rows(k, pi);
            A.swap_cols(k, pj);
            V.swap_cols(k, pj);
            Vinv.swap_rows(k, pj);
            if (A.at(k, k) < 0) {
                A.scale_row(k, -1);
                U.scale_row(k, -1);
            }

            bool clean = true;
            for (int i = k + 1; i < r; ++i) {
                if (A.at(i, k) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), A.at(i, k).get_mpz_t(), A.at(k, k).get_mpz_t());
                Int nq = -q;
                A.add_row(i, k, nq);
                U.add_row(i, k, nq);
                if (A.at(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < c; ++j) {
                if (A.at(k, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), A.at(k, j).get_mpz_t(), A.at(k, k).get_mpz_t());
                Int nq = -q;
                A.add_col(j, k, nq);
                V.add_col(j, k, nq);
                Vinv.add_row(k, j, q);
                if (A.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility of everything to the lower right by the pivot.
            bool fixed = true;
            for (int i = k + 1; i < r && fixed; ++i)
                for (int j = k + 1; j < c && fixed; ++j)
                    if (A.at(i, j) % A.at(k, k) != 0) {
                        A.add_row(k, i, 1);
                        U.add_row(k, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
    }
    return out;
}

// ---------------------------------------------------------------- charpoly

IntPoly charpoly(const IntMatrix& h) {
    if (h.rows() != h.cols())
        throw Error("BadArgument", "characteristic polynomial of non-square matrix", EXIT_INTERNAL);
    int n = h.rows();
    if (n == 0) return IntPoly::one();

    // Bareiss fraction-free elimination over Z[t] on h - t*Id.
    std::vector<std::vector<IntPoly>> m(static_cast<size_t>(n),
                                        std::vector<IntPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[i][j] = IntPoly::constant(h.at(i, j));
            if (i == j) m[i][j] = m[i][j] - IntPoly::t();
        }
    IntPoly prev = IntPoly::one();
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { piv = i; break; }
            if (piv < 0) return IntPoly::zero();
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(piv)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                IntPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = num.divided_exactly_by(prev);
                if (!q)
                    throw Error("Internal", "fraction-free step failed to divide", EXIT_INTERNAL);
                m[i][j] = *q;
            }
        prev = m[k][k];
    }
    IntPoly det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    return sign > 0 ? det : -det;
}

IntMatrix companion(const IntPoly& psi) {
    if (psi.is_zero() || !psi.is_monic())
        throw NotMonic("companion matrix requires a monic polynomial");
    if (psi.degree() < 1)
        throw NotMonic("companion matrix requires degree at least 1");
    int d = psi.degree();
    IntMatrix m(d, d);
    for (int i = 0; i + 1 < d; ++i) m.at(i + 1, i) = 1;
    for (int i = 0; i < d; ++i) m.at(i, d - 1) = -psi.coeff(i);
    return m;
}

IntMatrix inverse_unimodular(const IntMatrix& mat) {
    if (mat.rows() != mat.cols())
        throw Error("BadArgument", "inverse of non-square matrix", EXIT_INTERNAL);
    int n = mat.rows();
    // Gauss-Jordan over Q; the result must come out integral.
    std::vector<std::vector<Rat>> a(static_cast<size_t>(n), std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(mat.at(i, j));
        a[i][static_cast<size_t>(n + i)] = 1;
    }
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][static_cast<size_t>(k)] != 0) { piv = i; break; }
        if (piv < 0) throw Error("BadArgument", "matrix is singular", EXIT_INTERNAL);
        std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(piv)]);
        Rat inv = 1 / a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int j = 0; j < 2 * n; ++j) a[static_cast<size_t>(k)][static_cast<size_t>(j)] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            Rat f = a[static_cast<size_t>(i)][static_cast<size_t>(k)];
            if (f == 0) continue;
            for (int j = 0; j < 2 * n; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
    }
    IntMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& x = a[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
            if (x.get_den() != 1)
                throw Error("BadArgument", "matrix is not unimodular", EXIT_INTERNAL);
            out.at(i, j) = x.get_num();
        }
    return out;
}

// ------------------------------------------------------------- row lattice

RowLattice::RowLattice(const IntMatrix& rows) : n_(rows.cols()) {
    for (int i = 0; i < rows.rows(); ++i) {
        std::vector<Int> v(static_cast<size_t>(n_));
        for (int j = 0; j < n_; ++j) v[static_cast<size_t>(j)] = rows.at(i, j);
        insert(v);
    }
}

RowLattice::SparseRow RowLattice::sparsify(const std::vector<Int>& v) {
    SparseRow out;
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) out.emplace_back(static_cast<int>(j), v[j]);
    return out;
}

RowLattice::SparseRow RowLattice::combine(const Int& ca, const SparseRow& a, const Int& cb,
                                          const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            Int x = ca * a[i].second;
            if (x != 0) out.emplace_back(a[i].first, std::move(x));
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            Int x = cb * b[j].second;
            if (x != 0) out.emplace_back(b[j].first, std::move(x));
            ++j;
        } else {
            Int x = ca * a[i].second + cb * b[j].second;
            if (x != 0) out.emplace_back(a[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    return out;
}

void RowLattice::insert(const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != n_)
        throw Error("BadArgument", "row length does not match lattice width", EXIT_INTERNAL);
    insert_sparse(sparsify(v));
}

void RowLattice::insert_sparse(SparseRow v) {
    while (!v.empty()) {
        int p = v.front().first;
        auto it = pivot_row_.find(p);
        if (it == pivot_row_.end()) {
            if (v.front().second < 0)
                for (auto& [col, x] : v) x = -x;
            basis_.push_back(std::move(v));
            pivot_row_[p] = static_cast<int>(basis_.size()) - 1;
            return;
        }
        SparseRow& b = basis_[static_cast<size_t>(it->second)];
        // Replace the basis row by the gcd combination; the leading entry of
        // the remainder cancels, so the loop advances.
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b.front().second.get_mpz_t(),
                   v.front().second.get_mpz_t());
        Int bq = b.front().second / g;
        Int vq = v.front().second / g;
        SparseRow nb = combine(s, b, t, v);
        SparseRow nv = combine(bq, v, -vq, b);
        b = std::move(nb);
        v = std::move(nv);
    }
}

bool RowLattice::contains(const std::vector<Int>& dense) const {
    SparseRow v = sparsify(dense);
    while (!v.empty()) {
        int p = v.front().first;
        auto it = pivot_row_.find(p);
        if (it == pivot_row_.end()) return false;
        const SparseRow& b = basis_[static_cast<size_t>(it->second)];
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.front().second.get_mpz_t(),
                    b.front().second.get_mpz_t());
        if (rem != 0) return false;
        v = combine(1, v, -q, b);
    }
    return true;
}

IntMatrix RowLattice::echelon_rows() const {
    IntMatrix out(static_cast<int>(basis_.size()), n_);
    int i = 0;
    for (const auto& [piv, row] : pivot_row_) {
        (void)piv;
        for (const auto& [col, x] : basis_[static_cast<size_t>(row)]) out.at(i, col) = x;
        ++i;
    }
    return out;
}

bool lattice_contains(const IntMatrix& rows, const std::vector<Int>& v) {
    return RowLattice(rows).contains(v);
}

// ----------------------------------------------------------- FgAbelianGroup

FgAbelianGroup::FgAbelianGroup(int generators, IntMatrix relations)
    : n_(generators), relations_(std::move(relations)) {
    if (relations_.cols() != n_)
        throw Error("BadArgument", "relation matrix has wrong number of columns", EXIT_INTERNAL);
    // Echelon-reduce first: the span is unchanged and the Smith computation
    // then runs on at most n rows.
    relations_ = RowLattice(relations_).echelon_rows();
    SmithDecompositionZ s = smith_z(relations_);
    v_ = s.V;
    v_inv_transposed_ = s.Vinv.transposed();
    diag_.assign(static_cast<size_t>(n_), Int(0));
    int m = std::min(relations_.rows(), n_);
    for (int i = 0; i < m; ++i) diag_[static_cast<size_t>(i)] = s.D.at(i, i);
}

int FgAbelianGroup::free_rank() const {
    int r = 0;
    for (const auto& d : diag_)
        if (d == 0) ++r;
    return r;
}

std::vector<Int> FgAbelianGroup::torsion() const {
    std::vector<Int> t;
    for (const auto& d : diag_)
        if (d > 1) t.push_back(d);
    return t;
}

std::vector<Int> FgAbelianGroup::canonical_coords(const std::vector<Int>& x) const {
    return v_.transposed().apply(x);
}

std::vector<int> FgAbelianGroup::free_coordinate_indices() const {
    std::vector<int> idx;
    for (int i = 0; i < n_; ++i)
        if (diag_[static_cast<size_t>(i)] == 0) idx.push_back(i);
    return idx;
}

std::vector<int> FgAbelianGroup::torsion_coordinate_indices() const {
    std::vector<int> idx;
    for (int i = 0; i < n_; ++i)
        if (diag_[static_cast<size_t>(i)] > 1) idx.push_back(i);
    return idx;
}

bool FgAbelianGroup::is_zero_element(const std::vector<Int>& x) const {
    std::vector<Int> y = canonical_coords(x);
    for (int i = 0; i < n_; ++i) {
        const Int& d = diag_[static_cast<size_t>(i)];
        if (d == 0) {
            if (y[static_cast<size_t>(i)] != 0) return false;
        } else if (y[static_cast<size_t>(i)] % d != 0) {
            return false;
        }
    }
    return true;
}

IntMatrix FgAbelianGroup::induced_free_action(const IntMatrix& H) const {
    if (H.rows() != n_ || H.cols() != n_)
        throw Error("BadArgument", "endomorphism matrix has wrong dimensions", EXIT_INTERNAL);
    // H must send the relation span into itself.
    RowLattice lat(relations_);
    for (int i = 0; i < relations_.rows(); ++i) {
        std::vector<Int> r(static_cast<size_t>(n_));
        for (int j = 0; j < n_; ++j) r[static_cast<size_t>(j)] = relations_.at(i, j);
        if (!lat.contains(H.apply(r)))
            throw MapIllDefined("endomorphism does not preserve the relation span");
    }
    IntMatrix b = v_.transposed() * H * v_inv_transposed_;
    std::vector<int> free_idx = free_coordinate_indices();
    int f = static_cast<int>(free_idx.size());
    IntMatrix out(f, f);
    for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j) out.at(i, j) = b.at(free_idx[static_cast<size_t>(i)],
                                                        free_idx[static_cast<size_t>(j)]);
    // Torsion must not leak into the free part.
    for (int i = 0; i < f; ++i)
        for (int j = 0; j < n_; ++j) {
            if (diag_[static_cast<size_t>(j)] == 0) continue;
            Int entry = b.at(free_idx[static_cast<size_t>(i)], j);
            const Int& d = diag_[static_cast<size_t>(j)];
            if (d == 1) continue;
            if (entry != 0)
                throw MapIllDefined("endomorphism maps torsion outside torsion");
        }
    return out;
}

FgAbelianGroup abelian_from_relations(int generators, const IntMatrix& relations) {
    return FgAbelianGroup(generators, relations);
}

std::vector<std::vector<Int>> kernel_of_abelian_map(const FgAbelianGroup& domain,
                                                    const IntMatrix& map_on_generators) {
    int n = domain.num_generators();
    if (map_on_generators.cols() != n)
        throw Error("BadArgument", "map has wrong number of generator columns", EXIT_INTERNAL);

    const IntMatrix& rel = domain.relations();
    for (int i = 0; i < rel.rows(); ++i) {
        std::vector<Int> r(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) r[static_cast<size_t>(j)] = rel.at(i, j);
        for (const Int& x : map_on_generators.apply(r))
            if (x != 0) throw MapIllDefined("a domain relation has nonzero image");
    }

    // Kernel lattice of the integer matrix: columns of V past the rank.
    SmithDecompositionZ s = smith_z(map_on_generators);
    int rank = s.rank();
    std::vector<std::vector<Int>> gens;
    for (int j = rank; j < n; ++j) {
        std::vector<Int> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = s.V.at(i, j);
        gens.push_back(std::move(v));
    }
    return gens;
}

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_)
        throw Error("BadArgument", "matrix product dimension mismatch", EXIT_INTERNAL);
    PolyMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

// ----------------------------------------------------------------- smith_qt

namespace {

bool qt_pivot_better(const RatPoly& cand, const RatPoly& best) {
    if (cand.degree() != best.degree()) return cand.degree() < best.degree();
    Rat ca = abs(cand.leading()), ba = abs(best.leading());
    return ca < ba;
}

}  // namespace

SmithDecompositionQt smith_qt(const PolyMatrix& a) {
    int r = a.rows(), c = a.cols();
    SmithDecompositionQt out;
    out.U = PolyMatrix(r, r);
    out.V = PolyMatrix(c, c);
    for (int i = 0; i < r; ++i) out.U.at(i, i) = RatPoly::one();
    for (int j = 0; j < c; ++j) out.V.at(j, j) = RatPoly::one();
    out.D = a;
    PolyMatrix& A = out.D;
    PolyMatrix& U = out.U;
    PolyMatrix& V = out.V;

    auto swap_rows = [&](PolyMatrix& M, int i, int j) {
        for (int k = 0; k < M.cols(); ++k) std::swap(M.at(i, k), M.at(j, k));
    };
    auto swap_cols = [&](PolyMatrix& M, int i, int j) {
        for (int k = 0; k < M.rows(); ++k) std::swap(M.at(k, i), M.at(k, j));
    };
    auto add_row = [&](PolyMatrix& M, int i, int j, const RatPoly& f) {
        for (int k = 0; k < M.cols(); ++k) M.at(i, k) = M.at(i, k) + f * M.at(j, k);
    };
    auto add_col = [&](PolyMatrix& M, int i, int j, const RatPoly& f) {
        for (int k = 0; k < M.rows(); ++k) M.at(k, i) = M.at(k, i) + f * M.at(k, j);
    };

    int m = std::min(r, c);
    for (int k = 0; k < m; ++k) {
        for (;;) {
            // Pivot: lowest degree, then smallest |leading|, lowest row/col.
            int pi = -1, pj = -1;
            for (int i = k; i < r; ++i)
                for (int j = k; j < c; ++j) {
                    if (A.at(i, j).is_zero()) continue;
                    if (pi < 0 || qt_pivot_better(A.at(i, j), A.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) { k = m; break; }

            if (pi != k) { swap_rows(A, k, pi); swap_rows(U, k, pi); }
            if (pj != k) { swap_cols(A, k, pj); swap_cols(V, k, pj); }

            bool clean = true;
            for (int i = k + 1; i < r; ++i) {
                if (A.at(i, k).is_zero()) continue;
                RatPoly q = A.at(i, k).divmod(A.at(k, k)).first;
                RatPoly nq = -q;
                add_row(A, i, k, nq);
                add_row(U, i, k, nq);
                if (!A.at(i, k).is_zero()) clean = false;
            }
            for (int j = k + 1; j < c; ++j) {
                if (A.at(k, j).is_zero()) continue;
                RatPoly q = A.at(k, j).divmod(A.at(k, k)).first;
                RatPoly nq = -q;
                add_col(A, j, k, nq);
                add_col(V, j, k, nq);
                if (!A.at(k, j).is_zero()) clean = false;
            }
            if (!clean) continue;

            bool fixed = true;
            for (int i = k + 1; i < r && fixed; ++i)
                for (int j = k + 1; j < c && fixed; ++j)
                    if (!A.at(i, j).divmod(A.at(k, k)).second.is_zero()) {
                        add_row(A, k, i, RatPoly::one());
                        add_row(U, k, i, RatPoly::one());
                        fixed = false;
                    }
            if (fixed) break;
        }
    }

    // Normalize the diagonal to monic by scaling rows of D (and U).
    for (int i = 0; i < m; ++i) {
        if (A.at(i, i).is_zero()) continue;
        Rat lead = A.at(i, i).leading();
        if (lead != 1) {
            RatPoly inv = RatPoly::constant(1 / lead);
            for (int j = 0; j < c; ++j) A.at(i, j) = A.at(i, j) * inv;
            for (int j = 0; j < r; ++j) U.at(i, j) = U.at(i, j) * inv;
        }
        out.invariant_factors.push_back(A.at(i, i));
    }
    out.free_cokernel_rank = c - static_cast<int>(out.invariant_factors.size());
    return out;
}

}  // namespace calex
