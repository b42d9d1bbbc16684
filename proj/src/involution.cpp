#include "calex/involution.hpp"

#include <algorithm>

#include "calex/errors.hpp"

namespace calex {

IntMatrix InvolutionDecomposition::canonical_block() const {
    int n = n1 + n2 + 2 * n3;
    IntMatrix b(n, n);
    for (int i = 0; i < n1; ++i) b.at(i, i) = 1;
    for (int i = 0; i < n2; ++i) b.at(n1 + i, n1 + i) = -1;
    for (int i = 0; i < n3; ++i) {
        b.at(n1 + n2 + 2 * i, n1 + n2 + 2 * i + 1) = 1;
        b.at(n1 + n2 + 2 * i + 1, n1 + n2 + 2 * i) = 1;
    }
    return b;
}

namespace {

/// Columns of V past the rank of a: a basis of the saturated kernel lattice.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a) {
    SmithDecompositionZ s = smith_z(a);
    int rank = s.rank();
    std::vector<std::vector<Int>> out;
    for (int j = rank; j < a.cols(); ++j) {
        std::vector<Int> v(static_cast<size_t>(a.cols()));
        for (int i = 0; i < a.cols(); ++i) v[static_cast<size_t>(i)] = s.V.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

IntMatrix columns_to_matrix(int n, const std::vector<std::vector<Int>>& cols) {
    IntMatrix m(n, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    return m;
}

}  // namespace

InvolutionDecomposition decompose(const IntMatrix& h) {
    if (h.rows() != h.cols()) throw NotInvolution("matrix is not square");
    int n = h.rows();
    if (!(h * h).is_identity()) throw NotInvolution("h * h is not the identity");

    InvolutionDecomposition out;
    if (n == 0) {
        out.basis = IntMatrix(0, 0);
        return out;
    }

    IntMatrix id = IntMatrix::identity(n);
    std::vector<std::vector<Int>> eplus = kernel_basis(h - id);   // h(a) = a
    std::vector<std::vector<Int>> eminus = kernel_basis(h + id);  // h(a) = -a
    int k1 = static_cast<int>(eplus.size());
    int k2 = static_cast<int>(eminus.size());
    if (k1 + k2 != n)
        throw VerificationFailed("eigenlattice ranks do not add up for an involution");

    // M/(M+ + M-) is elementary abelian of exponent 2; its 2-rank is n3.
    std::vector<std::vector<Int>> bcols = eplus;
    bcols.insert(bcols.end(), eminus.begin(), eminus.end());
    IntMatrix B = columns_to_matrix(n, bcols);
    SmithDecompositionZ bs = smith_z(B);
    IntMatrix u_inv = inverse_unimodular(bs.U);
    IntMatrix v = bs.V;

    std::vector<int> two_coords;
    for (int i = 0; i < n; ++i) {
        const Int& d = bs.D.at(i, i);
        if (d == 1) continue;
        if (d == 2) {
            two_coords.push_back(i);
            continue;
        }
        throw VerificationFailed("quotient by the eigenlattices is not elementary 2-abelian");
    }
    int n3 = static_cast<int>(two_coords.size());
    if (n3 > std::min(k1, k2))
        throw VerificationFailed("swap rank exceeds an eigenlattice rank");

    // Coset representatives a_i = U^-1 e_i and the 0/1 coordinates of 2a_i
    // over the eigenbasis columns.
    std::vector<std::vector<Int>> reps;
    std::vector<std::vector<int>> alpha;  // 0/1 coordinates, length k1 + k2
    for (int idx : two_coords) {
        std::vector<Int> a(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = u_inv.at(i, idx);

        // Solve B x = 2a through the Smith form, then shift a by half of the
        // even part of x so every coordinate becomes 0 or 1.
        std::vector<Int> two_a(a);
        for (auto& x : two_a) x *= 2;
        std::vector<Int> w = bs.U.apply(two_a);
        std::vector<Int> y(static_cast<size_t>(k1 + k2), Int(0));
        for (int i = 0; i < n; ++i) {
            Int d = i < std::min(n, k1 + k2) ? bs.D.at(i, i) : Int(0);
            if (d == 0) {
                if (w[static_cast<size_t>(i)] != 0)
                    throw VerificationFailed("2a is not in the eigenlattice span");
            } else {
                if (w[static_cast<size_t>(i)] % d != 0)
                    throw VerificationFailed("2a is not in the eigenlattice span");
                y[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] / d;
            }
        }
        std::vector<Int> x = v.apply(y);
        std::vector<int> bits(static_cast<size_t>(k1 + k2));
        for (int j = 0; j < k1 + k2; ++j) {
            Int r = x[static_cast<size_t>(j)];
            Int bit = ((r % 2) + 2) % 2;
            Int half = (r - bit) / 2;
            bits[static_cast<size_t>(j)] = static_cast<int>(bit.get_si());
            if (half != 0)
                for (int i = 0; i < n; ++i)
                    a[static_cast<size_t>(i)] -= half * bcols[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        reps.push_back(std::move(a));
        alpha.push_back(std::move(bits));
    }

    // A mod-2 replacement a_i <- a_i + a_r - sum of shared basis vectors
    // keeps all coordinates 0/1 and XORs the coordinate rows.
    auto xor_replace = [&](int i, int r, int lo, int hi) {
        for (int j = lo; j < hi; ++j)
            if (alpha[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
                alpha[static_cast<size_t>(r)][static_cast<size_t>(j)])
                for (int t = 0; t < n; ++t)
                    reps[static_cast<size_t>(i)][static_cast<size_t>(t)] -=
                        bcols[static_cast<size_t>(j)][static_cast<size_t>(t)];
        for (int t = 0; t < n; ++t)
            reps[static_cast<size_t>(i)][static_cast<size_t>(t)] +=
                reps[static_cast<size_t>(r)][static_cast<size_t>(t)];
        for (int j = lo; j < hi; ++j)
            alpha[static_cast<size_t>(i)][static_cast<size_t>(j)] ^=
                alpha[static_cast<size_t>(r)][static_cast<size_t>(j)];
    };

    // Round 1: staircase in the minus block, rightmost pivots.
    std::vector<int> pivot_minus(static_cast<size_t>(n3), -1);
    for (int r = 0; r < n3; ++r) {
        for (int rr = 0; rr < r; ++rr)
            if (alpha[static_cast<size_t>(r)][static_cast<size_t>(pivot_minus[static_cast<size_t>(rr)])])
                xor_replace(r, rr, 0, k1 + k2);
        int piv = -1;
        for (int j = k1 + k2 - 1; j >= k1; --j)
            if (alpha[static_cast<size_t>(r)][static_cast<size_t>(j)]) { piv = j; break; }
        if (piv < 0) throw VerificationFailed("projection to the minus part degenerates");
        pivot_minus[static_cast<size_t>(r)] = piv;
    }

    // Round 2: staircase in the plus block; minus coordinates are already
    // rebased onto the projections and drop out of the bookkeeping.
    std::vector<int> pivot_plus(static_cast<size_t>(n3), -1);
    for (int r = 0; r < n3; ++r) {
        for (int rr = 0; rr < r; ++rr)
            if (alpha[static_cast<size_t>(r)][static_cast<size_t>(pivot_plus[static_cast<size_t>(rr)])])
                xor_replace(r, rr, 0, k1);
        int piv = -1;
        for (int j = k1 - 1; j >= 0; --j)
            if (alpha[static_cast<size_t>(r)][static_cast<size_t>(j)]) { piv = j; break; }
        if (piv < 0) throw VerificationFailed("projection to the plus part degenerates");
        pivot_plus[static_cast<size_t>(r)] = piv;
    }

    // Assemble the basis: unused plus vectors, unused minus vectors, then
    // the pairs (a_i, h a_i).
    out.n3 = n3;
    out.n1 = k1 - n3;
    out.n2 = k2 - n3;
    IntMatrix U(n, n);
    int col = 0;
    for (int j = 0; j < k1; ++j) {
        if (std::find(pivot_plus.begin(), pivot_plus.end(), j) != pivot_plus.end()) continue;
        for (int i = 0; i < n; ++i) U.at(i, col) = bcols[static_cast<size_t>(j)][static_cast<size_t>(i)];
        ++col;
    }
    for (int j = k1; j < k1 + k2; ++j) {
        if (std::find(pivot_minus.begin(), pivot_minus.end(), j) != pivot_minus.end()) continue;
        for (int i = 0; i < n; ++i) U.at(i, col) = bcols[static_cast<size_t>(j)][static_cast<size_t>(i)];
        ++col;
    }
    for (int r = 0; r < n3; ++r) {
        std::vector<Int> ha = h.apply(reps[static_cast<size_t>(r)]);
        for (int i = 0; i < n; ++i) U.at(i, col) = reps[static_cast<size_t>(r)][static_cast<size_t>(i)];
        ++col;
        for (int i = 0; i < n; ++i) U.at(i, col) = ha[static_cast<size_t>(i)];
        ++col;
    }

    Int det = U.determinant();
    if (det != 1 && det != -1)
        throw VerificationFailed("assembled involution basis is not unimodular");
    out.basis = U;
    if (!(inverse_unimodular(U) * h * U == out.canonical_block()))
        throw VerificationFailed("assembled basis does not conjugate h to the normal form");
    return out;
}

IntMatrix canonical_involution(int n1, int n2, int n3) {
    InvolutionDecomposition d;
    d.n1 = n1;
    d.n2 = n2;
    d.n3 = n3;
    return d.canonical_block();
}

IntMatrix random_unimodular(int n, int bound, std::mt19937_64& rng) {
    IntMatrix m = IntMatrix::identity(n);
    if (n < 2) return m;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    int accepted = 0, attempts = 0;
    while (accepted < 3 * n && attempts < 200 * n) {
        ++attempts;
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        int c = coin(rng) ? 1 : -1;
        IntMatrix cand = m;
        cand.add_row(i, j, c);
        bool ok = true;
        for (int r = 0; r < n && ok; ++r)
            for (int s = 0; s < n && ok; ++s)
                if (abs(cand.at(r, s)) > bound) ok = false;
        if (!ok) continue;
        m = std::move(cand);
        ++accepted;
    }
    return m;
}

SemidirectStats semidirect_stats(int n1, int n2, int n3) {
    if (n1 < 0 || n2 < 0 || n3 < 0)
        throw PreconditionFailed("counts must be nonnegative");
    SemidirectStats s;
    s.free_rank = n1 + n3 + 1;
    s.torsion.assign(static_cast<size_t>(n2), Int(2));
    s.charpoly = (IntPoly::t() - IntPoly::one()).pow(static_cast<unsigned>(n1 + n3)) *
                 (IntPoly::t() + IntPoly::one()).pow(static_cast<unsigned>(n2 + n3));
    return s;
}

}  // namespace calex
