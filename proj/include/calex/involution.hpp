#ifndef CALEX_INVOLUTION_HPP
#define CALEX_INVOLUTION_HPP

#include <random>
#include <vector>

#include "calex/linalg.hpp"
#include "calex/poly.hpp"

namespace calex {

/// Splitting of an integer involution into n1 fixed lines, n2 negated lines
/// and n3 swapped planes: basis^-1 * h * basis is the canonical block matrix
/// diag(I_n1, -I_n2, n3 swap blocks), and basis is unimodular.
struct InvolutionDecomposition {
    int n1 = 0, n2 = 0, n3 = 0;
    IntMatrix basis;

    IntMatrix canonical_block() const;  // the conjugated normal form
};

/// Decomposes h with h*h = Id; throws NotInvolution otherwise.
InvolutionDecomposition decompose(const IntMatrix& h);

/// Invariants of Z^rank x| <h> for the canonical involution with the given
/// counts: abelianization and det(t*Id - h).
struct SemidirectStats {
    int free_rank = 0;
    std::vector<Int> torsion;  // n2 copies of 2
    IntPoly charpoly;          // (t-1)^(n1+n3) (t+1)^(n2+n3), monic orientation
};

SemidirectStats semidirect_stats(int n1, int n2, int n3);

IntMatrix canonical_involution(int n1, int n2, int n3);

/// Seeded unimodular matrix from elementary shears, every entry kept within
/// [-bound, bound].
IntMatrix random_unimodular(int n, int bound, std::mt19937_64& rng);

}  // namespace calex

#endif
