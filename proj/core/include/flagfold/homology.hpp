#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "flagfold/complex.hpp"

namespace flagfold {

using BigInt = boost::multiprecision::cpp_int;

/// Dense exact integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix multiply(const IntMatrix& other) const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Boundary operator of K in dimension d (1 <= d <= dim K): rows are
/// (d-1)-faces, columns are d-faces, signs from the sorted vertex order.
IntMatrix boundary_matrix(const SimplicialComplex& k, int d,
                          std::size_t face_cap = kDefaultFaceCap);

struct SmithResult {
    /// d1 | d2 | ... | dr, all positive; r is the rank.
    std::vector<BigInt> invariant_factors;
    std::size_t rank() const { return invariant_factors.size(); }
};

/// Exact Smith normal form over Z. Pivot: minimal absolute value, ties by
/// smallest nonzero count in its row plus column, then position.
SmithResult smith_normal_form(IntMatrix m);

/// Betti numbers and torsion coefficients of integral simplicial homology.
struct HomologyProfile {
    bool reduced = false;
    std::vector<int> betti;                          // index = dimension
    std::vector<std::pair<int, BigInt>> torsion;     // (dimension, invariant factor > 1)

    bool trivial() const;  // all betti zero and no torsion
    /// Equality of the homology groups: trailing zero betti entries are
    /// ignored (groups above the complex dimension are zero).
    bool operator==(const HomologyProfile& other) const;
    bool operator!=(const HomologyProfile& other) const { return !(*this == other); }
    std::string to_string() const;
};

/// Integral homology of K via Smith normal forms of the boundary matrices.
/// The reduced variant augments the chain complex in dimension 0.
HomologyProfile homology(const SimplicialComplex& k, bool reduced = true,
                         std::size_t face_cap = kDefaultFaceCap);

/// Alternating sum of face counts.
long long euler_characteristic(const SimplicialComplex& k,
                               std::size_t face_cap = kDefaultFaceCap);

/// Fundamental group presentation from a breadth-first spanning tree rooted
/// at the least vertex: generators are the non-tree edges, relators are the
/// boundary words of the 2-faces. Requires K connected.
struct Presentation {
    std::vector<std::string> generators;  // edge names "u--v"
    /// Relators as words of signed 1-based generator indices.
    std::vector<std::vector<int>> relators;
};
Presentation pi1_presentation(const SimplicialComplex& k,
                              std::size_t face_cap = kDefaultFaceCap);

/// Invariant factors (including 0s for free rank) of the abelianization.
SmithResult abelianization(const Presentation& p, std::size_t* free_rank_out = nullptr);

enum class TrivializeOutcome { Trivial, Unknown };

/// Budgeted Tietze simplification: free/cyclic reduction, removal of
/// generators occurring exactly once overall, relator dedup. Returns
/// Trivial only on reaching the empty presentation.
TrivializeOutcome try_trivialize(Presentation p, std::size_t max_passes = 1000);

}  // namespace flagfold
