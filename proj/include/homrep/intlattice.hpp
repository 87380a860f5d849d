#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homrep/bigint.hpp"

namespace homrep::intlattice {

inline constexpr int kDefaultPassLimit = 64;

class IntMatrix {
public:
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(std::vector<std::vector<Int>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c);
    const Int& at(int r, int c) const;

    IntMatrix multiply(const IntMatrix& other) const;
    IntMatrix add(const IntMatrix& other) const;
    IntMatrix subtract(const IntMatrix& other) const;
    IntMatrix transpose() const;
    std::vector<Int> apply(const std::vector<Int>& v) const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);

    bool is_identity() const;
    bool is_zero() const;

    bool operator==(const IntMatrix&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Int> data_;  // row-major
};

// Entrywise Kronecker product; row/column index of the result is A-major.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Fraction-free (Bareiss) determinant; exact over Int.
Int determinant(const IntMatrix& a);

struct SNFResult {
    IntMatrix d;  // diagonal, nonnegative, each entry divides the next
    IntMatrix u;  // unimodular row transform
    IntMatrix v;  // unimodular column transform, u*a*v == d
    std::vector<Int> diagonal() const;
};

SNFResult snf(const IntMatrix& a);

// Inverse of a matrix with determinant +-1; throws std::invalid_argument
// otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

// Basis of the integer kernel {x : a*x = 0}, as columns collected into
// vectors. The basis spans a saturated sublattice.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a);

// Finitely generated subgroup of Z^ambient, stored as a row basis in echelon
// form with positive pivots and entries above each pivot reduced.
class Sublattice {
public:
    explicit Sublattice(int ambient_rank);

    int ambient_rank() const { return ambient_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<Int>>& basis() const { return basis_; }

    // Returns true when the vector enlarged the lattice.
    bool insert(std::vector<Int> v);
    bool contains(const std::vector<Int>& v) const;
    // Coordinates of v in the stored basis, if v lies in the lattice.
    std::optional<std::vector<Int>> coordinates(const std::vector<Int>& v) const;

private:
    void normalize();

    int ambient_;
    std::vector<std::vector<Int>> basis_;
    std::vector<int> pivots_;  // pivot column of each basis row, increasing
};

// Index in the ambient lattice: nullopt means infinite (rank deficit),
// otherwise the absolute determinant of the basis.
std::optional<Int> lattice_index(const Sublattice& lattice);

// Index of inner inside outer; requires inner to be contained in outer.
// nullopt when the ranks differ (infinite index).
std::optional<Int> relative_index(const Sublattice& inner, const Sublattice& outer);

struct SaturationLimitError : std::runtime_error {
    explicit SaturationLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Smallest sublattice containing seed and closed under gens and their
// inverses. Saturation runs full passes over the current basis; a pass that
// inserts nothing proves closure. Throws SaturationLimitError after
// pass_limit passes (the JS_PASS_LIMIT environment variable overrides the
// default at the CLI layer).
Sublattice orbit_span(const std::vector<Int>& seed, const std::vector<IntMatrix>& gens,
                      int pass_limit = kDefaultPassLimit);

// Largest i <= cap with m congruent to the identity mod p^i.
int congruence_depth(const IntMatrix& m, const Int& p, int cap);

}  // namespace homrep::intlattice
