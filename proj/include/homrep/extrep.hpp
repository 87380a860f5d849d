#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homrep/bigint.hpp"
#include "homrep/intlattice.hpp"

namespace homrep::extrep {

// Ordered basis of Lambda^degree Z^rank: strictly increasing index tuples in
// lexicographic order, 1-based indices. Degree is 2 or 3.
class ExtBasis {
public:
    ExtBasis(int rank, int degree);

    int rank() const { return rank_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(tuples_.size()); }
    const std::vector<std::vector<int>>& tuples() const { return tuples_; }

    int index_of(const std::vector<int>& sorted_tuple) const;
    // Sorts the tuple, tracking the permutation sign; nullopt for repeats.
    std::optional<std::pair<int, int>> index_with_sign(std::vector<int> tuple) const;

    bool operator==(const ExtBasis& other) const {
        return rank_ == other.rank_ && degree_ == other.degree_;
    }

private:
    int rank_;
    int degree_;
    std::vector<std::vector<int>> tuples_;
};

class ExtVector {
public:
    ExtVector(int rank, int degree);

    int rank() const { return basis_.rank(); }
    int degree() const { return basis_.degree(); }
    const ExtBasis& basis() const { return basis_; }
    const std::vector<Int>& coords() const { return coords_; }
    std::vector<Int>& coords() { return coords_; }

    // Adds coeff * (x_{t1} ^ x_{t2} ^ ...); repeated indices contribute zero.
    void add_term(std::vector<int> tuple, const Int& coeff);
    Int coeff(std::vector<int> tuple) const;
    bool is_zero() const;

    ExtVector add(const ExtVector& other) const;
    ExtVector scale(const Int& c) const;

    // Tokens joined with '^', e.g. `e1^f1^e2` under a symplectic labeler.
    std::string str(const std::function<std::string(int)>& label) const;
    std::string str() const;  // generic x<i> labels

    bool operator==(const ExtVector&) const = default;

private:
    ExtBasis basis_;
    std::vector<Int> coords_;
};

// Matrix of Lambda^degree M: entry (S,T) is the minor det M[S,T].
intlattice::IntMatrix wedge_action(const intlattice::IntMatrix& m, int degree);

// Action on Hom(H, Lambda^2 H) = H* tensor Lambda^2 H with the H* factor
// major: inverse-transpose on H*, wedge square on the target.
intlattice::IntMatrix hom_action(const intlattice::IntMatrix& m);

// Natural contraction Hom(H, Lambda^2 H) -> H sending x_i* (x_j ^ x_k) to
// [i=j] x_k - [i=k] x_j; GL-equivariant, so orbits starting in its kernel
// stay there.
intlattice::IntMatrix hom_contraction_matrix(int rank);

// Standard symplectic structure on Z^2g in the basis e_1..e_g, f_1..f_g:
// pairing matrix [[0, I], [-I, 0]].
class SymplecticForm {
public:
    explicit SymplecticForm(int genus);

    int genus() const { return genus_; }
    int dim() const { return 2 * genus_; }
    const intlattice::IntMatrix& pairing() const { return pairing_; }

    Int pair(const std::vector<Int>& a, const std::vector<Int>& b) const;
    // e<i> for 1..g, f<i-g> above
    std::string label(int index) const;
    // basis vector by symplectic position: e_i or f_i
    std::vector<Int> e(int i) const;
    std::vector<Int> f(int i) const;

private:
    int genus_;
    intlattice::IntMatrix pairing_;
};

// x^y^z -> w(x,y)z + w(y,z)x + w(z,x)y, extended linearly; the equivariant
// projection of Lambda^3 H onto H.
std::vector<Int> contraction(const ExtVector& v, const SymplecticForm& form);
intlattice::IntMatrix contraction_matrix(const SymplecticForm& form);

// x -> sum_i e_i ^ f_i ^ x; a section of the contraction up to the factor
// genus - 1 (see embed_contraction_constant).
ExtVector embed(const std::vector<Int>& x, const SymplecticForm& form);
intlattice::IntMatrix embed_matrix(const SymplecticForm& form);
inline Int embed_contraction_constant(int genus) { return Int(genus - 1); }

// T_v(x) = x + w(x,v) v; verified to satisfy M^T J M = J.
intlattice::IntMatrix symplectic_transvection(const SymplecticForm& form,
                                              const std::vector<Int>& v);

// All elementary transvections I + E_ij, i != j.
std::vector<intlattice::IntMatrix> sl_generators(int n);

// Symplectic transvections along a chain of 2g+1 pairwise-intersection
// 0/1 classes: e_1, f_1, e_1+e_2, f_2, e_2+e_3, ..., f_g, e_g. Tests pin the
// group these generate modulo small primes.
std::vector<intlattice::IntMatrix> sp_generators(int g);

}  // namespace homrep::extrep
