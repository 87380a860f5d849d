#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homrep/bigint.hpp"
#include "homrep/freegroup.hpp"

namespace homrep::nilpotent {

inline constexpr int kDefaultDegreeCap = 4;
inline constexpr int kMaxDegreeCap = 6;

// Noncommutative integer polynomial truncated above degree_cap. Monomials are
// index sequences (empty = constant term); zero coefficients are never stored.
class TruncatedSeries {
public:
    using Monomial = std::vector<int>;

    TruncatedSeries(int rank, int degree_cap);

    static TruncatedSeries unit(int rank, int degree_cap);
    // 1 + X_i
    static TruncatedSeries generator(int rank, int degree_cap, int i);
    // Full truncated geometric series 1 - X_i + X_i^2 - ...; anything shorter
    // breaks multiplicativity of word expansion.
    static TruncatedSeries generator_inverse(int rank, int degree_cap, int i);

    int rank() const { return rank_; }
    int degree_cap() const { return degree_cap_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    Int coefficient(const Monomial& mono) const;
    std::optional<int> min_nonconstant_degree() const;

    TruncatedSeries add(const TruncatedSeries& other) const;
    TruncatedSeries subtract(const TruncatedSeries& other) const;
    TruncatedSeries multiply(const TruncatedSeries& other) const;

    // e.g. `1 + 4·X2X3 - 4·X3X2`; monomials in lexicographic index order.
    std::string str() const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    void set(const Monomial& mono, Int value);

    int rank_;
    int degree_cap_;
    std::map<Monomial, Int> terms_;
};

TruncatedSeries expand(const freegroup::Word& w, int degree_cap);

// Filtration depth, capped: `at_least_cap` means every term up to the cap
// vanished and the true depth is >= cap.
struct Depth {
    int value = 0;
    bool at_least_cap = false;

    static Depth exact(int v) { return {v, false}; }
    static Depth at_least(int cap) { return {cap, true}; }

    bool operator==(const Depth&) const = default;
    std::string str() const;
};

// Largest k with w in the k-th lower-central-series term, where depth 1 means
// the commutator subgroup: (minimal nonconstant Magnus degree) - 1.
Depth lcs_depth(const freegroup::Word& w, int degree_cap);
// Min over generators of lcs_depth(a_i^-1 f(a_i)); >= 1 means f acts
// trivially on homology.
Depth johnson_depth(const freegroup::Automorphism& f, int degree_cap);

// Integer vector in Hom(H, Lambda^2 H): basis (i, j^k) with 1<=i<=rank and
// j<k, i-major then (j,k) lexicographic.
class HomVector {
public:
    explicit HomVector(int rank);

    static int dimension(int rank) { return rank * rank * (rank - 1) / 2; }
    static int pair_index(int rank, int j, int k);

    int rank() const { return rank_; }
    const std::vector<Int>& coords() const { return coords_; }

    Int get(int i, int j, int k) const;
    void set(int i, int j, int k, Int value);
    bool is_zero() const;

    std::string str() const;

    bool operator==(const HomVector&) const = default;

private:
    int rank_;
    std::vector<Int> coords_;
};

// Degree-2 Magnus data of a_i^-1 f(a_i): coordinate (i, j^k) is the
// coefficient of XjXk (j<k). Throws if f moves homology (degree-1 terms) and
// asserts the degree-2 part is antisymmetric, which pins the normalization:
// the commutator transvection with exponent e maps to e^2 on (1, 2^3).
HomVector tau(const freegroup::Automorphism& f);

// Element of the upper unitriangular group UT(size, Z/mod).
class UnitriangularElement {
public:
    UnitriangularElement(int size, int mod);  // identity
    static UnitriangularElement elementary(int size, int mod, int i, int j, int value = 1);

    int size() const { return size_; }
    int mod() const { return mod_; }
    int entry(int i, int j) const;  // 1-based
    void set_entry(int i, int j, int value);

    UnitriangularElement multiply(const UnitriangularElement& other) const;
    // Above-diagonal entries packed base `mod`; injective, used as a set key.
    unsigned long long key() const;

    bool operator==(const UnitriangularElement&) const = default;

private:
    int size_;
    int mod_;
    std::vector<int> entries_;  // row-major
};

// Full enumeration of UT(size, Z/mod); guarded against large orders.
std::vector<UnitriangularElement> unitriangular_group(int size, int mod);

// Do the superdiagonal coordinates of gens span (Z/mod)^(size-1)?  This is
// exactly spanning the abelianization of UT(size, Z/mod).
bool abelianized_images_span(int size, int mod, const std::vector<UnitriangularElement>& gens);

// True iff the multiplicative closure of gens is the whole unitriangular
// group. For these nilpotent groups this is expected to agree with
// abelianized_images_span, and tests sweep that equivalence exhaustively.
bool frattini_index_check(int size, int mod, const std::vector<UnitriangularElement>& gens);

}  // namespace homrep::nilpotent
