#pragma once

#include <vector>

#include "homrep/bigint.hpp"
#include "homrep/extrep.hpp"
#include "homrep/intlattice.hpp"

namespace homrep::surface {

// First homology with a (possibly degenerate) intersection pairing.
// Degenerate directions model loops about punctures: nullhomologous in the
// closed surface, so they pair to zero with everything.
class HomologyModel {
public:
    explicit HomologyModel(intlattice::IntMatrix pairing);

    static HomologyModel symplectic(int genus);
    // standard pairing padded with `punctures` zero rows/columns
    static HomologyModel symplectic_with_punctures(int genus, int punctures);

    int rank() const { return pairing_.rows(); }
    const intlattice::IntMatrix& pairing() const { return pairing_; }

    // oriented intersection number a^T P b
    Int pair(const std::vector<Int>& a, const std::vector<Int>& b) const;

private:
    intlattice::IntMatrix pairing_;
};

enum class PushKind { Point, Curve };

// Homology-level data of one pushing operation: the pushing-curve class c,
// the pushed class d, and the signed self-intersection total of the pushing
// curve (curve kind only).
struct PushDatum {
    PushKind kind = PushKind::Point;
    std::vector<Int> c;
    std::vector<Int> d;
    Int i_gamma = 0;
};

// a -> a + sum_i i(a, c_i) d_i
intlattice::IntMatrix point_push_matrix(const HomologyModel& model,
                                        const std::vector<PushDatum>& data);

// a -> a + sum_j [ i(a, c_j) d_j + i(a, d_j) (c_j + I_j d_j) ]
intlattice::IntMatrix curve_push_matrix(const HomologyModel& model,
                                        const std::vector<PushDatum>& data);

// Signed sum over self-intersection points; entries must be +1 or -1.
Int i_gamma_total(const std::vector<int>& local_signs);

bool preserves_pairing(const HomologyModel& model, const intlattice::IntMatrix& m);

struct LiftCriterionInput {
    long long s = 1;  // order of the relevant deck element
    long long j = 0;  // lift offset, 0 <= j < s
};

// True iff j generates Z/sZ, i.e. gcd(j, s) = 1: the pushed power of the
// curve has a single lift.
bool cyclic_criterion(const LiftCriterionInput& input);

// sum_{i=1..j} e_i ^ f_i ^ c in Lambda^3 of the genus-g homology; j < g.
// Returns the zero vector when c wedges away (c inside the first j handles).
extrep::ExtVector johnson_class_curve_push(int g, int j, const std::vector<Int>& c);

}  // namespace homrep::surface
