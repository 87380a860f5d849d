#include "homrep/surface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace homrep::surface {

using intlattice::IntMatrix;

HomologyModel::HomologyModel(IntMatrix pairing) : pairing_(std::move(pairing)) {
    if (pairing_.rows() != pairing_.cols())
        throw std::invalid_argument("pairing matrix must be square");
    for (int i = 0; i < pairing_.rows(); ++i)
        for (int j = 0; j < pairing_.cols(); ++j)
            if (pairing_.at(i, j) != -pairing_.at(j, i))
                throw std::invalid_argument("pairing matrix must be skew-symmetric");
}

HomologyModel HomologyModel::symplectic(int genus) {
    return HomologyModel(extrep::SymplecticForm(genus).pairing());
}

HomologyModel HomologyModel::symplectic_with_punctures(int genus, int punctures) {
    if (punctures < 0) throw std::invalid_argument("negative puncture count");
    int r = 2 * genus + punctures;
    IntMatrix p(r, r);
    extrep::SymplecticForm form(genus);
    for (int a = 0; a < 2 * genus; ++a)
        for (int b = 0; b < 2 * genus; ++b) p.at(a, b) = form.pairing().at(a, b);
    return HomologyModel(std::move(p));
}

Int HomologyModel::pair(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> pb = pairing_.apply(b);
    if (a.size() != pb.size()) throw std::invalid_argument("vector length mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * pb[i];
    return acc;
}

namespace {

void check_datum(const HomologyModel& model, const PushDatum& datum, PushKind expected) {
    if (datum.kind != expected) throw std::invalid_argument("push datum kind mismatch");
    if (static_cast<int>(datum.c.size()) != model.rank() ||
        static_cast<int>(datum.d.size()) != model.rank())
        throw std::invalid_argument("push datum vectors must match the model rank");
    if (expected == PushKind::Point && datum.i_gamma != 0)
        throw std::invalid_argument("point push data carry no self-intersection term");
}

// rank-one update m += u * (P v)^T, i.e. a |-> a + i(a, v) u added to m
void add_pairing_term(IntMatrix& m, const HomologyModel& model, const std::vector<Int>& u,
                      const std::vector<Int>& v) {
    std::vector<Int> pv = model.pairing().apply(v);
    for (int r = 0; r < m.rows(); ++r) {
        if (u[static_cast<std::size_t>(r)] == 0) continue;
        for (int c = 0; c < m.cols(); ++c)
            m.at(r, c) += u[static_cast<std::size_t>(r)] * pv[static_cast<std::size_t>(c)];
    }
}

}  // namespace

IntMatrix point_push_matrix(const HomologyModel& model, const std::vector<PushDatum>& data) {
    IntMatrix m = IntMatrix::identity(model.rank());
    for (const auto& datum : data) {
        check_datum(model, datum, PushKind::Point);
        add_pairing_term(m, model, datum.d, datum.c);
    }
    return m;
}

IntMatrix curve_push_matrix(const HomologyModel& model, const std::vector<PushDatum>& data) {
    IntMatrix m = IntMatrix::identity(model.rank());
    for (const auto& datum : data) {
        check_datum(model, datum, PushKind::Curve);
        add_pairing_term(m, model, datum.d, datum.c);
        std::vector<Int> mixed = datum.c;
        for (std::size_t i = 0; i < mixed.size(); ++i) mixed[i] += datum.i_gamma * datum.d[i];
        add_pairing_term(m, model, mixed, datum.d);
    }
    return m;
}

Int i_gamma_total(const std::vector<int>& local_signs) {
    Int acc = 0;
    for (int s : local_signs) {
        if (s != 1 && s != -1)
            throw std::invalid_argument("self-intersection signs must be +1 or -1");
        acc += s;
    }
    return acc;
}

bool preserves_pairing(const HomologyModel& model, const IntMatrix& m) {
    return m.transpose().multiply(model.pairing()).multiply(m) == model.pairing();
}

bool cyclic_criterion(const LiftCriterionInput& input) {
    if (input.s < 1) throw std::invalid_argument("deck element order must be positive");
    if (input.j < 0 || input.j >= input.s)
        throw std::invalid_argument("lift offset must lie in [0, s)");
    return std::gcd(input.j, input.s) == 1;
}

extrep::ExtVector johnson_class_curve_push(int g, int j, const std::vector<Int>& c) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    if (j < 1 || j >= g) throw std::invalid_argument("subsurface genus must lie in 1..g-1");
    if (static_cast<int>(c.size()) != 2 * g)
        throw std::invalid_argument("class length must be 2g");
    bool zero = std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; });
    if (zero) throw std::invalid_argument("pushed class must be nonzero");
    extrep::ExtVector out(2 * g, 3);
    for (int i = 1; i <= j; ++i)
        for (int t = 1; t <= 2 * g; ++t)
            if (c[static_cast<std::size_t>(t) - 1] != 0)
                out.add_term({i, g + i, t}, c[static_cast<std::size_t>(t) - 1]);
    return out;
}

}  // namespace homrep::surface
