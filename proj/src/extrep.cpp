#include "homrep/extrep.hpp"

#include <algorithm>
#include <stdexcept>

namespace homrep::extrep {

using intlattice::IntMatrix;

ExtBasis::ExtBasis(int rank, int degree) : rank_(rank), degree_(degree) {
    if (degree != 2 && degree != 3) throw std::invalid_argument("exterior degree must be 2 or 3");
    if (rank < degree) throw std::invalid_argument("rank below exterior degree");
    if (degree == 2) {
        for (int i = 1; i <= rank; ++i)
            for (int j = i + 1; j <= rank; ++j) tuples_.push_back({i, j});
    } else {
        for (int i = 1; i <= rank; ++i)
            for (int j = i + 1; j <= rank; ++j)
                for (int k = j + 1; k <= rank; ++k) tuples_.push_back({i, j, k});
    }
}

int ExtBasis::index_of(const std::vector<int>& sorted_tuple) const {
    auto it = std::lower_bound(tuples_.begin(), tuples_.end(), sorted_tuple);
    if (it == tuples_.end() || *it != sorted_tuple)
        throw std::out_of_range("tuple not in exterior basis");
    return static_cast<int>(it - tuples_.begin());
}

std::optional<std::pair<int, int>> ExtBasis::index_with_sign(std::vector<int> tuple) const {
    if (static_cast<int>(tuple.size()) != degree_)
        throw std::invalid_argument("tuple length does not match exterior degree");
    for (int t : tuple)
        if (t < 1 || t > rank_) throw std::out_of_range("tuple index out of range");
    // bubble sort, counting swaps for the permutation sign
    int sign = 1;
    for (std::size_t a = 0; a < tuple.size(); ++a)
        for (std::size_t b = a + 1; b < tuple.size(); ++b)
            if (tuple[a] > tuple[b]) {
                std::swap(tuple[a], tuple[b]);
                sign = -sign;
            }
    for (std::size_t a = 1; a < tuple.size(); ++a)
        if (tuple[a] == tuple[a - 1]) return std::nullopt;
    return std::make_pair(index_of(tuple), sign);
}

ExtVector::ExtVector(int rank, int degree) : basis_(rank, degree) {
    coords_.assign(static_cast<std::size_t>(basis_.size()), Int(0));
}

void ExtVector::add_term(std::vector<int> tuple, const Int& coeff) {
    auto pos = basis_.index_with_sign(std::move(tuple));
    if (!pos) return;  // repeated index wedges to zero
    coords_[static_cast<std::size_t>(pos->first)] += pos->second * coeff;
}

Int ExtVector::coeff(std::vector<int> tuple) const {
    auto pos = basis_.index_with_sign(std::move(tuple));
    if (!pos) return 0;
    return Int(pos->second) * coords_[static_cast<std::size_t>(pos->first)];
}

bool ExtVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

ExtVector ExtVector::add(const ExtVector& other) const {
    if (!(basis_ == other.basis_)) throw std::invalid_argument("exterior basis mismatch");
    ExtVector out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += other.coords_[i];
    return out;
}

ExtVector ExtVector::scale(const Int& c) const {
    ExtVector out = *this;
    for (auto& x : out.coords_) x *= c;
    return out;
}

std::string ExtVector::str(const std::function<std::string(int)>& label) const {
    std::string out;
    for (int t = 0; t < basis_.size(); ++t) {
        const Int& c = coords_[static_cast<std::size_t>(t)];
        if (c == 0) continue;
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        Int mag = abs_int(c);
        if (mag != 1) out += mag.str() + "·";
        std::string token;
        for (int idx : basis_.tuples()[static_cast<std::size_t>(t)]) {
            if (!token.empty()) token += "^";
            token += label(idx);
        }
        out += token;
    }
    return out.empty() ? "0" : out;
}

std::string ExtVector::str() const {
    return str([](int i) { return "x" + std::to_string(i); });
}

IntMatrix wedge_action(const IntMatrix& m, int degree) {
    if (m.rows() != m.cols()) throw std::invalid_argument("wedge action needs a square matrix");
    ExtBasis basis(m.rows(), degree);
    IntMatrix out(basis.size(), basis.size());
    for (int col = 0; col < basis.size(); ++col) {
        const auto& t = basis.tuples()[static_cast<std::size_t>(col)];
        for (int row = 0; row < basis.size(); ++row) {
            const auto& s = basis.tuples()[static_cast<std::size_t>(row)];
            IntMatrix minor(degree, degree);
            for (int a = 0; a < degree; ++a)
                for (int b = 0; b < degree; ++b)
                    minor.at(a, b) = m.at(s[static_cast<std::size_t>(a)] - 1,
                                          t[static_cast<std::size_t>(b)] - 1);
            out.at(row, col) = intlattice::determinant(minor);
        }
    }
    return out;
}

IntMatrix hom_action(const IntMatrix& m) {
    IntMatrix inv_t = intlattice::unimodular_inverse(m).transpose();
    return intlattice::kronecker(inv_t, wedge_action(m, 2));
}

IntMatrix hom_contraction_matrix(int rank) {
    ExtBasis pairs(rank, 2);
    IntMatrix out(rank, rank * pairs.size());
    for (int i = 1; i <= rank; ++i) {
        for (int p = 0; p < pairs.size(); ++p) {
            int col = (i - 1) * pairs.size() + p;
            int j = pairs.tuples()[static_cast<std::size_t>(p)][0];
            int k = pairs.tuples()[static_cast<std::size_t>(p)][1];
            if (i == j) out.at(k - 1, col) += 1;
            if (i == k) out.at(j - 1, col) -= 1;
        }
    }
    return out;
}

SymplecticForm::SymplecticForm(int genus) : genus_(genus), pairing_(2 * genus, 2 * genus) {
    if (genus < 1) throw std::invalid_argument("genus must be positive");
    for (int i = 0; i < genus; ++i) {
        pairing_.at(i, genus + i) = 1;
        pairing_.at(genus + i, i) = -1;
    }
}

Int SymplecticForm::pair(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> pb = pairing_.apply(b);
    if (a.size() != pb.size()) throw std::invalid_argument("vector length mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * pb[i];
    return acc;
}

std::string SymplecticForm::label(int index) const {
    if (index < 1 || index > 2 * genus_) throw std::out_of_range("basis index");
    return index <= genus_ ? "e" + std::to_string(index)
                           : "f" + std::to_string(index - genus_);
}

std::vector<Int> SymplecticForm::e(int i) const {
    if (i < 1 || i > genus_) throw std::out_of_range("basis index");
    std::vector<Int> v(static_cast<std::size_t>(dim()), Int(0));
    v[static_cast<std::size_t>(i) - 1] = 1;
    return v;
}

std::vector<Int> SymplecticForm::f(int i) const {
    if (i < 1 || i > genus_) throw std::out_of_range("basis index");
    std::vector<Int> v(static_cast<std::size_t>(dim()), Int(0));
    v[static_cast<std::size_t>(genus_ + i) - 1] = 1;
    return v;
}

std::vector<Int> contraction(const ExtVector& v, const SymplecticForm& form) {
    if (v.degree() != 3) throw std::invalid_argument("contraction consumes degree-3 vectors");
    if (v.rank() != form.dim())
        throw std::invalid_argument("ambient rank does not match the form");
    std::vector<Int> out(static_cast<std::size_t>(form.dim()), Int(0));
    const auto& tuples = v.basis().tuples();
    auto w = [&form](int a, int b) {
        return form.pairing().at(a - 1, b - 1);
    };
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const Int& c = v.coords()[t];
        if (c == 0) continue;
        int x = tuples[t][0], y = tuples[t][1], z = tuples[t][2];
        out[static_cast<std::size_t>(z) - 1] += c * w(x, y);
        out[static_cast<std::size_t>(x) - 1] += c * w(y, z);
        out[static_cast<std::size_t>(y) - 1] += c * w(z, x);
    }
    return out;
}

IntMatrix contraction_matrix(const SymplecticForm& form) {
    ExtBasis basis(form.dim(), 3);
    IntMatrix out(form.dim(), basis.size());
    for (int col = 0; col < basis.size(); ++col) {
        ExtVector unit(form.dim(), 3);
        unit.coords()[static_cast<std::size_t>(col)] = 1;
        std::vector<Int> img = contraction(unit, form);
        for (int r = 0; r < form.dim(); ++r) out.at(r, col) = img[static_cast<std::size_t>(r)];
    }
    return out;
}

ExtVector embed(const std::vector<Int>& x, const SymplecticForm& form) {
    if (static_cast<int>(x.size()) != form.dim())
        throw std::invalid_argument("vector length does not match the form");
    ExtVector out(form.dim(), 3);
    for (int i = 1; i <= form.genus(); ++i)
        for (int t = 1; t <= form.dim(); ++t) {
            const Int& c = x[static_cast<std::size_t>(t) - 1];
            if (c != 0) out.add_term({i, form.genus() + i, t}, c);
        }
    return out;
}

IntMatrix embed_matrix(const SymplecticForm& form) {
    ExtBasis basis(form.dim(), 3);
    IntMatrix out(basis.size(), form.dim());
    for (int col = 0; col < form.dim(); ++col) {
        std::vector<Int> unit(static_cast<std::size_t>(form.dim()), Int(0));
        unit[static_cast<std::size_t>(col)] = 1;
        ExtVector img = embed(unit, form);
        for (int r = 0; r < basis.size(); ++r) out.at(r, col) = img.coords()[static_cast<std::size_t>(r)];
    }
    return out;
}

IntMatrix symplectic_transvection(const SymplecticForm& form, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != form.dim())
        throw std::invalid_argument("vector length does not match the form");
    int n = form.dim();
    // T = I + v * (Jv)^T sends x to x + w(x,v) v
    std::vector<Int> jv = form.pairing().apply(v);
    IntMatrix t = IntMatrix::identity(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            t.at(r, c) += v[static_cast<std::size_t>(r)] * jv[static_cast<std::size_t>(c)];
    IntMatrix check = t.transpose().multiply(form.pairing()).multiply(t);
    if (!(check == form.pairing()))
        throw std::logic_error("transvection failed to preserve the form");
    return t;
}

std::vector<IntMatrix> sl_generators(int n) {
    if (n < 2) throw std::invalid_argument("sl generators need rank >= 2");
    std::vector<IntMatrix> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            IntMatrix m = IntMatrix::identity(n);
            m.at(i, j) = 1;
            out.push_back(std::move(m));
        }
    return out;
}

std::vector<IntMatrix> sp_generators(int g) {
    if (g < 2) throw std::invalid_argument("sp generators need genus >= 2");
    SymplecticForm form(g);
    std::vector<std::vector<Int>> directions;
    auto plus = [](std::vector<Int> a, const std::vector<Int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    };
    directions.push_back(form.e(1));
    directions.push_back(form.f(1));
    for (int i = 2; i <= g; ++i) {
        directions.push_back(plus(form.e(i - 1), form.e(i)));
        directions.push_back(form.f(i));
    }
    directions.push_back(form.e(g));
    // For odd genus the chain directions all take value 1 under a common
    // quadratic refinement of the form mod 2, so they only generate an
    // orthogonal subgroup there; a transvection along e_2 (where that
    // refinement vanishes) restores the full symplectic group.
    if (g >= 3) directions.push_back(form.e(2));
    std::vector<IntMatrix> out;
    out.reserve(directions.size());
    for (const auto& v : directions) out.push_back(symplectic_transvection(form, v));
    return out;
}

}  // namespace homrep::extrep
