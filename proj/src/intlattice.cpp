#include "homrep/intlattice.hpp"

#include <algorithm>
#include <utility>

namespace homrep::intlattice {

namespace {

// index of the first nonzero coordinate, or -1
int leading(const std::vector<Int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

// quotient rounding toward negative infinity; divisor must be positive
Int floor_div(const Int& a, const Int& b) {
    Int r = a % b;
    if (r < 0) r += b;
    return (a - r) / b;
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Int(0));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Int>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = std::move(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
}

Int& IntMatrix::at(int r, int c) {
    if (r < 0 || c < 0 || r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c)];
}

const Int& IntMatrix::at(int r, int c) const {
    if (r < 0 || c < 0 || r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c)];
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Int& bkj = other.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::add(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
    return out;
}

IntMatrix IntMatrix::subtract(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    IntMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("vector length mismatch");
    std::vector<Int> out(static_cast<std::size_t>(rows_), Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return out;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant needs a square matrix");
    int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            m.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    Int det = m.at(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

std::vector<Int> SNFResult::diagonal() const {
    std::vector<Int> out;
    int lim = std::min(d.rows(), d.cols());
    out.reserve(static_cast<std::size_t>(lim));
    for (int i = 0; i < lim; ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

void add_row(IntMatrix& m, int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += q * m.at(src, j);
}

void add_col(IntMatrix& m, int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += q * m.at(i, src);
}

void negate_row(IntMatrix& m, int r) {
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

SNFResult snf(const IntMatrix& a) {
    int rows = a.rows(), cols = a.cols();
    SNFResult res{a, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    IntMatrix& b = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    int lim = std::min(rows, cols);
    for (int t = 0; t < lim; ++t) {
        // smallest-magnitude pivot keeps coefficient growth down
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c) {
                if (b.at(r, c) == 0) continue;
                Int mag = abs_int(b.at(r, c));
                if (pr < 0 || mag < best) {
                    best = mag;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;  // remaining block is zero
        b.swap_rows(t, pr);
        u.swap_rows(t, pr);
        b.swap_cols(t, pc);
        v.swap_cols(t, pc);

        for (;;) {
            // gcd-eliminate column t below the pivot
            bool column_clean = false;
            while (!column_clean) {
                column_clean = true;
                for (int r = t + 1; r < rows; ++r) {
                    if (b.at(r, t) == 0) continue;
                    Int q = b.at(r, t) / b.at(t, t);
                    add_row(b, r, t, -q);
                    add_row(u, r, t, -q);
                    if (b.at(r, t) != 0) {
                        // remainder is smaller than the pivot: promote it
                        b.swap_rows(t, r);
                        u.swap_rows(t, r);
                        column_clean = false;
                    }
                }
            }
            // gcd-eliminate row t right of the pivot; a column swap drags
            // fresh entries into column t, so restart when that happens
            bool row_clean = true;
            for (int c = t + 1; c < cols; ++c) {
                if (b.at(t, c) == 0) continue;
                Int q = b.at(t, c) / b.at(t, t);
                add_col(b, c, t, -q);
                add_col(v, c, t, -q);
                if (b.at(t, c) != 0) {
                    b.swap_cols(t, c);
                    v.swap_cols(t, c);
                    row_clean = false;
                }
            }
            if (!row_clean) continue;

            // divisibility sweep: the pivot must divide the remaining block,
            // otherwise fold the offending row into row t and re-eliminate
            bool divisible = true;
            for (int r = t + 1; r < rows && divisible; ++r)
                for (int c = t + 1; c < cols; ++c)
                    if (b.at(r, c) % b.at(t, t) != 0) {
                        add_row(b, t, r, Int(1));
                        add_row(u, t, r, Int(1));
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
    }
    for (int t = 0; t < lim; ++t)
        if (b.at(t, t) < 0) {
            negate_row(b, t);
            negate_row(u, t);
        }
    return res;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse needs a square matrix");
    SNFResult r = snf(a);
    for (int i = 0; i < a.rows(); ++i)
        if (r.d.at(i, i) != 1)
            throw std::invalid_argument("matrix is not invertible over the integers");
    // u*a*v = 1  =>  a^-1 = v*u
    return r.v.multiply(r.u);
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a) {
    SNFResult r = snf(a);
    int lim = std::min(a.rows(), a.cols());
    std::vector<std::vector<Int>> out;
    for (int j = 0; j < a.cols(); ++j) {
        if (j < lim && r.d.at(j, j) != 0) continue;
        std::vector<Int> col(static_cast<std::size_t>(a.cols()));
        for (int i = 0; i < a.cols(); ++i) col[static_cast<std::size_t>(i)] = r.v.at(i, j);
        out.push_back(std::move(col));
    }
    return out;
}

Sublattice::Sublattice(int ambient_rank) : ambient_(ambient_rank) {
    if (ambient_rank < 1) throw std::invalid_argument("ambient rank must be positive");
}

void Sublattice::normalize() {
    // Hermite-style reduction: positive pivots, entries above a pivot reduced
    // into [0, pivot). Canonical bases make reports and tests reproducible.
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        auto& row = basis_[i];
        int p = pivots_[i];
        if (row[static_cast<std::size_t>(p)] < 0)
            for (auto& x : row) x = -x;
    }
    for (std::size_t i = basis_.size(); i-- > 0;) {
        int p = pivots_[i];
        const Int& pivot = basis_[i][static_cast<std::size_t>(p)];
        for (std::size_t e = 0; e < i; ++e) {
            Int q = floor_div(basis_[e][static_cast<std::size_t>(p)], pivot);
            if (q == 0) continue;
            for (std::size_t c = 0; c < basis_[e].size(); ++c)
                basis_[e][c] -= q * basis_[i][c];
        }
    }
}

bool Sublattice::insert(std::vector<Int> v) {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("vector length mismatch");
    bool changed = false;
    std::size_t bi = 0;
    while (true) {
        int lead = leading(v);
        if (lead < 0) break;
        while (bi < basis_.size() && pivots_[bi] < lead) ++bi;
        if (bi == basis_.size() || pivots_[bi] > lead) {
            // new pivot column: v joins the basis as-is
            basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(bi), v);
            pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(bi), lead);
            changed = true;
            v.clear();
            break;
        }
        auto& row = basis_[bi];
        const Int a = row[static_cast<std::size_t>(lead)];
        const Int b = v[static_cast<std::size_t>(lead)];
        if (b % a == 0) {
            Int q = b / a;
            for (std::size_t c = 0; c < v.size(); ++c) v[c] -= q * row[c];
        } else {
            auto [g, x, y] = extended_gcd(a, b);
            std::vector<Int> new_row(v.size()), new_v(v.size());
            Int ca = a / g, cb = b / g;
            for (std::size_t c = 0; c < v.size(); ++c) {
                new_row[c] = x * row[c] + y * v[c];
                new_v[c] = ca * v[c] - cb * row[c];
            }
            row = std::move(new_row);
            v = std::move(new_v);
            changed = true;
        }
    }
    if (changed) normalize();
    return changed;
}

bool Sublattice::contains(const std::vector<Int>& v) const {
    return coordinates(v).has_value();
}

std::optional<std::vector<Int>> Sublattice::coordinates(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("vector length mismatch");
    std::vector<Int> w = v;
    std::vector<Int> coords(basis_.size(), Int(0));
    std::size_t bi = 0;
    while (true) {
        int lead = leading(w);
        if (lead < 0) return coords;
        while (bi < basis_.size() && pivots_[bi] < lead) ++bi;
        if (bi == basis_.size() || pivots_[bi] > lead) return std::nullopt;
        const auto& row = basis_[bi];
        const Int& a = row[static_cast<std::size_t>(lead)];
        if (w[static_cast<std::size_t>(lead)] % a != 0) return std::nullopt;
        Int q = w[static_cast<std::size_t>(lead)] / a;
        for (std::size_t c = 0; c < w.size(); ++c) w[c] -= q * row[c];
        coords[bi] = q;
    }
}

std::optional<Int> lattice_index(const Sublattice& lattice) {
    if (lattice.rank() < lattice.ambient_rank()) return std::nullopt;
    IntMatrix m = IntMatrix::from_rows(lattice.basis());
    return abs_int(determinant(m));
}

std::optional<Int> relative_index(const Sublattice& inner, const Sublattice& outer) {
    if (inner.ambient_rank() != outer.ambient_rank())
        throw std::invalid_argument("ambient rank mismatch");
    std::vector<std::vector<Int>> coord_rows;
    for (const auto& row : inner.basis()) {
        auto coords = outer.coordinates(row);
        if (!coords) throw std::invalid_argument("inner lattice is not contained in outer");
        coord_rows.push_back(std::move(*coords));
    }
    if (inner.rank() < outer.rank()) return std::nullopt;
    return abs_int(determinant(IntMatrix::from_rows(coord_rows)));
}

Sublattice orbit_span(const std::vector<Int>& seed, const std::vector<IntMatrix>& gens,
                      int pass_limit) {
    int dim = static_cast<int>(seed.size());
    if (leading(seed) < 0) throw std::invalid_argument("orbit seed must be nonzero");
    std::vector<IntMatrix> actions;
    for (const auto& g : gens) {
        if (g.rows() != dim || g.cols() != dim)
            throw std::invalid_argument("generator dimension mismatch");
        Int det = determinant(g);
        if (det != 1 && det != -1)
            throw std::invalid_argument("orbit generators must be unimodular");
        actions.push_back(g);
        actions.push_back(unimodular_inverse(g));
    }
    Sublattice lattice(dim);
    lattice.insert(seed);
    for (int pass = 0; pass < pass_limit; ++pass) {
        bool changed = false;
        auto snapshot = lattice.basis();
        for (const auto& b : snapshot)
            for (const auto& m : actions)
                if (lattice.insert(m.apply(b))) changed = true;
        if (!changed) return lattice;
    }
    throw SaturationLimitError("orbit saturation did not close within " +
                               std::to_string(pass_limit) + " passes");
}

int congruence_depth(const IntMatrix& m, const Int& p, int cap) {
    if (m.rows() != m.cols()) throw std::invalid_argument("congruence depth needs a square matrix");
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
    if (cap < 0) throw std::invalid_argument("negative cap");
    int depth = cap;
    for (int i = 0; i < m.rows() && depth > 0; ++i) {
        for (int j = 0; j < m.cols() && depth > 0; ++j) {
            Int e = m.at(i, j) - (i == j ? Int(1) : Int(0));
            if (e == 0) continue;
            int val = 0;
            while (val < depth && e % p == 0) {
                e /= p;
                ++val;
            }
            depth = std::min(depth, val);
        }
    }
    return depth;
}

}  // namespace homrep::intlattice
