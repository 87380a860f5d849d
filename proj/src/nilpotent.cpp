#include "homrep/nilpotent.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

namespace homrep::nilpotent {

namespace {

void check_cap(int degree_cap) {
    if (degree_cap < 1 || degree_cap > kMaxDegreeCap)
        throw std::invalid_argument("degree cap must lie in 1.." + std::to_string(kMaxDegreeCap));
}

}  // namespace

TruncatedSeries::TruncatedSeries(int rank, int degree_cap)
    : rank_(rank), degree_cap_(degree_cap) {
    if (rank < 1) throw std::invalid_argument("series rank must be positive");
    check_cap(degree_cap);
}

TruncatedSeries TruncatedSeries::unit(int rank, int degree_cap) {
    TruncatedSeries s(rank, degree_cap);
    s.terms_[{}] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::generator(int rank, int degree_cap, int i) {
    if (i < 1 || i > rank) throw std::out_of_range("generator index");
    TruncatedSeries s = unit(rank, degree_cap);
    s.terms_[{i}] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::generator_inverse(int rank, int degree_cap, int i) {
    if (i < 1 || i > rank) throw std::out_of_range("generator index");
    TruncatedSeries s(rank, degree_cap);
    Monomial mono;
    int sign = 1;
    for (int d = 0; d <= degree_cap; ++d) {
        s.terms_[mono] = sign;
        mono.push_back(i);
        sign = -sign;
    }
    return s;
}

Int TruncatedSeries::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Int(0) : it->second;
}

std::optional<int> TruncatedSeries::min_nonconstant_degree() const {
    std::optional<int> best;
    for (const auto& [mono, coeff] : terms_) {
        if (mono.empty()) continue;
        int deg = static_cast<int>(mono.size());
        if (!best || deg < *best) best = deg;
    }
    return best;
}

void TruncatedSeries::set(const Monomial& mono, Int value) {
    if (value == 0)
        terms_.erase(mono);
    else
        terms_[mono] = std::move(value);
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& other) const {
    if (degree_cap_ != other.degree_cap_)
        throw std::invalid_argument("degree cap mismatch");
    TruncatedSeries out(std::max(rank_, other.rank_), degree_cap_);
    out.terms_ = terms_;
    for (const auto& [mono, coeff] : other.terms_) out.set(mono, out.coefficient(mono) + coeff);
    return out;
}

TruncatedSeries TruncatedSeries::subtract(const TruncatedSeries& other) const {
    if (degree_cap_ != other.degree_cap_)
        throw std::invalid_argument("degree cap mismatch");
    TruncatedSeries out(std::max(rank_, other.rank_), degree_cap_);
    out.terms_ = terms_;
    for (const auto& [mono, coeff] : other.terms_) out.set(mono, out.coefficient(mono) - coeff);
    return out;
}

TruncatedSeries TruncatedSeries::multiply(const TruncatedSeries& other) const {
    if (degree_cap_ != other.degree_cap_)
        throw std::invalid_argument("degree cap mismatch");
    TruncatedSeries out(std::max(rank_, other.rank_), degree_cap_);
    for (const auto& [am, ac] : terms_) {
        for (const auto& [bm, bc] : other.terms_) {
            if (am.size() + bm.size() > static_cast<std::size_t>(degree_cap_)) continue;
            Monomial mono = am;
            mono.insert(mono.end(), bm.begin(), bm.end());
            out.set(mono, out.coefficient(mono) + ac * bc);
        }
    }
    return out;
}

std::string TruncatedSeries::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, coeff] : terms_) {
        Int mag = abs_int(coeff);
        if (out.empty()) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        std::string monostr;
        for (int i : mono) monostr += "X" + std::to_string(i);
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == 1) {
            out += monostr;
        } else {
            out += mag.str() + "·" + monostr;
        }
    }
    return out;
}

TruncatedSeries expand(const freegroup::Word& w, int degree_cap) {
    check_cap(degree_cap);
    int rank = std::max(1, w.max_index());
    TruncatedSeries acc = TruncatedSeries::unit(rank, degree_cap);
    for (freegroup::Letter l : w.letters()) {
        TruncatedSeries factor =
            l > 0 ? TruncatedSeries::generator(rank, degree_cap, l)
                  : TruncatedSeries::generator_inverse(rank, degree_cap, -l);
        acc = acc.multiply(factor);
    }
    return acc;
}

std::string Depth::str() const {
    return at_least_cap ? ">=" + std::to_string(value) : std::to_string(value);
}

Depth lcs_depth(const freegroup::Word& w, int degree_cap) {
    if (degree_cap < 2) throw std::invalid_argument("depth measurement needs degree cap >= 2");
    auto deg = expand(w, degree_cap).min_nonconstant_degree();
    if (!deg) return Depth::at_least(degree_cap);
    return Depth::exact(*deg - 1);
}

Depth johnson_depth(const freegroup::Automorphism& f, int degree_cap) {
    if (degree_cap < 2) throw std::invalid_argument("depth measurement needs degree cap >= 2");
    // Finite depths are at most cap-1 and the sentinel stores value == cap,
    // so comparing values alone picks the minimum.
    Depth best = Depth::at_least(degree_cap);
    for (int i = 1; i <= f.rank(); ++i) {
        freegroup::Word moved =
            freegroup::multiply(freegroup::Word{-i}, f.forward().image(i));
        Depth d = lcs_depth(moved, degree_cap);
        if (d.value < best.value) best = d;
    }
    return best;
}

HomVector::HomVector(int rank) : rank_(rank) {
    if (rank < 2) throw std::invalid_argument("hom vector rank must be >= 2");
    coords_.assign(dimension(rank), Int(0));
}

int HomVector::pair_index(int rank, int j, int k) {
    if (j < 1 || k <= j || k > rank) throw std::out_of_range("wedge pair indices");
    // lexicographic position of (j,k) among pairs j<k
    int before = (j - 1) * rank - (j - 1) * j / 2;
    return before + (k - j - 1);
}

Int HomVector::get(int i, int j, int k) const {
    int pairs = rank_ * (rank_ - 1) / 2;
    return coords_[static_cast<std::size_t>((i - 1) * pairs + pair_index(rank_, j, k))];
}

void HomVector::set(int i, int j, int k, Int value) {
    int pairs = rank_ * (rank_ - 1) / 2;
    coords_[static_cast<std::size_t>((i - 1) * pairs + pair_index(rank_, j, k))] =
        std::move(value);
}

bool HomVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

std::string HomVector::str() const {
    std::string out;
    for (int i = 1; i <= rank_; ++i) {
        for (int j = 1; j <= rank_; ++j) {
            for (int k = j + 1; k <= rank_; ++k) {
                Int c = get(i, j, k);
                if (c == 0) continue;
                if (!out.empty()) out += c < 0 ? " - " : " + ";
                else if (c < 0) out += "-";
                Int mag = abs_int(c);
                if (mag != 1) out += mag.str() + "·";
                out += "(" + std::to_string(i) + ", " + std::to_string(j) + "^" +
                       std::to_string(k) + ")";
            }
        }
    }
    return out.empty() ? "0" : out;
}

HomVector tau(const freegroup::Automorphism& f) {
    HomVector out(f.rank());
    for (int i = 1; i <= f.rank(); ++i) {
        freegroup::Word moved =
            freegroup::multiply(freegroup::Word{-i}, f.forward().image(i));
        TruncatedSeries s = expand(moved, 2);
        for (int j = 1; j <= f.rank(); ++j)
            if (s.coefficient({j}) != 0)
                throw std::domain_error(
                    "tau is defined only for homology-trivial automorphisms");
        for (int j = 1; j <= f.rank(); ++j) {
            for (int k = j + 1; k <= f.rank(); ++k) {
                Int c = s.coefficient({j, k});
                if (s.coefficient({k, j}) != -c)
                    throw std::logic_error("degree-2 part of a commutator-subgroup word "
                                           "must be antisymmetric");
                out.set(i, j, k, c);
            }
        }
        // Diagonal monomials XjXj must vanish by the same antisymmetry.
        for (int j = 1; j <= f.rank(); ++j)
            if (s.coefficient({j, j}) != 0)
                throw std::logic_error("degree-2 part of a commutator-subgroup word "
                                       "must be antisymmetric");
    }
    return out;
}

UnitriangularElement::UnitriangularElement(int size, int mod) : size_(size), mod_(mod) {
    if (size < 2) throw std::invalid_argument("unitriangular size must be >= 2");
    if (mod < 2) throw std::invalid_argument("modulus must be >= 2");
    entries_.assign(static_cast<std::size_t>(size) * size, 0);
    for (int i = 1; i <= size; ++i) entries_[static_cast<std::size_t>((i - 1) * size + i - 1)] = 1;
}

UnitriangularElement UnitriangularElement::elementary(int size, int mod, int i, int j,
                                                      int value) {
    UnitriangularElement out(size, mod);
    out.set_entry(i, j, value);
    return out;
}

int UnitriangularElement::entry(int i, int j) const {
    if (i < 1 || j < 1 || i > size_ || j > size_) throw std::out_of_range("matrix entry");
    return entries_[static_cast<std::size_t>((i - 1) * size_ + j - 1)];
}

void UnitriangularElement::set_entry(int i, int j, int value) {
    if (i < 1 || j < 1 || i > size_ || j > size_) throw std::out_of_range("matrix entry");
    if (j <= i) throw std::invalid_argument("only above-diagonal entries are settable");
    value %= mod_;
    if (value < 0) value += mod_;
    entries_[static_cast<std::size_t>((i - 1) * size_ + j - 1)] = value;
}

UnitriangularElement UnitriangularElement::multiply(const UnitriangularElement& other) const {
    if (size_ != other.size_ || mod_ != other.mod_)
        throw std::invalid_argument("unitriangular shape mismatch");
    UnitriangularElement out(size_, mod_);
    for (int i = 1; i <= size_; ++i) {
        for (int j = i + 1; j <= size_; ++j) {
            long long acc = 0;
            for (int t = i; t <= j; ++t)
                acc += static_cast<long long>(entry(i, t)) * other.entry(t, j);
            out.set_entry(i, j, static_cast<int>(acc % mod_));
        }
    }
    return out;
}

unsigned long long UnitriangularElement::key() const {
    unsigned long long k = 0;
    for (int i = 1; i <= size_; ++i)
        for (int j = i + 1; j <= size_; ++j)
            k = k * static_cast<unsigned long long>(mod_) +
                static_cast<unsigned long long>(entry(i, j));
    return k;
}

std::vector<UnitriangularElement> unitriangular_group(int size, int mod) {
    int coords = size * (size - 1) / 2;
    unsigned long long order = 1;
    for (int c = 0; c < coords; ++c) {
        order *= static_cast<unsigned long long>(mod);
        if (order > (1ull << 20)) throw std::invalid_argument("unitriangular group too large");
    }
    std::vector<UnitriangularElement> out;
    out.reserve(order);
    for (unsigned long long code = 0; code < order; ++code) {
        UnitriangularElement m(size, mod);
        // decode base-mod digits in the traversal order of key()
        unsigned long long rest = code;
        std::vector<int> digits(static_cast<std::size_t>(coords), 0);
        for (int c = coords - 1; c >= 0; --c) {
            digits[static_cast<std::size_t>(c)] = static_cast<int>(rest % mod);
            rest /= mod;
        }
        int c = 0;
        for (int i = 1; i <= size; ++i)
            for (int j = i + 1; j <= size; ++j)
                m.set_entry(i, j, digits[static_cast<std::size_t>(c++)]);
        out.push_back(std::move(m));
    }
    return out;
}

bool abelianized_images_span(int size, int mod,
                             const std::vector<UnitriangularElement>& gens) {
    // Row-reduce the superdiagonal images over Z/mod (mod prime in our uses).
    std::vector<std::vector<int>> rows;
    for (const auto& g : gens) {
        if (g.size() != size || g.mod() != mod)
            throw std::invalid_argument("generator shape mismatch");
        std::vector<int> row(static_cast<std::size_t>(size) - 1);
        for (int i = 1; i < size; ++i) row[static_cast<std::size_t>(i) - 1] = g.entry(i, i + 1);
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < size - 1; ++col) {
        int pivot = -1;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (rows[r][static_cast<std::size_t>(col)] % mod != 0) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        // scale pivot row to 1 (mod is prime here)
        int p = rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        int inv = 0;
        for (int cand = 1; cand < mod; ++cand)
            if (cand * p % mod == 1) {
                inv = cand;
                break;
            }
        if (inv == 0) throw std::invalid_argument("modulus must be prime for span test");
        for (auto& v : rows[static_cast<std::size_t>(rank)]) v = v * inv % mod;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank)) continue;
            int factor = rows[r][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (std::size_t c2 = 0; c2 < rows[r].size(); ++c2)
                rows[r][c2] =
                    ((rows[r][c2] - factor * rows[static_cast<std::size_t>(rank)][c2]) % mod +
                     mod) %
                    mod;
        }
        ++rank;
    }
    return rank == size - 1;
}

bool frattini_index_check(int size, int mod,
                          const std::vector<UnitriangularElement>& gens) {
    for (const auto& g : gens)
        if (g.size() != size || g.mod() != mod)
            throw std::invalid_argument("generator shape mismatch");
    int coords = size * (size - 1) / 2;
    unsigned long long order = 1;
    for (int c = 0; c < coords; ++c) {
        order *= static_cast<unsigned long long>(mod);
        if (order > (1ull << 20)) throw std::invalid_argument("unitriangular group too large");
    }
    // Multiplicative closure from the identity; in a finite group this is the
    // generated subgroup even without explicit inverses.
    std::unordered_set<unsigned long long> seen;
    std::vector<UnitriangularElement> frontier;
    UnitriangularElement id(size, mod);
    seen.insert(id.key());
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<UnitriangularElement> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                UnitriangularElement y = x.multiply(g);
                if (seen.insert(y.key()).second) next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    return seen.size() == order;
}

}  // namespace homrep::nilpotent
