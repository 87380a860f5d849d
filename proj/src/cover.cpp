#include "homrep/cover.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

namespace homrep::cover {

using freegroup::Letter;
using freegroup::Word;
using intlattice::IntMatrix;

QuotientSpec::QuotientSpec(int rank, int degree, std::vector<std::vector<int>> perms)
    : rank_(rank), degree_(degree), perms_(std::move(perms)) {
    validate();
    inverse_perms_.assign(perms_.size(), std::vector<int>(static_cast<std::size_t>(degree_)));
    for (std::size_t i = 0; i < perms_.size(); ++i)
        for (int v = 0; v < degree_; ++v)
            inverse_perms_[i][static_cast<std::size_t>(perms_[i][static_cast<std::size_t>(v)])] = v;
}

QuotientSpec QuotientSpec::abelian_mod(int rank, int q) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    if (q < 1) throw std::invalid_argument("modulus must be positive");
    long long m = 1;
    for (int i = 0; i < rank; ++i) {
        m *= q;
        if (m > 1'000'000) throw std::invalid_argument("quotient degree too large");
    }
    std::vector<std::vector<int>> perms(static_cast<std::size_t>(rank),
                                        std::vector<int>(static_cast<std::size_t>(m)));
    // vertex = base-q digits, digit i = coordinate of generator i+1
    long long stride = 1;
    for (int i = 0; i < rank; ++i) {
        for (long long v = 0; v < m; ++v) {
            long long digit = (v / stride) % q;
            long long next = v + stride * (digit + 1 == q ? 1 - q : 1);
            perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] =
                static_cast<int>(next);
        }
        stride *= q;
    }
    return QuotientSpec(rank, static_cast<int>(m), std::move(perms));
}

void QuotientSpec::validate() const {
    if (rank_ < 1) throw std::invalid_argument("rank must be positive");
    if (degree_ < 1) throw std::invalid_argument("degree must be positive");
    if (static_cast<int>(perms_.size()) != rank_)
        throw std::invalid_argument("need one permutation per generator");
    for (const auto& p : perms_) {
        if (static_cast<int>(p.size()) != degree_)
            throw std::invalid_argument("permutation length must equal the degree");
        std::vector<bool> hit(static_cast<std::size_t>(degree_), false);
        for (int img : p) {
            if (img < 0 || img >= degree_) throw std::invalid_argument("permutation image out of range");
            if (hit[static_cast<std::size_t>(img)])
                throw std::invalid_argument("permutation is not a bijection");
            hit[static_cast<std::size_t>(img)] = true;
        }
    }
    // transitivity: every vertex reachable from 0
    std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
    std::deque<int> todo{0};
    seen[0] = true;
    int count = 1;
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop_front();
        for (const auto& p : perms_) {
            int u = p[static_cast<std::size_t>(v)];
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = true;
                ++count;
                todo.push_back(u);
            }
        }
    }
    if (count != degree_) throw std::invalid_argument("action is not transitive");
    // freeness: the permutation group must have order exactly `degree`;
    // enumerate with early abort, so bad input cannot explode
    std::set<std::vector<int>> group;
    std::deque<std::vector<int>> frontier;
    std::vector<int> id(static_cast<std::size_t>(degree_));
    for (int v = 0; v < degree_; ++v) id[static_cast<std::size_t>(v)] = v;
    group.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<int> g = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& p : perms_) {
            std::vector<int> h(static_cast<std::size_t>(degree_));
            for (int v = 0; v < degree_; ++v)
                h[static_cast<std::size_t>(v)] =
                    p[static_cast<std::size_t>(g[static_cast<std::size_t>(v)])];
            if (group.insert(h).second) {
                if (static_cast<int>(group.size()) > degree_)
                    throw std::invalid_argument(
                        "action is not regular: permutation group larger than the degree");
                frontier.push_back(std::move(h));
            }
        }
    }
    if (static_cast<int>(group.size()) != degree_)
        throw std::invalid_argument("action is not regular");
}

int QuotientSpec::act(int vertex, Letter l) const {
    if (vertex < 0 || vertex >= degree_) throw std::out_of_range("vertex");
    int idx = std::abs(l);
    if (idx < 1 || idx > rank_) throw std::out_of_range("generator index");
    const auto& p = l > 0 ? perms_[static_cast<std::size_t>(idx) - 1]
                          : inverse_perms_[static_cast<std::size_t>(idx) - 1];
    return p[static_cast<std::size_t>(vertex)];
}

int QuotientSpec::act_word(int vertex, const Word& w) const {
    int v = vertex;
    for (Letter l : w.letters()) v = act(v, l);
    return v;
}

CoverGraph::CoverGraph(QuotientSpec spec) : spec_(std::move(spec)) {
    int m = spec_.degree();
    int n = spec_.rank();
    h1_rank_ = m * (n - 1) + 1;
    vertex_words_.assign(static_cast<std::size_t>(m), Word());
    std::vector<bool> visited(static_cast<std::size_t>(m), false);
    std::vector<bool> tree(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), false);
    std::deque<int> todo{0};
    visited[0] = true;
    // BFS; ties broken by generator index, positive direction first, so the
    // basis is reproducible
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop_front();
        for (int i = 1; i <= n; ++i) {
            int u = spec_.act(v, i);
            if (!visited[static_cast<std::size_t>(u)]) {
                visited[static_cast<std::size_t>(u)] = true;
                tree[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + i - 1] = true;
                vertex_words_[static_cast<std::size_t>(u)] =
                    freegroup::multiply(vertex_words_[static_cast<std::size_t>(v)], Word{i});
                todo.push_back(u);
            }
            int t = spec_.act(v, -i);  // edge (t, i) entering v
            if (!visited[static_cast<std::size_t>(t)]) {
                visited[static_cast<std::size_t>(t)] = true;
                tree[static_cast<std::size_t>(t) * static_cast<std::size_t>(n) + i - 1] = true;
                vertex_words_[static_cast<std::size_t>(t)] =
                    freegroup::multiply(vertex_words_[static_cast<std::size_t>(v)], Word{-i});
                todo.push_back(t);
            }
        }
    }
    nontree_index_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0);
    int next = 1;
    for (int v = 0; v < m; ++v)
        for (int i = 1; i <= n; ++i)
            if (!tree[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + i - 1]) {
                nontree_index_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + i - 1] =
                    next++;
                nontree_edges_.emplace_back(v, i);
            }
    if (next - 1 != h1_rank_)
        throw std::logic_error("non-tree edge count disagrees with m(n-1)+1");
}

bool CoverGraph::is_tree_edge(int vertex, int gen) const {
    return nontree_index(vertex, gen) == 0;
}

int CoverGraph::nontree_index(int vertex, int gen) const {
    if (vertex < 0 || vertex >= degree() || gen < 1 || gen > rank())
        throw std::out_of_range("edge");
    return nontree_index_[static_cast<std::size_t>(vertex) * static_cast<std::size_t>(rank()) +
                          static_cast<std::size_t>(gen) - 1];
}

const Word& CoverGraph::vertex_word(int v) const {
    if (v < 0 || v >= degree()) throw std::out_of_range("vertex");
    return vertex_words_[static_cast<std::size_t>(v)];
}

bool CoverGraph::member(const Word& w) const { return spec_.act_word(0, w) == 0; }

std::vector<Int> CoverGraph::h1_class(const Word& w, int start) const {
    std::vector<Int> coords(static_cast<std::size_t>(h1_rank_), Int(0));
    int v = start;
    for (Letter l : w.letters()) {
        if (l > 0) {
            int e = nontree_index(v, l);
            if (e > 0) coords[static_cast<std::size_t>(e) - 1] += 1;
            v = spec_.act(v, l);
        } else {
            int u = spec_.act(v, l);  // traverse edge (u, -l) backwards
            int e = nontree_index(u, -l);
            if (e > 0) coords[static_cast<std::size_t>(e) - 1] -= 1;
            v = u;
        }
    }
    if (v != start)
        throw std::domain_error("word does not close up in the cover (not a subgroup element)");
    return coords;
}

Word CoverGraph::basis_loop_word(int e) const {
    if (e < 1 || e > h1_rank_) throw std::out_of_range("non-tree edge index");
    auto [v, i] = nontree_edges_[static_cast<std::size_t>(e) - 1];
    int head = spec_.act(v, i);
    return freegroup::multiply(
        freegroup::multiply(vertex_word(v), Word{i}),
        freegroup::invert(vertex_word(head)));
}

IntMatrix CoverGraph::rho(const freegroup::Automorphism& f) const {
    if (f.rank() != rank()) throw std::invalid_argument("automorphism rank mismatch");
    IntMatrix out(h1_rank_, h1_rank_);
    for (int e = 1; e <= h1_rank_; ++e) {
        Word loop = basis_loop_word(e);
        Word image = f.apply(loop);
        if (!member(image))
            throw InvarianceError("automorphism does not preserve the cover subgroup "
                                  "(image of basis loop " +
                                  std::to_string(e) + " leaves it)");
        std::vector<Int> cls = h1_class(image);
        for (int r = 0; r < h1_rank_; ++r) out.at(r, e - 1) = cls[static_cast<std::size_t>(r)];
    }
    Int det = intlattice::determinant(out);
    if (det != 1 && det != -1)
        throw std::logic_error("cover representation matrix is not unimodular");
    return out;
}

IntMatrix CoverGraph::deck_matrix(int g) const {
    if (g < 0 || g >= degree()) throw std::out_of_range("deck element");
    IntMatrix out(h1_rank_, h1_rank_);
    for (int e = 1; e <= h1_rank_; ++e) {
        // left translation by g moves the basis loop to the same word traced
        // from vertex g
        std::vector<Int> cls = h1_class(basis_loop_word(e), g);
        for (int r = 0; r < h1_rank_; ++r) out.at(r, e - 1) = cls[static_cast<std::size_t>(r)];
    }
    return out;
}

std::vector<IntMatrix> CoverGraph::deck_matrices() const {
    std::vector<IntMatrix> out;
    out.reserve(static_cast<std::size_t>(degree()));
    for (int g = 0; g < degree(); ++g) out.push_back(deck_matrix(g));
    return out;
}

bool CoverGraph::normalizes_deck(const IntMatrix& m, int degree_bound) const {
    if (degree() > degree_bound)
        throw std::invalid_argument("deck group too large to enumerate");
    std::vector<IntMatrix> deck = deck_matrices();
    IntMatrix inv = intlattice::unimodular_inverse(m);
    auto in_deck = [&deck](const IntMatrix& x) {
        return std::any_of(deck.begin(), deck.end(), [&x](const IntMatrix& d) { return d == x; });
    };
    for (const auto& d : deck) {
        if (!in_deck(m.multiply(d).multiply(inv))) return false;
        if (!in_deck(inv.multiply(d).multiply(m))) return false;
    }
    return true;
}

int CoverGraph::mult(int u, int v) const {
    return spec_.act_word(u, vertex_word(v));
}

int CoverGraph::vertex_order(int g) const {
    if (g < 0 || g >= degree()) throw std::out_of_range("deck element");
    int x = g;
    int order = 1;
    while (x != 0) {
        x = mult(x, g);
        ++order;
        if (order > degree()) throw std::logic_error("order exceeded the group size");
    }
    return order;
}

std::optional<CoverGraph::LiftOffset> CoverGraph::lift_offset(const Word& w, int g) const {
    int s = vertex_order(g);
    int end = spec_.act_word(0, w);
    int x = 0;
    for (int j = 0; j < s; ++j) {
        if (x == end) return LiftOffset{s, j};
        x = mult(x, g);
    }
    return std::nullopt;
}

}  // namespace homrep::cover
