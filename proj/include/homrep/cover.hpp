#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homrep/bigint.hpp"
#include "homrep/freegroup.hpp"
#include "homrep/intlattice.hpp"

namespace homrep::cover {

// Finite regular quotient of the free group: one permutation of {0..m-1} per
// generator, forming the right-regular action of a group of order m on
// itself with 0 as the identity. Vertices double as group elements.
class QuotientSpec {
public:
    QuotientSpec(int rank, int degree, std::vector<std::vector<int>> perms);

    // (Z/q)^rank with generator i adding 1 to digit i; degree q^rank.
    static QuotientSpec abelian_mod(int rank, int q);

    int rank() const { return rank_; }
    int degree() const { return degree_; }
    const std::vector<std::vector<int>>& perms() const { return perms_; }

    int act(int vertex, freegroup::Letter l) const;
    int act_word(int vertex, const freegroup::Word& w) const;

private:
    void validate() const;

    int rank_;
    int degree_;
    std::vector<std::vector<int>> perms_;
    std::vector<std::vector<int>> inverse_perms_;
};

// Thrown by rho when an automorphism fails to map the cover subgroup into
// itself (the quotient is not characteristic, or not even invariant).
struct InvarianceError : std::runtime_error {
    explicit InvarianceError(const std::string& what) : std::runtime_error(what) {}
};

// Coset graph of the quotient: vertex v carries one outgoing edge (v, i) per
// generator with head v.sigma_i. A BFS spanning tree from vertex 0 (lowest
// generator first, positive direction first) indexes the m(n-1)+1 non-tree
// edges; those are the H1 basis.
class CoverGraph {
public:
    explicit CoverGraph(QuotientSpec spec);

    const QuotientSpec& quotient() const { return spec_; }
    int rank() const { return spec_.rank(); }
    int degree() const { return spec_.degree(); }
    int h1_rank() const { return h1_rank_; }

    bool is_tree_edge(int vertex, int gen) const;
    // 1..h1_rank for non-tree edges, 0 for tree edges
    int nontree_index(int vertex, int gen) const;

    // Reduced word spelling the tree path from vertex 0 to v.
    const freegroup::Word& vertex_word(int v) const;

    // w lies in the cover subgroup iff its permutation action is trivial;
    // for a regular action, fixing the basepoint is enough.
    bool member(const freegroup::Word& w) const;

    // Signed non-tree-edge traversal counts of the closed path spelling w
    // from `start`; throws std::domain_error when the path does not close.
    std::vector<Int> h1_class(const freegroup::Word& w, int start = 0) const;

    // Tree path to the tail, the edge e, tree path back from the head.
    freegroup::Word basis_loop_word(int e) const;

    // Column e is the class of the image of basis loop e. Verifies
    // invariance of the cover subgroup (InvarianceError otherwise) and that
    // the result is unimodular.
    intlattice::IntMatrix rho(const freegroup::Automorphism& f) const;

    // Action of the deck translation x -> g.x on H1: translate each basis
    // loop and read off its class starting at vertex g.
    intlattice::IntMatrix deck_matrix(int g) const;
    std::vector<intlattice::IntMatrix> deck_matrices() const;

    // Does conjugation by m (both directions) map the deck image into
    // itself? Enumerates all deck matrices; refuses degrees above the bound.
    bool normalizes_deck(const intlattice::IntMatrix& m, int degree_bound = 512) const;

    // Group multiplication through vertex labels: u*v via the tree word of v.
    int mult(int u, int v) const;
    // Multiplicative order of vertex g in the deck group.
    int vertex_order(int g) const;

    // Data for the cyclic lift criterion: s = order of the deck element g,
    // j = discrete log of w's endpoint in <g>; nullopt when the endpoint
    // leaves the cyclic subgroup.
    struct LiftOffset {
        int s;
        int j;
    };
    std::optional<LiftOffset> lift_offset(const freegroup::Word& w, int g) const;

private:
    QuotientSpec spec_;
    int h1_rank_;
    std::vector<freegroup::Word> vertex_words_;
    // edge (v, i) flattened to v*rank + (i-1)
    std::vector<int> nontree_index_;  // 1..r, or 0 for tree edges
    std::vector<std::pair<int, int>> nontree_edges_;  // index-1 -> (vertex, gen)
};

}  // namespace homrep::cover
