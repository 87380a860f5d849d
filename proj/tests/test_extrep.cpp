#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "doctest.h"
#include "homrep/extrep.hpp"
#include "homrep/intlattice.hpp"
#include "homrep/nilpotent.hpp"
#include "oracles.hpp"

using namespace homrep;
using namespace homrep::extrep;
using intlattice::IntMatrix;
namespace fg = homrep::freegroup;

namespace {

// exponent-sum matrix of an automorphism: column j is the image of a_j in Z^n
IntMatrix abelianized(const fg::Automorphism& g) {
    int n = g.rank();
    IntMatrix m(n, n);
    for (int j = 1; j <= n; ++j)
        for (int l : g.forward().image(j).letters())
            m.at(std::abs(l) - 1, j - 1) += l > 0 ? 1 : -1;
    return m;
}

IntMatrix random_sl(std::mt19937& gen, int n, int steps) {
    auto gens = sl_generators(n);
    auto m = IntMatrix::identity(n);
    for (int s = 0; s < steps; ++s) {
        const auto& g = gens[gen() % gens.size()];
        m = m.multiply(gen() % 2 ? g : intlattice::unimodular_inverse(g));
    }
    return m;
}

// order of the group generated by gens reduced mod p (entries packed base p)
std::size_t modp_closure_order(const std::vector<IntMatrix>& gens, int p) {
    int n = gens.at(0).rows();
    auto reduce_key = [&](const IntMatrix& m) {
        unsigned long long key = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int e = m.at(i, j) % p;
                if (e < 0) e += p;
                key = key * static_cast<unsigned long long>(p) + e.convert_to<unsigned long long>();
            }
        return key;
    };
    auto mul_mod = [&](const IntMatrix& a, const IntMatrix& b) {
        IntMatrix c = a.multiply(b);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                c.at(i, j) %= p;
                if (c.at(i, j) < 0) c.at(i, j) += p;
            }
        return c;
    };
    std::unordered_set<unsigned long long> seen;
    std::vector<IntMatrix> frontier{IntMatrix::identity(n)};
    seen.insert(reduce_key(frontier[0]));
    while (!frontier.empty()) {
        std::vector<IntMatrix> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                IntMatrix y = mul_mod(x, g);
                if (seen.insert(reduce_key(y)).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace

TEST_SUITE("extrep") {

TEST_CASE("exterior basis") {
    ExtBasis b2(4, 2);
    CHECK(b2.size() == 6);
    CHECK(b2.tuples().front() == std::vector<int>{1, 2});
    CHECK(b2.tuples().back() == std::vector<int>{3, 4});
    CHECK(b2.index_of({1, 3}) == 1);

    ExtBasis b3(6, 3);
    CHECK(b3.size() == 20);
    CHECK(b3.index_of({1, 2, 3}) == 0);

    auto swapped = b2.index_with_sign({3, 1});
    REQUIRE(swapped.has_value());
    CHECK(swapped->first == 1);
    CHECK(swapped->second == -1);
    CHECK(!b2.index_with_sign({2, 2}).has_value());
    CHECK_THROWS_AS(b2.index_with_sign({1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(b2.index_with_sign({0, 2}), std::out_of_range);
    CHECK_THROWS_AS(b2.index_of({2, 1}), std::out_of_range);  // wants sorted input
    CHECK_THROWS_AS(ExtBasis(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(ExtBasis(2, 3), std::invalid_argument);
}

TEST_CASE("exterior vectors") {
    ExtVector v(4, 2);
    v.add_term({1, 2}, 3);
    v.add_term({2, 1}, 1);  // antisymmetric accumulation
    CHECK(v.coeff({1, 2}) == 2);
    CHECK(v.coeff({2, 1}) == -2);
    v.add_term({3, 3}, 7);  // wedges to zero
    CHECK(v.coeff({1, 3}) == 0);
    CHECK(!v.is_zero());
    CHECK(v.scale(-2).coeff({1, 2}) == -4);
    CHECK(v.add(v.scale(-1)).is_zero());
    CHECK(v.str() == "2·x1^x2");

    ExtVector w(3, 2);
    CHECK_THROWS_AS(v.add(w), std::invalid_argument);
}

TEST_CASE("wedge action on fixed matrices") {
    CHECK(wedge_action(IntMatrix::identity(4), 2).is_identity());
    CHECK(wedge_action(IntMatrix::identity(4), 3).is_identity());

    IntMatrix diag(3, 3);
    diag.at(0, 0) = 2;
    diag.at(1, 1) = 3;
    diag.at(2, 2) = 5;
    auto top = wedge_action(diag, 3);
    REQUIRE(top.rows() == 1);
    CHECK(top.at(0, 0) == 30);
    auto mid = wedge_action(diag, 2);
    CHECK(mid.at(0, 0) == 6);   // (1,2) block
    CHECK(mid.at(1, 1) == 10);  // (1,3)
    CHECK(mid.at(2, 2) == 15);  // (2,3)

    // m: e1 -> e1 + e2 pushes e1^e3 to e1^e3 + e2^e3
    auto m = IntMatrix::identity(3);
    m.at(1, 0) = 1;
    auto w2 = wedge_action(m, 2);
    ExtBasis basis(3, 2);
    int col = basis.index_of({1, 3});
    CHECK(w2.at(basis.index_of({1, 3}), col) == 1);
    CHECK(w2.at(basis.index_of({2, 3}), col) == 1);
    CHECK(w2.at(basis.index_of({1, 2}), col) == 0);

    CHECK_THROWS_AS(wedge_action(IntMatrix(2, 3), 2), std::invalid_argument);
}

TEST_CASE("wedge and hom actions are functorial, randomized") {
    std::mt19937 gen(307);
    for (int t = 0; t < 20; ++t) {
        auto a = random_sl(gen, 4, 4);
        auto b = random_sl(gen, 4, 4);
        auto ab = a.multiply(b);
        CHECK(wedge_action(ab, 2) == wedge_action(a, 2).multiply(wedge_action(b, 2)));
        CHECK(wedge_action(ab, 3) == wedge_action(a, 3).multiply(wedge_action(b, 3)));
        CHECK(hom_action(ab) == hom_action(a).multiply(hom_action(b)));
    }
    CHECK(hom_action(IntMatrix::identity(3)).is_identity());
    CHECK(hom_action(IntMatrix::identity(3)).rows() == 9);
}

TEST_CASE("hom action intertwines the johnson data of conjugation") {
    // tau(g f g^-1) = (action of the homology image of g) tau(f)
    std::mt19937 gen(311);
    auto ia = fg::ia_generators(3);
    for (int t = 0; t < 20; ++t) {
        auto g = oracles::random_nielsen_product(gen, 3, 4);
        const auto& f = ia[gen() % ia.size()];
        auto conj = fg::compose(fg::compose(g, f), fg::inverse(g));
        auto lhs = nilpotent::tau(conj).coords();
        auto rhs = hom_action(abelianized(g)).apply(nilpotent::tau(f).coords());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("hom contraction") {
    auto delta = hom_contraction_matrix(3);
    REQUIRE(delta.rows() == 3);
    REQUIRE(delta.cols() == 9);
    // x1* (x1 ^ x2) contracts to x2
    ExtBasis pairs(3, 2);
    std::vector<Int> unit(9, Int(0));
    unit[static_cast<std::size_t>(pairs.index_of({1, 2}))] = 1;  // block i=1
    auto img = delta.apply(unit);
    CHECK(img == std::vector<Int>{Int(0), Int(1), Int(0)});
    // x2* (x1 ^ x2) contracts to -x1
    std::vector<Int> unit2(9, Int(0));
    unit2[static_cast<std::size_t>(3 + pairs.index_of({1, 2}))] = 1;
    CHECK(delta.apply(unit2) == std::vector<Int>{Int(-1), Int(0), Int(0)});

    CHECK(intlattice::kernel_basis(delta).size() == 6);

    // equivariance: delta . hom_action(M) == M . delta
    std::mt19937 gen(313);
    for (int t = 0; t < 15; ++t) {
        auto m = random_sl(gen, 3, 5);
        CHECK(delta.multiply(hom_action(m)) == m.multiply(delta));
    }

    // the commutator transvection lands in the kernel
    auto t = nilpotent::tau(fg::commutator_transvection(3, 2));
    auto contracted = delta.apply(t.coords());
    CHECK(contracted == std::vector<Int>(3, Int(0)));
    // a bare conjugation move does not
    auto t2 = nilpotent::tau(fg::ia_conjugation(3, 1, 2));
    CHECK(delta.apply(t2.coords()) != std::vector<Int>(3, Int(0)));
}

TEST_CASE("orbit of the commutator transvection class under the full hom action") {
    auto seed = nilpotent::tau(fg::commutator_transvection(3, 2)).coords();
    std::vector<IntMatrix> gens;
    for (const auto& g : sl_generators(3)) gens.push_back(hom_action(g));
    auto orbit = intlattice::orbit_span(seed, gens);

    CHECK(orbit.rank() == 6);
    CHECK(!intlattice::lattice_index(orbit).has_value());  // rank 6 inside Z^9
    auto divisors = intlattice::snf(IntMatrix::from_rows(orbit.basis())).diagonal();
    CHECK(divisors == std::vector<Int>(6, Int(4)));

    // the whole orbit sits inside the contraction kernel
    auto delta = hom_contraction_matrix(3);
    intlattice::Sublattice kernel(9);
    for (auto& v : intlattice::kernel_basis(delta)) kernel.insert(std::move(v));
    CHECK(kernel.rank() == 6);
    for (const auto& b : orbit.basis()) CHECK(kernel.contains(b));
    CHECK(intlattice::relative_index(orbit, kernel) == Int(4096));
}

TEST_CASE("symplectic form") {
    SymplecticForm form(3);
    CHECK(form.dim() == 6);
    CHECK(form.pairing().at(0, 3) == 1);
    CHECK(form.pairing().at(3, 0) == -1);
    CHECK(form.pair(form.e(1), form.f(1)) == 1);
    CHECK(form.pair(form.f(1), form.e(1)) == -1);
    CHECK(form.pair(form.e(1), form.e(2)) == 0);
    CHECK(form.pair(form.e(2), form.f(3)) == 0);
    CHECK(form.label(1) == "e1");
    CHECK(form.label(4) == "f1");
    CHECK(form.label(6) == "f3");
    CHECK_THROWS_AS(form.label(7), std::out_of_range);
    CHECK_THROWS_AS(form.e(4), std::out_of_range);
    CHECK_THROWS_AS(SymplecticForm(0), std::invalid_argument);

    // skew and nondegenerate
    CHECK(form.pairing().transpose().add(form.pairing()).is_zero());
    CHECK(abs_int(intlattice::determinant(form.pairing())) == 1);
}

TEST_CASE("triple contraction") {
    SymplecticForm form(3);
    ExtVector v(6, 3);
    v.add_term({1, 4, 2}, 1);  // e1 ^ f1 ^ e2
    CHECK(contraction(v, form) == form.e(2));

    ExtVector zero(6, 3);
    zero.add_term({1, 2, 3}, 1);  // e1 ^ e2 ^ e3 pairs to zero everywhere
    CHECK(contraction(zero, form) == std::vector<Int>(6, Int(0)));

    CHECK_THROWS_AS(contraction(ExtVector(6, 2), form), std::invalid_argument);
    CHECK_THROWS_AS(contraction(ExtVector(4, 3), form), std::invalid_argument);

    // matrix form agrees with the direct evaluation
    std::mt19937 gen(317);
    auto cm = contraction_matrix(form);
    REQUIRE(cm.rows() == 6);
    REQUIRE(cm.cols() == 20);
    for (int t = 0; t < 20; ++t) {
        ExtVector r(6, 3);
        for (int s = 0; s < 5; ++s)
            r.add_term({1 + static_cast<int>(gen() % 6), 1 + static_cast<int>(gen() % 6),
                        1 + static_cast<int>(gen() % 6)},
                       static_cast<int>(gen() % 7) - 3);
        CHECK(cm.apply(r.coords()) == contraction(r, form));
    }
}

TEST_CASE("embedding H into the third exterior power") {
    for (int g : {2, 3}) {
        SymplecticForm form(g);
        std::mt19937 gen(331 + g);
        for (int t = 0; t < 10; ++t) {
            std::vector<Int> x(static_cast<std::size_t>(form.dim()));
            for (auto& c : x) c = static_cast<int>(gen() % 9) - 4;
            // contraction recovers (g-1) x
            auto back = contraction(embed(x, form), form);
            for (std::size_t i = 0; i < x.size(); ++i)
                CHECK(back[i] == embed_contraction_constant(g) * x[i]);
            // matrix form of the embedding agrees
            CHECK(embed_matrix(form).apply(x) == embed(x, form).coords());
        }
    }

    SymplecticForm form2(2);
    CHECK(embed(form2.f(2), form2).str([&](int i) { return form2.label(i); }) == "e1^f1^f2");
    CHECK_THROWS_AS(embed({Int(1)}, form2), std::invalid_argument);

    // the embedding is primitive: all elementary divisors are 1
    auto divisors = intlattice::snf(embed_matrix(SymplecticForm(3))).diagonal();
    CHECK(divisors == std::vector<Int>(6, Int(1)));
}

TEST_CASE("symplectic transvections preserve the form") {
    SymplecticForm form(1);
    auto t = symplectic_transvection(form, form.e(1));
    CHECK(t == IntMatrix::from_rows({{Int(1), Int(-1)}, {Int(0), Int(1)}}));

    SymplecticForm big(3);
    std::mt19937 gen(337);
    for (int tr = 0; tr < 10; ++tr) {
        std::vector<Int> v(6);
        for (auto& c : v) c = static_cast<int>(gen() % 5) - 2;
        auto m = symplectic_transvection(big, v);
        CHECK(m.transpose().multiply(big.pairing()).multiply(m) == big.pairing());
        CHECK(intlattice::determinant(m) == 1);
    }
    CHECK_THROWS_AS(symplectic_transvection(big, {Int(1)}), std::invalid_argument);
}

TEST_CASE("generator families") {
    CHECK(sl_generators(2).size() == 2);
    CHECK(sl_generators(3).size() == 6);
    for (const auto& g : sl_generators(3)) CHECK(intlattice::determinant(g) == 1);
    CHECK_THROWS_AS(sl_generators(1), std::invalid_argument);

    CHECK(sp_generators(2).size() == 5);
    CHECK(sp_generators(3).size() == 8);
    CHECK_THROWS_AS(sp_generators(1), std::invalid_argument);
    for (int g : {2, 3}) {
        SymplecticForm form(g);
        for (const auto& m : sp_generators(g)) {
            CHECK(m.transpose().multiply(form.pairing()).multiply(m) == form.pairing());
            CHECK(intlattice::determinant(m) == 1);
        }
    }
}

TEST_CASE("sp generators cover the symplectic groups over small fields") {
    // |Sp(4,2)| = 720, |Sp(4,3)| = 51840
    CHECK(modp_closure_order(sp_generators(2), 2) == 720);
    CHECK(modp_closure_order(sp_generators(2), 3) == 51840);
}

TEST_CASE("contraction is equivariant for the symplectic action") {
    for (int g : {2, 3}) {
        SymplecticForm form(g);
        auto cm = contraction_matrix(form);
        for (const auto& m : sp_generators(g))
            CHECK(cm.multiply(wedge_action(m, 3)) == m.multiply(cm));
    }
}

TEST_CASE("orbit of an embedded vector stays in the embedded copy") {
    SymplecticForm form(3);
    std::vector<IntMatrix> gens;
    for (const auto& m : sp_generators(3)) gens.push_back(wedge_action(m, 3));
    auto seed = embed(form.e(1), form).coords();
    auto orbit = intlattice::orbit_span(seed, gens);
    CHECK(orbit.rank() == 6);
    auto divisors = intlattice::snf(IntMatrix::from_rows(orbit.basis())).diagonal();
    CHECK(divisors == std::vector<Int>(6, Int(1)));  // saturated

    intlattice::Sublattice image(20);
    auto em = embed_matrix(form);
    for (int c = 0; c < 6; ++c) {
        std::vector<Int> col(20);
        for (int r = 0; r < 20; ++r) col[static_cast<std::size_t>(r)] = em.at(r, c);
        image.insert(std::move(col));
    }
    for (const auto& b : orbit.basis()) CHECK(image.contains(b));
    CHECK(intlattice::relative_index(orbit, image) == Int(1));
}

}  // TEST_SUITE
