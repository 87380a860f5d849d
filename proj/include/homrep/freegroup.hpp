#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace homrep::freegroup {

// Signed generator index: +k is the k-th generator, -k its inverse. Zero is
// never a valid letter.
using Letter = int;

inline constexpr std::size_t kDefaultLengthGuard = 1'000'000;

// Freely reduced word. Every constructor reduces, so the no-adjacent-inverse
// invariant holds for every live instance.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> raw);
    explicit Word(const std::vector<Letter>& raw);

    // Whitespace-separated tokens `a<k>` (generator) / `A<k>` (inverse).
    static Word parse(const std::string& text, int rank);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    // Largest generator index appearing (0 for the empty word).
    int max_index() const;

    std::string str() const;

    bool operator==(const Word&) const = default;

private:
    struct ReducedTag {};
    Word(std::vector<Letter> letters, ReducedTag) : letters_(std::move(letters)) {}

    std::vector<Letter> letters_;

    friend Word reduce(const std::vector<Letter>& raw);
    friend class Endomorphism;
};

Word reduce(const std::vector<Letter>& raw);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, long long e);
// [u,v] = u v u^-1 v^-1.
Word commutator(const Word& u, const Word& v);

class Endomorphism {
public:
    Endomorphism(int rank, std::vector<Word> images);

    static Endomorphism identity(int rank);

    int rank() const { return rank_; }
    // 1-based generator index.
    const Word& image(int i) const;
    const std::vector<Word>& images() const { return images_; }

    // Substitutes generator images and reduces. The guard bounds the length of
    // the intermediate word; iterated transvections can blow up exponentially.
    Word apply(const Word& w, std::size_t length_guard = kDefaultLengthGuard) const;

    bool operator==(const Endomorphism&) const = default;

private:
    int rank_;
    std::vector<Word> images_;
};

// Invertible endomorphism carrying an explicit inverse. Constructors verify
// that the two directions cancel on every generator; deciding invertibility
// from the forward images alone is out of scope.
class Automorphism {
public:
    Automorphism(Endomorphism forward, Endomorphism backward);

    static Automorphism identity(int rank);

    int rank() const { return forward_.rank(); }
    const Endomorphism& forward() const { return forward_; }
    const Endomorphism& backward() const { return backward_; }

    Word apply(const Word& w, std::size_t length_guard = kDefaultLengthGuard) const {
        return forward_.apply(w, length_guard);
    }

    // Automorphisms agree iff they agree on generators.
    bool operator==(const Automorphism& other) const {
        return forward_ == other.forward_;
    }

private:
    Endomorphism forward_;
    Endomorphism backward_;
};

bool verify_automorphism(const Endomorphism& forward, const Endomorphism& backward);

Automorphism inverse(const Automorphism& f);
// apply(compose(f,g), w) == apply(f, apply(g, w)): g acts first.
Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism power(const Automorphism& f, long long e);
// f g f^-1 g^-1.
Automorphism commutator(const Automorphism& f, const Automorphism& g);

enum class NielsenKind {
    RightTransvection,  // a_i -> a_i a_j
    LeftTransvection,   // a_i -> a_j a_i
    Inversion,          // a_i -> a_i^-1
    Swap,               // a_i <-> a_j
};

struct NielsenMove {
    NielsenKind kind;
    int i = 0;
    int j = 0;  // unused for Inversion
};

Automorphism nielsen(const NielsenMove& move, int rank);

// a_1 -> a_1 [a_2^e, a_3^e], all other generators fixed. The commutator of
// e-th powers lands in the commutator subgroup of anything containing a_2^e
// and a_3^e, which is what makes this map act trivially on suitable covers.
Automorphism commutator_transvection(int rank, int e);

// a_i -> a_j^-1 a_i a_j, others fixed.
Automorphism ia_conjugation(int rank, int i, int j);
// a_i -> a_i [a_j, a_k], others fixed.
Automorphism ia_commutator_move(int rank, int i, int j, int k);

// The standard homology-trivial generating set: all conjugations (i, j) with
// i != j, then all commutator moves (i, {j < k}, j,k != i).
std::vector<Automorphism> ia_generators(int rank);

}  // namespace homrep::freegroup
