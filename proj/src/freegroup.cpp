#include "homrep/freegroup.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace homrep::freegroup {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
    if (l == 0) throw std::invalid_argument("letter index 0 is not a generator");
    if (!out.empty() && out.back() == -l) {
        out.pop_back();
    } else {
        out.push_back(l);
    }
}

}  // namespace

Word reduce(const std::vector<Letter>& raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) push_reduced(out, l);
    return Word(std::move(out), Word::ReducedTag{});
}

Word::Word(std::initializer_list<Letter> raw) : Word(std::vector<Letter>(raw)) {}

Word::Word(const std::vector<Letter>& raw) { *this = reduce(raw); }

int Word::max_index() const {
    int m = 0;
    for (Letter l : letters_) m = std::max(m, std::abs(l));
    return m;
}

Word Word::parse(const std::string& text, int rank) {
    std::istringstream in(text);
    std::vector<Letter> raw;
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'A'))
            throw std::invalid_argument("bad word token '" + tok + "'");
        int idx = 0;
        for (std::size_t p = 1; p < tok.size(); ++p) {
            if (tok[p] < '0' || tok[p] > '9')
                throw std::invalid_argument("bad word token '" + tok + "'");
            idx = idx * 10 + (tok[p] - '0');
            if (idx > 1'000'000)
                throw std::invalid_argument("generator index out of range in '" + tok + "'");
        }
        if (idx < 1 || idx > rank)
            throw std::invalid_argument("generator index out of range in '" + tok + "'");
        raw.push_back(tok[0] == 'a' ? idx : -idx);
    }
    return Word(raw);
}

std::string Word::str() const {
    std::string out;
    for (Letter l : letters_) {
        if (!out.empty()) out += ' ';
        out += (l > 0 ? 'a' : 'A');
        out += std::to_string(std::abs(l));
    }
    return out;
}

Word multiply(const Word& u, const Word& v) {
    std::vector<Letter> out = u.letters();
    for (Letter l : v.letters()) push_reduced(out, l);
    return reduce(out);
}

Word invert(const Word& u) {
    std::vector<Letter> out;
    out.reserve(u.size());
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
        out.push_back(-*it);
    return Word(out);
}

Word power(const Word& u, long long e) {
    if (e < 0) return power(invert(u), -e);
    if (e == 0 || u.empty()) return Word();
    // Naive concatenation below a size threshold; repeated squaring above it.
    if (u.size() * static_cast<unsigned long long>(e) <= 4096) {
        Word acc;
        for (long long k = 0; k < e; ++k) acc = multiply(acc, u);
        return acc;
    }
    Word acc;
    Word base = u;
    while (e > 0) {
        if (e & 1) acc = multiply(acc, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return acc;
}

Word commutator(const Word& u, const Word& v) {
    return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

Endomorphism::Endomorphism(int rank, std::vector<Word> images)
    : rank_(rank), images_(std::move(images)) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    if (images_.size() != static_cast<std::size_t>(rank))
        throw std::invalid_argument("endomorphism needs one image per generator");
    for (const Word& w : images_)
        if (w.max_index() > rank)
            throw std::invalid_argument("image letter exceeds rank");
}

Endomorphism Endomorphism::identity(int rank) {
    std::vector<Word> images;
    images.reserve(rank);
    for (int i = 1; i <= rank; ++i) images.push_back(Word{i});
    return Endomorphism(rank, std::move(images));
}

const Word& Endomorphism::image(int i) const {
    if (i < 1 || i > rank_) throw std::out_of_range("generator index");
    return images_[static_cast<std::size_t>(i) - 1];
}

Word Endomorphism::apply(const Word& w, std::size_t length_guard) const {
    if (w.max_index() > rank_) throw std::invalid_argument("word rank exceeds endomorphism rank");
    std::vector<Letter> out;
    for (Letter l : w.letters()) {
        const Word& img = images_[static_cast<std::size_t>(std::abs(l)) - 1];
        if (l > 0) {
            for (Letter m : img.letters()) push_reduced(out, m);
        } else {
            for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
                push_reduced(out, -*it);
        }
        if (out.size() > length_guard)
            throw std::length_error("image word exceeds length guard");
    }
    return Word(std::move(out), Word::ReducedTag{});
}

bool verify_automorphism(const Endomorphism& forward, const Endomorphism& backward) {
    if (forward.rank() != backward.rank()) return false;
    for (int i = 1; i <= forward.rank(); ++i) {
        Word gen{i};
        if (forward.apply(backward.image(i)) != gen) return false;
        if (backward.apply(forward.image(i)) != gen) return false;
    }
    return true;
}

Automorphism::Automorphism(Endomorphism forward, Endomorphism backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
    if (!verify_automorphism(forward_, backward_))
        throw std::invalid_argument("forward/backward images do not invert each other");
}

Automorphism Automorphism::identity(int rank) {
    return Automorphism(Endomorphism::identity(rank), Endomorphism::identity(rank));
}

Automorphism inverse(const Automorphism& f) {
    return Automorphism(f.backward(), f.forward());
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    if (f.rank() != g.rank()) throw std::invalid_argument("rank mismatch in compose");
    std::vector<Word> fwd, bwd;
    fwd.reserve(f.rank());
    bwd.reserve(f.rank());
    for (int i = 1; i <= f.rank(); ++i) {
        fwd.push_back(f.forward().apply(g.forward().image(i)));
        bwd.push_back(g.backward().apply(f.backward().image(i)));
    }
    return Automorphism(Endomorphism(f.rank(), std::move(fwd)),
                        Endomorphism(f.rank(), std::move(bwd)));
}

Automorphism power(const Automorphism& f, long long e) {
    if (e < 0) return power(inverse(f), -e);
    Automorphism acc = Automorphism::identity(f.rank());
    for (long long k = 0; k < e; ++k) acc = compose(acc, f);
    return acc;
}

Automorphism commutator(const Automorphism& f, const Automorphism& g) {
    return compose(compose(f, g), compose(inverse(f), inverse(g)));
}

Automorphism nielsen(const NielsenMove& move, int rank) {
    auto bad = [&](bool cond) {
        if (cond) throw std::invalid_argument("invalid Nielsen move indices");
    };
    bad(move.i < 1 || move.i > rank);
    std::vector<Word> fwd, bwd;
    for (int i = 1; i <= rank; ++i) {
        fwd.push_back(Word{i});
        bwd.push_back(Word{i});
    }
    auto& fi = fwd[static_cast<std::size_t>(move.i) - 1];
    auto& bi = bwd[static_cast<std::size_t>(move.i) - 1];
    switch (move.kind) {
        case NielsenKind::RightTransvection:
            bad(move.j < 1 || move.j > rank || move.j == move.i);
            fi = Word{move.i, move.j};
            bi = Word{move.i, -move.j};
            break;
        case NielsenKind::LeftTransvection:
            bad(move.j < 1 || move.j > rank || move.j == move.i);
            fi = Word{move.j, move.i};
            bi = Word{-move.j, move.i};
            break;
        case NielsenKind::Inversion:
            fi = Word{-move.i};
            bi = Word{-move.i};
            break;
        case NielsenKind::Swap: {
            bad(move.j < 1 || move.j > rank || move.j == move.i);
            auto& fj = fwd[static_cast<std::size_t>(move.j) - 1];
            auto& bj = bwd[static_cast<std::size_t>(move.j) - 1];
            fi = Word{move.j};
            fj = Word{move.i};
            bi = Word{move.j};
            bj = Word{move.i};
            break;
        }
    }
    return Automorphism(Endomorphism(rank, std::move(fwd)), Endomorphism(rank, std::move(bwd)));
}

Automorphism commutator_transvection(int rank, int e) {
    if (rank < 3) throw std::invalid_argument("commutator_transvection needs rank >= 3");
    if (e < 1) throw std::invalid_argument("exponent must be positive");
    Word u = power(Word{2}, e);
    Word v = power(Word{3}, e);
    std::vector<Word> fwd, bwd;
    for (int i = 1; i <= rank; ++i) {
        fwd.push_back(Word{i});
        bwd.push_back(Word{i});
    }
    fwd[0] = multiply(Word{1}, commutator(u, v));
    bwd[0] = multiply(Word{1}, commutator(v, u));
    return Automorphism(Endomorphism(rank, std::move(fwd)), Endomorphism(rank, std::move(bwd)));
}

Automorphism ia_conjugation(int rank, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > rank || j > rank)
        throw std::invalid_argument("invalid conjugation move indices");
    std::vector<Word> fwd, bwd;
    for (int k = 1; k <= rank; ++k) {
        fwd.push_back(Word{k});
        bwd.push_back(Word{k});
    }
    fwd[static_cast<std::size_t>(i) - 1] = Word{-j, i, j};
    bwd[static_cast<std::size_t>(i) - 1] = Word{j, i, -j};
    return Automorphism(Endomorphism(rank, std::move(fwd)), Endomorphism(rank, std::move(bwd)));
}

Automorphism ia_commutator_move(int rank, int i, int j, int k) {
    if (i == j || i == k || j == k || i < 1 || j < 1 || k < 1 || i > rank || j > rank || k > rank)
        throw std::invalid_argument("invalid commutator move indices");
    std::vector<Word> fwd, bwd;
    for (int t = 1; t <= rank; ++t) {
        fwd.push_back(Word{t});
        bwd.push_back(Word{t});
    }
    fwd[static_cast<std::size_t>(i) - 1] = multiply(Word{i}, commutator(Word{j}, Word{k}));
    bwd[static_cast<std::size_t>(i) - 1] = multiply(Word{i}, commutator(Word{k}, Word{j}));
    return Automorphism(Endomorphism(rank, std::move(fwd)), Endomorphism(rank, std::move(bwd)));
}

std::vector<Automorphism> ia_generators(int rank) {
    if (rank < 3) throw std::invalid_argument("ia_generators needs rank >= 3");
    std::vector<Automorphism> gens;
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j)
            if (i != j) gens.push_back(ia_conjugation(rank, i, j));
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j)
            for (int k = j + 1; k <= rank; ++k)
                if (j != i && k != i) gens.push_back(ia_commutator_move(rank, i, j, k));
    return gens;
}

}  // namespace homrep::freegroup
