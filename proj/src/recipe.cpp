#include "homrep/recipe.hpp"

#include <cctype>
#include <stdexcept>

namespace homrep::cli {

namespace {

using freegroup::Automorphism;

class Parser {
public:
    Parser(const std::string& text, int rank) : text_(text), rank_(rank) {}

    Automorphism parse() {
        Automorphism result = expr();
        skip_space();
        if (pos_ != text_.size()) fail("trailing input");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("recipe error at position " + std::to_string(pos_) + ": " +
                                    what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string ident() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected a name");
        return text_.substr(start, pos_ - start);
    }

    long long integer() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (digits == pos_) fail("expected an integer");
        return std::stoll(text_.substr(start, pos_ - start));
    }

    int small_int() {
        long long v = integer();
        if (v < -1'000'000 || v > 1'000'000) fail("integer out of range");
        return static_cast<int>(v);
    }

    Automorphism expr() {
        std::string name = ident();
        if (name == "id") return Automorphism::identity(rank_);
        expect('(');
        Automorphism out = dispatch(name);
        expect(')');
        return out;
    }

    Automorphism dispatch(const std::string& name) {
        using freegroup::NielsenKind;
        using freegroup::NielsenMove;
        if (name == "conj") {
            int i = small_int();
            expect(',');
            int j = small_int();
            return freegroup::ia_conjugation(rank_, i, j);
        }
        if (name == "comm") {
            int i = small_int();
            expect(',');
            int j = small_int();
            expect(',');
            int k = small_int();
            return freegroup::ia_commutator_move(rank_, i, j, k);
        }
        if (name == "ctrans") {
            int e = small_int();
            return freegroup::commutator_transvection(rank_, e);
        }
        if (name == "rt" || name == "lt" || name == "swap") {
            int i = small_int();
            expect(',');
            int j = small_int();
            NielsenKind kind = name == "rt"   ? NielsenKind::RightTransvection
                               : name == "lt" ? NielsenKind::LeftTransvection
                                              : NielsenKind::Swap;
            return freegroup::nielsen(NielsenMove{kind, i, j}, rank_);
        }
        if (name == "inv") {
            int i = small_int();
            return freegroup::nielsen(NielsenMove{NielsenKind::Inversion, i, 0}, rank_);
        }
        if (name == "compose" || name == "commutator") {
            Automorphism f = expr();
            expect(',');
            Automorphism g = expr();
            return name == "compose" ? freegroup::compose(f, g) : freegroup::commutator(f, g);
        }
        if (name == "power") {
            Automorphism f = expr();
            expect(',');
            long long n = integer();
            if (n < -64 || n > 64) fail("power exponent out of range");
            return freegroup::power(f, n);
        }
        if (name == "inverse") {
            Automorphism f = expr();
            return freegroup::inverse(f);
        }
        fail("unknown element constructor '" + name + "'");
    }

    const std::string& text_;
    int rank_;
    std::size_t pos_ = 0;
};

}  // namespace

freegroup::Automorphism parse_element(const std::string& text, int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    return Parser(text, rank).parse();
}

}  // namespace homrep::cli
