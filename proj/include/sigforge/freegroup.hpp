#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sigforge/cyclotomic.hpp"

namespace sigforge {

// A freely reduced word in a free group of the given rank. Letters are
// (generator index, exponent +-1); the stored sequence never contains an
// adjacent pair g g^{-1}. Immutable value type.
class FreeWord {
public:
    struct Letter {
        int gen;
        int sign;  // +1 or -1
        bool operator==(const Letter&) const = default;
        auto operator<=>(const Letter&) const = default;
    };

    explicit FreeWord(int rank = 4) : rank_(rank) {}
    static FreeWord generator(int rank, int gen, int sign = 1);
    // Free reduction of an arbitrary letter sequence.
    static FreeWord from_letters(int rank, const std::vector<Letter>& letters);

    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    long exponent_sum() const;

    FreeWord operator*(const FreeWord& o) const;
    FreeWord inverse() const;
    FreeWord pow(long e) const;

    bool operator==(const FreeWord&) const = default;
    auto operator<=>(const FreeWord&) const = default;

    std::string to_string() const;  // letters "x y z w" for rank <= 4, else g0, g1, ...

private:
    int rank_;
    std::vector<Letter> letters_;
};

// u v u^{-1} v^{-1}, reduced.
FreeWord commutator(const FreeWord& u, const FreeWord& v);

// A finite integer combination of reduced words: an element of the integral
// group ring of the free group.
class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(const FreeWord& w) { terms_[w] = 1; }
    static GroupRingElement one(int rank) { return GroupRingElement(FreeWord(rank)); }

    const std::map<FreeWord, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement operator-() const;
    GroupRingElement operator*(long n) const;
    bool operator==(const GroupRingElement&) const = default;

    std::string to_string() const;

private:
    void add_term(const FreeWord& w, long coeff);
    std::map<FreeWord, long> terms_;
};

// Fox derivative with respect to generator g: satisfies d(g)/dg = 1,
// d(g^{-1})/dg = -g^{-1}, d(h)/dg = 0 for h != g, and the product rule
// d(uv)/dg = du/dg + u * dv/dg.
GroupRingElement fox_derivative(const FreeWord& w, int g);

// Ring homomorphism sending every generator to omega: a word of total
// exponent sum s maps to omega^s.
Cyclotomic evaluate_diagonal(const GroupRingElement& e, const Cyclotomic& omega);

// Based representatives of the twist curves in generators x, y, z, w:
//   alpha       = z^{-1} [z,w] z
//   beta(m, n)  = [y, x^{-1}] [(y x^m)^{-1}, z^n w^{-1}]
FreeWord alpha_word();
FreeWord beta_word(long m, long n);
std::pair<FreeWord, FreeWord> build_alpha_beta(long m, long n);

// The four Fox derivatives of w evaluated diagonally at omega, i.e. the
// coefficients of w on x, y, z, w in H_1 of the handlebody with its rank-one
// coefficient system. Requires omega != 1.
std::array<Cyclotomic, 4> abelianized_vector(const FreeWord& w, const Cyclotomic& omega);

// True iff the abelianized vectors of alpha and beta(m, n) are linearly
// independent over Q(omega) (rank-2 test via exact 2x2 minors).
bool independence_check(long m, long n, const Cyclotomic& omega);

// Word literal syntax: letters "x y z w" with optional integer powers
// ("x^-1", "z^3"), whitespace separated; "[u,v]" is commutator sugar where
// u and v are single powered letters, e.g. "z^-1 [z,w] z".
FreeWord parse_word(const std::string& text, int rank = 4);

}  // namespace sigforge
