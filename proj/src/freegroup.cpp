#include "sigforge/freegroup.hpp"

#include <sstream>
#include <stdexcept>

namespace sigforge {

FreeWord FreeWord::generator(int rank, int gen, int sign)
{
    if (gen < 0 || gen >= rank) throw std::invalid_argument("generator: index out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("generator: sign must be +-1");
    FreeWord w(rank);
    w.letters_.push_back({gen, sign});
    return w;
}

FreeWord FreeWord::from_letters(int rank, const std::vector<Letter>& letters)
{
    FreeWord w(rank);
    for (const Letter& l : letters) {
        if (l.gen < 0 || l.gen >= rank)
            throw std::invalid_argument("from_letters: generator index out of range");
        if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
            w.letters_.back().sign == -l.sign)
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

long FreeWord::exponent_sum() const
{
    long s = 0;
    for (const Letter& l : letters_) s += l.sign;
    return s;
}

FreeWord FreeWord::operator*(const FreeWord& o) const
{
    if (rank_ != o.rank_) throw std::invalid_argument("word product: rank mismatch");
    std::vector<Letter> all = letters_;
    all.insert(all.end(), o.letters_.begin(), o.letters_.end());
    return from_letters(rank_, all);
}

FreeWord FreeWord::inverse() const
{
    FreeWord w(rank_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->sign});
    return w;
}

FreeWord FreeWord::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    FreeWord result(rank_);
    for (long i = 0; i < e; ++i) result = result * *this;
    return result;
}

std::string FreeWord::to_string() const
{
    static const char* names = "xyzw";
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < letters_.size();) {
        size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        long e = static_cast<long>(j - i) * letters_[i].sign;
        if (i) os << " ";
        if (rank_ <= 4)
            os << names[letters_[i].gen];
        else
            os << "g" << letters_[i].gen;
        if (e != 1) os << "^" << e;
        i = j;
    }
    return os.str();
}

FreeWord commutator(const FreeWord& u, const FreeWord& v)
{
    return u * v * u.inverse() * v.inverse();
}

void GroupRingElement::add_term(const FreeWord& w, long coeff)
{
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (coeff != 0) terms_[w] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const
{
    GroupRingElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const
{
    return *this + (-o);
}

GroupRingElement GroupRingElement::operator-() const
{
    GroupRingElement r;
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

GroupRingElement GroupRingElement::operator*(long n) const
{
    GroupRingElement r;
    if (n != 0)
        for (const auto& [w, c] : terms_) r.terms_[w] = c * n;
    return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const
{
    GroupRingElement r;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) r.add_term(wa * wb, ca * cb);
    return r;
}

std::string GroupRingElement::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        long a = c > 0 ? c : -c;
        if (a != 1 || w.empty()) os << a;
        if (!w.empty()) {
            if (a != 1) os << "*";
            os << "(" << w.to_string() << ")";
        }
        first = false;
    }
    return os.str();
}

GroupRingElement fox_derivative(const FreeWord& w, int g)
{
    if (g < 0 || g >= w.rank()) throw std::invalid_argument("fox_derivative: bad generator");
    GroupRingElement result;
    FreeWord prefix(w.rank());
    for (const auto& l : w.letters()) {
        FreeWord letter = FreeWord::generator(w.rank(), l.gen, l.sign);
        if (l.gen == g) {
            if (l.sign == 1)
                result = result + GroupRingElement(prefix);
            else
                result = result - GroupRingElement(prefix * letter);
        }
        prefix = prefix * letter;
    }
    return result;
}

Cyclotomic evaluate_diagonal(const GroupRingElement& e, const Cyclotomic& omega)
{
    Cyclotomic sum;
    for (const auto& [w, c] : e.terms()) sum = sum + omega.pow(w.exponent_sum()) * Rational(c);
    return sum;
}

namespace {
const int kX = 0, kY = 1, kZ = 2, kW = 3;
FreeWord gen(int i) { return FreeWord::generator(4, i); }
}  // namespace

FreeWord alpha_word()
{
    FreeWord z = gen(kZ), w = gen(kW);
    return z.inverse() * commutator(z, w) * z;
}

FreeWord beta_word(long m, long n)
{
    if (m < 0 || n < 0) throw std::invalid_argument("beta_word: m, n must be nonnegative");
    FreeWord x = gen(kX), y = gen(kY), z = gen(kZ), w = gen(kW);
    return commutator(y, x.inverse()) *
           commutator((y * x.pow(m)).inverse(), z.pow(n) * w.inverse());
}

std::pair<FreeWord, FreeWord> build_alpha_beta(long m, long n)
{
    if (m < 1) throw std::invalid_argument("build_alpha_beta: m must be >= 1");
    return {alpha_word(), beta_word(m, n)};
}

std::array<Cyclotomic, 4> abelianized_vector(const FreeWord& w, const Cyclotomic& omega)
{
    if (w.rank() != 4) throw std::invalid_argument("abelianized_vector: rank-4 words only");
    if (omega == Cyclotomic(1)) throw std::domain_error("abelianized_vector: omega = 1 rejected");
    std::array<Cyclotomic, 4> v;
    for (int g = 0; g < 4; ++g) v[g] = evaluate_diagonal(fox_derivative(w, g), omega);
    return v;
}

bool independence_check(long m, long n, const Cyclotomic& omega)
{
    if (m < 1) throw std::invalid_argument("independence_check: m must be >= 1");
    if (omega == Cyclotomic(1)) throw std::domain_error("independence_check: omega = 1 rejected");
    auto a = abelianized_vector(alpha_word(), omega);
    auto b = abelianized_vector(beta_word(m, n), omega);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return true;
    return false;
}

namespace {

int letter_index(char c, int rank)
{
    static const std::string names = "xyzw";
    size_t p = names.find(c);
    if (p == std::string::npos || static_cast<int>(p) >= rank)
        throw std::invalid_argument(std::string("parse_word: unknown letter '") + c + "'");
    return static_cast<int>(p);
}

FreeWord parse_powered_letter(const std::string& tok, int rank)
{
    if (tok.empty()) throw std::invalid_argument("parse_word: empty token");
    int g = letter_index(tok[0], rank);
    long e = 1;
    if (tok.size() > 1) {
        if (tok[1] != '^') throw std::invalid_argument("parse_word: expected '^' in " + tok);
        e = std::stol(tok.substr(2));
    }
    return FreeWord::generator(rank, g).pow(e);
}

}  // namespace

FreeWord parse_word(const std::string& text, int rank)
{
    FreeWord result(rank);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.front() == '[') {
            if (tok.back() != ']') throw std::invalid_argument("parse_word: unclosed commutator");
            std::string body = tok.substr(1, tok.size() - 2);
            size_t comma = body.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("parse_word: commutator needs two entries");
            result = result * commutator(parse_powered_letter(body.substr(0, comma), rank),
                                         parse_powered_letter(body.substr(comma + 1), rank));
        } else {
            result = result * parse_powered_letter(tok, rank);
        }
    }
    return result;
}

}  // namespace sigforge
