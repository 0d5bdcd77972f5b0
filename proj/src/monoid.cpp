#include "eltrans/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace eltrans {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    }
    return out;
}

// Splits "x,y,z" on commas; an empty body yields no items.
std::vector<std::string> split_commas(std::string_view body) {
    std::vector<std::string> items;
    if (body.empty()) return items;
    std::size_t start = 0;
    while (true) {
        auto comma = body.find(',', start);
        items.emplace_back(body.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return items;
}

std::string_view unbracket(std::string_view text, std::string_view what) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw DomainError("malformed " + std::string(what) + " '" + std::string(text) +
                          "': expected brackets");
    }
    return text.substr(1, text.size() - 2);
}

}  // namespace

// ---------------------------------------------------------------- Word

Word Word::parse(std::string_view text) {
    if (text == "-") return Word{};
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case 'L': letters.push_back(Letter::L); break;
            case 'R': letters.push_back(Letter::R); break;
            default:
                throw DomainError("invalid word '" + std::string(text) +
                                  "': letters must be L or R");
        }
    }
    return Word(std::move(letters));
}

Word Word::operator+(const Word& rhs) const {
    std::vector<Letter> joined = letters_;
    joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(joined));
}

std::string Word::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter x : letters_) out.push_back(static_cast<char>(x));
    return out;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    // 'L' < 'R' as characters.
    return a.letters() < b.letters();
}

std::vector<Word> words_not_starting_with_r(std::size_t max_length) {
    std::vector<Word> out{Word{}};
    std::vector<Word> frontier{Word({Letter::L})};
    for (std::size_t len = 1; len <= max_length; ++len) {
        out.insert(out.end(), frontier.begin(), frontier.end());
        std::vector<Word> next;
        next.reserve(frontier.size() * 2);
        for (const Word& w : frontier) {
            next.push_back(w + Word({Letter::L}));
            next.push_back(w + Word({Letter::R}));
        }
        frontier = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------- matrices

UnimodularMatrix::UnimodularMatrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ < 0 || b_ < 0 || c_ < 0 || d_ < 0) {
        throw DomainError("matrix " + str() + " has a negative entry");
    }
    if (a_ * d_ - b_ * c_ != 1) {
        throw DomainError("matrix " + str() + " is not unimodular (ad - bc != 1)");
    }
}

UnimodularMatrix UnimodularMatrix::generator(Letter letter) {
    return letter == Letter::L ? UnimodularMatrix(1, 1, 0, 1) : UnimodularMatrix(1, 0, 1, 1);
}

UnimodularMatrix UnimodularMatrix::parse(std::string_view text) {
    const std::string flat = strip_spaces(text);
    std::string_view outer = unbracket(flat, "matrix");
    // outer is "[a,b],[c,d]"
    auto mid = outer.find("],[");
    if (mid == std::string_view::npos) {
        throw DomainError("malformed matrix '" + std::string(text) + "'");
    }
    auto row0 = split_commas(unbracket(outer.substr(0, mid + 1), "matrix row"));
    auto row1 = split_commas(unbracket(outer.substr(mid + 2), "matrix row"));
    if (row0.size() != 2 || row1.size() != 2) {
        throw DomainError("malformed matrix '" + std::string(text) + "': expected 2x2");
    }
    return UnimodularMatrix(parse_integer(row0[0]), parse_integer(row0[1]),
                            parse_integer(row1[0]), parse_integer(row1[1]));
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& m) const {
    UnimodularMatrix out;
    out.a_ = a_ * m.a_ + b_ * m.c_;
    out.b_ = a_ * m.b_ + b_ * m.d_;
    out.c_ = c_ * m.a_ + d_ * m.c_;
    out.d_ = c_ * m.b_ + d_ * m.d_;
    return out;
}

std::string UnimodularMatrix::str() const {
    return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

// ---------------------------------------------------------------- fractions

PositiveFraction::PositiveFraction(Integer r, Integer s) : r_(std::move(r)), s_(std::move(s)) {
    if (r_ <= 0 || s_ <= 0) {
        throw DomainError("fraction " + r_.str() + "/" + s_.str() + " is not positive");
    }
    Integer g = boost::multiprecision::gcd(r_, s_);
    r_ /= g;
    s_ /= g;
}

PositiveFraction PositiveFraction::parse(std::string_view text) {
    const std::string flat = strip_spaces(text);
    auto slash = flat.find('/');
    if (slash == std::string::npos) return PositiveFraction(parse_integer(flat), 1);
    return PositiveFraction(parse_integer(std::string_view(flat).substr(0, slash)),
                            parse_integer(std::string_view(flat).substr(slash + 1)));
}

std::string PositiveFraction::str() const { return r_.str() + "/" + s_.str(); }

// ---------------------------------------------------------------- continued fractions

ContinuedFraction::ContinuedFraction(std::vector<Integer> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw DomainError("continued fraction must have at least one entry");
    }
    if (entries_.front() < 1) {
        throw DomainError("continued fraction " + str() + ": first entry must be >= 1");
    }
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] < 2) {
            throw DomainError("continued fraction " + str() + ": entries after the first must be >= 2");
        }
    }
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
    const std::string flat = strip_spaces(text);
    std::vector<Integer> entries;
    for (const auto& item : split_commas(unbracket(flat, "continued fraction"))) {
        entries.push_back(parse_integer(item));
    }
    return ContinuedFraction(std::move(entries));
}

ContinuedFraction ContinuedFraction::compose(const ContinuedFraction& rhs) const {
    std::vector<Integer> out(entries_.begin(), entries_.end());
    out.back() += rhs.entries_.front() - 1;
    out.insert(out.end(), rhs.entries_.begin() + 1, rhs.entries_.end());
    return ContinuedFraction(std::move(out));
}

std::string ContinuedFraction::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ",";
        out += entries_[i].str();
    }
    return out + "]";
}

// ---------------------------------------------------------------- bijections

UnimodularMatrix word_to_matrix(const Word& w) {
    UnimodularMatrix m;
    for (Letter x : w.letters()) m = m * UnimodularMatrix::generator(x);
    return m;
}

Word matrix_to_word(const UnimodularMatrix& m) {
    // Peel generators off the left: L*(a b; c d) = (a+c b+d; c d) and
    // R*(a b; c d) = (a b; a+c b+d).
    Integer a = m.a(), b = m.b(), c = m.c(), d = m.d();
    std::vector<Letter> letters;
    while (!(a == 1 && b == 0 && c == 0 && d == 1)) {
        if (a >= c && b >= d) {
            letters.push_back(Letter::L);
            a -= c;
            b -= d;
        } else if (c >= a && d >= b) {
            letters.push_back(Letter::R);
            c -= a;
            d -= b;
        } else {
            throw std::logic_error("matrix_to_word: no generator divides " + m.str());
        }
    }
    return Word(std::move(letters));
}

PositiveFraction matrix_to_fraction(const UnimodularMatrix& m) {
    return PositiveFraction(m.a() + m.b(), m.c() + m.d());
}

Word fraction_to_word(const PositiveFraction& q) {
    Integer r = q.r(), s = q.s();
    std::vector<Letter> letters;
    while (r != s) {
        if (r > s) {
            letters.push_back(Letter::L);
            r -= s;
        } else {
            letters.push_back(Letter::R);
            s -= r;
        }
    }
    return Word(std::move(letters));
}

ContinuedFraction word_to_cf(const Word& w) {
    static const ContinuedFraction kL({Integer(2)});
    static const ContinuedFraction kR({Integer(1), Integer(2)});
    ContinuedFraction cf;
    for (Letter x : w.letters()) cf = cf.compose(x == Letter::L ? kL : kR);
    return cf;
}

PositiveFraction cf_eval(const ContinuedFraction& cf) {
    const auto& e = cf.entries();
    // Tail value as num/den, evaluated from the back.
    Integer num = e.back(), den = 1;
    for (std::size_t i = e.size() - 1; i-- > 0;) {
        Integer next_num = e[i] * num - den;
        den = num;
        num = std::move(next_num);
    }
    return PositiveFraction(num, den);
}

ContinuedFraction cf_of_fraction(const PositiveFraction& q) {
    Integer r = q.r(), s = q.s();
    std::vector<Integer> entries;
    while (true) {
        Integer ceil = (r + s - 1) / s;
        entries.push_back(ceil);
        Integer remainder = ceil * s - r;  // ceil - r/s = remainder/s
        if (remainder == 0) break;
        r = s;
        s = remainder;
    }
    return ContinuedFraction(std::move(entries));
}

}  // namespace eltrans
