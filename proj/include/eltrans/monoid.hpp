// The four encodings of an elementary transformation's combinatorial type:
// words over {L, R}, positive unimodular matrices, positive fractions and
// descending continued fractions, with the bijections between them.
//
//   word --word_to_matrix--> matrix --matrix_to_fraction--> fraction
//     \                                                       ^
//      `--word_to_cf--> continued fraction --cf_eval---------'
#pragma once

#include "eltrans/arith.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace eltrans {

enum class Letter : char { L = 'L', R = 'R' };

/// Finite word over {L, R}. The empty word is the monoid identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Parses "LRL"; "" and "-" both denote the empty word.
    static Word parse(std::string_view text);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool starts_with_r() const { return !empty() && letters_.front() == Letter::R; }

    Word operator+(const Word& rhs) const;

    /// "" for the empty word.
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Orders words by length, then lexicographically with L < R.
bool shortlex_less(const Word& a, const Word& b);

/// All words of length <= max_length that do not start with R, in shortlex
/// order. There are 2^max_length of them.
std::vector<Word> words_not_starting_with_r(std::size_t max_length);

/// (a b; c d) with natural-number entries and ad - bc = 1.
class UnimodularMatrix {
public:
    UnimodularMatrix() : a_(1), b_(0), c_(0), d_(1) {}
    /// Throws DomainError unless all entries are >= 0 and ad - bc = 1.
    UnimodularMatrix(Integer a, Integer b, Integer c, Integer d);

    static UnimodularMatrix identity() { return {}; }
    static UnimodularMatrix generator(Letter letter);

    /// Parses "[[a,b],[c,d]]" (whitespace ignored).
    static UnimodularMatrix parse(std::string_view text);

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& d() const { return d_; }

    UnimodularMatrix operator*(const UnimodularMatrix& rhs) const;

    std::string str() const;

    friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

private:
    Integer a_, b_, c_, d_;
};

/// r/s > 0, always stored in lowest terms.
class PositiveFraction {
public:
    PositiveFraction() : r_(1), s_(1) {}
    /// Reduces; throws DomainError unless r > 0 and s > 0.
    PositiveFraction(Integer r, Integer s);

    /// Parses "r/s" or "r".
    static PositiveFraction parse(std::string_view text);

    const Integer& r() const { return r_; }
    const Integer& s() const { return s_; }
    Rational value() const { return Rational(r_, s_); }

    std::string str() const;

    friend bool operator==(const PositiveFraction&, const PositiveFraction&) = default;

private:
    Integer r_, s_;
};

/// [s1, ..., sm] = s1 - 1/(s2 - 1/(... - 1/sm)) with m >= 1, s1 >= 1 and
/// si >= 2 for i >= 2. Under the composition law below these sequences
/// form a monoid with identity [1].
class ContinuedFraction {
public:
    ContinuedFraction() : entries_{Integer(1)} {}
    /// Throws DomainError if the entries violate the normalization.
    explicit ContinuedFraction(std::vector<Integer> entries);

    /// Parses "[s1,s2,...,sm]".
    static ContinuedFraction parse(std::string_view text);

    const std::vector<Integer>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// (s1..sm) o (t1..tn) = (s1, ..., s_{m-1}, sm - 1 + t1, t2, ..., tn).
    ContinuedFraction compose(const ContinuedFraction& rhs) const;

    std::string str() const;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    std::vector<Integer> entries_;
};

UnimodularMatrix word_to_matrix(const Word& w);
Word matrix_to_word(const UnimodularMatrix& m);
PositiveFraction matrix_to_fraction(const UnimodularMatrix& m);
Word fraction_to_word(const PositiveFraction& q);
ContinuedFraction word_to_cf(const Word& w);
PositiveFraction cf_eval(const ContinuedFraction& cf);
ContinuedFraction cf_of_fraction(const PositiveFraction& q);

/// Shorthand for matrix_to_fraction(word_to_matrix(w)).
inline PositiveFraction word_to_fraction(const Word& w) {
    return matrix_to_fraction(word_to_matrix(w));
}

}  // namespace eltrans
