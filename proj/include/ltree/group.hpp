#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ltree/bigint.hpp"

namespace ltree {

/// The six concrete ordered abelian groups.
///
///   Int      Z
///   Rational Q
///   Dyadic   Z[1/2]
///   Triadic  Z[1/3]
///   ZSqrt2   Z[sqrt2] = { a + b*sqrt2 : a, b in Z }
///   LexInt   Z x Z with lexicographic order
enum class GroupId { Int, Rational, Dyadic, Triadic, ZSqrt2, LexInt };

std::string_view group_name(GroupId g);
std::optional<GroupId> group_from_name(std::string_view name);

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An element of one of the six groups, kept in canonical form:
/// reduced fractions with positive denominator, stripped powers of 2 / 3,
/// so equality and hashing are structural. All arithmetic is exact.
///
/// Field use by group:
///   Int       a = value
///   Rational  a = numerator, b = denominator  (b > 0, gcd(a,b) = 1)
///   Dyadic    a = numerator, k = exponent     (value a / 2^k; k = 0 or a odd)
///   Triadic   a = numerator, k = exponent     (value a / 3^k; k = 0 or 3 does not divide a)
///   ZSqrt2    a + b*sqrt2
///   LexInt    (a, b), ordered by a then b
class GroupElement {
public:
    GroupElement() : group_(GroupId::Int), a_(0), b_(0), k_(0) {}

    static GroupElement integer(BigInt v);
    static GroupElement rational(BigInt num, BigInt den);
    static GroupElement dyadic(BigInt num, unsigned exp);
    static GroupElement triadic(BigInt num, unsigned exp);
    static GroupElement zsqrt2(BigInt a, BigInt b);
    static GroupElement lex_int(BigInt first, BigInt second);

    static GroupElement zero(GroupId g);
    /// The natural embedding of a machine integer: n, n/1, (n,0), (n,0).
    static GroupElement from_int(GroupId g, long n);

    GroupId group() const noexcept { return group_; }

    bool is_zero() const;
    int sign() const;  // -1, 0, +1

    GroupElement operator-() const;
    friend GroupElement operator+(const GroupElement& u, const GroupElement& v);
    friend GroupElement operator-(const GroupElement& u, const GroupElement& v);
    GroupElement abs() const { return sign() < 0 ? -*this : *this; }
    GroupElement twice() const { return *this + *this; }
    /// n * this (repeated group addition, computed directly).
    GroupElement scaled(const BigInt& n) const;

    /// Total order; throws std::domain_error on mixed groups.
    std::strong_ordering compare(const GroupElement& other) const;
    std::strong_ordering operator<=>(const GroupElement& other) const { return compare(other); }
    bool operator==(const GroupElement& other) const { return compare(other) == 0; }

    /// h with h + h = *this when one exists in the group.
    std::optional<GroupElement> try_halve() const;

    // Representation accessors; throw std::domain_error when the group does
    // not carry the field.
    const BigInt& int_value() const;
    const BigInt& num() const;        // Rational / Dyadic / Triadic numerator
    const BigInt& den() const;        // Rational denominator
    unsigned exponent() const;        // Dyadic / Triadic exponent
    const BigInt& coeff_unit() const;   // ZSqrt2 a
    const BigInt& coeff_sqrt2() const;  // ZSqrt2 b
    const BigInt& lex_first() const;
    const BigInt& lex_second() const;

private:
    GroupElement(GroupId g, BigInt a, BigInt b, unsigned k)
        : group_(g), a_(std::move(a)), b_(std::move(b)), k_(k) {}

    void require_same_group(const GroupElement& other) const;

    GroupId group_;
    BigInt a_;
    BigInt b_;
    unsigned k_;
};

/// max of S = { t : 0 <= 2t <= lambda0 }, or nullopt when S has no maximum.
/// Requires lambda0 > 0.
///
/// Closed-form rules: Z -> floor(lambda0/2); Q and Z[1/2] -> lambda0/2;
/// Z[1/3] -> numerator even ? lambda0/2 : none; Z[sqrt2] -> both coefficients
/// even ? lambda0/2 : none; Z x Z lex -> first coordinate even ?
/// (x/2, floor(y/2)) : none. The dense groups have no maximum whenever
/// lambda0/2 itself is missing.
std::optional<GroupElement> max_half(const GroupElement& lambda0);

/// Literal grammar (ASCII, canonical on output):
///   int       -?digits
///   rational  p | p/q
///   dyadic    p | p/2^k      triadic  p | p/3^k
///   zsqrt2    a,b            lex-int  x:y
GroupElement parse_element(GroupId g, std::string_view text);
std::string format_element(const GroupElement& v);

inline std::ostream& operator<<(std::ostream& os, const GroupElement& v) {
    return os << format_element(v);
}

// Field arithmetic, Rational only (the polar space needs division).
GroupElement rat_mul(const GroupElement& u, const GroupElement& v);
GroupElement rat_div(const GroupElement& u, const GroupElement& v);

}  // namespace ltree
