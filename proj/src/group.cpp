#include "ltree/group.hpp"

#include <array>
#include <cctype>

namespace ltree {

namespace {

constexpr std::array<std::string_view, 6> kGroupNames = {
    "int", "rational", "dyadic", "triadic", "zsqrt2", "lex-int"};

bool is_even(const BigInt& v) { return (v & 1) == 0; }

std::strong_ordering from_int_cmp(const BigInt& a, const BigInt& b) {
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// Sign of a + b*sqrt2, decided by integer arithmetic alone.
int zsqrt2_sign(const BigInt& a, const BigInt& b) {
    if (b == 0) return a == 0 ? 0 : (a > 0 ? 1 : -1);
    if (b > 0) {
        if (a >= 0) return 1;
        return a * a < 2 * b * b ? 1 : -1;  // a*a == 2*b*b impossible
    }
    if (a <= 0) return -1;
    return a * a > 2 * b * b ? 1 : -1;
}

}  // namespace

std::string_view group_name(GroupId g) { return kGroupNames[static_cast<int>(g)]; }

std::optional<GroupId> group_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kGroupNames.size(); ++i)
        if (kGroupNames[i] == name) return static_cast<GroupId>(i);
    return std::nullopt;
}

GroupElement GroupElement::integer(BigInt v) {
    return GroupElement(GroupId::Int, std::move(v), 0, 0);
}

GroupElement GroupElement::rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return GroupElement(GroupId::Rational, 0, 1, 0);
    BigInt g = big_gcd(big_abs(num), den);
    return GroupElement(GroupId::Rational, num / g, den / g, 0);
}

GroupElement GroupElement::dyadic(BigInt num, unsigned exp) {
    if (num == 0) return GroupElement(GroupId::Dyadic, 0, 0, 0);
    while (exp > 0 && is_even(num)) {
        num >>= 1;
        --exp;
    }
    return GroupElement(GroupId::Dyadic, std::move(num), 0, exp);
}

GroupElement GroupElement::triadic(BigInt num, unsigned exp) {
    if (num == 0) return GroupElement(GroupId::Triadic, 0, 0, 0);
    while (exp > 0 && num % 3 == 0) {
        num /= 3;
        --exp;
    }
    return GroupElement(GroupId::Triadic, std::move(num), 0, exp);
}

GroupElement GroupElement::zsqrt2(BigInt a, BigInt b) {
    return GroupElement(GroupId::ZSqrt2, std::move(a), std::move(b), 0);
}

GroupElement GroupElement::lex_int(BigInt first, BigInt second) {
    return GroupElement(GroupId::LexInt, std::move(first), std::move(second), 0);
}

GroupElement GroupElement::zero(GroupId g) { return from_int(g, 0); }

GroupElement GroupElement::from_int(GroupId g, long n) {
    switch (g) {
        case GroupId::Int: return integer(n);
        case GroupId::Rational: return rational(n, 1);
        case GroupId::Dyadic: return dyadic(n, 0);
        case GroupId::Triadic: return triadic(n, 0);
        case GroupId::ZSqrt2: return zsqrt2(n, 0);
        case GroupId::LexInt: return lex_int(n, 0);
    }
    throw std::logic_error("unknown group");
}

void GroupElement::require_same_group(const GroupElement& other) const {
    if (group_ != other.group_)
        throw std::domain_error(std::string("mixed-group operation: ") +
                                std::string(group_name(group_)) + " vs " +
                                std::string(group_name(other.group_)));
}

bool GroupElement::is_zero() const { return sign() == 0; }

int GroupElement::sign() const {
    switch (group_) {
        case GroupId::Int:
        case GroupId::Rational:  // denominator positive
        case GroupId::Dyadic:
        case GroupId::Triadic:
            return a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
        case GroupId::ZSqrt2:
            return zsqrt2_sign(a_, b_);
        case GroupId::LexInt:
            if (a_ != 0) return a_ > 0 ? 1 : -1;
            return b_ == 0 ? 0 : (b_ > 0 ? 1 : -1);
    }
    throw std::logic_error("unknown group");
}

GroupElement GroupElement::operator-() const {
    // The rational denominator stays positive; every other field flips sign.
    if (group_ == GroupId::Rational) return GroupElement(group_, -a_, b_, k_);
    return GroupElement(group_, -a_, -b_, k_);
}

GroupElement operator+(const GroupElement& u, const GroupElement& v) {
    u.require_same_group(v);
    switch (u.group_) {
        case GroupId::Int:
            return GroupElement::integer(u.a_ + v.a_);
        case GroupId::Rational:
            return GroupElement::rational(u.a_ * v.b_ + v.a_ * u.b_, u.b_ * v.b_);
        case GroupId::Dyadic: {
            unsigned k = std::max(u.k_, v.k_);
            return GroupElement::dyadic(u.a_ * big_pow(2, k - u.k_) + v.a_ * big_pow(2, k - v.k_), k);
        }
        case GroupId::Triadic: {
            unsigned k = std::max(u.k_, v.k_);
            return GroupElement::triadic(u.a_ * big_pow(3, k - u.k_) + v.a_ * big_pow(3, k - v.k_), k);
        }
        case GroupId::ZSqrt2:
            return GroupElement::zsqrt2(u.a_ + v.a_, u.b_ + v.b_);
        case GroupId::LexInt:
            return GroupElement::lex_int(u.a_ + v.a_, u.b_ + v.b_);
    }
    throw std::logic_error("unknown group");
}

GroupElement operator-(const GroupElement& u, const GroupElement& v) { return u + (-v); }

GroupElement GroupElement::scaled(const BigInt& n) const {
    switch (group_) {
        case GroupId::Int: return integer(a_ * n);
        case GroupId::Rational: return rational(a_ * n, b_);
        case GroupId::Dyadic: return dyadic(a_ * n, k_);
        case GroupId::Triadic: return triadic(a_ * n, k_);
        case GroupId::ZSqrt2: return zsqrt2(a_ * n, b_ * n);
        case GroupId::LexInt: return lex_int(a_ * n, b_ * n);
    }
    throw std::logic_error("unknown group");
}

std::strong_ordering GroupElement::compare(const GroupElement& other) const {
    require_same_group(other);
    switch (group_) {
        case GroupId::Int:
            return from_int_cmp(a_, other.a_);
        case GroupId::Rational:
            return from_int_cmp(a_ * other.b_, other.a_ * b_);
        case GroupId::Dyadic: {
            unsigned k = std::max(k_, other.k_);
            return from_int_cmp(a_ * big_pow(2, k - k_), other.a_ * big_pow(2, k - other.k_));
        }
        case GroupId::Triadic: {
            unsigned k = std::max(k_, other.k_);
            return from_int_cmp(a_ * big_pow(3, k - k_), other.a_ * big_pow(3, k - other.k_));
        }
        case GroupId::ZSqrt2: {
            int s = zsqrt2_sign(a_ - other.a_, b_ - other.b_);
            return s == 0 ? std::strong_ordering::equal
                          : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::less);
        }
        case GroupId::LexInt: {
            auto first = from_int_cmp(a_, other.a_);
            return first != 0 ? first : from_int_cmp(b_, other.b_);
        }
    }
    throw std::logic_error("unknown group");
}

std::optional<GroupElement> GroupElement::try_halve() const {
    switch (group_) {
        case GroupId::Int:
            if (!is_even(a_)) return std::nullopt;
            return integer(a_ / 2);
        case GroupId::Rational:
            return rational(a_, b_ * 2);
        case GroupId::Dyadic:
            return dyadic(a_, k_ + 1);
        case GroupId::Triadic:
            if (!is_even(a_)) return std::nullopt;
            return triadic(a_ / 2, k_);
        case GroupId::ZSqrt2:
            if (!is_even(a_) || !is_even(b_)) return std::nullopt;
            return zsqrt2(a_ / 2, b_ / 2);
        case GroupId::LexInt:
            if (!is_even(a_) || !is_even(b_)) return std::nullopt;
            return lex_int(a_ / 2, b_ / 2);
    }
    throw std::logic_error("unknown group");
}

const BigInt& GroupElement::int_value() const {
    if (group_ != GroupId::Int) throw std::domain_error("int_value: not an int element");
    return a_;
}

const BigInt& GroupElement::num() const {
    if (group_ != GroupId::Rational && group_ != GroupId::Dyadic && group_ != GroupId::Triadic)
        throw std::domain_error("num: element has no numerator");
    return a_;
}

const BigInt& GroupElement::den() const {
    if (group_ != GroupId::Rational) throw std::domain_error("den: not a rational element");
    return b_;
}

unsigned GroupElement::exponent() const {
    if (group_ != GroupId::Dyadic && group_ != GroupId::Triadic)
        throw std::domain_error("exponent: element has no exponent");
    return k_;
}

const BigInt& GroupElement::coeff_unit() const {
    if (group_ != GroupId::ZSqrt2) throw std::domain_error("coeff_unit: not a zsqrt2 element");
    return a_;
}

const BigInt& GroupElement::coeff_sqrt2() const {
    if (group_ != GroupId::ZSqrt2) throw std::domain_error("coeff_sqrt2: not a zsqrt2 element");
    return b_;
}

const BigInt& GroupElement::lex_first() const {
    if (group_ != GroupId::LexInt) throw std::domain_error("lex_first: not a lex-int element");
    return a_;
}

const BigInt& GroupElement::lex_second() const {
    if (group_ != GroupId::LexInt) throw std::domain_error("lex_second: not a lex-int element");
    return b_;
}

std::optional<GroupElement> max_half(const GroupElement& lambda0) {
    if (lambda0.sign() <= 0)
        throw std::invalid_argument("max_half: lambda0 must be positive, got " +
                                    format_element(lambda0));
    switch (lambda0.group()) {
        case GroupId::Int:
            return GroupElement::integer(lambda0.int_value() / 2);
        case GroupId::Rational:
        case GroupId::Dyadic:
            return lambda0.try_halve();
        case GroupId::Triadic:
            return lambda0.try_halve();  // none exactly when the numerator is odd
        case GroupId::ZSqrt2:
            return lambda0.try_halve();  // none unless both coefficients are even
        case GroupId::LexInt: {
            const BigInt& x = lambda0.lex_first();
            const BigInt& y = lambda0.lex_second();
            if ((x & 1) != 0) return std::nullopt;  // ((x-1)/2, m) is in S for every m
            return GroupElement::lex_int(x / 2, floor_div(y, 2));
        }
    }
    throw std::logic_error("unknown group");
}

namespace {

class Cursor {
public:
    Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw parse_error(std::string("expected ") + what, pos_);
    }

    BigInt signed_int() {
        std::size_t start = pos_;
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected digit", pos_);
        BigInt v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        (void)start;
        return neg ? BigInt(-v) : v;
    }

    unsigned unsigned_int() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected digit", pos_);
        unsigned long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > 1u << 24) throw parse_error("exponent too large", pos_);
            ++pos_;
        }
        return static_cast<unsigned>(v);
    }

    void finish() {
        if (!done()) throw parse_error("trailing characters", pos_);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

GroupElement parse_power_denominator(Cursor& c, char base) {
    BigInt p = c.signed_int();
    unsigned k = 0;
    if (c.eat('/')) {
        c.expect(base, base == '2' ? "'2'" : "'3'");
        c.expect('^', "'^'");
        k = c.unsigned_int();
    }
    c.finish();
    return base == '2' ? GroupElement::dyadic(std::move(p), k)
                       : GroupElement::triadic(std::move(p), k);
}

}  // namespace

GroupElement parse_element(GroupId g, std::string_view text) {
    Cursor c(text);
    switch (g) {
        case GroupId::Int: {
            BigInt v = c.signed_int();
            c.finish();
            return GroupElement::integer(std::move(v));
        }
        case GroupId::Rational: {
            BigInt p = c.signed_int();
            BigInt q = 1;
            if (c.eat('/')) {
                std::size_t qpos = c.pos();
                q = c.signed_int();
                if (q == 0) throw parse_error("zero denominator", qpos);
            }
            c.finish();
            return GroupElement::rational(std::move(p), std::move(q));
        }
        case GroupId::Dyadic:
            return parse_power_denominator(c, '2');
        case GroupId::Triadic:
            return parse_power_denominator(c, '3');
        case GroupId::ZSqrt2: {
            BigInt a = c.signed_int();
            c.expect(',', "','");
            BigInt b = c.signed_int();
            c.finish();
            return GroupElement::zsqrt2(std::move(a), std::move(b));
        }
        case GroupId::LexInt: {
            BigInt x = c.signed_int();
            c.expect(':', "':'");
            BigInt y = c.signed_int();
            c.finish();
            return GroupElement::lex_int(std::move(x), std::move(y));
        }
    }
    throw std::logic_error("unknown group");
}

std::string format_element(const GroupElement& v) {
    switch (v.group()) {
        case GroupId::Int:
            return v.int_value().str();
        case GroupId::Rational:
            if (v.den() == 1) return v.num().str();
            return v.num().str() + "/" + v.den().str();
        case GroupId::Dyadic:
            if (v.exponent() == 0) return v.num().str();
            return v.num().str() + "/2^" + std::to_string(v.exponent());
        case GroupId::Triadic:
            if (v.exponent() == 0) return v.num().str();
            return v.num().str() + "/3^" + std::to_string(v.exponent());
        case GroupId::ZSqrt2:
            return v.coeff_unit().str() + "," + v.coeff_sqrt2().str();
        case GroupId::LexInt:
            return v.lex_first().str() + ":" + v.lex_second().str();
    }
    throw std::logic_error("unknown group");
}

GroupElement rat_mul(const GroupElement& u, const GroupElement& v) {
    if (u.group() != GroupId::Rational || v.group() != GroupId::Rational)
        throw std::domain_error("rat_mul: rational elements required");
    return GroupElement::rational(u.num() * v.num(), u.den() * v.den());
}

GroupElement rat_div(const GroupElement& u, const GroupElement& v) {
    if (u.group() != GroupId::Rational || v.group() != GroupId::Rational)
        throw std::domain_error("rat_div: rational elements required");
    if (v.is_zero()) throw std::domain_error("rat_div: division by zero");
    return GroupElement::rational(u.num() * v.den(), u.den() * v.num());
}

}  // namespace ltree
