#include "ascart/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ascart {

FpPoly::FpPoly(PrimeModulus p, std::vector<Residue> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (Residue& v : c_) v = p_.reduce(v);
    trim();
}

FpPoly FpPoly::constant(PrimeModulus p, std::int64_t c) {
    FpPoly out(p);
    Residue r = p.reduce(c);
    if (r != 0) out.c_.push_back(r);
    return out;
}

FpPoly FpPoly::monomial(PrimeModulus p, std::int64_t c, std::size_t e) {
    FpPoly out(p);
    Residue r = p.reduce(c);
    if (r != 0) {
        out.c_.assign(e + 1, 0);
        out.c_[e] = r;
    }
    return out;
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& rhs) const {
    check_modulus(rhs);
    FpPoly out(p_);
    out.c_.resize(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = p_.add(coeff(i), rhs.coeff(i));
    out.trim();
    return out;
}

FpPoly FpPoly::operator-(const FpPoly& rhs) const {
    check_modulus(rhs);
    FpPoly out(p_);
    out.c_.resize(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = p_.sub(coeff(i), rhs.coeff(i));
    out.trim();
    return out;
}

FpPoly FpPoly::operator-() const {
    FpPoly out(p_);
    out.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = p_.neg(c_[i]);
    return out;
}

FpPoly FpPoly::operator*(const FpPoly& rhs) const {
    check_modulus(rhs);
    if (is_zero() || rhs.is_zero()) return FpPoly(p_);
    FpPoly out(p_);
    out.c_.assign(c_.size() + rhs.c_.size() - 1, 0);
    const std::int64_t p = p_.value();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const Residue a = c_[i];
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            out.c_[i + j] = (out.c_[i + j] + a * rhs.c_[j]) % p;
        }
    }
    out.trim();
    return out;
}

FpPoly FpPoly::scaled(Residue u) const {
    FpPoly out(p_);
    u = p_.reduce(u);
    if (u == 0) return out;
    out.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = p_.mul(c_[i], u);
    out.trim();
    return out;
}

FpPoly FpPoly::shifted(std::size_t n) const {
    if (is_zero()) return FpPoly(p_);
    FpPoly out(p_);
    out.c_.assign(c_.size() + n, 0);
    std::copy(c_.begin(), c_.end(), out.c_.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
}

FpPoly FpPoly::with_coeff(std::size_t e, std::int64_t c) const {
    FpPoly out = *this;
    if (out.c_.size() <= e) out.c_.resize(e + 1, 0);
    out.c_[e] = p_.reduce(c);
    out.trim();
    return out;
}

FpPoly FpPoly::scale_arg(Residue c) const {
    c = p_.reduce(c);
    FpPoly out(p_);
    out.c_.resize(c_.size());
    Residue ce = 1;
    for (std::size_t e = 0; e < c_.size(); ++e) {
        out.c_[e] = p_.mul(c_[e], ce);
        ce = p_.mul(ce, c);
    }
    out.trim();
    return out;
}

FpPoly FpPoly::frobenius() const {
    if (is_zero()) return FpPoly(p_);
    FpPoly out(p_);
    const std::size_t p = static_cast<std::size_t>(p_.value());
    out.c_.assign((c_.size() - 1) * p + 1, 0);
    for (std::size_t e = 0; e < c_.size(); ++e) out.c_[e * p] = c_[e];
    return out;
}

FpPoly FpPoly::derivative() const {
    FpPoly out(p_);
    if (c_.size() <= 1) return out;
    out.c_.resize(c_.size() - 1);
    for (std::size_t e = 1; e < c_.size(); ++e) {
        out.c_[e - 1] = p_.mul(c_[e], p_.reduce(static_cast<std::int64_t>(e)));
    }
    out.trim();
    return out;
}

Residue FpPoly::eval(Residue x0) const noexcept {
    Residue acc = 0;
    x0 = p_.reduce(x0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = p_.add(p_.mul(acc, x0), c_[i]);
    return acc;
}

std::string FpPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c_[i];
        } else {
            if (c_[i] != 1) os << c_[i] << "*";
            os << "x";
            if (i != 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

constexpr std::size_t kMaxExponent = 20'000'000;

// Replaces the UTF-8 minus sign (U+2212) with ASCII '-' and drops whitespace.
std::string sanitize(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char ch = static_cast<unsigned char>(text[i]);
        if (ch == 0xE2 && i + 2 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
            continue;
        }
        if (!std::isspace(ch)) out.push_back(static_cast<char>(ch));
    }
    return out;
}

// Parses a decimal integer, reducing digit-by-digit so arbitrarily long
// coefficients never overflow.
Residue parse_coeff_mod(const std::string& s, std::size_t& pos, PrimeModulus p) {
    Residue acc = 0;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        acc = p.reduce(acc * 10 + (s[pos] - '0'));
        ++pos;
    }
    if (pos == start) throw PolyParseError("expected a number at position " + std::to_string(start));
    return acc;
}

std::size_t parse_exponent(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    unsigned long long acc = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        acc = acc * 10 + static_cast<unsigned long long>(s[pos] - '0');
        if (acc > kMaxExponent) throw PolyParseError("exponent too large");
        ++pos;
    }
    if (pos == start) throw PolyParseError("expected an exponent at position " + std::to_string(start));
    return static_cast<std::size_t>(acc);
}

FpPoly parse_coeff_list(PrimeModulus p, const std::string& s) {
    if (s.back() != ']') throw PolyParseError("unterminated coefficient list");
    std::vector<Residue> coeffs;
    std::size_t pos = 1;
    const std::size_t end = s.size() - 1;
    while (pos < end) {
        bool neg = false;
        if (s[pos] == '-') {
            neg = true;
            ++pos;
        } else if (s[pos] == '+') {
            ++pos;
        }
        Residue c = parse_coeff_mod(s, pos, p);
        coeffs.push_back(neg ? p.neg(c) : c);
        if (pos < end) {
            if (s[pos] != ',') throw PolyParseError("expected ',' in coefficient list");
            ++pos;
        }
    }
    return FpPoly(p, std::move(coeffs));
}

}  // namespace

FpPoly FpPoly::parse(PrimeModulus p, const std::string& text) {
    const std::string s = sanitize(text);
    if (s.empty()) throw PolyParseError("empty polynomial");
    if (s.front() == '[') return parse_coeff_list(p, s);

    std::map<std::size_t, Residue> terms;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool neg = false;
        if (s[pos] == '+') {
            ++pos;
        } else if (s[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= s.size()) throw PolyParseError("dangling sign");

        Residue c = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            c = parse_coeff_mod(s, pos, p);
            saw_coeff = true;
        }
        bool saw_star = false;
        if (saw_coeff && pos < s.size() && s[pos] == '*') {
            saw_star = true;
            ++pos;
        }

        std::size_t e = 0;
        if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
            ++pos;
            e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = parse_exponent(s, pos);
            }
        } else if (saw_star || !saw_coeff) {
            throw PolyParseError("expected 'x' at position " + std::to_string(pos));
        }

        if (neg) c = p.neg(c);
        auto [it, inserted] = terms.emplace(e, c);
        if (!inserted) it->second = p.add(it->second, c);

        if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
            throw PolyParseError("expected '+' or '-' at position " + std::to_string(pos));
    }

    std::vector<Residue> coeffs;
    if (!terms.empty()) {
        coeffs.assign(terms.rbegin()->first + 1, 0);
        for (auto [e, c] : terms) coeffs[e] = c;
    }
    return FpPoly(p, std::move(coeffs));
}

std::vector<FpPoly> poly_pow_table(const FpPoly& f, std::size_t m) {
    std::vector<FpPoly> table;
    table.reserve(m + 1);
    table.push_back(FpPoly::constant(f.modulus(), 1));
    for (std::size_t k = 1; k <= m; ++k) table.push_back(table.back() * f);
    return table;
}

}  // namespace ascart
