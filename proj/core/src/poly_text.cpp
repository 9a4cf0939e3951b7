#include "hedet/poly_text.hpp"

#include <cctype>

#include "hedet/errors.hpp"

namespace hedet {

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        Rational mag = t.coeff;
        bool negative = sgn(t.coeff) < 0;
        if (negative) mag = -mag;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (t.mono.is_one()) {
            out += mag.get_str();
            continue;
        }
        bool printed = false;
        if (mag != 1) {
            out += mag.get_str();
            printed = true;
        }
        for (const auto& e : t.mono.entries()) {
            if (printed) out += '*';
            out += e.first.name();
            if (e.second > 1) {
                out += '^';
                out += std::to_string(e.second);
            }
            printed = true;
        }
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Polynomial parse() {
        skip_ws();
        if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
        std::vector<Term> terms;
        int sign = read_optional_sign();
        for (;;) {
            terms.push_back(read_term(sign));
            skip_ws();
            if (pos_ == s_.size()) break;
            sign = read_required_sign();
        }
        return Polynomial::from_terms(std::move(terms));
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    int read_optional_sign() {
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            int sign = s_[pos_] == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
            return sign;
        }
        return 1;
    }

    int read_required_sign() {
        if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-'))
            throw ParseError("expected '+' or '-' between terms", pos_);
        int sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
        return sign;
    }

    bool at_digit() const {
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    bool at_letter() const {
        return pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]));
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (at_digit()) ++pos_;
        if (pos_ == start) throw ParseError("expected a number", pos_);
        return std::string(s_.substr(start, pos_ - start));
    }

    Rational read_coeff() {
        std::string num = read_digits();
        std::string den = "1";
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            den = read_digits();
        }
        mpz_class dz(den);
        if (dz == 0) throw ParseError("zero denominator", pos_);
        Rational r{mpz_class(num), dz};
        r.canonicalize();
        return r;
    }

    Monomial::Entry read_factor() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        auto var = Variable::parse(s_.substr(start, pos_ - start));
        if (!var) throw ParseError("unknown variable", start);
        int exp = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            std::string digits = read_digits();
            try {
                exp = std::stoi(digits);
            } catch (...) {
                throw ParseError("exponent out of range", pos_);
            }
            if (exp < 1) throw ParseError("exponent must be positive", pos_);
        }
        return {*var, exp};
    }

    Term read_term(int sign) {
        Rational coeff = 1;
        std::vector<Monomial::Entry> entries;
        if (at_digit()) {
            coeff = read_coeff();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                entries.push_back(read_factor());
            }
        } else if (at_letter()) {
            entries.push_back(read_factor());
        } else {
            throw ParseError("expected a term", pos_);
        }
        while (pos_ < s_.size() && s_[pos_] == '*') {
            ++pos_;
            entries.push_back(read_factor());
        }
        if (sign < 0) coeff = -coeff;
        return {Monomial::from_pairs(entries), std::move(coeff)};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::vector<Polynomial> parse_polynomial_lines(std::string_view text) {
    std::vector<Polynomial> out;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t eol = text.find('\n', line_start);
        std::string_view line = text.substr(
            line_start, eol == std::string_view::npos ? text.size() - line_start
                                                      : eol - line_start);
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin != std::string_view::npos && line[begin] != '#') {
            try {
                out.push_back(parse_polynomial(line));
            } catch (const ParseError& err) {
                throw ParseError(err.what() + std::string(" in line starting at byte ") +
                                     std::to_string(line_start),
                                 line_start + err.offset);
            }
        }
        if (eol == std::string_view::npos) break;
        line_start = eol + 1;
    }
    return out;
}

} // namespace hedet
