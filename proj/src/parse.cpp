#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "apolar/polynomial.hpp"

namespace apolar {

namespace {

std::string normalize(const std::string& text)
{
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char ch = static_cast<unsigned char>(text[i]);
        // U+2212 MINUS SIGN shows up when formulas are pasted from typeset text.
        if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
            continue;
        }
        if (ch == '_' || ch == '{' || ch == '}' || std::isspace(ch)) continue;
        out.push_back(static_cast<char>(ch));
    }
    return out;
}

class Parser {
public:
    Parser(const RingPtr& ring, std::string text) : ring_(ring), s_(std::move(text))
    {
        for (std::size_t i = 0; i < ring->nvars(); ++i) names_.push_back(i);
        std::sort(names_.begin(), names_.end(), [&](std::size_t a, std::size_t b) {
            return ring->name(a).size() > ring->name(b).size();
        });
    }

    Polynomial parse()
    {
        Polynomial p = expr();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw std::invalid_argument("parse_polynomial: " + why + " at offset " + std::to_string(pos_) +
                                    " in \"" + s_ + "\"");
    }

    bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

    bool starts_factor() const
    {
        if (pos_ >= s_.size()) return false;
        unsigned char c = static_cast<unsigned char>(s_[pos_]);
        return std::isalnum(c) || c == '(';
    }

    Polynomial expr()
    {
        Polynomial acc(ring_);
        bool neg = false;
        if (at('+')) ++pos_;
        else if (at('-')) { neg = true; ++pos_; }
        Polynomial t = term();
        acc = neg ? -t : t;
        while (at('+') || at('-')) {
            bool minus = s_[pos_] == '-';
            ++pos_;
            Polynomial u = term();
            if (minus) acc -= u;
            else acc += u;
        }
        return acc;
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        for (;;) {
            if (at('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (at('/')) {
                // only division by a nonzero constant, e.g. (-2a12+a23)/5
                ++pos_;
                Polynomial d = factor();
                if (d.is_zero() || d.degree() != 0) fail("can only divide by a nonzero constant");
                acc = acc.scaled(ring_->field().inv(d.leading_coeff()));
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor()
    {
        Polynomial base = primary();
        if (at('^')) {
            ++pos_;
            unsigned long e = integer();
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    unsigned long integer()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stoul(s_.substr(start, pos_ - start));
    }

    Polynomial primary()
    {
        if (at('(')) {
            ++pos_;
            Polynomial p = expr();
            if (!at(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class num(s_.substr(start, pos_ - start));
            mpz_class den(1);
            if (at('/')) {
                ++pos_;
                std::size_t ds = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (ds == pos_) fail("expected a denominator");
                den = mpz_class(s_.substr(ds, pos_ - ds));
                if (den == 0) fail("zero denominator");
            }
            Scalar v(num, den);
            v.canonicalize();
            return Polynomial::constant(ring_, v);
        }
        for (std::size_t i : names_) {
            const std::string& n = ring_->name(i);
            if (s_.compare(pos_, n.size(), n) == 0) {
                pos_ += n.size();
                return Polynomial::variable(ring_, i);
            }
        }
        fail("unknown variable");
    }

    RingPtr ring_;
    std::string s_;
    std::size_t pos_ = 0;
    std::vector<std::size_t> names_;
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text)
{
    std::string s = normalize(text);
    if (s.empty()) throw std::invalid_argument("parse_polynomial: empty input");
    return Parser(ring, s).parse();
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, const std::string& text)
{
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    auto flush = [&]() {
        std::string n = normalize(cur);
        if (!n.empty()) items.push_back(cur);
        cur.clear();
    };
    bool comment = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (comment) {
            if (c == '\n') comment = false;
            else continue;
        }
        if (c == '#') {
            comment = true;
            continue;
        }
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == ',' || c == ';')) {
            flush();
            continue;
        }
        if (depth == 0 && c == '\n') {
            // A line that ends in an operator continues on the next line.
            std::string n = normalize(cur);
            if (!n.empty() && (n.back() == '+' || n.back() == '-' || n.back() == '*')) continue;
            flush();
            continue;
        }
        cur.push_back(c);
    }
    flush();
    std::vector<Polynomial> out;
    out.reserve(items.size());
    for (const auto& s : items) out.push_back(parse_polynomial(ring, s));
    return out;
}

} // namespace apolar
