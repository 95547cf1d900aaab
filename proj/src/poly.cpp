#include "gms/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gms {

namespace {

std::string term_to_string(const Monomial& m, const Rat& c, bool leading) {
    std::ostringstream os;
    Rat a = c < 0 ? Rat(-c) : c;
    if (c < 0) os << (leading ? "-" : " - ");
    else if (!leading) os << " + ";

    bool constant = (m[0] == 0 && m[1] == 0 && m[2] == 0);
    bool unit = (a == 1);
    if (constant || !unit) os << rat_to_string(a);
    if (!constant) {
        if (!unit) os << " * ";
        bool first = true;
        for (int i = 0; i < 3; ++i) {
            int e = m[static_cast<size_t>(i)];
            if (e == 0) continue;
            if (!first) os << ' ';
            os << 'x' << (i + 1);
            if (e != 1) os << '^' << e;
            first = false;
        }
    }
    return os.str();
}

}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool leading = true;
    for (const auto& [m, c] : terms_) {
        os << term_to_string(m, c, leading);
        leading = false;
    }
    return os.str();
}

// Recursive-descent-free scanner: split on top-level +/-, then read an
// optional rational coefficient followed by variable powers.  Accepts
// "3/2 * x1^2 x3", "x2 x3", "x2x3", "-x1", "7".
Poly Poly::parse(const std::string& text) {
    Poly result;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };

    skip_ws();
    if (i == n) throw std::invalid_argument("empty polynomial text");
    bool first = true;
    while (i < n) {
        int sign = 1;
        skip_ws();
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in polynomial at position " +
                                        std::to_string(i));
        }
        skip_ws();

        // optional coefficient
        Rat coeff(1);
        bool saw_coeff = false;
        if (i < n && (std::isdigit(static_cast<unsigned char>(text[i])))) {
            size_t start = i;
            while (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
                ++i;
            coeff = rat_from_string(text.substr(start, i - start));
            saw_coeff = true;
        }
        skip_ws();
        if (i < n && text[i] == '*') {
            ++i;
            skip_ws();
        }

        // variable powers
        Monomial mono{0, 0, 0};
        bool saw_var = false;
        while (i < n && (text[i] == 'x' || text[i] == '*' ||
                         std::isspace(static_cast<unsigned char>(text[i])))) {
            if (text[i] == '*' || std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            ++i;  // consume 'x'
            if (i >= n || text[i] < '1' || text[i] > '3')
                throw std::invalid_argument("expected variable index 1..3 after 'x'");
            int var = text[i] - '1';
            ++i;
            int exp = 1;
            if (i < n && text[i] == '^') {
                ++i;
                if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("expected exponent after '^'");
                exp = 0;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    exp = exp * 10 + (text[i] - '0');
                    ++i;
                }
            }
            mono[static_cast<size_t>(var)] += exp;
            saw_var = true;
        }
        if (!saw_coeff && !saw_var)
            throw std::invalid_argument("malformed term in polynomial at position " +
                                        std::to_string(i));
        result.add_term(mono, sign < 0 ? Rat(-coeff) : coeff);
        first = false;
        skip_ws();
    }
    return result;
}

}  // namespace gms
