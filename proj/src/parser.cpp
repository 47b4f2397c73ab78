#include "jetspace/parser.hpp"

#include <cctype>
#include <cstdint>

#include "jetspace/errors.hpp"

namespace jetspace {

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    }

    Polynomial parse_expression() {
        skip_space();
        bool negate = false;
        if (consume('-')) {
            negate = true;
        } else {
            consume('+');
        }
        Polynomial sum = parse_term();
        if (negate) sum = -sum;
        while (true) {
            if (consume('+')) {
                sum += parse_term();
            } else if (consume('-')) {
                sum -= parse_term();
            } else {
                return sum;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial product = parse_factor();
        while (true) {
            if (consume('*')) {
                product *= parse_factor();
            } else if (peek() == '/') {
                std::size_t slash_pos = pos;
                ++pos;
                Polynomial denom = parse_factor();
                if (!denom.is_constant()) throw parse_error("division by a non-constant", slash_pos);
                GaussianRational d = denom.constant_value();
                if (d.is_zero()) throw parse_error("division by zero", slash_pos);
                product *= d.inverse();
            } else {
                return product;
            }
        }
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        while (peek() == '^') {
            ++pos;
            base = base.pow(parse_exponent());
        }
        return base;
    }

    std::uint32_t parse_exponent() {
        skip_space();
        std::size_t start = pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw parse_error("expected a nonnegative integer exponent", pos);
        std::uint64_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (value > 0xffffffffULL) throw parse_error("exponent too large", start);
            ++pos;
        }
        return static_cast<std::uint32_t>(value);
    }

    Polynomial parse_base() {
        skip_space();
        if (pos >= text.size()) throw parse_error("unexpected end of input", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expression();
            expect(')');
            return inner;
        }
        if (c == '-' || c == '+') {
            bool negate = c == '-';
            ++pos;
            Polynomial inner = parse_factor();
            return negate ? -inner : inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_integer();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
        throw parse_error("unexpected character", pos);
    }

    Polynomial parse_integer() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return Polynomial::constant(
            GaussianRational(rational_from_string(text.substr(start, pos - start))));
    }

    Polynomial parse_identifier() {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        if (name == "i") return Polynomial::constant(GaussianRational::imaginary_unit());
        return Polynomial::variable(classify(name, start));
    }

    VariableId classify(const std::string& name, std::size_t start) {
        if (name[0] == 'a' || name[0] == 'b' || name[0] == 'c') {
            std::size_t i = 1;
            while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
            bool has_primary = i > 1;
            if (has_primary && i == name.size()) {
                Family f = name[0] == 'a' ? Family::a : name[0] == 'b' ? Family::b : Family::c;
                return jet_variable(f, parse_index(name.substr(1), start));
            }
            if (has_primary && name[i] == '_' && i + 1 < name.size()) {
                std::size_t j = i + 1;
                while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
                if (j == name.size()) {
                    Family f = name[0] == 'a' ? Family::a : name[0] == 'b' ? Family::b : Family::c;
                    return wedge_variable(f, parse_index(name.substr(1, i - 1), start),
                                          parse_index(name.substr(i + 1), start));
                }
            }
        }
        return aux_variable(name);
    }

    std::uint32_t parse_index(const std::string& digits, std::size_t start) {
        std::uint64_t value = 0;
        for (char d : digits) {
            value = value * 10 + static_cast<std::uint64_t>(d - '0');
            if (value > 0x3fffffffULL) throw parse_error("variable index too large", start);
        }
        return static_cast<std::uint32_t>(value);
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
    Parser parser(text);
    Polynomial p = parser.parse_expression();
    if (!parser.at_end()) throw parse_error("trailing input", parser.pos);
    return p;
}

GaussianRational parse_constant(const std::string& text) {
    Polynomial p = parse_polynomial(text);
    if (!p.is_constant()) throw parse_error("expected a constant expression", 0);
    return p.constant_value();
}

GaussianRational gq_from_string(const std::string& text) { return parse_constant(text); }

}  // namespace jetspace
