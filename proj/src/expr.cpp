#include "mod3/expr.hpp"

#include <cctype>

namespace mod3 {

namespace {

struct Parser {
    std::string_view src;
    std::size_t pos = 0;
    const SpacePresentation& P;

    void skip_space() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    }

    bool at_end() {
        skip_space();
        return pos == src.size();
    }

    char peek() {
        skip_space();
        return pos < src.size() ? src[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in \"" +
                         std::string(src) + "\"");
    }

    // factor := INTEGER | IDENTIFIER
    Element factor() {
        skip_space();
        if (pos == src.size())
            fail("expected a scalar or generator name");
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // reduce as we read so arbitrarily long literals cannot overflow
            long long value = 0;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
                value = (value * 10 + (src[pos++] - '0')) % 3;
            return scale(F3(value), Element::unit());
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() && std::isalnum(static_cast<unsigned char>(src[pos])))
                ++pos;
            std::string_view name = src.substr(start, pos - start);
            auto id = P.find(name);
            if (!id)
                fail("unknown generator '" + std::string(name) + "'");
            return generator_element(P, *id);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    // product := factor ('*' factor)*
    Element product() {
        Element acc = factor();
        while (peek() == '*') {
            ++pos;
            acc = mul(acc, factor(), P);
        }
        return acc;
    }

    // sum := product ('+' product)*
    Element sum() {
        Element acc = product();
        while (peek() == '+') {
            ++pos;
            acc = add(acc, product());
        }
        return acc;
    }
};

}  // namespace

Element parse_element(std::string_view src, const SpacePresentation& P) {
    Parser parser{src, 0, P};
    if (parser.at_end())
        throw ParseError("empty expression");
    Element e = parser.sum();
    if (!parser.at_end())
        parser.fail("trailing input");
    return e;
}

}  // namespace mod3
