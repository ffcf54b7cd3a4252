#include "stg/rational.hpp"

#include <cctype>
#include <ostream>

namespace stg {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') i = 1;
    bool digits = false, slash = false;
    for (std::size_t j = i; j < text.size(); ++j) {
        char c = text[j];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = true;
        } else if (c == '/' && !slash && digits && j + 1 < text.size()) {
            slash = true;
        } else {
            throw ParseError("bad rational literal '" + text + "'");
        }
    }
    if (!digits) throw ParseError("bad rational literal '" + text + "'");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

} // namespace stg
