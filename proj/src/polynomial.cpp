#include "bratteli/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "bratteli/errors.hpp"

namespace bratteli {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::variable() {
    Poly p;
    p.c_ = {Int(0), Int(1)};
    return p;
}

const Int& Poly::leading() const {
    static const Int zero = 0;
    return c_.empty() ? zero : c_.back();
}

bool Poly::nonnegative_coeffs() const {
    for (const auto& c : c_)
        if (c < 0) return false;
    return true;
}

Int Poly::eval(const Int& n) const {
    Int v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * n + *it;
    return v;
}

Poly Poly::operator+(const Poly& rhs) const {
    std::vector<Int> out(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < c_.size()) out[i] += c_[i];
        if (i < rhs.c_.size()) out[i] += rhs.c_[i];
    }
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
    std::vector<Int> out(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < c_.size()) out[i] += c_[i];
        if (i < rhs.c_.size()) out[i] -= rhs.c_[i];
    }
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
    if (c_.empty() || rhs.c_.empty()) return Poly();
    std::vector<Int> out(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::compose_affine(const Int& a, const Int& b) const {
    // Horner in (a*n + b).
    Poly x;
    x.c_ = {b, a};
    x.trim();
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Poly(*it);
    return acc;
}

int Poly::eventual_sign() const {
    if (c_.empty()) return 0;
    return c_.back() > 0 ? 1 : -1;
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0 || c != 1) os << c.str();
        if (k > 0) {
            if (c != 1) os << "*";
            os << "n";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

// Recursive-descent parser: expr := term (+ term)*, term := factor (* factor)*,
// factor := atom (^ uint)?, atom := uint | 'n' | '(' expr ')'.
struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        raise(ErrorKind::SchemaError,
              "polynomial parse error at offset " + std::to_string(pos) + ": " + what +
                  " in \"" + s + "\"");
    }

    Int parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer literal");
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return Int(s.substr(start, pos - start));
    }

    Poly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression");
        const char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly p = parse_expr();
            if (!eat(')')) fail("missing ')'");
            return p;
        }
        if (c == 'n') {
            ++pos;
            return Poly::variable();
        }
        if (c == '-') raise(ErrorKind::NegativeCoefficient, "negative literal in \"" + s + "\"");
        return Poly(parse_uint());
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        skip_ws();
        if (eat('^')) {
            const Int e = parse_uint();
            if (e > 64) fail("exponent too large");
            Poly acc(Int(1));
            for (Int i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                p = p * parse_factor();
            } else {
                break;
            }
        }
        return p;
    }

    Poly parse_expr() {
        Poly p = parse_term();
        while (true) {
            skip_ws();
            if (eat('+')) {
                p = p + parse_term();
            } else {
                break;
            }
        }
        return p;
    }
};

}  // namespace

Poly Poly::parse(const std::string& expr) {
    Parser parser(expr);
    Poly p = parser.parse_expr();
    parser.skip_ws();
    if (parser.pos != expr.size()) parser.fail("trailing characters");
    if (!p.nonnegative_coeffs())
        raise(ErrorKind::NegativeCoefficient, "expression \"" + expr + "\"");
    return p;
}

bool eventually_leq(const Poly& p, const Poly& q) {
    return (q - p).eventual_sign() >= 0;
}

PolyRatio min_asymptotic(const std::vector<PolyRatio>& candidates) {
    if (candidates.empty()) raise(ErrorKind::InvalidArgument, "no ratio candidates");
    PolyRatio best = candidates.front();
    for (std::size_t k = 1; k < candidates.size(); ++k) {
        // candidates[k] < best eventually  <=>  num_k*den_b - num_b*den_k < 0 eventually
        // (both denominators eventually positive for generator entries).
        const Poly diff = candidates[k].num * best.den - best.num * candidates[k].den;
        if (diff.eventual_sign() < 0) best = candidates[k];
    }
    return best;
}

}  // namespace bratteli
