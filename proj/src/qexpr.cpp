#include "kcrank/qexpr.hpp"

#include <cctype>
#include <sstream>

namespace kcrank {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw SyntaxError(pos, std::string("expected ") + what);
    }

    bool at_uint() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    Integer uint_lit() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos) throw SyntaxError(pos, "expected an unsigned integer");
        return Integer(text.substr(start, pos - start), 10);
    }

    int small_uint(const char* what) {
        Integer v = uint_lit();
        if (!v.fits_sint_p()) throw SyntaxError(pos, std::string(what) + " too large");
        return static_cast<int>(v.get_si());
    }

    int signed_int() {
        skip_ws();
        bool neg = eat('-');
        int v = small_uint("exponent");
        return neg ? -v : v;
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& t) : lex(t) {}

    ExprPtr make(ProductExpr e) { return std::make_shared<const ProductExpr>(std::move(e)); }

    ExprPtr parse_expr() {
        AddNode add;
        add.terms.emplace_back(+1, parse_term());
        while (true) {
            char c = lex.peek();
            if (c == '+' || c == '-') {
                ++lex.pos;
                add.terms.emplace_back(c == '+' ? +1 : -1, parse_term());
            } else {
                break;
            }
        }
        if (add.terms.size() == 1) return add.terms[0].second;
        return make({std::move(add)});
    }

    ExprPtr parse_term() {
        ExprPtr cur = parse_factor();
        while (true) {
            char c = lex.peek();
            if (c == '*') {
                ++lex.pos;
                ExprPtr rhs = parse_factor();
                if (const auto* m = std::get_if<MulNode>(&cur->node)) {
                    MulNode grown = *m;
                    grown.factors.push_back(std::move(rhs));
                    cur = make({std::move(grown)});
                } else {
                    cur = make({MulNode{{cur, std::move(rhs)}}});
                }
            } else if (c == '/') {
                ++lex.pos;
                cur = make({DivNode{cur, parse_factor()}});
            } else {
                break;
            }
        }
        return cur;
    }

    ExprPtr parse_factor() {
        ExprPtr atom = parse_atom();
        if (lex.peek() == '^') {
            ++lex.pos;
            int e = lex.signed_int();
            return make({PowerNode{std::move(atom), e}});
        }
        return atom;
    }

    ExprPtr parse_atom() {
        char c = lex.peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return make({IntLiteral{lex.uint_lit()}});
        if (c == 'J') {
            ++lex.pos;
            lex.expect('(', "'(' after J");
            int s = lex.small_uint("J modulus");
            std::optional<int> t;
            if (lex.eat(',')) t = lex.small_uint("J modulus");
            lex.expect(')', "')'");
            return make({JTermNode{s, t}});
        }
        if (c == '(') {
            ++lex.pos;
            char inner = lex.peek();
            if (inner == '-' || inner == 'q') return parse_poch();
            ExprPtr e = parse_expr();
            lex.expect(')', "')'");
            return e;
        }
        throw SyntaxError(lex.pos,
                          "expected a factor (unsigned integer, '(', Pochhammer symbol, or J term)");
    }

    // the opening '(' is already consumed
    ExprPtr parse_poch() {
        int sign = lex.eat('-') ? -1 : +1;
        lex.expect('q', "'q'");
        int a = 1;
        if (lex.eat('^')) a = lex.small_uint("Pochhammer offset");
        lex.expect(';', "';'");
        lex.expect('q', "'q'");
        int b = 1;
        if (lex.eat('^')) b = lex.small_uint("Pochhammer step");
        lex.expect(')', "')'");
        if (a < 1) throw SyntaxError(lex.pos, "Pochhammer offset must be >= 1");
        if (b < 1) throw SyntaxError(lex.pos, "Pochhammer step must be >= 1");
        return make({PochTerm{sign, a, b}});
    }

    ExprPtr run() {
        ExprPtr e = parse_expr();
        if (lex.peek() != '\0') throw SyntaxError(lex.pos, "expected end of input");
        return e;
    }
};

enum class Prec { Add = 0, Mul = 1, Pow = 2, Atom = 3 };

Prec precedence(const ProductExpr& e) {
    return std::visit(
        [](const auto& n) -> Prec {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, AddNode>) return Prec::Add;
            if constexpr (std::is_same_v<T, MulNode> || std::is_same_v<T, DivNode>)
                return Prec::Mul;
            if constexpr (std::is_same_v<T, PowerNode>) return Prec::Pow;
            return Prec::Atom;
        },
        e.node);
}

void print_rec(const ProductExpr& e, std::ostringstream& out, Prec context) {
    bool parens = precedence(e) < context;
    if (parens) out << '(';
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IntLiteral>) {
                out << n.value.get_str();
            } else if constexpr (std::is_same_v<T, PochTerm>) {
                out << '(' << (n.sign < 0 ? "-" : "") << 'q';
                if (n.a != 1) out << '^' << n.a;
                out << ";q";
                if (n.b != 1) out << '^' << n.b;
                out << ')';
            } else if constexpr (std::is_same_v<T, JTermNode>) {
                out << "J(" << n.s;
                if (n.t) out << ',' << *n.t;
                out << ')';
            } else if constexpr (std::is_same_v<T, PowerNode>) {
                print_rec(*n.base, out, Prec::Atom);
                out << '^' << n.exponent;
            } else if constexpr (std::is_same_v<T, MulNode>) {
                for (std::size_t i = 0; i < n.factors.size(); ++i) {
                    if (i) out << '*';
                    print_rec(*n.factors[i], out, Prec::Pow);
                }
            } else if constexpr (std::is_same_v<T, DivNode>) {
                print_rec(*n.num, out, Prec::Mul);
                out << '/';
                print_rec(*n.den, out, Prec::Pow);
            } else if constexpr (std::is_same_v<T, AddNode>) {
                for (std::size_t i = 0; i < n.terms.size(); ++i) {
                    if (i || n.terms[i].first < 0) out << (n.terms[i].first < 0 ? '-' : '+');
                    print_rec(*n.terms[i].second, out, Prec::Mul);
                }
            }
        },
        e.node);
    if (parens) out << ')';
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

QSeries evaluate(const ProductExpr& expr, int order) {
    return std::visit(
        [order](const auto& n) -> QSeries {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IntLiteral>) {
                return QSeries::unit(order) * n.value;
            } else if constexpr (std::is_same_v<T, PochTerm>) {
                return pochhammer({n.sign, n.a, n.b, 1}, order);
            } else if constexpr (std::is_same_v<T, JTermNode>) {
                return n.t ? j_product(n.s, *n.t, order) : j_product(n.s, order);
            } else if constexpr (std::is_same_v<T, PowerNode>) {
                return power(evaluate(*n.base, order), n.exponent);
            } else if constexpr (std::is_same_v<T, MulNode>) {
                QSeries acc = evaluate(*n.factors[0], order);
                for (std::size_t i = 1; i < n.factors.size(); ++i)
                    acc = acc * evaluate(*n.factors[i], order);
                return acc;
            } else if constexpr (std::is_same_v<T, DivNode>) {
                QSeries num = evaluate(*n.num, order);
                if (const auto* lit = std::get_if<IntLiteral>(&n.den->node))
                    return int_divide(num, lit->value);
                return num * invert(evaluate(*n.den, order));
            } else {  // AddNode
                QSeries acc(order);
                for (const auto& [sign, term] : n.terms) {
                    QSeries t = evaluate(*term, order);
                    acc = sign > 0 ? acc + t : acc - t;
                }
                return acc;
            }
        },
        expr.node);
}

std::string print(const ProductExpr& expr) {
    std::ostringstream out;
    print_rec(expr, out, Prec::Add);
    return out.str();
}

bool structurally_equal(const ProductExpr& a, const ProductExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, IntLiteral>) {
                return na.value == nb.value;
            } else if constexpr (std::is_same_v<T, PochTerm>) {
                return na.sign == nb.sign && na.a == nb.a && na.b == nb.b;
            } else if constexpr (std::is_same_v<T, JTermNode>) {
                return na.s == nb.s && na.t == nb.t;
            } else if constexpr (std::is_same_v<T, PowerNode>) {
                return na.exponent == nb.exponent && structurally_equal(*na.base, *nb.base);
            } else if constexpr (std::is_same_v<T, MulNode>) {
                if (na.factors.size() != nb.factors.size()) return false;
                for (std::size_t i = 0; i < na.factors.size(); ++i)
                    if (!structurally_equal(*na.factors[i], *nb.factors[i])) return false;
                return true;
            } else if constexpr (std::is_same_v<T, DivNode>) {
                return structurally_equal(*na.num, *nb.num) &&
                       structurally_equal(*na.den, *nb.den);
            } else {  // AddNode
                if (na.terms.size() != nb.terms.size()) return false;
                for (std::size_t i = 0; i < na.terms.size(); ++i)
                    if (na.terms[i].first != nb.terms[i].first ||
                        !structurally_equal(*na.terms[i].second, *nb.terms[i].second))
                        return false;
                return true;
            }
        },
        a.node);
}

}  // namespace kcrank
