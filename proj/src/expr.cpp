#include "lisom/expr.hpp"

#include <cctype>
#include <memory>

namespace lisom {

namespace {

struct Node {
    enum class Kind { Int, Var, Phi, Add, Sub, Mul, Pow };
    Kind kind;
    BigInt value;        // Int
    unsigned arg = 0;    // Phi conductor, Pow exponent
    bool wrapped = false; // came from '(' Expr ')'
    std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail_here("trailing input");
        return e;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail_here(const std::string& what) {
        throw Error(Errc::ParseError, what, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    unsigned uint_lit() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail_here("expected an unsigned integer");
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > 1'000'000'000ul) fail_here("integer too large");
            ++pos_;
        }
        return static_cast<unsigned>(v);
    }

    NodePtr expr() {
        NodePtr acc = term();
        for (;;) {
            if (eat('+')) {
                NodePtr n = std::make_unique<Node>();
                n->kind = Node::Kind::Add;
                n->lhs = std::move(acc);
                n->rhs = term();
                acc = std::move(n);
            } else if (eat('-')) {
                NodePtr n = std::make_unique<Node>();
                n->kind = Node::Kind::Sub;
                n->lhs = std::move(acc);
                n->rhs = term();
                acc = std::move(n);
            } else {
                return acc;
            }
        }
    }

    NodePtr term() {
        NodePtr acc = factor();
        while (eat('*')) {
            NodePtr n = std::make_unique<Node>();
            n->kind = Node::Kind::Mul;
            n->lhs = std::move(acc);
            n->rhs = factor();
            acc = std::move(n);
        }
        return acc;
    }

    NodePtr factor() {
        NodePtr a = atom();
        if (eat('^')) {
            NodePtr n = std::make_unique<Node>();
            n->kind = Node::Kind::Pow;
            n->arg = uint_lit();
            n->lhs = std::move(a);
            return n;
        }
        return a;
    }

    NodePtr atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail_here("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            NodePtr n = std::make_unique<Node>();
            n->kind = Node::Kind::Int;
            BigInt v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            n->value = std::move(v);
            return n;
        }
        if (c == 'x') {
            ++pos_;
            NodePtr n = std::make_unique<Node>();
            n->kind = Node::Kind::Var;
            return n;
        }
        if (text_.substr(pos_, 3) == "Phi") {
            pos_ += 3;
            if (!eat('(')) fail_here("expected '(' after Phi");
            unsigned m = uint_lit();
            if (m == 0) fail_here("Phi(0) is undefined");
            if (!eat(')')) fail_here("expected ')'");
            NodePtr n = std::make_unique<Node>();
            n->kind = Node::Kind::Phi;
            n->arg = m;
            return n;
        }
        if (c == '(') {
            ++pos_;
            NodePtr inner = expr();
            if (!eat(')')) fail_here("expected ')'");
            inner->wrapped = true;
            return inner;
        }
        fail_here("expected an integer, 'x', 'Phi(m)' or '('");
    }
};

IntPoly lower(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Int: return IntPoly::constant(n.value);
        case Node::Kind::Var: return IntPoly::x();
        case Node::Kind::Phi: return cyclotomic(n.arg);
        case Node::Kind::Add: return lower(*n.lhs) + lower(*n.rhs);
        case Node::Kind::Sub: return lower(*n.lhs) - lower(*n.rhs);
        case Node::Kind::Mul: return lower(*n.lhs) * lower(*n.rhs);
        case Node::Kind::Pow: {
            IntPoly base = lower(*n.lhs);
            IntPoly acc = IntPoly::constant(BigInt(1));
            for (unsigned i = 0; i < n.arg; ++i) acc = acc * base;
            return acc;
        }
    }
    fail(Errc::InternalInconsistency, "unreachable");
}

// the product shape: Mul chain of Pow/atoms whose atoms are Phi or parens
void collect_product(const Node& n, std::vector<const Node*>& out) {
    if (n.kind == Node::Kind::Mul && !n.wrapped) {
        collect_product(*n.lhs, out);
        collect_product(*n.rhs, out);
        return;
    }
    out.push_back(&n);
}

bool factor_shaped(const Node& n) {
    const Node& base = n.kind == Node::Kind::Pow ? *n.lhs : n;
    return base.kind == Node::Kind::Phi || base.wrapped;
}

FactoredCharPoly factored_from(const Node& root) {
    std::vector<const Node*> parts;
    collect_product(root, parts);
    std::vector<Factor> factors;
    for (const Node* part : parts) {
        const Node& base = part->kind == Node::Kind::Pow ? *part->lhs : *part;
        unsigned mult = part->kind == Node::Kind::Pow ? part->arg : 1;
        if (mult == 0) fail(Errc::ValidationError, "zero exponent on a factor");
        Factor f;
        f.multiplicity = mult;
        if (base.kind == Node::Kind::Phi) {
            f.conductor = base.arg;
            f.poly = cyclotomic(base.arg);
            f.irreducibility_verified = true;
        } else {
            f.poly = lower(base);
        }
        factors.push_back(std::move(f));
    }
    return FactoredCharPoly::from_factors(std::move(factors));
}

} // namespace

IntPoly parse_intpoly(std::string_view text) {
    Parser p(text);
    return lower(*p.run());
}

FactoredCharPoly parse_charpoly(std::string_view text) {
    Parser p(text);
    NodePtr root = p.run();
    return factored_from(*root);
}

std::variant<IntPoly, FactoredCharPoly> parse_poly_expr(std::string_view text) {
    Parser p(text);
    NodePtr root = p.run();
    std::vector<const Node*> parts;
    collect_product(*root, parts);
    bool shaped = true;
    for (const Node* part : parts)
        if (!factor_shaped(*part)) shaped = false;
    if (shaped) return factored_from(*root);
    return lower(*root);
}

} // namespace lisom
