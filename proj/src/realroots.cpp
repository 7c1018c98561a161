#include "lisom/realroots.hpp"

namespace lisom {

TracePoly trace_polynomial(const IntPoly& f) {
    if (!is_symmetric(f) || f.leading() < 0)
        fail(Errc::NotSymmetric, "trace polynomial needs a symmetric input");
    long n = f.degree() / 2;
    // x^j + x^{-j} = P_j(y) with P_0 = 2, P_1 = y, P_{j+1} = y P_j - P_{j-1}
    std::vector<BigInt> g(static_cast<size_t>(n) + 1);
    g[0] = f.coeff(n);
    IntPoly pj_prev = IntPoly::constant(2);
    IntPoly pj = IntPoly::x();
    for (long j = 1; j <= n; ++j) {
        const BigInt& c = f.coeff(n + j);
        if (c != 0) {
            for (long k = 0; k <= pj.degree(); ++k) g[static_cast<size_t>(k)] += c * pj.coeff(k);
        }
        if (j < n) {
            IntPoly next = IntPoly::x() * pj - pj_prev;
            pj_prev = std::move(pj);
            pj = std::move(next);
        }
    }
    return {IntPoly(std::move(g)), f};
}

namespace {

// a mod b up to a positive scalar, exact over Z
IntPoly rem_positive_scale(const IntPoly& a, const IntPoly& b) {
    const BigInt& lb = b.leading();
    IntPoly r = a;
    long flips = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        BigInt top = r.leading();
        long shift = r.degree() - b.degree();
        r = r.scaled(lb) - b.scaled(top).shifted(shift);
        ++flips;
    }
    if (lb < 0 && (flips % 2)) r = -r;
    return r;
}

// divide by the positive content, preserving signs
IntPoly content_normalized(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt c = content(p);
    if (c == 1) return p;
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) out.push_back(v / c);
    return IntPoly(std::move(out));
}

} // namespace

SturmChain SturmChain::build(const IntPoly& g) {
    if (g.is_zero()) fail(Errc::ZeroPolynomial, "Sturm chain of zero polynomial");
    IntPoly p0 = primitive_part(g);
    IntPoly common = gcd_primitive(p0, derivative(p0));
    if (common.degree() > 0) p0 = content_normalized(divide_exact(p0, common));
    SturmChain chain;
    chain.seq.push_back(p0);
    if (p0.degree() == 0) return chain;
    chain.seq.push_back(content_normalized(derivative(p0)));
    while (chain.seq.back().degree() > 0) {
        const IntPoly& a = chain.seq[chain.seq.size() - 2];
        const IntPoly& b = chain.seq.back();
        IntPoly r = rem_positive_scale(a, b);
        if (r.is_zero()) break; // squarefree input: happens only at a constant tail
        chain.seq.push_back(content_normalized(-r));
    }
    return chain;
}

int SturmChain::variations_at(const Rational& t) const {
    int count = 0;
    int prev = 0;
    for (const IntPoly& p : seq) {
        // sign of p(u/v) is the sign of sum_k c_k u^k v^{d-k} when v > 0
        long d = p.degree();
        BigInt acc = 0;
        BigInt upow = 1;
        std::vector<BigInt> upows(static_cast<size_t>(d) + 1);
        for (long k = 0; k <= d; ++k) {
            upows[static_cast<size_t>(k)] = upow;
            upow *= t.num;
        }
        BigInt vpow = 1;
        for (long k = d; k >= 0; --k) {
            acc += p.coeff(k) * upows[static_cast<size_t>(k)] * vpow;
            vpow *= t.den;
        }
        int s = acc == 0 ? 0 : (acc > 0 ? 1 : -1);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

long sturm_count_interval(const IntPoly& g, const Rational& a, const Rational& b) {
    if (!(a < b)) fail(Errc::BadInput, "empty interval");
    SturmChain chain = SturmChain::build(g);
    return chain.variations_at(a) - chain.variations_at(b);
}

long m_of_factor(const IntPoly& f, std::optional<unsigned> conductor) {
    if (conductor && *conductor >= 3) return 0; // all roots on the unit circle
    TracePoly tp = trace_polynomial(f);
    if (eval(tp.g, BigInt(2)) == 0 || eval(tp.g, BigInt(-2)) == 0)
        fail(Errc::BoundaryRoot, "root at z = +-1, input has a linear factor");
    long n = f.degree() / 2;
    long inside = sturm_count_interval(tp.g, Rational::of(-2), Rational::of(2));
    return n - inside;
}

long unit_circle_pairs(const IntPoly& f, std::optional<unsigned> conductor) {
    if (conductor && *conductor >= 3) return f.degree() / 2;
    return f.degree() / 2 - m_of_factor(f);
}

} // namespace lisom
