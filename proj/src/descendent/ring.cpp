#include "conewall/descendent.hpp"

#include <bit>

namespace cw {

CohRing::CohRing(int dim, std::vector<Basis> basis, std::vector<std::vector<CohClass>> mult, std::vector<Rat> integral,
                 CohClass td, CohClass c1, CohClass hyperplane, CohClass pt)
    : d_(dim), basis_(std::move(basis)), mult_(std::move(mult)), integral_(std::move(integral)), td_(std::move(td)),
      c1_(std::move(c1)), H_(std::move(hyperplane)), pt_(std::move(pt)) {
    const int n = size();
    if (d_ < 0) throw Error("ring dimension must be non-negative");
    if (n == 0) throw Error("ring basis is empty");
    for (const auto& b : basis_)
        if (b.degree < 0 || b.degree > d_) throw Error("basis class " + b.name + " has degree outside [0, dim]");
    if (static_cast<int>(mult_.size()) != n || static_cast<int>(integral_.size()) != n)
        throw Error("product table or integrals do not match the basis");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(mult_[i].size()) != n) throw Error("product table row has the wrong length");
        for (int j = 0; j < n; ++j) {
            const CohClass& p = mult_[i][j];
            if (static_cast<int>(p.size()) != n) throw Error("product entry has the wrong length");
            if (p != mult_[j][i]) throw Error("product table is not commutative");
            for (int l = 0; l < n; ++l)
                if (p[l] != 0 && basis_[l].degree != basis_[i].degree + basis_[j].degree)
                    throw Error("product of " + basis_[i].name + " and " + basis_[j].name + " is not homogeneous");
        }
        if (integral_[i] != 0 && basis_[i].degree != d_) throw Error("only top-degree classes may have nonzero integral");
    }
    for (const CohClass* c : {&td_, &c1_, &H_, &pt_})
        if (static_cast<int>(c->size()) != n) throw Error("distinguished class has the wrong length");
    if (component(td_, 0) != unit()) throw Error("td_0 must be the unit");
    if (integrate(pt_) != 1) throw Error("the point class must integrate to 1");

    // unit must act as identity
    CohClass one = unit();
    for (int i = 0; i < n; ++i)
        if (mul(one, element(i)) != element(i)) throw Error("unit class does not act as identity");

    // dual basis through the inverse of the intersection pairing
    std::vector<std::vector<Rat>> P(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) P[i][j] = integrate(mult_[i][j]);
    dual_basis_.assign(n, zero());
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> rhs(n);
        rhs[j] = 1;
        std::vector<Rat> x;
        try {
            x = solve(P, rhs);
        } catch (const Error&) {
            throw Error("intersection pairing is singular");
        }
        dual_basis_[j] = x;
    }
}

std::optional<int> CohRing::find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (basis_[i].name == name) return i;
    return std::nullopt;
}

CohClass CohRing::unit() const {
    CohClass u = zero();
    int found = -1;
    for (int i = 0; i < size(); ++i)
        if (basis_[i].degree == 0) {
            if (found >= 0) throw Error("degree zero part must be one dimensional");
            found = i;
        }
    if (found < 0) throw Error("no degree zero class");
    // the unit is the degree-0 element e with e*e = e
    const CohClass& sq = mult_[found][found];
    if (sq[found] == 0) throw Error("degree zero class squares to zero");
    u[found] = 1 / sq[found];
    return u;
}

CohClass CohRing::element(int i, const Rat& c) const {
    if (i < 0 || i >= size()) throw Error("unknown basis class");
    CohClass e = zero();
    e[i] = c;
    return e;
}

CohClass CohRing::mul(const CohClass& a, const CohClass& b) const {
    CohClass out = zero();
    for (int i = 0; i < size(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < size(); ++j) {
            if (b[j] == 0) continue;
            Rat c = a[i] * b[j];
            const CohClass& p = mult_[i][j];
            for (int l = 0; l < size(); ++l)
                if (p[l] != 0) out[l] += c * p[l];
        }
    }
    return out;
}

CohClass CohRing::add(const CohClass& a, const CohClass& b) const {
    CohClass out = a;
    for (int i = 0; i < size(); ++i) out[i] += b[i];
    return out;
}

CohClass CohRing::scale(const CohClass& a, const Rat& c) const {
    CohClass out = a;
    for (auto& x : out) x *= c;
    return out;
}

CohClass CohRing::power(const CohClass& a, int n) const {
    if (n < 0) throw Error("negative power of a class");
    CohClass out = unit();
    for (int i = 0; i < n; ++i) out = mul(out, a);
    return out;
}

CohClass CohRing::component(const CohClass& a, int j) const {
    CohClass out = zero();
    for (int i = 0; i < size(); ++i)
        if (basis_[i].degree == j) out[i] = a[i];
    return out;
}

Rat CohRing::integrate(const CohClass& a) const {
    Rat s = 0;
    for (int i = 0; i < size(); ++i) s += a[i] * integral_[i];
    return s;
}

CohClass CohRing::dual(const CohClass& a) const {
    CohClass out = a;
    for (int i = 0; i < size(); ++i)
        if (basis_[i].degree % 2) out[i] = -out[i];
    return out;
}

std::vector<CohRing::DiagonalTerm> CohRing::diagonal(const CohClass& gamma) const {
    std::map<std::pair<int, int>, Rat> acc;
    for (int i = 0; i < size(); ++i) {
        CohClass left = mul(gamma, element(i));
        for (int l = 0; l < size(); ++l) {
            if (left[l] == 0) continue;
            for (int r = 0; r < size(); ++r)
                if (dual_basis_[i][r] != 0) acc[{l, r}] += left[l] * dual_basis_[i][r];
        }
    }
    std::vector<DiagonalTerm> out;
    for (const auto& [lr, c] : acc)
        if (c != 0) out.push_back({lr.first, lr.second, c});
    return out;
}

CohRing projective_space(int n) {
    if (n < 0) throw Error("negative projective dimension");
    std::vector<CohRing::Basis> basis;
    for (int i = 0; i <= n; ++i) basis.push_back({i == 0 ? "1" : i == 1 ? "H" : "H^" + std::to_string(i), i});
    const int sz = n + 1;
    auto e = [&](int i, const Rat& c) {
        CohClass v(sz);
        if (i <= n) v[i] = c;
        return v;
    };
    std::vector<std::vector<CohClass>> mult(sz, std::vector<CohClass>(sz));
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) mult[i][j] = e(i + j, 1);
    std::vector<Rat> integral(sz);
    integral[n] = 1;

    // td = (x / (1 - e^{-x}))^{n+1} truncated at x^n
    std::vector<Rat> f(sz), g(sz, 0);
    for (int i = 0; i < sz; ++i) f[i] = (i % 2 ? -1 : 1) / factorial(i + 1);
    g[0] = 1;
    for (int i = 1; i < sz; ++i) {
        Rat s = 0;
        for (int j = 1; j <= i; ++j) s += f[j] * g[i - j];
        g[i] = -s;
    }
    std::vector<Rat> td(sz, 0);
    td[0] = 1;
    for (int p = 0; p <= n; ++p) {
        std::vector<Rat> next(sz, 0);
        for (int i = 0; i < sz; ++i)
            for (int j = 0; i + j < sz; ++j) next[i + j] += td[i] * g[j];
        td = next;
    }
    return CohRing(n, basis, mult, integral, td, e(1, n + 1), e(1, 1), e(n, 1));
}

CohRing p1_cubed() {
    // basis index = bitmask of the h_i present
    std::vector<CohRing::Basis> basis;
    for (unsigned m = 0; m < 8; ++m) {
        std::string name;
        for (int i = 0; i < 3; ++i)
            if (m >> i & 1) name += (name.empty() ? "h" : "*h") + std::to_string(i + 1);
        basis.push_back({name.empty() ? "1" : name, std::popcount(m)});
    }
    std::vector<std::vector<CohClass>> mult(8, std::vector<CohClass>(8, CohClass(8)));
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b)
            if (!(a & b)) mult[a][b][a | b] = 1;
    std::vector<Rat> integral(8);
    integral[7] = 1;
    CohClass td(8), c1(8), H(8), pt(8);
    for (unsigned m = 0; m < 8; ++m) td[m] = 1;
    for (int i = 0; i < 3; ++i) {
        c1[1 << i] = 2;
        H[1 << i] = 1;
    }
    pt[7] = 1;
    return CohRing(3, basis, mult, integral, td, c1, H, pt);
}

CohClass chern_char(const CohRing& R, const Rat& rank, const CohClass& divisor, const CohClass& beta, const Rat& m) {
    CohClass out = R.add(R.add(R.scale(R.unit(), rank), divisor), beta);
    return R.add(out, R.scale(R.pt(), m));
}

}  // namespace cw
