#include "conewall/cones.hpp"

#include <algorithm>
#include <numeric>

namespace cw {

SimplicialCone::SimplicialCone(std::vector<Exp> gens) : k_(static_cast<int>(gens.size())), gens_(std::move(gens)) {
    if (k_ == 0) throw Error("cone needs at least one generator");
    if (k_ > 16) throw Error("cone dimension above 16 is not supported");
    for (const auto& v : gens_)
        if (static_cast<int>(v.size()) != k_) throw Error("generator length differs from cone dimension");

    // inverse of the matrix with columns v_i, by Gauss-Jordan over Q
    std::vector<std::vector<Rat>> a(k_, std::vector<Rat>(2 * k_));
    for (int r = 0; r < k_; ++r) {
        for (int i = 0; i < k_; ++i) a[r][i] = gens_[i][r];
        a[r][k_ + r] = 1;
    }
    Rat det = 1;
    for (int col = 0; col < k_; ++col) {
        int piv = col;
        while (piv < k_ && a[piv][col] == 0) ++piv;
        if (piv == k_) throw Error("cone generators are linearly dependent");
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        Rat p = a[col][col];
        det *= p;
        for (auto& x : a[col]) x /= p;
        for (int r = 0; r < k_; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int j = 0; j < 2 * k_; ++j) a[r][j] -= f * a[col][j];
        }
    }
    if (det.get_den() != 1 || !det.get_num().fits_slong_p()) throw Error("cone determinant out of range");
    long d = det.get_num().get_si();
    adj_.assign(k_, std::vector<long>(k_));
    for (int r = 0; r < k_; ++r)
        for (int j = 0; j < k_; ++j) {
            Rat e = a[r][k_ + j] * d;
            adj_[r][j] = d < 0 ? -e.get_num().get_si() : e.get_num().get_si();
        }
    det_ = d < 0 ? -d : d;
}

std::vector<long> SimplicialCone::coords(const Exp& n) const {
    if (static_cast<int>(n.size()) != k_) throw Error("point dimension differs from cone dimension");
    std::vector<long> t(k_, 0);
    for (int r = 0; r < k_; ++r)
        for (int j = 0; j < k_; ++j) t[r] += adj_[r][j] * n[j];
    return t;
}

Exp SimplicialCone::positive_grading() const {
    Exp g(k_, 0);
    long content = 0;
    for (int j = 0; j < k_; ++j) {
        long s = 0;
        for (int r = 0; r < k_; ++r) s += adj_[r][j];
        g[j] = static_cast<int>(s);
        content = std::gcd(content, s);
    }
    for (auto& x : g) x /= static_cast<int>(content);
    return g;
}

SimplicialCone chain_cone(const std::vector<int>& r) {
    if (r.empty()) throw Error("chain cone needs at least one ratio");
    const int k = static_cast<int>(r.size());
    std::vector<Exp> gens;
    for (int i = 0; i < k; ++i) {
        if (r[i] < 1) throw Error("chain cone ratios must be positive");
        Exp v(k, 0);
        for (int j = i; j < k; ++j) v[j] = r[j];
        gens.push_back(std::move(v));
    }
    return SimplicialCone(std::move(gens));
}

std::vector<Face> face_lattice(const SimplicialCone& c) {
    std::vector<Face> out;
    for (unsigned m = 0; m < (1u << c.dim()); ++m) out.push_back(Face{m});
    std::stable_sort(out.begin(), out.end(), [](Face a, Face b) { return a.dim() < b.dim(); });
    return out;
}

std::optional<Face> relint_membership(const SimplicialCone& c, const Exp& n) {
    auto t = c.coords(n);
    Face f;
    for (int i = 0; i < c.dim(); ++i) {
        if (t[i] < 0) return std::nullopt;
        if (t[i] > 0) f.mask |= 1u << i;
    }
    return f;
}

namespace {

unsigned clip(const SimplicialCone& c, Face f) { return f.mask & ((1u << c.dim()) - 1); }

// Scan the bounding box of the parallelepiped spanned by the face generators.
template <class Visit>
void scan_box(const SimplicialCone& c, unsigned mask, Visit&& visit) {
    const int k = c.dim();
    Exp lo(k, 0), hi(k, 0);
    for (int i = 0; i < k; ++i) {
        if (!((mask >> i) & 1u)) continue;
        for (int j = 0; j < k; ++j) {
            int v = c.generator(i)[j];
            (v < 0 ? lo[j] : hi[j]) += v;
        }
    }
    double volume = 1;
    for (int j = 0; j < k; ++j) volume *= double(hi[j] - lo[j] + 1);
    if (volume > 5e8) throw Error("parallelepiped bounding box too large");
    Exp n = lo;
    while (true) {
        visit(n);
        int j = 0;
        while (j < k && n[j] == hi[j]) n[j] = lo[j], ++j;
        if (j == k) break;
        ++n[j];
    }
}

}  // namespace

std::vector<Exp> parallelepiped_points(const SimplicialCone& c, Parallelepiped conv, Face f, long det_bound) {
    if (c.det() > det_bound) throw Error("cone determinant " + std::to_string(c.det()) + " exceeds bound");
    const unsigned mask = clip(c, f);
    const long d = c.det();
    std::vector<Exp> out;
    scan_box(c, mask, [&](const Exp& n) {
        auto t = c.coords(n);
        for (int i = 0; i < c.dim(); ++i) {
            bool in = (mask >> i) & 1u;
            if (!in) {
                if (t[i] != 0) return;
            } else if (conv == Parallelepiped::half_open ? (t[i] < 0 || t[i] >= d) : (t[i] <= 0 || t[i] > d)) {
                return;
            }
        }
        out.push_back(n);
    });
    return out;
}

namespace {

RationalFn series_over(const SimplicialCone& c, Face f, Parallelepiped conv, long det_bound) {
    LaurentPoly num(c.dim());
    for (const auto& p : parallelepiped_points(c, conv, f, det_bound)) num.add_term(p, 1);
    RationalFn out(num);
    for (int i = 0; i < c.dim(); ++i)
        if (clip(c, f) >> i & 1u) out.divide_by(c.generator(i), 0, 1);
    return out;
}

}  // namespace

RationalFn face_interior_series(const SimplicialCone& c, Face f, long det_bound) {
    return series_over(c, f, Parallelepiped::opposite, det_bound);
}

RationalFn face_series(const SimplicialCone& c, Face f, long det_bound) {
    return series_over(c, f, Parallelepiped::half_open, det_bound);
}

}  // namespace cw
