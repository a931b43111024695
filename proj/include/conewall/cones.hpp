#pragma once

#include "conewall/ratfn.hpp"

#include <optional>
#include <vector>

namespace cw {

// Simplicial cone spanned by k linearly independent integer vectors in Z^k.
// Chain cones keep their generators as given even when not primitive, so that
// face F_I is exactly {t_i = 0 for i in I}.
class SimplicialCone {
public:
    explicit SimplicialCone(std::vector<Exp> gens);

    int dim() const { return k_; }
    const std::vector<Exp>& generators() const { return gens_; }
    const Exp& generator(int i) const { return gens_[i]; }
    // |det|, and the adjugate scaled so that t = adj * n / det with det > 0
    long det() const { return det_; }
    std::vector<long> coords(const Exp& n) const;
    // integer g with <g, v_i> > 0 for every generator, divided through by its content
    Exp positive_grading() const;

private:
    int k_;
    std::vector<Exp> gens_;
    std::vector<std::vector<long>> adj_;
    long det_;
};

// generators v_i = (0,..,0, r_i, .., r_k): the cone 0 <= n_1/r_1 <= ... <= n_k/r_k
SimplicialCone chain_cone(const std::vector<int>& r);

// face spanned by the generators in mask; dim = popcount
struct Face {
    unsigned mask = 0;
    int dim() const { return __builtin_popcount(mask); }
    bool contains(int i) const { return (mask >> i) & 1u; }
    friend bool operator==(const Face&, const Face&) = default;
};

std::vector<Face> face_lattice(const SimplicialCone& c);

// face whose relative interior contains n, or nullopt when n is outside the cone
std::optional<Face> relint_membership(const SimplicialCone& c, const Exp& n);

enum class Parallelepiped { half_open, opposite };

inline constexpr long default_det_bound = 1000000;

// lattice points of sum t_i v_i over i in the face, t_i in [0,1) or (0,1]
std::vector<Exp> parallelepiped_points(const SimplicialCone& c, Parallelepiped conv,
                                       Face f = {~0u}, long det_bound = default_det_bound);

// generating function of the lattice points in the relative interior of f
RationalFn face_interior_series(const SimplicialCone& c, Face f, long det_bound = default_det_bound);
// generating function of the closed face
RationalFn face_series(const SimplicialCone& c, Face f, long det_bound = default_det_bound);

}  // namespace cw
