#include "gwcalc/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gwcalc {

long LinearForm::operator()(std::span<const long> v) const {
    if (v.size() != coeffs.size())
        throw std::invalid_argument("linear form applied to vector of wrong rank");
    long acc = offset;
    for (size_t i = 0; i < coeffs.size(); ++i)
        acc += coeffs[i] * v[i];
    return acc;
}

bool SideConstraint::satisfied(std::span<const long> total) const {
    long value = form(total);
    return kind == Kind::Equal ? value == rhs : value >= rhs;
}

std::vector<int> GeometryModel::distinct_degrees() const {
    std::vector<int> d = divisor_coh_degrees;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

int GeometryModel::degree_multiplicity(int degree) const {
    return static_cast<int>(
        std::count(divisor_coh_degrees.begin(), divisor_coh_degrees.end(), degree));
}

void GeometryModel::validate() const {
    auto check_rank = [&](const LinearForm& f, const char* what) {
        if (static_cast<int>(f.coeffs.size()) != lattice_rank)
            throw std::invalid_argument(std::string(what) + " has wrong rank");
    };
    check_rank(c1_plus, "c1_plus");
    check_rank(c1_minus, "c1_minus");
    check_rank(divisor_pairing, "divisor_pairing");
    if (divisor_pairing.offset != 0)
        throw std::invalid_argument("divisor_pairing must be linear (no offset)");
    if (static_cast<int>(plus_coord_ranges.size()) != lattice_rank ||
        static_cast<int>(minus_coord_ranges.size()) != lattice_rank)
        throw std::invalid_argument("coordinate ranges must cover every lattice coordinate");
    for (const auto& c : constraints)
        check_rank(c.form, "side constraint");
    if (divisor_dim <= 0 || divisor_dim % 2 != 0)
        throw std::invalid_argument("divisor dimension must be a positive even integer");
    // The degree spectrum must pair under d -> divisor_dim - d, so that dual
    // bases exist degree-wise.
    std::map<int, int> mult;
    for (int d : divisor_coh_degrees) {
        if (d < 0 || d > divisor_dim || d % 2 != 0)
            throw std::invalid_argument("divisor cohomology degrees must be even in [0, dim]");
        ++mult[d];
    }
    for (const auto& [d, m] : mult)
        if (mult[divisor_dim - d] != m)
            throw std::invalid_argument("divisor cohomology degrees are not Poincare symmetric");
}

namespace {

// p3-point / p3-point-tau: cutting out a point leaves P^3 with the hyperplane
// at infinity as the divisor.  Plus classes are multiples of the line, so the
// lattice is rank one with pairing n and c1 = 4n.  Z = P^2 (degrees 0,2,4).
Preset make_p3_point(bool tau) {
    Preset p;
    p.name = tau ? "p3-point-tau" : "p3-point";
    GeometryModel& g = p.geometry;
    g.lattice_rank = 1;
    g.c1_plus = {{4}, 0};
    g.c1_minus = {{-2}, 0}; // exceptional correction on the blown-up side
    g.divisor_pairing = {{1}, 0};
    g.divisor_coh_degrees = {0, 2, 4};
    g.divisor_dim = 4;
    g.plus_coord_ranges = {{0, 16}};
    g.minus_coord_ranges = {{0, 16}};
    // [pt] has degree 6; tau_1[pt] contributes degree 6 + 2.
    p.distinguished = {{tau ? "tau1[pt]" : "[pt]", tau ? 8 : 6, Side::Plus}};
    return p;
}

// p3tilde-point: cutting the blown-up P^3 along the exceptional divisor.  The
// plus side is P^3 blown up at a point, H_2 = Z F + Z L with pairings
// F.H = L.H = 1, F.E = 1, L.E = 0 and c1 values 2 and 4.  The class upstairs
// meets E once, which pins the total F coefficient to one.
Preset make_p3tilde_point() {
    Preset p;
    p.name = "p3tilde-point";
    GeometryModel& g = p.geometry;
    g.lattice_rank = 2;
    g.c1_plus = {{2, 4}, 0};
    g.c1_minus = {{0, -2}, 0};
    g.divisor_pairing = {{1, 1}, 0};
    g.divisor_coh_degrees = {0, 2, 4};
    g.divisor_dim = 4;
    g.plus_coord_ranges = {{0, 1}, {0, 16}};
    g.minus_coord_ranges = {{0, 0}, {0, 16}};
    g.constraints = {{{{1, 0}, 0}, 1, SideConstraint::Kind::Equal, Side::Plus}};
    // No absolute insertion rides on the plus side; the surviving relative
    // insertion is the point class of Z.
    return p;
}

// curve-plus / curve-tilde-plus: cutting along a curve C (resp. along the
// exceptional divisor over C).  Coordinates are (z, b) with z the divisor
// pairing and b the base degree over C; c1 of the plus side evaluates to
// 3z + b * int_C c1 (minus one on the tilde side, where the class meets the
// exceptional locus once).  The preset takes int_C c1(X) = 1, the minimal
// positive value.  Z is a P^1-bundle over C (even degrees 0,2,2,4).
Preset make_curve(bool tilde) {
    Preset p;
    p.name = tilde ? "curve-tilde-plus" : "curve-plus";
    GeometryModel& g = p.geometry;
    g.lattice_rank = 2;
    g.c1_plus = {{3, 1}, tilde ? -1 : 0};
    g.c1_minus = {{-1, 1}, 0};
    g.divisor_pairing = {{1, 0}, 0};
    g.divisor_coh_degrees = {0, 2, 2, 4};
    g.divisor_dim = 4;
    // Any base degree b with b * int_C c1 > 1 + l(mu) fails the dimension
    // equation, so a small range is enough to expose every survivor.
    g.plus_coord_ranges = {{0, 16}, {0, 2}};
    g.minus_coord_ranges = {{0, 16}, {0, 0}};
    g.constraints = {{{{0, 1}, 0}, 0, SideConstraint::Kind::AtLeast, Side::Plus}};
    if (tilde)
        p.distinguished = {{"E", 2, Side::Plus}};
    else
        p.distinguished = {{"[C]", 4, Side::Plus}};
    return p;
}

} // namespace

Preset preset(std::string_view name) {
    if (name == "p3-point")
        return make_p3_point(false);
    if (name == "p3-point-tau")
        return make_p3_point(true);
    if (name == "p3tilde-point")
        return make_p3tilde_point();
    if (name == "curve-plus")
        return make_curve(false);
    if (name == "curve-tilde-plus")
        return make_curve(true);
    throw std::invalid_argument("unknown preset \"" + std::string(name) + "\"");
}

std::vector<std::string> preset_names() {
    return {"p3-point", "p3tilde-point", "p3-point-tau", "curve-plus", "curve-tilde-plus"};
}

} // namespace gwcalc
