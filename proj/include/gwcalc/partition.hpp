#pragma once

#include <compare>
#include <vector>

#include "gwcalc/rational.hpp"

namespace gwcalc {

/// An integer partition in canonical (weakly decreasing) form.  Houses the
/// contact-order data of relative invariants: |mu| is the divisor multiplicity
/// and the parts are the contact orders at the relative marked points.
class Partition {
public:
    Partition() = default;
    /// Sorts into canonical form; every part must be >= 1.
    explicit Partition(std::vector<int> parts);

    int size() const;                              // |mu|
    int length() const { return static_cast<int>(parts_.size()); } // l(mu)
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n in lexicographically descending order:
/// (n), (n-1,1), ..., (1,...,1).  Requires n >= 1.
std::vector<Partition> enumerate_partitions(int n);

/// The degeneration-formula weight of a partition,
/// |Aut mu| * prod of parts, where |Aut mu| is the product of factorials of
/// the part multiplicities.
Rational zeta(const Partition& mu);

} // namespace gwcalc
