#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gwcalc/rational.hpp"

namespace gwcalc {

/// Canonical lookup key for one connected relative invariant: genus, degree
/// class, sorted insertion labels, and the sorted (contact order, class
/// degree, basis index) triples of its relative marks.
struct ComponentKey {
    int genus = 0;
    std::vector<long> degree;
    std::vector<std::string> insertions;
    std::vector<std::array<int, 3>> rel; // (order, degree, basis index)

    friend bool operator==(const ComponentKey&, const ComponentKey&) = default;
    friend auto operator<=>(const ComponentKey&, const ComponentKey&) = default;

    std::string to_string() const;
};

/// User-supplied table of connected relative invariants.  Disconnected graphs
/// are evaluated by the product rule, one lookup per component.
class InvariantTable {
public:
    void set(ComponentKey key, Rational value);
    const Rational* find(const ComponentKey& key) const;
    /// Throws MissingInvariant naming the key.
    const Rational& lookup(const ComponentKey& key) const;

    const std::map<ComponentKey, Rational>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

private:
    std::map<ComponentKey, Rational> entries_;
};

} // namespace gwcalc
