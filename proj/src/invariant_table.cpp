#include "gwcalc/invariant_table.hpp"

#include <sstream>

#include "gwcalc/errors.hpp"

namespace gwcalc {

std::string ComponentKey::to_string() const {
    std::ostringstream os;
    os << "{genus=" << genus << ", degree=(";
    for (size_t i = 0; i < degree.size(); ++i)
        os << (i ? "," : "") << degree[i];
    os << "), insertions=[";
    for (size_t i = 0; i < insertions.size(); ++i)
        os << (i ? "," : "") << insertions[i];
    os << "], rel=[";
    for (size_t i = 0; i < rel.size(); ++i)
        os << (i ? "," : "") << "(" << rel[i][0] << "," << rel[i][1] << "," << rel[i][2] << ")";
    os << "]}";
    return os.str();
}

void InvariantTable::set(ComponentKey key, Rational value) {
    entries_[std::move(key)] = std::move(value);
}

const Rational* InvariantTable::find(const ComponentKey& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

const Rational& InvariantTable::lookup(const ComponentKey& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
        throw MissingInvariant("no table entry for component " + key.to_string());
    return it->second;
}

} // namespace gwcalc
