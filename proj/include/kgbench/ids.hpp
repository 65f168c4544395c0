// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace kgbench {

// Item-style identifier ("Q" prefix + digits in Wikidata-like dumps).
struct EntityId {
    std::string value;

    EntityId() = default;
    explicit EntityId(std::string v) : value(std::move(v)) {}

    bool empty() const { return value.empty(); }
    auto operator<=>(const EntityId&) const = default;
};

// Property identifier ("P" prefix + digits).
struct PropertyId {
    std::string value;

    PropertyId() = default;
    explicit PropertyId(std::string v) : value(std::move(v)) {}

    bool empty() const { return value.empty(); }
    auto operator<=>(const PropertyId&) const = default;
};

namespace detail {

// Orders "Q9" before "Q10": (prefix, numeric suffix) when both ids match
// letters-then-digits, plain lexicographic otherwise.
inline bool natural_id_less(std::string_view a, std::string_view b) {
    auto split = [](std::string_view s, std::string_view& pre, std::uint64_t& num) {
        std::size_t i = 0;
        while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) != 0)) ++i;
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) != 0)) ++j;
        if (i == 0 || j != s.size() || j == i || j - i > 18) return false;
        pre = s.substr(0, i);
        num = 0;
        for (std::size_t k = i; k < j; ++k) num = num * 10 + static_cast<std::uint64_t>(s[k] - '0');
        return true;
    };
    std::string_view pa, pb;
    std::uint64_t na = 0, nb = 0;
    if (split(a, pa, na) && split(b, pb, nb)) {
        if (pa != pb) return pa < pb;
        if (na != nb) return na < nb;
        return a < b;
    }
    return a < b;
}

}  // namespace detail

inline bool natural_less(const EntityId& a, const EntityId& b) {
    return detail::natural_id_less(a.value, b.value);
}
inline bool natural_less(const PropertyId& a, const PropertyId& b) {
    return detail::natural_id_less(a.value, b.value);
}

}  // namespace kgbench

template <>
struct std::hash<kgbench::EntityId> {
    std::size_t operator()(const kgbench::EntityId& id) const noexcept {
        return std::hash<std::string>{}(id.value);
    }
};

template <>
struct std::hash<kgbench::PropertyId> {
    std::size_t operator()(const kgbench::PropertyId& id) const noexcept {
        return std::hash<std::string>{}(id.value);
    }
};
