#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loiqif {

/// Position of an atom inside its domain. Atom order is the domain order.
using AtomIndex = std::uint32_t;

/// Ordered finite universe of distinct atoms. Immutable; copies share
/// storage.
class Domain {
public:
    /// Throws InvalidArgument if atoms is empty or contains duplicates.
    explicit Domain(std::vector<std::string> atoms);

    /// Atoms "0", "1", ..., "n-1".
    static Domain range(std::size_t n);

    std::size_t size() const noexcept;
    std::span<const std::string> atoms() const noexcept;
    const std::string& atom(AtomIndex index) const;
    std::optional<AtomIndex> index_of(std::string_view name) const;

    friend bool operator==(const Domain& a, const Domain& b) noexcept;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Throws DomainMismatch when a != b. `what` names the operation.
void require_same_domain(const Domain& a, const Domain& b, std::string_view what);

} // namespace loiqif
