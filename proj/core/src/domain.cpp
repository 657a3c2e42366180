#include "loiqif/domain.hpp"

#include "loiqif/error.hpp"

#include <limits>
#include <unordered_map>

namespace loiqif {

struct Domain::Impl {
    std::vector<std::string> atoms;
    std::unordered_map<std::string, AtomIndex> index;
};

Domain::Domain(std::vector<std::string> atoms)
{
    if (atoms.empty()) {
        throw InvalidArgument("domain must contain at least one atom");
    }
    if (atoms.size() > std::numeric_limits<AtomIndex>::max()) {
        throw InvalidArgument("domain too large");
    }
    auto impl = std::make_shared<Impl>();
    impl->index.reserve(atoms.size());
    for (AtomIndex i = 0; i < atoms.size(); ++i) {
        if (!impl->index.emplace(atoms[i], i).second) {
            throw InvalidArgument("duplicate atom '" + atoms[i] + "' in domain");
        }
    }
    impl->atoms = std::move(atoms);
    impl_ = std::move(impl);
}

Domain Domain::range(std::size_t n)
{
    std::vector<std::string> atoms;
    atoms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        atoms.push_back(std::to_string(i));
    }
    return Domain(std::move(atoms));
}

std::size_t Domain::size() const noexcept { return impl_->atoms.size(); }

std::span<const std::string> Domain::atoms() const noexcept { return impl_->atoms; }

const std::string& Domain::atom(AtomIndex index) const { return impl_->atoms.at(index); }

std::optional<AtomIndex> Domain::index_of(std::string_view name) const
{
    auto it = impl_->index.find(std::string(name));
    if (it == impl_->index.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool operator==(const Domain& a, const Domain& b) noexcept
{
    return a.impl_ == b.impl_ || a.impl_->atoms == b.impl_->atoms;
}

void require_same_domain(const Domain& a, const Domain& b, std::string_view what)
{
    if (!(a == b)) {
        throw DomainMismatch(std::string(what) + ": operands are over different domains (" +
                             std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                             " atoms)");
    }
}

} // namespace loiqif
