#include "loiqif/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace loiqif {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

// Relabels arbitrary labels into restricted-growth form: the block of atom 0
// is 0, and each new label seen in domain order gets the next index.
template <typename Label>
std::vector<std::uint32_t> canonical_labels(std::span<const Label> labels)
{
    std::unordered_map<Label, std::uint32_t> seen;
    std::vector<std::uint32_t> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = seen.try_emplace(labels[i], static_cast<std::uint32_t>(seen.size()));
        out[i] = it->second;
    }
    return out;
}

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }

    std::uint32_t find(std::uint32_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            if (b < a) {
                std::swap(a, b);
            }
            parent[b] = a;
        }
    }

    std::vector<std::uint32_t> parent;
};

} // namespace

Partition::Partition(Domain domain, std::vector<std::uint32_t> labels)
    : domain_(std::move(domain))
    , block_of_(std::move(labels))
{
    std::uint32_t count = 0;
    for (auto b : block_of_) {
        count = std::max(count, b + 1);
    }
    blocks_.resize(count);
    for (AtomIndex i = 0; i < block_of_.size(); ++i) {
        blocks_[block_of_[i]].push_back(i);
    }
}

Partition Partition::from_blocks(Domain domain, const std::vector<Block>& blocks)
{
    const std::size_t n = domain.size();
    std::vector<std::uint32_t> assigned(n, kUnassigned);
    for (std::uint32_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            throw InvalidPartition("partition contains an empty block");
        }
        for (AtomIndex a : blocks[b]) {
            if (a >= n) {
                throw InvalidPartition("block references atom index " + std::to_string(a) +
                                       " outside a domain of " + std::to_string(n) + " atoms");
            }
            if (assigned[a] != kUnassigned) {
                throw InvalidPartition("atom '" + domain.atom(a) + "' appears in more than one block");
            }
            assigned[a] = b;
        }
    }
    for (AtomIndex a = 0; a < n; ++a) {
        if (assigned[a] == kUnassigned) {
            throw InvalidPartition("atom '" + domain.atom(a) + "' is not covered by any block");
        }
    }
    auto labels = canonical_labels<std::uint32_t>(assigned);
    return Partition(std::move(domain), std::move(labels));
}

Partition Partition::from_named_blocks(Domain domain,
                                       const std::vector<std::vector<std::string>>& blocks)
{
    std::vector<Block> indexed;
    indexed.reserve(blocks.size());
    for (const auto& names : blocks) {
        Block block;
        block.reserve(names.size());
        for (const auto& name : names) {
            auto idx = domain.index_of(name);
            if (!idx) {
                throw InvalidPartition("block references unknown atom '" + name + "'");
            }
            block.push_back(*idx);
        }
        indexed.push_back(std::move(block));
    }
    return from_blocks(std::move(domain), indexed);
}

Partition Partition::from_labels(Domain domain, std::span<const std::uint64_t> labels)
{
    if (labels.size() != domain.size()) {
        throw InvalidArgument("label count " + std::to_string(labels.size()) +
                              " does not match domain size " + std::to_string(domain.size()));
    }
    auto canonical = canonical_labels<std::uint64_t>(labels);
    return Partition(std::move(domain), std::move(canonical));
}

Partition Partition::top(Domain domain)
{
    std::vector<std::uint32_t> labels(domain.size());
    std::iota(labels.begin(), labels.end(), 0u);
    return Partition(std::move(domain), std::move(labels));
}

Partition Partition::bottom(Domain domain)
{
    std::vector<std::uint32_t> labels(domain.size(), 0u);
    return Partition(std::move(domain), std::move(labels));
}

bool operator==(const Partition& a, const Partition& b) noexcept
{
    return a.block_of_ == b.block_of_ && a.domain_ == b.domain_;
}

bool leq(const Partition& x, const Partition& y)
{
    require_same_domain(x.domain(), y.domain(), "leq");
    // x is below y iff the x-label is a function of the y-label.
    std::vector<std::uint32_t> image(y.block_count(), kUnassigned);
    for (AtomIndex a = 0; a < x.domain().size(); ++a) {
        auto& slot = image[y.block_of(a)];
        if (slot == kUnassigned) {
            slot = x.block_of(a);
        } else if (slot != x.block_of(a)) {
            return false;
        }
    }
    return true;
}

Partition join(const Partition& x, const Partition& y)
{
    require_same_domain(x.domain(), y.domain(), "join");
    const std::uint64_t width = y.block_count();
    std::vector<std::uint64_t> labels(x.domain().size());
    for (AtomIndex a = 0; a < labels.size(); ++a) {
        labels[a] = static_cast<std::uint64_t>(x.block_of(a)) * width + y.block_of(a);
    }
    return Partition::from_labels(x.domain(), labels);
}

Partition meet(const Partition& x, const Partition& y)
{
    require_same_domain(x.domain(), y.domain(), "meet");
    DisjointSets sets(x.domain().size());
    for (const Partition* p : {&x, &y}) {
        for (const auto& block : p->blocks()) {
            for (std::size_t i = 1; i < block.size(); ++i) {
                sets.unite(block[0], block[i]);
            }
        }
    }
    std::vector<std::uint64_t> labels(x.domain().size());
    for (AtomIndex a = 0; a < labels.size(); ++a) {
        labels[a] = sets.find(a);
    }
    return Partition::from_labels(x.domain(), labels);
}

std::string to_string(const Partition& x)
{
    std::string out = "{";
    for (std::size_t b = 0; b < x.block_count(); ++b) {
        if (b > 0) {
            out += ",";
        }
        out += "{";
        const auto& block = x.block(b);
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i > 0) {
                out += ",";
            }
            out += x.domain().atom(block[i]);
        }
        out += "}";
    }
    out += "}";
    return out;
}

} // namespace loiqif
