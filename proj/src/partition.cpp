#include "hh/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hh {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_)
        if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
}

Partition Partition::parse(const std::string& text) {
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(tok, &used);
            if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
            parts.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition::parse: bad part '" + tok + "' in '" + text + "'");
        }
        pos = next + 1;
    }
    if (parts.empty()) throw std::invalid_argument("Partition::parse: empty partition");
    return Partition(std::move(parts));
}

unsigned Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::vector<std::pair<unsigned, unsigned>> Partition::multiplicities() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned p : parts_) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

std::string Partition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions_of(unsigned d) {
    if (d < 1) throw std::invalid_argument("partitions_of: d must be >= 1");
    std::vector<Partition> out;
    std::vector<unsigned> cur{d};
    for (;;) {
        out.push_back(Partition(cur));
        // Next in reverse-lexicographic order: shrink the rightmost part > 1,
        // then refill greedily.
        std::size_t i = cur.size();
        while (i > 0 && cur[i - 1] == 1) --i;
        if (i == 0) break;
        unsigned rem = static_cast<unsigned>(cur.size() - i) + cur[i - 1];
        const unsigned newPart = cur[i - 1] - 1;
        cur.resize(i - 1);
        while (rem > 0) {
            const unsigned take = std::min(newPart, rem);
            cur.push_back(take);
            rem -= take;
        }
    }
    return out;
}

Integer conjugacy_class_size(const Partition& eta) {
    Integer denom = 1;
    for (const auto& [value, mult] : eta.multiplicities())
        denom *= int_pow(Integer(value), mult) * factorial(mult);
    return factorial(eta.size()) / denom;
}

} // namespace hh
