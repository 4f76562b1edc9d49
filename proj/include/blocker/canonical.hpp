#pragma once

// Canonical forms for small graphs and an isomorphism test, used to prune
// isomorphic intermediate graphs in the oracle's search. For n <= 8 the key
// is the lexicographically minimal adjacency bit-matrix over all vertex
// orderings compatible with an iterated degree refinement. Above that a
// refinement hash is used, with collisions re-checked by explicit
// isomorphism search, so pruning stays sound.

#include "blocker/graph.hpp"

#include <cstdint>
#include <unordered_map>

namespace blocker::canonical {

inline constexpr int kExactCanonLimit = 8;

// exact canonical key, (triangle bits << 4) | n; requires n <= kExactCanonLimit
std::uint64_t canonical_key(const DenseGraph& d);

// iso-invariant hash (iterated degree refinement), any size
std::uint64_t refinement_hash(const DenseGraph& d);

bool are_isomorphic(const DenseGraph& a, const DenseGraph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

// Map keyed by (graph up to isomorphism, small salt). Exact canonical keys
// for small graphs; hash buckets with isomorphism re-checks otherwise.
// Salts must stay below 2^20 (they encode remaining budgets).
template <typename V>
class IsoMap {
public:
    static constexpr std::uint64_t kMaxSalt = 1ULL << 20;

    V* find(const DenseGraph& d, std::uint64_t salt) {
        check_salt(salt);
        if (d.n <= kExactCanonLimit) {
            auto it = exact_.find((canonical_key(d) << 20) | salt);
            return it == exact_.end() ? nullptr : &it->second;
        }
        auto it = buckets_.find(refinement_hash(d));
        if (it == buckets_.end()) return nullptr;
        for (auto& entry : it->second)
            if (entry.salt == salt && are_isomorphic(entry.graph, d)) return &entry.value;
        return nullptr;
    }

    void insert(const DenseGraph& d, std::uint64_t salt, V value) {
        check_salt(salt);
        if (d.n <= kExactCanonLimit) {
            exact_[(canonical_key(d) << 20) | salt] = std::move(value);
        } else {
            buckets_[refinement_hash(d)].push_back({d, salt, std::move(value)});
        }
    }

    void clear() {
        exact_.clear();
        buckets_.clear();
    }

private:
    static void check_salt(std::uint64_t salt) {
        if (salt >= kMaxSalt) throw error("IsoMap: salt out of range");
    }

    struct Entry {
        DenseGraph graph;
        std::uint64_t salt;
        V value;
    };
    std::unordered_map<std::uint64_t, V> exact_;
    std::unordered_map<std::uint64_t, std::vector<Entry>> buckets_;
};

} // namespace blocker::canonical
