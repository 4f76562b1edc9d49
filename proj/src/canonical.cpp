#include "blocker/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace blocker::canonical {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// iterated degree refinement; returns per-vertex colours as comparable values
std::vector<std::uint64_t> refine(const DenseGraph& d) {
    std::vector<std::uint64_t> colour(d.n);
    for (int i = 0; i < d.n; ++i) colour[i] = std::popcount(d.adj[i]);
    for (int round = 0; round < d.n; ++round) {
        std::vector<std::uint64_t> next(d.n);
        for (int i = 0; i < d.n; ++i) {
            std::vector<std::uint64_t> nb;
            std::uint64_t mask = d.adj[i];
            while (mask) {
                int j = std::countr_zero(mask);
                mask &= mask - 1;
                nb.push_back(colour[j]);
            }
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = mix64(colour[i] + 0x1234567);
            for (std::uint64_t c : nb) h = mix64(h ^ mix64(c));
            next[i] = h;
        }
        if (next == colour) break;
        colour = std::move(next);
    }
    return colour;
}

struct CanonSearch {
    const DenseGraph& d;
    // vertices grouped into blocks by refinement colour; a canonical ordering
    // permutes only within blocks
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of_pos; // position -> block index
    std::vector<bool> used;
    std::vector<int> perm;
    std::uint64_t best = ~0ULL;
    bool found = false;

    explicit CanonSearch(const DenseGraph& d) : d(d), used(d.n, false), perm(d.n, -1) {
        auto colour = refine(d);
        std::vector<std::pair<std::uint64_t, int>> order;
        for (int i = 0; i < d.n; ++i) order.emplace_back(colour[i], i);
        std::sort(order.begin(), order.end());
        for (int i = 0; i < d.n; ++i) {
            if (i == 0 || order[i].first != order[i - 1].first) blocks.emplace_back();
            blocks.back().push_back(order[i].second);
        }
        for (size_t b = 0; b < blocks.size(); ++b)
            for (size_t j = 0; j < blocks[b].size(); ++j)
                block_of_pos.push_back(static_cast<int>(b));
    }

    int total_bits() const { return d.n * (d.n - 1) / 2; }

    void dfs(int pos, std::uint64_t value, int bits) {
        if (pos == d.n) {
            if (!found || value < best) {
                best = value;
                found = true;
            }
            return;
        }
        for (int v : blocks[block_of_pos[pos]]) {
            if (used[v]) continue;
            std::uint64_t row = 0;
            for (int q = 0; q < pos; ++q)
                row = (row << 1) | ((d.adj[v] >> perm[q]) & 1ULL);
            std::uint64_t next = (value << pos) | row;
            int next_bits = bits + pos;
            if (found && next > (best >> (total_bits() - next_bits))) continue;
            used[v] = true;
            perm[pos] = v;
            dfs(pos + 1, next, next_bits);
            used[v] = false;
        }
    }

    std::uint64_t run() {
        if (d.n == 0) return 0;
        dfs(0, 0, 0);
        return best;
    }
};

} // namespace

std::uint64_t canonical_key(const DenseGraph& d) {
    if (d.n > kExactCanonLimit)
        throw error("canonical_key: graph too large for exact canonical form");
    CanonSearch s(d);
    return (s.run() << 4) | static_cast<std::uint64_t>(d.n);
}

std::uint64_t refinement_hash(const DenseGraph& d) {
    auto colour = refine(d);
    std::sort(colour.begin(), colour.end());
    std::uint64_t h = mix64(static_cast<std::uint64_t>(d.n) * 1315423911ULL);
    for (std::uint64_t c : colour) h = mix64(h ^ c);
    return h;
}

namespace {

bool extend(const DenseGraph& a, const DenseGraph& b,
            const std::vector<std::uint64_t>& ca, const std::vector<std::uint64_t>& cb,
            std::vector<int>& map_ab, std::vector<bool>& used_b, int i) {
    if (i == a.n) return true;
    for (int j = 0; j < b.n; ++j) {
        if (used_b[j] || ca[i] != cb[j]) continue;
        bool ok = true;
        for (int q = 0; q < i && ok; ++q) {
            bool ea = (a.adj[i] >> q) & 1ULL;
            bool eb = (b.adj[j] >> map_ab[q]) & 1ULL;
            ok = (ea == eb);
        }
        if (!ok) continue;
        map_ab[i] = j;
        used_b[j] = true;
        if (extend(a, b, ca, cb, map_ab, used_b, i + 1)) return true;
        used_b[j] = false;
    }
    return false;
}

} // namespace

bool are_isomorphic(const DenseGraph& a, const DenseGraph& b) {
    if (a.n != b.n) return false;
    int ma = 0, mb = 0;
    for (int i = 0; i < a.n; ++i) {
        ma += std::popcount(a.adj[i]);
        mb += std::popcount(b.adj[i]);
    }
    if (ma != mb) return false;
    auto ca = refine(a), cb = refine(b);
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> map_ab(a.n, -1);
    std::vector<bool> used_b(b.n, false);
    return extend(a, b, ca, cb, map_ab, used_b, 0);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    return are_isomorphic(densify(a), densify(b));
}

} // namespace blocker::canonical
