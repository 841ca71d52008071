#include "mixr/brute_force.hpp"

#include <algorithm>

#include "mixr/error.hpp"

namespace mixr {

namespace {

class Enumerator {
public:
    Enumerator(std::uint32_t n, std::uint32_t m) : n_(n), edges_(n * (n - 1) / 2), rgs_(edges_, 0) {
        // Each vertex set is checked at the edge that completes it.
        mono_at_.resize(edges_);
        rainbow_at_.resize(edges_);
        const EdgeColouring index(n, 0);
        auto edges_of = [&](const std::vector<std::uint32_t>& s) {
            std::vector<std::uint32_t> out;
            for (std::size_t a = 0; a < s.size(); ++a)
                for (std::size_t b = a + 1; b < s.size(); ++b)
                    out.push_back(static_cast<std::uint32_t>(index.pair_index(s[a], s[b])));
            std::sort(out.begin(), out.end());
            return out;
        };
        auto subsets = [&](std::uint32_t k, auto&& sink) {
            std::vector<std::uint32_t> s;
            auto rec = [&](auto&& self, std::uint32_t from) -> void {
                if (s.size() == k) {
                    sink(s);
                    return;
                }
                for (std::uint32_t v = from; v < n_; ++v) {
                    s.push_back(v);
                    self(self, v + 1);
                    s.pop_back();
                }
            };
            rec(rec, 0);
        };
        if (m <= n) subsets(m, [&](const auto& s) {
            auto e = edges_of(s);
            mono_at_[e.back()].push_back(std::move(e));
        });
        if (n >= 4) subsets(4, [&](const auto& s) {
            auto e = edges_of(s);
            rainbow_at_[e.back()].push_back(std::move(e));
        });
    }

    BruteForceResult run() {
        dfs(0, 0);
        BruteForceResult r;
        r.value = best_;
        r.nodes = nodes_;
        r.witness = EdgeColouring(n_, 0);
        std::uint32_t k = 0;
        for (std::uint32_t u = 0; u < n_; ++u)
            for (std::uint32_t v = u + 1; v < n_; ++v) r.witness.set(u, v, best_rgs_[k++]);
        return r;
    }

private:
    bool consistent(std::uint32_t e) const {
        for (const auto& set : mono_at_[e]) {
            const auto c = rgs_[set.front()];
            if (std::all_of(set.begin(), set.end(), [&](auto x) { return rgs_[x] == c; })) return false;
        }
        for (const auto& set : rainbow_at_[e]) {
            std::uint64_t seen = 0;
            bool distinct = true;
            for (auto x : set) {
                const auto bit = std::uint64_t{1} << rgs_[x];
                if (seen & bit) {
                    distinct = false;
                    break;
                }
                seen |= bit;
            }
            if (distinct) return false;
        }
        return true;
    }

    void dfs(std::uint32_t e, std::uint32_t used) {
        if (e == edges_) {
            if (used > best_) {
                best_ = used;
                best_rgs_ = rgs_;
            }
            return;
        }
        if (used + (edges_ - e) <= best_) return;
        for (std::uint32_t c = 0; c <= used; ++c) {
            rgs_[e] = c;
            ++nodes_;
            if (!consistent(e)) continue;
            dfs(e + 1, std::max(used, c + 1));
        }
    }

    std::uint32_t n_;
    std::uint32_t edges_;
    std::vector<std::uint32_t> rgs_;
    std::vector<std::uint32_t> best_rgs_;
    std::uint32_t best_ = 0;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<std::vector<std::uint32_t>>> mono_at_;
    std::vector<std::vector<std::vector<std::uint32_t>>> rainbow_at_;
};

}  // namespace

BruteForceResult brute_force_maxr(std::uint32_t n, std::uint32_t m) {
    if (n < 3 || n > kMaxBruteForceOrder) throw InputError("brute force supports 3 <= n <= 6");
    if (m < 3) throw InputError("clique size m must be at least 3");
    auto r = Enumerator(n, m).run();
    r.witness.set_palette_size(0);
    return r;
}

}  // namespace mixr
