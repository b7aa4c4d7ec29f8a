#include "canonlab/refinement.hpp"

#include <algorithm>
#include <numeric>

namespace canonlab {

namespace {

// Sparse per-round signature: (splitter class, neighbor count) entries in
// ascending class order, zero counts omitted. Comparison implements
// lexicographic order on the expanded sorted multiset of neighbor classes.
// Within one parent class the entries for unchanged classes are equal across
// members, so comparing the sparse entries alone decides the sibling order.
using Sig = std::vector<std::pair<int, int>>;

int sig_compare(const Sig& a, const Sig& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto [ta, ca] = a[i];
        auto [tb, cb] = b[j];
        if (ta != tb) return ta < tb ? -1 : 1;
        if (ca != cb) {
            // The side with fewer copies of ta either ends (prefix, smaller)
            // or continues with a symbol larger than ta (larger).
            if (ca < cb) return i + 1 == a.size() ? -1 : 1;
            return j + 1 == b.size() ? 1 : -1;
        }
        ++i;
        ++j;
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

Coloring run_refinement(const Graph& g, const std::vector<int>& initial) {
    Coloring col;
    col.class_of.assign(g.n, 0);
    if (g.n == 0) return col;

    // Rank-compress initial values; class ids start in value order.
    {
        std::vector<int> values(initial);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        col.classes.assign(values.size(), {});
        for (int v = 0; v < g.n; ++v) {
            int c = static_cast<int>(
                std::lower_bound(values.begin(), values.end(), initial[v]) -
                values.begin());
            col.class_of[v] = c;
            col.classes[c].push_back(v);
        }
    }

    std::vector<Sig> sig(g.n);
    std::vector<int> touched;
    std::vector<char> is_touched(g.n, 0);
    std::vector<int> splitters(col.classes.size());
    std::iota(splitters.begin(), splitters.end(), 0);

    while (true) {
        ++col.rounds;
        // Accumulate sparse signatures against this round's splitters.
        for (int s : splitters) {
            for (int v : col.classes[s]) {
                for (int u : g.adj[v]) {
                    if (!sig[u].empty() && sig[u].back().first == s) {
                        ++sig[u].back().second;
                    } else {
                        sig[u].emplace_back(s, 1);
                    }
                    if (!is_touched[u]) {
                        is_touched[u] = 1;
                        touched.push_back(u);
                    }
                }
            }
        }

        // Classes holding a touched vertex are split candidates.
        std::vector<int> candidates;
        candidates.reserve(touched.size());
        for (int u : touched) candidates.push_back(col.class_of[u]);
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()),
                         candidates.end());

        // (class id, ordered parts) for every class that splits this round.
        std::vector<std::pair<int, std::vector<std::vector<int>>>> split_records;
        for (int c : candidates) {
            auto& members = col.classes[c];
            if (members.size() == 1) continue;
            bool uniform = true;
            for (size_t i = 1; i < members.size() && uniform; ++i)
                uniform = sig_compare(sig[members[0]], sig[members[i]]) == 0;
            if (uniform) continue;
            // Members are kept sorted, so a stable sort leaves each part
            // sorted as well.
            std::vector<int> order(members);
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                return sig_compare(sig[a], sig[b]) < 0;
            });
            std::vector<std::vector<int>> parts;
            parts.emplace_back();
            parts.back().push_back(order[0]);
            for (size_t i = 1; i < order.size(); ++i) {
                if (sig_compare(sig[order[i - 1]], sig[order[i]]) != 0)
                    parts.emplace_back();
                parts.back().push_back(order[i]);
            }
            split_records.emplace_back(c, std::move(parts));
        }

        for (int u : touched) {
            sig[u].clear();
            is_touched[u] = 0;
        }
        touched.clear();

        if (split_records.empty()) break;

        // Canonical renaming: each split class is replaced in place by its
        // parts in signature order; unsplit classes keep relative position.
        std::vector<std::vector<int>> next;
        next.reserve(col.classes.size() + split_records.size());
        splitters.clear();
        size_t rec = 0;
        for (size_t c = 0; c < col.classes.size(); ++c) {
            if (rec < split_records.size() &&
                split_records[rec].first == static_cast<int>(c)) {
                for (auto& part : split_records[rec].second) {
                    splitters.push_back(static_cast<int>(next.size()));
                    next.push_back(std::move(part));
                }
                ++rec;
            } else {
                next.push_back(std::move(col.classes[c]));
            }
        }
        col.classes = std::move(next);
        for (size_t c = 0; c < col.classes.size(); ++c)
            for (int v : col.classes[c]) col.class_of[v] = static_cast<int>(c);
    }
    return col;
}

}  // namespace

Coloring cr_stable(const Graph& g) {
    return run_refinement(g, std::vector<int>(g.n, 0));
}

Coloring cr_stable(const Graph& g, const std::vector<int>& initial) {
    return run_refinement(g, initial);
}

bool is_discrete(const Coloring& c) {
    return c.class_count() == static_cast<int>(c.class_of.size());
}

DistinguishResult cr_distinguish(const Graph& g, const Graph& h) {
    Graph u = disjoint_union(g, h);
    DistinguishResult r{false, cr_stable(u)};
    for (const auto& cls : r.joint.classes) {
        long left = 0;
        for (int v : cls)
            if (v < g.n) ++left;
        if (left * 2 != static_cast<long>(cls.size()) ||
            static_cast<long>(cls.size()) % 2 != 0) {
            // equal multisets require every class split evenly between sides
            r.distinguished = true;
            break;
        }
    }
    if (g.n != h.n) r.distinguished = true;
    return r;
}

}  // namespace canonlab
