#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "htgraph/graph.hpp"

namespace htg {

/// Byte string identifying an isomorphism class: the order followed by the
/// adjacency rows of the canonically relabeled graph.
struct CanonicalForm {
    std::string bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const { return std::hash<std::string>{}(f.bytes); }
};

struct CanonicalLabeling {
    std::vector<Vertex> order;     // canonical position -> vertex
    std::vector<int> position;     // vertex -> canonical position
    std::vector<Vertex> orbit;     // vertex -> smallest vertex in its automorphism orbit
    std::vector<std::vector<Vertex>> generators;  // automorphisms found; they generate Aut(G)
    CanonicalForm form;
};

namespace detail {

// Ordered partition of 0..n-1: lab holds vertices cell by cell, end[s] is one
// past the last position of the cell starting at position s.
struct Partition {
    std::array<std::uint8_t, kMaxOrder> lab{};
    std::array<std::uint8_t, kMaxOrder> end{};
    int cells = 0;
};

class Canonizer {
public:
    Canonizer(std::span<const VertexSet> rows, std::span<const int> colors) : n_(static_cast<int>(rows.size())) {
        for (int i = 0; i < n_; ++i) adj_[i] = rows[i];
        Partition p;
        std::vector<int> verts(n_);
        std::iota(verts.begin(), verts.end(), 0);
        if (!colors.empty())
            std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return colors[a] < colors[b]; });
        for (int i = 0; i < n_; ++i) p.lab[i] = static_cast<std::uint8_t>(verts[i]);
        Queue q;
        for (int i = 0; i < n_;) {
            int j = i + 1;
            while (j < n_ && (colors.empty() || colors[verts[j]] == colors[verts[i]])) ++j;
            p.end[i] = static_cast<std::uint8_t>(j);
            ++p.cells;
            q.push(i);
            i = j;
        }
        refine(p, q);
        search(p, 0);
    }

    CanonicalLabeling result() const {
        CanonicalLabeling r;
        r.order.assign(best_lab_.begin(), best_lab_.begin() + n_);
        r.position.resize(n_);
        for (int i = 0; i < n_; ++i) r.position[best_lab_[i]] = i;
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& a : autos_)
            for (int v = 0; v < n_; ++v) unite(parent, v, a[v]);
        r.orbit.resize(n_);
        for (int v = 0; v < n_; ++v) r.orbit[v] = find(parent, v);
        // find() returns the smallest member since unite keeps the smaller root
        for (const auto& a : autos_) r.generators.emplace_back(a.begin(), a.begin() + n_);
        r.form.bytes.push_back(static_cast<char>(n_));
        const int row_bytes = (n_ + 7) / 8;
        for (int i = 0; i < n_; ++i)
            for (int b = 0; b < row_bytes; ++b)
                r.form.bytes.push_back(static_cast<char>((best_cert_[i] >> (8 * b)) & 0xFF));
        return r;
    }

private:
    struct Queue {
        std::array<int, 2 * kMaxOrder + 2> items{};
        int head = 0, tail = 0;
        VertexSet queued = 0;  // by cell start position
        void push(int s) {
            if (bits::has(queued, s)) return;
            queued |= bits::bit(s);
            items[tail] = s;
            tail = (tail + 1) % static_cast<int>(items.size());
        }
        bool empty() const { return head == tail; }
        int pop() {
            const int s = items[head];
            head = (head + 1) % static_cast<int>(items.size());
            queued &= ~bits::bit(s);
            return s;
        }
    };

    static int find(std::vector<int>& parent, int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    static void unite(std::vector<int>& parent, int a, int b) {
        a = find(parent, a);
        b = find(parent, b);
        if (a == b) return;
        if (a < b) parent[b] = a;
        else parent[a] = b;
    }

    // Equitable refinement. Cells split by neighbour count into the splitter,
    // fragments ordered by ascending count; every fragment is re-queued.
    void refine(Partition& p, Queue& q) const {
        std::array<int, kMaxOrder> cnt{};
        while (!q.empty() && p.cells < n_) {
            const int w = q.pop();
            VertexSet splitter = 0;
            for (int i = w; i < p.end[w]; ++i) splitter |= bits::bit(p.lab[i]);
            for (int s = 0; s < n_;) {
                const int e = p.end[s];
                if (e - s > 1) {
                    bool uniform = true;
                    for (int i = s; i < e; ++i) {
                        cnt[p.lab[i]] = bits::count(adj_[p.lab[i]] & splitter);
                        if (cnt[p.lab[i]] != cnt[p.lab[s]]) uniform = false;
                    }
                    if (!uniform) {
                        // insertion sort by count; cells are small
                        for (int i = s + 1; i < e; ++i) {
                            const auto v = p.lab[i];
                            int j = i;
                            while (j > s && cnt[p.lab[j - 1]] > cnt[v]) {
                                p.lab[j] = p.lab[j - 1];
                                --j;
                            }
                            p.lab[j] = v;
                        }
                        const bool was_queued = bits::has(q.queued, s);
                        int start = s;
                        for (int i = s + 1; i <= e; ++i) {
                            if (i == e || cnt[p.lab[i]] != cnt[p.lab[start]]) {
                                p.end[start] = static_cast<std::uint8_t>(i);
                                if (start != s) ++p.cells;
                                if (start != s || !was_queued) q.push(start);
                                start = i;
                            }
                        }
                    }
                }
                s = e;
            }
        }
    }

    void individualize(Partition& p, int v) const {
        int s = 0;
        while (true) {
            bool inside = false;
            for (int i = s; i < p.end[s]; ++i)
                if (p.lab[i] == v) {
                    std::swap(p.lab[i], p.lab[s]);
                    inside = true;
                    break;
                }
            if (inside) break;
            s = p.end[s];
        }
        const auto e = p.end[s];
        p.end[s] = static_cast<std::uint8_t>(s + 1);
        p.end[s + 1] = e;
        ++p.cells;
        Queue q;
        q.push(s);
        refine(p, q);
    }

    using Cert = std::array<VertexSet, kMaxOrder>;
    using Perm = std::array<std::uint8_t, kMaxOrder>;

    Cert certificate(const Partition& p) const {
        std::array<int, kMaxOrder> pos{};
        for (int i = 0; i < n_; ++i) pos[p.lab[i]] = i;
        Cert c{};
        for (int i = 0; i < n_; ++i) {
            VertexSet row = 0;
            bits::for_each(adj_[p.lab[i]], [&](int w) { row |= bits::bit(pos[w]); });
            c[i] = row;
        }
        return c;
    }

    int compare(const Cert& a, const Cert& b) const {
        for (int i = 0; i < n_; ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    void record(const Partition& from, const Partition& to) {
        Perm gamma{};
        for (int i = 0; i < n_; ++i) gamma[from.lab[i]] = to.lab[i];
        bool identity = true;
        for (int v = 0; v < n_; ++v) identity = identity && gamma[v] == v;
        if (!identity) autos_.push_back(gamma);
    }

    void leaf(const Partition& p) {
        Cert c = certificate(p);
        if (!have_leaf_) {
            have_leaf_ = true;
            first_ = p;
            first_cert_ = c;
            best_cert_ = c;
            best_lab_ = p.lab;
            best_ = p;
            return;
        }
        if (compare(c, first_cert_) == 0) {
            record(first_, p);
            return;
        }
        const int cmp = compare(c, best_cert_);
        if (cmp == 0) {
            record(best_, p);
        } else if (cmp > 0) {
            best_cert_ = c;
            best_lab_ = p.lab;
            best_ = p;
        }
    }

    // Orbits of the recorded automorphisms that fix every vertex of the prefix.
    void stabilizer_orbits(int depth, std::vector<int>& parent) const {
        parent.resize(n_);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& a : autos_) {
            bool fixes = true;
            for (int d = 0; d < depth && fixes; ++d) fixes = a[prefix_[d]] == prefix_[d];
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) unite(parent, v, a[v]);
        }
    }

    void search(const Partition& p, int depth) {
        if (p.cells == n_) {
            leaf(p);
            return;
        }
        int target = -1, target_size = n_ + 1;
        for (int s = 0; s < n_; s = p.end[s]) {
            const int size = p.end[s] - s;
            if (size > 1 && size < target_size) {
                target = s;
                target_size = size;
            }
        }
        VertexSet cell = 0;
        for (int i = target; i < p.end[target]; ++i) cell |= bits::bit(p.lab[i]);

        std::vector<int> tried;
        std::vector<int> parent;
        std::size_t seen_autos = static_cast<std::size_t>(-1);
        for (VertexSet rest = cell; rest; rest &= rest - 1) {
            const int v = bits::lowest(rest);
            if (!tried.empty()) {
                if (seen_autos != autos_.size()) {
                    stabilizer_orbits(depth, parent);
                    seen_autos = autos_.size();
                }
                bool equivalent = false;
                for (int w : tried)
                    if (find(parent, w) == find(parent, v)) {
                        equivalent = true;
                        break;
                    }
                if (equivalent) continue;
            }
            Partition child = p;
            individualize(child, v);
            prefix_[depth] = static_cast<std::uint8_t>(v);
            search(child, depth + 1);
            tried.push_back(v);
        }
    }

    int n_;
    std::array<VertexSet, kMaxOrder> adj_{};
    std::array<std::uint8_t, kMaxOrder> prefix_{};
    bool have_leaf_ = false;
    Partition first_, best_;
    Cert first_cert_{}, best_cert_{};
    Perm best_lab_{};
    std::vector<Perm> autos_;
};

}  // namespace detail

/// Canonical labeling by equitable refinement and individualization, pruned
/// with the automorphisms discovered along the way. `colors` (optional) gives
/// an initial vertex colouring that canonical relabelings must respect.
inline CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {}) {
    if (!colors.empty() && static_cast<int>(colors.size()) != g.order())
        throw std::invalid_argument("colour vector size does not match order");
    return detail::Canonizer(g.rows(), colors).result();
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

inline Graph canonical_graph(const Graph& g) {
    const auto lab = canonical_labeling(g);
    return g.permuted(lab.position);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace htg
