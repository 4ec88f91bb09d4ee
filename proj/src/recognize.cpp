#include "cgk/recognize.hpp"

#include <algorithm>
#include <limits>
#include <list>

namespace cgk {

namespace {

struct Bucket {
    std::vector<int> members;  // ascending tie key; best candidate at the back
    std::vector<int> moved;
    bool touched = false;
};

/// One lexicographic BFS sweep over the vertices of `comp`. Ties inside
/// the foremost bucket go to the vertex with the largest key. Buckets keep
/// their members in ascending key order and splits preserve relative
/// order, so the next pivot is always the back of the front bucket.
std::vector<int> lbfs_sweep(const Graph& g, const std::vector<int>& comp,
                            const std::vector<long long>& key) {
    std::list<Bucket> buckets;
    {
        std::vector<int> init = comp;
        std::sort(init.begin(), init.end(),
                  [&key](int a, int b) { return key[a] != key[b] ? key[a] < key[b] : a > b; });
        buckets.push_back(Bucket{std::move(init), {}, false});
    }

    std::vector<std::list<Bucket>::iterator> bucket_of(g.vertex_count(), buckets.end());
    for (int v : comp) bucket_of[v] = buckets.begin();
    std::vector<char> member(g.vertex_count(), 0);
    std::vector<char> visited(g.vertex_count(), 0);
    std::vector<char> marked(g.vertex_count(), 0);
    for (int v : comp) member[v] = 1;

    std::vector<int> order;
    order.reserve(comp.size());
    while (!buckets.empty()) {
        Bucket& front = buckets.front();
        int pivot = front.members.back();
        front.members.pop_back();
        if (front.members.empty()) buckets.pop_front();
        visited[pivot] = 1;
        order.push_back(pivot);

        std::vector<std::list<Bucket>::iterator> touched;
        for (int u : g.neighbors(pivot)) {
            if (!member[u] || visited[u]) continue;
            auto b = bucket_of[u];
            if (!b->touched) {
                b->touched = true;
                touched.push_back(b);
            }
            b->moved.push_back(u);
            marked[u] = 1;
        }
        for (auto b : touched) {
            std::vector<int> moved_sorted;
            std::vector<int> kept;
            moved_sorted.reserve(b->moved.size());
            for (int u : b->members) (marked[u] ? moved_sorted : kept).push_back(u);
            for (int u : b->moved) marked[u] = 0;
            b->moved.clear();
            b->touched = false;
            auto inserted = buckets.insert(b, Bucket{std::move(moved_sorted), {}, false});
            for (int u : inserted->members) bucket_of[u] = inserted;
            if (kept.empty()) {
                buckets.erase(b);
            } else {
                b->members = std::move(kept);
            }
        }
    }
    return order;
}

int double_bfs_endpoint(const Graph& g, const std::vector<int>& comp) {
    DistanceTable t = bfs_distances(g, comp[0]);
    int best = comp[0];
    for (int v : comp) {
        if (t.dist[v] > t.dist[best]) best = v;  // ties keep the smaller label
    }
    return best;
}

}  // namespace

std::optional<VertexOrdering> recognize(const Graph& g) {
    std::vector<int> full_order;
    full_order.reserve(static_cast<std::size_t>(g.vertex_count()));

    for (const auto& comp : connected_components(g)) {
        std::vector<long long> key(g.vertex_count(), 0);

        int start = double_bfs_endpoint(g, comp);
        for (int v : comp) key[v] = -v;
        key[start] = std::numeric_limits<long long>::max() / 2;
        std::vector<int> sweep = lbfs_sweep(g, comp, key);

        // Two refinement sweeps, each restarted from the previous sweep's
        // last vertex with ties broken toward vertices seen later.
        for (int round = 0; round < 2; ++round) {
            for (std::size_t i = 0; i < sweep.size(); ++i) key[sweep[i]] = static_cast<long long>(i);
            sweep = lbfs_sweep(g, comp, key);
        }

        std::vector<int> reversed(sweep.rbegin(), sweep.rend());
        const std::vector<int>& canonical = reversed < sweep ? reversed : sweep;
        full_order.insert(full_order.end(), canonical.begin(), canonical.end());
    }

    VertexOrdering sigma = VertexOrdering::from_order(std::move(full_order));
    if (check_proper_interval_ordering(g, sigma).has_value()) return std::nullopt;
    return sigma;
}

}  // namespace cgk
