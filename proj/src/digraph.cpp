#include "ldeq/digraph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

namespace ldeq {

AcceptabilityDigraph::AcceptabilityDigraph(int n, const std::vector<Voter>& vertices,
                                           const std::vector<std::pair<Voter, Voter>>& arcs)
    : n_(n),
      vertex_(static_cast<size_t>(n) + 1, 0),
      adj_(static_cast<size_t>(n + 1) * (n + 1), 0) {
    for (Voter v : vertices) {
        if (v < 1 || v > n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        vertex_[v] = 1;
    }
    for (Voter v = 1; v <= n; ++v) {
        if (vertex_[v]) vertex_list_.push_back(v);
    }
    for (auto [u, v] : arcs) {
        if (!is_vertex(u) || !is_vertex(v)) {
            throw std::invalid_argument("arc (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") touches a non-vertex");
        }
        if (u == v) throw std::invalid_argument("self-arc at " + std::to_string(u));
        adj_[static_cast<size_t>(u) * (n_ + 1) + v] = 1;
    }
}

AcceptabilityDigraph build_digraph(const PreferenceProfile& p) {
    AcceptabilityDigraph g;
    const int n = p.size();
    g.n_ = n;
    g.vertex_.assign(static_cast<size_t>(n) + 1, 0);
    g.adj_.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
    for (Voter i = 1; i <= n; ++i) {
        if (!p.is_abstainer(i)) {
            g.vertex_[i] = 1;
            g.vertex_list_.push_back(i);
        }
    }
    for (Voter i : g.vertex_list_) {
        for (Voter j : p.acceptable(i)) {
            if (g.vertex_[j]) g.adj_[static_cast<size_t>(i) * (n + 1) + j] = 1;
        }
    }
    return g;
}

std::vector<Voter> AcceptabilityDigraph::out_neighbors(Voter u) const {
    std::vector<Voter> out;
    for (Voter v : vertex_list_) {
        if (has_arc(u, v)) out.push_back(v);
    }
    return out;
}

std::vector<std::pair<Voter, Voter>> AcceptabilityDigraph::arcs() const {
    std::vector<std::pair<Voter, Voter>> out;
    for (Voter u : vertex_list_) {
        for (Voter v : vertex_list_) {
            if (has_arc(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

bool AcceptabilityDigraph::is_symmetric() const {
    for (Voter u : vertex_list_) {
        for (Voter v : vertex_list_) {
            if (has_arc(u, v) != has_arc(v, u)) return false;
        }
    }
    return true;
}

AcceptabilityDigraph AcceptabilityDigraph::induced(const std::vector<Voter>& keep) const {
    std::vector<Voter> verts;
    for (Voter v : keep) {
        if (is_vertex(v)) verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<std::pair<Voter, Voter>> kept;
    for (Voter u : verts) {
        for (Voter v : verts) {
            if (has_arc(u, v)) kept.emplace_back(u, v);
        }
    }
    return AcceptabilityDigraph(n_, verts, kept);
}

KernelVerdict is_kernel(const AcceptabilityDigraph& g, const std::vector<Voter>& k) {
    std::vector<Voter> members = k;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<char> in(static_cast<size_t>(g.universe()) + 1, 0);
    for (Voter v : members) {
        if (!g.is_vertex(v)) {
            throw std::invalid_argument("candidate kernel member " + std::to_string(v) +
                                        " is not a vertex");
        }
        in[v] = 1;
    }
    for (size_t a = 0; a < members.size(); ++a) {
        for (size_t b = a + 1; b < members.size(); ++b) {
            if (g.has_arc(members[a], members[b]) || g.has_arc(members[b], members[a])) {
                return {false, KernelViolation::kDependentPair, {members[a], members[b]}};
            }
        }
    }
    for (Voter u : g.vertices()) {
        if (in[u]) continue;
        bool absorbed = std::any_of(members.begin(), members.end(),
                                    [&](Voter m) { return g.has_arc(u, m); });
        if (!absorbed) return {false, KernelViolation::kUnabsorbedVertex, {u}};
    }
    return {};
}

KernelList enumerate_kernels(const AcceptabilityDigraph& g, std::optional<size_t> limit,
                             int vertex_bound) {
    const auto& verts = g.vertices();
    const int m = static_cast<int>(verts.size());
    if (vertex_bound > 64) vertex_bound = 64;
    if (m > vertex_bound) {
        throw SizeGuardError("kernel enumeration refused: " + std::to_string(m) +
                             " vertices exceed the bound of " + std::to_string(vertex_bound));
    }
    using Mask = std::uint64_t;
    std::vector<Mask> out(static_cast<size_t>(m), 0), touch(static_cast<size_t>(m), 0);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (g.has_arc(verts[a], verts[b])) {
                out[a] |= Mask{1} << b;
                touch[a] |= Mask{1} << b;
                touch[b] |= Mask{1} << a;
            }
        }
    }
    auto above = [m](int pos) -> Mask { // positions strictly greater than pos
        if (pos + 1 >= m) return 0;
        Mask all = (m == 64) ? ~Mask{0} : ((Mask{1} << m) - 1);
        return all & ~((Mask{1} << (pos + 1)) - 1);
    };

    KernelList result;
    bool stop = false;
    // Pre-order walk over independent sets in lexicographic order; `last` is
    // the largest position in `set`, `blocked` the neighbourhood of `set`.
    std::function<void(Mask, int, Mask)> walk = [&](Mask set, int last, Mask blocked) {
        if (stop) return;
        const Mask future = above(last) & ~blocked;
        // Every vertex at or below `last` outside the set can only be absorbed
        // by the set or by a vertex that may still be added.
        bool complete = true;
        for (int u = 0; u <= last; ++u) {
            if (set >> u & 1) continue;
            if ((out[u] & set) != 0) continue;
            complete = false;
            if ((out[u] & future) == 0) return;
        }
        for (int u = last + 1; u < m && complete; ++u) {
            if ((out[u] & set) == 0) complete = false;
        }
        if (complete) {
            if (limit && result.kernels.size() == *limit) {
                result.truncated = true;
                stop = true;
                return;
            }
            std::vector<Voter> k;
            for (int u = 0; u < m; ++u) {
                if (set >> u & 1) k.push_back(verts[u]);
            }
            result.kernels.push_back(std::move(k));
        }
        for (int v = last + 1; v < m && !stop; ++v) {
            if (future >> v & 1) walk(set | Mask{1} << v, v, blocked | touch[v]);
        }
    };
    walk(0, -1, 0);
    return result;
}

std::string to_dot(const AcceptabilityDigraph& g, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (Voter v : g.vertices()) os << "  " << v << ";\n";
    for (auto [u, v] : g.arcs()) os << "  " << u << " -> " << v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace ldeq
