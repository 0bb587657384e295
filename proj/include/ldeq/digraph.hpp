#ifndef LDEQ_DIGRAPH_HPP
#define LDEQ_DIGRAPH_HPP

#include "ldeq/profile.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ldeq {

// Raised when an exhaustive procedure is asked to run above its size bound.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Digraph over voter ids 1..n in which only some voters are vertices
// (abstainers are not). Dense adjacency matrix.
class AcceptabilityDigraph {
public:
    AcceptabilityDigraph() = default;
    // Vertices `vertices`, arcs `arcs`. Throws on self-arcs or arcs touching
    // non-vertices.
    AcceptabilityDigraph(int n, const std::vector<Voter>& vertices,
                         const std::vector<std::pair<Voter, Voter>>& arcs);

    int universe() const { return n_; }
    bool is_vertex(Voter v) const { return v >= 1 && v <= n_ && vertex_[v]; }
    const std::vector<Voter>& vertices() const { return vertex_list_; }
    bool has_arc(Voter u, Voter v) const {
        return adj_[static_cast<size_t>(u) * (n_ + 1) + v] != 0;
    }
    std::vector<Voter> out_neighbors(Voter u) const;
    std::vector<std::pair<Voter, Voter>> arcs() const; // lexicographic
    bool is_symmetric() const;

    // Subdigraph induced by the vertices of `keep` (ids unchanged).
    AcceptabilityDigraph induced(const std::vector<Voter>& keep) const;

    bool operator==(const AcceptabilityDigraph&) const = default;

private:
    friend AcceptabilityDigraph build_digraph(const PreferenceProfile& p);
    int n_ = 0;
    std::vector<char> vertex_;
    std::vector<Voter> vertex_list_;
    std::vector<char> adj_;
};

AcceptabilityDigraph build_digraph(const PreferenceProfile& p);

enum class KernelViolation { kNone, kDependentPair, kUnabsorbedVertex };

struct KernelVerdict {
    bool is_kernel = true;
    KernelViolation violation = KernelViolation::kNone;
    std::vector<Voter> involved; // the pair, or the unabsorbed vertex

    explicit operator bool() const { return is_kernel; }
};

// Independent and absorbing. Throws std::invalid_argument when `k` contains a
// non-vertex.
KernelVerdict is_kernel(const AcceptabilityDigraph& g, const std::vector<Voter>& k);

inline constexpr int kDefaultKernelBound = 22;

struct KernelList {
    std::vector<std::vector<Voter>> kernels; // lexicographic order
    bool truncated = false;
};

// Every kernel, by pruned subset search. Throws SizeGuardError above
// `vertex_bound` vertices (at most 64).
KernelList enumerate_kernels(const AcceptabilityDigraph& g, std::optional<size_t> limit = {},
                             int vertex_bound = kDefaultKernelBound);

std::string to_dot(const AcceptabilityDigraph& g, const std::string& name = "acceptability");

} // namespace ldeq

#endif
