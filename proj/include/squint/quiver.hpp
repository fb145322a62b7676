#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace squint {

/// Finite directed multigraph. Vertices and edges are identified by unique
/// string ids; internal indices follow declaration order and are stable.
class Quiver {
public:
    Quiver() = default;

    int add_vertex(const std::string& id);
    int add_edge(const std::string& id, const std::string& tail, const std::string& head);

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const { return static_cast<int>(edge_ids_.size()); }

    bool has_vertex(const std::string& id) const;
    bool has_edge(const std::string& id) const;
    int vertex_index(const std::string& id) const; // throws on unknown id
    int edge_index(const std::string& id) const;   // throws on unknown id

    const std::string& vertex_id(int v) const { return vertex_ids_.at(v); }
    const std::string& edge_id(int e) const { return edge_ids_.at(e); }

    int tail(int e) const { return tails_.at(e); }
    int head(int e) const { return heads_.at(e); }

    std::vector<int> in_edges(int v) const;
    std::vector<int> out_edges(int v) const;
    int in_degree(int v) const;
    int out_degree(int v) const;

    bool operator==(const Quiver&) const = default;

private:
    std::vector<std::string> vertex_ids_;
    std::vector<std::string> edge_ids_;
    std::vector<int> tails_;
    std::vector<int> heads_;
};

/// Per-vertex pair of even|odd dimensions.
struct SDim {
    int even = 0;
    int odd = 0;
    int total() const { return even + odd; }
    bool operator==(const SDim&) const = default;
};

using SuperDimVector = std::vector<SDim>; // indexed by vertex
using ParityVector = std::vector<std::uint8_t>;

/// Quiver together with a super-dimension vector and a parity vector; the
/// ambient data every construction in the toolkit is relative to.
struct Setup {
    Quiver quiver;
    SuperDimVector alpha;
    ParityVector parity;
};

void check_setup(const Setup& s); // throws if sizes disagree with the quiver

/// Edge sequence e_1,...,e_k with h(e_{i+1}) = t(e_i): edges[k-1] is traversed
/// first, edges[0] last. The matrix of a path multiplies in stored order.
struct Path {
    std::vector<int> edges;
    int length() const { return static_cast<int>(edges.size()); }
    bool operator==(const Path&) const = default;
    bool operator<(const Path& o) const {
        if (edges.size() != o.edges.size()) return edges.size() < o.edges.size();
        return edges < o.edges;
    }
};

bool path_ok(const Quiver& q, const Path& p);
bool is_closed(const Quiver& q, const Path& p);
int path_start(const Quiver& q, const Path& p); // t(e_k)
int path_end(const Quiver& q, const Path& p);   // h(e_1)

/// All closed paths of length <= max_len, one representative per rotation
/// class (lexicographically smallest rotation), sorted by (length, edges).
std::vector<Path> enumerate_closed_paths(const Quiver& q, int max_len);

/// All paths from vertex `from` to vertex `to` of length in [1, max_len],
/// sorted by (length, edges).
std::vector<Path> enumerate_paths_between(const Quiver& q, int from, int to, int max_len);

/// <alpha,beta> = sum_a (a0 b0 + a1 b1) - sum_e d(alpha, t(e)) d(beta, h(e)).
long long ringel_form(const Quiver& q, const SuperDimVector& alpha, const SuperDimVector& beta);

struct VertexClass {
    bool source = false;
    bool sink = false;
    bool extremal = false;
    int in_degree = 0;
    int out_degree = 0;
};

VertexClass classify_vertex(const Quiver& q, const SuperDimVector& alpha, int vertex);
bool kirchhoff_ok(const Quiver& q, int vertex);

/// Edge doubled quiver: every edge e becomes e.0 (even) and e.1 (odd).
struct EdgeDoubled {
    Quiver quiver;
    std::vector<std::uint8_t> edge_parity; // indexed by new edge
};
EdgeDoubled double_edges(const Quiver& q);

/// Edge and vertex doubled quiver: vertices a.0/a.1 with dims alpha(a)_i,
/// edges e.ij from t(e).i to h(e).j.
struct VertexDoubled {
    Quiver quiver;
    std::vector<int> dims; // ordinary dimension vector
};
VertexDoubled double_all(const Quiver& q, const SuperDimVector& alpha);

/// n-polarized quiver: edge e becomes n_e parallel copies e.1 .. e.n_e;
/// edges with n_e = 0 disappear.
Quiver polarize_quiver(const Quiver& q, const std::vector<int>& multidegree);

/// Sink/source normalizing at a vertex that is neither source nor sink:
/// adds a', re-targets the in-edges of a to a', adds e(a): a' -> a
/// (edge id "@a"; vertex id "a'").
struct Normalized {
    Setup setup;
    int new_vertex = -1;
    int new_edge = -1;
};
Normalized normalize_at(const Setup& s, int vertex);

SuperDimVector parity_shift(const SuperDimVector& alpha, const ParityVector& b);

/// Multidegrees are dense per-edge vectors in declaration order.
using MultiDegree = std::vector<int>;

int total_degree(const MultiDegree& n);

} // namespace squint
