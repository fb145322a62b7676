#include "squint/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace squint {

int Quiver::add_vertex(const std::string& id) {
    if (has_vertex(id)) throw std::invalid_argument("duplicate vertex id: " + id);
    vertex_ids_.push_back(id);
    return vertex_count() - 1;
}

int Quiver::add_edge(const std::string& id, const std::string& tail, const std::string& head) {
    if (has_edge(id)) throw std::invalid_argument("duplicate edge id: " + id);
    int t = vertex_index(tail);
    int h = vertex_index(head);
    edge_ids_.push_back(id);
    tails_.push_back(t);
    heads_.push_back(h);
    return edge_count() - 1;
}

bool Quiver::has_vertex(const std::string& id) const {
    return std::find(vertex_ids_.begin(), vertex_ids_.end(), id) != vertex_ids_.end();
}

bool Quiver::has_edge(const std::string& id) const {
    return std::find(edge_ids_.begin(), edge_ids_.end(), id) != edge_ids_.end();
}

int Quiver::vertex_index(const std::string& id) const {
    auto it = std::find(vertex_ids_.begin(), vertex_ids_.end(), id);
    if (it == vertex_ids_.end()) throw std::invalid_argument("unknown vertex: " + id);
    return static_cast<int>(it - vertex_ids_.begin());
}

int Quiver::edge_index(const std::string& id) const {
    auto it = std::find(edge_ids_.begin(), edge_ids_.end(), id);
    if (it == edge_ids_.end()) throw std::invalid_argument("unknown edge: " + id);
    return static_cast<int>(it - edge_ids_.begin());
}

std::vector<int> Quiver::in_edges(int v) const {
    std::vector<int> r;
    for (int e = 0; e < edge_count(); ++e)
        if (heads_[e] == v) r.push_back(e);
    return r;
}

std::vector<int> Quiver::out_edges(int v) const {
    std::vector<int> r;
    for (int e = 0; e < edge_count(); ++e)
        if (tails_[e] == v) r.push_back(e);
    return r;
}

int Quiver::in_degree(int v) const { return static_cast<int>(in_edges(v).size()); }
int Quiver::out_degree(int v) const { return static_cast<int>(out_edges(v).size()); }

void check_setup(const Setup& s) {
    if (s.quiver.vertex_count() == 0) throw std::invalid_argument("quiver has no vertices");
    if (static_cast<int>(s.alpha.size()) != s.quiver.vertex_count())
        throw std::invalid_argument("super-dimension vector does not match the vertex set");
    if (static_cast<int>(s.parity.size()) != s.quiver.vertex_count())
        throw std::invalid_argument("parity vector does not match the vertex set");
    for (const SDim& d : s.alpha)
        if (d.even < 0 || d.odd < 0) throw std::invalid_argument("negative dimension");
    for (auto b : s.parity)
        if (b > 1) throw std::invalid_argument("parity bit must be 0 or 1");
}

bool path_ok(const Quiver& q, const Path& p) {
    if (p.edges.empty()) return false;
    for (int e : p.edges)
        if (e < 0 || e >= q.edge_count()) return false;
    for (std::size_t i = 0; i + 1 < p.edges.size(); ++i)
        if (q.head(p.edges[i + 1]) != q.tail(p.edges[i])) return false;
    return true;
}

bool is_closed(const Quiver& q, const Path& p) {
    return path_ok(q, p) && q.head(p.edges.front()) == q.tail(p.edges.back());
}

int path_start(const Quiver& q, const Path& p) { return q.tail(p.edges.back()); }
int path_end(const Quiver& q, const Path& p) { return q.head(p.edges.front()); }

namespace {

// Lexicographically smallest rotation of an edge sequence.
std::vector<int> canonical_rotation(const std::vector<int>& seq) {
    std::vector<int> best = seq;
    std::vector<int> rot = seq;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

// Depth-first walk in traversal order; stored order is the reverse.
void closed_walks_from(const Quiver& q, int start_vertex, int max_len,
                       std::vector<int>& walk, int at, std::set<Path>& out) {
    if (!walk.empty() && at == start_vertex) {
        std::vector<int> stored(walk.rbegin(), walk.rend());
        out.insert(Path{canonical_rotation(stored)});
    }
    if (static_cast<int>(walk.size()) == max_len) return;
    for (int e = 0; e < q.edge_count(); ++e) {
        if (q.tail(e) != at) continue;
        walk.push_back(e);
        closed_walks_from(q, start_vertex, max_len, walk, q.head(e), out);
        walk.pop_back();
    }
}

} // namespace

std::vector<Path> enumerate_closed_paths(const Quiver& q, int max_len) {
    if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
    std::set<Path> classes;
    for (int v = 0; v < q.vertex_count(); ++v) {
        std::vector<int> walk;
        closed_walks_from(q, v, max_len, walk, v, classes);
    }
    return std::vector<Path>(classes.begin(), classes.end());
}

std::vector<Path> enumerate_paths_between(const Quiver& q, int from, int to, int max_len) {
    std::set<Path> found;
    std::vector<int> walk;
    // iterative deepening is unnecessary: one DFS collecting all prefixes
    struct Rec {
        const Quiver& q;
        int to, max_len;
        std::set<Path>& found;
        void go(std::vector<int>& walk, int at) {
            if (!walk.empty() && at == to)
                found.insert(Path{std::vector<int>(walk.rbegin(), walk.rend())});
            if (static_cast<int>(walk.size()) == max_len) return;
            for (int e = 0; e < q.edge_count(); ++e) {
                if (q.tail(e) != at) continue;
                walk.push_back(e);
                go(walk, q.head(e));
                walk.pop_back();
            }
        }
    } rec{q, to, max_len, found};
    rec.go(walk, from);
    return std::vector<Path>(found.begin(), found.end());
}

long long ringel_form(const Quiver& q, const SuperDimVector& alpha, const SuperDimVector& beta) {
    if (static_cast<int>(alpha.size()) != q.vertex_count() ||
        static_cast<int>(beta.size()) != q.vertex_count())
        throw std::invalid_argument("dimension vector on wrong quiver");
    long long sum = 0;
    for (int a = 0; a < q.vertex_count(); ++a)
        sum += static_cast<long long>(alpha[a].even) * beta[a].even +
               static_cast<long long>(alpha[a].odd) * beta[a].odd;
    for (int e = 0; e < q.edge_count(); ++e)
        sum -= static_cast<long long>(alpha[q.tail(e)].total()) * beta[q.head(e)].total();
    return sum;
}

VertexClass classify_vertex(const Quiver& q, const SuperDimVector& alpha, int vertex) {
    if (vertex < 0 || vertex >= q.vertex_count()) throw std::invalid_argument("unknown vertex");
    VertexClass c;
    c.in_degree = q.in_degree(vertex);
    c.out_degree = q.out_degree(vertex);
    c.source = (c.in_degree == 0);
    c.sink = (c.out_degree == 0);
    c.extremal = (alpha.at(vertex).even * alpha.at(vertex).odd == 0);
    return c;
}

bool kirchhoff_ok(const Quiver& q, int vertex) {
    if (vertex < 0 || vertex >= q.vertex_count()) throw std::invalid_argument("unknown vertex");
    return q.in_degree(vertex) == q.out_degree(vertex);
}

EdgeDoubled double_edges(const Quiver& q) {
    EdgeDoubled r;
    for (int v = 0; v < q.vertex_count(); ++v) r.quiver.add_vertex(q.vertex_id(v));
    for (int e = 0; e < q.edge_count(); ++e)
        for (int i = 0; i <= 1; ++i) {
            r.quiver.add_edge(q.edge_id(e) + "." + std::to_string(i),
                              q.vertex_id(q.tail(e)), q.vertex_id(q.head(e)));
            r.edge_parity.push_back(static_cast<std::uint8_t>(i));
        }
    return r;
}

VertexDoubled double_all(const Quiver& q, const SuperDimVector& alpha) {
    if (static_cast<int>(alpha.size()) != q.vertex_count())
        throw std::invalid_argument("dimension vector on wrong quiver");
    VertexDoubled r;
    for (int v = 0; v < q.vertex_count(); ++v)
        for (int i = 0; i <= 1; ++i) {
            r.quiver.add_vertex(q.vertex_id(v) + "." + std::to_string(i));
            r.dims.push_back(i == 0 ? alpha[v].even : alpha[v].odd);
        }
    for (int e = 0; e < q.edge_count(); ++e)
        for (int i = 0; i <= 1; ++i)
            for (int j = 0; j <= 1; ++j)
                r.quiver.add_edge(
                    q.edge_id(e) + "." + std::to_string(i) + std::to_string(j),
                    q.vertex_id(q.tail(e)) + "." + std::to_string(i),
                    q.vertex_id(q.head(e)) + "." + std::to_string(j));
    return r;
}

Quiver polarize_quiver(const Quiver& q, const std::vector<int>& multidegree) {
    if (static_cast<int>(multidegree.size()) != q.edge_count())
        throw std::invalid_argument("multidegree on wrong quiver");
    Quiver r;
    for (int v = 0; v < q.vertex_count(); ++v) r.add_vertex(q.vertex_id(v));
    for (int e = 0; e < q.edge_count(); ++e) {
        if (multidegree[e] < 0) throw std::invalid_argument("negative multidegree");
        for (int k = 1; k <= multidegree[e]; ++k)
            r.add_edge(q.edge_id(e) + "." + std::to_string(k),
                       q.vertex_id(q.tail(e)), q.vertex_id(q.head(e)));
    }
    return r;
}

Normalized normalize_at(const Setup& s, int vertex) {
    check_setup(s);
    const Quiver& q = s.quiver;
    if (vertex < 0 || vertex >= q.vertex_count()) throw std::invalid_argument("unknown vertex");
    if (q.in_degree(vertex) == 0 || q.out_degree(vertex) == 0)
        throw std::invalid_argument("normalize_at: vertex is a source or a sink");

    Normalized r;
    Quiver& nq = r.setup.quiver;
    for (int v = 0; v < q.vertex_count(); ++v) nq.add_vertex(q.vertex_id(v));
    r.new_vertex = nq.add_vertex(q.vertex_id(vertex) + "'");
    for (int e = 0; e < q.edge_count(); ++e) {
        const std::string& head = (q.head(e) == vertex) ? nq.vertex_id(r.new_vertex)
                                                        : q.vertex_id(q.head(e));
        nq.add_edge(q.edge_id(e), q.vertex_id(q.tail(e)), head);
    }
    r.new_edge = nq.add_edge("@" + q.vertex_id(vertex), nq.vertex_id(r.new_vertex),
                             q.vertex_id(vertex));

    r.setup.alpha = s.alpha;
    r.setup.alpha.push_back(s.alpha[vertex]);
    r.setup.parity = s.parity;
    r.setup.parity.push_back(s.parity[vertex]);
    return r;
}

SuperDimVector parity_shift(const SuperDimVector& alpha, const ParityVector& b) {
    if (alpha.size() != b.size())
        throw std::invalid_argument("parity vector on wrong quiver");
    SuperDimVector r = alpha;
    for (std::size_t v = 0; v < alpha.size(); ++v)
        if (b[v]) r[v] = SDim{alpha[v].odd, alpha[v].even};
    return r;
}

int total_degree(const MultiDegree& n) {
    int t = 0;
    for (int x : n) t += x;
    return t;
}

} // namespace squint
