#include "treetorsor/divisor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace treetorsor {

long long degree(const Divisor& d) {
    long long total = 0;
    for (long long c : d) total += c;
    return total;
}

Divisor zero_divisor(const RibbonGraph& g) { return Divisor(g.vertex_count(), 0); }

Divisor laplacian(const RibbonGraph& g, const VertexFunction& f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        fail(ErrorKind::InternalError, "vertex function must be total on V");
    Divisor out = zero_divisor(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [v, w] = g.endpoints(e);
        out[v] += f[v] - f[w];
        out[w] += f[w] - f[v];
    }
    return out;
}

Divisor add(const Divisor& a, const Divisor& b) {
    Divisor out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Divisor subtract(const Divisor& a, const Divisor& b) {
    Divisor out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

namespace {

// Multiplicity-aware adjacency: edge counts between vertex pairs.
std::vector<std::vector<int>> adjacency_counts(const RibbonGraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [v, w] = g.endpoints(e);
        adj[v][w] += 1;
        adj[w][v] += 1;
    }
    return adj;
}

std::vector<int> bfs_layers(const RibbonGraph& g, VertexId pivot) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<VertexId> queue;
    dist[pivot] = 0;
    queue.push(pivot);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId e : g.edges_at(v)) {
            VertexId w = g.other_endpoint(e, v);
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

} // namespace

Divisor q_reduced(const RibbonGraph& g, Divisor d, VertexId pivot) {
    const int n = g.vertex_count();
    if (static_cast<int>(d.size()) != n) fail(ErrorKind::InternalError, "divisor has wrong support");
    if (n == 1) return d;
    const auto adj = adjacency_counts(g);
    const auto dist = bfs_layers(g, pivot);
    const int max_layer = *std::max_element(dist.begin(), dist.end());

    // Stage 1: clear debt outside the pivot, farthest layer first. Unfiring the
    // set {dist >= k} raises every layer-k vertex and never lowers layers >= k.
    for (int k = max_layer; k >= 1; --k) {
        while (true) {
            bool deficient = false;
            for (VertexId v = 0; v < n; ++v)
                if (dist[v] == k && d[v] < 0) deficient = true;
            if (!deficient) break;
            for (VertexId v = 0; v < n; ++v) {
                if (dist[v] < k) continue;
                for (VertexId w = 0; w < n; ++w) {
                    if (dist[w] >= k) continue;
                    d[v] += adj[v][w];
                    d[w] -= adj[v][w];
                }
            }
        }
    }

    // Stage 2: Dhar's burning algorithm. Fire the unburnt set until the fire
    // from the pivot consumes everything.
    const long long step_cap = 1'000'000;
    for (long long iter = 0;; ++iter) {
        if (iter > step_cap) fail(ErrorKind::InternalError, "q-reduction failed to stabilize");
        std::vector<char> burnt(n, 0);
        burnt[pivot] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (VertexId v = 0; v < n; ++v) {
                if (burnt[v]) continue;
                long long burnt_edges = 0;
                for (VertexId w = 0; w < n; ++w)
                    if (burnt[w]) burnt_edges += adj[v][w];
                if (burnt_edges > d[v]) {
                    burnt[v] = 1;
                    grew = true;
                }
            }
        }
        bool all = std::all_of(burnt.begin(), burnt.end(), [](char c) { return c != 0; });
        if (all) return d;
        // fire every unburnt vertex once
        for (VertexId v = 0; v < n; ++v) {
            if (burnt[v]) continue;
            for (VertexId w = 0; w < n; ++w) {
                if (!burnt[w]) continue;
                d[v] -= adj[v][w];
                d[w] += adj[v][w];
            }
        }
    }
}

bool linearly_equivalent(const RibbonGraph& g, const Divisor& d1, const Divisor& d2) {
    if (degree(d1) != degree(d2)) return false;
    return q_reduced(g, d1) == q_reduced(g, d2);
}

namespace {

using Matrix = std::vector<std::vector<long long>>;

Matrix reduced_laplacian(const RibbonGraph& g, VertexId pivot = 0) {
    const int n = g.vertex_count();
    Matrix full(n, std::vector<long long>(n, 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [v, w] = g.endpoints(e);
        full[v][v] += 1;
        full[w][w] += 1;
        full[v][w] -= 1;
        full[w][v] -= 1;
    }
    Matrix red;
    for (int i = 0; i < n; ++i) {
        if (i == pivot) continue;
        std::vector<long long> row;
        for (int j = 0; j < n; ++j)
            if (j != pivot) row.push_back(full[i][j]);
        red.push_back(std::move(row));
    }
    return red;
}

// Diagonalizes m over the integers by row/column reduction; returns the
// diagonal with the divisibility chain enforced.
std::vector<long long> smith_diagonal(Matrix m) {
    const int n = static_cast<int>(m.size());
    std::vector<long long> diag;
    for (int t = 0; t < n; ++t) {
        // locate the smallest nonzero entry in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < n; ++i)
            for (int j = t; j < n; ++j)
                if (m[i][j] != 0 && (pi < 0 || std::abs(m[i][j]) < std::abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) {
            for (int i = t; i < n; ++i) diag.push_back(0);
            break;
        }
        std::swap(m[t], m[pi]);
        for (int i = 0; i < n; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < n; ++i) {
                if (m[i][t] == 0) continue;
                long long q = m[i][t] / m[t][t];
                for (int j = t; j < n; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) { // remainder smaller than pivot; swap up and retry
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (m[t][j] == 0) continue;
                long long q = m[t][j] / m[t][t];
                for (int i = t; i < n; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (int i = t; i < n; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
        }
        diag.push_back(std::abs(m[t][t]));
    }
    // enforce d1 | d2 | ...
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (diag[i] == 0) std::swap(diag[i], diag[j]);
            if (diag[i] == 0 || diag[j] % diag[i] == 0) continue;
            long long a = diag[i], b = diag[j];
            long long g = std::gcd(a, b);
            diag[i] = g;
            diag[j] = a / g * b;
        }
    }
    return diag;
}

} // namespace

PicardStructure picard_structure(const RibbonGraph& g) {
    PicardStructure out;
    if (g.vertex_count() == 1) return out;
    auto diag = smith_diagonal(reduced_laplacian(g));
    for (long long d : diag) {
        if (d == 0) fail(ErrorKind::InternalError, "reduced Laplacian is singular");
        out.order *= d;
        if (d > 1) out.invariant_factors.push_back(d);
    }
    return out;
}

long long reduced_laplacian_determinant(const RibbonGraph& g) { return picard_structure(g).order; }

std::optional<BreakWitness> is_break_divisor(const RibbonGraph& g, const TreeList& trees, const Divisor& b) {
    if (degree(b) != g.first_betti()) return std::nullopt;
    for (int ti = 0; ti < trees.size(); ++ti) {
        const auto outside = non_tree_edges(g, trees[ti]);
        const int gg = static_cast<int>(outside.size());
        for (unsigned choice = 0; choice < (1u << gg); ++choice) {
            Divisor sum = zero_divisor(g);
            std::vector<VertexId> sel;
            for (int i = 0; i < gg; ++i) {
                auto [x, y] = g.endpoints(outside[i]);
                VertexId s = ((choice >> i) & 1u) ? y : x;
                sel.push_back(s);
                sum[s] += 1;
            }
            if (sum == b) return BreakWitness{ti, outside, sel};
        }
    }
    return std::nullopt;
}

std::vector<Divisor> all_break_divisors(const RibbonGraph& g, const TreeList& trees) {
    std::set<Divisor> found;
    for (int ti = 0; ti < trees.size(); ++ti) {
        const auto outside = non_tree_edges(g, trees[ti]);
        const int gg = static_cast<int>(outside.size());
        for (unsigned choice = 0; choice < (1u << gg); ++choice) {
            Divisor sum = zero_divisor(g);
            for (int i = 0; i < gg; ++i) {
                auto [x, y] = g.endpoints(outside[i]);
                sum[((choice >> i) & 1u) ? y : x] += 1;
            }
            found.insert(std::move(sum));
        }
    }
    return std::vector<Divisor>(found.begin(), found.end());
}

Divisor break_representative(const RibbonGraph& g, const TreeList& trees, const Divisor& d) {
    if (degree(d) != g.first_betti())
        fail(ErrorKind::InternalError, "break representatives exist only in degree " +
                                           std::to_string(g.first_betti()));
    const Divisor target = q_reduced(g, d);
    std::optional<Divisor> hit;
    for (const Divisor& b : all_break_divisors(g, trees)) {
        if (q_reduced(g, b) == target) {
            if (hit) fail(ErrorKind::NonUnique, "two break divisors in one class");
            hit = b;
        }
    }
    if (!hit) fail(ErrorKind::NotFound, "no break divisor in the class");
    return *hit;
}

} // namespace treetorsor
