#include "specrad/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace specrad {

namespace {

// Adjacency of the associated digraph: edge j -> i when A_ij != 0.
std::vector<std::vector<int>> digraph_out(const SignPattern& p) {
    int n = p.dim();
    std::vector<std::vector<int>> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p(i, j)) out[j].push_back(i);
    return out;
}

struct TarjanState {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> index, low, comp;
    std::vector<int> stack;
    std::vector<char> on_stack;
    int counter = 0;
    int ncomp = 0;

    explicit TarjanState(const std::vector<std::vector<int>>& adj)
        : adj(adj),
          index(adj.size(), -1),
          low(adj.size(), 0),
          comp(adj.size(), -1),
          on_stack(adj.size(), 0) {}

    void dfs(int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (int w : adj[v]) {
            if (index[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp[w] = ncomp;
                if (w == v) break;
            }
            ++ncomp;
        }
    }
};

// comp[v] = SCC id for each vertex; returns the number of components.
int strongly_connected_components(const std::vector<std::vector<int>>& adj, std::vector<int>& comp) {
    TarjanState st(adj);
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        if (st.index[v] < 0) st.dfs(v);
    comp = std::move(st.comp);
    return st.ncomp;
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_irreducible(const SignPattern& p) {
    if (p.dim() == 1) return true;
    std::vector<int> comp;
    return strongly_connected_components(digraph_out(p), comp) == 1;
}

int period(const SignPattern& p) {
    if (!is_irreducible(p)) throw std::invalid_argument("period requires an irreducible pattern");
    int n = p.dim();
    auto out = digraph_out(p);
    std::vector<int> level(n, -1);
    std::queue<int> q;
    level[0] = 0;
    q.push(0);
    long g = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : out[u]) {
            if (level[v] < 0) {
                level[v] = level[u] + 1;
                q.push(v);
            }
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v : out[u]) g = std::gcd(g, static_cast<long>(std::abs(level[u] + 1 - level[v])));
    return g == 0 ? 1 : static_cast<int>(g);
}

bool is_primitive(const SignPattern& p) { return is_irreducible(p) && period(p) == 1; }

SignPattern product_pattern(const SignPattern& p, const SignPattern& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("pattern dimensions differ");
    int n = p.dim();
    std::vector<char> mask(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (p(i, k))
                for (int j = 0; j < n; ++j)
                    if (q(k, j)) mask[static_cast<std::size_t>(i) * n + j] = 1;
    return SignPattern(n, std::move(mask));
}

bool is_two_fold(const SignPattern& p) {
    if (p.dim() == 1) return p(0, 0);
    return is_irreducible(p) && is_irreducible(product_pattern(p.transposed(), p));
}

bool is_chainable(const SignPattern& p) {
    int n = p.dim();
    std::vector<char> row_has(n, 0), col_has(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p(i, j)) row_has[i] = col_has[j] = 1;
    for (int i = 0; i < n; ++i)
        if (!row_has[i] || !col_has[i]) return false;
    DisjointSet ds(2 * n);  // 0..n-1 rows, n..2n-1 columns
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p(i, j)) ds.unite(i, n + j);
    int root = ds.find(0);
    for (int v = 1; v < 2 * n; ++v)
        if (ds.find(v) != root) return false;
    return true;
}

int max_matching(const SignPattern& p, int skip_row, int skip_col) {
    // Hopcroft-Karp on rows -> columns.
    int n = p.dim();
    const int kInf = 1 << 29;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        if (i == skip_row) continue;
        for (int j = 0; j < n; ++j)
            if (j != skip_col && p(i, j)) adj[i].push_back(j);
    }
    std::vector<int> match_row(n, -1), match_col(n, -1), dist(n);

    auto bfs = [&]() {
        std::queue<int> q;
        for (int i = 0; i < n; ++i) {
            if (i != skip_row && match_row[i] < 0) {
                dist[i] = 0;
                q.push(i);
            } else {
                dist[i] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int j : adj[u]) {
                int w = match_col[j];
                if (w < 0) {
                    found = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int j : adj[u]) {
            int w = match_col[j];
            if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_row[u] = j;
                match_col[j] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    };

    int size = 0;
    while (bfs()) {
        for (int i = 0; i < n; ++i)
            if (i != skip_row && match_row[i] < 0 && dfs(i)) ++size;
    }
    return size;
}

bool has_total_support(const SignPattern& p) {
    int n = p.dim();
    if (max_matching(p) != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p(i, j) && max_matching(p, i, j) != n - 1) return false;
    return true;
}

bool is_fully_indecomposable(const SignPattern& p) {
    return is_chainable(p) && has_total_support(p);
}

bool is_scrambling(const SignPattern& p) {
    int n = p.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool share = false;
            for (int k = 0; k < n; ++k)
                if (p(i, k) && p(j, k)) {
                    share = true;
                    break;
                }
            if (!share) return false;
        }
    }
    return true;
}

FrobeniusForm frobenius_form(const SignPattern& p) {
    int n = p.dim();
    auto out = digraph_out(p);
    std::vector<int> comp;
    int ncomp = strongly_connected_components(out, comp);

    std::vector<std::vector<int>> members(ncomp);
    for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

    // Condensation edges follow the digraph (j -> i for nonzero (i,j)); a
    // sources-first topological order makes the permuted matrix block
    // lower-triangular.  Ties broken by lowest original index.
    std::vector<int> indeg(ncomp, 0);
    std::vector<std::vector<int>> cadj(ncomp);
    for (int u = 0; u < n; ++u)
        for (int v : out[u])
            if (comp[u] != comp[v]) cadj[comp[u]].push_back(comp[v]);
    for (auto& lst : cadj) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        for (int c : lst) ++indeg[c];
    }
    auto cmp = [&](int a, int b) { return members[a][0] > members[b][0]; };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
    for (int c = 0; c < ncomp; ++c)
        if (indeg[c] == 0) ready.push(c);

    FrobeniusForm form;
    while (!ready.empty()) {
        int c = ready.top();
        ready.pop();
        form.blocks.push_back(members[c]);
        for (int d : cadj[c])
            if (--indeg[d] == 0) ready.push(d);
    }
    for (const auto& block : form.blocks)
        form.permutation.insert(form.permutation.end(), block.begin(), block.end());
    return form;
}

CyclicForm cyclic_form(const SignPattern& p) {
    if (!is_irreducible(p)) throw std::invalid_argument("cyclic_form requires an irreducible pattern");
    int gamma = period(p);
    CyclicForm form;
    form.period = gamma;
    int n = p.dim();
    if (gamma == 1) {
        form.classes.emplace_back(n);
        std::iota(form.classes[0].begin(), form.classes[0].end(), 0);
        return form;
    }
    auto out = digraph_out(p);
    std::vector<int> level(n, -1);
    std::queue<int> q;
    level[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : out[u])
            if (level[v] < 0) {
                level[v] = level[u] + 1;
                q.push(v);
            }
    }
    form.classes.assign(gamma, {});
    for (int v = 0; v < n; ++v) form.classes[level[v] % gamma].push_back(v);
    return form;
}

bool board_move_irreducible(const SignPattern& p, bool vertical) {
    int n = p.dim();
    std::vector<int> cells;  // encoded i * n + j
    std::vector<char> row_has(n, 0), col_has(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p(i, j)) {
                cells.push_back(i * n + j);
                row_has[i] = col_has[j] = 1;
            }
    for (int i = 0; i < n; ++i)
        if (!row_has[i] || !col_has[i]) return false;

    // Composite move from (i,j): reflect to (j,i), then slide in row j
    // (column i when vertical) to any nonzero cell.
    std::vector<int> cell_index(n * n, -1);
    for (int k = 0; k < static_cast<int>(cells.size()); ++k) cell_index[cells[k]] = k;
    auto reach_from = [&](int start) {
        std::vector<char> seen(cells.size(), 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            int i = cells[c] / n, j = cells[c] % n;
            for (int k = 0; k < n; ++k) {
                int target = vertical ? (p(k, i) ? k * n + i : -1) : (p(j, k) ? j * n + k : -1);
                if (target >= 0) {
                    int idx = cell_index[target];
                    if (!seen[idx]) {
                        seen[idx] = 1;
                        stack.push_back(idx);
                    }
                }
            }
        }
        return seen;
    };
    for (int s = 0; s < static_cast<int>(cells.size()); ++s) {
        auto seen = reach_from(s);
        for (char ok : seen)
            if (!ok) return false;
    }
    return true;
}

std::vector<std::vector<int>> column_components(const SignPattern& p) {
    int n = p.dim();
    DisjointSet ds(n);
    for (int i = 0; i < n; ++i) {
        int first = -1;
        for (int j = 0; j < n; ++j)
            if (p(i, j)) {
                if (first < 0)
                    first = j;
                else
                    ds.unite(first, j);
            }
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> comp_id(n, -1);
    for (int j = 0; j < n; ++j) {
        int r = ds.find(j);
        if (comp_id[r] < 0) {
            comp_id[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[comp_id[r]].push_back(j);
    }
    return comps;
}

StructureReport classify(const SignPattern& p) {
    StructureReport r;
    r.n = p.dim();
    r.nnz = p.nnz();
    r.irreducible = is_irreducible(p);
    if (r.irreducible) {
        r.period = period(p);
        r.primitive = r.period == 1;
        r.cyclic = cyclic_form(p);
    }
    SignPattern pt = p.transposed();
    r.a2_irreducible = is_irreducible(product_pattern(p, p));
    r.ata_irreducible = is_irreducible(product_pattern(pt, p));
    r.aat_irreducible = is_irreducible(product_pattern(p, pt));
    r.two_fold = is_two_fold(p);
    r.chainable = is_chainable(p);
    r.total_support = has_total_support(p);
    r.fully_indecomposable = is_fully_indecomposable(p);
    r.scrambling = is_scrambling(p);
    r.column_components = column_components(p);
    r.frobenius = frobenius_form(p);

    // Cross-identities; the 1x1 zero pattern is exempt from the first
    // (irreducibility is conventional there).
    if (r.n > 1 || r.nnz > 0) {
        if (r.two_fold != (r.irreducible && r.ata_irreducible))
            throw std::logic_error("classify: two_fold identity violated");
    }
    if (r.two_fold && r.nnz < 2 * r.n - 1)
        throw std::logic_error("classify: two_fold pattern below minimal edge count");
    if (r.fully_indecomposable && !r.two_fold)
        throw std::logic_error("classify: fully indecomposable but not two-fold");
    if (r.two_fold && !r.primitive)
        throw std::logic_error("classify: two_fold pattern not primitive");
    return r;
}

}  // namespace specrad
