#pragma once

#include <algorithm>
#include <cassert>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "happyset/graph.hpp"
#include "happyset/modular.hpp"

namespace happyset {

// Rooted expression over introduce / union / relabel / join, stored as a
// topologically-ordered node array (children precede parents, root last).
// Identity relabels never appear: they are dropped on construction.

enum class cw_op { introduce, disjoint_union, relabel, join };

struct cw_node {
    cw_op op;
    int vertex = -1;               // introduce
    int label_i = 0, label_j = 0;  // introduce uses label_i
    int left = -1, right = -1;     // right only for union
};

struct cw_expression {
    std::vector<cw_node> nodes;
    int labels = 0;  // labels range over 1..labels
    int n = 0;       // number of introduced vertices

    int root() const { return static_cast<int>(nodes.size()) - 1; }
};

class cw_builder {
public:
    int introduce(int vertex, int label) {
        check_label(label);
        if (vertex < 0) throw input_error("cw: negative vertex id");
        cw_node nd;
        nd.op = cw_op::introduce;
        nd.vertex = vertex;
        nd.label_i = label;
        return push(nd);
    }

    int disjoint_union(int a, int b) {
        check_child(a);
        check_child(b);
        cw_node nd;
        nd.op = cw_op::disjoint_union;
        nd.left = a;
        nd.right = b;
        return push(nd);
    }

    int relabel(int i, int j, int child) {
        check_label(i);
        check_label(j);
        check_child(child);
        if (i == j) return child;  // identity, normalized away
        cw_node nd;
        nd.op = cw_op::relabel;
        nd.label_i = i;
        nd.label_j = j;
        nd.left = child;
        return push(nd);
    }

    int join(int i, int j, int child) {
        check_label(i);
        check_label(j);
        check_child(child);
        if (i == j) throw input_error("cw: join of a label with itself");
        cw_node nd;
        nd.op = cw_op::join;
        nd.label_i = i;
        nd.label_j = j;
        nd.left = child;
        return push(nd);
    }

    // `root` must be the node all others feed into
    cw_expression finish(int root);

private:
    int push(const cw_node& nd) {
        nodes_.push_back(nd);
        max_label_ = std::max({max_label_, nd.label_i, nd.label_j});
        return static_cast<int>(nodes_.size()) - 1;
    }
    void check_label(int l) const {
        if (l < 1) throw input_error("cw: labels must be positive");
    }
    void check_child(int c) const {
        if (c < 0 || c >= static_cast<int>(nodes_.size()))
            throw input_error("cw: child node id out of range");
    }

    std::vector<cw_node> nodes_;
    int max_label_ = 0;
};

struct labeled_graph {
    graph g;                     // on local ids 0..|vertices|-1
    std::vector<int> vertex_of;  // local id -> introduced vertex id, ascending
    std::vector<int> label;      // per local id, in 1..labels
};

namespace detail {

// bottom-up evaluation of every node; also the structural validator
struct cw_eval {
    const cw_expression& e;
    bool require_dense = true;               // subtrees may have sparse vertex ids
    std::vector<std::vector<int>> verts;     // per node, sorted vertex ids
    std::vector<std::map<int, int>> labels;  // per node, vertex -> label

    explicit cw_eval(const cw_expression& e_, bool dense = true)
        : e(e_), require_dense(dense) {}

    // returns accumulated edges of the whole expression
    std::vector<edge> run() {
        verts.resize(e.nodes.size());
        labels.resize(e.nodes.size());
        std::vector<char> used(e.nodes.size(), 0);
        std::vector<char> introduced;
        std::vector<edge> edges;
        for (size_t t = 0; t < e.nodes.size(); ++t) {
            const cw_node& nd = e.nodes[t];
            switch (nd.op) {
                case cw_op::introduce: {
                    int v = nd.vertex;
                    if (v >= static_cast<int>(introduced.size()))
                        introduced.resize(v + 1, 0);
                    if (introduced[v])
                        throw input_error("cw: vertex introduced twice: " + std::to_string(v));
                    introduced[v] = 1;
                    verts[t] = {v};
                    labels[t][v] = nd.label_i;
                    break;
                }
                case cw_op::disjoint_union: {
                    mark_used(used, nd.left);
                    mark_used(used, nd.right);
                    labels[t] = labels[nd.left];
                    for (auto [v, l] : labels[nd.right]) {
                        if (!labels[t].emplace(v, l).second)
                            throw input_error("cw: union children share vertex " +
                                              std::to_string(v));
                    }
                    verts[t] = merged(verts[nd.left], verts[nd.right]);
                    break;
                }
                case cw_op::relabel: {
                    mark_used(used, nd.left);
                    verts[t] = verts[nd.left];
                    labels[t] = labels[nd.left];
                    for (auto& [v, l] : labels[t])
                        if (l == nd.label_i) l = nd.label_j;
                    break;
                }
                case cw_op::join: {
                    mark_used(used, nd.left);
                    verts[t] = verts[nd.left];
                    labels[t] = labels[nd.left];
                    for (auto [u, lu] : labels[t]) {
                        if (lu != nd.label_i) continue;
                        for (auto [v, lv] : labels[t])
                            if (lv == nd.label_j)
                                edges.emplace_back(std::min(u, v), std::max(u, v));
                    }
                    break;
                }
            }
        }
        for (size_t t = 0; t + 1 < e.nodes.size(); ++t)
            if (!used[t]) throw input_error("cw: node " + std::to_string(t) + " is unused");
        // vertex ids must be dense 0..n-1
        if (require_dense)
            for (size_t v = 0; v < introduced.size(); ++v)
                if (!introduced[v])
                    throw input_error("cw: vertex ids must be dense, missing " +
                                      std::to_string(v));
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return edges;
    }

    static void mark_used(std::vector<char>& used, int c) {
        if (used[c]) throw input_error("cw: node used twice, not a tree");
        used[c] = 1;
    }

    static std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        out.reserve(a.size() + b.size());
        std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    }
};

}  // namespace detail

inline cw_expression cw_builder::finish(int root) {
    if (nodes_.empty()) throw input_error("cw: empty expression");
    if (root != static_cast<int>(nodes_.size()) - 1)
        throw input_error("cw: root must be the last node");
    cw_expression e;
    e.nodes = std::move(nodes_);
    e.labels = std::max(max_label_, 1);
    detail::cw_eval ev(e);
    ev.run();  // throws on structural problems
    e.n = static_cast<int>(ev.verts[e.root()].size());
    return e;
}

// Labeled graph of the full expression.  Vertex ids are dense, so local ids
// coincide with the introduced ids at the root.
inline labeled_graph evaluate_cw_expression(const cw_expression& e) {
    detail::cw_eval ev(e);
    auto edges = ev.run();
    labeled_graph out;
    out.vertex_of = ev.verts[e.root()];
    out.g = graph(static_cast<int>(out.vertex_of.size()), edges);
    out.label.resize(out.vertex_of.size());
    for (size_t i = 0; i < out.vertex_of.size(); ++i)
        out.label[i] = ev.labels[e.root()].at(out.vertex_of[i]);
    return out;
}

// Labeled graph built by the subexpression rooted at `node` (local ids).
inline labeled_graph evaluate_cw_subexpression(const cw_expression& e, int node) {
    if (node < 0 || node > e.root()) throw input_error("cw: node index out of range");
    // collect the subtree, reindex, and evaluate it as a standalone expression
    std::vector<int> sub;
    std::vector<char> in_sub(e.nodes.size(), 0);
    std::vector<int> stack = {node};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        in_sub[t] = 1;
        const cw_node& nd = e.nodes[t];
        if (nd.left >= 0) stack.push_back(nd.left);
        if (nd.right >= 0) stack.push_back(nd.right);
    }
    std::vector<int> remap(e.nodes.size(), -1);
    cw_expression s;
    for (size_t t = 0; t < e.nodes.size(); ++t) {
        if (!in_sub[t]) continue;
        cw_node nd = e.nodes[t];
        if (nd.left >= 0) nd.left = remap[nd.left];
        if (nd.right >= 0) nd.right = remap[nd.right];
        remap[t] = static_cast<int>(s.nodes.size());
        s.nodes.push_back(nd);
    }
    s.labels = e.labels;

    detail::cw_eval ev(s, /*dense=*/false);
    std::vector<edge> edges = ev.run();
    labeled_graph out;
    out.vertex_of = ev.verts[s.root()];
    std::vector<int> local(1 + (out.vertex_of.empty() ? 0 : out.vertex_of.back()), -1);
    for (size_t i = 0; i < out.vertex_of.size(); ++i) local[out.vertex_of[i]] = static_cast<int>(i);
    std::vector<edge> ledges;
    for (auto [u, v] : edges) ledges.emplace_back(local[u], local[v]);
    out.g = graph(static_cast<int>(out.vertex_of.size()), ledges);
    out.label.resize(out.vertex_of.size());
    for (size_t i = 0; i < out.vertex_of.size(); ++i)
        out.label[i] = ev.labels[s.root()].at(out.vertex_of[i]);
    return out;
}

// ---- text format ------------------------------------------------------------
// One node per line, "id KIND args": `I v label`, `U id1 id2`, `R i j id`,
// `J i j id`.  `#` starts a comment; the last line is the root.

inline cw_expression parse_cw_expression(std::istream& is) {
    cw_builder b;
    std::map<long long, int> id_map;
    std::string line;
    int last = -1;
    auto lookup = [&](long long id) {
        auto it = id_map.find(id);
        if (it == id_map.end())
            throw input_error("cw: node id referenced before definition: " + std::to_string(id));
        return it->second;
    };
    while (std::getline(is, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        long long id;
        std::string kind;
        if (!(ls >> id >> kind)) throw input_error("cw: bad line: " + line);
        int built;
        if (kind == "I") {
            long long v, lab;
            if (!(ls >> v >> lab)) throw input_error("cw: bad introduce line: " + line);
            built = b.introduce(static_cast<int>(v), static_cast<int>(lab));
        } else if (kind == "U") {
            long long a, c;
            if (!(ls >> a >> c)) throw input_error("cw: bad union line: " + line);
            built = b.disjoint_union(lookup(a), lookup(c));
        } else if (kind == "R") {
            long long i, j, c;
            if (!(ls >> i >> j >> c)) throw input_error("cw: bad relabel line: " + line);
            built = b.relabel(static_cast<int>(i), static_cast<int>(j), lookup(c));
        } else if (kind == "J") {
            long long i, j, c;
            if (!(ls >> i >> j >> c)) throw input_error("cw: bad join line: " + line);
            built = b.join(static_cast<int>(i), static_cast<int>(j), lookup(c));
        } else {
            throw input_error("cw: unknown node kind: " + kind);
        }
        if (!id_map.emplace(id, built).second)
            throw input_error("cw: duplicate node id: " + std::to_string(id));
        last = built;
    }
    if (last < 0) throw input_error("cw: empty expression file");
    return b.finish(last);
}

inline cw_expression parse_cw_expression(const std::string& text) {
    std::istringstream is(text);
    return parse_cw_expression(is);
}

inline void write_cw_expression(std::ostream& os, const cw_expression& e) {
    for (size_t t = 0; t < e.nodes.size(); ++t) {
        const cw_node& nd = e.nodes[t];
        switch (nd.op) {
            case cw_op::introduce:
                os << t << " I " << nd.vertex << ' ' << nd.label_i << '\n';
                break;
            case cw_op::disjoint_union:
                os << t << " U " << nd.left << ' ' << nd.right << '\n';
                break;
            case cw_op::relabel:
                os << t << " R " << nd.label_i << ' ' << nd.label_j << ' ' << nd.left << '\n';
                break;
            case cw_op::join:
                os << t << " J " << nd.label_i << ' ' << nd.label_j << ' ' << nd.left << '\n';
                break;
        }
    }
}

inline std::string format_cw_expression(const cw_expression& e) {
    std::ostringstream os;
    write_cw_expression(os, e);
    return os.str();
}

// ---- parse tree -> expression ----------------------------------------------
// Children keep distinct working labels 1..c while the quotient's joins are
// applied, then everything is relabeled back to 1 (skipped at the overall
// root, where the labeling no longer matters).  Series/parallel nodes with
// more than two children are folded pairwise so only prime quotients dictate
// the label count: at most max(prime fanout, 2) labels overall.

namespace detail {

int build_cw_rec(cw_builder& b, const parse_tree_node& nd, bool finish_to_one);

// combine already-built children (all finished to label 1) under `meta`
inline int combine_cw(cw_builder& b, const std::vector<const parse_tree_node*>& kids,
                      std::vector<int> built, const graph& meta, bool finish_to_one) {
    const int c = static_cast<int>(kids.size());
    int acc = -1;
    for (int i = 0; i < c; ++i) {
        int part = built[i];
        if (i > 0) {
            // leaves are introduced directly at their working label; anything
            // else arrives labeled 1 and gets moved
            if (kids[i]->kind == module_kind::leaf)
                part = b.introduce(kids[i]->vertices[0], i + 1);
            else
                part = b.relabel(1, i + 1, part);
        }
        acc = (i == 0) ? part : b.disjoint_union(acc, part);
    }
    for (auto [i, j] : meta.edges()) acc = b.join(i + 1, j + 1, acc);
    if (finish_to_one)
        for (int i = 1; i < c; ++i) acc = b.relabel(i + 1, 1, acc);
    return acc;
}

inline int build_cw_rec(cw_builder& b, const parse_tree_node& nd, bool finish_to_one) {
    if (nd.kind == module_kind::leaf) return b.introduce(nd.vertices[0], 1);

    const int c = nd.fanout();
    const bool degenerate = nd.kind == module_kind::series || nd.kind == module_kind::parallel;
    if (!degenerate || c == 2) {
        std::vector<const parse_tree_node*> kids;
        std::vector<int> built;
        for (const auto& ch : nd.children) {
            kids.push_back(&ch);
            built.push_back(ch.kind == module_kind::leaf ? -1 : build_cw_rec(b, ch, true));
        }
        if (kids[0]->kind == module_kind::leaf) built[0] = b.introduce(kids[0]->vertices[0], 1);
        return combine_cw(b, kids, built, nd.metagraph, finish_to_one);
    }

    // fold a wide series/parallel node two children at a time
    const bool series = nd.kind == module_kind::series;
    int acc = build_cw_rec(b, nd.children[0], true);
    for (int i = 1; i < c; ++i) {
        const auto& ch = nd.children[i];
        int part;
        if (series) {
            part = ch.kind == module_kind::leaf ? b.introduce(ch.vertices[0], 2)
                                                : b.relabel(1, 2, build_cw_rec(b, ch, true));
            acc = b.join(1, 2, b.disjoint_union(acc, part));
            if (!(i == c - 1 && !finish_to_one)) acc = b.relabel(2, 1, acc);
        } else {
            part = build_cw_rec(b, ch, true);
            acc = b.disjoint_union(acc, part);
        }
    }
    return acc;
}

}  // namespace detail

inline cw_expression parse_tree_to_cw_expression(const parse_tree& t) {
    cw_builder b;
    int root = detail::build_cw_rec(b, t.root, false);
    return b.finish(root);
}

}  // namespace happyset
