#include "vedeg/alkane.hpp"

#include <algorithm>
#include <vector>

#include "vedeg/tree_canon.hpp"

namespace vedeg {

namespace {

constexpr int kMaxValence = 4;

}  // namespace

Graph parse_alkane(std::string_view s, int line) {
    std::vector<std::pair<int, int>> bonds;
    std::vector<int> valence;             // degree so far per atom
    std::vector<int> open_cols;           // columns of unmatched '('
    std::vector<int> attach{-1};          // attachment atom per nesting level
    std::vector<char> pending{0};         // branch seen since last atom, per level
    bool just_opened = false;

    auto fail = [&](int col, const std::string& message) -> ParseError {
        return ParseError(line, col, message);
    };

    for (size_t i = 0; i < s.size(); ++i) {
        const int col = static_cast<int>(i) + 1;
        const char ch = s[i];
        switch (ch) {
            case 'C': {
                int atom = static_cast<int>(valence.size());
                valence.push_back(0);
                int cur = attach.back();
                if (cur >= 0) {
                    if (valence[cur] == kMaxValence)
                        throw fail(col, "valence exceeds 4 at atom " + std::to_string(cur + 1));
                    ++valence[cur];
                    ++valence[atom];
                    bonds.emplace_back(cur, atom);
                }
                attach.back() = atom;
                pending.back() = 0;
                just_opened = false;
                break;
            }
            case '(': {
                if (attach.back() < 0)
                    throw fail(col, "branch before any atom");
                if (just_opened)
                    throw fail(col, "expected atom after '('");
                open_cols.push_back(col);
                attach.push_back(attach.back());
                pending.push_back(0);
                just_opened = true;
                break;
            }
            case ')': {
                if (open_cols.empty())
                    throw fail(col, "unmatched ')'");
                if (just_opened)
                    throw fail(col, "empty branch");
                if (pending.back())
                    throw fail(col, "expected atom after branch");
                open_cols.pop_back();
                attach.pop_back();
                pending.pop_back();
                pending.back() = 1;
                break;
            }
            default:
                throw fail(col, std::string("illegal character '") + ch + "'");
        }
    }

    const int end_col = static_cast<int>(s.size()) + 1;
    if (valence.empty())
        throw fail(1, "empty input");
    if (!open_cols.empty())
        throw fail(open_cols.back(), "unclosed '('");
    if (pending.back())
        throw fail(end_col, "expected atom after branch");

    return Graph::from_edge_list(static_cast<int>(valence.size()), bonds);
}

namespace {

// Subtree emission orders: children sorted by their rooted canonical form so
// the output depends only on the isomorphism class.
std::vector<VertexId> ordered_children(const Graph& g, VertexId v, VertexId parent) {
    std::vector<std::pair<std::string, VertexId>> keyed;
    for (VertexId w : g.neighbors(v))
        if (w != parent)
            keyed.emplace_back(rooted_canonical_form(g, w, v), w);
    std::sort(keyed.begin(), keyed.end());
    std::vector<VertexId> out;
    out.reserve(keyed.size());
    for (auto& [key, w] : keyed)
        out.push_back(w);
    return out;
}

// Standard downstream emission: "C", branches of all children but the last
// parenthesized, last child inline.
void emit_sub(const Graph& g, VertexId v, VertexId parent, std::string& out) {
    out += 'C';
    auto children = ordered_children(g, v, parent);
    for (size_t i = 0; i < children.size(); ++i) {
        if (i + 1 < children.size()) {
            out += '(';
            emit_sub(g, children[i], v, out);
            out += ')';
        } else {
            emit_sub(g, children[i], v, out);
        }
    }
}

// Emission of v's subtree as a chain ending at v: the first child's subtree
// becomes the leading chain, remaining children dangle as branches after v,
// and whatever follows in the output bonds to v.
void emit_entry(const Graph& g, VertexId v, VertexId parent, std::string& out) {
    auto children = ordered_children(g, v, parent);
    if (!children.empty())
        emit_entry(g, children[0], v, out);
    out += 'C';
    for (size_t i = 1; i < children.size(); ++i) {
        out += '(';
        emit_sub(g, children[i], v, out);
        out += ')';
    }
}

}  // namespace

std::string render_alkane(const Graph& g) {
    if (!g.is_tree())
        throw GraphError("render_alkane requires a tree");
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > kMaxValence)
            throw GraphError("render_alkane requires max degree 4, vertex " + std::to_string(v) +
                             " has degree " + std::to_string(g.degree(v)));

    auto centroids = tree_centroids(g);
    VertexId root = centroids[0];
    if (centroids.size() == 2 &&
        rooted_canonical_form(g, centroids[1]) < rooted_canonical_form(g, centroids[0]))
        root = centroids[1];

    std::string out;
    auto children = ordered_children(g, root, -1);
    if (children.empty()) {
        out = "C";
    } else if (children.size() == 1) {
        emit_entry(g, children[0], root, out);
        out += 'C';
    } else {
        emit_entry(g, children[0], root, out);
        out += 'C';
        for (size_t i = 1; i + 1 < children.size(); ++i) {
            out += '(';
            emit_sub(g, children[i], root, out);
            out += ')';
        }
        emit_sub(g, children.back(), root, out);
    }
    return out;
}

}  // namespace vedeg
