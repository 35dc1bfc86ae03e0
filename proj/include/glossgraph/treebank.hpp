#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace glossgraph {

/// Half-open byte interval [start, end) into a gloss string.
struct CharSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool contains(const CharSpan& other) const {
    return start <= other.start && other.end <= end;
  }
  bool overlaps(const CharSpan& other) const {
    return start < other.end && other.start < end;
  }
  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

/// Node of a constituency tree. A leaf carries a preterminal label
/// (e.g. NN) plus exactly one token; internal nodes carry a phrasal
/// label and one or more children. Spans always map into the gloss
/// the tree was parsed against.
struct TreeNode {
  std::string label;
  std::string token;  // leaves only
  std::vector<TreeNode> children;
  CharSpan span;

  bool is_leaf() const { return children.empty(); }
};

struct ParseTree {
  TreeNode root;
  std::string source_text;

  /// Leaf nodes in left-to-right order.
  std::vector<const TreeNode*> leaves() const;
};

/// Parses a Penn-Treebank style bracketing and aligns its leaf tokens
/// with `gloss`, assigning character spans. Functional-tag suffixes and
/// coindexation marks (NP-SBJ-1 -> NP) are stripped from labels. A bare
/// outer wrapper "( (X ...))" is accepted and labeled ROOT.
/// Throws TreeParseError on malformed input or token/gloss mismatch.
ParseTree parse_tree(std::string_view text, std::string_view gloss);

/// Canonical bracketing with single spaces: parse_tree(render(t), gloss)
/// reproduces t.
std::string render(const ParseTree& tree);

/// All nodes whose label is in `labels`, ordered by (span start ascending,
/// depth descending), so the innermost node at the leftmost position
/// comes first.
std::vector<const TreeNode*> find_nodes(const ParseTree& tree,
                                        const std::set<std::string>& labels);

/// True iff `node` or any descendant carries exactly `label`.
bool contains_category(const TreeNode& node, std::string_view label);

}  // namespace glossgraph
