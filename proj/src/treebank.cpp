#include "glossgraph/treebank.hpp"

#include <algorithm>

#include "glossgraph/errors.hpp"

namespace glossgraph {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

struct RawNode {
  std::string label;
  std::vector<std::string> atoms;   // bare tokens directly under this node
  std::vector<RawNode> children;
  std::size_t open_offset = 0;      // offset of this node's '('
};

class BracketReader {
 public:
  explicit BracketReader(std::string_view text) : text_(text) {}

  RawNode read() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '(') {
      throw TreeParseError("expected '('", pos_);
    }
    RawNode root = read_node();
    skip_space();
    if (pos_ < text_.size()) {
      throw TreeParseError("trailing content after tree", pos_);
    }
    return root;
  }

 private:
  RawNode read_node() {
    RawNode node;
    node.open_offset = pos_;
    ++pos_;  // consume '('
    skip_space();
    if (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')') {
      node.label = read_atom();
    }
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        throw TreeParseError("unbalanced '('", pos_);
      }
      char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == '(') {
        node.children.push_back(read_node());
      } else {
        node.atoms.push_back(read_atom());
      }
    }
    if (node.children.empty() && node.atoms.empty()) {
      throw TreeParseError("empty node", node.open_offset);
    }
    return node;
  }

  std::string read_atom() {
    std::size_t begin = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      ++pos_;
    }
    return std::string(text_.substr(begin, pos_ - begin));
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// NP-SBJ-1 -> NP, ADVP=2 -> ADVP. Labels starting with '-' (-NONE-, -LRB-)
// are kept whole.
std::string strip_label(std::string_view label) {
  if (label.empty() || label[0] == '-') return std::string(label);
  std::size_t cut = label.find_first_of("-=");
  return std::string(label.substr(0, cut));
}

TreeNode build_node(const RawNode& raw) {
  TreeNode node;
  node.label = strip_label(raw.label);
  if (node.label.empty()) {
    throw TreeParseError("node without label", raw.open_offset);
  }
  if (raw.children.empty()) {
    if (raw.atoms.size() != 1) {
      throw TreeParseError("leaf must hold exactly one token", raw.open_offset);
    }
    node.token = raw.atoms[0];
    return node;
  }
  if (!raw.atoms.empty()) {
    throw TreeParseError("node mixes tokens and subtrees", raw.open_offset);
  }
  node.children.reserve(raw.children.size());
  for (const RawNode& child : raw.children) {
    node.children.push_back(build_node(child));
  }
  return node;
}

// Aligns leaves with the gloss left to right; leaves own their token's
// characters, inter-token whitespace stays unowned.
std::size_t assign_spans(TreeNode& node, std::string_view gloss, std::size_t pos) {
  if (node.is_leaf()) {
    while (pos < gloss.size() && is_space(gloss[pos])) ++pos;
    if (gloss.compare(pos, node.token.size(), node.token) != 0) {
      throw TreeParseError("leaf token '" + node.token + "' does not match gloss",
                           pos);
    }
    node.span = {pos, pos + node.token.size()};
    return node.span.end;
  }
  for (TreeNode& child : node.children) {
    pos = assign_spans(child, gloss, pos);
  }
  node.span = {node.children.front().span.start, node.children.back().span.end};
  return pos;
}

void render_node(const TreeNode& node, std::string& out) {
  out += '(';
  out += node.label;
  if (node.is_leaf()) {
    out += ' ';
    out += node.token;
  } else {
    for (const TreeNode& child : node.children) {
      out += ' ';
      render_node(child, out);
    }
  }
  out += ')';
}

void collect_leaves(const TreeNode& node, std::vector<const TreeNode*>& out) {
  if (node.is_leaf()) {
    out.push_back(&node);
    return;
  }
  for (const TreeNode& child : node.children) collect_leaves(child, out);
}

void collect_matching(const TreeNode& node, const std::set<std::string>& labels,
                      std::size_t depth,
                      std::vector<std::pair<const TreeNode*, std::size_t>>& out) {
  if (labels.count(node.label) > 0) {
    out.emplace_back(&node, depth);
  }
  for (const TreeNode& child : node.children) {
    collect_matching(child, labels, depth + 1, out);
  }
}

}  // namespace

std::vector<const TreeNode*> ParseTree::leaves() const {
  std::vector<const TreeNode*> out;
  collect_leaves(root, out);
  return out;
}

ParseTree parse_tree(std::string_view text, std::string_view gloss) {
  RawNode raw = BracketReader(text).read();
  if (raw.label.empty() && raw.atoms.empty()) {
    raw.label = "ROOT";
  }
  ParseTree tree;
  tree.root = build_node(raw);
  tree.source_text = std::string(gloss);
  std::size_t end = assign_spans(tree.root, gloss, 0);
  while (end < gloss.size() && is_space(gloss[end])) ++end;
  if (end < gloss.size()) {
    throw TreeParseError("gloss has tokens not covered by the tree", end);
  }
  return tree;
}

std::string render(const ParseTree& tree) {
  std::string out;
  render_node(tree.root, out);
  return out;
}

std::vector<const TreeNode*> find_nodes(const ParseTree& tree,
                                        const std::set<std::string>& labels) {
  std::vector<std::pair<const TreeNode*, std::size_t>> matches;
  collect_matching(tree.root, labels, 0, matches);
  std::stable_sort(matches.begin(), matches.end(),
                   [](const auto& a, const auto& b) {
                     if (a.first->span.start != b.first->span.start) {
                       return a.first->span.start < b.first->span.start;
                     }
                     return a.second > b.second;
                   });
  std::vector<const TreeNode*> out;
  out.reserve(matches.size());
  for (const auto& [node, depth] : matches) out.push_back(node);
  return out;
}

bool contains_category(const TreeNode& node, std::string_view label) {
  if (node.label == label) return true;
  for (const TreeNode& child : node.children) {
    if (contains_category(child, label)) return true;
  }
  return false;
}

}  // namespace glossgraph
