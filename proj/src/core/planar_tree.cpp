#include "core/planar_tree.hpp"

#include <algorithm>

namespace fordalpha {

void TreeBuilder::attach(std::int32_t idx) {
  if (open_.empty()) return;
  Open& top = open_.back();
  if (top.children == 0) {
    nodes_[static_cast<std::size_t>(top.idx)].left = idx;
  } else {
    nodes_[static_cast<std::size_t>(top.idx)].right = idx;
  }
  ++top.children;
}

void TreeBuilder::begin_branch() {
  const auto idx = static_cast<std::int32_t>(nodes_.size());
  attach(idx);
  nodes_.push_back(Node{});
  open_.push_back(Open{idx, 0});
}

void TreeBuilder::add_leaf() {
  const auto idx = static_cast<std::int32_t>(nodes_.size());
  attach(idx);
  nodes_.push_back(Node{});
}

void TreeBuilder::end_branch() {
  if (open_.empty() || open_.back().children != 2)
    throw std::logic_error("TreeBuilder: end_branch without two children");
  open_.pop_back();
}

PlanarTree TreeBuilder::take() {
  if (!complete()) throw std::logic_error("TreeBuilder: incomplete tree");
  PlanarTree t;
  t.nodes_ = std::move(nodes_);
  nodes_.clear();
  return t;
}

PlanarTree PlanarTree::branch(const PlanarTree& left, const PlanarTree& right) {
  PlanarTree t;
  t.nodes_.clear();
  t.nodes_.reserve(1 + left.nodes_.size() + right.nodes_.size());
  const auto shift_l = std::int32_t{1};
  const auto shift_r = static_cast<std::int32_t>(1 + left.nodes_.size());
  t.nodes_.push_back(Node{shift_l, shift_r});
  for (Node n : left.nodes_) {
    if (!n.is_leaf()) {
      n.left += shift_l;
      n.right += shift_l;
    }
    t.nodes_.push_back(n);
  }
  for (Node n : right.nodes_) {
    if (!n.is_leaf()) {
      n.left += shift_r;
      n.right += shift_r;
    }
    t.nodes_.push_back(n);
  }
  return t;
}

std::int64_t PlanarTree::height() const {
  std::int64_t best = 0;
  // (node, shape depth) pairs; graph height = shape depth + 1.
  std::vector<std::pair<std::int32_t, std::int64_t>> stack{{0, 0}};
  while (!stack.empty()) {
    const auto [idx, depth] = stack.back();
    stack.pop_back();
    const Node& n = nodes_[static_cast<std::size_t>(idx)];
    if (n.is_leaf()) {
      best = std::max(best, depth);
    } else {
      stack.emplace_back(n.right, depth + 1);
      stack.emplace_back(n.left, depth + 1);
    }
  }
  return best + 1;
}

ParseError::ParseError(std::size_t byte_offset, const std::string& what)
    : std::runtime_error("parse error at byte " + std::to_string(byte_offset) + ": " + what),
      offset_(byte_offset) {}

std::string encode(const PlanarTree& tree) {
  std::string out;
  out.reserve(static_cast<std::size_t>(2 * tree.node_count()));
  // Positive entries are node indices; -1 means "emit a closing paren".
  std::vector<std::int32_t> stack{0};
  while (!stack.empty()) {
    const std::int32_t item = stack.back();
    stack.pop_back();
    if (item < 0) {
      out.push_back(')');
      continue;
    }
    const PlanarTree::Node& n = tree.node(item);
    if (n.is_leaf()) {
      out.push_back('o');
    } else {
      out.push_back('(');
      stack.push_back(-1);
      stack.push_back(n.right);
      stack.push_back(n.left);
    }
  }
  return out;
}

PlanarTree decode(std::string_view text) {
  TreeBuilder builder;
  std::size_t open_branches = 0;
  std::size_t pos = 0;
  bool done = false;
  for (; pos < text.size(); ++pos) {
    if (done) throw ParseError(pos, "trailing input after complete tree");
    const char c = text[pos];
    switch (c) {
      case 'o':
        builder.add_leaf();
        break;
      case '(':
        builder.begin_branch();
        ++open_branches;
        break;
      case ')':
        if (open_branches == 0) throw ParseError(pos, "unmatched ')'");
        try {
          builder.end_branch();
        } catch (const std::logic_error&) {
          throw ParseError(pos, "branch must have exactly two subtrees");
        }
        --open_branches;
        break;
      default:
        throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
    if (open_branches == 0) done = true;
  }
  if (!done) throw ParseError(text.size(), "unexpected end of input");
  return builder.take();
}

TreeStats stats(const PlanarTree& tree) {
  TreeStats s;
  s.leaves = tree.leaf_count();
  s.internal_edges = tree.internal_edge_count();
  s.leaf_edges = tree.leaf_edge_count();
  s.height = tree.height();
  return s;
}

BallShape::BallShape(PlanarTree shape_in, std::int64_t radius_in)
    : shape(std::move(shape_in)), radius(radius_in) {
  if (radius < 1) throw std::invalid_argument("ball radius must be >= 1");
  if (shape.height() > radius)
    throw std::invalid_argument("ball shape taller than its radius");
}

BallShape ball(const PlanarTree& tree, std::int64_t radius) {
  if (radius < 1) throw std::invalid_argument("ball radius must be >= 1");
  TreeBuilder builder;
  struct Frame {
    std::int32_t idx;
    std::int64_t depth;  // shape depth; graph distance is depth + 1
    bool closing;
  };
  std::vector<Frame> stack{{0, 0, false}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.closing) {
      builder.end_branch();
      continue;
    }
    const PlanarTree::Node& n = tree.node(f.idx);
    // Vertices at graph distance == radius become leaves of the ball.
    if (n.is_leaf() || f.depth + 1 >= radius) {
      builder.add_leaf();
      continue;
    }
    builder.begin_branch();
    stack.push_back({f.idx, f.depth, true});
    stack.push_back({n.right, f.depth + 1, false});
    stack.push_back({n.left, f.depth + 1, false});
  }
  return BallShape(builder.take(), radius);
}

std::int64_t edges_in_ball(const PlanarTree& tree, std::int64_t radius) {
  return 2 * ball(tree, radius).shape.leaf_count() - 1;
}

std::pair<std::int64_t, std::int64_t> distance(const PlanarTree& a, const PlanarTree& b) {
  if (a == b) return {0, 1};
  const std::int64_t max_radius = std::max(a.height(), b.height());
  std::int64_t agree = 0;
  for (std::int64_t r = 1; r < max_radius; ++r) {
    if (ball(a, r).shape == ball(b, r).shape)
      agree = r;
    else
      break;
  }
  return {1, 1 + agree};
}

PlanarTree mirror(const PlanarTree& tree) {
  TreeBuilder builder;
  struct Frame {
    std::int32_t idx;
    bool closing;
  };
  std::vector<Frame> stack{{0, false}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.closing) {
      builder.end_branch();
      continue;
    }
    const PlanarTree::Node& n = tree.node(f.idx);
    if (n.is_leaf()) {
      builder.add_leaf();
      continue;
    }
    builder.begin_branch();
    stack.push_back({f.idx, true});
    stack.push_back({n.left, false});
    stack.push_back({n.right, false});
  }
  return builder.take();
}

PlanarTree graft_above(const PlanarTree& tree, std::int64_t node_index, bool new_leaf_left) {
  if (node_index < 0 || node_index >= tree.node_count())
    throw std::invalid_argument("graft_above: node index out of range");
  TreeBuilder builder;
  struct Frame {
    std::int32_t idx;
    bool closing;
    bool graft_here;
  };
  std::vector<Frame> stack{{0, false, node_index == 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.closing) {
      builder.end_branch();
      continue;
    }
    if (f.graft_here) {
      builder.begin_branch();
      if (new_leaf_left) builder.add_leaf();
      stack.push_back({f.idx, true, false});
      if (!new_leaf_left) stack.push_back({-1, false, false});  // sentinel: leaf after subtree
      stack.push_back({f.idx, false, false});
      // Re-push order gives: [subtree] then optional trailing leaf then close.
      continue;
    }
    if (f.idx < 0) {  // sentinel emitted after the displaced subtree
      builder.add_leaf();
      continue;
    }
    const PlanarTree::Node& n = tree.node(f.idx);
    if (n.is_leaf()) {
      builder.add_leaf();
      continue;
    }
    builder.begin_branch();
    stack.push_back({f.idx, true, false});
    stack.push_back({n.right, false, n.right == node_index});
    stack.push_back({n.left, false, n.left == node_index});
  }
  return builder.take();
}

double mean_leaf_depth(const PlanarTree& tree) {
  std::int64_t total = 0;
  std::vector<std::pair<std::int32_t, std::int64_t>> stack{{0, 1}};
  while (!stack.empty()) {
    const auto [idx, depth] = stack.back();
    stack.pop_back();
    const PlanarTree::Node& n = tree.node(idx);
    if (n.is_leaf()) {
      total += depth;
    } else {
      stack.emplace_back(n.right, depth + 1);
      stack.emplace_back(n.left, depth + 1);
    }
  }
  return static_cast<double>(total) / static_cast<double>(tree.leaf_count());
}

std::vector<PlanarTree> enumerate_trees(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: n must be >= 1");
  std::vector<std::vector<PlanarTree>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[1] = {PlanarTree::leaf()};
  for (std::int64_t size = 2; size <= n; ++size) {
    auto& out = by_size[static_cast<std::size_t>(size)];
    for (std::int64_t k = 1; k < size; ++k) {
      for (const auto& left : by_size[static_cast<std::size_t>(k)])
        for (const auto& right : by_size[static_cast<std::size_t>(size - k)])
          out.push_back(PlanarTree::branch(left, right));
    }
  }
  return std::move(by_size[static_cast<std::size_t>(n)]);
}

std::vector<PlanarTree> enumerate_shapes_up_to_height(std::int64_t max_height) {
  if (max_height < 1)
    throw std::invalid_argument("enumerate_shapes_up_to_height: height must be >= 1");
  std::vector<PlanarTree> shapes{PlanarTree::leaf()};
  for (std::int64_t h = 2; h <= max_height; ++h) {
    std::vector<PlanarTree> next{PlanarTree::leaf()};
    for (const auto& left : shapes)
      for (const auto& right : shapes) next.push_back(PlanarTree::branch(left, right));
    shapes = std::move(next);
  }
  return shapes;
}

}  // namespace fordalpha
