#pragma once

/**
 * Rooted planar binary trees.
 *
 * A tree is a root vertex of degree one attached by a single edge to a shape:
 * either a leaf, or an ordered pair of sub-shapes. PlanarTree stores the shape
 * as a flat preorder node array, so structural equality is a vector compare
 * and every operation runs iteratively (no recursion; million-leaf combs are
 * fine).
 *
 * Conventions used throughout the library:
 * - a tree with n leaves has 2n vertices (root included), n leaf edges and
 *   n-1 internal edges;
 * - height counts edges from the root, so the one-leaf tree has height 1;
 * - the canonical text form is the grammar  T := "o" | "(" T T ")".
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fordalpha {

class PlanarTree {
 public:
  struct Node {
    std::int32_t left = -1;
    std::int32_t right = -1;
    bool is_leaf() const { return left < 0; }
    bool operator==(const Node&) const = default;
  };

  // Default-constructed tree is the single leaf.
  PlanarTree() : nodes_(1) {}

  static PlanarTree leaf() { return PlanarTree(); }
  static PlanarTree branch(const PlanarTree& left, const PlanarTree& right);

  std::int64_t node_count() const { return static_cast<std::int64_t>(nodes_.size()); }
  std::int64_t leaf_count() const { return (node_count() + 1) / 2; }
  std::int64_t internal_edge_count() const { return leaf_count() - 1; }
  std::int64_t leaf_edge_count() const { return leaf_count(); }

  // Edges from the root to the deepest leaf; the single leaf has height 1.
  std::int64_t height() const;

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::int64_t i) const { return nodes_[static_cast<std::size_t>(i)]; }

  bool operator==(const PlanarTree&) const = default;

 private:
  friend class TreeBuilder;
  std::vector<Node> nodes_;  // preorder; node 0 is the child of the root
};

// Incremental preorder construction. begin_branch()/add_leaf() append nodes in
// preorder and wire them to the innermost open branch; end_branch() closes it.
class TreeBuilder {
 public:
  void begin_branch();
  void add_leaf();
  void end_branch();
  bool complete() const { return open_.empty() && !nodes_.empty(); }
  PlanarTree take();

 private:
  void attach(std::int32_t idx);
  struct Open {
    std::int32_t idx;
    int children = 0;
  };
  std::vector<PlanarTree::Node> nodes_;
  std::vector<Open> open_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t byte_offset, const std::string& what);
  std::size_t byte_offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Canonical text form: "o" | "(TT)". decode throws ParseError with the byte
// offset of the first offending position.
std::string encode(const PlanarTree& tree);
PlanarTree decode(std::string_view text);

struct TreeStats {
  std::int64_t leaves = 0;
  std::int64_t internal_edges = 0;
  std::int64_t leaf_edges = 0;
  std::int64_t height = 0;
};

TreeStats stats(const PlanarTree& tree);

// A tree tagged with the ball radius it was cut at; height never exceeds the
// radius, and members of T^(R) are exactly the full-height shapes.
struct BallShape {
  BallShape(PlanarTree shape_in, std::int64_t radius_in);
  bool full_height() const { return shape.height() == radius; }

  PlanarTree shape;
  std::int64_t radius;
};

// Subtree spanned by the vertices at distance <= radius from the root;
// vertices at distance exactly radius become leaves. radius >= 1.
BallShape ball(const PlanarTree& tree, std::int64_t radius);
std::int64_t edges_in_ball(const PlanarTree& tree, std::int64_t radius);

// Exact metric value d(a,b) as a reduced fraction (num, den): 0 for equal
// trees, else 1/(1+R*) with R* the largest radius whose balls agree.
std::pair<std::int64_t, std::int64_t> distance(const PlanarTree& a, const PlanarTree& b);

PlanarTree mirror(const PlanarTree& tree);

// New tree obtained by subdividing the edge above `node_index` and attaching a
// fresh leaf on the requested side; the displaced subtree keeps its planar
// position below the new vertex. node_index 0 grafts at the root edge.
PlanarTree graft_above(const PlanarTree& tree, std::int64_t node_index, bool new_leaf_left);

double mean_leaf_depth(const PlanarTree& tree);

// All shapes with exactly n leaves, in a deterministic order; |T_n| is the
// (n-1)-st Catalan number, so keep n modest.
std::vector<PlanarTree> enumerate_trees(std::int64_t n);

// All shapes of height <= max_height (sizes follow t(R) = 1 + t(R-1)^2).
std::vector<PlanarTree> enumerate_shapes_up_to_height(std::int64_t max_height);

}  // namespace fordalpha
