#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hyperacyclic::detail {

/// PQ-tree over the elements 0..size-1 (Booth and Lueker templates).
///
/// Q-node children are kept in a list with unordered sibling pointers, so a
/// Q-node is reversed by swapping its two end pointers. Children of a Q-node
/// find their parent through a union-find over "handles" that is merged
/// whenever two Q-nodes are merged; children of a P-node keep a direct
/// parent pointer.
class PQTree {
 public:
  explicit PQTree(std::size_t size);

  /// Restricts the tree to orders in which `elements` are consecutive.
  /// Returns false if no such order is left; the tree is then unusable.
  bool reduce(std::span<const std::uint32_t> elements);

  /// Leaves in frontier order.
  std::vector<std::uint32_t> frontier() const;

 private:
  static constexpr std::uint32_t kNil = static_cast<std::uint32_t>(-1);

  enum class Type : std::uint8_t { leaf, p, q };
  enum class Slot : std::uint8_t { root, in_p, in_q };
  enum class Label : std::uint8_t { empty, partial, full };

  struct Node {
    Type type = Type::leaf;
    Slot slot = Slot::root;
    std::uint32_t parent = kNil;  // valid when slot == in_p
    std::uint32_t handle = kNil;  // valid when slot == in_q
    std::uint32_t sib[2] = {kNil, kNil};
    std::uint32_t first = kNil;   // P: first child
    std::uint32_t end[2] = {kNil, kNil};  // Q: end children; end[1] is the full side of a partial Q
    std::uint32_t child_count = 0;
    std::uint32_t set = kNil;     // Q: any handle of its children's set

    // Per-reduction state, valid while stamp == current round.
    std::uint32_t stamp = 0;
    Label label = Label::empty;
    std::uint32_t pparent = kNil;
    std::uint32_t expected = 0;
    std::uint32_t reported = 0;
    std::uint32_t leaves = 0;
    std::uint32_t full_head = kNil;
    std::uint32_t full_count = 0;
    std::uint32_t partial[2] = {kNil, kNil};
    std::uint32_t partial_count = 0;
    std::uint32_t next_in_list = kNil;
  };

  std::uint32_t new_node(Type type);
  std::uint32_t new_handle(std::uint32_t q);
  std::uint32_t find(std::uint32_t h);
  void merge_sets(std::uint32_t into_q, std::uint32_t from_q);
  std::uint32_t parent_of(std::uint32_t x);

  void p_add(std::uint32_t p, std::uint32_t child);
  void p_remove(std::uint32_t child);
  void q_append(std::uint32_t q, int side, std::uint32_t child);
  void replace_sib(std::uint32_t node, std::uint32_t old_sib, std::uint32_t new_sib);
  void replace_in_parent(std::uint32_t old_node, std::uint32_t new_node);
  void splice(std::uint32_t q, std::uint32_t child, std::uint32_t toward);
  std::uint32_t group_full(std::uint32_t p);
  std::uint32_t single_empty_child(std::uint32_t p);

  bool is_pertinent(std::uint32_t x) const;
  std::uint32_t apply_template(std::uint32_t x, bool is_root);
  std::uint32_t template_p(std::uint32_t x, bool is_root);
  std::uint32_t template_q(std::uint32_t x, bool is_root);

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> uf_parent_;
  std::vector<std::uint32_t> uf_owner_;
  std::uint32_t root_ = kNil;
  std::uint32_t round_ = 0;
  std::size_t size_ = 0;
};

}  // namespace hyperacyclic::detail
