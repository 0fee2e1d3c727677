#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aluffi/monomial.hpp"

namespace aluffi {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Conventional block names.
namespace blocks {
inline constexpr std::string_view kGeom = "geom";
inline constexpr std::string_view kFiber = "fiber";
inline constexpr std::string_view kParam = "param";
inline constexpr std::string_view kAux = "aux";
}  // namespace blocks

/// Polynomial ring Q[v1..vn] with named variable blocks and a monomial order.
///
/// Rings are immutable and shared through RingPtr. Two rings are the same
/// ring when names, blocks and order agree; pointer identity is only a fast
/// path.
class Ring {
 public:
  struct Block {
    std::string name;
    std::vector<int> vars;
    friend bool operator==(const Block&, const Block&) = default;
  };

  /// All variables in one block named "geom", grevlex order.
  static RingPtr make(std::vector<std::string> names);
  static RingPtr make(std::vector<std::string> names, std::vector<Block> blocks, MonomialOrder order);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<int> index_of(std::string_view name) const;
  /// Throws DomainError for unknown names.
  int require_index(std::string_view name) const;

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block* find_block(std::string_view name) const;
  /// Throws DomainError for unknown blocks.
  const Block& block(std::string_view name) const;
  /// Variables of the named block, empty when the block does not exist.
  std::vector<int> block_vars(std::string_view name) const;
  /// Name of the block holding variable i.
  const std::string& block_of(int var) const;

  const MonomialOrder& order() const noexcept { return order_; }

  /// Same variables and blocks, different order.
  RingPtr with_order(MonomialOrder order) const;
  /// Same variables; the listed blocks (grevlex) dominate the rest (grevlex).
  RingPtr eliminating(std::span<const std::string> block_names) const;
  RingPtr eliminating(std::string_view block_name) const;
  /// Appends a block of fresh variables; the result carries grevlex order.
  RingPtr extended(std::string_view block_name, std::vector<std::string> names) const;
  /// Drops a block; the result carries grevlex order.
  RingPtr without_block(std::string_view block_name) const;
  /// Keeps only the named block; the result carries grevlex order.
  RingPtr only_block(std::string_view block_name) const;

  /// `count` names of the form prefix1..prefixN, made unique against this
  /// ring by lengthening the prefix with '_' if necessary.
  std::vector<std::string> fresh_names(std::string_view prefix, std::size_t count) const;

  /// "ring: x,y,z | params: u | order: grevlex" style header.
  std::string header() const;

  friend bool operator==(const Ring& a, const Ring& b) noexcept;

 private:
  Ring(std::vector<std::string> names, std::vector<Block> blocks, MonomialOrder order);

  std::vector<std::string> names_;
  std::vector<Block> blocks_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;
/// Throws RingMismatch unless the rings agree.
void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what);

}  // namespace aluffi
