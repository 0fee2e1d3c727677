#include "aluffi/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "aluffi/errors.hpp"

namespace aluffi {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

Ring::Ring(std::vector<std::string> names, std::vector<Block> blocks, MonomialOrder order)
    : names_(std::move(names)), blocks_(std::move(blocks)), order_(std::move(order)) {}

RingPtr Ring::make(std::vector<std::string> names) {
  Block geom{std::string(blocks::kGeom), {}};
  for (std::size_t i = 0; i < names.size(); ++i) geom.vars.push_back(static_cast<int>(i));
  auto order = MonomialOrder::grevlex(names.size());
  std::vector<Block> bl;
  if (!names.empty()) bl.push_back(std::move(geom));
  return make(std::move(names), std::move(bl), std::move(order));
}

RingPtr Ring::make(std::vector<std::string> names, std::vector<Block> blocks, MonomialOrder order) {
  if (names.size() > kMaxVars) throw DomainError("too many variables (max 32)");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_identifier(n)) throw DomainError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  }
  std::vector<int> owner(names.size(), -1);
  std::set<std::string> block_names;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (!block_names.insert(blocks[b].name).second) throw DomainError("duplicate block '" + blocks[b].name + "'");
    for (int v : blocks[b].vars) {
      if (v < 0 || static_cast<std::size_t>(v) >= names.size()) throw DomainError("block variable out of range");
      if (owner[v] != -1) throw DomainError("variable '" + names[v] + "' is in two blocks");
      owner[v] = static_cast<int>(b);
    }
  }
  for (std::size_t v = 0; v < names.size(); ++v)
    if (owner[v] == -1) throw DomainError("variable '" + names[v] + "' belongs to no block");
  if (order.arity() != names.size()) throw DomainError("monomial order arity does not match ring");
  return RingPtr(new Ring(std::move(names), std::move(blocks), std::move(order)));
}

std::optional<int> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

int Ring::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw DomainError("unknown variable '" + std::string(name) + "'");
  return *i;
}

const Ring::Block* Ring::find_block(std::string_view name) const {
  for (const auto& b : blocks_)
    if (b.name == name) return &b;
  return nullptr;
}

const Ring::Block& Ring::block(std::string_view name) const {
  const Block* b = find_block(name);
  if (!b) throw DomainError("unknown block '" + std::string(name) + "'");
  return *b;
}

std::vector<int> Ring::block_vars(std::string_view name) const {
  const Block* b = find_block(name);
  return b ? b->vars : std::vector<int>{};
}

const std::string& Ring::block_of(int var) const {
  for (const auto& b : blocks_)
    if (std::find(b.vars.begin(), b.vars.end(), var) != b.vars.end()) return b.name;
  throw DomainError("variable index out of range");
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(names_, blocks_, std::move(order)); }

RingPtr Ring::eliminating(std::span<const std::string> block_names) const {
  std::vector<int> first;
  for (const auto& n : block_names) {
    const auto& b = block(n);
    first.insert(first.end(), b.vars.begin(), b.vars.end());
  }
  std::sort(first.begin(), first.end());
  return with_order(MonomialOrder::elimination(names_.size(), first));
}

RingPtr Ring::eliminating(std::string_view block_name) const {
  std::string n(block_name);
  return eliminating(std::span<const std::string>(&n, 1));
}

RingPtr Ring::extended(std::string_view block_name, std::vector<std::string> names) const {
  auto all = names_;
  auto bl = blocks_;
  Block* target = nullptr;
  for (auto& b : bl)
    if (b.name == block_name) target = &b;
  if (!target) {
    bl.push_back(Block{std::string(block_name), {}});
    target = &bl.back();
  }
  for (auto& n : names) {
    target->vars.push_back(static_cast<int>(all.size()));
    all.push_back(std::move(n));
  }
  auto order = MonomialOrder::grevlex(all.size());
  return make(std::move(all), std::move(bl), std::move(order));
}

RingPtr Ring::without_block(std::string_view block_name) const {
  std::vector<std::string> keep;
  std::vector<int> remap(names_.size(), -1);
  for (std::size_t v = 0; v < names_.size(); ++v) {
    if (block_of(static_cast<int>(v)) == block_name) continue;
    remap[v] = static_cast<int>(keep.size());
    keep.push_back(names_[v]);
  }
  std::vector<Block> bl;
  for (const auto& b : blocks_) {
    if (b.name == block_name) continue;
    Block nb{b.name, {}};
    for (int v : b.vars) nb.vars.push_back(remap[v]);
    bl.push_back(std::move(nb));
  }
  auto order = MonomialOrder::grevlex(keep.size());
  return make(std::move(keep), std::move(bl), std::move(order));
}

RingPtr Ring::only_block(std::string_view block_name) const {
  const auto& b = block(block_name);
  std::vector<std::string> keep;
  for (int v : b.vars) keep.push_back(names_[v]);
  Block nb{b.name, {}};
  for (std::size_t i = 0; i < keep.size(); ++i) nb.vars.push_back(static_cast<int>(i));
  auto order = MonomialOrder::grevlex(keep.size());
  std::vector<Block> bl;
  if (!keep.empty()) bl.push_back(std::move(nb));
  return make(std::move(keep), std::move(bl), std::move(order));
}

std::vector<std::string> Ring::fresh_names(std::string_view prefix, std::size_t count) const {
  std::string p(prefix);
  for (;;) {
    std::vector<std::string> out;
    bool clash = false;
    for (std::size_t i = 1; i <= count; ++i) {
      auto n = count == 1 && p.front() == '_' ? p : p + std::to_string(i);
      if (index_of(n)) clash = true;
      out.push_back(std::move(n));
    }
    if (!clash) return out;
    p += '_';
  }
}

std::string Ring::header() const {
  auto join = [&](const std::vector<int>& vars) {
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + names_[vars[i]];
    return s;
  };
  std::string out = "ring: ";
  std::vector<int> rest;
  for (std::size_t v = 0; v < names_.size(); ++v)
    if (block_of(static_cast<int>(v)) != blocks::kParam) rest.push_back(static_cast<int>(v));
  out += join(rest);
  if (const Block* p = find_block(blocks::kParam); p && !p->vars.empty()) out += " | params: " + join(p->vars);
  out += " | order: " + order_.name();
  return out;
}

bool operator==(const Ring& a, const Ring& b) noexcept {
  return a.names_ == b.names_ && a.blocks_ == b.blocks_ && a.order_ == b.order_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what) {
  if (!same_ring(a, b)) throw RingMismatch(std::string(what) + ": operands live in different rings");
}

}  // namespace aluffi
