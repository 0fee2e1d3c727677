#pragma once

#include <memory>
#include <string>
#include <vector>

#include "aluffi/polynomial.hpp"
#include "aluffi/ring.hpp"

namespace aluffi {

class GroebnerBasis;

namespace detail {
struct GbCache;
}

/// Finitely generated ideal: a ring plus a generator list. Zero generators
/// are discarded on construction.
///
/// The reduced Groebner basis for the ring's own order is computed on first
/// use and shared between copies; the cache is mutex-protected, so ideals
/// can be read from several threads.
class Ideal {
 public:
  Ideal();
  explicit Ideal(RingPtr ring);
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// Reduced Groebner basis for ring().order(). Cached.
  const GroebnerBasis& groebner() const;

  /// Same generators in another ring (matched by variable name).
  Ideal in_ring(const RingPtr& target) const;

  /// "(g1, g2, ...)".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<detail::GbCache> cache_;
};

}  // namespace aluffi
