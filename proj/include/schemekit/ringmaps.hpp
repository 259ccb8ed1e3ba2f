#pragma once

#include <memory>
#include <string>
#include <vector>

#include "schemekit/ideals.hpp"
#include "schemekit/polyring.hpp"

namespace schemekit {

/// Polynomial ring modulo an ideal. Elements are represented by normal forms.
class QuotientRing {
 public:
  QuotientRing(Ideal defining);

  [[nodiscard]] const RingPtr& base() const { return ideal_.ring(); }
  [[nodiscard]] const Ideal& ideal() const { return ideal_; }
  /// Normal form of f against the defining ideal's basis.
  [[nodiscard]] Polynomial reduce(const Polynomial& f) const;
  [[nodiscard]] std::vector<Polynomial> reduce_all(std::span<const Polynomial> polys) const;
  [[nodiscard]] std::string to_string() const;

 private:
  Ideal ideal_;
};
using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

/// Ring homomorphism determined by one image per source variable. The target is a
/// polynomial ring, optionally taken modulo a quotient ring's ideal.
class RingMap {
 public:
  RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images);
  /// Images are stored reduced modulo the quotient's ideal.
  RingMap(RingPtr source, QuotientRingPtr target, std::vector<Polynomial> images);

  [[nodiscard]] const RingPtr& source() const { return source_; }
  /// The polynomial ring the images live in (the base ring for a quotient target).
  [[nodiscard]] const RingPtr& target() const { return target_; }
  /// Null when the target is a plain polynomial ring.
  [[nodiscard]] const QuotientRingPtr& target_quotient() const { return quotient_; }
  [[nodiscard]] const std::vector<Polynomial>& images() const { return images_; }

  [[nodiscard]] std::string to_string() const;

 private:
  RingPtr source_;
  RingPtr target_;
  QuotientRingPtr quotient_;
  std::vector<Polynomial> images_;
};

RingMap identity_map(const RingPtr& ring);

/// Substitutes the images and reduces in the target quotient when there is one.
Polynomial apply_map(const RingMap& map, const Polynomial& f);
Ideal apply_map_ideal(const RingMap& map, const Ideal& ideal);

/// Kernel by the graph construction: in a scratch ring with the target variables as
/// an eliminated first block, eliminate them from the target ideal plus s_i - image_i.
Ideal kernel(const RingMap& map);

/// outer after inner: x -> outer(inner(x)).
RingMap compose(const RingMap& outer, const RingMap& inner);

}  // namespace schemekit
