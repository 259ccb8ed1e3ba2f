#include "schemekit/ringmaps.hpp"

#include <set>

#include "schemekit/polymatrix.hpp"

namespace schemekit {

QuotientRing::QuotientRing(Ideal defining) : ideal_(std::move(defining)) {}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  require_same_ring(base(), f.ring(), "quotient ring element");
  if (ideal_.is_zero()) return f;
  return normal_form(f, ideal_.basis());
}

std::vector<Polynomial> QuotientRing::reduce_all(std::span<const Polynomial> polys) const {
  if (ideal_.is_zero()) return {polys.begin(), polys.end()};
  return normal_forms(polys, ideal_.basis());
}

std::string QuotientRing::to_string() const { return base()->to_string() + " / " + ideal_.to_string(); }

namespace {

void check_images(const RingPtr& source, const RingPtr& target, const std::vector<Polynomial>& images) {
  if (images.size() != source->num_variables()) {
    throw DimensionMismatch("map: expected " + std::to_string(source->num_variables()) + " images, got " +
                            std::to_string(images.size()));
  }
  if (source->domain() != target->domain()) throw RingMismatch("map: source and target coefficient domains differ");
  for (const auto& p : images) require_same_ring(target, p.ring(), "map image");
}

}  // namespace

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  check_images(source_, target_, images_);
}

RingMap::RingMap(RingPtr source, QuotientRingPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(target->base()), quotient_(std::move(target)) {
  check_images(source_, target_, images);
  images_ = quotient_->reduce_all(images);
}

std::string RingMap::to_string() const {
  std::string s = "map(" + (quotient_ ? quotient_->to_string() : target_->to_string()) + ", " +
                  source_->to_string() + ", {";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i != 0) s += ", ";
    s += source_->variable(i) + " => " + images_[i].to_string();
  }
  return s + "})";
}

RingMap identity_map(const RingPtr& ring) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) images.push_back(Polynomial::variable(ring, i));
  return {ring, ring, std::move(images)};
}

namespace {

Polynomial substitute_images(const RingMap& map, const Polynomial& f) {
  require_same_ring(map.source(), f.ring(), "map application");
  std::vector<std::optional<Polynomial>> assignment(map.images().begin(), map.images().end());
  return substitute_vars(f, map.target(), assignment);
}

}  // namespace

Polynomial apply_map(const RingMap& map, const Polynomial& f) {
  Polynomial image = substitute_images(map, f);
  return map.target_quotient() ? map.target_quotient()->reduce(image) : image;
}

Ideal apply_map_ideal(const RingMap& map, const Ideal& ideal) {
  require_same_ring(map.source(), ideal.ring(), "map application");
  std::vector<Polynomial> images;
  for (const auto& g : ideal.generators()) images.push_back(substitute_images(map, g));
  if (map.target_quotient()) images = map.target_quotient()->reduce_all(images);
  return Ideal(map.target(), std::move(images));
}

Ideal kernel(const RingMap& map) {
  const RingPtr& source = map.source();
  const RingPtr& target = map.target();
  const std::size_t nt = target->num_variables();
  const std::size_t ns = source->num_variables();

  std::set<std::string> taken(source->variables().begin(), source->variables().end());
  std::vector<std::string> names;
  for (const auto& n : target->variables()) {
    std::string name = n;
    for (std::size_t k = 0; taken.count(name) != 0; ++k) name = n + "'" + std::to_string(k);
    taken.insert(name);
    names.push_back(name);
  }
  names.insert(names.end(), source->variables().begin(), source->variables().end());
  const RingPtr graph = Ring::make(target->domain(), names, MonomialOrder::eliminate(nt));

  std::vector<std::size_t> from_target(nt);
  for (std::size_t i = 0; i < nt; ++i) from_target[i] = i;
  std::vector<std::size_t> to_source(nt + ns, kDropVariable);
  for (std::size_t i = 0; i < ns; ++i) to_source[nt + i] = i;

  std::vector<Polynomial> gens;
  if (map.target_quotient()) {
    for (const auto& g : map.target_quotient()->ideal().generators()) gens.push_back(relabel(g, graph, from_target));
  }
  for (std::size_t i = 0; i < ns; ++i) {
    gens.push_back(Polynomial::variable(graph, nt + i) - relabel(map.images()[i], graph, from_target));
  }
  const GroebnerBasis gb = groebner_basis(graph, gens);
  std::vector<Polynomial> out;
  for (const auto& e : select_in_subring(1, gb)) out.push_back(relabel(e, source, to_source));
  return Ideal(source, std::move(out));
}

RingMap compose(const RingMap& outer, const RingMap& inner) {
  require_same_ring(inner.target(), outer.source(), "map composition");
  std::vector<Polynomial> images;
  for (const auto& p : inner.images()) images.push_back(substitute_images(outer, p));
  if (outer.target_quotient()) return {inner.source(), outer.target_quotient(), std::move(images)};
  return {inner.source(), outer.target(), std::move(images)};
}

}  // namespace schemekit
