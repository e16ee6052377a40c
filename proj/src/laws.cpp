#include "powdom/laws.hpp"

namespace powdom {

std::string_view to_string(Relation rel) noexcept {
  switch (rel) {
    case Relation::Equal: return "=";
    case Relation::LessEq: return "<=";
    case Relation::GreaterEq: return ">=";
  }
  return "?";
}

Relation relationFor(Tag tag) noexcept {
  switch (tag) {
    case Tag::LE: return Relation::LessEq;
    case Tag::GE: return Relation::GreaterEq;
    case Tag::EQ: return Relation::Equal;
  }
  return Relation::Equal;
}

SlotSource<ExtNN> scalarSlots() {
  SlotSource<ExtNN> src;
  src.grid = scalarGrid();
  src.sample = [](Sampler& s) { return s.extnn(); };
  src.exhaustive = false;
  src.format = [](const ExtNN& v) { return v.str(); };
  return src;
}

FiniteEndoSpace::FiniteEndoSpace(const FinAlgebra& r) : r_(&r) {
  for (const auto& e : endomorphisms(r)) endos_.push_back(std::get<MonoMap>(e.action).table());
}

FiniteEndoSpace::FiniteEndoSpace(const FinAlgebra& r, std::vector<endo_type> endos)
    : r_(&r), endos_(std::move(endos)) {}

FiniteEndoSpace::endo_type FiniteEndoSpace::identity() const {
  endo_type id(r_->size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Elem>(i);
  return id;
}

FiniteEndoSpace::endo_type FiniteEndoSpace::compose(const endo_type& a, const endo_type& b) const {
  endo_type out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

FiniteEndoSpace::endo_type FiniteEndoSpace::applyOp(std::size_t op, std::span<const ExtNN> params,
                                                    std::span<const endo_type> args) const {
  endo_type out(r_->size());
  std::vector<Elem> point(args.size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    for (std::size_t k = 0; k < args.size(); ++k) point[k] = args[k][x];
    out[x] = r_->apply(op, params, point);
  }
  return out;
}

std::string FiniteEndoSpace::format(const endo_type& e) const {
  return mapLabel(*r_->carrier(), e);
}

SlotSource<FiniteEndoSpace::endo_type> FiniteEndoSpace::slots() const {
  SlotSource<endo_type> src;
  src.grid = endos_;
  const auto* endos = &endos_;
  src.sample = [endos](Sampler& s) { return (*endos)[s.below(endos->size())]; };
  src.exhaustive = true;
  src.format = [this](const endo_type& e) { return format(e); };
  return src;
}

}  // namespace powdom
