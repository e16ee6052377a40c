#include "powdom/funcspace.hpp"

#include <algorithm>
#include <numeric>

#include "powdom/error.hpp"

namespace powdom {

bool isMonotone(const FinPoset& source, const FinPoset& target, std::span<const Elem> table) {
  for (auto [a, b] : source.covers()) {
    if (!target.leq(table[a], table[b])) return false;
  }
  return true;
}

MonoMap::MonoMap(PosetPtr source, PosetPtr target, std::vector<Elem> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != source_->size()) {
    fail(ErrorKind::InvalidValue, "map table has " + std::to_string(table_.size()) +
                                      " entries, source " + source_->name() + " has " +
                                      std::to_string(source_->size()));
  }
  for (Elem v : table_) {
    if (v >= target_->size()) fail(ErrorKind::UnknownElement, "map value out of range");
  }
  if (!isMonotone(*source_, *target_, table_)) {
    fail(ErrorKind::NonMonotone,
         "map " + mapLabel(*target_, table_) + " : " + source_->name() + " -> " +
             target_->name() + " is not monotone");
  }
}

MonoMap MonoMap::identity(const PosetPtr& x) {
  std::vector<Elem> table(x->size());
  std::iota(table.begin(), table.end(), Elem{0});
  return MonoMap(x, x, std::move(table));
}

MonoMap MonoMap::constant(const PosetPtr& source, const PosetPtr& target, Elem value) {
  return MonoMap(source, target, std::vector<Elem>(source->size(), value));
}

bool MonoMap::leq(const MonoMap& other) const {
  if (source_ != other.source_ || target_ != other.target_) {
    fail(ErrorKind::TypeMismatch, "comparing maps of different types");
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (!target_->leq(table_[i], other.table_[i])) return false;
  }
  return true;
}

MonoMap compose(const MonoMap& u, const MonoMap& v) {
  if (u.target() != v.source()) {
    fail(ErrorKind::TypeMismatch, "cannot compose " + u.source()->name() + " -> " +
                                      u.target()->name() + " with " + v.source()->name() +
                                      " -> " + v.target()->name());
  }
  std::vector<Elem> table(u.table().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = v(u(static_cast<Elem>(i)));
  return MonoMap(u.source(), v.target(), std::move(table));
}

MonoMap precompose(const MonoMap& u, const MonoMap& g) { return compose(u, g); }

std::string mapLabel(const FinPoset& target, std::span<const Elem> table) {
  std::string out = "<";
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i) out += ",";
    out += target.label(table[i]);
  }
  return out + ">";
}

MonoMap ExpPoset::map(Elem i) const {
  auto t = table(i);
  return MonoMap(source_, target_, std::vector<Elem>(t.begin(), t.end()));
}

std::optional<Elem> ExpPoset::find(std::span<const Elem> t) const {
  if (t.size() != width_) return std::nullopt;
  // Binary search over the lexicographically sorted tables.
  std::size_t lo = 0;
  std::size_t hi = count_;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    auto m = table(static_cast<Elem>(mid));
    if (std::lexicographical_compare(m.begin(), m.end(), t.begin(), t.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < count_) {
    auto m = table(static_cast<Elem>(lo));
    if (std::equal(m.begin(), m.end(), t.begin(), t.end())) return static_cast<Elem>(lo);
  }
  return std::nullopt;
}

Elem ExpPoset::indexOf(std::span<const Elem> t) const {
  auto i = find(t);
  if (!i) {
    fail(ErrorKind::NonMonotoneResult, "table " + mapLabel(*target_, t) + " is not a map in [" +
                                           source_->name() + "->" + target_->name() + "]");
  }
  return *i;
}

Elem ExpPoset::indexOf(const MonoMap& m) const {
  if (m.source() != source_ || m.target() != target_) {
    fail(ErrorKind::TypeMismatch, "map does not belong to [" + source_->name() + "->" +
                                      target_->name() + "]");
  }
  return indexOf(m.table());
}

ExpPtr enumerateMonotone(const PosetPtr& x, const PosetPtr& y, std::uint64_t sizeGuard) {
  const std::size_t n = x->size();
  const std::size_t k = y->size();
  const auto& order = x->linearExtension();
  // Constraints per position in the linear extension: earlier positions that
  // lie below the current element.
  std::vector<std::vector<Elem>> preds(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < p; ++q) {
      if (x->leq(order[q], order[p])) preds[p].push_back(order[q]);
    }
  }
  std::vector<Elem> flat;
  std::size_t count = 0;
  std::vector<Elem> table(n, 0);
  auto recurse = [&](auto& self, std::size_t p) -> void {
    if (p == n) {
      flat.insert(flat.end(), table.begin(), table.end());
      ++count;
      checkSizeGuard(count, sizeGuard,
                     "enumeration of [" + x->name() + "->" + y->name() + "]");
      return;
    }
    Elem e = order[p];
    for (Elem v = 0; v < k; ++v) {
      bool ok = true;
      for (Elem q : preds[p]) {
        if (!y->leq(table[q], v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      table[e] = v;
      self(self, p + 1);
    }
  };
  recurse(recurse, 0);

  auto exp = std::shared_ptr<ExpPoset>(new ExpPoset());
  exp->source_ = x;
  exp->target_ = y;
  exp->width_ = n;
  exp->count_ = count;
  if (!x->indexOrderIsLinear()) {
    std::vector<std::size_t> perm(count);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    auto row = [&](std::size_t i) { return flat.begin() + static_cast<std::ptrdiff_t>(i * n); };
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(n), row(b),
                                          row(b) + static_cast<std::ptrdiff_t>(n));
    });
    std::vector<Elem> sorted;
    sorted.reserve(flat.size());
    for (auto i : perm) sorted.insert(sorted.end(), row(i), row(i) + static_cast<std::ptrdiff_t>(n));
    flat = std::move(sorted);
  }
  exp->flat_ = std::move(flat);

  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i) labels.push_back(mapLabel(*y, exp->table(static_cast<Elem>(i))));
  std::vector<ElemBits> rows(count, ElemBits(count));
  for (std::size_t a = 0; a < count; ++a) {
    auto ta = exp->table(static_cast<Elem>(a));
    for (std::size_t b = 0; b < count; ++b) {
      auto tb = exp->table(static_cast<Elem>(b));
      bool le = true;
      for (std::size_t i = 0; i < n && le; ++i) le = y->leq(ta[i], tb[i]);
      if (le) rows[a].set(b);
    }
  }
  exp->poset_ = FinPoset::fromTrustedOrder("[" + x->name() + "->" + y->name() + "]", std::move(labels),
                                    std::move(rows));
  return exp;
}

}  // namespace powdom
