#include "powdom/poset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "powdom/error.hpp"

namespace powdom {

void checkSizeGuard(std::uint64_t count, std::uint64_t guard, std::string_view what) {
  if (count > guard) {
    fail(ErrorKind::SizeGuardExceeded, std::string(what) + " exceeds the size guard of " +
                                           std::to_string(guard));
  }
}

// ---------------------------------------------------------------- ElemBits

void ElemBits::set(std::size_t i, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

std::size_t ElemBits::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElemBits::none() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool ElemBits::isSubsetOf(const ElemBits& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool ElemBits::intersects(const ElemBits& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

ElemBits ElemBits::complement() const {
  ElemBits out(n_);
  for (std::size_t i = 0; i < n_; ++i) out.set(i, !test(i));
  return out;
}

std::vector<Elem> ElemBits::members() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (test(i)) out.push_back(static_cast<Elem>(i));
  }
  return out;
}

ElemBits& ElemBits::operator|=(const ElemBits& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElemBits& ElemBits::operator&=(const ElemBits& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const ElemBits& a, const ElemBits& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- FinPoset

FinPoset::FinPoset(std::string name, std::vector<std::string> labels, std::vector<ElemBits> up)
    : name_(std::move(name)), labels_(std::move(labels)), up_(std::move(up)) {
  const std::size_t n = labels_.size();
  down_.assign(n, ElemBits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (up_[a].test(b)) down_[b].set(a);
    }
  }
  // Kahn's algorithm, smallest index first.
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t b = 0; b < n; ++b) pending[b] = down_[b].count() - 1;
  std::vector<bool> done(n, false);
  linear_.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && pending[i] == 0) {
        pick = i;
        break;
      }
    }
    done[pick] = true;
    linear_.push_back(static_cast<Elem>(pick));
    for (std::size_t b = 0; b < n; ++b) {
      if (b != pick && up_[pick].test(b)) --pending[b];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (linear_[i] != i) indexOrderIsLinear_ = false;
  }
}

namespace {

std::unordered_map<std::string, Elem> labelIndex(const std::vector<std::string>& labels,
                                                 const std::string& poset) {
  std::unordered_map<std::string, Elem> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<Elem>(i)).second) {
      fail(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' repeated in poset " + poset);
    }
  }
  return index;
}

}  // namespace

PosetPtr FinPoset::fromCover(std::string name, std::vector<std::string> labels,
                             const std::vector<CoverPair>& covers) {
  auto index = labelIndex(labels, name);
  const std::size_t n = labels.size();
  std::vector<ElemBits> up(n, ElemBits(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) fail(ErrorKind::UnknownLabel, "'" + lo + "' in poset " + name);
    if (b == index.end()) fail(ErrorKind::UnknownLabel, "'" + hi + "' in poset " + name);
    up[a->second].set(b->second);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (up[i].test(j) && up[j].test(i)) {
        fail(ErrorKind::CycleDetected, "'" + labels[i] + "' and '" + labels[j] +
                                           "' are mutually below each other in poset " + name);
      }
    }
  }
  return PosetPtr(new FinPoset(std::move(name), std::move(labels), std::move(up)));
}

PosetPtr FinPoset::fromOrder(std::string name, std::vector<std::string> labels,
                             std::vector<ElemBits> leqRows) {
  labelIndex(labels, name);
  const std::size_t n = labels.size();
  if (leqRows.size() != n) fail(ErrorKind::InvalidValue, "order matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (leqRows[i].size() != n) fail(ErrorKind::InvalidValue, "order matrix has wrong size");
    if (!leqRows[i].test(i)) fail(ErrorKind::InvalidValue, "order is not reflexive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!leqRows[i].test(j)) continue;
      if (i != j && leqRows[j].test(i)) {
        fail(ErrorKind::CycleDetected, "'" + labels[i] + "' and '" + labels[j] +
                                           "' are mutually below each other in poset " + name);
      }
      if (!leqRows[j].isSubsetOf(leqRows[i])) {
        fail(ErrorKind::InvalidValue, "order is not transitive in poset " + name);
      }
    }
  }
  return PosetPtr(new FinPoset(std::move(name), std::move(labels), std::move(leqRows)));
}

PosetPtr FinPoset::fromTrustedOrder(std::string name, std::vector<std::string> labels,
                                    std::vector<ElemBits> leqRows) {
  labelIndex(labels, name);
  return PosetPtr(new FinPoset(std::move(name), std::move(labels), std::move(leqRows)));
}

std::optional<Elem> FinPoset::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

Elem FinPoset::index(std::string_view label) const {
  auto e = find(label);
  if (!e) fail(ErrorKind::UnknownLabel, "'" + std::string(label) + "' in poset " + name_);
  return *e;
}

const std::vector<std::pair<Elem, Elem>>& FinPoset::covers() const {
  std::call_once(coversOnce_, [this] {
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
      ElemBits strictUp = up_[a];
      strictUp.set(a, false);
      for (Elem b : strictUp.members()) {
        ElemBits between = strictUp & down_[b];
        between.set(b, false);
        if (between.none()) covers_.emplace_back(static_cast<Elem>(a), b);
      }
    }
  });
  return covers_;
}

bool isPartialOrder(const FinPoset& x) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!x.leq(i, i)) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!x.leq(i, j)) continue;
      if (i != j && x.leq(j, i)) return false;
      if (!x.above(j).isSubsetOf(x.above(i))) return false;
    }
  }
  return true;
}

std::optional<Elem> FinPoset::bottom() const {
  for (std::size_t a = 0; a < size(); ++a) {
    if (up_[a].count() == size()) return static_cast<Elem>(a);
  }
  return std::nullopt;
}

std::optional<Elem> FinPoset::top() const {
  for (std::size_t a = 0; a < size(); ++a) {
    if (down_[a].count() == size()) return static_cast<Elem>(a);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- sets

PosetPtr posetFromCover(std::string name, std::vector<std::string> labels,
                        const std::vector<FinPoset::CoverPair>& covers) {
  return FinPoset::fromCover(std::move(name), std::move(labels), covers);
}

bool isUpClosed(const FinPoset& x, const ElemBits& s) {
  for (Elem a : s.members()) {
    if (!x.above(a).isSubsetOf(s)) return false;
  }
  return true;
}

bool isDownClosed(const FinPoset& x, const ElemBits& s) {
  for (Elem a : s.members()) {
    if (!x.below(a).isSubsetOf(s)) return false;
  }
  return true;
}

ElemBits upClosure(const FinPoset& x, const ElemBits& s) {
  ElemBits out(x.size());
  for (Elem a : s.members()) out |= x.above(a);
  return out;
}

ElemBits downClosure(const FinPoset& x, const ElemBits& s) {
  ElemBits out(x.size());
  for (Elem a : s.members()) out |= x.below(a);
  return out;
}

std::vector<ElemSet> allUpSets(const FinPoset& x, std::uint64_t sizeGuard) {
  // Decide elements from the top of a linear extension down: an element may
  // join only if everything strictly above it already has.
  const auto& order = x.linearExtension();
  const std::size_t n = x.size();
  std::vector<ElemSet> out;
  ElemBits current(n);
  auto recurse = [&](auto& self, std::size_t depth) -> void {
    if (depth == n) {
      out.push_back({current, SetKind::UpClosed});
      checkSizeGuard(out.size(), sizeGuard, "up-set enumeration of " + x.name());
      return;
    }
    Elem e = order[n - 1 - depth];
    self(self, depth + 1);
    ElemBits strictUp = x.above(e);
    strictUp.set(e, false);
    if (strictUp.isSubsetOf(current)) {
      current.set(e);
      self(self, depth + 1);
      current.set(e, false);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(),
            [](const ElemSet& a, const ElemSet& b) { return a.members < b.members; });
  return out;
}

std::vector<ElemSet> allDownSets(const FinPoset& x, std::uint64_t sizeGuard) {
  std::vector<ElemSet> out;
  for (const auto& u : allUpSets(x, sizeGuard)) {
    out.push_back({u.members.complement(), SetKind::DownClosed});
  }
  std::sort(out.begin(), out.end(),
            [](const ElemSet& a, const ElemSet& b) { return a.members < b.members; });
  return out;
}

PosetPtr productPoset(const PosetPtr& x, const PosetPtr& y) {
  const std::size_t nx = x->size();
  const std::size_t ny = y->size();
  const std::size_t n = nx * ny;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      labels.push_back("(" + x->label(i) + "," + y->label(j) + ")");
    }
  }
  std::vector<ElemBits> rows(n, ElemBits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (x->leq(a / ny, b / ny) && y->leq(a % ny, b % ny)) rows[a].set(b);
    }
  }
  return FinPoset::fromOrder(x->name() + "x" + y->name(), std::move(labels), std::move(rows));
}

PosetPtr inclusionPoset(std::string name, std::vector<std::string> labels,
                        const std::vector<ElemBits>& sets, bool reverse) {
  const std::size_t n = sets.size();
  std::vector<ElemBits> rows(n, ElemBits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool le = reverse ? sets[b].isSubsetOf(sets[a]) : sets[a].isSubsetOf(sets[b]);
      if (le) rows[a].set(b);
    }
  }
  return FinPoset::fromTrustedOrder(std::move(name), std::move(labels), std::move(rows));
}

std::string formatSet(const FinPoset& x, const ElemBits& s) {
  std::string out = "{";
  bool first = true;
  for (Elem e : s.members()) {
    if (!first) out += ",";
    out += x.label(e);
    first = false;
  }
  return out + "}";
}

namespace {

std::string dotQuote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string hasseDot(const FinPoset& x) {
  std::ostringstream os;
  os << "digraph " << dotQuote(x.name()) << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    os << "  n" << i << " [label=" << dotQuote(x.label(static_cast<Elem>(i))) << "];\n";
  }
  for (auto [a, b] : x.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

bool isOrderIsomorphism(const FinPoset& a, const FinPoset& b, const std::vector<Elem>& mapping) {
  if (a.size() != b.size() || mapping.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Elem m : mapping) {
    if (m >= b.size() || hit[m]) return false;
    hit[m] = true;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.leq(i, j) != b.leq(mapping[i], mapping[j])) return false;
    }
  }
  return true;
}

}  // namespace powdom
