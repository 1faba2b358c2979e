// Copyright 2026 The qsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsym/fpgroup/coset_enumeration.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace qsym {

CosetTable::CosetTable(std::size_t generator_count, std::size_t cosets, std::vector<std::uint32_t> entries)
    : generators_(generator_count), cosets_(cosets), entries_(std::move(entries)) {
  if (entries_.size() != cosets_ * columns()) throw std::invalid_argument("CosetTable: entry count mismatch");
}

std::uint32_t CosetTable::trace(std::size_t coset, const Word& w) const {
  std::uint32_t c = static_cast<std::uint32_t>(coset);
  for (Letter l : w) {
    c = (*this)(c, l);
    if (c == kUndefined) return kUndefined;
  }
  return c;
}

bool CosetTable::is_closed() const {
  if (cosets_ == 0) return false;
  for (std::size_t c = 0; c < cosets_; ++c) {
    for (Letter l = 0; l < columns(); ++l) {
      const std::uint32_t d = (*this)(c, l);
      if (d == kUndefined || d >= cosets_ || (*this)(d, inverse_letter(l)) != c) return false;
    }
  }
  return true;
}

namespace {

constexpr std::uint32_t kU = CosetTable::kUndefined;

class Enumerator {
 public:
  Enumerator(const Presentation& pres, std::size_t max_cosets)
      : cols_(2 * pres.generator_count()), max_(max_cosets), by_first_(cols_) {
    for (const auto& r : pres.relators()) {
      const Word c = cyclically_reduce(r);
      if (c.empty()) continue;
      relators_.push_back(c);
      for (const Word& base : {c, inverse_word(c)}) {
        for (std::size_t s = 0; s < base.size(); ++s) {
          Word rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
          conjugates_.insert(rot);
        }
      }
    }
    for (const auto& w : conjugates_) by_first_[w.front()].push_back(&w);
  }

  EnumerationResult run(std::span<const Word> subgroup_words) {
    EnumerationResult result;
    if (max_ == 0) return result;
    new_coset();
    for (const auto& w : subgroup_words) {
      scan_and_fill(0, free_reduce(w));
      process_deductions();
      if (overflow_) return finish(result);
    }
    while (!overflow_) {
      fill_table();
      if (overflow_) break;
      // Closure pass: every relator must trace to a cycle at every coset, and
      // every subgroup word at coset 0.
      const std::size_t before = events_;
      for (const auto& w : subgroup_words) scan_and_fill(0, free_reduce(w));
      process_deductions();
      for (std::uint32_t c = 0; c < n_ && !overflow_; ++c) {
        for (const auto& r : relators_) {
          if (p_[c] != c) break;
          scan_and_fill(c, r);
          process_deductions();
        }
      }
      if (events_ == before) break;
    }
    return finish(result);
  }

 private:
  std::uint32_t& at(std::uint32_t c, Letter l) { return tab_[static_cast<std::size_t>(c) * cols_ + l]; }

  std::uint32_t new_coset() {
    const std::uint32_t c = n_++;
    tab_.resize(static_cast<std::size_t>(n_) * cols_, kU);
    p_.push_back(c);
    ++live_;
    ++defined_;
    max_live_ = std::max(max_live_, live_);
    return c;
  }

  // Defines c^x as a new coset. Sets the overflow flag instead when the live
  // coset count is at capacity.
  void define(std::uint32_t c, Letter x) {
    if (live_ >= max_) {
      overflow_ = true;
      return;
    }
    const std::uint32_t d = new_coset();
    at(c, x) = d;
    at(d, inverse_letter(x)) = c;
    deductions_.emplace_back(c, x);
    ++events_;
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (p_[r] != r) r = p_[r];
    while (p_[c] != r) {
      const std::uint32_t next = p_[c];
      p_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    --live_;
    queue_.push_back(b);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    ++events_;
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::uint32_t g = queue_[i];
      for (Letter x = 0; x < cols_; ++x) {
        const std::uint32_t d = at(g, x);
        if (d == kU) continue;
        at(d, inverse_letter(x)) = kU;
        const std::uint32_t mu = rep(g);
        const std::uint32_t nu = rep(d);
        if (at(mu, x) != kU) {
          merge(nu, at(mu, x));
        } else if (at(nu, inverse_letter(x)) != kU) {
          merge(mu, at(nu, inverse_letter(x)));
        } else {
          at(mu, x) = nu;
          at(nu, inverse_letter(x)) = mu;
          deductions_.emplace_back(mu, x);
        }
      }
    }
  }

  void deduce(std::uint32_t f, Letter x, std::uint32_t b) {
    at(f, x) = b;
    at(b, inverse_letter(x)) = f;
    deductions_.emplace_back(f, x);
    ++events_;
  }

  // Traces w from c in both directions; deduces a single missing entry or
  // records a coincidence. Never defines cosets.
  void scan(std::uint32_t c, const Word& w) {
    std::uint32_t f = c;
    std::size_t i = 0;
    std::size_t j = w.size();
    while (i < j && at(f, w[i]) != kU) f = at(f, w[i++]);
    if (i == j) {
      if (f != c) coincidence(f, c);
      return;
    }
    std::uint32_t b = c;
    while (j > i && at(b, inverse_letter(w[j - 1])) != kU) b = at(b, inverse_letter(w[--j]));
    if (j == i) {
      if (f != b) coincidence(f, b);
    } else if (j == i + 1) {
      deduce(f, w[i], b);
    }
  }

  void scan_and_fill(std::uint32_t c, const Word& w) {
    std::uint32_t f = c;
    std::uint32_t b = c;
    std::size_t i = 0;
    std::size_t j = w.size();
    while (true) {
      while (i < j && at(f, w[i]) != kU) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, inverse_letter(w[j - 1])) != kU) b = at(b, inverse_letter(w[--j]));
      if (j == i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        deduce(f, w[i], b);
        return;
      }
      define(f, w[i]);
      if (overflow_) return;
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (p_[c] != c) continue;
      for (const Word* w : by_first_[x]) {
        if (p_[c] != c) break;
        scan(c, *w);
      }
      if (p_[c] != c) continue;
      const std::uint32_t d = at(c, x);
      if (d == kU || p_[d] != d) continue;
      for (const Word* w : by_first_[inverse_letter(x)]) {
        if (p_[d] != d) break;
        scan(d, *w);
      }
    }
  }

  // Fills the first undefined entry until none is left.
  void fill_table() {
    for (std::uint32_t c = 0; c < n_ && !overflow_; ++c) {
      for (Letter x = 0; x < cols_ && p_[c] == c; ++x) {
        if (at(c, x) != kU) continue;
        if (n_ >= 2 * max_ && live_ < n_) c = compact(c);
        define(c, x);
        if (overflow_) return;
        process_deductions();
      }
    }
  }

  // Drops dead cosets, keeping definition order. Only valid with an empty
  // deduction stack. Returns the new number of coset c.
  std::uint32_t compact(std::uint32_t c) {
    std::vector<std::uint32_t> index(n_, kU);
    std::uint32_t live = 0;
    for (std::uint32_t k = 0; k < n_; ++k) {
      if (p_[k] == k) index[k] = live++;
    }
    std::vector<std::uint32_t> tab(static_cast<std::size_t>(live) * cols_, kU);
    for (std::uint32_t k = 0; k < n_; ++k) {
      if (index[k] == kU) continue;
      for (Letter x = 0; x < cols_; ++x) {
        const std::uint32_t d = at(k, x);
        tab[static_cast<std::size_t>(index[k]) * cols_ + x] = d == kU ? kU : index[rep(d)];
      }
    }
    const std::uint32_t moved = index[c];
    tab_ = std::move(tab);
    n_ = live;
    p_.resize(live);
    for (std::uint32_t k = 0; k < live; ++k) p_[k] = k;
    return moved;
  }

  EnumerationResult& finish(EnumerationResult& result) {
    result.cosets_defined = defined_;
    result.max_live_cosets = max_live_;
    if (overflow_) {
      result.status = EnumerationStatus::kOverflow;
      return result;
    }
    // Renumber live cosets breadth-first from coset 0.
    std::vector<std::uint32_t> order{0};
    std::vector<std::uint32_t> index(n_, kU);
    index[0] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
      for (Letter x = 0; x < cols_; ++x) {
        const std::uint32_t d = rep(at(order[h], x));
        if (index[d] == kU) {
          index[d] = static_cast<std::uint32_t>(order.size());
          order.push_back(d);
        }
      }
    }
    std::vector<std::uint32_t> entries(order.size() * cols_);
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (Letter x = 0; x < cols_; ++x) entries[k * cols_ + x] = index[rep(at(order[k], x))];
    }
    result.status = EnumerationStatus::kClosed;
    result.table = CosetTable(cols_ / 2, order.size(), std::move(entries));
    return result;
  }

  std::size_t cols_;
  std::size_t max_;
  std::vector<Word> relators_;
  std::set<Word> conjugates_;
  std::vector<std::vector<const Word*>> by_first_;
  std::vector<std::uint32_t> tab_;
  std::vector<std::uint32_t> p_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::pair<std::uint32_t, Letter>> deductions_;
  std::uint32_t n_ = 0;
  std::size_t live_ = 0;
  std::size_t max_live_ = 0;
  std::size_t defined_ = 0;
  std::size_t events_ = 0;
  bool overflow_ = false;
};

}  // namespace

EnumerationResult todd_coxeter(const Presentation& pres, std::span<const Word> subgroup_words,
                               std::size_t max_cosets) {
  return Enumerator(pres, max_cosets).run(subgroup_words);
}

std::vector<Permutation> regular_representation(const CosetTable& table) {
  if (!table.is_closed()) throw std::invalid_argument("regular_representation: table is not closed");
  std::vector<Permutation> out;
  for (std::size_t g = 0; g < table.generator_count(); ++g) {
    std::vector<Point> img(table.size());
    for (std::size_t c = 0; c < table.size(); ++c) img[c] = table(c, generator_letter(g));
    out.push_back(from_images_unchecked(std::move(img)));
  }
  return out;
}

std::vector<Word> coset_words(const CosetTable& table) {
  if (!table.is_closed()) throw std::invalid_argument("coset_words: table is not closed");
  std::vector<Word> words(table.size());
  std::vector<bool> seen(table.size(), false);
  seen[0] = true;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (Letter l = 0; l < table.columns(); ++l) {
      const auto d = table(c, l);
      if (seen[d]) continue;
      seen[d] = true;
      words[d] = words[c];
      words[d].push_back(l);
      queue.push_back(d);
    }
  }
  return words;
}

}  // namespace qsym
