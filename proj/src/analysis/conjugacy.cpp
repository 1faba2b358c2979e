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

#include "qsym/analysis/conjugacy.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace qsym {

std::size_t ConjugacyClass::SlotHash::operator()(std::uint32_t slot) const {
  const std::uint16_t* p = owner->images(slot);
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < owner->base_.size(); ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

bool ConjugacyClass::SlotEq::operator()(std::uint32_t a, std::uint32_t b) const {
  return std::equal(owner->images(a), owner->images(a) + owner->base_.size(), owner->images(b));
}

ConjugacyClass::ConjugacyClass(const StabilizerChain& chain, const Permutation& x, std::size_t memory_cap)
    : chain_(&chain), x_(x), base_(chain.base()), index_(1024, SlotHash{this}, SlotEq{this}) {
  if (!chain.contains(x)) throw std::invalid_argument("ConjugacyClass: element not in group");
  if (chain.degree() > 65535) throw std::invalid_argument("ConjugacyClass: degree above 65535");
  const auto& gens = chain.generators();
  if (gens.size() > 255) throw std::invalid_argument("ConjugacyClass: more than 255 generators");
  std::vector<Permutation> gens_inv;
  for (const auto& s : gens) gens_inv.push_back(inverse(s));

  images_.resize(base_.size());
  encode(x);
  index_.insert(0);
  parent_.push_back(0);
  label_.push_back(0);
  images_.resize(2 * base_.size());

  for (std::size_t head = 0; head < parent_.size(); ++head) {
    const Permutation y = decode(head);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      // Base images of s^-1 y s.
      std::uint16_t* scratch = images_.data() + parent_.size() * base_.size();
      for (std::size_t i = 0; i < base_.size(); ++i) {
        scratch[i] = static_cast<std::uint16_t>(gens[k][y[gens_inv[k][base_[i]]]]);
      }
      const auto slot = static_cast<std::uint32_t>(parent_.size());
      if (index_.find(slot) != index_.end()) continue;
      index_.insert(slot);
      parent_.push_back(static_cast<std::uint32_t>(head));
      label_.push_back(static_cast<std::uint8_t>(k));
      images_.resize((parent_.size() + 1) * base_.size());
      if ((parent_.size() & 0xFFF) == 0 && footprint() > memory_cap) {
        throw CapacityExceeded("conjugacy class enumeration exceeded " + std::to_string(memory_cap) +
                               " bytes after " + std::to_string(parent_.size()) + " elements");
      }
    }
  }
  if (footprint() > memory_cap) throw CapacityExceeded("conjugacy class enumeration exceeded memory cap");
}

void ConjugacyClass::encode(const Permutation& y) {
  std::uint16_t* scratch = images_.data() + parent_.size() * base_.size();
  for (std::size_t i = 0; i < base_.size(); ++i) scratch[i] = static_cast<std::uint16_t>(y[base_[i]]);
}

Permutation ConjugacyClass::decode(std::size_t slot) const {
  // y = u_{k-1} ... u_0 where u_j maps base point j to the current image.
  const auto& levels = chain_->levels();
  std::vector<Point> imgs(images(slot), images(slot) + base_.size());
  Permutation acc(chain_->degree());
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const Permutation u = levels[j].transversal.representative(imgs[j]);
    if (j + 1 < levels.size()) {
      const Permutation ui = inverse(u);
      for (std::size_t k = j + 1; k < imgs.size(); ++k) imgs[k] = ui[imgs[k]];
    }
    acc = u * acc;
  }
  return acc;
}

Permutation ConjugacyClass::element(std::size_t i) const { return decode(i); }

std::optional<std::size_t> ConjugacyClass::index_of(const Permutation& y) const {
  if (!chain_->contains(y)) return std::nullopt;
  // The scratch slot is logically free, so lookups may use it.
  auto* self = const_cast<ConjugacyClass*>(this);
  self->encode(y);
  const auto it = index_.find(static_cast<std::uint32_t>(parent_.size()));
  if (it == index_.end()) return std::nullopt;
  return *it;
}

Permutation ConjugacyClass::transporter(std::size_t i) const {
  std::vector<std::uint8_t> path;
  for (std::size_t s = i; s != 0; s = parent_[s]) path.push_back(label_[s]);
  Permutation t(chain_->degree());
  for (auto it = path.rbegin(); it != path.rend(); ++it) t = t * chain_->generators()[*it];
  return t;
}

std::size_t ConjugacyClass::footprint() const {
  return images_.capacity() * sizeof(std::uint16_t) + parent_.capacity() * sizeof(std::uint32_t) +
         label_.capacity() + index_.size() * 32 + index_.bucket_count() * sizeof(void*);
}

StabilizerChain ConjugacyClass::centralizer() const {
  const std::size_t degree = chain_->degree();
  const BigInt target = chain_->order() / size();
  std::vector<Permutation> gens;
  if (!x_.is_identity()) gens.push_back(x_);
  StabilizerChain c(degree, gens);
  const auto& sgens = chain_->generators();

  auto try_pair = [&](std::size_t i, std::size_t k) {
    const Permutation& s = sgens[k];
    const Permutation y = conjugate(element(i), s);
    const auto j = index_of(y);
    if (!j) throw std::logic_error("centralizer: class not closed under conjugation");
    const Permutation g = transporter(i) * s * inverse(transporter(*j));
    if (c.contains(g)) return;
    gens.push_back(g);
    c = StabilizerChain(degree, gens);
  };

  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick_elem(0, size() - 1);
  std::uniform_int_distribution<std::size_t> pick_gen(0, sgens.empty() ? 0 : sgens.size() - 1);
  int misses = 0;
  while (c.order() < target && !sgens.empty() && misses < 200) {
    const BigInt before = c.order();
    try_pair(pick_elem(rng), pick_gen(rng));
    misses = c.order() == before ? misses + 1 : 0;
  }
  // Schreier generators generate the stabilizer, so a full sweep finishes.
  for (std::size_t i = 0; i < size() && c.order() < target; ++i) {
    for (std::size_t k = 0; k < sgens.size() && c.order() < target; ++k) try_pair(i, k);
  }
  if (c.order() != target) throw std::logic_error("centralizer: order mismatch");
  for (const auto& g : c.generators()) {
    if (g * x_ != x_ * g) throw std::logic_error("centralizer: generator does not commute");
  }
  return c;
}

std::uint64_t conjugacy_class_size(const StabilizerChain& chain, const Permutation& x, std::size_t memory_cap) {
  return ConjugacyClass(chain, x, memory_cap).size();
}

StabilizerChain centralizer(const StabilizerChain& chain, const Permutation& x, std::size_t memory_cap) {
  return ConjugacyClass(chain, x, memory_cap).centralizer();
}

StabilizerChain normalizer_cyclic(const StabilizerChain& chain, const Permutation& g, std::size_t memory_cap) {
  const ConjugacyClass cls(chain, g, memory_cap);
  const StabilizerChain c = cls.centralizer();
  std::vector<Permutation> gens = c.generators();
  const std::uint64_t o = element_order(g);
  std::uint64_t conjugate_powers = 1;
  for (std::uint64_t k = 2; k < o; ++k) {
    if (std::gcd(k, o) != 1) continue;
    const auto idx = cls.index_of(power(g, static_cast<std::int64_t>(k)));
    if (!idx) continue;
    ++conjugate_powers;
    gens.push_back(cls.transporter(*idx));
  }
  StabilizerChain n(chain.degree(), gens);
  if (n.order() != c.order() * conjugate_powers) throw std::logic_error("normalizer_cyclic: order mismatch");
  return n;
}

}  // namespace qsym
