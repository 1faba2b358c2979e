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

#include "qsym/groups/classical.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "qsym/groups/finite_field.hpp"

namespace qsym {

BigInt gl_order(std::uint32_t n, const BigInt& q) {
  BigInt out = boost::multiprecision::pow(q, n * (n - 1) / 2);
  for (std::uint32_t k = 1; k <= n; ++k) out *= boost::multiprecision::pow(q, k) - 1;
  return out;
}

BigInt gu_order(std::uint32_t n, const BigInt& q) {
  BigInt out = boost::multiprecision::pow(q, n * (n - 1) / 2);
  for (std::uint32_t k = 1; k <= n; ++k) {
    out *= boost::multiprecision::pow(q, k) + (k % 2 == 1 ? 1 : -1);
  }
  return out;
}

BigInt psl_order(std::uint32_t n, std::uint32_t q) {
  return gl_order(n, q) / (q - 1) / std::gcd(n, q - 1);
}

BigInt psu_order(std::uint32_t n, std::uint32_t q) {
  return gu_order(n, q) / (q + 1) / std::gcd(n, q + 1);
}

std::vector<Permutation> alternating_generators(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("alternating_generators: n < 3");
  std::vector<Point> cyc(n);
  std::iota(cyc.begin(), cyc.end(), Point{0});
  const std::uint32_t start = n % 2 == 1 ? 0 : 1;
  for (std::uint32_t i = start; i < n; ++i) cyc[i] = i + 1 == n ? start : i + 1;
  std::vector<Point> three(n);
  std::iota(three.begin(), three.end(), Point{0});
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  return {Permutation(three), Permutation(cyc)};
}

namespace {

using Vec = std::vector<FiniteField::Elem>;

// Projective points over a field: vectors whose first nonzero entry is 1.
class PointSet {
 public:
  PointSet(const FiniteField& f, std::uint32_t n) : f_(f), n_(n) {}

  void add(const Vec& v) {
    index_.emplace(encode(v), static_cast<Point>(points_.size()));
    points_.push_back(v);
  }
  const std::vector<Vec>& points() const { return points_; }
  Vec normalize(Vec v) const {
    for (auto x : v) {
      if (x == 0) continue;
      const auto s = f_.inv(x);
      for (auto& y : v) y = f_.mul(y, s);
      break;
    }
    return v;
  }
  Point index(const Vec& v) const { return index_.at(encode(normalize(v))); }

  // Permutation induced by v -> map(v).
  template <class Map>
  Permutation induced(Map map) const {
    std::vector<Point> img(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) img[i] = index(map(points_[i]));
    return Permutation(std::move(img));
  }

 private:
  std::uint64_t encode(const Vec& v) const {
    std::uint64_t code = 0;
    for (auto x : v) code = code * f_.order() + x;
    return code;
  }

  const FiniteField& f_;
  std::uint32_t n_;
  std::vector<Vec> points_;
  std::unordered_map<std::uint64_t, Point> index_;
};

// All normalized nonzero vectors of length n, in lexicographic order.
std::vector<Vec> normalized_vectors(const FiniteField& f, std::uint32_t n) {
  std::vector<Vec> out;
  for (std::uint32_t lead = 0; lead < n; ++lead) {
    const std::uint32_t free = n - lead - 1;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < free; ++i) count *= f.order();
    for (std::uint64_t c = 0; c < count; ++c) {
      Vec v(n, 0);
      v[lead] = 1;
      std::uint64_t r = c;
      for (std::uint32_t i = n; i-- > lead + 1;) {
        v[i] = static_cast<FiniteField::Elem>(r % f.order());
        r /= f.order();
      }
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

std::vector<Permutation> psl_generators(std::uint32_t n, std::uint32_t q) {
  if (n < 2) throw std::invalid_argument("psl_generators: n < 2");
  FiniteField f(q);
  PointSet pts(f, n);
  for (const auto& v : normalized_vectors(f, n)) pts.add(v);
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      FiniteField::Elem t = 1;
      for (std::uint32_t b = 0; b < f.degree(); ++b, t = f.mul(t, f.primitive())) {
        // Row vector times I + t E_ij: coordinate j gains t * v_i.
        gens.push_back(pts.induced([&](Vec v) {
          v[j] = f.add(v[j], f.mul(t, v[i]));
          return v;
        }));
      }
    }
  }
  return gens;
}

std::vector<Permutation> psu_generators(std::uint32_t n, std::uint32_t q) {
  if (n < 3) throw std::invalid_argument("psu_generators: n < 3");
  FiniteField f(q * q);
  const std::uint32_t k = f.degree() / 2;
  auto conj = [&](FiniteField::Elem a) { return f.frobenius(a, k); };
  auto form = [&](const Vec& x, const Vec& y) {
    FiniteField::Elem s = 0;
    for (std::uint32_t i = 0; i < n; ++i) s = f.add(s, f.mul(x[i], conj(y[i])));
    return s;
  };
  PointSet pts(f, n);
  for (const auto& v : normalized_vectors(f, n)) {
    if (form(v, v) == 0) pts.add(v);
  }
  // Nonzero a with a^q = -a.
  FiniteField::Elem a = 0;
  for (FiniteField::Elem c = 1; c < f.order() && a == 0; ++c) {
    if (conj(c) == f.neg(c)) a = c;
  }
  const BigInt target = psu_order(n, q);
  const std::size_t degree = pts.points().size();
  std::vector<Permutation> gens;
  StabilizerChain chain = build_chain(degree, gens);
  for (const auto& v : pts.points()) {
    auto t = pts.induced([&](Vec x) {
      const auto s = f.mul(a, form(x, v));
      for (std::uint32_t i = 0; i < n; ++i) x[i] = f.add(x[i], f.mul(s, v[i]));
      return x;
    });
    if (chain.contains(t)) continue;
    gens.push_back(t);
    chain = build_chain(degree, gens);
    if (chain.order() == target) return gens;
  }
  throw std::logic_error("psu_generators: transvections did not reach the expected order");
}

std::vector<Permutation> m12_generators() {
  return {parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 12), parse_cycles("(3,7,11,8)(4,10,5,6)", 12),
          parse_cycles("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12)};
}

std::vector<Permutation> m23_generators() {
  auto m24 = m24_generators();
  return {m24[0], m24[1]};
}

std::vector<Permutation> m24_generators() {
  return {parse_cycles("(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)", 24),
          parse_cycles("(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)", 24),
          parse_cycles("(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)", 24)};
}

std::vector<Permutation> two_generator_reduction(const StabilizerChain& chain, std::uint64_t seed, int attempts) {
  std::mt19937_64 rng(seed);
  const BigInt target = chain.order();
  for (int t = 0; t < attempts; ++t) {
    std::vector<Permutation> pair{chain.random_element(rng), chain.random_element(rng)};
    if (build_chain(chain.degree(), pair).order() == target) return pair;
  }
  return chain.generators();
}

}  // namespace qsym
