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

#ifndef QSYM_GROUPS_CLASSICAL_HPP_
#define QSYM_GROUPS_CLASSICAL_HPP_

#include <cstdint>
#include <vector>

#include "qsym/perm/permutation.hpp"
#include "qsym/perm/stabilizer_chain.hpp"

namespace qsym {

BigInt gl_order(std::uint32_t n, const BigInt& q);
// |GU_n(q)| = q^{n(n-1)/2} prod_{k=1..n} (q^k - (-1)^k).
BigInt gu_order(std::uint32_t n, const BigInt& q);
BigInt psl_order(std::uint32_t n, std::uint32_t q);
BigInt psu_order(std::uint32_t n, std::uint32_t q);

// A_n on n points: <(1,2,3), (1,...,n)> for odd n, <(1,2,3), (2,...,n)> for
// even n. Requires n >= 3.
std::vector<Permutation> alternating_generators(std::uint32_t n);

// PSL_n(q) acting on the (q^n-1)/(q-1) points of projective space, generated
// by elementary transvections.
std::vector<Permutation> psl_generators(std::uint32_t n, std::uint32_t q);

// PSU_n(q) acting on the isotropic points of the Hermitian form
// sum x_i y_i^q over GF(q^2), generated by unitary transvections
// x -> x + a h(x,v) v. Transvections are added until the group order reaches
// psu_order(n, q).
std::vector<Permutation> psu_generators(std::uint32_t n, std::uint32_t q);

// M12 on 12 points, M23 and M24 on 24 points (M23 fixes point 24).
std::vector<Permutation> m12_generators();
std::vector<Permutation> m23_generators();
std::vector<Permutation> m24_generators();

// Two random elements of the group that generate it, found by a seeded
// search; the input generators are returned unchanged when none is found
// within `attempts` tries.
std::vector<Permutation> two_generator_reduction(const StabilizerChain& chain, std::uint64_t seed,
                                                 int attempts = 64);

}  // namespace qsym

#endif  // QSYM_GROUPS_CLASSICAL_HPP_
