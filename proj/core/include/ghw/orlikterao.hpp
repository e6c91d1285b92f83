// Copyright 2026 The Authors.
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


#ifndef GHW_ORLIKTERAO_HPP_
#define GHW_ORLIKTERAO_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "ghw/codes.hpp"
#include "ghw/exactfield.hpp"
#include "ghw/groebner.hpp"
#include "ghw/matroid.hpp"
#include "ghw/polyring.hpp"

namespace ghw {

// sum_j a_j * prod_{l != j} y_{i_l} over the (increasing) support.
Polynomial del_operator(const PolyRing& ring, std::span<const std::size_t> support,
                        std::span<const Scalar> dependency);

struct OTGenerator {
  Circuit circuit;
  Polynomial polynomial;
};

// Orlik-Terao ideal of the arrangement dual to a code: one generator per
// circuit of the parity-check columns.
struct OTPresentation {
  PrimeField field;
  std::size_t n;
  PolyRing ring;
  std::vector<OTGenerator> generators;

  std::vector<Polynomial> polynomials() const;
  std::vector<Circuit> circuits() const;
};

OTPresentation ot_ideal(const LinearCode& code);
OTPresentation ot_ideal_from_parity_check(const DenseMatrix& parity);

// Smallest generator degree.
std::size_t alpha(const OTPresentation& pres);

struct ProudfootSpeyerResult {
  bool holds = false;                    // circuit leading terms generate in(I)
  bool matches_broken_circuits = false;  // in(I) = broken-circuit ideal
  std::vector<Monomial> initial;         // minimal generators of in(I)
  GroebnerBasis basis;
};

ProudfootSpeyerResult check_proudfoot_speyer(const OTPresentation& pres, const TermOrder& order);

}  // namespace ghw

#endif  // GHW_ORLIKTERAO_HPP_
