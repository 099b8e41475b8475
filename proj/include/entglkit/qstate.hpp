// Copyright 2026 The entglkit Authors
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


#ifndef ENTGLKIT_QSTATE_HPP
#define ENTGLKIT_QSTATE_HPP

#include <vector>

#include "entglkit/common.hpp"

namespace entglkit {

// Density matrix together with its tensor-factor dimensions. Subsystem 0 is
// the leftmost factor of the Kronecker product.
class QuantumState {
   public:
    // Validates Hermiticity, unit trace and positivity. Inputs within the
    // tolerances are symmetrized and renormalized; anything else throws
    // InvariantViolation.
    QuantumState(const ComplexMatrix &matrix, std::vector<int> dims);

    const ComplexMatrix &matrix() const { return matrix_; }
    const std::vector<int> &dims() const { return dims_; }
    int dim() const { return static_cast<int>(matrix_.rows()); }
    int parties() const { return static_cast<int>(dims_.size()); }
    bool bipartite() const { return dims_.size() == 2; }

   private:
    ComplexMatrix matrix_;
    std::vector<int> dims_;
};

class PureStateVector {
   public:
    PureStateVector(const ComplexVector &amplitudes, int d_a, int d_b);

    const ComplexVector &amplitudes() const { return amplitudes_; }
    int d_a() const { return d_a_; }
    int d_b() const { return d_b_; }
    // Coefficient matrix Psi with psi = sum Psi(i, j) |i>|j>.
    ComplexMatrix coefficient_matrix() const;
    ComplexMatrix projector() const;

   private:
    ComplexVector amplitudes_;
    int d_a_;
    int d_b_;
};

struct SchmidtData {
    RealVector coefficients;   // descending, sum of squares is one
    ComplexMatrix left_basis;  // columns
    ComplexMatrix right_basis;
    int rank = 0;
};

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector kron(const ComplexVector &a, const ComplexVector &b);

// Partial trace over every subsystem not listed in keep.
QuantumState partial_trace(const QuantumState &s, const std::vector<int> &keep);
ComplexMatrix partial_trace(const ComplexMatrix &m, const std::vector<int> &dims,
                            const std::vector<int> &keep);

ComplexMatrix partial_transpose(const QuantumState &s, int subsystem);
ComplexMatrix partial_transpose(const ComplexMatrix &m, const std::vector<int> &dims,
                                int subsystem);

// Reorders tensor factors: factor k of the result is factor perm[k] of the input.
ComplexMatrix permute_subsystems(const ComplexMatrix &m, const std::vector<int> &dims,
                                 const std::vector<int> &perm);

// R(rho)[(i,j),(k,l)] = rho[(i,k),(j,l)], shape d_a^2 x d_b^2.
ComplexMatrix realign(const QuantumState &s);
ComplexMatrix realign(const ComplexMatrix &m, int d_a, int d_b);

double trace_norm(const ComplexMatrix &a);
SchmidtData schmidt_decompose(const PureStateVector &psi);
PureStateVector max_entangled(int d);

double min_eigenvalue(const ComplexMatrix &h);
RealVector eigenvalues(const ComplexMatrix &h);
bool is_hermitian(const ComplexMatrix &h, double tol = tol::herm);
int numerical_rank(const ComplexMatrix &h, double tol = tol::rank);

bool is_ppt(const QuantumState &s, double tol = tol::psd);
double max_entangled_fidelity(const QuantumState &s);

// Swap operator F on C^d (x) C^d and the maximally entangled projector.
ComplexMatrix swap_operator(int d);
ComplexMatrix max_entangled_projector(int d);
ComplexMatrix projector(const ComplexVector &v);
ComplexVector basis_vector(int d, int i);

}  // namespace entglkit

#endif
