// riscade - cascaded channel estimation for RIS-aided mmWave uplinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "riscade/common.hpp"

namespace riscade {

cx_mat pseudo_inverse(const cx_mat& a, double rel_tol, uword* rank_out) {
  if (a.n_elem == 0) {
    throw InvalidDimension("pseudo_inverse: empty matrix");
  }

  cx_mat u, v;
  arma::vec s;
  if (!arma::svd_econ(u, s, v, a)) {
    throw NumericalRankError("pseudo_inverse: SVD failed to converge");
  }

  const double cutoff = s.n_elem > 0 ? rel_tol * s.max() : 0.0;
  uword rank = 0;
  arma::vec s_inv(s.n_elem, arma::fill::zeros);
  for (uword i = 0; i < s.n_elem; ++i) {
    if (s(i) > cutoff && s(i) > 0.0) {
      s_inv(i) = 1.0 / s(i);
      ++rank;
    }
  }
  if (rank_out != nullptr) {
    *rank_out = rank;
  }
  return v * arma::diagmat(s_inv) * u.t();
}

}  // namespace riscade
