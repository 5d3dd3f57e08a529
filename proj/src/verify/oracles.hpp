#pragma once

// Reference computations that deliberately avoid the library's own code
// paths, used as the second side of dual-route checks.

#include <vector>

#include "bihilbert/module.hpp"

namespace bihilbert::verify::oracle {

/// sum_l (w1_l e1 + w2_l e2) psi_l^dag3 phi_l, in Cartesian arithmetic only.
inline Bicomplexd cartesian_scalar_product(const ScalarProductSpec<double>& spec, const Ketd& psi,
                                           const Ketd& phi) {
  Bicomplexd acc;
  for (Eigen::Index l = 0; l < psi.size(); ++l) {
    const Bicomplexd weight = spec.w1()[l] * Bicomplexd::e1() + spec.w2()[l] * Bicomplexd::e2();
    acc += weight * conj(psi[l], Conjugation::dag3) * phi[l];
  }
  return acc;
}

/// (psi_k, phi_k)_k from explicit idempotent coordinates z1 -/+ z2 i1.
inline std::complex<double> component_product(const ScalarProductSpec<double>& spec, const Ketd& psi,
                                              const Ketd& phi, Idempotent k) {
  const std::complex<double> i(0, 1);
  const double sign = k == Idempotent::e1 ? -1.0 : 1.0;
  std::complex<double> acc;
  for (Eigen::Index l = 0; l < psi.size(); ++l) {
    const auto x = psi[l].z1() + sign * i * psi[l].z2();
    const auto y = phi[l].z1() + sign * i * phi[l].z2();
    acc += spec.weights(k)[l] * std::conj(x) * y;
  }
  return acc;
}

/// Classical Gram-Schmidt (two passes) run separately on the V1 and V2
/// coordinate vectors, then recombined through e1 and e2.
inline std::vector<Ketd> componentwise_gram_schmidt(const ScalarProductSpec<double>& spec,
                                                    const std::vector<Ketd>& inputs) {
  using Vec = Eigen::VectorXcd;
  const Eigen::Index n = spec.dim();
  const std::complex<double> i(0, 1);

  auto coords = [&](const Ketd& psi, double sign) {
    Vec v(n);
    for (Eigen::Index l = 0; l < n; ++l) v[l] = psi[l].z1() + sign * i * psi[l].z2();
    return v;
  };

  std::vector<std::vector<Vec>> q(2);
  for (int c = 0; c < 2; ++c) {
    const Eigen::VectorXd& w = c == 0 ? spec.w1() : spec.w2();
    const Eigen::VectorXcd wc = w.cast<std::complex<double>>();
    for (const auto& in : inputs) {
      Vec v = coords(in, c == 0 ? -1.0 : 1.0);
      for (int pass = 0; pass < 2; ++pass) {
        std::vector<std::complex<double>> h(q[c].size());
        for (std::size_t a = 0; a < q[c].size(); ++a) h[a] = wc.cwiseProduct(q[c][a]).dot(v);
        for (std::size_t a = 0; a < q[c].size(); ++a) v -= h[a] * q[c][a];
      }
      const double nrm = std::sqrt(wc.cwiseProduct(v).dot(v).real());
      q[c].push_back(v / nrm);
    }
  }

  std::vector<Ketd> out;
  for (std::size_t a = 0; a < inputs.size(); ++a) {
    Ketd m(n);
    for (Eigen::Index l = 0; l < n; ++l) {
      const auto& h1 = q[0][a][l];
      const auto& h2 = q[1][a][l];
      m[l] = Bicomplexd((h1 + h2) / 2.0, i * (h1 - h2) / 2.0);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace bihilbert::verify::oracle
