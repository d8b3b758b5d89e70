#pragma once

namespace cirldp {

/// log I_nu(z) for nu >= 0, z > 0, evaluated without overflow.
/// Power series below z = 20 (1 + nu), Hankel's large-argument expansion
/// above. Throws DomainError for z <= 0 or nu < 0.
double log_bessel_i(double nu, double z);

}  // namespace cirldp
