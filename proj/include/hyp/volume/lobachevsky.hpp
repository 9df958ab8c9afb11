#pragma once

namespace hyp::volume {

// Lambda(theta) = -int_0^theta log|2 sin u| du, odd and pi-periodic.
double lobachevsky(double theta);

// Volume of the ideal tetrahedron with dihedral angles alpha, beta, gamma.
// Throws DomainError unless all are positive and sum to pi (within 1e-9).
double ideal_tet_volume(double alpha, double beta, double gamma);

// Volume of the regular ideal tetrahedron, 3 Lambda(pi/3).
double regular_ideal_volume();

} // namespace hyp::volume
