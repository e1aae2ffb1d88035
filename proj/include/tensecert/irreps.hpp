#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "tensecert/group.hpp"

namespace tensecert {

enum class IrrepType { Real, Complex, Quaternionic };

int type_field_dim(IrrepType t);
std::string type_name(IrrepType t);

/// A real irreducible orthogonal matrix representation. Matrices are indexed
/// by group element index. Complex- and quaternionic-type representations are
/// kept in their canonical real expressions (2x2 / 4x4 structured blocks), so
/// that downstream block cones can read complex/quaternionic entries off the
/// real matrices directly.
struct RealIrrep {
  std::string name;
  int degree = 0;
  IrrepType type = IrrepType::Real;
  bool trivial = false;
  std::vector<Eigen::MatrixXd> matrices;
};

/// A complete list of pairwise non-equivalent real irreducibles of one group,
/// trivial first, then the remaining real-type, then complex-type, then
/// quaternionic-type representations.
struct IrrepSet {
  FiniteGroup group;
  std::vector<RealIrrep> irreps;

  int count() const { return static_cast<int>(irreps.size()); }
  const RealIrrep& operator[](int i) const { return irreps[i]; }
};

/// Homomorphism + orthogonality validation (1e-12 entrywise).
void validate_irrep(const FiniteGroup& group, const RealIrrep& rho, double tol = 1e-12);

/// Dimension of {X : X rho(g) = rho(g) X for all g}, via SVD nullspace of the
/// stacked commutation system. Must be 1, 2 or 4 for an irreducible input.
int commutant_dimension(const FiniteGroup& group, const RealIrrep& rho);

/// Orthonormal basis of the commutant (columns reshape to degree x degree).
Eigen::MatrixXd commutant_basis(const FiniteGroup& group,
                                const std::vector<Eigen::MatrixXd>& matrices, int degree);

/// Cross intertwiner space dimension {X : X a(g) = b(g) X}; 0 certifies
/// non-equivalence of irreducibles.
int intertwiner_dimension(const FiniteGroup& group, const RealIrrep& a, const RealIrrep& b);

IrrepType classify_type(const FiniteGroup& group, const RealIrrep& rho);

/// Change of basis taking a complex- or quaternionic-type representation to
/// its canonical structured real form; identity on real-type input.
RealIrrep canonicalize_basis(const FiniteGroup& group, const RealIrrep& rho);

/// Number of canonical coordinate-basis elements for rho: degree^2 / dim F.
int coordinate_basis_size(const RealIrrep& rho);

/// The basis element itself (a degree x degree matrix).
Eigen::MatrixXd coordinate_basis_element(const RealIrrep& rho, int index);

/// Coordinate vector in R^Gamma: gamma -> <rho(gamma), B> / dim F.
Eigen::VectorXd coordinate_vector(const FiniteGroup& group, const RealIrrep& rho, int index);

struct OrthogonalityReport {
  bool ok = false;
  int vector_count = 0;
  double max_deviation = 0.0;  // worst |<u_i,u_j> - delta_ij|
};

/// Checks that the scaled coordinate vectors of a full irrep set form an
/// orthonormal basis of R^Gamma.
OrthogonalityReport verify_orthogonality_basis(const IrrepSet& irreps, double tol = 1e-10);

/// Degree identity sum over the set: sum of degree^2 / dim F (integers).
int degree_identity_sum(const IrrepSet& irreps);

/// Full validation of an irrep set: each member validated, canonical form for
/// complex/quaternionic types, pairwise non-equivalence, degree identity.
void validate_irrep_set(const IrrepSet& irreps);

struct AdaptedBasis {
  /// Orthogonal matrix whose columns are grouped (irrep, copy, coordinate);
  /// conjugation sends each rep(g) to the direct sum of identity-tensor irrep
  /// blocks in irrep-set order.
  Eigen::MatrixXd basis;
  std::vector<int> multiplicities;
  double residual = 0.0;  // worst-case defect of the defining identity
};

/// Decomposes an arbitrary orthogonal representation into the given
/// irreducibles: basis^T rep(g) basis = direct sum over rho of
/// I_{m_rho} x rho(g). Throws when the residual exceeds tol.
AdaptedBasis adapted_basis(const std::vector<Eigen::MatrixXd>& rep, const IrrepSet& irreps,
                           double tol = 1e-10);

/// The symmetry-adapted orthogonal basis Z for the right regular
/// representation: Z^T R(g) Z = direct sum of I_{d/dimF} x rho(g), trivial
/// block first, its column fixed to 1/sqrt(|Gamma|).
Eigen::MatrixXd symmetry_adapted_basis(const IrrepSet& irreps, double tol = 1e-10);

/// Multiplicity of each irrep in an orthogonal representation, via the
/// character inner product divided by the commutant dimension.
std::vector<int> multiplicities(const std::vector<Eigen::MatrixXd>& rep, const IrrepSet& irreps);

/// Built-in closed-form irreps for catalogue groups.
IrrepSet catalogue_irreps(const FiniteGroup& group);

}  // namespace tensecert
