#pragma once

// Ideals and log-ideals of quasiadjunction, their faces in the unit cube,
// and the multiplier-ideal / log-canonical-threshold dictionary.
//
// Coordinates: a quasi-array (j|m) is placed at x_i = (j_i+1)/m_i. A germ
// phi lies in the log-ideal iff for every exceptional E
//     sum_i a_i(E) (1 - x_i) <= e_E(phi) + c_E + 1,
// and in the ideal iff all these inequalities are strict. Multiplier ideals
// use gamma_i = 1 - x_i.

#include "innc/geometry.hpp"
#include "innc/resolution.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace innc {

struct MembershipVerdict {
    bool in_ideal = false;
    bool in_log_ideal = false;
    /// Largest fold of an incidence record made of tight components; 0
    /// unless the germ is in the log-ideal but not in the ideal.
    std::size_t weight = 0;
    std::vector<std::string> tight_exceptional;
};

/// weight l -> number of basis germs of weight exactly l.
using QuotientDims = std::map<std::size_t, std::size_t>;

struct FaceOfQuasiadjunction {
    std::vector<AffineForm> tight_forms;
    std::vector<std::string> tight_exceptional;
    HalfspaceSystem ambient_system;
    int dim = 0;
    QuotientDims labels;
    std::map<std::size_t, std::vector<std::string>> witnesses;
    /// Relative-interior point; labels and witnesses are evaluated here.
    CubePoint sample;
    /// Germ whose region produced the face first (others are merged in).
    std::string source_germ;
};

/// e_E(phi) + c_E + 1.
Rational threshold(const ExceptionalComponent &E, const GermBasisElement &phi);

/// x -> sum_i a_i - sum_i a_i x_i - threshold(E, phi); nonpositive exactly
/// where the log condition for E holds.
AffineForm constraint_form(const ExceptionalComponent &E, const GermBasisElement &phi);

/// All constraint forms of phi, one per exceptional component (data order).
HalfspaceSystem germ_region(const ResolutionData &data, const GermBasisElement &phi);

MembershipVerdict membership_at(const ResolutionData &data, const GermBasisElement &phi,
                                const CubePoint &x);
MembershipVerdict membership(const ResolutionData &data, const GermBasisElement &phi,
                             const QuasiArray &q);

QuotientDims quotient_dims(const ResolutionData &data, const CubePoint &p);
std::map<std::size_t, std::vector<std::string>> quotient_witnesses(const ResolutionData &data,
                                                                   const CubePoint &p);

/// Faces of the polytopes of quasiadjunction, merged by affine span and
/// sorted by their canonical span key.
std::vector<FaceOfQuasiadjunction> faces_of_quasiadjunction(const ResolutionData &data);

/// p lies in the ambient region and on every tight hyperplane.
bool face_contains(const FaceOfQuasiadjunction &face, const CubePoint &p);

/// For all E: sum_i a_i(E) gamma_i < e_E(phi) + c_E + 1.
bool multiplier_ideal_membership(const ResolutionData &data, const GermBasisElement &phi,
                                 const std::vector<Rational> &gamma);

/// Largest-dimensional face of the unit germ's region: its points are the
/// log-canonical thresholds in x = 1 - gamma coordinates. Throws DomainError
/// when the region has no face inside the cube.
FaceOfQuasiadjunction lct_face(const ResolutionData &data);

/// Log-canonical threshold of sum_i w_i D_i:
///   min( 1 / max_i w_i , min_E (c_E + 1) / sum_i a_i(E) w_i ).
/// `w` must be nonnegative and nonzero.
Rational log_canonical_threshold(const ResolutionData &data, const std::vector<Rational> &w);

} // namespace innc
