#pragma once

// Homology ranks of abelian covers of the link complement, branched covers
// of the sphere, and the Milnor fiber, assembled from f-values.

#include "innc/charvariety.hpp"
#include "innc/laurent.hpp"
#include "innc/resolution.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace innc {

enum class FKind { principal_lower_bound, exact_oracle };

/// "principal lower bound" or "exact (oracle)".
std::string to_string(FKind kind);

/// f(chi) for one germ. `f` must be safe to call concurrently.
struct FSource {
    std::function<std::size_t(const CharacterPoint &)> f;
    FKind kind = FKind::principal_lower_bound;
};

FSource principal_source(std::vector<PrincipalComponent> comps);
/// Koszul oracle for r generic hyperplanes in C^{n+1}.
FSource oracle_source(std::size_t r, long n);
/// The oracle for builtin arrangements, principal components otherwise.
FSource default_source(const ResolutionData &data, std::vector<PrincipalComponent> comps);

enum class CoverMode { unbranched, branched, milnor };
std::string to_string(CoverMode mode);

using ComponentSet = std::vector<std::size_t>; ///< sorted component indices

struct BettiTable {
    std::vector<std::uint64_t> ranks; ///< degrees 0..n
    std::size_t r = 0;
    long n = 0;
    std::vector<long> m; ///< branching orders; {N} for the Milnor fiber
    CoverMode mode = CoverMode::unbranched;
    FKind f_kind = FKind::principal_lower_bound;
    /// Number of characters summed over (audit: prod m_i, or N - 1).
    std::uint64_t characters = 0;
    /// Top-degree sums grouped by the set of coordinates where the
    /// character is nontrivial.
    std::map<ComponentSet, std::uint64_t> buckets;
    /// Contribution of the trivial character to ranks[n]; its f-value is a
    /// principal-component lower bound unless the source is the oracle.
    std::uint64_t trivial_summand = 0;
    bool trivial_character_unresolved = false;
};

struct CyclotomicFactor {
    long order = 1;              ///< the factor is Phi_order(t)
    std::size_t multiplicity = 0;
};

struct CharPoly {
    std::vector<CyclotomicFactor> factors; ///< increasing order, multiplicity >= 1
    /// The multiplicity of t - 1 is not determined by f-values.
    bool unresolved_at_1 = true;

    /// prod Phi_q(t)^mult as a one-variable polynomial.
    LaurentPolynomial polynomial() const;
};

/// Characters enumerated in torsion_characters order are capped by `cap`.
BettiTable betti_unbranched(std::size_t r, long n, const FSource &source,
                            const std::vector<long> &m,
                            unsigned long long cap = TorsionCharacters::default_cap);

/// f on the sub-union indexed by a nonempty ComponentSet.
using SubunionSource = std::function<FSource(const ComponentSet &)>;

/// Sub-unions derived with restrict_to; requires a builtin family.
SubunionSource builtin_subunions(const ResolutionData &data);
/// Sub-unions from user-supplied component lists; a missing set raises
/// InputError when it is needed.
SubunionSource supplied_subunions(std::map<ComponentSet, std::vector<PrincipalComponent>> lists);

BettiTable betti_branched(std::size_t r, long n, const SubunionSource &subunions,
                          const std::vector<long> &m,
                          unsigned long long cap = TorsionCharacters::default_cap);

struct MilnorResult {
    BettiTable table;
    CharPoly charpoly;
    /// m_omega for omega = e(j/N), j = 1..N-1.
    std::vector<std::size_t> multiplicities;
};

/// Multiplicities at the diagonal characters (omega, ..., omega), omega^N = 1,
/// omega != 1. The factor of an orbit of primitive q-th roots takes the
/// largest value found in the orbit. With an exact source the values must
/// agree across the orbit; InconsistencyError otherwise.
MilnorResult milnor_fiber(std::size_t r, long n, const FSource &source, long order);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

} // namespace innc
