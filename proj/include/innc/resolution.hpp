#pragma once

// Combinatorics of an embedded resolution of a germ X = D_1 u ... u D_r in
// C^{n+1}: for each exceptional component E the orders a_i(E) of the pulled
// back equations f_i, the order c(E) of the pulled back volume form, the
// incidence structure of the exceptional divisor, and a finite germ basis
// with valuations e_E(phi).

#include "innc/geometry.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace innc {

struct ExceptionalComponent {
    std::string id;
    std::vector<long> a; ///< a[i] = ord_E of the pullback of f_i
    long c = 0;          ///< ord_E of the pullback of dx_1 ^ ... ^ dx_{n+1}

    friend bool operator==(const ExceptionalComponent &, const ExceptionalComponent &) = default;
};

struct GermBasisElement {
    std::string label;
    std::map<std::string, long> e; ///< exceptional id -> ord_E of the pullback
    long degree = 0;

    bool is_unit() const;
    long valuation(const std::string &exceptional_id) const;

    friend bool operator==(const GermBasisElement &, const GermBasisElement &) = default;
};

/// A set of exceptional components with a common point; fold = |members|.
struct IncidenceRecord {
    std::vector<std::string> members; ///< sorted, unique

    std::size_t fold() const noexcept { return members.size(); }

    friend bool operator==(const IncidenceRecord &, const IncidenceRecord &) = default;
};

/// Cone over smooth hypersurfaces of the given degrees meeting with normal
/// crossings; all degrees 1 is the generic hyperplane arrangement.
struct ConeFamily {
    std::vector<long> degrees;
    long bound = 0; ///< germ basis degree bound

    bool is_arrangement() const;

    friend bool operator==(const ConeFamily &, const ConeFamily &) = default;
};

struct ResolutionData {
    std::size_t r = 0;
    long n = 0;
    std::vector<std::string> component_names;
    std::vector<ExceptionalComponent> exceptional;
    std::vector<IncidenceRecord> incidence;
    std::vector<GermBasisElement> germs;
    /// Set by the builtin generators; documents loaded from text carry none.
    std::optional<ConeFamily> family;

    const ExceptionalComponent &exceptional_by_id(const std::string &id) const;
    const GermBasisElement &germ_by_label(const std::string &label) const;
    const GermBasisElement &unit_germ() const;

    friend bool operator==(const ResolutionData &, const ResolutionData &) = default;
};

/// Twist/branching array (j_1..j_r | m_1..m_r) with 0 <= j_i < m_i.
class QuasiArray {
  public:
    /// Throws InputError on length mismatch or bound violations.
    QuasiArray(std::vector<long> j, std::vector<long> m);

    std::size_t dim() const noexcept { return j_.size(); }
    const std::vector<long> &j() const noexcept { return j_; }
    const std::vector<long> &m() const noexcept { return m_; }

    /// ((j_1+1)/m_1, ..., (j_r+1)/m_r).
    CubePoint cube_point() const;

  private:
    std::vector<long> j_;
    std::vector<long> m_;
};

/// Enforces the data-model invariants in place: adds missing singleton
/// incidence records and the unit germ, sorts incidence. Throws InputError.
void validate(ResolutionData &data);

/// Parses and validates a JSON resolution document. Throws SchemaError
/// (with the offending path) or InputError.
ResolutionData load_resolution(std::string_view document);

/// Canonical JSON text of the data (2-space indent, trailing newline).
std::string serialize_resolution(const ResolutionData &data);

/// Single blow-up resolution of the cone over smooth normal-crossing
/// hypersurfaces of the given degrees: one exceptional component E with
/// a = degrees, c = n, and all monomials of degree <= bound in n+1
/// variables as germ basis (e_E = total degree).
ResolutionData cone_over(const std::vector<long> &degrees, long n, long bound);

/// r generic hyperplanes through the origin of C^{n+1}.
ResolutionData generic_arrangement(std::size_t r, long n, long bound);

/// Data of the germ with component i removed. Exact for builtin cone
/// families; other data requires `user_asserted`.
ResolutionData delete_component(const ResolutionData &data, std::size_t i,
                                bool user_asserted = false);

/// Data of the sub-union indexed by `keep` (sorted component indices).
/// Same restrictions as delete_component.
ResolutionData restrict_to(const ResolutionData &data, const std::vector<std::size_t> &keep,
                           bool user_asserted = false);

} // namespace innc
