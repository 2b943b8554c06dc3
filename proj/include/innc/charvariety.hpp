#pragma once

// Principal components of characteristic varieties.
//
// A character of Z^r is written by its phases: t_i = exp(2 pi i phase_i).
// A translated subtorus is the solution set of equations
//     prod_i t_i^{v_i} = exp(2 pi i phase),
// stored in a canonical Hermite normal form of the exponent lattice so that
// equal sets of equations compare equal.

#include "innc/laurent.hpp"
#include "innc/lattice.hpp"
#include "innc/quasiadjunction.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace innc {

class CharacterPoint {
  public:
    /// Phases are reduced modulo 1.
    explicit CharacterPoint(std::vector<Rational> phases);

    std::size_t dim() const noexcept { return phases_.size(); }
    const std::vector<Rational> &phases() const noexcept { return phases_; }
    const Rational &operator[](std::size_t i) const { return phases_[i]; }
    /// lcm of the phase denominators.
    const Integer &order() const noexcept { return order_; }
    bool is_trivial() const noexcept { return order_ == 1; }

    /// Complex conjugate character (phases negated).
    CharacterPoint conjugate() const;

    friend bool operator==(const CharacterPoint &, const CharacterPoint &) = default;

  private:
    std::vector<Rational> phases_;
    Integer order_;
};

struct TorusEquation {
    std::vector<Integer> v;
    Rational phase;

    friend bool operator==(const TorusEquation &, const TorusEquation &) = default;
};

class TranslatedSubtorus {
  public:
    /// Throws DimensionError on length mismatch and DomainError for a zero
    /// exponent vector.
    TranslatedSubtorus(std::size_t r, const std::vector<TorusEquation> &equations);

    std::size_t dim() const noexcept { return r_; }
    /// Canonical equations (HNF rows, phases in [0,1)).
    const std::vector<TorusEquation> &equations() const noexcept { return equations_; }
    /// No character satisfies the equations.
    bool is_empty() const noexcept { return empty_; }
    /// Rank of the exponent lattice.
    std::size_t codimension() const noexcept { return equations_.size(); }

    bool contains(const CharacterPoint &chi) const;
    /// Exact set containment via lattice membership of the other system's
    /// exponent vectors.
    bool subset_of(const TranslatedSubtorus &other) const;
    /// Contained in { t_i = 1 }.
    bool in_coordinate_slice(std::size_t i) const;
    /// { t' : (t' with 1 inserted at slot i) in this }; requires
    /// in_coordinate_slice(i).
    TranslatedSubtorus drop_coordinate(std::size_t i) const;
    /// Image under t' -> (t' with 1 inserted at slot i).
    TranslatedSubtorus extend_trivially(std::size_t i) const;

    friend bool operator==(const TranslatedSubtorus &a, const TranslatedSubtorus &b) {
        return a.r_ == b.r_ && a.empty_ == b.empty_ && a.equations_ == b.equations_;
    }

  private:
    HermiteReduction reduction() const;

    std::size_t r_;
    std::vector<TorusEquation> equations_;
    bool empty_ = false;
};

struct PrincipalComponent {
    TranslatedSubtorus torus;
    std::size_t k = 1;
    std::size_t l = 1;
    std::size_t source_face = 0; ///< index into the face list it came from
};

/// Zariski closure of exp(2 pi i face): the translated subtorus whose
/// exponent lattice is the saturation of the face's affine-hull normals and
/// whose phases are read off at the face's sample point.
PrincipalComponent exp_face(const FaceOfQuasiadjunction &face, std::size_t k, std::size_t l,
                            std::size_t source_face = 0);

/// One component per (face, weight label).
std::vector<PrincipalComponent> principal_components(
    std::span<const FaceOfQuasiadjunction> faces);

bool contains_character(const PrincipalComponent &c, const CharacterPoint &chi);

/// max k over components containing chi (0 if none): the principal-component
/// lower bound for the f-function.
std::size_t principal_f(const CharacterPoint &chi, std::span<const PrincipalComponent> comps);

/// All characters with phases_i in {0, 1/m_i, ..., (m_i-1)/m_i}, first
/// coordinate most significant.
class TorsionCharacters {
  public:
    static constexpr unsigned long long default_cap = 1ull << 22;

    /// Throws InputError for m_i < 1 or when prod m_i exceeds `cap`.
    explicit TorsionCharacters(std::vector<long> m, unsigned long long cap = default_cap);

    std::size_t size() const noexcept { return size_; }
    const std::vector<long> &m() const noexcept { return m_; }
    CharacterPoint operator[](std::size_t index) const;

    class iterator {
      public:
        using value_type = CharacterPoint;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(const TorsionCharacters *owner, std::size_t i) : owner_(owner), i_(i) {}
        CharacterPoint operator*() const { return (*owner_)[i_]; }
        iterator &operator++() {
            ++i_;
            return *this;
        }
        iterator operator++(int) {
            auto tmp = *this;
            ++i_;
            return tmp;
        }
        bool operator==(const iterator &o) const { return i_ == o.i_; }

      private:
        const TorsionCharacters *owner_ = nullptr;
        std::size_t i_ = 0;
    };
    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size_}; }

  private:
    std::vector<long> m_;
    std::size_t size_ = 1;
};

TorsionCharacters torsion_characters(const std::vector<long> &m,
                                     unsigned long long cap = TorsionCharacters::default_cap);

struct EssentialPartition {
    std::vector<std::size_t> essential;    ///< indices into the component list
    std::vector<std::size_t> nonessential;
};

/// A component is nonessential iff its torus lies in { t_i = 1 } for some i
/// and, with coordinate i dropped, inside a component of sub[i] (the
/// components of the germ with D_i deleted). Throws DomainError if such a
/// slice candidate has no entry in `sub`.
EssentialPartition classify_essential(
    std::span<const PrincipalComponent> comps,
    const std::map<std::size_t, std::vector<PrincipalComponent>> &sub);

struct PolynomialInvariant {
    LaurentPolynomial polynomial;
    /// Indices of components of codimension >= 2 left out of the product.
    std::vector<std::size_t> excluded;
};

/// Product over Galois orbits of codimension-one components of
/// Phi_q(t^v)^k, where q is the order of the phase and k the largest label
/// among components with that torus orbit; normalised. Throws DomainError
/// on a component of codimension >= 2 unless `exclude_higher_codim`.
PolynomialInvariant polynomial_invariant(std::span<const PrincipalComponent> comps,
                                         bool exclude_higher_codim = false);

} // namespace innc
