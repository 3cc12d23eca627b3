#ifndef HILBEMB_STABILIZE_HPP
#define HILBEMB_STABILIZE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hilbemb/distraction.hpp"

namespace hilbemb {

/// Monomial z-stability on S = B/(aB) or B/(aB, z^t): for every f z^i in I
/// with i >= 1 and every other variable x, x f z^{i-1} is in I or zero in S.
/// Returns the first degree where this fails.
std::optional<int> z_stability_violation(const MonomialIdeal& ideal, std::size_t z);

/// Per degree, partial sums over z-exponents of the number of monomials of I.
std::vector<std::vector<std::size_t>> level_sums(const MonomialIdeal& ideal, std::size_t z);

struct StabilizationRun {
    MonomialIdeal ideal;
    std::size_t rounds = 0;
};

/// z-row of the matrix used by one stabilization step: columns 1..t are
/// x_l - zeta^{k-1} z for truncated rings (t from the ring), and column 1 is
/// x_l + z with z afterwards when z is free.
DistractionMatrix stabilization_matrix(const QuotientRing& ring, std::size_t z, std::size_t l,
                                       const FieldConfig& field);

/// in_w(D_L(I)) with w(x) = 1, w(z) = 0, as an ideal of the same ring.
MonomialIdeal distract_and_degenerate(const MonomialIdeal& ideal, const DistractionMatrix& l, std::size_t z,
                                      const FieldConfig& field);

/// Iterates the composite of the single-variable steps (last variable
/// first) until a fixpoint. The ring must be B/(aB) with a free of z. The
/// level sums are checked to be non-decreasing after every round; the
/// result is checked to be z-stable with the input's series. More than
/// |S_{<=cap}|^2 rounds throws BudgetExceeded.
StabilizationRun stabilize(const MonomialIdeal& ideal, std::size_t z, const FieldConfig& field = FieldConfig::rationals());

/// Same over B/(aB, z^t) with x^t in a for every x. The field defaults to
/// the smallest GF(p) containing a primitive t-th root of unity.
StabilizationRun stabilize_truncated(const MonomialIdeal& ideal, std::size_t z,
                                     std::optional<FieldConfig> field = std::nullopt);

/// f y^i -> f y^i for i < d, else f y^{i-1} z.
Monomial polarize_monomial(const Monomial& m, std::size_t y, int d);

struct Polarization {
    RingPtr ring;  ///< B/b with z appended as the last variable
    std::size_t y;
    std::size_t z;
    int d;
};

/// Generator-level polarization of the ring's defining ideal. Checks that
/// the image of every monomial of a up to the cap lies in b and that
/// H_{A/a}(k) = H_{B/b}(k) - H_{B/b}(k-1) up to the cap.
Polarization polarize(const QuotientRing& ring, std::size_t y, int d, const std::string& z_name = "z");

} // namespace hilbemb

#endif
